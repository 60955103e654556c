#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "sgtree/sgtree.hpp"

using namespace sgtree;

namespace {

NodeState pseudo_node(int m, int u) {
  std::vector<int> gaps;
  for (int x = 1; x < m; ++x) gaps.push_back(x);
  for (int x = m + 1; x < m + u; ++x) gaps.push_back(x);
  return from_gaps(GapSet(gaps));
}

std::uint64_t count_genus_of(int gamma, int threads = 1) {
  return count_genus({gamma, threads, ExploreConfig::Mode::single_genus});
}

CountTable count_all_of(int gamma, int threads = 1) {
  return count_all({gamma, threads, ExploreConfig::Mode::all_genera});
}

}  // namespace

TEST_CASE("count_genus small values") {
  CHECK(count_genus_of(3) == 4);
  CHECK(count_genus_of(7) == 39);
}

TEST_CASE("count_all small tables") {
  CountTable t3 = count_all_of(3);
  CHECK(t3.at(1) == 1);
  CHECK(t3.at(2) == 2);
  CHECK(t3.at(3) == 4);

  CountTable t8 = count_all_of(8);
  for (int g = 1; g <= 8; ++g) CHECK(t8.at(g) == fixtures::kCounts[g]);

  CountTable t2a = count_all_of(2, 1);
  CountTable t2b = count_all_of(2, 8);
  CHECK(t2a.n == t2b.n);
}

TEST_CASE("pseudo_grandchildren formula values") {
  CHECK(pseudo_grandchildren(5, 2) == 8);
  CHECK(pseudo_grandchildren(5, 4) == 9);
  CHECK(pseudo_grandchildren(3, 2) == 2);
  CHECK_THROWS_AS(pseudo_grandchildren(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_grandchildren(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(pseudo_grandchildren(5, 6), std::invalid_argument);
}

TEST_CASE("pseudo_grandchildren equals the two-level expansion count") {
  for (int m = 3; m <= 15; ++m) {
    for (int u = 2; u <= m; ++u) {
      NodeState root = pseudo_node(m, u);
      REQUIRE(classify(root).pseudo_ordinary);
      std::uint64_t grandchildren = 0;
      for (int s = root.c - root.m; s < root.c; ++s) {
        if (!root.chain.test(s)) continue;
        grandchildren += static_cast<std::uint64_t>(expand(root, s).r);
      }
      CHECK(grandchildren == pseudo_grandchildren(m, u));
    }
  }
}

TEST_CASE("boundary_subtree_counts values") {
  CHECK(boundary_subtree_counts(6) == std::pair<std::uint64_t, std::uint64_t>{5, 7});
  CHECK(boundary_subtree_counts(10) == std::pair<std::uint64_t, std::uint64_t>{9, 29});
  CHECK_THROWS_AS(boundary_subtree_counts(4), std::invalid_argument);
}

TEST_CASE("boundary formulas match direct exploration") {
  for (int gamma = 5; gamma <= 20; ++gamma) {
    std::uint64_t in_t_gamma = 0, in_t_prev = 0;
    Handler h = Handler::with_callback([&](const NodeView& view, int g) {
      if (g != gamma) return;
      if (view.m == gamma) ++in_t_gamma;
      if (view.m == gamma - 1) ++in_t_prev;
    });
    explore(gamma, h);
    auto [first, second] = boundary_subtree_counts(gamma);
    CHECK(in_t_gamma == first);
    CHECK(in_t_prev == second);
  }
}

TEST_CASE("cutoff consistency: count_genus = count_all = frozen oracle counts") {
  for (int gamma = 4; gamma <= fixtures::kCountsMax; ++gamma) {
    const std::uint64_t direct = count_all_of(gamma).at(gamma);
    CHECK(count_genus_of(gamma) == direct);
    CHECK(direct == fixtures::kCounts[gamma]);
  }
}

TEST_CASE("parallel determinism at gamma = 20") {
  const std::uint64_t base = count_genus_of(20, 1);
  for (int threads : {2, 4, 8}) {
    CHECK(count_genus_of(20, threads) == base);
    CHECK(count_all_of(20, threads).n == count_all_of(20, 1).n);
  }
}

TEST_CASE("growth inequalities hold on the computed range to gamma = 30") {
  CountTable t = count_all_of(30, 1);
  for (int g = 1; g + 1 <= 30; ++g) CHECK(t.at(g + 1) >= t.at(g));
  for (int g = 1; g + 2 <= 30; ++g) CHECK(t.at(g + 2) >= t.at(g + 1) + t.at(g));
}

TEST_CASE("config guards") {
  CHECK_THROWS_AS(count_genus_of(1), std::invalid_argument);
  CHECK_THROWS_AS(count_genus_of(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(count_genus_of(90), std::overflow_error);
  CHECK_THROWS_AS(count_all_of(90), std::overflow_error);
}

TEST_CASE("per-subtree decomposition sums to the total") {
  const int gamma = 16;
  std::vector<std::uint64_t> per_m(static_cast<std::size_t>(gamma) + 2, 0);
  Handler h = Handler::with_callback([&](const NodeView& view, int g) {
    if (g == gamma) ++per_m[static_cast<std::size_t>(view.m)];
  });
  explore(gamma, h);
  std::uint64_t sum = 0;
  for (std::uint64_t n : per_m) sum += n;
  CHECK(sum == count_genus_of(gamma));
  CHECK(per_m[2] == 1);
  CHECK(per_m[static_cast<std::size_t>(gamma) + 1] == 1);
}
