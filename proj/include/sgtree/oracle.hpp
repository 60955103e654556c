#ifndef SGTREE_ORACLE_HPP_
#define SGTREE_ORACLE_HPP_

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgtree/counter.hpp"
#include "sgtree/explorer.hpp"
#include "sgtree/gap_set.hpp"

// Definition-level brute force, deliberately sharing no machinery with the
// chain encoding: primitivity by direct sum decomposition, the tree by
// removing right generators one at a time.  Ground truth for everything.
namespace sgtree::oracle {

// Boolean membership table over [0, bound); bound is kept at c + 2m + 1 so
// the primitivity of every candidate up to c+m-1 and of the new-generator
// value 2m+s is decidable.
struct Membership {
  std::vector<char> member;

  int bound() const { return static_cast<int>(member.size()); }

  int multiplicity() const {
    for (int x = 1; x < bound(); ++x)
      if (member[static_cast<std::size_t>(x)]) return x;
    throw std::logic_error("membership table has no nonzero element");
  }

  int conductor() const {
    int c = 0;
    for (int x = 1; x < bound(); ++x)
      if (!member[static_cast<std::size_t>(x)]) c = x + 1;
    return c;
  }

  int genus() const {
    int g = 0;
    for (int x = 1; x < bound(); ++x)
      if (!member[static_cast<std::size_t>(x)]) ++g;
    return g;
  }

  std::vector<int> gap_list() const {
    std::vector<int> gaps;
    for (int x = 1; x < bound(); ++x)
      if (!member[static_cast<std::size_t>(x)]) gaps.push_back(x);
    return gaps;
  }

  static Membership from_gap_list(const std::vector<int>& gaps) {
    const int c = gaps.empty() ? 1 : gaps.back() + 1;
    Membership s;
    s.member.assign(static_cast<std::size_t>(c), 1);
    for (int gap : gaps) s.member[static_cast<std::size_t>(gap)] = 0;
    int m = 1;
    while (!s.member[static_cast<std::size_t>(m)]) ++m;
    s.member.resize(static_cast<std::size_t>(c + 2 * m + 1), 1);
    return s;
  }

  static Membership from_gaps(const GapSet& gaps) { return from_gap_list(gaps.gaps()); }
};

// All primitive elements: nonzero nongaps that are not the sum of two
// nonzero nongaps.  This is the minimal generating set.
inline std::vector<int> naive_primitives(const Membership& s) {
  const int m = s.multiplicity();
  const int c = s.conductor();
  if (s.bound() < c + 2 * m)
    throw std::invalid_argument("membership bound too small to decide primitivity");
  std::vector<int> prims;
  for (int x = m; x < c + m; ++x) {
    if (!s.member[static_cast<std::size_t>(x)]) continue;
    bool primitive = true;
    for (int a = m; 2 * a <= x; ++a) {
      if (s.member[static_cast<std::size_t>(a)] &&
          s.member[static_cast<std::size_t>(x - a)]) {
        primitive = false;
        break;
      }
    }
    if (primitive) prims.push_back(x);
  }
  return prims;
}

// Right generators only: the primitive elements at or beyond the conductor.
inline std::vector<int> naive_right_generators(const Membership& s) {
  const int c = s.conductor();
  std::vector<int> gens;
  for (int p : naive_primitives(s))
    if (p >= c) gens.push_back(p);
  return gens;
}

// One child per right generator, by increasing removed element.
inline std::vector<Membership> naive_children(const Membership& s) {
  std::vector<Membership> children;
  for (int gen : naive_right_generators(s)) {
    std::vector<int> gaps = s.gap_list();
    gaps.push_back(gen);  // gen >= c, already sorted last
    children.push_back(Membership::from_gap_list(gaps));
  }
  return children;
}

constexpr int kNaiveCountLimit = 25;

namespace detail_oracle {

inline void naive_count_rec(const Membership& s, int gamma,
                            std::vector<std::uint64_t>& n) {
  const int g = s.genus();
  ++n[static_cast<std::size_t>(g)];
  if (g >= gamma) return;
  for (const Membership& child : naive_children(s)) naive_count_rec(child, gamma, n);
}

}  // namespace detail_oracle

// Exhaustive table by applying the tree definition from the genus-1 node.
inline CountTable naive_count(int gamma) {
  if (gamma < 1) throw std::invalid_argument("gamma must be at least 1");
  if (gamma > kNaiveCountLimit)
    throw std::invalid_argument("gamma beyond the exhaustive oracle limit");
  CountTable table;
  table.n.assign(static_cast<std::size_t>(gamma) + 1, 0);
  detail_oracle::naive_count_rec(Membership::from_gap_list({1}), gamma, table.n);
  return table;
}

struct VerifyReport {
  bool ok = true;
  int gamma = 0;
  std::uint64_t node_mismatches = 0;
  std::uint64_t edge_mismatches = 0;
  int first_divergence_genus = -1;
  std::string summary;
};

namespace detail_oracle {

inline void collect_levels(const Membership& s, int gamma,
                           std::vector<std::vector<std::vector<int>>>& levels) {
  const int g = s.genus();
  levels[static_cast<std::size_t>(g)].push_back(s.gap_list());
  if (g >= gamma) return;
  for (const Membership& child : naive_children(s)) collect_levels(child, gamma, levels);
}

// Checks one tree edge against the chain machinery: the expanded child must
// decode to the same gap set, and the chain's new-generator bit must agree
// with the naive primitivity of 2m+s in the child.
inline void check_edges(const Membership& s, int gamma, const CheckOptions& opt,
                        std::uint64_t& mismatches) {
  const int g = s.genus();
  if (g >= gamma) return;
  NodeState state = from_gaps(GapSet(s.gap_list()));
  std::vector<Membership> children = naive_children(s);
  std::vector<int> gens = naive_right_generators(s);
  for (std::size_t i = 0; i < children.size(); ++i) {
    const int sidx = gens[i] - state.m;
    NodeState child = expand(state, sidx);
    if (to_gaps(child).gaps() != children[i].gap_list()) ++mismatches;
    const int candidate = 2 * state.m + sidx;
    bool naive_new = false;
    for (int p : naive_primitives(children[i]))
      if (p == candidate) naive_new = true;
    if (child.chain.test(state.m + sidx) != naive_new) ++mismatches;
    check_edges(children[i], gamma, opt, mismatches);
  }
}

}  // namespace detail_oracle

// Level-by-level comparison of the explorer's visit set against the naive
// tree, plus the per-edge new-generator cross-check.  Divergence is a report
// outcome, not an error.
inline VerifyReport cross_verify(int gamma, const CheckOptions& opt = {}) {
  VerifyReport report;
  report.gamma = gamma;

  // Raw gap vectors, not GapSet: a faulty walk may emit non-semigroups and
  // those must surface as mismatches, not as exceptions.
  std::vector<std::vector<std::vector<int>>> explored(static_cast<std::size_t>(gamma) + 1);
  Handler handler = Handler::with_callback([&explored](const NodeView& view, int g) {
    explored[static_cast<std::size_t>(g)].push_back(view.gaps());
  });
  explore(gamma, handler, opt);

  std::vector<std::vector<std::vector<int>>> expected(static_cast<std::size_t>(gamma) + 1);
  detail_oracle::collect_levels(Membership::from_gap_list({1}), gamma, expected);

  for (int g = 1; g <= gamma; ++g) {
    auto& lhs = explored[static_cast<std::size_t>(g)];
    auto& rhs = expected[static_cast<std::size_t>(g)];
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    if (lhs != rhs) {
      std::uint64_t diff = 0;
      std::vector<std::vector<int>> sym;
      std::set_symmetric_difference(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                                    std::back_inserter(sym));
      diff = sym.size();
      if (diff == 0) diff = 1;  // same sets, wrong multiplicities
      report.node_mismatches += diff;
      if (report.first_divergence_genus < 0) report.first_divergence_genus = g;
    }
  }

  detail_oracle::check_edges(Membership::from_gap_list({1}), gamma, opt,
                             report.edge_mismatches);

  report.ok = report.node_mismatches == 0 && report.edge_mismatches == 0;
  std::ostringstream out;
  if (report.ok) {
    out << "OK: " << gamma << " levels checked, 0 mismatches";
  } else {
    out << "MISMATCH: " << report.node_mismatches << " node and "
        << report.edge_mismatches << " edge mismatches";
    if (report.first_divergence_genus >= 0)
      out << ", first divergence at genus " << report.first_divergence_genus;
  }
  report.summary = out.str();
  return report;
}

}  // namespace sgtree::oracle

#endif  // SGTREE_ORACLE_HPP_
