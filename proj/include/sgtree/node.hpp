#ifndef SGTREE_NODE_HPP_
#define SGTREE_NODE_HPP_

#include <stdexcept>
#include <vector>

#include "sgtree/chain.hpp"
#include "sgtree/gap_set.hpp"

namespace sgtree {

// One node of the semigroup tree: the RGD bit chain plus the scalar
// parameters threaded through the exploration.
struct NodeState {
  RgdChain chain;
  int m = 0;  // multiplicity
  int u = 0;  // jump: second nonzero element minus m
  int c = 0;  // conductor (= chain.len())
  int g = 0;  // genus
  int r = 0;  // number of right generators

  // Two nodes are equal iff (m, c) match and the first c bits match.
  bool operator==(const NodeState& other) const {
    if (m != other.m || c != other.c) return false;
    for (int j = 0; j < c; ++j)
      if (chain.test(j) != other.chain.test(j)) return false;
    return true;
  }
};

struct Classification {
  bool ordinary = false;
  bool quasi_ordinary = false;
  bool pseudo_ordinary = false;

  bool generic() const { return !ordinary && !quasi_ordinary && !pseudo_ordinary; }
};

inline Classification classify(const NodeState& state) {
  Classification k;
  k.ordinary = state.c == state.m;
  k.quasi_ordinary = state.g == state.m && state.c != state.m;
  k.pseudo_ordinary = state.c == state.m + state.u && state.u >= 2;
  return k;
}

// Builds the node for a given gap set, computing every scalar from scratch.
// This is the single place where (m, u, c, g, r) are derived rather than
// threaded.
inline NodeState from_gaps(const GapSet& gaps) {
  if (gaps.empty())
    throw std::invalid_argument("the trivial semigroup is outside the node universe");
  NodeState state;
  state.g = gaps.genus();
  state.c = gaps.conductor();
  state.m = gaps.multiplicity();
  const int m = state.m;
  const int c = state.c;

  const int bound = c + 2 * m + 1;
  std::vector<char> mem = gaps.members(bound);

  // Jump: second nonzero element minus m.
  int second = m + 1;
  while (!mem[static_cast<std::size_t>(second)]) ++second;
  state.u = second - m;

  state.chain = RgdChain(std::max(chain_capacity_for(state.g), c + m));
  state.chain.set_len(c);
  for (int j = 0; j < c - m; ++j) state.chain.set(j, !mem[static_cast<std::size_t>(m + j)]);
  for (int j = c - m; j < c; ++j) {
    const int x = m + j;
    bool primitive = mem[static_cast<std::size_t>(x)];
    if (primitive) {
      for (int a = m; 2 * a <= x; ++a) {
        if (mem[static_cast<std::size_t>(a)] && mem[static_cast<std::size_t>(x - a)]) {
          primitive = false;
          break;
        }
      }
    }
    state.chain.set(j, primitive);
    if (primitive) ++state.r;
  }
  return state;
}

// Inverse of from_gaps: the left portion of the chain plus m determine the
// semigroup uniquely.
inline GapSet to_gaps(const NodeState& state) {
  std::vector<int> gaps;
  for (int x = 1; x < state.m; ++x) gaps.push_back(x);
  for (int j = 0; j < state.c - state.m; ++j)
    if (state.chain.test(j)) gaps.push_back(state.m + j);
  return GapSet(std::move(gaps));
}

// The right generators m+j for the 1-bits in the window [c-m, c), increasing.
inline std::vector<int> right_generators(const NodeState& state) {
  std::vector<int> gens;
  for (int j = state.c - state.m; j < state.c; ++j)
    if (state.chain.test(j)) gens.push_back(state.m + j);
  return gens;
}

}  // namespace sgtree

#endif  // SGTREE_NODE_HPP_
