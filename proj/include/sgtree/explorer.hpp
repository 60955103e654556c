#ifndef SGTREE_EXPLORER_HPP_
#define SGTREE_EXPLORER_HPP_

#include <algorithm>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sgtree/node.hpp"

namespace sgtree {

// Read-only view of the chain of a visited node.  Buffers are reused across
// siblings, so the view must not be retained after the handler returns.
struct NodeView {
  const std::uint8_t* bits;
  int c;  // conductor = significant length
  int m;

  bool test(int j) const { return j < c && bits[j] != 0; }

  std::vector<int> gaps() const {
    std::vector<int> out;
    for (int x = 1; x < m; ++x) out.push_back(x);
    for (int j = 0; j < c - m; ++j)
      if (bits[j]) out.push_back(m + j);
    return out;
  }
};

struct CheckOptions {
  // The new-generator check loop runs descending from floor(s/2) by default;
  // the ascending variant is kept for differential testing.
  bool descending = true;
  // Test-only fault-injection knob: raises the lower bound of the check loop.
  int floor_bias = 0;
};

// Visitor over tree nodes.  Per-level tallies are kept in every mode;
// collect additionally stores gap sets, callback forwards each view.
class Handler {
 public:
  enum class Mode { count_only, collect, callback };
  using Callback = std::function<void(const NodeView&, int genus)>;

  static Handler counting() { return Handler(Mode::count_only, nullptr); }
  static Handler collecting() { return Handler(Mode::collect, nullptr); }
  static Handler with_callback(Callback fn) {
    return Handler(Mode::callback, std::move(fn));
  }

  Mode mode() const { return mode_; }

  void visit(const NodeView& view, int genus) {
    if (static_cast<std::size_t>(genus) >= levels_.size())
      levels_.resize(static_cast<std::size_t>(genus) + 1, 0);
    ++levels_[static_cast<std::size_t>(genus)];
    if (mode_ == Mode::collect)
      collected_.emplace_back(genus, GapSet(view.gaps()));
    else if (mode_ == Mode::callback)
      fn_(view, genus);
  }

  // levels()[g] = number of visited nodes of genus g.
  const std::vector<std::uint64_t>& levels() const { return levels_; }
  std::uint64_t level(int g) const {
    return static_cast<std::size_t>(g) < levels_.size()
               ? levels_[static_cast<std::size_t>(g)]
               : 0;
  }
  const std::vector<std::pair<int, GapSet>>& collected() const { return collected_; }

 private:
  Handler(Mode mode, Callback fn) : mode_(mode), fn_(std::move(fn)) {}

  Mode mode_;
  Callback fn_;
  std::vector<std::uint64_t> levels_;
  std::vector<std::pair<int, GapSet>> collected_;
};

namespace detail {

// One preallocated chain buffer per recursion depth; a node copies its
// parent's chain once (the pseudocode's D~ := D) and then restores single
// bits between sibling expansions.
struct Arena {
  explicit Arena(int gamma)
      : cap(chain_capacity_for(gamma)),
        store(static_cast<std::size_t>(gamma + 2) * static_cast<std::size_t>(cap), 0) {}

  std::uint8_t* level(int depth) {
    return store.data() + static_cast<std::size_t>(depth) * static_cast<std::size_t>(cap);
  }

  int cap;
  std::vector<std::uint8_t> store;
};

// True iff no l in [lo, s/2] has D[l] = D[s-l] = 0, i.e. the child obtained
// at window position s keeps 2m+s as a primitive element.
inline bool new_generator_check(const std::uint8_t* D, int s, int lo,
                                const CheckOptions& opt) {
  lo += opt.floor_bias;
  if (opt.descending) {
    int l = s / 2;
    while (l >= lo && (D[l] || D[s - l])) --l;
    return l < lo;
  }
  int l = lo;
  const int mid = s / 2;
  while (l <= mid && (D[l] || D[s - l])) ++l;
  return l > mid;
}

// Basic recursion over all children, check loop starting at l = 1.  Visits
// the proper descendants of (D, m, c, g) up to genus gamma; the node itself
// is not visited.  Works for any node, ordinary included.
template <class H>
void rgd_offspring_rec(Arena& a, int depth, const std::uint8_t* D, int m, int c,
                       int g, int gamma, H&& h, const CheckOptions& opt) {
  if (g >= gamma) return;
  std::uint8_t* Dt = a.level(depth);
  std::memcpy(Dt, D, static_cast<std::size_t>(c));
  std::memset(Dt + c, 0, static_cast<std::size_t>(m) + 1);
  const int gt = g + 1;
  for (int s = c - m; s <= c - 1; ++s) {
    if (!Dt[s]) continue;
    const int frob = m + s;
    const int mt = (s == 0) ? m + 1 : m;
    if (new_generator_check(Dt, s, 1, opt)) Dt[frob] = 1;
    h(Dt, mt, frob + 1, gt);
    rgd_offspring_rec(a, depth + 1, Dt, mt, frob + 1, gt, gamma, h, opt);
    Dt[frob] = 0;
    Dt[s] = 0;
  }
}

// Refined recursion for a node that is neither ordinary nor pseudo-ordinary:
// the node itself is handled first; only the first u window positions run the
// new-generator check, the tail is driven by the right-generator count.
template <class H>
void rgd_rec(Arena& a, int depth, const std::uint8_t* D, int m, int u, int c,
             int g, int r, int gamma, H&& h, const CheckOptions& opt) {
  h(D, m, c, g);
  if (g >= gamma) return;
  std::uint8_t* Dt = a.level(depth);
  std::memcpy(Dt, D, static_cast<std::size_t>(c));
  std::memset(Dt + c, 0, static_cast<std::size_t>(m) + 1);
  int rt = r;
  int s = c - m;
  for (; s <= c - m + u - 1; ++s) {
    if (!Dt[s]) continue;
    const int frob = m + s;
    if (new_generator_check(Dt, s, u, opt)) {
      Dt[frob] = 1;
      rgd_rec(a, depth + 1, Dt, m, u, frob + 1, g + 1, rt, gamma, h, opt);
      --rt;
      Dt[frob] = 0;
    } else {
      --rt;
      rgd_rec(a, depth + 1, Dt, m, u, frob + 1, g + 1, rt, gamma, h, opt);
    }
    Dt[s] = 0;
  }
  --s;
  while (rt > 0) {
    ++s;
    if (Dt[s]) {
      --rt;
      rgd_rec(a, depth + 1, Dt, m, u, m + s + 1, g + 1, rt, gamma, h, opt);
      Dt[s] = 0;
    }
  }
}

// Expansion of the pseudo-ordinary node Lambda_u of multiplicity m (conductor
// c = m+u): launches the refined recursion on each non-pseudo-ordinary child.
// The pseudo-ordinary child Lambda_{u+1} (window position s = u) is walked by
// the caller's path loop, never here.  The loops are specialized on 2u <= m
// so the s != m comparison stays out of the bodies; children in [u+1, 2u) are
// strong (new right generator forced), the rest never get one.  rt holds the
// right-generator count of the sibling at each step.
template <class H>
void pseudo_rec(Arena& a, int depth, const std::uint8_t* D, int m, int u, int c,
                int rt, int gamma, H&& h, const CheckOptions& opt) {
  std::uint8_t* Dt = a.level(depth);
  std::memcpy(Dt, D, static_cast<std::size_t>(c));
  std::memset(Dt + c, 0, static_cast<std::size_t>(m) + 1);
  Dt[u] = 0;
  const int gt = c - 1;  // children sit one level below genus c-2
  auto strong = [&](int s) {
    const int frob = m + s;
    Dt[frob] = 1;
    rgd_rec(a, depth + 1, Dt, m, u, frob + 1, gt, rt, gamma, h, opt);
    --rt;
    Dt[frob] = 0;
    Dt[s] = 0;
  };
  auto plain = [&](int s) {
    --rt;
    rgd_rec(a, depth + 1, Dt, m, u, m + s + 1, gt, rt, gamma, h, opt);
    Dt[s] = 0;
  };
  if (2 * u <= m) {
    for (int s = u + 1; s <= 2 * u - 1; ++s) strong(s);
    for (int s = 2 * u; s <= m - 1; ++s) plain(s);
    for (int s = m + 1; s <= c - 1; ++s) plain(s);
  } else {
    for (int s = u + 1; s <= std::min(2 * u - 1, m - 1); ++s) strong(s);
    for (int s = m + 1; s <= 2 * u - 1; ++s) strong(s);
    for (int s = 2 * u; s <= c - 1; ++s) plain(s);
  }
}

// Full walk of the tree up to level gamma: the multiplicity-2 path, then for
// each 3 <= m <= gamma the subtree of multiplicity m (ordinary root, the
// pseudo-ordinary path with its hanging subtrees, the quasi-ordinary block),
// and finally the ordinary semigroup of genus gamma.
template <class H>
void explore_impl(int gamma, H&& h, const CheckOptions& opt) {
  if (gamma < 2) throw std::invalid_argument("explore requires gamma >= 2");
  Arena a(gamma);
  std::vector<std::uint8_t> D(static_cast<std::size_t>(a.cap), 0);

  D[0] = D[1] = 1;
  h(D.data(), 2, 2, 1);
  D[0] = 0;
  for (int g = 2; g <= gamma; ++g) {
    D[2 * g - 1] = 1;
    h(D.data(), 2, 2 * g, g);
  }
  std::fill(D.begin(), D.end(), 0);

  for (int m = 3; m <= gamma; ++m) {
    std::fill(D.begin(), D.begin() + 2 * m + 2, 0);
    for (int j = 0; j < m; ++j) D[j] = 1;
    h(D.data(), m, m, m - 1);
    D[0] = 0;

    const int path_end = std::min(m, gamma + 2 - m);
    int c = 0;
    for (int u = 2; u <= path_end - 1; ++u) {
      c = m + u;
      D[c - 1] = 1;
      h(D.data(), m, c, c - 2);
      pseudo_rec(a, 0, D.data(), m, u, c, m - 2, gamma, h, opt);
    }
    c = m + path_end;
    D[c - 1] = 1;
    h(D.data(), m, c, c - 2);
    if (path_end < gamma + 2 - m)
      pseudo_rec(a, 0, D.data(), m, m, c, m - 1, gamma, h, opt);

    std::fill(D.begin(), D.begin() + 2 * m + 2, 0);
    for (int j = 2; j < m; ++j) D[j] = 1;
    int r = m - 3;
    for (int s = 2; s <= m - 2; ++s) {
      rgd_rec(a, 0, D.data(), m, 1, m + s + 1, m, r, gamma, h, opt);
      --r;
      D[s] = 0;
    }
    h(D.data(), m, 2 * m, m);
    std::fill(D.begin(), D.begin() + 2 * m + 2, 0);
  }

  for (int j = 0; j <= gamma; ++j) D[j] = 1;
  h(D.data(), gamma + 1, gamma + 1, gamma);
}

inline std::vector<std::uint8_t> root_buffer(const NodeState& state, int gamma) {
  std::vector<std::uint8_t> D(
      static_cast<std::size_t>(chain_capacity_for(std::max(gamma, state.g))), 0);
  for (int j = 0; j < state.c; ++j) D[static_cast<std::size_t>(j)] = state.chain.test(j);
  return D;
}

}  // namespace detail

// --- Single-edge operations ---------------------------------------------

// True iff no l with lo <= l <= s/2 has chain[l] = chain[s-l] = 0, where the
// chain is the child chain under construction; true means 2m+s stays a
// primitive element of the child.
inline bool has_new_right_generator(const RgdChain& chain, int s, int u) {
  for (int l = u; l <= s / 2; ++l)
    if (!chain.test(l) && !chain.test(s - l)) return false;
  return true;
}

// The child obtained by removing the right generator m+s, with every scalar
// threaded incrementally (never recomputed from the chain).
inline NodeState expand(const NodeState& parent, int s) {
  if (s < parent.c - parent.m || s >= parent.c)
    throw std::invalid_argument("s outside the right-generator window");
  if (!parent.chain.test(s))
    throw std::invalid_argument("no right generator at window position s");
  const bool parent_ordinary = parent.c == parent.m;
  const bool parent_pseudo = parent.c == parent.m + parent.u && parent.u >= 2;

  NodeState child;
  child.g = parent.g + 1;
  child.m = (parent_ordinary && s == 0) ? parent.m + 1 : parent.m;
  child.c = parent.m + s + 1;
  if (parent_ordinary)
    child.u = (s == 1) ? 2 : 1;
  else if (parent_pseudo && s == parent.u)
    child.u = parent.u + 1;
  else
    child.u = parent.u;

  child.chain = RgdChain(std::max(parent.chain.capacity(), child.c + child.m));
  child.chain.set_len(child.c);
  for (int j = 0; j < parent.c - parent.m; ++j)
    child.chain.set(j, parent.chain.test(j));
  for (int j = std::max(parent.c - parent.m, s); j < parent.c; ++j)
    child.chain.set(j, parent.chain.test(j));

  int inherited = 0;
  for (int j = s + 1; j < parent.c; ++j)
    if (parent.chain.test(j)) ++inherited;
  const bool new_gen = has_new_right_generator(child.chain, s, 1);
  if (new_gen) child.chain.set(parent.m + s, true);
  // The multiplicity jump (ordinary parent, s = 0) widens the generator
  // window by one: the child is the next ordinary semigroup, all bits set.
  child.r = (parent_ordinary && s == 0) ? child.m : inherited + (new_gen ? 1 : 0);
  return child;
}

// The m children of the ordinary semigroup of multiplicity m, in increasing
// order of the removed generator; each child has genus m.
inline std::vector<NodeState> ordinary_children(int m, int gamma) {
  if (m < 2) throw std::invalid_argument("multiplicity must be at least 2");
  const int cap = chain_capacity_for(std::max(gamma, m + 1));
  std::vector<NodeState> children;
  children.reserve(static_cast<std::size_t>(m));
  {
    NodeState ord;  // the ordinary semigroup of multiplicity m+1
    ord.m = m + 1;
    ord.u = 1;
    ord.c = m + 1;
    ord.g = m;
    ord.r = m + 1;
    ord.chain = RgdChain(cap);
    ord.chain.set_len(ord.c);
    for (int j = 0; j <= m; ++j) ord.chain.set(j, true);
    children.push_back(std::move(ord));
  }
  for (int s = 1; s < m; ++s) {
    NodeState child;
    child.m = m;
    child.c = m + s + 1;
    child.g = m;
    child.u = (s == 1) ? 2 : 1;
    child.r = (s == 1) ? m - 1 : m - 1 - s;
    child.chain = RgdChain(cap);
    child.chain.set_len(child.c);
    for (int j = s; j < m; ++j) child.chain.set(j, true);
    if (s == 1) child.chain.set(m + 1, true);  // the new right generator 2m+1
    children.push_back(std::move(child));
  }
  return children;
}

// --- Tree walks ----------------------------------------------------------

// Visits the proper descendants of root up to genus gamma, children in
// increasing s; the basic recursion with the check loop starting at l = 1.
inline void rgd_offspring(const NodeState& root, int gamma, Handler& handler,
                          const CheckOptions& opt = {.descending = false}) {
  detail::Arena a(gamma);
  auto D = detail::root_buffer(root, gamma);
  auto visit = [&handler](const std::uint8_t* bits, int m, int c, int g) {
    handler.visit(NodeView{bits, c, m}, g);
  };
  detail::rgd_offspring_rec(a, 0, D.data(), root.m, root.c, root.g, gamma, visit, opt);
}

// Refined recursion; the root must be neither ordinary nor pseudo-ordinary.
// Visits the root itself and then its descendants up to genus gamma.
inline void rgd_recurse(const NodeState& root, int gamma, Handler& handler,
                        const CheckOptions& opt = {}) {
  const Classification k = classify(root);
  if (k.ordinary || k.pseudo_ordinary)
    throw std::invalid_argument("rgd_recurse requires a non-ordinary, non-pseudo-ordinary root");
  detail::Arena a(gamma);
  auto D = detail::root_buffer(root, gamma);
  auto visit = [&handler](const std::uint8_t* bits, int m, int c, int g) {
    handler.visit(NodeView{bits, c, m}, g);
  };
  detail::rgd_rec(a, 0, D.data(), root.m, root.u, root.c, root.g, root.r, gamma,
                  visit, opt);
}

// Expands the pseudo-ordinary node Lambda_u (u >= 2), visiting every
// non-pseudo-ordinary child and its descendants.  Neither the node itself nor
// the child Lambda_{u+1} is visited here.
inline void pseudo_expand(const NodeState& root, int gamma, Handler& handler,
                          const CheckOptions& opt = {}) {
  if (!classify(root).pseudo_ordinary)
    throw std::invalid_argument("pseudo_expand requires a pseudo-ordinary node");
  detail::Arena a(gamma);
  auto D = detail::root_buffer(root, gamma);
  auto visit = [&handler](const std::uint8_t* bits, int m, int c, int g) {
    handler.visit(NodeView{bits, c, m}, g);
  };
  const int rt = (root.u < root.m) ? root.m - 2 : root.m - 1;
  detail::pseudo_rec(a, 0, D.data(), root.m, root.u, root.c, rt, gamma, visit, opt);
}

// Walks the whole tree: the handler sees every semigroup of genus 1..gamma
// exactly once, children of any node in increasing s.
inline void explore(int gamma, Handler& handler, const CheckOptions& opt = {}) {
  auto visit = [&handler](const std::uint8_t* bits, int m, int c, int g) {
    handler.visit(NodeView{bits, c, m}, g);
  };
  detail::explore_impl(gamma, visit, opt);
}

}  // namespace sgtree

#endif  // SGTREE_EXPLORER_HPP_
