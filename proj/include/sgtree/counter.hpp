#ifndef SGTREE_COUNTER_HPP_
#define SGTREE_COUNTER_HPP_

#include <atomic>
#include <cstring>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "sgtree/explorer.hpp"

namespace sgtree {

// Counts indexed by genus: n[g] for 1 <= g <= gamma, n[0] = 0.
struct CountTable {
  std::vector<std::uint64_t> n;

  int gamma() const { return static_cast<int>(n.size()) - 1; }
  std::uint64_t at(int g) const { return n.at(static_cast<std::size_t>(g)); }
};

struct ExploreConfig {
  enum class Mode { single_genus, all_genera };

  int gamma = 2;
  int threads = 1;
  Mode mode = Mode::single_genus;
};

// A 64-bit accumulator runs out of headroom well before genus 90 on the
// Fibonacci-like growth of n_g.
constexpr int kCount64Limit = 89;

// Number of grandchildren of the pseudo-ordinary semigroup Lambda_u in the
// multiplicity-m subtree: the inherited right generators of its m-1 children
// sum to (m-1)(m-2)/2, and the children with a new right generator number u
// or u-1 depending on whether 2u <= m.
inline std::uint64_t pseudo_grandchildren(int m, int u) {
  if (m < 3) throw std::invalid_argument("pseudo_grandchildren requires m >= 3");
  if (u < 2 || u > m) throw std::invalid_argument("jump u must satisfy 2 <= u <= m");
  const std::uint64_t inherited =
      static_cast<std::uint64_t>(m - 1) * static_cast<std::uint64_t>(m - 2) / 2;
  return inherited + static_cast<std::uint64_t>(2 * u <= m ? u : u - 1);
}

// Number of genus-gamma semigroups in the boundary subtrees T_gamma and
// T_{gamma-1}: gamma-1 and gamma-2 + (gamma-4)(gamma-3)/2.
inline std::pair<std::uint64_t, std::uint64_t> boundary_subtree_counts(int gamma) {
  if (gamma < 5) throw std::invalid_argument("boundary_subtree_counts requires gamma >= 5");
  const std::uint64_t first = static_cast<std::uint64_t>(gamma - 1);
  const std::uint64_t second =
      static_cast<std::uint64_t>(gamma - 2) +
      static_cast<std::uint64_t>(gamma - 4) * static_cast<std::uint64_t>(gamma - 3) / 2;
  return {first, second};
}

namespace detail {

// Single-genus counting recursion.  rem = gamma - 2 - g of the current node
// (threaded instead of gamma and g).  At rem = 0 the node sits at level
// gamma-2: each child's right-generator count is added directly and nothing
// is materialized further; the tail children there have counts
// rt-1, rt-2, ..., 0 which telescope to rt(rt-1)/2.
inline void count_rgd(Arena& a, int depth, const std::uint8_t* D, int m, int u,
                      int c, int rem, int r, std::uint64_t& acc,
                      const CheckOptions& opt) {
  std::uint8_t* Dt = a.level(depth);
  std::memcpy(Dt, D, static_cast<std::size_t>(c));
  std::memset(Dt + c, 0, static_cast<std::size_t>(m) + 1);
  int rt = r;
  const int w0 = c - m;
  if (rem == 0) {
    for (int s = w0; s < w0 + u; ++s) {
      if (!Dt[s]) continue;
      if (new_generator_check(Dt, s, u, opt)) {
        acc += static_cast<std::uint64_t>(rt);
        --rt;
      } else {
        --rt;
        acc += static_cast<std::uint64_t>(rt);
      }
      Dt[s] = 0;
    }
    if (rt > 1) acc += static_cast<std::uint64_t>(rt) * (rt - 1) / 2;
    return;
  }
  int s = w0;
  for (; s < w0 + u; ++s) {
    if (!Dt[s]) continue;
    const int frob = m + s;
    if (new_generator_check(Dt, s, u, opt)) {
      Dt[frob] = 1;
      count_rgd(a, depth + 1, Dt, m, u, frob + 1, rem - 1, rt, acc, opt);
      --rt;
      Dt[frob] = 0;
    } else {
      --rt;
      if (rt > 0) count_rgd(a, depth + 1, Dt, m, u, frob + 1, rem - 1, rt, acc, opt);
    }
    Dt[s] = 0;
  }
  --s;
  while (rt > 1) {  // the all-zero last child is skipped
    ++s;
    if (Dt[s]) {
      --rt;
      count_rgd(a, depth + 1, Dt, m, u, m + s + 1, rem - 1, rt, acc, opt);
      Dt[s] = 0;
    }
  }
}

// Writes the chain of the pseudo-ordinary Lambda_u of multiplicity m into a
// zeroed buffer: 0 1^{u-1} 1^{m-u} 0 1^{u-1}, length m+u.
inline void write_pseudo_chain(std::uint8_t* D, int m, int u) {
  for (int j = 1; j < m; ++j) D[j] = 1;
  D[m] = 0;
  for (int j = m + 1; j < m + u; ++j) D[j] = 1;
}

// Genus-gamma count of the subtrees hanging off Lambda_u (path child
// excluded).  Pre: children of Lambda_u are at level <= gamma-2, i.e.
// m + u + 1 <= gamma.
inline std::uint64_t count_pseudo_task(int m, int u, int gamma,
                                       const CheckOptions& opt) {
  Arena a(gamma);
  std::vector<std::uint8_t> D(static_cast<std::size_t>(a.cap), 0);
  write_pseudo_chain(D.data(), m, u);
  const int c = m + u;
  const int rem = gamma - m - u - 1;  // gamma - 2 - (c - 1)
  std::uint64_t acc = 0;
  std::uint8_t* Dt = a.level(0);
  std::memcpy(Dt, D.data(), static_cast<std::size_t>(c));
  std::memset(Dt + c, 0, static_cast<std::size_t>(m) + 1);
  Dt[u] = 0;
  int rt = (u < m) ? m - 2 : m - 1;
  auto strong = [&](int s) {
    const int frob = m + s;
    Dt[frob] = 1;
    count_rgd(a, 1, Dt, m, u, frob + 1, rem, rt, acc, opt);
    --rt;
    Dt[frob] = 0;
    Dt[s] = 0;
  };
  auto plain = [&](int s) {
    --rt;
    if (rt > 0) count_rgd(a, 1, Dt, m, u, m + s + 1, rem, rt, acc, opt);
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
  return acc;
}

// Genus-gamma count of the quasi-ordinary block of T_m (the non-pseudo
// children of the ordinary root and everything below them).
inline std::uint64_t count_quasi_task(int m, int gamma, const CheckOptions& opt) {
  Arena a(gamma);
  std::vector<std::uint8_t> D(static_cast<std::size_t>(a.cap), 0);
  for (int j = 2; j < m; ++j) D[j] = 1;
  const int rem = gamma - 2 - m;
  std::uint64_t acc = 0;
  int r = m - 3;
  for (int s = 2; s <= m - 2; ++s) {
    if (r > 0) count_rgd(a, 0, D.data(), m, 1, m + s + 1, rem, r, acc, opt);
    --r;
    D[s] = 0;
  }
  return acc;
}

// Deterministic dynamic task pool: workers pull tasks via an atomic index
// into their private accumulator vector; partials merge by addition, so the
// totals are identical for any schedule.
inline void run_tasks(const std::vector<std::function<void(std::vector<std::uint64_t>&)>>& tasks,
                      int threads, std::vector<std::uint64_t>& out) {
  if (threads <= 1) {
    for (const auto& task : tasks) task(out);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex merge_mutex;
  auto worker = [&]() {
    std::vector<std::uint64_t> local(out.size(), 0);
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= tasks.size()) break;
      tasks[i](local);
    }
    std::lock_guard<std::mutex> lock(merge_mutex);
    for (std::size_t g = 0; g < out.size(); ++g) out[g] += local[g];
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

inline void validate_config(const ExploreConfig& cfg) {
  if (cfg.gamma < 2) throw std::invalid_argument("gamma must be at least 2");
  if (cfg.threads < 1) throw std::invalid_argument("thread count must be at least 1");
  if (cfg.gamma > kCount64Limit)
    throw std::overflow_error("gamma beyond the 64-bit counting range");
}

}  // namespace detail

// Full table n_1..n_gamma from a single exploration to level gamma, the
// per-multiplicity subtrees and the pseudo-ordinary-rooted subtrees within
// them distributed over the task pool.
inline CountTable count_all(const ExploreConfig& cfg) {
  detail::validate_config(cfg);
  const int gamma = cfg.gamma;
  CountTable table;
  table.n.assign(static_cast<std::size_t>(gamma) + 1, 0);

  // Path and root nodes, tallied serially: the T_2 path, each ordinary root,
  // each pseudo-ordinary path node, each quasi-ordinary leaf, and the final
  // ordinary semigroup of genus gamma.
  table.n[1] += 1;
  for (int g = 2; g <= gamma; ++g) table.n[static_cast<std::size_t>(g)] += 1;
  for (int m = 3; m <= gamma; ++m) {
    table.n[static_cast<std::size_t>(m - 1)] += 1;  // ordinary root
    const int path_end = std::min(m, gamma + 2 - m);
    for (int u = 2; u <= path_end; ++u)
      table.n[static_cast<std::size_t>(m + u - 2)] += 1;  // Lambda_u
    table.n[static_cast<std::size_t>(m)] += 1;  // quasi-ordinary leaf
  }
  table.n[static_cast<std::size_t>(gamma)] += 1;  // ordinary of genus gamma

  std::vector<std::function<void(std::vector<std::uint64_t>&)>> tasks;
  const CheckOptions opt{};
  for (int m = 3; m <= gamma; ++m) {
    const int path_end = std::min(m, gamma + 2 - m);
    for (int u = 2; u <= path_end - 1; ++u) {
      tasks.push_back([m, u, gamma, opt](std::vector<std::uint64_t>& acc) {
        detail::Arena a(gamma);
        std::vector<std::uint8_t> D(static_cast<std::size_t>(a.cap), 0);
        detail::write_pseudo_chain(D.data(), m, u);
        auto visit = [&acc](const std::uint8_t*, int, int, int g) {
          ++acc[static_cast<std::size_t>(g)];
        };
        detail::pseudo_rec(a, 0, D.data(), m, u, m + u, m - 2, gamma, visit, opt);
      });
    }
    if (path_end < gamma + 2 - m) {
      tasks.push_back([m, gamma, opt](std::vector<std::uint64_t>& acc) {
        detail::Arena a(gamma);
        std::vector<std::uint8_t> D(static_cast<std::size_t>(a.cap), 0);
        detail::write_pseudo_chain(D.data(), m, m);
        auto visit = [&acc](const std::uint8_t*, int, int, int g) {
          ++acc[static_cast<std::size_t>(g)];
        };
        detail::pseudo_rec(a, 0, D.data(), m, m, 2 * m, m - 1, gamma, visit, opt);
      });
    }
    if (m >= 4) {
      tasks.push_back([m, gamma, opt](std::vector<std::uint64_t>& acc) {
        detail::Arena a(gamma);
        std::vector<std::uint8_t> D(static_cast<std::size_t>(a.cap), 0);
        for (int j = 2; j < m; ++j) D[j] = 1;
        auto visit = [&acc](const std::uint8_t*, int, int, int g) {
          ++acc[static_cast<std::size_t>(g)];
        };
        int r = m - 3;
        for (int s = 2; s <= m - 2; ++s) {
          detail::rgd_rec(a, 0, D.data(), m, 1, m + s + 1, m, r, gamma, visit, opt);
          --r;
          D[s] = 0;
        }
      });
    }
  }
  detail::run_tasks(tasks, cfg.threads, table.n);
  return table;
}

// n_gamma alone, with the counting shortcuts: the four boundary subtrees are
// folded into the initial value, each remaining T_m is explored only to level
// gamma-2 with the children's right-generator counts summed there, and the
// pseudo-ordinary path node landing exactly on level gamma-2 is replaced by
// the closed grandchildren formula.
inline std::uint64_t count_genus(const ExploreConfig& cfg) {
  detail::validate_config(cfg);
  const int gamma = cfg.gamma;
  if (gamma < 4) return count_all(cfg).at(gamma);

  std::uint64_t total = 2;  // the T_2 and T_{gamma+1} singletons
  total += static_cast<std::uint64_t>(gamma - 1);  // T_gamma
  total += static_cast<std::uint64_t>(gamma - 2) +
           static_cast<std::uint64_t>(gamma - 4) * static_cast<std::uint64_t>(gamma - 3) / 2;

  std::vector<std::function<void(std::vector<std::uint64_t>&)>> tasks;
  const CheckOptions opt{};
  for (int m = 3; m <= gamma - 2; ++m) {
    tasks.push_back([m, gamma, opt](std::vector<std::uint64_t>& acc) {
      acc[0] += detail::count_quasi_task(m, gamma, opt);
    });
    if (2 * m < gamma) {
      for (int u = 2; u <= m; ++u) {
        tasks.push_back([m, u, gamma, opt](std::vector<std::uint64_t>& acc) {
          acc[0] += detail::count_pseudo_task(m, u, gamma, opt);
        });
      }
    } else {
      for (int u = 2; u <= gamma - m - 1; ++u) {
        tasks.push_back([m, u, gamma, opt](std::vector<std::uint64_t>& acc) {
          acc[0] += detail::count_pseudo_task(m, u, gamma, opt);
        });
      }
      total += pseudo_grandchildren(m, gamma - m);  // Lambda_{gamma-m} at level gamma-2
    }
  }
  std::vector<std::uint64_t> partial(1, 0);
  detail::run_tasks(tasks, cfg.threads, partial);
  return total + partial[0];
}

}  // namespace sgtree

#endif  // SGTREE_COUNTER_HPP_
