#pragma once

// Shared test utilities: independent validity checkers (deliberately plain
// loops, no library shortcuts) and a naive recursive Hamiltonicity oracle
// for cross-checking the bitmask DP at tiny orders.

#include <vector>

#include "spansub/digraph.hpp"
#include "spansub/rng.hpp"

namespace testutil {

using spansub::Digraph;
using spansub::Vertex;

inline bool all_distinct(const std::vector<Vertex>& seq, int n) {
  std::vector<bool> seen(n, false);
  for (Vertex v : seq) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

inline bool arc_path(const Digraph& d, const std::vector<Vertex>& seq) {
  for (std::size_t i = 0; i + 1 < seq.size(); ++i)
    if (!d.has_arc(seq[i], seq[i + 1])) return false;
  return true;
}

inline bool valid_ham_cycle(const Digraph& d, const std::vector<Vertex>& seq) {
  if (static_cast<int>(seq.size()) != d.order() || d.order() < 2) return false;
  if (!all_distinct(seq, d.order())) return false;
  if (!arc_path(d, seq)) return false;
  return d.has_arc(seq.back(), seq.front());
}

inline bool valid_ham_path(const Digraph& d, const std::vector<Vertex>& seq) {
  if (static_cast<int>(seq.size()) != d.order()) return false;
  if (!all_distinct(seq, d.order())) return false;
  return arc_path(d, seq);
}

namespace detail {

inline bool extend_cycle(const Digraph& d, std::vector<Vertex>& seq, std::vector<bool>& used) {
  if (static_cast<int>(seq.size()) == d.order()) return d.has_arc(seq.back(), seq.front());
  for (Vertex v = 0; v < d.order(); ++v) {
    if (used[v] || !d.has_arc(seq.back(), v)) continue;
    used[v] = true;
    seq.push_back(v);
    if (extend_cycle(d, seq, used)) return true;
    seq.pop_back();
    used[v] = false;
  }
  return false;
}

inline bool extend_path(const Digraph& d, std::vector<Vertex>& seq, std::vector<bool>& used) {
  if (static_cast<int>(seq.size()) == d.order()) return true;
  for (Vertex v = 0; v < d.order(); ++v) {
    if (used[v] || !d.has_arc(seq.back(), v)) continue;
    used[v] = true;
    seq.push_back(v);
    if (extend_path(d, seq, used)) return true;
    seq.pop_back();
    used[v] = false;
  }
  return false;
}

}  // namespace detail

inline bool naive_ham_cycle_exists(const Digraph& d) {
  if (d.order() < 2) return false;
  std::vector<Vertex> seq{0};
  std::vector<bool> used(d.order(), false);
  used[0] = true;
  return detail::extend_cycle(d, seq, used);
}

inline bool naive_ham_path_exists(const Digraph& d) {
  if (d.order() == 0) return false;
  if (d.order() == 1) return true;
  for (Vertex s = 0; s < d.order(); ++s) {
    std::vector<Vertex> seq{s};
    std::vector<bool> used(d.order(), false);
    used[s] = true;
    if (detail::extend_path(d, seq, used)) return true;
  }
  return false;
}

inline Digraph complete_bidirected(int n) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v) d.add_arc(u, v);
  return d;
}

inline Digraph directed_cycle(int n) {
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u) d.add_arc(u, (u + 1) % n);
  return d;
}

/// Each ordered pair an arc independently with probability p.
inline Digraph random_digraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(spansub::mix_seed(seed, 0x7465'7374ULL));
  const std::uint64_t threshold =
      p >= 1.0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(p * 18446744073709549568.0);
  Digraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng() <= threshold) d.add_arc(u, v);
  return d;
}

}  // namespace testutil
