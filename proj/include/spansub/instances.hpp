#pragma once

// Instance generators: random digraphs meeting a semi-degree floor, the
// tight bidirected complete bipartite family, and random patterns. All are
// pure functions of their arguments.

#include <cmath>
#include <cstdint>
#include <vector>

#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/pattern.hpp"
#include "spansub/rng.hpp"

namespace spansub {

inline int semi_degree_floor(int n, double epsilon) {
  return static_cast<int>(std::ceil((0.5 + epsilon) * n));
}

/// Random digraph with min_semi_degree >= ceil((1/2+epsilon)n): Bernoulli
/// arcs at rate 1/2+epsilon+margin, then deficient vertices repaired by
/// adding random missing arcs.
inline Digraph gen_random_semidegree(int n, double epsilon, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("gen_random_semidegree requires n >= 4");
  if (epsilon <= 0.0 || epsilon >= 0.5) throw std::invalid_argument("epsilon must lie in (0, 1/2)");
  constexpr double kMargin = 0.05;
  const double p = 0.5 + epsilon + kMargin;
  if (p > 1.0) throw InfeasibleDensity("arc probability exceeds 1");
  const int target = semi_degree_floor(n, epsilon);
  if (target > n - 1) throw InfeasibleDensity("required semi-degree exceeds n-1");

  std::mt19937_64 rng(mix_seed(seed, 0x6469'6772'6170'68ULL));
  Digraph d(n);
  const std::uint64_t threshold =
      p >= 1.0 ? ~std::uint64_t{0} : static_cast<std::uint64_t>(p * 18446744073709549568.0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && rng() <= threshold) d.add_arc(u, v);

  // repair pass: lift any deficient vertex to the target with random missing arcs
  for (Vertex v = 0; v < n; ++v) {
    while (d.out_degree(v) < target) {
      std::vector<Vertex> missing;
      for (Vertex w = 0; w < n; ++w)
        if (w != v && !d.has_arc(v, w)) missing.push_back(w);
      d.add_arc(v, missing[uniform_below(rng, static_cast<int>(missing.size()))]);
    }
    while (d.in_degree(v) < target) {
      std::vector<Vertex> missing;
      for (Vertex w = 0; w < n; ++w)
        if (w != v && !d.has_arc(w, v)) missing.push_back(w);
      d.add_arc(missing[uniform_below(rng, static_cast<int>(missing.size()))], v);
    }
  }
  return d;
}

/// Bidirected complete bipartite digraph with sides |A| = floor(n/2)-(m+k)
/// and |B| = n-|A|; its semi-degree |A| is maximal among hosts with no
/// spanning subdivision of an m-arc k-vertex pattern.
inline Digraph gen_extremal(int n, int m, int k) {
  const int a = n / 2 - (m + k);
  if (a <= 0) throw InvalidSizes("gen_extremal requires floor(n/2) > m + k");
  Digraph d(n);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < n; ++v) {
      d.add_arc(u, v);
      d.add_arc(v, u);
    }
  return d;
}

/// Simple digraph with exactly m arcs and no isolated vertices; the vertex
/// count emerges from sampling over a small pool, at most 2m.
inline PatternDigraph gen_random_pattern(int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("gen_random_pattern requires m >= 1");
  // smallest pool admitting 2m arcs, plus one spare vertex
  int pool = 2;
  while (static_cast<long long>(pool) * (pool - 1) < 2LL * m) ++pool;
  pool = std::min(pool + 1, 2 * m);
  pool = std::max(pool, 2);

  std::mt19937_64 rng(mix_seed(seed, 0x7061'7474'6572'6eULL));
  Digraph h(pool);
  int placed = 0;
  while (placed < m) {
    Vertex u = uniform_below(rng, pool);
    Vertex v = uniform_below(rng, pool);
    if (u == v || h.has_arc(u, v)) continue;
    h.add_arc(u, v);
    ++placed;
  }

  // drop isolated pool vertices, compacting labels
  std::vector<int> relabel(pool, -1);
  int kept = 0;
  for (Vertex v = 0; v < pool; ++v)
    if (h.out_degree(v) > 0 || h.in_degree(v) > 0) relabel[v] = kept++;
  Digraph compact(kept);
  for (const Arc& arc : h.arcs()) compact.add_arc(relabel[arc.from], relabel[arc.to]);
  return PatternDigraph(std::move(compact));
}

}  // namespace spansub
