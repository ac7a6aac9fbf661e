#pragma once

// Exhaustive spanning-subdivision search at toy scale: every injective
// branch assignment, every internally disjoint route system, with a
// spanning check at the end. Ground truth for the solver and verifier.

#include <optional>
#include <string>
#include <vector>

#include "spansub/certificate.hpp"
#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/pattern.hpp"

namespace spansub {

inline constexpr int kOracleOrderLimit = 12;

namespace detail {

struct SubdivisionSearch {
  const Digraph& d;
  const PatternDigraph& h;
  int n, k, m;
  std::vector<Vertex> branch;
  VertexSet used;
  std::vector<std::vector<Vertex>> routes;

  SubdivisionSearch(const Digraph& dg, const PatternDigraph& hg)
      : d(dg), h(hg), n(dg.order()), k(hg.vertex_count()), m(hg.arc_count()),
        branch(k, -1), used(dg.order()), routes(m) {}

  bool assign(int i) {
    if (i == k) return route(0);
    for (Vertex v = 0; v < n; ++v) {
      if (used.test(v)) continue;
      if (d.out_degree(v) < h.digraph().out_degree(i) || d.in_degree(v) < h.digraph().in_degree(i))
        continue;
      branch[i] = v;
      used.set(v);
      if (assign(i + 1)) return true;
      used.reset(v);
    }
    return false;
  }

  bool route(int j) {
    if (j == m) return used.count() == n;
    const Arc& a = h.arcs()[j];
    routes[j].clear();
    routes[j].push_back(branch[a.from]);
    return extend(j, branch[a.from], branch[a.to]);
  }

  bool extend(int j, Vertex cur, Vertex target) {
    if (d.has_arc(cur, target)) {
      routes[j].push_back(target);
      if (route(j + 1)) return true;
      routes[j].pop_back();
    }
    VertexSet cands = d.out(cur) - used;
    for (Vertex v = cands.first(); v >= 0; v = cands.next(v)) {
      used.set(v);
      routes[j].push_back(v);
      if (extend(j, v, target)) return true;
      routes[j].pop_back();
      used.reset(v);
    }
    return false;
  }
};

}  // namespace detail

inline std::optional<SubdivisionCertificate> brute_force_subdivision(const Digraph& d, const PatternDigraph& h) {
  if (d.order() > kOracleOrderLimit)
    throw InstanceTooLarge("exhaustive search capped at order " + std::to_string(kOracleOrderLimit));
  if (h.vertex_count() > d.order()) return std::nullopt;

  detail::SubdivisionSearch search(d, h);
  if (!search.assign(0)) return std::nullopt;
  SubdivisionCertificate cert;
  cert.branch = std::move(search.branch);
  cert.routes = std::move(search.routes);
  return cert;
}

}  // namespace spansub
