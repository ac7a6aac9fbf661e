#pragma once

// Spanning-subdivision certificates and their independent verifier. The
// verifier re-derives every claim from the raw digraph; it shares no state
// with the solver and never throws on malformed input.

#include <string>
#include <vector>

#include "spansub/digraph.hpp"
#include "spansub/pattern.hpp"

namespace spansub {

// branch[i] = host vertex realizing pattern vertex i; routes[j] = directed
// vertex sequence realizing pattern arc arcs()[j], endpoints included.
struct SubdivisionCertificate {
  std::vector<Vertex> branch;
  std::vector<std::vector<Vertex>> routes;
};

enum class CertViolation {
  kNone,
  kMalformed,       // wrong shapes, out-of-range vertices, empty routes
  kBranch,          // branch map not injective
  kRouteEndpoints,  // route does not start/end at its arc's branch vertices
  kRouteRepeat,     // a vertex appears twice within one route
  kRouteArc,        // a consecutive pair is not an arc of D in route order
  kRouteOverlap,    // internal vertex shared across routes or with a branch vertex
  kNotSpanning,     // some host vertex appears in no route and no branch
};

inline const char* to_string(CertViolation v) {
  switch (v) {
    case CertViolation::kNone: return "ok";
    case CertViolation::kMalformed: return "malformed";
    case CertViolation::kBranch: return "branch-not-injective";
    case CertViolation::kRouteEndpoints: return "route-endpoints";
    case CertViolation::kRouteRepeat: return "route-repeat";
    case CertViolation::kRouteArc: return "route-arc";
    case CertViolation::kRouteOverlap: return "route-overlap";
    case CertViolation::kNotSpanning: return "not-spanning";
  }
  return "?";
}

// First violation class found, with every instance of that class.
struct CertificateReport {
  bool ok = false;
  CertViolation violation = CertViolation::kNone;
  std::vector<std::string> instances;
};

inline CertificateReport verify_certificate(const Digraph& d, const PatternDigraph& h,
                                            const SubdivisionCertificate& cert) {
  CertificateReport rep;
  const int n = d.order();
  const int k = h.vertex_count();
  const int m = h.arc_count();

  auto flag = [&](CertViolation v, std::string what) {
    if (rep.violation == CertViolation::kNone) rep.violation = v;
    if (rep.violation == v) rep.instances.push_back(std::move(what));
  };

  // shape and ranges
  if (static_cast<int>(cert.branch.size()) != k)
    flag(CertViolation::kMalformed, "branch map has " + std::to_string(cert.branch.size()) + " entries, pattern has " + std::to_string(k));
  if (static_cast<int>(cert.routes.size()) != m)
    flag(CertViolation::kMalformed, "certificate has " + std::to_string(cert.routes.size()) + " routes, pattern has " + std::to_string(m) + " arcs");
  for (std::size_t i = 0; i < cert.branch.size(); ++i)
    if (cert.branch[i] < 0 || cert.branch[i] >= n)
      flag(CertViolation::kMalformed, "branch " + std::to_string(i) + " out of range");
  for (std::size_t j = 0; j < cert.routes.size(); ++j) {
    if (cert.routes[j].size() < 2) flag(CertViolation::kMalformed, "route " + std::to_string(j) + " shorter than one arc");
    for (Vertex v : cert.routes[j])
      if (v < 0 || v >= n) flag(CertViolation::kMalformed, "route " + std::to_string(j) + " has out-of-range vertex");
  }
  if (rep.violation != CertViolation::kNone) return rep;

  // branch injectivity
  {
    VertexSet seen(n);
    for (int i = 0; i < k; ++i) {
      if (seen.test(cert.branch[i]))
        flag(CertViolation::kBranch, "host vertex " + std::to_string(cert.branch[i]) + " assigned to two pattern vertices");
      seen.set(cert.branch[i]);
    }
  }
  if (rep.violation != CertViolation::kNone) return rep;

  // endpoints
  for (int j = 0; j < m; ++j) {
    const Arc& a = h.arcs()[j];
    const auto& r = cert.routes[j];
    if (r.front() != cert.branch[a.from] || r.back() != cert.branch[a.to])
      flag(CertViolation::kRouteEndpoints,
           "route " + std::to_string(a.from) + "->" + std::to_string(a.to) + " does not join its branch vertices");
  }
  if (rep.violation != CertViolation::kNone) return rep;

  // each route is a path: no vertex twice within it
  for (int j = 0; j < m; ++j) {
    VertexSet seen(n);
    for (Vertex v : cert.routes[j]) {
      if (seen.test(v))
        flag(CertViolation::kRouteRepeat, "route " + std::to_string(j) + " repeats vertex " + std::to_string(v));
      seen.set(v);
    }
  }
  if (rep.violation != CertViolation::kNone) return rep;

  // arcs present, traversed in their orientation
  for (int j = 0; j < m; ++j) {
    const auto& r = cert.routes[j];
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      if (!d.has_arc(r[i], r[i + 1]))
        flag(CertViolation::kRouteArc, "route " + std::to_string(j) + " uses missing arc " + std::to_string(r[i]) + "->" + std::to_string(r[i + 1]));
  }
  if (rep.violation != CertViolation::kNone) return rep;

  // internal vertices pairwise disjoint across routes and from branch vertices
  {
    VertexSet branch_set(n);
    for (int i = 0; i < k; ++i) branch_set.set(cert.branch[i]);
    VertexSet internal_seen(n);
    for (int j = 0; j < m; ++j) {
      const auto& r = cert.routes[j];
      for (std::size_t i = 1; i + 1 < r.size(); ++i) {
        Vertex v = r[i];
        if (branch_set.test(v))
          flag(CertViolation::kRouteOverlap, "branch vertex " + std::to_string(v) + " appears inside route " + std::to_string(j));
        else if (internal_seen.test(v))
          flag(CertViolation::kRouteOverlap, "vertex " + std::to_string(v) + " is internal to two routes");
        internal_seen.set(v);
      }
    }
  }
  if (rep.violation != CertViolation::kNone) return rep;

  // spanning
  {
    VertexSet covered(n);
    for (int i = 0; i < k; ++i) covered.set(cert.branch[i]);
    for (const auto& r : cert.routes)
      for (Vertex v : r) covered.set(v);
    if (covered.count() != n) {
      VertexSet missing = d.all_vertices() - covered;
      missing.for_each([&](Vertex v) { flag(CertViolation::kNotSpanning, "vertex " + std::to_string(v) + " not covered"); });
    }
  }
  if (rep.violation != CertViolation::kNone) return rep;

  rep.ok = true;
  return rep;
}

}  // namespace spansub
