#pragma once

// End-to-end solver: stage the absorbing path, the reservoir, branch
// vertices and the Hamiltonian spine, route every pattern arc through fresh
// reservoir vertices, absorb the leftovers, and hand back a certificate that
// has already passed the independent verifier.
//
// Stages per attempt:
//   1. absorbing path A (endpoints w1, w2)
//   2. D1 = D - V(A) + {w1,w2}, semi-degree floor (1/2 + eps/2)|V(D1)|
//   3. reservoir R inside D1, sized to m+2 connections plus what A can
//      absorb; w1, w2 excluded
//   4. D2 = D - (V(A) ∪ R), floor (1/2 + eps/4)|V(D2)|
//   5. random distinct branch vertices in D2; D3 = D2 - branch,
//      floor |V(D3)|/2
//   6. Hamiltonian path u1..u2 through D3
//   7. the long route branch(x1) z1 u1..u2 z2 w1..A..w2 z3 branch(x2), and
//      one route branch(a) z v branch(b) per remaining arc
//   8. leftover reservoir vertices absorbed into A
// Any stage failure restarts the attempt with fresh randomness. Hosts of
// order <= 12 go straight to the exhaustive oracle: the staged machinery
// needs room that tiny instances cannot offer.

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spansub/absorber.hpp"
#include "spansub/certificate.hpp"
#include "spansub/connector.hpp"
#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/hamilton.hpp"
#include "spansub/instances.hpp"
#include "spansub/oracle.hpp"
#include "spansub/pattern.hpp"
#include "spansub/rng.hpp"

namespace spansub {

struct SolverParams {
  double epsilon = 0.15;
  double C = 50.0;
  double alpha = 0.12;
  double beta = 0.02;
  double gamma = 0.004;
  std::uint64_t seed = 0;
  int retries = 10;
  long long ham_budget = 0;
};

struct SolveInfo {
  int attempts = 0;
  std::string failed_stage;  // last failing stage, empty if first attempt succeeded
};

namespace detail {

struct StageFail : Error {
  using Error::Error;
};

inline void validate_params(const SolverParams& p) {
  if (!(0.0 < p.gamma && p.gamma < p.beta && p.beta < p.alpha && p.alpha < p.epsilon && p.epsilon < 1.0))
    throw PreconditionViolated("parameters must satisfy 0 < gamma < beta < alpha < epsilon < 1");
  if (p.C <= 0.0) throw PreconditionViolated("C must be positive");
  if (p.retries < 0) throw PreconditionViolated("retries must be nonnegative");
}

}  // namespace detail

/// Both orientations of every arc/edge of g.
inline Digraph bidirect(const Digraph& g) {
  Digraph d(g.order());
  for (const Arc& a : g.arcs()) {
    if (!d.has_arc(a.from, a.to)) d.add_arc(a.from, a.to);
    if (!d.has_arc(a.to, a.from)) d.add_arc(a.to, a.from);
  }
  return d;
}

inline SubdivisionCertificate solve(const Digraph& d, const PatternDigraph& h, const SolverParams& p,
                                    SolveInfo* info = nullptr) {
  detail::validate_params(p);
  const int n = d.order();
  const int m = h.arc_count();
  const int k = h.vertex_count();

  if (n <= kOracleOrderLimit) {
    auto cert = brute_force_subdivision(d, h);
    if (info) info->attempts = 1;
    if (!cert) {
      if (info) info->failed_stage = "oracle";
      throw SolveFailed("oracle", "no spanning subdivision exists", 1);
    }
    return *cert;
  }

  const int delta = min_semi_degree(d);
  if (delta < semi_degree_floor(n, p.epsilon))
    throw PreconditionViolated("min semi-degree " + std::to_string(delta) + " < ceil((1/2+eps)n) = " +
                               std::to_string(semi_degree_floor(n, p.epsilon)));
  if (static_cast<double>(n) < p.C * m)
    throw PreconditionViolated("n = " + std::to_string(n) + " below C*m = " + std::to_string(p.C * m));

  std::string last_stage = "absorber";
  std::string last_msg = "not attempted";
  int attempts = 0;

  for (int attempt = 0; attempt <= p.retries; ++attempt) {
    ++attempts;
    std::string stage = "absorber";
    try {
      AbsorbingPath a = build_absorbing_path(d, p.alpha, p.beta, p.epsilon,
                                             mix_seed(p.seed, 16ULL * attempt + 1));
      auto [w1, w2] = a.endpoints();
      const VertexSet va = a.vertex_set();

      stage = "degree-d1";
      VertexSet keep_ends(n);
      keep_ends.set(w1);
      keep_ends.set(w2);
      InducedDigraph d1 = remove_add(d, va, keep_ends);
      const int n1 = d1.graph.order();
      if (min_semi_degree(d1.graph) < semi_degree_floor(n1, p.epsilon / 2))
        throw detail::StageFail("semi-degree of D1 fell below (1/2+eps/2)|V(D1)|");

      stage = "reservoir";
      const int lfree = a.free_slot_count();
      const int absorb_cap = static_cast<int>(std::ceil(p.beta * n - 1e-9));
      const int slack = std::max(0, std::min(lfree, absorb_cap) - 1);
      const int rtarget = (m + 2) + slack;
      if (rtarget >= n1 / 2) throw detail::StageFail("reservoir target would swallow half of D1");
      const double alpha_r = (rtarget + 0.5) / n1;
      const int want_floor = static_cast<int>(std::ceil(p.gamma * n1 - 1e-9));
      const int floor_r = std::min(
          want_floor, detail::feasible_coverage_floor(rtarget, p.epsilon, n1 * (n1 - 1)));
      Reservoir r = build_reservoir(d1.graph, alpha_r, static_cast<double>(floor_r) / n1,
                                    p.epsilon / 2, mix_seed(p.seed, 16ULL * attempt + 2))
                        .relabeled(d1.to_original, n);
      r = exclude(std::move(r), keep_ends);
      if (r.size() < m + 2) throw detail::StageFail("reservoir too small after endpoint exclusion");
      if (r.size() - (m + 2) > std::min(lfree, absorb_cap))
        throw detail::StageFail("reservoir leftover would exceed absorb capacity");

      stage = "degree-d2";
      const VertexSet removed2 = va | r.members();
      InducedDigraph d2 = remove_add(d, removed2, VertexSet(n));
      const int n2 = d2.graph.order();
      if (n2 < k + 2) throw detail::StageFail("not enough vertices left for branch choice");
      if (min_semi_degree(d2.graph) < semi_degree_floor(n2, p.epsilon / 4))
        throw detail::StageFail("semi-degree of D2 fell below (1/2+eps/4)|V(D2)|");

      stage = "degree-d3";
      std::mt19937_64 rng(mix_seed(p.seed, 16ULL * attempt + 3));
      std::vector<Vertex> pool = d2.to_original;
      shuffle_inplace(rng, pool);
      std::vector<Vertex> branch(pool.begin(), pool.begin() + k);
      VertexSet branch_set(n);
      for (Vertex v : branch) branch_set.set(v);
      InducedDigraph d3 = remove_add(d, removed2 | branch_set, VertexSet(n));
      const int n3 = d3.graph.order();
      if (n3 < 2) throw detail::StageFail("D3 vanished");
      if (min_semi_degree(d3.graph) < (n3 + 1) / 2)
        throw detail::StageFail("semi-degree of D3 fell below |V(D3)|/2");

      stage = "hamilton";
      std::vector<Vertex> spine =
          d3.originals(hamiltonian_path(d3.graph, mix_seed(p.seed, 16ULL * attempt + 4), p.ham_budget));
      const Vertex u1 = spine.front();
      const Vertex u2 = spine.back();

      stage = "routing";
      const Arc long_arc = h.arcs()[0];
      const Vertex vstart = branch[long_arc.from];
      const Vertex vend = branch[long_arc.to];
      const Vertex z1 = connect_through(d, r, vstart, u1);
      const Vertex z2 = connect_through(d, r, u2, w1);
      const Vertex z3 = connect_through(d, r, w2, vend);
      std::vector<Vertex> ze(m, -1);
      for (int j = 1; j < m; ++j)
        ze[j] = connect_through(d, r, branch[h.arcs()[j].from], branch[h.arcs()[j].to]);

      stage = "absorb";
      std::vector<Vertex> a_seq = absorb(d, a, r.unused());

      SubdivisionCertificate cert;
      cert.branch = branch;
      cert.routes.assign(m, {});
      auto& lr = cert.routes[0];
      lr.push_back(vstart);
      lr.push_back(z1);
      lr.insert(lr.end(), spine.begin(), spine.end());
      lr.push_back(z2);
      lr.insert(lr.end(), a_seq.begin(), a_seq.end());
      lr.push_back(z3);
      lr.push_back(vend);
      for (int j = 1; j < m; ++j)
        cert.routes[j] = {branch[h.arcs()[j].from], ze[j], branch[h.arcs()[j].to]};

      stage = "self-verify";
      CertificateReport rep = verify_certificate(d, h, cert);
      if (!rep.ok)
        throw detail::StageFail(std::string("own certificate rejected: ") + to_string(rep.violation));

      if (info) {
        info->attempts = attempts;
        if (attempt > 0) info->failed_stage = last_stage;
      }
      return cert;
    } catch (const Error& e) {
      last_stage = stage;
      last_msg = e.what();
    }
  }
  if (info) {
    info->attempts = attempts;
    info->failed_stage = last_stage;
  }
  throw SolveFailed(last_stage, last_msg, attempts);
}

/// Undirected convenience wrapper: both inputs are bidirected, then solved
/// as digraphs; the returned certificate lives in the digraph world.
inline SubdivisionCertificate solve_undirected(const Digraph& g, const Digraph& h_undirected,
                                               const SolverParams& p, SolveInfo* info = nullptr) {
  return solve(bidirect(g), PatternDigraph(bidirect(h_undirected)), p, info);
}

}  // namespace spansub
