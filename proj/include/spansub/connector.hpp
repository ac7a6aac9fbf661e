#pragma once

// Reservoir of connector vertices: a small set R such that every ordered
// vertex pair (u,v) keeps at least `coverage` vertices w in R with both arcs
// u->w and w->v. Routing consumes one reservoir vertex per connection.

#include <cstdint>
#include <string>
#include <utility>

#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/instances.hpp"
#include "spansub/tuple_system.hpp"

namespace spansub {

// Arity-1 system: indices are ordered distinct vertex pairs, a ground
// element w serves (u,v) when u->w->v.
struct PairCommonSystem {
  const Digraph* d = nullptr;
  double dens = 0.0;

  int index_count() const { return d->order() * (d->order() - 1); }
  int ground_size() const { return d->order(); }
  int arity() const { return 1; }
  double density() const { return dens; }

  std::pair<Vertex, Vertex> pair_of(int x) const {
    const int n = d->order();
    Vertex u = x / (n - 1);
    int r = x % (n - 1);
    Vertex v = r + (r >= u ? 1 : 0);
    return {u, v};
  }

  bool member(int x, std::span<const Vertex> z) const {
    auto [u, v] = pair_of(x);
    Vertex w = z[0];
    return w != u && w != v && d->has_arc(u, w) && d->has_arc(w, v);
  }

  bool supported(std::span<const Vertex>) const { return true; }
};

class Reservoir {
 public:
  Reservoir() = default;
  Reservoir(VertexSet members, int coverage)
      : members_(std::move(members)), used_(members_.universe()), coverage_(coverage) {}

  const VertexSet& members() const { return members_; }
  const VertexSet& used() const { return used_; }
  VertexSet unused() const { return members_ - used_; }
  int size() const { return members_.count(); }
  int coverage() const { return coverage_; }

  void mark_used(Vertex v) { used_.set(v); }

  /// Same reservoir under a vertex relabeling (host order host_n).
  Reservoir relabeled(std::span<const Vertex> to_host, int host_n) const {
    VertexSet m(host_n);
    members_.for_each([&](Vertex v) { m.set(to_host[v]); });
    Reservoir r(std::move(m), coverage_);
    used_.for_each([&](Vertex v) { r.used_.set(to_host[v]); });
    return r;
  }

 private:
  VertexSet members_;
  VertexSet used_;
  int coverage_ = 0;
};

/// Reservoir with |R| <= alpha*n and verified per-pair coverage ceil(beta*n),
/// built by family selection over the pair/common-neighbour system with
/// nominal density 2*epsilon.
inline Reservoir build_reservoir(const Digraph& d, double alpha, double beta, double epsilon,
                                 std::uint64_t seed, int max_retries = kDefaultFamilyRetries) {
  const int n = d.order();
  if (n < 2) throw InvalidDegree("reservoir needs at least two vertices");
  if (min_semi_degree(d) < semi_degree_floor(n, epsilon))
    throw InvalidDegree("min semi-degree " + std::to_string(min_semi_degree(d)) + " below ceil((1/2+eps)n) = " +
                        std::to_string(semi_degree_floor(n, epsilon)));

  PairCommonSystem sys{&d, 2.0 * epsilon};
  TupleFamily family = select_family(sys, alpha, beta, mix_seed(seed, 0x7265'73ULL), max_retries);
  VertexSet members(n);
  for (const Tuple& z : family) members.set(z[0]);
  return Reservoir(std::move(members), static_cast<int>(std::ceil(beta * n - 1e-9)));
}

/// Reservoir minus S; the guaranteed coverage drops by |S ∩ R| exactly.
inline Reservoir exclude(Reservoir r, const VertexSet& s) {
  int removed = VertexSet::intersection_count(r.members(), s);
  VertexSet m = r.members() - s;
  Reservoir out(std::move(m), r.coverage() - removed);
  r.used().for_each([&](Vertex v) {
    if (out.members().test(v)) out.mark_used(v);
  });
  return out;
}

/// Smallest-id unused reservoir vertex z with u->z->v; marks z consumed.
inline Vertex connect_through(const Digraph& d, Reservoir& r, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("connect_through requires u != v");
  VertexSet candidates = common_out_in(d, u, v);
  candidates &= r.members();
  candidates -= r.used();
  Vertex z = candidates.first();
  if (z < 0)
    throw ReservoirExhausted("no unused common neighbour of (" + std::to_string(u) + "," + std::to_string(v) +
                             ") left in the reservoir");
  r.mark_used(z);
  return z;
}

}  // namespace spansub
