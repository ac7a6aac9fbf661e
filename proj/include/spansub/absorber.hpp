#pragma once

// Absorbing path: a short directed path v1 w1 x1 v2 w2 x2 ... vl wl whose
// slot arcs vi->wi can each be rerouted through one extra vertex u (when
// vi->u and u->wi exist), absorbing u while preserving the endpoints.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/instances.hpp"
#include "spansub/tuple_system.hpp"

namespace spansub {

/// All ordered pairs (v,w) with v->u, u->w and v->w; entries are distinct
/// from each other and from u automatically (no loops).
inline std::vector<std::pair<Vertex, Vertex>> good_tuples_for(const Digraph& d, Vertex u) {
  std::vector<std::pair<Vertex, Vertex>> out;
  d.in(u).for_each([&](Vertex v) {
    VertexSet ws = d.out(u) & d.out(v);
    ws.for_each([&](Vertex w) { out.emplace_back(v, w); });
  });
  return out;
}

inline long long good_tuple_count(const Digraph& d, Vertex u) {
  long long cnt = 0;
  d.in(u).for_each([&](Vertex v) { cnt += VertexSet::intersection_count(d.out(u), d.out(v)); });
  return cnt;
}

// Arity-2 system: indices are centers u, tuples are good pairs for u. The
// support is the set of pairs with the slot arc v->w present, since a pair
// no center can use never helps coverage and cannot sit on the path.
struct GoodTupleSystem {
  const Digraph* d = nullptr;
  double dens = 0.0;

  int index_count() const { return d->order(); }
  int ground_size() const { return d->order(); }
  int arity() const { return 2; }
  double density() const { return dens; }

  bool member(int u, std::span<const Vertex> z) const {
    Vertex v = z[0], w = z[1];
    if (v == u || w == u) return false;
    return d->has_arc(v, u) && d->has_arc(u, w) && d->has_arc(v, w);
  }

  bool supported(std::span<const Vertex> z) const { return d->has_arc(z[0], z[1]); }
};

class AbsorbingPath {
 public:
  AbsorbingPath() = default;

  /// Assemble from an explicit spine v1 w1 x1 ... vl wl; validates the arc
  /// chain. Mostly useful for tests and tools.
  static AbsorbingPath from_parts(const Digraph& d, std::vector<Vertex> spine, double beta_request,
                                  int capacity_floor) {
    if (spine.size() < 2 || spine.size() % 3 != 2)
      throw std::invalid_argument("spine length must be 3l-1 for some l >= 1");
    for (std::size_t i = 0; i + 1 < spine.size(); ++i)
      if (!d.has_arc(spine[i], spine[i + 1]))
        throw std::invalid_argument("spine is not a directed path at position " + std::to_string(i));
    AbsorbingPath a;
    a.host_n_ = d.order();
    a.spine_ = std::move(spine);
    a.slot_absorbed_.assign((a.spine_.size() + 1) / 3, -1);
    a.beta_request_ = beta_request;
    a.capacity_floor_ = capacity_floor;
    return a;
  }

  int host_order() const { return host_n_; }
  const std::vector<Vertex>& spine() const { return spine_; }

  int slot_count() const { return static_cast<int>(slot_absorbed_.size()); }
  std::pair<Vertex, Vertex> slot(int i) const { return {spine_[3 * i], spine_[3 * i + 1]}; }
  bool slot_free(int i) const { return slot_absorbed_[i] < 0; }

  int free_slot_count() const {
    int c = 0;
    for (Vertex v : slot_absorbed_)
      if (v < 0) ++c;
    return c;
  }

  std::pair<Vertex, Vertex> endpoints() const { return {spine_.front(), spine_.back()}; }

  /// Verified per-outside-vertex floor on compatible slots at build time.
  int capacity_floor() const { return capacity_floor_; }
  double beta_request() const { return beta_request_; }

  bool slot_compatible(const Digraph& d, int i, Vertex u) const {
    auto [v, w] = slot(i);
    return u != v && u != w && d.has_arc(v, u) && d.has_arc(u, w);
  }

  int compatible_free_slot_count(const Digraph& d, Vertex u) const {
    int c = 0;
    for (int i = 0; i < slot_count(); ++i)
      if (slot_free(i) && slot_compatible(d, i, u)) ++c;
    return c;
  }

  /// Current path: the spine with each absorbed vertex spliced into its slot.
  std::vector<Vertex> sequence() const {
    std::vector<Vertex> seq;
    seq.reserve(spine_.size() + slot_absorbed_.size());
    for (int i = 0; i < slot_count(); ++i) {
      seq.push_back(spine_[3 * i]);
      if (slot_absorbed_[i] >= 0) seq.push_back(slot_absorbed_[i]);
      seq.push_back(spine_[3 * i + 1]);
      if (3 * i + 2 < static_cast<int>(spine_.size())) seq.push_back(spine_[3 * i + 2]);
    }
    return seq;
  }

  VertexSet vertex_set() const {
    VertexSet s(host_n_);
    for (Vertex v : spine_) s.set(v);
    for (Vertex v : slot_absorbed_)
      if (v >= 0) s.set(v);
    return s;
  }

  void consume_slot(int i, Vertex u) {
    assert(slot_free(i));
    slot_absorbed_[i] = u;
  }

 private:
  int host_n_ = 0;
  std::vector<Vertex> spine_;
  std::vector<Vertex> slot_absorbed_;  // per slot: absorbed vertex or -1
  double beta_request_ = 0.0;
  int capacity_floor_ = 0;
};

namespace detail {

// Largest verifiable coverage floor for a family of ~kept tuples whose
// per-index hit rate is `rate`: the min over `indices` binomials must clear
// it with comfortable probability.
inline int feasible_coverage_floor(double kept, double rate, int indices) {
  int trials = static_cast<int>(kept);
  if (trials <= 0 || rate <= 0.0) return 0;
  rate = std::min(rate, 1.0);
  int best = 0;
  for (int c = 1; c <= trials; ++c) {
    double miss = static_cast<double>(indices) * binom_tail_le(trials, rate, c - 1);
    if (miss <= 0.25)
      best = c;
    else
      break;
  }
  return best;
}

}  // namespace detail

/// Build the absorbing path: select a tuple-disjoint family of good pairs
/// (size cap alpha*n/3, so |V(A)| <= alpha*n), link consecutive slots with
/// greedily chosen fresh common neighbours, and record the verified
/// coverage floor. The requested beta is capped to what a family this size
/// can certifiably cover on this digraph; the measured good-pair density
/// drives the estimate.
inline AbsorbingPath build_absorbing_path(const Digraph& d, double alpha, double beta, double epsilon,
                                          std::uint64_t seed, int max_retries = kDefaultFamilyRetries) {
  const int n = d.order();
  if (n < 3) throw InvalidDegree("absorber needs at least three vertices");
  if (min_semi_degree(d) < semi_degree_floor(n, epsilon))
    throw InvalidDegree("min semi-degree below ceil((1/2+eps)n)");

  long long min_good = -1;
  for (Vertex u = 0; u < n; ++u) {
    long long c = good_tuple_count(d, u);
    if (min_good < 0 || c < min_good) min_good = c;
  }
  const double d_meas = static_cast<double>(min_good) / (static_cast<double>(n) * n);
  const double arc_density =
      static_cast<double>(d.arc_count()) / (static_cast<double>(n) * (n - 1));

  const double alpha_eff = 2.0 * alpha / 3.0;
  const int draws = static_cast<int>(std::floor(alpha_eff / 2.0 * n + 1e-9));
  if (draws < 1) throw FamilyNotFound("alpha too small: no room for even one slot");

  // expected family size after disjointification, then the floor it supports
  const double kept_est = std::max(1.0, draws - static_cast<double>(draws) * draws * 4.0 / (2.0 * n));
  const double cond_rate = arc_density > 0.0 ? std::min(1.0, d_meas / arc_density) : 0.0;
  int floor_cap = detail::feasible_coverage_floor(kept_est, cond_rate, n);
  floor_cap = std::min(floor_cap,
                       static_cast<int>(std::floor(alpha_eff / 4.0 * d_meas * n + 1e-9)));
  const int requested = static_cast<int>(std::ceil(beta * n - 1e-9));
  const int target = std::min(requested, std::max(0, floor_cap));

  GoodTupleSystem sys{&d, d_meas};
  std::string last = "no attempts";
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    TupleFamily family = select_family(sys, alpha_eff, static_cast<double>(target) / n,
                                       mix_seed(seed, 0xab'50'72ULL + attempt), max_retries);
    if (family.empty()) throw FamilyNotFound("empty slot family");

    VertexSet used(n);
    for (const Tuple& z : family)
      for (Vertex v : z.entries()) used.set(v);

    std::vector<Vertex> spine;
    spine.reserve(3 * family.size() - 1);
    bool linked = true;
    for (std::size_t i = 0; i < family.size(); ++i) {
      spine.push_back(family[i][0]);
      spine.push_back(family[i][1]);
      if (i + 1 == family.size()) break;
      VertexSet cands = common_out_in(d, family[i][1], family[i + 1][0]);
      cands -= used;
      Vertex x = cands.first();
      if (x < 0) {
        linked = false;
        last = "no fresh link between slots " + std::to_string(i) + " and " + std::to_string(i + 1);
        break;
      }
      used.set(x);
      spine.push_back(x);
    }
    if (!linked) continue;

    AbsorbingPath a = AbsorbingPath::from_parts(d, std::move(spine), beta, target);
    return a;
  }
  throw LinkageFailed("could not link the slot family after retries; last: " + last);
}

/// Reroute one free slot per leftover vertex, most-constrained vertex first;
/// returns the full path on V(A) ∪ (all absorbed so far), endpoints intact.
inline std::vector<Vertex> absorb(const Digraph& d, AbsorbingPath& a, const VertexSet& leftover) {
  if (d.order() != a.host_order()) throw std::invalid_argument("digraph does not match the absorbing path host");
  const int cap = static_cast<int>(std::ceil(a.beta_request() * a.host_order() - 1e-9));
  if (leftover.count() > cap)
    throw std::invalid_argument("leftover set larger than the absorb request ceil(beta*n) = " + std::to_string(cap));
  VertexSet current = a.vertex_set();
  if (current.intersects(leftover))
    throw std::invalid_argument("leftover set intersects the current path");

  struct Entry {
    Vertex u;
    int options;
  };
  std::vector<Entry> order;
  leftover.for_each([&](Vertex u) { order.push_back({u, a.compatible_free_slot_count(d, u)}); });
  std::sort(order.begin(), order.end(), [](const Entry& x, const Entry& y) {
    return x.options != y.options ? x.options < y.options : x.u < y.u;
  });

  for (const Entry& e : order) {
    int chosen = -1;
    for (int i = 0; i < a.slot_count(); ++i)
      if (a.slot_free(i) && a.slot_compatible(d, i, e.u)) {
        chosen = i;
        break;
      }
    if (chosen < 0)
      throw AbsorptionFailed("no free compatible slot for vertex " + std::to_string(e.u));
    a.consume_slot(chosen, e.u);
  }
  return a.sequence();
}

}  // namespace spansub
