#pragma once

// Simple digraph on vertices 0..n-1: no loops, no parallel arcs; u->v and
// v->u may coexist. Out- and in-adjacency are stored as bitset rows, kept
// mutually consistent; values are immutable once construction finishes and
// safe for concurrent reads.

#include <algorithm>
#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "spansub/errors.hpp"
#include "spansub/vertex_set.hpp"

namespace spansub {

struct Arc {
  Vertex from = -1;
  Vertex to = -1;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("digraph order must be nonnegative");
    out_.assign(n, VertexSet(n));
    in_.assign(n, VertexSet(n));
    outdeg_.assign(n, 0);
    indeg_.assign(n, 0);
  }

  Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
    for (const Arc& a : arcs) add_arc(a.from, a.to);
  }

  int order() const { return n_; }
  long long arc_count() const { return arc_count_; }

  void add_arc(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (out_[u].test(v)) throw std::invalid_argument("duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
    out_[u].set(v);
    in_[v].set(u);
    ++outdeg_[u];
    ++indeg_[v];
    ++arc_count_;
  }

  bool has_arc(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return out_[u].test(v);
  }

  const VertexSet& out(Vertex v) const {
    check_vertex(v);
    return out_[v];
  }

  const VertexSet& in(Vertex v) const {
    check_vertex(v);
    return in_[v];
  }

  int out_degree(Vertex v) const {
    check_vertex(v);
    return outdeg_[v];
  }

  int in_degree(Vertex v) const {
    check_vertex(v);
    return indeg_[v];
  }

  int semi_degree(Vertex v) const { return std::min(out_degree(v), in_degree(v)); }

  std::vector<Vertex> out_neighbors(Vertex v) const { return out(v).to_vector(); }
  std::vector<Vertex> in_neighbors(Vertex v) const { return in(v).to_vector(); }

  std::vector<Arc> arcs() const {
    std::vector<Arc> all;
    all.reserve(static_cast<std::size_t>(arc_count_));
    for (Vertex u = 0; u < n_; ++u) out_[u].for_each([&](Vertex v) { all.push_back({u, v}); });
    return all;
  }

  VertexSet all_vertices() const {
    VertexSet s(n_);
    s.fill();
    return s;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  long long arc_count_ = 0;
  std::vector<VertexSet> out_, in_;
  std::vector<int> outdeg_, indeg_;
};

/// min over all vertices of min(out-degree, in-degree); 0 for the empty order.
inline int min_semi_degree(const Digraph& d) {
  int best = 0;
  for (Vertex v = 0; v < d.order(); ++v) {
    int s = d.semi_degree(v);
    if (v == 0 || s < best) best = s;
  }
  return best;
}

/// {w : u->w and w->v}. Loop-freeness makes every member distinct from u and v.
inline VertexSet common_out_in(const Digraph& d, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("common_out_in requires u != v");
  return d.out(u) & d.in(v);
}

inline int common_out_in_count(const Digraph& d, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("common_out_in requires u != v");
  return VertexSet::intersection_count(d.out(u), d.in(v));
}

/// Arcs starting in X and ending in Y (the sets may intersect).
inline std::vector<Arc> arcs_between(const Digraph& d, const VertexSet& x, const VertexSet& y) {
  std::vector<Arc> result;
  x.for_each([&](Vertex u) {
    VertexSet hits = d.out(u) & y;
    hits.for_each([&](Vertex v) { result.push_back({u, v}); });
  });
  return result;
}

// Induced subdigraph with a relabeling map back to the host's identifiers.
struct InducedDigraph {
  Digraph graph;
  std::vector<Vertex> to_original;  // new id -> host id, ascending
  std::vector<int> from_original;   // host id -> new id, or -1 if dropped

  std::vector<Vertex> originals(std::span<const Vertex> seq) const {
    std::vector<Vertex> out;
    out.reserve(seq.size());
    for (Vertex v : seq) out.push_back(to_original[v]);
    return out;
  }
};

/// Induced subdigraph on (V(D) \ remove) ∪ add.
inline InducedDigraph remove_add(const Digraph& d, const VertexSet& remove, const VertexSet& add) {
  const int n = d.order();
  VertexSet keep = d.all_vertices();
  keep -= remove;
  keep |= add;

  InducedDigraph result;
  result.from_original.assign(n, -1);
  keep.for_each([&](Vertex v) {
    result.from_original[v] = static_cast<int>(result.to_original.size());
    result.to_original.push_back(v);
  });

  Digraph sub(static_cast<int>(result.to_original.size()));
  for (int i = 0; i < static_cast<int>(result.to_original.size()); ++i) {
    VertexSet heads = d.out(result.to_original[i]) & keep;
    heads.for_each([&](Vertex v) { sub.add_arc(i, result.from_original[v]); });
  }
  result.graph = std::move(sub);
  return result;
}

}  // namespace spansub
