#pragma once

// Pattern digraph H: the shape whose spanning subdivision is sought.
// Valid patterns have no isolated vertices, which forces k <= 2m.

#include <algorithm>
#include <utility>
#include <vector>

#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"

namespace spansub {

class PatternDigraph {
 public:
  explicit PatternDigraph(Digraph h) : h_(std::move(h)), arcs_(h_.arcs()) {
    for (Vertex v = 0; v < h_.order(); ++v)
      if (h_.out_degree(v) == 0 && h_.in_degree(v) == 0)
        throw PreconditionViolated("pattern has isolated vertex " + std::to_string(v));
    if (h_.arc_count() == 0) throw PreconditionViolated("pattern has no arcs");
    std::sort(arcs_.begin(), arcs_.end());
  }

  const Digraph& digraph() const { return h_; }
  int vertex_count() const { return h_.order(); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }

  /// Arcs in lexicographic (from, to) order; arcs()[0] is the designated long arc.
  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  Digraph h_;
  std::vector<Arc> arcs_;
};

}  // namespace spansub
