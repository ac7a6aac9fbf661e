#pragma once

// Directed Hamiltonian cycle and path search.
//
// The engine is layered: greedy two-ended extension from a random start,
// path insertion of outside vertices, and directed rotations when stuck.
// A rotation uses two arcs: head->p_i closes a suffix cycle, which is
// re-entered from p_{i-1} at any p_j (j > i) with p_{i-1}->p_j, making
// p_{j-1} the new head; the tail side is symmetric. Random restarts handle
// stagnation, and an exact bitmask DP (orders up to 20) is both the
// fallback and the ground-truth oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spansub/digraph.hpp"
#include "spansub/errors.hpp"
#include "spansub/rng.hpp"

namespace spansub {

inline constexpr int kExactOrderLimit = 20;

inline bool is_hamiltonian_cycle(const Digraph& d, std::span<const Vertex> seq) {
  const int n = d.order();
  if (static_cast<int>(seq.size()) != n || n < 2) return false;
  VertexSet seen(n);
  for (Vertex v : seq) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i < n; ++i)
    if (!d.has_arc(seq[i], seq[(i + 1) % n])) return false;
  return true;
}

inline bool is_hamiltonian_path(const Digraph& d, std::span<const Vertex> seq) {
  const int n = d.order();
  if (static_cast<int>(seq.size()) != n || n < 1) return false;
  VertexSet seen(n);
  for (Vertex v : seq) {
    if (v < 0 || v >= n || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!d.has_arc(seq[i], seq[i + 1])) return false;
  return true;
}

namespace detail {

inline std::vector<std::uint32_t> arc_masks_out(const Digraph& d) {
  std::vector<std::uint32_t> m(d.order(), 0);
  for (Vertex u = 0; u < d.order(); ++u)
    d.out(u).for_each([&](Vertex v) { m[u] |= std::uint32_t{1} << v; });
  return m;
}

inline std::vector<std::uint32_t> arc_masks_in(const Digraph& d) {
  std::vector<std::uint32_t> m(d.order(), 0);
  for (Vertex v = 0; v < d.order(); ++v)
    d.in(v).for_each([&](Vertex u) { m[v] |= std::uint32_t{1} << u; });
  return m;
}

}  // namespace detail

/// Held-Karp reachability DP anchored at vertex 0; definitive for n <= 20.
inline std::optional<std::vector<Vertex>> exact_hamiltonian_cycle(const Digraph& d) {
  const int n = d.order();
  if (n > kExactOrderLimit) throw std::invalid_argument("exact search capped at order " + std::to_string(kExactOrderLimit));
  if (n < 2) return std::nullopt;
  const auto inmask = detail::arc_masks_in(d);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;  // paths from 0
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    if (!(mask & 1)) continue;
    std::uint32_t e = ends[mask];
    if (!e) continue;
    std::uint32_t rest = full & ~mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (inmask[v] & e) ends[mask | (std::uint32_t{1} << v)] |= std::uint32_t{1} << v;
    }
  }
  std::uint32_t closers = ends[full] & inmask[0];
  if (!closers) return std::nullopt;

  std::vector<Vertex> rev;
  int cur = std::countr_zero(closers);
  std::uint32_t mask = full;
  rev.push_back(cur);
  while (cur != 0) {
    std::uint32_t pm = mask & ~(std::uint32_t{1} << cur);
    std::uint32_t preds = ends[pm] & inmask[cur];
    cur = std::countr_zero(preds);
    mask = pm;
    rev.push_back(cur);
  }
  return std::vector<Vertex>(rev.rbegin(), rev.rend());
}

inline std::optional<std::vector<Vertex>> exact_hamiltonian_path(const Digraph& d) {
  const int n = d.order();
  if (n > kExactOrderLimit) throw std::invalid_argument("exact search capped at order " + std::to_string(kExactOrderLimit));
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  const auto inmask = detail::arc_masks_in(d);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;

  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::uint32_t{1} << v] = std::uint32_t{1} << v;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t e = ends[mask];
    if (!e) continue;
    std::uint32_t rest = full & ~mask;
    while (rest) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      if (inmask[v] & e) ends[mask | (std::uint32_t{1} << v)] |= std::uint32_t{1} << v;
    }
  }
  if (!ends[full]) return std::nullopt;

  std::vector<Vertex> rev;
  int cur = std::countr_zero(ends[full]);
  std::uint32_t mask = full;
  rev.push_back(cur);
  while (std::popcount(mask) > 1) {
    std::uint32_t pm = mask & ~(std::uint32_t{1} << cur);
    std::uint32_t preds = ends[pm] & inmask[cur];
    cur = std::countr_zero(preds);
    mask = pm;
    rev.push_back(cur);
  }
  return std::vector<Vertex>(rev.rbegin(), rev.rend());
}

namespace detail {

class CycleSearch {
 public:
  CycleSearch(const Digraph& d, std::uint64_t seed, long long budget)
      : d_(d), n_(d.order()), rng_(mix_seed(seed, 0x6861'6dULL)), on_(d.order()), pos_(d.order(), -1) {
    budget_ = budget > 0 ? budget : 50LL * n_ * n_ * kRestarts;
  }

  std::optional<std::vector<Vertex>> run() {
    long long total = 0;
    const long long slice = std::max<long long>(budget_ / kRestarts, 8LL * n_);
    for (int restart = 0; restart < kRestarts && total < budget_; ++restart) {
      reset(uniform_below(rng_, n_));
      long long steps = 0;
      int stagnation = 0;
      const int stagnation_limit = std::max(64, 4 * n_);
      while (steps < slice && total < budget_ && stagnation < stagnation_limit) {
        ++steps;
        ++total;
        if (static_cast<int>(seq_.size()) == n_) {
          if (d_.has_arc(seq_.back(), seq_.front())) return seq_;
          if (rotate_head() || rotate_tail()) {
            ++stagnation;
            continue;
          }
          break;
        }
        if (extend_back() || extend_front() || try_insert()) {
          stagnation = 0;
          continue;
        }
        if (rotate_head() || rotate_tail()) {
          ++stagnation;
          continue;
        }
        break;
      }
    }
    return std::nullopt;
  }

 private:
  static constexpr int kRestarts = 20;

  void reset(Vertex start) {
    seq_.clear();
    on_.clear();
    std::fill(pos_.begin(), pos_.end(), -1);
    seq_.push_back(start);
    on_.set(start);
    pos_[start] = 0;
  }

  void reindex() {
    for (int i = 0; i < static_cast<int>(seq_.size()); ++i) pos_[seq_[i]] = i;
  }

  Vertex pick_random(const VertexSet& s) {
    int c = s.count();
    if (c == 0) return -1;
    int k = uniform_below(rng_, c);
    int v = s.first();
    while (k-- > 0) v = s.next(v);
    return v;
  }

  bool extend_back() {
    VertexSet cands = d_.out(seq_.back()) - on_;
    Vertex v = pick_random(cands);
    if (v < 0) return false;
    pos_[v] = static_cast<int>(seq_.size());
    seq_.push_back(v);
    on_.set(v);
    return true;
  }

  bool extend_front() {
    VertexSet cands = d_.in(seq_.front()) - on_;
    Vertex v = pick_random(cands);
    if (v < 0) return false;
    seq_.insert(seq_.begin(), v);
    on_.set(v);
    reindex();
    return true;
  }

  bool try_insert() {
    VertexSet outside = d_.all_vertices() - on_;
    if (outside.empty()) return false;
    std::vector<Vertex> cands = outside.to_vector();
    shuffle_inplace(rng_, cands);
    const int tries = std::min<int>(static_cast<int>(cands.size()), 12);
    for (int c = 0; c < tries; ++c) {
      Vertex u = cands[c];
      VertexSet preds = d_.in(u) & on_;
      std::vector<int> spots;
      preds.for_each([&](Vertex x) {
        int t = pos_[x];
        if (t + 1 < static_cast<int>(seq_.size()) && d_.has_arc(u, seq_[t + 1])) spots.push_back(t);
      });
      if (spots.empty()) continue;
      int t = spots[uniform_below(rng_, static_cast<int>(spots.size()))];
      seq_.insert(seq_.begin() + t + 1, u);
      on_.set(u);
      reindex();
      return true;
    }
    return false;
  }

  // head h with arc h->seq[i] closes a suffix cycle; re-enter from seq[i-1]
  // at seq[j] (j > i), giving a path ending at seq[j-1]
  bool rotate_head() {
    const int len = static_cast<int>(seq_.size());
    if (len < 3) return false;
    Vertex h = seq_.back();
    std::vector<Vertex> ws = (d_.out(h) & on_).to_vector();
    shuffle_inplace(rng_, ws);
    for (Vertex w : ws) {
      int i = pos_[w];
      if (i < 1 || i >= len - 1) continue;
      Vertex pivot = seq_[i - 1];
      std::vector<int> js;
      (d_.out(pivot) & on_).for_each([&](Vertex y) {
        int j = pos_[y];
        if (j >= i + 1) js.push_back(j);
      });
      if (js.empty()) continue;
      int j = js[uniform_below(rng_, static_cast<int>(js.size()))];
      apply_head_rotation(i, j);
      return true;
    }
    return false;
  }

  void apply_head_rotation(int i, int j) {
    std::vector<Vertex> next;
    next.reserve(seq_.size());
    next.insert(next.end(), seq_.begin(), seq_.begin() + i);
    next.insert(next.end(), seq_.begin() + j, seq_.end());
    next.insert(next.end(), seq_.begin() + i, seq_.begin() + j);
    seq_ = std::move(next);
    reindex();
  }

  // tail f with arc seq[i]->f closes a prefix cycle; exit from seq[j]
  // (j < i) into seq[i+1], giving a path starting at seq[j+1]
  bool rotate_tail() {
    const int len = static_cast<int>(seq_.size());
    if (len < 3) return false;
    Vertex f = seq_.front();
    std::vector<Vertex> ws = (d_.in(f) & on_).to_vector();
    shuffle_inplace(rng_, ws);
    for (Vertex w : ws) {
      int i = pos_[w];
      if (i < 1 || i >= len - 1) continue;
      Vertex exit_to = seq_[i + 1];
      std::vector<int> js;
      (d_.in(exit_to) & on_).for_each([&](Vertex y) {
        int j = pos_[y];
        if (j <= i - 1) js.push_back(j);
      });
      if (js.empty()) continue;
      int j = js[uniform_below(rng_, static_cast<int>(js.size()))];
      apply_tail_rotation(i, j);
      return true;
    }
    return false;
  }

  void apply_tail_rotation(int i, int j) {
    std::vector<Vertex> next;
    next.reserve(seq_.size());
    next.insert(next.end(), seq_.begin() + j + 1, seq_.begin() + i + 1);
    next.insert(next.end(), seq_.begin(), seq_.begin() + j + 1);
    next.insert(next.end(), seq_.begin() + i + 1, seq_.end());
    seq_ = std::move(next);
    reindex();
  }

  const Digraph& d_;
  int n_;
  std::mt19937_64 rng_;
  long long budget_ = 0;
  VertexSet on_;
  std::vector<int> pos_;
  std::vector<Vertex> seq_;
};

}  // namespace detail

/// Heuristic layer only; nullopt when the budget runs out.
inline std::optional<std::vector<Vertex>> heuristic_hamiltonian_cycle(const Digraph& d, std::uint64_t seed,
                                                                      long long budget = 0) {
  if (d.order() < 2) return std::nullopt;
  return detail::CycleSearch(d, seed, budget).run();
}

/// Full engine: heuristic search, then the exact DP for orders <= 20.
/// Throws NotFound when the budget is exhausted (or no cycle exists at
/// exactly-solvable orders).
inline std::vector<Vertex> hamiltonian_cycle(const Digraph& d, std::uint64_t seed, long long budget = 0) {
  const int n = d.order();
  if (n < 2) throw std::invalid_argument("a directed Hamiltonian cycle needs n >= 2");
  if (auto found = heuristic_hamiltonian_cycle(d, seed, budget)) return *found;
  if (n <= kExactOrderLimit) {
    if (auto found = exact_hamiltonian_cycle(d)) return *found;
    throw NotFound("no directed Hamiltonian cycle exists");
  }
  throw NotFound("search budget exhausted without a Hamiltonian cycle");
}

/// Hamiltonian path: a Hamiltonian cycle with its lexicographically smallest
/// arc removed.
inline std::vector<Vertex> hamiltonian_path(const Digraph& d, std::uint64_t seed, long long budget = 0) {
  const int n = d.order();
  if (n < 1) throw std::invalid_argument("empty digraph has no path");
  if (n == 1) return {0};
  std::vector<Vertex> cycle = hamiltonian_cycle(d, seed, budget);
  int cut = 0;
  Arc best{cycle[0], cycle[1 % n]};
  for (int i = 1; i < n; ++i) {
    Arc a{cycle[i], cycle[(i + 1) % n]};
    if (a < best) {
      best = a;
      cut = i;
    }
  }
  std::vector<Vertex> path;
  path.reserve(n);
  for (int i = 1; i <= n; ++i) path.push_back(cycle[(cut + i) % n]);
  return path;
}

}  // namespace spansub
