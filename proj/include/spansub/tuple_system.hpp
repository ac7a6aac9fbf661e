#pragma once

// (n,t,d)-tuple systems: an index set X over a ground set Y of size n, where
// every x relates to at least d*n^t ordered t-tuples with distinct entries.
// select_family draws a small pairwise tuple-disjoint family that still
// covers every index at least ceil(beta*n) times; check_family re-derives
// everything from scratch and is the oracle used by tests and callers.

#include <array>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "spansub/errors.hpp"
#include "spansub/rng.hpp"
#include "spansub/vertex_set.hpp"

namespace spansub {

class Tuple {
 public:
  static constexpr int kMaxArity = 3;

  Tuple() = default;
  Tuple(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) push(v);
  }

  void push(Vertex v) {
    assert(len_ < kMaxArity);
    e_[len_++] = v;
  }

  int arity() const { return len_; }
  Vertex operator[](int i) const { return e_[i]; }
  std::span<const Vertex> entries() const { return {e_.data(), static_cast<std::size_t>(len_)}; }

  bool entries_distinct() const {
    for (int i = 0; i < len_; ++i)
      for (int j = i + 1; j < len_; ++j)
        if (e_[i] == e_[j]) return false;
    return true;
  }

  bool shares_element(const Tuple& o) const {
    for (int i = 0; i < len_; ++i)
      for (int j = 0; j < o.len_; ++j)
        if (e_[i] == o.e_[j]) return true;
    return false;
  }

  friend bool operator==(const Tuple&, const Tuple&) = default;

 private:
  std::array<Vertex, kMaxArity> e_{-1, -1, -1};
  int len_ = 0;
};

using TupleFamily = std::vector<Tuple>;

template <typename S>
concept TupleSystemLike = requires(const S& s, int x, std::span<const Vertex> z) {
  { s.index_count() } -> std::convertible_to<int>;
  { s.ground_size() } -> std::convertible_to<int>;
  { s.arity() } -> std::convertible_to<int>;
  { s.density() } -> std::convertible_to<double>;
  { s.member(x, z) } -> std::convertible_to<bool>;
  { s.supported(z) } -> std::convertible_to<bool>;
};

// Callback-backed system; convenient for tests and one-off instantiations.
struct FnTupleSystem {
  int indices = 0;
  int ground = 0;
  int t = 1;
  double d = 0.0;
  std::function<bool(int, std::span<const Vertex>)> fn;
  std::function<bool(std::span<const Vertex>)> support;  // optional

  int index_count() const { return indices; }
  int ground_size() const { return ground; }
  int arity() const { return t; }
  double density() const { return d; }
  bool member(int x, std::span<const Vertex> z) const { return fn(x, z); }
  bool supported(std::span<const Vertex> z) const { return support ? support(z) : true; }
};

namespace detail {

// P[Bin(trials, p) <= k]
inline double binom_tail_le(int trials, double p, int k) {
  if (k < 0) return 0.0;
  if (k >= trials) return 1.0;
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;
  double term = std::pow(1.0 - p, trials);  // P[X = 0]
  double sum = term;
  for (int i = 1; i <= k; ++i) {
    term *= (static_cast<double>(trials - i + 1) / i) * (p / (1.0 - p));
    sum += term;
  }
  return std::min(sum, 1.0);
}

inline std::uint64_t tuple_key(const Tuple& z, int ground) {
  std::uint64_t key = 0;
  for (Vertex v : z.entries()) key = key * static_cast<std::uint64_t>(ground) + static_cast<std::uint64_t>(v);
  return key;
}

template <TupleSystemLike S>
long long count_members_for(const S& sys, int x) {
  const int n = sys.ground_size();
  const int t = sys.arity();
  long long cnt = 0;
  std::array<Vertex, 3> buf{};
  if (t == 1) {
    for (Vertex a = 0; a < n; ++a) {
      buf[0] = a;
      if (sys.member(x, std::span<const Vertex>(buf.data(), 1))) ++cnt;
    }
  } else if (t == 2) {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b) {
        if (a == b) continue;
        buf[0] = a;
        buf[1] = b;
        if (sys.member(x, std::span<const Vertex>(buf.data(), 2))) ++cnt;
      }
  } else {
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = 0; b < n; ++b)
        for (Vertex c = 0; c < n; ++c) {
          if (a == b || a == c || b == c) continue;
          buf[0] = a;
          buf[1] = b;
          buf[2] = c;
          if (sys.member(x, std::span<const Vertex>(buf.data(), 3))) ++cnt;
        }
  }
  return cnt;
}

}  // namespace detail

struct SystemDeficiency {
  int index = -1;
  long long count = 0;
  double required = 0.0;
};

struct SystemCheck {
  bool ok = false;
  std::vector<SystemDeficiency> deficient;
};

/// Full-enumeration validity check: every index must reach d*n^t tuples.
/// Refuses arity above 3 (enumeration is the point of this check).
template <TupleSystemLike S>
SystemCheck verify_tuple_system(const S& sys) {
  const int t = sys.arity();
  if (t < 1 || t > 3) throw InvalidSystem("verify_tuple_system handles arity 1..3 only");
  const int n = sys.ground_size();
  if (n < 1) throw InvalidSystem("ground set must be nonempty");
  const double required = sys.density() * std::pow(static_cast<double>(n), t);

  SystemCheck result;
  result.ok = true;
  for (int x = 0; x < sys.index_count(); ++x) {
    long long cnt = detail::count_members_for(sys, x);
    if (static_cast<double>(cnt) + 1e-9 < required) {
      result.ok = false;
      result.deficient.push_back({x, cnt, required});
    }
  }
  return result;
}

struct FamilyDeficiency {
  int index = -1;
  int count = 0;
  int required = 0;
};

struct FamilyCheck {
  bool ok = false;
  bool size_ok = true;
  bool tuples_wellformed = true;
  std::vector<std::pair<int, int>> overlapping;  // indices of tuple pairs sharing an element
  std::vector<FamilyDeficiency> deficient;
};

/// Independent re-verification of the three family conclusions; trusts
/// nothing from select_family.
template <TupleSystemLike S>
FamilyCheck check_family(const S& sys, const TupleFamily& family, double alpha, double beta) {
  const int n = sys.ground_size();
  const int t = sys.arity();
  FamilyCheck result;

  for (const Tuple& z : family)
    if (z.arity() != t || !z.entries_distinct()) result.tuples_wellformed = false;
  for (const Tuple& z : family)
    for (Vertex v : z.entries())
      if (v < 0 || v >= n) result.tuples_wellformed = false;

  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].shares_element(family[j]))
        result.overlapping.emplace_back(static_cast<int>(i), static_cast<int>(j));

  result.size_ok = static_cast<double>(family.size()) <= alpha / t * n + 1e-9;

  const int need = static_cast<int>(std::ceil(beta * n - 1e-9));
  for (int x = 0; x < sys.index_count(); ++x) {
    int cnt = 0;
    for (const Tuple& z : family)
      if (sys.member(x, z.entries())) ++cnt;
    if (cnt < need) result.deficient.push_back({x, cnt, need});
  }

  result.ok = result.tuples_wellformed && result.size_ok && result.overlapping.empty() &&
              result.deficient.empty();
  return result;
}

inline constexpr int kDefaultFamilyRetries = 20;

/// Randomized family selection: draw floor(alpha/t*n) distinct supported
/// tuples, keep them greedily while pairwise tuple-disjoint, then verify the
/// per-index coverage floor ceil(beta*n); resample with a fresh stream on
/// failure, up to max_retries.
template <TupleSystemLike S>
TupleFamily select_family(const S& sys, double alpha, double beta, std::uint64_t seed,
                          int max_retries = kDefaultFamilyRetries) {
  const int n = sys.ground_size();
  const int t = sys.arity();
  if (t < 1 || t > Tuple::kMaxArity) throw InvalidSystem("select_family handles arity 1..3 only");
  if (n < t) throw InvalidSystem("ground set smaller than tuple arity");
  if (alpha <= 0.0 || alpha > 1.0) throw InvalidSystem("alpha must lie in (0,1]");
  if (beta < 0.0) throw InvalidSystem("beta must be nonnegative");

  const int cap = static_cast<int>(std::floor(alpha / t * n + 1e-9));
  const int need = static_cast<int>(std::ceil(beta * n - 1e-9));

  // coverage beyond half the expected hit count is hopeless; fail fast
  if (static_cast<double>(need) > alpha / (2.0 * t) * sys.density() * n + 1e-9)
    throw FamilyNotFound("coverage " + std::to_string(need) + " infeasible for alpha=" + std::to_string(alpha) +
                         ", d=" + std::to_string(sys.density()) + ", n=" + std::to_string(n));
  if (cap == 0 && need > 0) throw FamilyNotFound("size cap is zero but coverage is required");

  std::string last_failure = "no attempts made";
  for (int attempt = 0; attempt <= max_retries; ++attempt) {
    std::mt19937_64 rng(mix_seed(seed, 0xfa'1115'00ULL + static_cast<std::uint64_t>(attempt)));

    // distinct supported draws, rejection-sampled
    std::vector<Tuple> drawn;
    drawn.reserve(cap);
    std::unordered_set<std::uint64_t> seen;
    long long tries = 0;
    const long long try_limit = 60LL * cap + 1000;
    while (static_cast<int>(drawn.size()) < cap && tries < try_limit) {
      ++tries;
      Tuple z;
      for (int i = 0; i < t; ++i) z.push(uniform_below(rng, n));
      if (!z.entries_distinct()) continue;
      if (!sys.supported(z.entries())) continue;
      if (!seen.insert(detail::tuple_key(z, n)).second) continue;
      drawn.push_back(z);
    }
    if (static_cast<int>(drawn.size()) < cap && static_cast<int>(drawn.size()) < need) {
      last_failure = "support too sparse to sample from";
      continue;
    }

    // greedy disjointification in sampled order
    TupleFamily family;
    VertexSet used(n);
    for (const Tuple& z : drawn) {
      bool hit = false;
      for (Vertex v : z.entries())
        if (used.test(v)) hit = true;
      if (hit) continue;
      for (Vertex v : z.entries()) used.set(v);
      family.push_back(z);
    }

    if (need > 0) {
      bool covered = true;
      for (int x = 0; x < sys.index_count() && covered; ++x) {
        int cnt = 0;
        for (const Tuple& z : family) {
          if (sys.member(x, z.entries()) && ++cnt >= need) break;
        }
        if (cnt < need) {
          covered = false;
          last_failure = "index " + std::to_string(x) + " covered only " + std::to_string(cnt) +
                         " < " + std::to_string(need) + " times";
        }
      }
      if (!covered) continue;
    }
    return family;
  }
  throw FamilyNotFound("no family after " + std::to_string(max_retries + 1) + " attempts; last: " + last_failure);
}

}  // namespace spansub
