#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepchoose/coloring.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/exact.hpp"

namespace sepchoose {

namespace detail {

inline void require_k_m(std::uint64_t k, std::uint64_t m) {
  if (k < 2) throw PreconditionError("k must be at least 2");
  if (m < 1) throw PreconditionError("m must be at least 1");
}

// Lists larger than this are never needed for 64-bit m.
inline constexpr unsigned kMaxListSize = 4096;

}  // namespace detail

// k m ((k-1)/k)^r for graphs, k m k^-r for hypergraphs: the expected number
// of unhappy edges when every color picks a uniform class.
inline BigRational expected_unhappy(std::uint64_t k, std::uint64_t m, unsigned r, GraphKind kind) {
  detail::require_k_m(k, m);
  const BigInt km = BigInt(k) * m;
  if (kind == GraphKind::graph) return BigRational(km * big_pow(BigInt(k - 1), r), big_pow(BigInt(k), r));
  return BigRational(km, big_pow(BigInt(k), r));
}

// Least r with k m < (k/(k-1))^r (graph) or m < k^(r-1) (hypergraph); at
// that r every r-list assignment of the target is colorable.
inline unsigned upper_threshold(std::uint64_t k, std::uint64_t m, GraphKind kind) {
  detail::require_k_m(k, m);
  for (unsigned r = 1; r <= detail::kMaxListSize; ++r) {
    const bool holds = kind == GraphKind::graph ? BigInt(k) * m * big_pow(BigInt(k - 1), r) < big_pow(BigInt(k), r)
                                                : BigInt(m) < big_pow(BigInt(k), r - 1);
    if (holds) return r;
  }
  throw InternalError("upper threshold search did not terminate");
}

// Right-hand side of the lower-bound condition at list size r:
// 4 (k/(k-1))^r (2r^2)^k for graphs, 4 k^r (k r^2)^k for hypergraphs.
inline BigRational lower_condition_value(std::uint64_t k, unsigned r, GraphKind kind) {
  const BigInt rr = BigInt(r) * r;
  if (kind == GraphKind::graph)
    return BigRational(4 * big_pow(BigInt(k), r) * big_pow(2 * rr, static_cast<unsigned>(k)),
                       big_pow(BigInt(k - 1), r));
  return BigRational(4 * big_pow(BigInt(k), r) * big_pow(BigInt(k) * rr, static_cast<unsigned>(k)));
}

// Largest r >= 2 with m >= lower_condition_value(k, r); the target then has
// separation choosability at least r + 1. None if r = 2 already fails.
inline std::optional<unsigned> lower_threshold(std::uint64_t k, std::uint64_t m, GraphKind kind) {
  detail::require_k_m(k, m);
  std::optional<unsigned> best;
  for (unsigned r = 2; r <= detail::kMaxListSize; ++r) {
    if (BigRational(m) >= lower_condition_value(k, r, kind))
      best = r;
    else
      break;
  }
  return best;
}

// log m / log(k/(k-1)) for graphs, log m / log k for hypergraphs. Reference
// value only.
inline double asymptotic_value(std::uint64_t k, std::uint64_t m, GraphKind kind) {
  if (k < 2 || m < 2) throw PreconditionError("asymptotic value needs k >= 2 and m >= 2");
  const double lm = std::log(static_cast<double>(m));
  const double kd = static_cast<double>(k);
  return kind == GraphKind::graph ? lm / std::log(kd / (kd - 1.0)) : lm / std::log(kd);
}

struct IntervalStatus {
  unsigned member = 0;  // 1-based part index i
  BigRational lower;    // 4 q^k (k/(k-1))^r
  BigInt upper;         // C(q,r) q^((i-1)r + (k-i))
  bool empty = false;
  bool contains = false;  // m_i inside [lower, upper]
};

struct UnbalancedCandidate {
  unsigned r = 0;
  unsigned q = 0;
  BigRational lower;
  std::vector<IntervalStatus> intervals;
};

struct UnbalancedReport {
  std::vector<std::uint64_t> m;
  std::optional<unsigned> r;  // largest r with m_1 >= lower value
  bool claim = false;         // separation choosability of K_{m_1..m_k} exceeds r
  // Interval status for every r from 2 up to max(2, r).
  std::vector<UnbalancedCandidate> candidates;
  std::vector<std::string> diagnostics;
};

inline unsigned unbalanced_q(std::uint64_t k, unsigned r) {
  const BigInt num = BigInt(k) * r * r;
  return static_cast<unsigned>(((num + (k - 2)) / (k - 1)).convert_to<std::uint64_t>());
}

inline UnbalancedCandidate unbalanced_candidate(const std::vector<std::uint64_t>& m, unsigned r) {
  const auto k = static_cast<std::uint64_t>(m.size());
  UnbalancedCandidate c;
  c.r = r;
  c.q = unbalanced_q(k, r);
  c.lower = BigRational(4 * big_pow(BigInt(c.q), static_cast<unsigned>(k)) * big_pow(BigInt(k), r),
                        big_pow(BigInt(k - 1), r));
  for (unsigned i = 1; i <= k; ++i) {
    IntervalStatus s;
    s.member = i;
    s.lower = c.lower;
    s.upper = binomial(c.q, r) * big_pow(BigInt(c.q), static_cast<unsigned>((i - 1) * r + (k - i)));
    s.empty = BigRational(s.upper) < s.lower;
    s.contains = !s.empty && BigRational(m[i - 1]) >= s.lower && BigInt(m[i - 1]) <= s.upper;
    c.intervals.push_back(s);
  }
  return c;
}

// Lower bound for unbalanced complete multipartite graphs. Empty intervals
// are reported as they are; no claim is made unless every m_i lies in its
// interval.
inline UnbalancedReport unbalanced_lower_threshold(const std::vector<std::uint64_t>& m) {
  if (m.size() < 2) throw PreconditionError("need at least two part sizes");
  if (!std::is_sorted(m.begin(), m.end())) throw PreconditionError("part sizes must be nondecreasing");
  if (m.front() < 1) throw PreconditionError("part sizes must be positive");
  UnbalancedReport out;
  out.m = m;
  for (unsigned r = 2; r <= detail::kMaxListSize; ++r) {
    auto c = unbalanced_candidate(m, r);
    if (BigRational(m.front()) < c.lower) {
      if (out.candidates.empty()) {
        out.candidates.push_back(std::move(c));
        out.diagnostics.push_back("m_1 = " + std::to_string(m.front()) + " is below the r = 2 lower value " +
                                  out.candidates.back().lower.str());
      }
      break;
    }
    out.r = r;
    out.candidates.push_back(std::move(c));
  }
  for (const auto& c : out.candidates) {
    for (const auto& s : c.intervals) {
      if (s.empty)
        out.diagnostics.push_back("r = " + std::to_string(c.r) + ", i = " + std::to_string(s.member) +
                                  ": interval empty, upper " + s.upper.str() + " < lower " + s.lower.str());
    }
  }
  if (out.r) {
    const auto& chosen = out.candidates.back();
    out.claim = std::all_of(chosen.intervals.begin(), chosen.intervals.end(), [](const auto& s) { return s.contains; });
    for (const auto& s : chosen.intervals)
      if (!s.empty && !s.contains)
        out.diagnostics.push_back("r = " + std::to_string(chosen.r) + ", i = " + std::to_string(s.member) + ": m_i = " +
                                  std::to_string(m[s.member - 1]) + " outside [" + s.lower.str() + ", " +
                                  s.upper.str() + "]");
  }
  return out;
}

struct BoundReport {
  std::uint64_t k = 0;
  std::uint64_t m = 0;
  GraphKind kind = GraphKind::graph;
  unsigned upper_r = 0;
  std::optional<unsigned> lower_r;
  BigRational lower_condition;  // condition value at lower_r
  BigRational expected_unhappy_at_upper;
  double asymptotic = 0.0;
  bool consistent = true;
  std::vector<std::string> notes;
};

inline BoundReport bound_report(std::uint64_t k, std::uint64_t m, GraphKind kind) {
  BoundReport rep;
  rep.k = k;
  rep.m = m;
  rep.kind = kind;
  rep.upper_r = upper_threshold(k, m, kind);
  rep.lower_r = lower_threshold(k, m, kind);
  rep.expected_unhappy_at_upper = expected_unhappy(k, m, rep.upper_r, kind);
  rep.asymptotic = m >= 2 ? asymptotic_value(k, m, kind) : 0.0;
  const std::string target = kind == GraphKind::graph
                                 ? "K(" + std::to_string(k) + "," + std::to_string(m) + ")"
                                 : "K^" + std::to_string(k) + "(" + std::to_string(k) + "," + std::to_string(m) + ")";
  rep.notes.push_back("upper: χℓ(" + target + ",1) ≤ " + std::to_string(rep.upper_r));
  if (rep.lower_r) {
    rep.lower_condition = lower_condition_value(k, *rep.lower_r, kind);
    rep.notes.push_back("lower: χℓ(" + target + ",1) ≥ " + std::to_string(*rep.lower_r + 1) +
                        " (condition value " + rep.lower_condition.str() + ")");
    rep.consistent = *rep.lower_r < rep.upper_r;
    if (!rep.consistent) rep.notes.push_back("inconsistent: lower bound exceeds upper bound");
  } else {
    rep.notes.push_back("lower: no r >= 2 satisfies the lower-bound condition");
  }
  rep.notes.push_back(kind == GraphKind::graph ? "asymptotic reference: log_{k/(k-1)} m" : "asymptotic reference: log_k m");
  return rep;
}

}  // namespace sepchoose
