#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "sepchoose/error.hpp"
#include "sepchoose/exact.hpp"
#include "sepchoose/hypergraph.hpp"
#include "sepchoose/independence.hpp"
#include "sepchoose/random.hpp"
#include "sepchoose/transversal.hpp"

namespace sepchoose {

enum class Strategy { greedy_cover, randomized };

inline const char* to_string(Strategy s) { return s == Strategy::greedy_cover ? "greedy-cover" : "randomized"; }

inline Strategy parse_strategy(const std::string& s) {
  if (s == "greedy-cover" || s == "greedy") return Strategy::greedy_cover;
  if (s == "randomized" || s == "random") return Strategy::randomized;
  throw ParseError("unknown strategy '" + s + "' (expected greedy-cover or randomized)");
}

struct ConstructionParams {
  unsigned k = 2;
  unsigned r = 2;
  Ratio a{1, 2};
  std::optional<unsigned> q;  // defaults to ceil(r^2 / a)
  std::size_t t = 1;
  Strategy strategy = Strategy::randomized;
  std::uint64_t seed = 0;
  unsigned max_retries = 16;
  std::uint64_t enumeration_cap = 1'000'000;  // X-sets enumerated by greedy-cover
  SearchOptions search{};
  // Fail instead of recording "unverified" when a check cannot be completed.
  bool strict = true;

  static unsigned default_q(unsigned r, const Ratio& a) {
    const BigInt num = BigInt(r) * r * a.den();
    return static_cast<unsigned>(((num + a.num() - 1) / a.num()).convert_to<std::uint64_t>());
  }

  unsigned resolved_q() const { return q ? *q : default_q(r, a); }

  // 0 < a < 1, r >= 2, t >= 1 and q >= r^2 / a, all exact.
  void check_hypothesis() const {
    if (!a.in_open_unit_interval()) throw HypothesisViolation("a = " + a.str() + " is not in (0,1)");
    if (r < 2) throw HypothesisViolation("r = " + std::to_string(r) + " < 2");
    if (t < 1) throw HypothesisViolation("t must be at least 1");
    const unsigned qq = resolved_q();
    if (BigInt(qq) * a.num() < BigInt(r) * r * a.den())
      throw HypothesisViolation("q = " + std::to_string(qq) + " < r^2/a = " + std::to_string(r * r) + "*" +
                                std::to_string(a.den()) + "/" + std::to_string(a.num()));
  }
};

// floor((1/a)^r * 4 * n)
inline BigInt lemma1_edge_bound(const Ratio& a, unsigned r, std::uint64_t n) {
  return big_pow(BigInt(a.den()), r) * 4 * n / big_pow(BigInt(a.num()), r);
}

// floor(4 q^k (1/a)^r): the common member size of the balanced family.
inline BigInt balanced_edge_target(unsigned k, unsigned r, const Ratio& a, unsigned q) {
  return lemma1_edge_bound(a, r, big_pow(BigInt(q), k).convert_to<std::uint64_t>());
}

// C(q,r) * q^((i-1)r + (k-i)): simple edges available to member i (1-based)
// of a level-structured family on q^k vertices.
inline BigInt simple_edge_capacity(unsigned q, unsigned r, unsigned k, unsigned i) {
  return binomial(q, r) * big_pow(BigInt(q), (i - 1) * r + (k - i));
}

struct Lemma1Report {
  Strategy strategy = Strategy::randomized;
  std::size_t t = 1;
  unsigned q = 0;
  std::size_t edge_count = 0;
  BigInt edge_bound = 0;
  bool edge_bound_ok = false;
  bool partite = false;
  std::size_t alpha_threshold = 0;  // ceil(a t q); the construction needs alpha < this
  bool alpha_verified = false;
  std::optional<std::size_t> alpha;
  unsigned attempts = 0;
  std::uint64_t seed = 0;
  std::vector<std::string> notes;
};

struct Lemma1Result {
  Hypergraph hypergraph;
  PartitionStructure partition;
  Lemma1Report report;
};

namespace detail {

inline std::uint64_t colex_rank(const Edge& e) {
  std::uint64_t rank = 0;
  for (std::size_t i = 0; i < e.size(); ++i) rank += binomial(e[i], i + 1).convert_to<std::uint64_t>();
  return rank;
}

// Advances an ascending index combination; false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// All r-sets meeting each part in at most one vertex, lexicographic.
inline std::vector<Edge> partite_r_sets(const PartitionStructure& p, unsigned r) {
  std::vector<Edge> out;
  const std::size_t n = p.num_vertices();
  if (r > n) return out;
  std::vector<std::size_t> c(r);
  for (unsigned i = 0; i < r; ++i) c[i] = i;
  do {
    bool ok = true;
    for (unsigned i = 0; i < r && ok; ++i)
      for (unsigned j = i + 1; j < r && ok; ++j)
        if (p.part_of[c[i]] == p.part_of[c[j]]) ok = false;
    if (ok) out.emplace_back(c.begin(), c.end());
  } while (next_combination(c, n));
  return out;
}

inline constexpr std::uint64_t kMaxIncidences = 50'000'000;

inline std::vector<Edge> lemma1_greedy_cover(const ConstructionParams& p, const PartitionStructure& parts) {
  const std::size_t n = parts.num_vertices();
  const std::size_t x = ceil_times(p.a, n);
  const BigInt x_sets = binomial(n, x);
  if (x_sets > p.enumeration_cap)
    throw EnumerationCapExceeded("greedy-cover needs C(" + std::to_string(n) + "," + std::to_string(x) +
                                 ") = " + x_sets.str() + " sets X, cap is " + std::to_string(p.enumeration_cap));
  if (x_sets * binomial(x, p.r) > kMaxIncidences)
    throw EnumerationCapExceeded("greedy-cover auxiliary hypergraph has too many incidences");

  // Vertices of the auxiliary hypergraph: partite r-sets of S.
  const auto rsets = partite_r_sets(parts, p.r);
  std::unordered_map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < rsets.size(); ++i) index.emplace(colex_rank(rsets[i]), i);

  // One edge E_X per X of size ceil(a|S|): the partite r-sets inside X.
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(x_sets.convert_to<std::size_t>());
  std::vector<std::size_t> xs(x);
  for (std::size_t i = 0; i < x; ++i) xs[i] = i;
  std::vector<std::size_t> pick(p.r);
  Edge tuple(p.r);
  do {
    std::vector<std::size_t> members;
    for (unsigned i = 0; i < p.r; ++i) pick[i] = i;
    do {
      for (unsigned i = 0; i < p.r; ++i) tuple[i] = static_cast<Vertex>(xs[pick[i]]);
      if (auto it = index.find(colex_rank(tuple)); it != index.end()) members.push_back(it->second);
    } while (next_combination(pick, x));
    sets.push_back(std::move(members));
  } while (next_combination(xs, n));

  std::vector<Edge> edges;
  for (auto i : greedy_hitting_set(rsets.size(), sets)) edges.push_back(rsets[i]);
  return edges;
}

// Uniform partite r-set: r distinct parts, then one vertex in each.
inline Edge sample_partite_r_set(Rng& rng, unsigned q, std::size_t t, unsigned r) {
  std::vector<unsigned> parts(q);
  for (unsigned i = 0; i < q; ++i) parts[i] = i;
  Edge e(r);
  for (unsigned i = 0; i < r; ++i) {
    const auto j = i + static_cast<unsigned>(rng.below(q - i));
    std::swap(parts[i], parts[j]);
    e[i] = static_cast<Vertex>(parts[i] * t + rng.below(t));
  }
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<Edge> lemma1_sample(Rng& rng, unsigned q, std::size_t t, unsigned r, std::size_t count) {
  std::set<Edge> seen;
  while (seen.size() < count) seen.insert(sample_partite_r_set(rng, q, t, r));
  return {seen.begin(), seen.end()};
}

}  // namespace detail

// An r-uniform hypergraph on t*q vertices, partite w.r.t. q blocks of size
// t, with alpha < a t q and at most (1/a)^r 4tq edges. Every condition is
// checked on the result before it is returned.
inline Lemma1Result lemma1_construct(const ConstructionParams& p) {
  p.check_hypothesis();
  const unsigned q = p.resolved_q();
  const std::size_t n = p.t * q;
  if (n > UINT32_MAX) throw PreconditionError("vertex count exceeds 32-bit ids");

  Lemma1Result result;
  result.partition = PartitionStructure::blocks(q, p.t);
  auto& rep = result.report;
  rep.strategy = p.strategy;
  rep.t = p.t;
  rep.q = q;
  rep.seed = p.seed;
  rep.edge_bound = lemma1_edge_bound(p.a, p.r, n);
  rep.alpha_threshold = ceil_times(p.a, n);
  if (p.t == 1) rep.notes.push_back("t = 1: the counting argument assumes t >= 2; the conditions are checked directly");

  // alpha < ceil(a n) is decided exactly; a budget overrun leaves it unverified.
  auto alpha_below_threshold = [&](const Hypergraph& h) -> std::optional<bool> {
    try {
      return !has_independent_set(h, rep.alpha_threshold, p.search).reached;
    } catch (const BudgetExceeded&) {
      if (p.strict) throw;
      return std::nullopt;
    }
  };

  Hypergraph h;
  h.num_vertices = n;
  h.uniformity = p.r;
  bool accepted = false;

  if (p.strategy == Strategy::greedy_cover) {
    h.edges = detail::lemma1_greedy_cover(p, result.partition);
    rep.attempts = 1;
    const auto below = alpha_below_threshold(h);
    if (below && !*below) throw InternalError("greedy cover produced a hypergraph with a large independent set");
    rep.alpha_verified = below.has_value();
    accepted = true;
  } else {
    const BigInt total = binomial(q, p.r) * big_pow(BigInt(p.t), p.r);
    if (rep.edge_bound >= total) {
      // The sample would exhaust every partite r-set; take them all.
      h.edges = detail::partite_r_sets(result.partition, p.r);
      rep.attempts = 1;
      const auto below = alpha_below_threshold(h);
      if (below && !*below)
        throw RetriesExhausted("complete partite hypergraph already has alpha >= " +
                               std::to_string(rep.alpha_threshold));
      rep.alpha_verified = below.has_value();
      rep.notes.push_back("sample size covers all partite r-sets; complete partite hypergraph used");
      accepted = true;
    } else {
      const auto count = rep.edge_bound.convert_to<std::size_t>();
      for (unsigned attempt = 0; attempt < p.max_retries && !accepted; ++attempt) {
        Rng rng(derive_seed(p.seed, attempt));
        h.edges = detail::lemma1_sample(rng, q, p.t, p.r, count);
        rep.attempts = attempt + 1;
        const auto below = alpha_below_threshold(h);
        if (!below) {
          rep.alpha_verified = false;
          accepted = true;
        } else if (*below) {
          rep.alpha_verified = true;
          accepted = true;
        }
      }
      if (!accepted)
        throw RetriesExhausted("no sample with alpha < " + std::to_string(rep.alpha_threshold) + " in " +
                               std::to_string(p.max_retries) + " attempts");
    }
  }

  rep.edge_count = h.edges.size();
  rep.edge_bound_ok = BigInt(rep.edge_count) <= rep.edge_bound;
  rep.partite = validate(h, &result.partition).ok();
  if (!rep.partite) throw InternalError("partite construction is not partite");
  if (!rep.edge_bound_ok)
    throw InternalError("partite construction has " + std::to_string(rep.edge_count) + " edges, bound " +
                        rep.edge_bound.str());
  if (rep.alpha_verified) {
    try {
      rep.alpha = independence_number(h, p.search).alpha;
    } catch (const BudgetExceeded&) {
      rep.notes.push_back("exact alpha not computed within budget; alpha bound verified by decision search");
    }
  }
  result.hypergraph = std::move(h);
  return result;
}

struct MemberRecord {
  std::size_t num_vertices = 0;
  std::size_t edge_count = 0;
  bool edge_bound_ok = false;
  std::optional<std::size_t> alpha;
  // "search" (exact), "copies" (q times the previous level), "decision"
  // (alpha < threshold decided without the exact value) or "unverified".
  std::string alpha_method;
  bool alpha_ok = false;
};

struct LevelRecord {
  unsigned level = 0;
  std::vector<MemberRecord> members;
  bool nearly_disjoint = false;
  unsigned attempts = 0;  // construction attempts for the fresh member
  std::uint64_t seed = 0;
};

struct PadRecord {
  unsigned member = 0;  // 1-based
  std::size_t initial = 0;
  std::size_t target = 0;
  std::size_t simple_added = 0;
  std::size_t duplicates_added = 0;
  BigInt simple_capacity = 0;
};

struct ConstructionTrace {
  ConstructionParams params;
  unsigned q = 0;
  std::vector<LevelRecord> levels;
  std::vector<PadRecord> padding;
  std::vector<std::string> notes;
};

struct FamilyResult {
  HypergraphFamily family;
  ConstructionTrace trace;
};

// k pairwise nearly disjoint r-uniform hypergraphs on q^k vertices, each
// with alpha < a q^k and at most (1/a)^r 4 q^k edges. Level i consists of q
// disjoint copies of every level-(i-1) member plus one fresh partite
// hypergraph whose parts are those copies.
inline FamilyResult iterative_family(const ConstructionParams& params) {
  if (params.k < 2) throw PreconditionError("iterative construction needs k >= 2");
  ConstructionParams p = params;
  p.t = 1;
  p.check_hypothesis();
  const unsigned q = p.resolved_q();
  p.q = q;
  if (big_pow(BigInt(q), p.k) > UINT32_MAX) throw PreconditionError("q^k exceeds 32-bit vertex ids");

  FamilyResult out;
  out.trace.params = params;
  out.trace.q = q;
  std::vector<Hypergraph> members;
  std::vector<MemberRecord> records;

  auto fail = [&](const std::string& what) {
    if (p.strict) throw Error("construction verification failed: " + what);
    out.trace.notes.push_back("unverified: " + what);
  };

  std::size_t level_size = 1;
  for (unsigned level = 1; level <= p.k; ++level) {
    const std::size_t t = level_size;
    level_size *= q;
    LevelRecord rec;
    rec.level = level;

    std::vector<Hypergraph> next;
    std::vector<MemberRecord> next_records;
    for (std::size_t j = 0; j < members.size(); ++j) {
      next.push_back(disjoint_copies(members[j], q));
      MemberRecord m;
      m.num_vertices = level_size;
      m.edge_count = next.back().num_edges();
      if (records[j].alpha) m.alpha = *records[j].alpha * q;
      m.alpha_method = records[j].alpha_ok ? "copies" : "unverified";
      m.alpha_ok = records[j].alpha_ok;
      next_records.push_back(m);
    }

    ConstructionParams lp = p;
    lp.t = t;
    lp.seed = derive_seed(p.seed, level);
    rec.seed = lp.seed;
    auto fresh = lemma1_construct(lp);
    rec.attempts = fresh.report.attempts;
    MemberRecord m;
    m.num_vertices = level_size;
    m.edge_count = fresh.hypergraph.num_edges();
    m.alpha = fresh.report.alpha;
    m.alpha_ok = fresh.report.alpha_verified;
    m.alpha_method = !fresh.report.alpha_verified ? "unverified" : fresh.report.alpha ? "search" : "decision";
    next.push_back(std::move(fresh.hypergraph));
    next_records.push_back(m);

    const BigInt bound = lemma1_edge_bound(p.a, p.r, level_size);
    for (std::size_t j = 0; j < next.size(); ++j) {
      auto& mr = next_records[j];
      mr.edge_bound_ok = BigInt(mr.edge_count) <= bound;
      if (next[j].num_vertices != level_size) throw InternalError("level member has the wrong vertex count");
      if (!mr.edge_bound_ok) fail("level " + std::to_string(level) + " member " + std::to_string(j + 1) + " edge bound");
      if (!mr.alpha_ok) fail("level " + std::to_string(level) + " member " + std::to_string(j + 1) + " alpha");
    }

    HypergraphFamily level_family;
    level_family.num_vertices = level_size;
    level_family.uniformity = p.r;
    level_family.members = next;
    rec.nearly_disjoint = are_nearly_disjoint(level_family).nearly_disjoint;
    if (!rec.nearly_disjoint) throw InternalError("level " + std::to_string(level) + " is not nearly disjoint");

    rec.members = next_records;
    out.trace.levels.push_back(rec);
    members = std::move(next);
    records = std::move(next_records);
  }

  out.family.num_vertices = level_size;
  out.family.uniformity = p.r;
  out.family.members = std::move(members);
  return out;
}

struct PadResult {
  HypergraphFamily family;
  std::vector<PadRecord> records;
};

namespace detail {

// Largest q with q^k <= n; the caller checks equality.
inline unsigned integer_root(std::size_t n, unsigned k) {
  unsigned q = 1;
  while (big_pow(BigInt(q + 1), k) <= n) ++q;
  return q;
}

// Member i (1-based) of a level-structured family on q^k vertices: every
// edge lies inside one block of q^i consecutive vertices and its vertices
// have pairwise distinct digit i-1 in base q.
struct LevelShape {
  std::size_t block;  // q^i
  std::size_t sub;    // q^(i-1)
  unsigned q;

  std::size_t digit(Vertex v) const { return (v / sub) % q; }

  bool fits(const Edge& e) const {
    for (std::size_t x = 0; x < e.size(); ++x) {
      if (e[x] / block != e[0] / block) return false;
      for (std::size_t y = x + 1; y < e.size(); ++y)
        if (digit(e[x]) == digit(e[y])) return false;
    }
    return true;
  }
};

// Appends unused conforming edges in lexicographic order until `need` have
// been added or none remain. Returns how many were added.
inline std::size_t add_simple_edges(Hypergraph& h, const LevelShape& shape, std::size_t need) {
  if (need == 0) return 0;
  std::set<Edge> present(h.edges.begin(), h.edges.end());
  const unsigned r = h.uniformity;
  const std::size_t n = h.num_vertices;
  std::size_t added = 0;
  Edge tuple;
  std::vector<bool> used_digit(shape.q, false);

  auto extend = [&](auto&& self, Vertex from, std::size_t block_end) -> void {
    if (added == need) return;
    if (tuple.size() == r) {
      if (!present.count(tuple)) {
        h.edges.push_back(tuple);
        present.insert(tuple);
        ++added;
      }
      return;
    }
    for (std::size_t w = from; w < block_end && added < need; ++w) {
      const auto d = shape.digit(static_cast<Vertex>(w));
      if (used_digit[d]) continue;
      used_digit[d] = true;
      tuple.push_back(static_cast<Vertex>(w));
      self(self, static_cast<Vertex>(w + 1), block_end);
      tuple.pop_back();
      used_digit[d] = false;
    }
  };
  for (std::size_t v = 0; v < n && added < need; ++v) {
    const std::size_t block_end = (v / shape.block + 1) * shape.block;
    const auto d = shape.digit(static_cast<Vertex>(v));
    used_digit[d] = true;
    tuple.assign(1, static_cast<Vertex>(v));
    extend(extend, static_cast<Vertex>(v + 1), block_end);
    used_digit[d] = false;
  }
  return added;
}

}  // namespace detail

// Brings member i to exactly targets[i] edges: first unused simple edges
// that respect the member's level structure (lexicographically smallest
// first), then, if allowed, round-robin duplicates of its existing edges.
// The family must come from iterative_family (q^k vertices, member i
// following the level-i block structure).
inline PadResult pad_family(const HypergraphFamily& f, const std::vector<std::size_t>& targets, bool allow_duplicates) {
  const auto k = static_cast<unsigned>(f.k());
  if (targets.size() != k)
    throw PreconditionError("need " + std::to_string(k) + " targets, got " + std::to_string(targets.size()));
  const unsigned q = detail::integer_root(f.num_vertices, k);
  if (k < 1 || big_pow(BigInt(q), k) != f.num_vertices || q < f.uniformity)
    throw PreconditionError("family on " + std::to_string(f.num_vertices) + " vertices is not level-structured for k = " +
                            std::to_string(k));

  PadResult out;
  out.family = f;
  std::size_t sub = 1;
  for (unsigned i = 1; i <= k; ++i, sub *= q) {
    Hypergraph& h = out.family.members[i - 1];
    const std::size_t target = targets[i - 1];
    detail::LevelShape shape{sub * q, sub, q};
    PadRecord rec;
    rec.member = i;
    rec.initial = h.num_edges();
    rec.target = target;
    rec.simple_capacity = simple_edge_capacity(q, f.uniformity, k, i);
    if (target < rec.initial)
      throw PreconditionError("member " + std::to_string(i) + " has " + std::to_string(rec.initial) +
                              " edges, above target " + std::to_string(target));
    for (const auto& e : h.edges)
      if (!shape.fits(e))
        throw PreconditionError("member " + std::to_string(i) + " edge " + detail::edge_str(e) +
                                " does not follow the level structure");

    rec.simple_added = detail::add_simple_edges(h, shape, target - rec.initial);
    const std::size_t base = h.num_edges();
    if (base < target) {
      if (!allow_duplicates)
        throw CapacityExhausted("member " + std::to_string(i) + " has " + rec.simple_capacity.str() +
                                " simple edges available, target " + std::to_string(target));
      if (base == 0) throw CapacityExhausted("member " + std::to_string(i) + " has no edge to duplicate");
      for (std::size_t j = 0; h.num_edges() < target; ++j) {
        Edge copy = h.edges[j % base];
        h.edges.push_back(std::move(copy));
      }
      rec.duplicates_added = target - base;
    }
    out.records.push_back(rec);
  }
  if (!are_nearly_disjoint(out.family)) throw InternalError("padding broke near-disjointness");
  return out;
}

}  // namespace sepchoose
