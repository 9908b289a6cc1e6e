#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sepchoose/coloring.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/hypergraph.hpp"
#include "sepchoose/independence.hpp"
#include "sepchoose/random.hpp"

namespace sepchoose {

struct SolveOptions {
  std::uint64_t node_budget = 10'000'000;  // backtracking nodes
  SearchOptions alpha_search{};            // independence queries of the refutation check
};

struct SolveOutcome {
  bool sat = false;
  ColorPartition partition;  // valid when sat
  std::vector<std::string> log;
  std::uint64_t nodes = 0;
};

namespace detail {

class PartitionSearch {
 public:
  PartitionSearch(const HypergraphFamily& f, Mode mode, std::uint64_t budget)
      : n_(f.num_vertices), k_(static_cast<unsigned>(f.k())), mode_(mode), budget_(budget), occurs_(n_) {
    for (std::size_t i = 0; i < f.k(); ++i) {
      for (auto& e : simple_edges(f.members[i])) {
        for (Color c : e) occurs_[c].push_back(edges_.size());
        edges_.push_back({static_cast<unsigned>(i), std::move(e)});
      }
    }
  }

  std::optional<ColorPartition> run() {
    const std::uint64_t full = k_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k_) - 1;
    std::vector<std::uint64_t> domains(n_, full);
    std::vector<Color> queue;
    for (std::size_t e = 0; e < edges_.size(); ++e)
      if (!examine(e, domains, queue)) return std::nullopt;
    if (!drain(domains, queue)) return std::nullopt;
    return search(domains);
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  struct MemberEdge {
    unsigned member;
    Edge colors;
  };

  // Applies one edge's constraint to the domains. False on conflict.
  bool examine(std::size_t idx, std::vector<std::uint64_t>& dom, std::vector<Color>& queue) const {
    const auto& [member, colors] = edges_[idx];
    const std::uint64_t own = std::uint64_t{1} << member;
    std::size_t candidates = 0;
    Color last = 0;
    for (Color c : colors) {
      if (mode_ == Mode::star) {
        if (dom[c] == own) return true;
        if (dom[c] & own) {
          ++candidates;
          last = c;
        }
      } else {
        if (!(dom[c] & own)) return true;
        if (dom[c] & ~own) {
          ++candidates;
          last = c;
        }
      }
    }
    if (candidates == 0) return false;
    if (candidates == 1) {
      const std::uint64_t narrowed = mode_ == Mode::star ? own : dom[last] & ~own;
      if (narrowed != dom[last]) {
        dom[last] = narrowed;
        queue.push_back(last);
      }
    }
    return true;
  }

  bool drain(std::vector<std::uint64_t>& dom, std::vector<Color>& queue) const {
    while (!queue.empty()) {
      const Color c = queue.back();
      queue.pop_back();
      for (auto e : occurs_[c])
        if (!examine(e, dom, queue)) return false;
    }
    return true;
  }

  std::optional<ColorPartition> search(const std::vector<std::uint64_t>& dom) {
    if (++nodes_ > budget_) throw BudgetExceeded("partition search nodes", budget_);
    std::size_t pick = n_;
    for (std::size_t c = 0; c < n_; ++c) {
      if (std::popcount(dom[c]) > 1) {
        pick = c;
        break;
      }
    }
    if (pick == n_) {
      ColorPartition f;
      f.class_of.reserve(n_);
      for (auto d : dom) f.class_of.push_back(static_cast<unsigned>(std::countr_zero(d)));
      return f;
    }
    for (std::uint64_t rest = dom[pick]; rest; rest &= rest - 1) {
      std::vector<std::uint64_t> next = dom;
      next[pick] = rest & (~rest + 1);
      std::vector<Color> queue{static_cast<Color>(pick)};
      if (!drain(next, queue)) continue;
      if (auto found = search(next)) return found;
    }
    return std::nullopt;
  }

  std::size_t n_;
  unsigned k_;
  Mode mode_;
  std::uint64_t budget_;
  std::vector<MemberEdge> edges_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Decides whether the colors can be split into k classes satisfying the
// mode's condition. Throws BudgetExceeded ("unknown") rather than guessing.
//
// Before searching, a counting refutation is tried: in star mode the
// complement of class i is independent in H_i, so a solution needs
// sum(alpha(H_i)) >= (k-1)|C|; in star_star mode class i itself is
// independent in H_i, so it needs sum(alpha(H_i)) >= |C|.
inline SolveOutcome solve_exact(const HypergraphFamily& f, Mode mode, SolveOptions options = {}) {
  if (auto report = validate(f); !report.ok()) throw PreconditionError("invalid family: " + report.violations.front());
  if (f.k() > 64) throw PreconditionError("at most 64 classes supported");
  SolveOutcome out;
  const std::size_t n = f.num_vertices;

  try {
    std::size_t sum = 0;
    std::string terms;
    for (std::size_t i = 0; i < f.k(); ++i) {
      const auto a = independence_number(f.members[i], options.alpha_search).alpha;
      sum += a;
      terms += (i ? " + " : "") + std::to_string(a);
    }
    const std::size_t need = mode == Mode::star ? (f.k() - 1) * n : n;
    out.log.push_back("alpha(H_1..H_k) = " + terms + " = " + std::to_string(sum) + ", a partition needs >= " +
                      std::to_string(need));
    if (sum < need) {
      out.log.push_back("UNSAT: " + std::string(mode == Mode::star ? "the complement of class i" : "class i") +
                        " must be independent in H_i, and the classes cannot cover all " + std::to_string(n) +
                        " colors");
      return out;
    }
  } catch (const BudgetExceeded& e) {
    out.log.push_back(std::string("counting refutation skipped: ") + e.what());
  }

  detail::PartitionSearch search(f, mode, options.node_budget);
  auto found = search.run();
  out.nodes = search.nodes();
  if (found) {
    out.sat = true;
    out.partition = std::move(*found);
    out.log.push_back("SAT after " + std::to_string(out.nodes) + " search nodes");
  } else {
    out.log.push_back("UNSAT: exhaustive search with propagation closed after " + std::to_string(out.nodes) +
                      " nodes");
  }
  return out;
}

struct RandomOutcome {
  bool found = false;
  ColorPartition partition;
  unsigned trials_used = 0;
};

// Each trial gives every color an independent uniform class; the first
// assignment passing check_partition is returned. Trial j uses the stream
// derive_seed(seed, j), so any trial can be replayed alone.
inline RandomOutcome solve_random(const HypergraphFamily& f, Mode mode, std::uint64_t seed, unsigned trials) {
  if (f.k() == 0) throw PreconditionError("family has no members");
  RandomOutcome out;
  ColorPartition candidate;
  candidate.class_of.resize(f.num_vertices);
  for (unsigned trial = 0; trial < trials; ++trial) {
    Rng rng(derive_seed(seed, trial));
    for (auto& cls : candidate.class_of) cls = static_cast<unsigned>(rng.below(f.k()));
    out.trials_used = trial + 1;
    if (check_partition(f, candidate, mode).ok) {
      out.found = true;
      out.partition = candidate;
      return out;
    }
  }
  return out;
}

// coloring[i][v] is the color given to vertex v of part i.
using ListColoring = std::vector<std::vector<Color>>;

// Independent check that a coloring is drawn from the lists and proper for
// the target: in K(k,m) vertices of different parts differ; in K^k(k,m) no
// color occurs in every part.
inline bool is_proper_list_coloring(const MultipartiteSpec& spec, const ListAssignment& l, const ListColoring& c) {
  if (c.size() != spec.k()) return false;
  std::vector<std::vector<bool>> used(spec.k(), std::vector<bool>(l.num_colors, false));
  for (std::size_t i = 0; i < spec.k(); ++i) {
    if (c[i].size() != spec.part_sizes[i]) return false;
    for (std::size_t v = 0; v < c[i].size(); ++v) {
      const auto& list = l.lists[i][v];
      if (std::find(list.begin(), list.end(), c[i][v]) == list.end()) return false;
      used[i][c[i][v]] = true;
    }
  }
  for (Color col = 0; col < l.num_colors; ++col) {
    std::size_t parts_with = 0;
    for (std::size_t i = 0; i < spec.k(); ++i) parts_with += used[i][col] ? 1 : 0;
    if (spec.kind == GraphKind::graph ? parts_with > 1 : parts_with == spec.k()) return false;
  }
  return true;
}

// Turns a valid color partition into a list coloring of the target.
inline ListColoring realize_coloring(const MultipartiteSpec& spec, const ListAssignment& l, const ColorPartition& f) {
  const Mode mode = mode_for(spec.kind);
  if (!check_partition(reduce(spec, l), f, mode).ok)
    throw PreconditionError("color partition does not satisfy the " + std::string(to_string(mode)) + " condition");
  ListColoring out(spec.k());
  for (std::size_t i = 0; i < spec.k(); ++i) {
    for (const auto& list : l.lists[i]) {
      Color chosen = list.front();
      for (Color c : list) {
        const bool own = f.class_of[c] == i;
        if (mode == Mode::star ? own : !own) {
          chosen = c;
          break;
        }
      }
      out[i].push_back(chosen);
    }
  }
  if (!is_proper_list_coloring(spec, l, out)) throw InternalError("realized coloring is not proper");
  return out;
}

}  // namespace sepchoose
