#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sepchoose/error.hpp"

namespace sepchoose {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;
using VertexSet = std::vector<Vertex>;

// An r-uniform hypergraph on vertices [0, num_vertices). Edges form a
// multiset; each edge is stored with ascending vertex ids. The struct does
// not enforce its invariants by itself so that validate() can report on
// arbitrary input; use Hypergraph::make() to build a checked instance.
struct Hypergraph {
  std::size_t num_vertices = 0;
  unsigned uniformity = 1;
  std::vector<Edge> edges;

  // Sorts every edge and throws PreconditionError if the result violates
  // an invariant.
  static Hypergraph make(std::size_t n, unsigned r, std::vector<Edge> edges);

  std::size_t num_edges() const noexcept { return edges.size(); }

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// q parts of t vertices each covering [0, t*q).
struct PartitionStructure {
  unsigned num_parts = 0;
  std::size_t part_size = 0;
  std::vector<unsigned> part_of;

  // Part i is the block [i*t, (i+1)*t).
  static PartitionStructure blocks(unsigned q, std::size_t t) {
    PartitionStructure p;
    p.num_parts = q;
    p.part_size = t;
    p.part_of.resize(static_cast<std::size_t>(q) * t);
    for (std::size_t v = 0; v < p.part_of.size(); ++v) p.part_of[v] = static_cast<unsigned>(v / t);
    return p;
  }

  // Builds from explicit part lists; throws PreconditionError unless the
  // parts are disjoint, equally sized and cover [0, t*q).
  static PartitionStructure from_parts(const std::vector<VertexSet>& parts) {
    if (parts.empty() || parts.front().empty()) throw PreconditionError("partition needs nonempty parts");
    PartitionStructure p;
    p.num_parts = static_cast<unsigned>(parts.size());
    p.part_size = parts.front().size();
    const std::size_t n = p.part_size * parts.size();
    p.part_of.assign(n, p.num_parts);
    for (unsigned i = 0; i < parts.size(); ++i) {
      if (parts[i].size() != p.part_size) throw PreconditionError("partition parts differ in size");
      for (Vertex v : parts[i]) {
        if (v >= n) throw PreconditionError("partition vertex " + std::to_string(v) + " out of range");
        if (p.part_of[v] != p.num_parts)
          throw PreconditionError("partition vertex " + std::to_string(v) + " in two parts");
        p.part_of[v] = i;
      }
    }
    return p;
  }

  std::size_t num_vertices() const noexcept { return part_of.size(); }

  std::vector<VertexSet> parts() const {
    std::vector<VertexSet> out(num_parts);
    for (std::size_t v = 0; v < part_of.size(); ++v) out[part_of[v]].push_back(static_cast<Vertex>(v));
    return out;
  }

  friend bool operator==(const PartitionStructure&, const PartitionStructure&) = default;
};

// k hypergraphs on one shared vertex set. members[i] is H_{i+1}.
struct HypergraphFamily {
  std::size_t num_vertices = 0;
  unsigned uniformity = 1;
  std::vector<Hypergraph> members;
  std::optional<PartitionStructure> partition;
  // Optional original labels of the vertices (colors), indexed by dense id.
  std::vector<std::int64_t> labels;

  std::size_t k() const noexcept { return members.size(); }

  static HypergraphFamily make(std::size_t n, unsigned r, std::vector<std::vector<Edge>> member_edges) {
    HypergraphFamily f;
    f.num_vertices = n;
    f.uniformity = r;
    for (auto& edges : member_edges) f.members.push_back(Hypergraph::make(n, r, std::move(edges)));
    return f;
  }

  friend bool operator==(const HypergraphFamily&, const HypergraphFamily&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

namespace detail {

inline std::string edge_str(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + "}";
}

}  // namespace detail

inline ValidationReport validate(const Hypergraph& h, const PartitionStructure* partition = nullptr) {
  ValidationReport report;
  auto add = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  if (h.uniformity == 0) add("uniformity must be positive");
  if (partition && partition->num_vertices() != h.num_vertices)
    add("partition covers " + std::to_string(partition->num_vertices()) + " vertices, hypergraph has " +
        std::to_string(h.num_vertices));

  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const Edge& e = h.edges[i];
    const std::string where = "edge " + std::to_string(i) + " " + detail::edge_str(e);
    if (e.size() != h.uniformity)
      add(where + ": size " + std::to_string(e.size()) + " != uniformity " + std::to_string(h.uniformity));
    bool in_range = true;
    for (Vertex v : e) {
      if (v >= h.num_vertices) {
        add(where + ": vertex " + std::to_string(v) + " out of range");
        in_range = false;
      }
    }
    if (!std::is_sorted(e.begin(), e.end())) add(where + ": not in ascending order");
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) add(where + ": repeated vertex");
    if (partition && in_range && partition->num_vertices() == h.num_vertices) {
      std::unordered_map<unsigned, unsigned> hits;
      for (Vertex v : e) ++hits[partition->part_of[v]];
      std::vector<unsigned> bad;
      for (auto [part, c] : hits)
        if (c > 1) bad.push_back(part);
      std::sort(bad.begin(), bad.end());
      for (unsigned part : bad)
        add(where + ": meets part " + std::to_string(part) + " in " + std::to_string(hits[part]) + " vertices");
    }
  }
  return report;
}

inline Hypergraph Hypergraph::make(std::size_t n, unsigned r, std::vector<Edge> edges) {
  Hypergraph h{n, r, std::move(edges)};
  for (auto& e : h.edges) std::sort(e.begin(), e.end());
  if (auto report = validate(h); !report.ok()) throw PreconditionError("invalid hypergraph: " + report.violations.front());
  return h;
}

// Family-level invariants: shared vertex count and uniformity, k >= 1,
// every member valid (and partite w.r.t. the family partition if present).
inline ValidationReport validate(const HypergraphFamily& f) {
  ValidationReport report;
  if (f.members.empty()) report.violations.push_back("family has no members");
  if (!f.labels.empty() && f.labels.size() != f.num_vertices)
    report.violations.push_back("label table size differs from vertex count");
  for (std::size_t i = 0; i < f.members.size(); ++i) {
    const Hypergraph& h = f.members[i];
    const std::string who = "member " + std::to_string(i + 1) + ": ";
    if (h.num_vertices != f.num_vertices) report.violations.push_back(who + "vertex count differs from family");
    if (h.uniformity != f.uniformity) report.violations.push_back(who + "uniformity differs from family");
    for (auto& v : validate(h, f.partition ? &*f.partition : nullptr).violations)
      report.violations.push_back(who + v);
  }
  return report;
}

struct NearDisjointWitness {
  std::size_t member_a = 0;  // 1-based member indices, member_a < member_b
  Edge edge_a;
  std::size_t member_b = 0;
  Edge edge_b;
};

struct NearDisjointResult {
  bool nearly_disjoint = true;
  std::optional<NearDisjointWitness> witness;

  explicit operator bool() const noexcept { return nearly_disjoint; }
};

// Two edges of different members may share at most one vertex. Every
// vertex pair inside an edge is recorded with its owner; a pair owned by
// two members is a violation. Duplicates inside one member are harmless.
inline NearDisjointResult are_nearly_disjoint(const HypergraphFamily& f) {
  struct Owner {
    std::size_t member;
    std::size_t edge;
  };
  const std::uint64_t n = f.num_vertices;
  std::unordered_map<std::uint64_t, Owner> owner;
  for (std::size_t m = 0; m < f.members.size(); ++m) {
    const auto& edges = f.members[m].edges;
    for (std::size_t ei = 0; ei < edges.size(); ++ei) {
      const Edge& e = edges[ei];
      for (std::size_t x = 0; x < e.size(); ++x) {
        for (std::size_t y = x + 1; y < e.size(); ++y) {
          const std::uint64_t key = std::uint64_t{e[x]} * n + e[y];
          auto [it, inserted] = owner.try_emplace(key, Owner{m, ei});
          if (!inserted && it->second.member != m) {
            NearDisjointWitness w{it->second.member + 1, f.members[it->second.member].edges[it->second.edge], m + 1, e};
            return {false, std::move(w)};
          }
        }
      }
    }
  }
  return {};
}

inline std::size_t max_degree(const Hypergraph& h) {
  std::vector<std::size_t> degree(h.num_vertices, 0);
  for (const auto& e : h.edges)
    for (Vertex v : e) ++degree[v];
  return degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
}

inline std::size_t min_edge_size(const Hypergraph& h) {
  std::size_t u = 0;
  for (std::size_t i = 0; i < h.edges.size(); ++i)
    if (i == 0 || h.edges[i].size() < u) u = h.edges[i].size();
  return u;
}

inline std::vector<bool> membership(std::size_t n, std::span<const Vertex> set) {
  std::vector<bool> in(n, false);
  for (Vertex v : set) {
    if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " outside the vertex set");
    in[v] = true;
  }
  return in;
}

// No edge lies entirely inside the set.
inline bool is_independent(const Hypergraph& h, std::span<const Vertex> set) {
  const auto in = membership(h.num_vertices, set);
  for (const auto& e : h.edges)
    if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; })) return false;
  return true;
}

// Every edge meets the set.
inline bool is_transversal(const Hypergraph& h, std::span<const Vertex> set) {
  const auto in = membership(h.num_vertices, set);
  for (const auto& e : h.edges)
    if (std::none_of(e.begin(), e.end(), [&](Vertex v) { return in[v]; })) return false;
  return true;
}

inline VertexSet complement(std::size_t n, std::span<const Vertex> set) {
  const auto in = membership(n, set);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!in[v]) out.push_back(v);
  return out;
}

// `copies` vertex-disjoint copies of h; copy j occupies [j*n, (j+1)*n).
inline Hypergraph disjoint_copies(const Hypergraph& h, std::size_t copies) {
  Hypergraph out;
  out.num_vertices = h.num_vertices * copies;
  out.uniformity = h.uniformity;
  out.edges.reserve(h.edges.size() * copies);
  for (std::size_t j = 0; j < copies; ++j) {
    const auto offset = static_cast<Vertex>(j * h.num_vertices);
    for (const auto& e : h.edges) {
      Edge shifted(e);
      for (auto& v : shifted) v += offset;
      out.edges.push_back(std::move(shifted));
    }
  }
  return out;
}

// Distinct edges only, ascending lexicographic order.
inline std::vector<Edge> simple_edges(const Hypergraph& h) {
  std::vector<Edge> edges = h.edges;
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace sepchoose
