#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sepchoose/error.hpp"
#include "sepchoose/hypergraph.hpp"

namespace sepchoose {

using Color = Vertex;
using ColorList = std::vector<Color>;

// graph: K(k,m), the complete multipartite graph.
// hypergraph: K^k(k,m), the complete k-partite k-uniform hypergraph.
enum class GraphKind { graph, hypergraph };

// star: every list of a part-i vertex contains a class-i color.
// star_star: no list of a part-i vertex lies inside class i.
enum class Mode { star, star_star };

inline Mode mode_for(GraphKind kind) { return kind == GraphKind::graph ? Mode::star : Mode::star_star; }
inline GraphKind kind_for(Mode mode) { return mode == Mode::star ? GraphKind::graph : GraphKind::hypergraph; }

inline const char* to_string(GraphKind kind) { return kind == GraphKind::graph ? "graph" : "hypergraph"; }
inline const char* to_string(Mode mode) { return mode == Mode::star ? "star" : "star_star"; }

inline GraphKind parse_kind(const std::string& s) {
  if (s == "graph" || s == "star") return GraphKind::graph;
  if (s == "hypergraph" || s == "star_star") return GraphKind::hypergraph;
  throw ParseError("unknown mode '" + s + "' (expected graph, hypergraph, star or star_star)");
}

inline Mode parse_mode(const std::string& s) { return mode_for(parse_kind(s)); }

struct MultipartiteSpec {
  GraphKind kind = GraphKind::graph;
  std::vector<std::size_t> part_sizes;  // m_1 .. m_k

  std::size_t k() const noexcept { return part_sizes.size(); }

  static MultipartiteSpec balanced(GraphKind kind, std::size_t k, std::size_t m) {
    return {kind, std::vector<std::size_t>(k, m)};
  }

  friend bool operator==(const MultipartiteSpec&, const MultipartiteSpec&) = default;
};

// lists[i][v] is L(v) for vertex v of part i, ascending. Colors are dense
// ids in [0, num_colors); labels optionally records the original color
// names. Colors that appear in no list are tolerated.
struct ListAssignment {
  std::size_t num_colors = 0;
  unsigned r = 0;
  std::vector<std::vector<ColorList>> lists;
  std::vector<std::int64_t> labels;

  std::int64_t label(Color c) const { return labels.empty() ? static_cast<std::int64_t>(c) : labels[c]; }

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

// class_of[c] is the class (0-based) of color c.
struct ColorPartition {
  std::vector<unsigned> class_of;

  friend bool operator==(const ColorPartition&, const ColorPartition&) = default;
};

inline ValidationReport validate(const MultipartiteSpec& spec, const ListAssignment& l) {
  ValidationReport report;
  auto add = [&](std::string msg) { report.violations.push_back(std::move(msg)); };
  if (spec.k() < 2) add("need at least two parts");
  if (l.lists.size() != spec.k()) add("list assignment has " + std::to_string(l.lists.size()) + " parts");
  if (!l.labels.empty() && l.labels.size() != l.num_colors) add("label table size differs from color count");
  for (std::size_t i = 0; i < std::min(l.lists.size(), spec.k()); ++i) {
    if (spec.part_sizes[i] == 0) add("part " + std::to_string(i + 1) + " is empty");
    if (l.lists[i].size() != spec.part_sizes[i])
      add("part " + std::to_string(i + 1) + " has " + std::to_string(l.lists[i].size()) + " lists, expected " +
          std::to_string(spec.part_sizes[i]));
    for (std::size_t v = 0; v < l.lists[i].size(); ++v) {
      const auto& list = l.lists[i][v];
      const std::string where = "vertex (" + std::to_string(i + 1) + "," + std::to_string(v) + ")";
      if (list.size() != l.r) add(where + ": list size " + std::to_string(list.size()) + " != " + std::to_string(l.r));
      if (!std::is_sorted(list.begin(), list.end()) || std::adjacent_find(list.begin(), list.end()) != list.end())
        add(where + ": list not strictly ascending");
      for (Color c : list)
        if (c >= l.num_colors) add(where + ": color " + std::to_string(c) + " out of range");
    }
  }
  return report;
}

struct VertexRef {
  std::size_t part = 0;  // 1-based
  std::size_t index = 0;

  friend bool operator==(const VertexRef&, const VertexRef&) = default;
};

struct SeparationResult {
  bool separated = true;
  std::optional<std::pair<VertexRef, VertexRef>> witness;
  std::size_t overlap = 0;  // |L(u) ∩ L(v)| of the witness

  explicit operator bool() const noexcept { return separated; }
};

inline std::size_t overlap(const ColorList& a, const ColorList& b) {
  std::size_t c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

// Every pair of vertices sharing an edge shares at most s colors. In both
// target kinds that is every pair taken from two different parts.
inline SeparationResult check_separation(const MultipartiteSpec& spec, const ListAssignment& l, std::size_t s) {
  for (std::size_t i = 0; i < l.lists.size(); ++i)
    for (std::size_t j = i + 1; j < l.lists.size(); ++j)
      for (std::size_t u = 0; u < l.lists[i].size(); ++u)
        for (std::size_t v = 0; v < l.lists[j].size(); ++v)
          if (auto c = overlap(l.lists[i][u], l.lists[j][v]); c > s)
            return {false, std::pair{VertexRef{i + 1, u}, VertexRef{j + 1, v}}, c};
  (void)spec;
  return {};
}

// Member i has one edge per vertex of part i (its list); repeated lists
// become repeated edges.
inline HypergraphFamily reduce(const MultipartiteSpec& spec, const ListAssignment& l) {
  if (auto report = validate(spec, l); !report.ok())
    throw PreconditionError("invalid list assignment: " + report.violations.front());
  HypergraphFamily f;
  f.num_vertices = l.num_colors;
  f.uniformity = l.r;
  f.labels = l.labels;
  for (const auto& part : l.lists) {
    Hypergraph h;
    h.num_vertices = l.num_colors;
    h.uniformity = l.r;
    h.edges = part;
    f.members.push_back(std::move(h));
  }
  return f;
}

// Inverse of reduce: part i receives one vertex per edge of member i.
// With target sizes, lists are repeated round-robin until part i has
// target[i] vertices.
inline std::pair<MultipartiteSpec, ListAssignment> lists_from_family(
    const HypergraphFamily& f, GraphKind kind, const std::optional<std::vector<std::size_t>>& target_m = std::nullopt) {
  if (f.k() < 2) throw PreconditionError("family needs at least two members");
  if (target_m && target_m->size() != f.k())
    throw PreconditionError("need " + std::to_string(f.k()) + " part sizes, got " + std::to_string(target_m->size()));
  MultipartiteSpec spec{kind, {}};
  ListAssignment l;
  l.num_colors = f.num_vertices;
  l.r = f.uniformity;
  l.labels = f.labels;
  for (std::size_t i = 0; i < f.k(); ++i) {
    const auto& edges = f.members[i].edges;
    const std::size_t m = target_m ? (*target_m)[i] : edges.size();
    if (m < edges.size())
      throw PreconditionError("target size " + std::to_string(m) + " for part " + std::to_string(i + 1) +
                              " is below its edge count " + std::to_string(edges.size()));
    if (edges.empty()) throw PreconditionError("member " + std::to_string(i + 1) + " has no edges");
    std::vector<ColorList> part;
    part.reserve(m);
    for (std::size_t v = 0; v < m; ++v) part.push_back(edges[v % edges.size()]);
    spec.part_sizes.push_back(m);
    l.lists.push_back(std::move(part));
  }
  return {spec, l};
}

struct UnhappyEdge {
  std::size_t member = 0;  // 1-based
  Edge edge;

  friend bool operator==(const UnhappyEdge&, const UnhappyEdge&) = default;
};

struct PartitionCheck {
  bool ok = true;
  std::vector<UnhappyEdge> unhappy;

  explicit operator bool() const noexcept { return ok; }
};

inline bool edge_happy(const Edge& e, unsigned cls, const ColorPartition& f, Mode mode) {
  if (mode == Mode::star) return std::any_of(e.begin(), e.end(), [&](Color c) { return f.class_of[c] == cls; });
  return std::any_of(e.begin(), e.end(), [&](Color c) { return f.class_of[c] != cls; });
}

inline PartitionCheck check_partition(const HypergraphFamily& fam, const ColorPartition& f, Mode mode) {
  if (f.class_of.size() != fam.num_vertices)
    throw PreconditionError("color partition covers " + std::to_string(f.class_of.size()) + " colors, family has " +
                            std::to_string(fam.num_vertices));
  for (auto cls : f.class_of)
    if (cls >= fam.k()) throw PreconditionError("color class " + std::to_string(cls + 1) + " exceeds k");
  PartitionCheck out;
  for (std::size_t i = 0; i < fam.k(); ++i)
    for (const auto& e : fam.members[i].edges)
      if (!edge_happy(e, static_cast<unsigned>(i), f, mode)) out.unhappy.push_back({i + 1, e});
  out.ok = out.unhappy.empty();
  return out;
}

}  // namespace sepchoose
