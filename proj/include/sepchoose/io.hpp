#pragma once

#include <algorithm>
#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepchoose/bounds.hpp"
#include "sepchoose/certificate.hpp"
#include "sepchoose/coloring.hpp"
#include "sepchoose/construction.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/hypergraph.hpp"

namespace sepchoose::io {

using json = nlohmann::json;

namespace detail {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

inline std::vector<Edge> parse_edges(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of edges");
  std::vector<Edge> edges;
  for (const auto& e : j) {
    Edge edge;
    try {
      edge = e.get<Edge>();
    } catch (const json::exception&) {
      throw ParseError(std::string(what) + ": edge is not an array of vertex ids");
    }
    for (std::size_t i = 1; i < edge.size(); ++i)
      if (edge[i - 1] >= edge[i]) throw ParseError(std::string(what) + ": edge " + json(edge).dump() + " is not ascending");
    edges.push_back(std::move(edge));
  }
  return edges;
}

inline void require_valid(const ValidationReport& report, const std::string& what) {
  if (!report.ok()) throw ParseError(what + ": " + report.violations.front());
}

}  // namespace detail

// {"n": int, "r": int, "edges": [[int,...],...]}
inline json to_json(const Hypergraph& h) { return {{"n", h.num_vertices}, {"r", h.uniformity}, {"edges", h.edges}}; }

inline Hypergraph hypergraph_from_json(const json& j) {
  Hypergraph h;
  h.num_vertices = detail::get<std::size_t>(j, "n");
  h.uniformity = detail::get<unsigned>(j, "r");
  h.edges = detail::parse_edges(j.at("edges"), "edges");
  detail::require_valid(validate(h), "hypergraph");
  return h;
}

// {"n", "r", "members": [edge lists], "parts": optional, "labels": optional}
inline json to_json(const HypergraphFamily& f) {
  json j{{"n", f.num_vertices}, {"r", f.uniformity}};
  json members = json::array();
  for (const auto& h : f.members) members.push_back(h.edges);
  j["members"] = std::move(members);
  if (f.partition) j["parts"] = f.partition->parts();
  if (!f.labels.empty()) j["labels"] = f.labels;
  return j;
}

inline HypergraphFamily family_from_json(const json& j) {
  HypergraphFamily f;
  f.num_vertices = detail::get<std::size_t>(j, "n");
  f.uniformity = detail::get<unsigned>(j, "r");
  const json& members = j.contains("members") ? j.at("members") : json();
  if (!members.is_array()) throw ParseError("missing field 'members'");
  for (std::size_t i = 0; i < members.size(); ++i) {
    Hypergraph h;
    h.num_vertices = f.num_vertices;
    h.uniformity = f.uniformity;
    h.edges = detail::parse_edges(members[i], ("member " + std::to_string(i + 1)).c_str());
    f.members.push_back(std::move(h));
  }
  if (j.contains("parts")) {
    try {
      f.partition = PartitionStructure::from_parts(j.at("parts").get<std::vector<VertexSet>>());
    } catch (const json::exception& e) {
      throw ParseError(std::string("parts: ") + e.what());
    } catch (const PreconditionError& e) {
      throw ParseError(std::string("parts: ") + e.what());
    }
  }
  if (j.contains("labels")) f.labels = detail::get<std::vector<std::int64_t>>(j, "labels");
  detail::require_valid(validate(f), "family");
  return f;
}

inline json to_json(const ColorPartition& p, const std::vector<std::int64_t>& labels = {}) {
  json classes = json::array();
  for (auto c : p.class_of) classes.push_back(c + 1);
  json j{{"classes", classes}};
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

// Text format: header "k r kind", then "<part> <index>: c1 ... cr" per
// vertex, parts 1-based and indices 0-based. Colors are arbitrary integer
// labels; they are mapped to dense ids in ascending label order.
inline void write_lists(std::ostream& os, const MultipartiteSpec& spec, const ListAssignment& l) {
  os << spec.k() << ' ' << l.r << ' ' << to_string(spec.kind) << '\n';
  for (std::size_t i = 0; i < l.lists.size(); ++i) {
    for (std::size_t v = 0; v < l.lists[i].size(); ++v) {
      os << i + 1 << ' ' << v << ':';
      for (Color c : l.lists[i][v]) os << ' ' << l.label(c);
      os << '\n';
    }
  }
}

namespace detail {

// Maps raw labelled lists onto dense color ids.
inline ListAssignment densify(unsigned r, const std::vector<std::vector<std::vector<std::int64_t>>>& raw) {
  std::vector<std::int64_t> labels;
  for (const auto& part : raw)
    for (const auto& list : part) labels.insert(labels.end(), list.begin(), list.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  ListAssignment l;
  l.r = r;
  l.num_colors = labels.size();
  for (const auto& part : raw) {
    std::vector<ColorList> lists;
    for (const auto& list : part) {
      ColorList dense;
      for (auto label : list)
        dense.push_back(static_cast<Color>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin()));
      std::sort(dense.begin(), dense.end());
      if (std::adjacent_find(dense.begin(), dense.end()) != dense.end())
        throw ParseError("a list repeats a color");
      lists.push_back(std::move(dense));
    }
    l.lists.push_back(std::move(lists));
  }
  bool identity = true;
  for (std::size_t i = 0; i < labels.size(); ++i) identity = identity && labels[i] == static_cast<std::int64_t>(i);
  if (!identity) l.labels = std::move(labels);
  return l;
}

}  // namespace detail

inline std::pair<MultipartiteSpec, ListAssignment> read_lists(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("list file is empty");
  std::size_t k = 0;
  unsigned r = 0;
  std::string kind;
  {
    std::istringstream header(line);
    if (!(header >> k >> r >> kind)) throw ParseError("line 1: expected header 'k r mode'");
  }
  MultipartiteSpec spec{parse_kind(kind), std::vector<std::size_t>(k, 0)};
  std::vector<std::map<std::size_t, std::vector<std::int64_t>>> seen(k);
  while (next_line()) {
    const auto where = "line " + std::to_string(line_no) + ": ";
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(where + "expected '<part> <index>: colors'");
    std::istringstream head(line.substr(0, colon));
    std::istringstream body(line.substr(colon + 1));
    std::size_t part = 0;
    std::size_t index = 0;
    if (!(head >> part >> index) || part < 1 || part > k) throw ParseError(where + "bad part/index");
    std::vector<std::int64_t> colors;
    std::int64_t c;
    while (body >> c) colors.push_back(c);
    if (!body.eof()) throw ParseError(where + "non-integer color");
    if (colors.size() != r) throw ParseError(where + "list has " + std::to_string(colors.size()) + " colors, expected " + std::to_string(r));
    if (!seen[part - 1].emplace(index, std::move(colors)).second) throw ParseError(where + "duplicate vertex");
  }
  std::vector<std::vector<std::vector<std::int64_t>>> raw(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t expect = 0;
    for (auto& [index, colors] : seen[i]) {
      if (index != expect) throw ParseError("part " + std::to_string(i + 1) + " is missing vertex " + std::to_string(expect));
      raw[i].push_back(std::move(colors));
      ++expect;
    }
    spec.part_sizes[i] = raw[i].size();
  }
  auto l = detail::densify(r, raw);
  detail::require_valid(validate(spec, l), "list assignment");
  return {spec, l};
}

// {"kind": "graph"|"hypergraph", "r": int, "parts": [[[label,...],...],...]}
inline json to_json(const MultipartiteSpec& spec, const ListAssignment& l) {
  json parts = json::array();
  for (const auto& part : l.lists) {
    json lists = json::array();
    for (const auto& list : part) {
      json labels = json::array();
      for (Color c : list) labels.push_back(l.label(c));
      lists.push_back(std::move(labels));
    }
    parts.push_back(std::move(lists));
  }
  return {{"kind", to_string(spec.kind)}, {"k", spec.k()}, {"r", l.r}, {"parts", parts}};
}

inline std::pair<MultipartiteSpec, ListAssignment> lists_from_json(const json& j) {
  const auto kind = parse_kind(detail::get<std::string>(j, "kind"));
  const auto r = detail::get<unsigned>(j, "r");
  const auto raw = detail::get<std::vector<std::vector<std::vector<std::int64_t>>>>(j, "parts");
  MultipartiteSpec spec{kind, {}};
  for (const auto& part : raw) spec.part_sizes.push_back(part.size());
  for (const auto& part : raw)
    for (const auto& list : part)
      if (list.size() != r) throw ParseError("list of size " + std::to_string(list.size()) + ", expected " + std::to_string(r));
  auto l = detail::densify(r, raw);
  detail::require_valid(validate(spec, l), "list assignment");
  return {spec, l};
}

inline const char* graph_kind_name(GraphKind kind) {
  return kind == GraphKind::graph ? "complete_multipartite_graph" : "complete_k_partite_k_uniform_hypergraph";
}

// {mode, k, r, n, alpha, a, edge_counts, claim: {graph_kind, min_m, lower_bound_r_plus_1}}
inline json to_json(const Certificate& c) {
  return {{"mode", to_string(c.mode)},
          {"k", c.k},
          {"r", c.r},
          {"n", c.n},
          {"alpha", c.alpha},
          {"a", c.a.str()},
          {"edge_counts", c.edge_counts},
          {"claim",
           {{"graph_kind", graph_kind_name(c.graph_kind())},
            {"min_m", c.min_m},
            {"lower_bound_r_plus_1", c.lower_bound},
            {"statement", claim_text(c)}}}};
}

inline Certificate certificate_from_json(const json& j) {
  Certificate c;
  c.mode = parse_mode(detail::get<std::string>(j, "mode"));
  c.k = detail::get<std::size_t>(j, "k");
  c.r = detail::get<unsigned>(j, "r");
  c.n = detail::get<std::size_t>(j, "n");
  c.alpha = detail::get<std::vector<std::size_t>>(j, "alpha");
  c.a = Ratio::parse(detail::get<std::string>(j, "a"));
  if (j.contains("edge_counts")) c.edge_counts = detail::get<std::vector<std::size_t>>(j, "edge_counts");
  const json& claim = j.contains("claim") ? j.at("claim") : json();
  c.min_m = detail::get<std::size_t>(claim, "min_m");
  c.lower_bound = detail::get<unsigned>(claim, "lower_bound_r_plus_1");
  if (detail::get<std::string>(claim, "graph_kind") != graph_kind_name(c.graph_kind()))
    throw ParseError("claim graph_kind does not match mode");
  return c;
}

inline json to_json(const Lemma1Report& r) {
  json j{{"strategy", to_string(r.strategy)},
         {"t", r.t},
         {"q", r.q},
         {"edge_count", r.edge_count},
         {"edge_bound", r.edge_bound.str()},
         {"edge_bound_ok", r.edge_bound_ok},
         {"partite", r.partite},
         {"alpha_threshold", r.alpha_threshold},
         {"alpha_verified", r.alpha_verified},
         {"attempts", r.attempts},
         {"seed", r.seed},
         {"notes", r.notes}};
  j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
  return j;
}

inline json to_json(const ConstructionTrace& t) {
  const auto& p = t.params;
  json params{{"k", p.k},
              {"r", p.r},
              {"a", p.a.str()},
              {"q", t.q},
              {"strategy", to_string(p.strategy)},
              {"seed", p.seed},
              {"max_retries", p.max_retries},
              {"enumeration_cap", p.enumeration_cap},
              {"node_budget", p.search.node_budget},
              {"strict", p.strict}};
  json levels = json::array();
  for (const auto& lv : t.levels) {
    json members = json::array();
    for (const auto& m : lv.members) {
      json mj{{"vertices", m.num_vertices},
              {"edges", m.edge_count},
              {"edge_bound_ok", m.edge_bound_ok},
              {"alpha_method", m.alpha_method},
              {"alpha_ok", m.alpha_ok}};
      mj["alpha"] = m.alpha ? json(*m.alpha) : json(nullptr);
      members.push_back(std::move(mj));
    }
    levels.push_back({{"level", lv.level},
                      {"seed", lv.seed},
                      {"attempts", lv.attempts},
                      {"nearly_disjoint", lv.nearly_disjoint},
                      {"members", members}});
  }
  json padding = json::array();
  for (const auto& pr : t.padding) {
    padding.push_back({{"member", pr.member},
                       {"initial", pr.initial},
                       {"target", pr.target},
                       {"simple_added", pr.simple_added},
                       {"duplicates_added", pr.duplicates_added},
                       {"simple_capacity", pr.simple_capacity.str()},
                       {"simple_shortfall", pr.duplicates_added > 0}});
  }
  return {{"params", params}, {"levels", levels}, {"padding", padding}, {"notes", t.notes}};
}

inline json to_json(const BoundReport& b) {
  json j{{"k", b.k},
         {"m", b.m},
         {"mode", to_string(b.kind)},
         {"upper_r", b.upper_r},
         {"expected_unhappy_at_upper", b.expected_unhappy_at_upper.str()},
         {"asymptotic", b.asymptotic},
         {"consistent", b.consistent},
         {"notes", b.notes}};
  j["lower_r"] = b.lower_r ? json(*b.lower_r) : json(nullptr);
  j["lower_condition"] = b.lower_r ? json(b.lower_condition.str()) : json(nullptr);
  return j;
}

inline json to_json(const UnbalancedReport& u) {
  json candidates = json::array();
  for (const auto& c : u.candidates) {
    json intervals = json::array();
    for (const auto& s : c.intervals)
      intervals.push_back({{"i", s.member},
                           {"lower", s.lower.str()},
                           {"upper", s.upper.str()},
                           {"empty", s.empty},
                           {"contains", s.contains}});
    candidates.push_back({{"r", c.r}, {"q", c.q}, {"lower", c.lower.str()}, {"intervals", intervals}});
  }
  json j{{"m", u.m}, {"claim", u.claim}, {"candidates", candidates}, {"diagnostics", u.diagnostics}};
  j["r"] = u.r ? json(*u.r) : json(nullptr);
  return j;
}

inline json read_json(std::istream& is) {
  try {
    return json::parse(is);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace sepchoose::io
