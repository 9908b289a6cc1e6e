#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sepchoose/experiments.hpp"
#include "sepchoose/io.hpp"
#include "sepchoose/sepchoose.hpp"

namespace sepchoose::cli {

// Exit codes: a valid positive answer, a valid negative answer (UNSAT,
// rejected), and no answer (error, exhausted budget or trials).
enum Exit : int { kOk = 0, kNegative = 1, kUnknown = 2 };

struct RunConfig {
  std::string subcommand;
  std::string input;
  std::string output;
  std::string trace_output;
  std::string certificate;
  std::uint64_t seed = 0;
  unsigned k = 2;
  unsigned r = 2;
  std::string a = "1/2";
  std::optional<unsigned> q;
  std::optional<std::size_t> t;  // set: build one partite hypergraph on t*q vertices
  std::string strategy = "randomized";
  unsigned max_retries = 16;
  std::string mode;
  std::string method = "exact";
  unsigned trials = 50;
  std::uint64_t budget = 20'000'000;
  std::string format = "json";
  std::vector<std::uint64_t> m;
  bool pad = true;
  bool allow_duplicates = true;
  bool strict = true;
};

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool looks_like_json(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && (text[first] == '{' || text[first] == '[');
}

inline io::json read_json_file(const std::string& path) {
  std::istringstream in(read_file(path));
  return io::read_json(in);
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  std::ostream& stream() { return path_.empty() ? fallback_ : buffer_; }

  void flush() {
    if (path_.empty()) return;
    std::ofstream out(path_, std::ios::binary);
    if (!out) throw Error("cannot write '" + path_ + "'");
    out << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

inline void write_json(const std::string& path, std::ostream& fallback, const io::json& j) {
  Output out(path, fallback);
  out.stream() << j.dump(2) << '\n';
  out.flush();
}

inline SearchOptions search_options(const RunConfig& c) { return SearchOptions{c.budget}; }

inline SolveOptions solve_options(const RunConfig& c) { return SolveOptions{c.budget, search_options(c)}; }

inline ConstructionParams construction_params(const RunConfig& c) {
  ConstructionParams p;
  p.k = c.k;
  p.r = c.r;
  p.a = Ratio::parse(c.a);
  p.q = c.q;
  p.strategy = parse_strategy(c.strategy);
  p.seed = c.seed;
  p.max_retries = c.max_retries;
  p.search = search_options(c);
  p.strict = c.strict;
  return p;
}

inline io::json witness_json(const NearDisjointWitness& w) {
  return {{"member_a", w.member_a}, {"edge_a", w.edge_a}, {"member_b", w.member_b}, {"edge_b", w.edge_b}};
}

inline int cmd_construct(const RunConfig& c, std::ostream& out) {
  auto params = construction_params(c);
  if (c.t) {
    params.t = *c.t;
    const auto res = lemma1_construct(params);
    auto j = io::to_json(res.hypergraph);
    j["parts"] = res.partition.parts();
    write_json(c.output, out, j);
    if (!c.trace_output.empty()) write_json(c.trace_output, out, io::to_json(res.report));
    return kOk;
  }
  HypergraphFamily family;
  ConstructionTrace trace;
  if (c.pad) {
    auto built = balanced_family(params, c.allow_duplicates);
    family = std::move(built.family);
    trace = std::move(built.trace);
  } else {
    auto built = iterative_family(params);
    family = std::move(built.family);
    trace = std::move(built.trace);
  }
  write_json(c.output, out, io::to_json(family));
  if (!c.trace_output.empty()) write_json(c.trace_output, out, io::to_json(trace));
  return kOk;
}

inline int cmd_verify(const RunConfig& c, std::ostream& out) {
  const auto j = read_json_file(c.input);
  HypergraphFamily f;
  f.num_vertices = io::detail::get<std::size_t>(j, "n");
  f.uniformity = io::detail::get<unsigned>(j, "r");
  // Structural violations are reported, not thrown, so parse leniently.
  for (const auto& member : j.at("members")) {
    Hypergraph h{f.num_vertices, f.uniformity, member.get<std::vector<Edge>>()};
    f.members.push_back(std::move(h));
  }
  if (j.contains("parts")) f.partition = PartitionStructure::from_parts(j.at("parts").get<std::vector<VertexSet>>());

  io::json report;
  const auto validation = validate(f);
  report["valid"] = validation.ok();
  report["violations"] = validation.violations;
  bool ok = validation.ok();
  if (validation.ok()) {
    const auto nd = are_nearly_disjoint(f);
    report["nearly_disjoint"] = nd.nearly_disjoint;
    if (nd.witness) report["witness"] = witness_json(*nd.witness);
    ok = ok && nd.nearly_disjoint;

    std::optional<Ratio> density;
    if (!c.mode.empty()) density = density_for(parse_mode(c.mode), f.k());
    else if (!c.a.empty()) density = Ratio::parse(c.a);
    if (density) report["a"] = density->str();
    io::json members = io::json::array();
    for (std::size_t i = 0; i < f.k(); ++i) {
      const auto alpha = independence_number(f.members[i], search_options(c));
      io::json mj{{"member", i + 1},
                  {"edges", f.members[i].num_edges()},
                  {"max_degree", max_degree(f.members[i])},
                  {"alpha", alpha.alpha}};
      if (density) {
        const bool below = less_than_fraction_of(alpha.alpha, *density, f.num_vertices);
        mj["alpha_below_a_n"] = below;
        ok = ok && below;
      }
      members.push_back(std::move(mj));
    }
    report["members"] = std::move(members);

    if (!c.certificate.empty()) {
      const auto claimed = io::certificate_from_json(read_json_file(c.certificate));
      const auto recomputed = verify_certificate(f, claimed.mode, search_options(c));
      const bool match = recomputed.accepted && recomputed.certificate == claimed;
      report["certificate_reverified"] = match;
      ok = ok && match;
    }
  }
  write_json(c.output, out, report);
  return ok ? kOk : kNegative;
}

inline int cmd_solve(const RunConfig& c, std::ostream& out) {
  const std::string text = read_file(c.input);
  std::optional<std::pair<MultipartiteSpec, ListAssignment>> lists;
  HypergraphFamily f;
  if (looks_like_json(text)) {
    std::istringstream in(text);
    const auto j = io::read_json(in);
    if (j.contains("members")) f = io::family_from_json(j);
    else lists = io::lists_from_json(j);
  } else {
    std::istringstream in(text);
    lists = io::read_lists(in);
  }
  Mode mode = Mode::star;
  if (lists) {
    f = reduce(lists->first, lists->second);
    mode = mode_for(lists->first.kind);
    if (!c.mode.empty() && parse_mode(c.mode) != mode) throw PreconditionError("--mode contradicts the list file");
  } else {
    if (c.mode.empty()) throw PreconditionError("--mode is required for a family file");
    mode = parse_mode(c.mode);
  }

  io::json report{{"mode", to_string(mode)}, {"method", c.method}};
  std::optional<ColorPartition> partition;
  int code = kOk;
  if (c.method == "exact") {
    const auto outcome = solve_exact(f, mode, solve_options(c));
    report["log"] = outcome.log;
    report["nodes"] = outcome.nodes;
    if (outcome.sat) partition = outcome.partition;
    report["status"] = outcome.sat ? "SAT" : "UNSAT";
    code = outcome.sat ? kOk : kNegative;
  } else if (c.method == "random") {
    const auto outcome = solve_random(f, mode, c.seed, c.trials);
    report["trials_used"] = outcome.trials_used;
    report["seed"] = c.seed;
    if (outcome.found) partition = outcome.partition;
    report["status"] = outcome.found ? "SAT" : "UNKNOWN";
    code = outcome.found ? kOk : kUnknown;
  } else {
    throw ParseError("unknown method '" + c.method + "' (expected exact or random)");
  }
  if (partition) {
    report["partition"] = io::to_json(*partition, f.labels);
    if (lists) {
      const auto coloring = realize_coloring(lists->first, lists->second, *partition);
      io::json parts = io::json::array();
      for (const auto& part : coloring) {
        io::json colors = io::json::array();
        for (Color col : part) colors.push_back(lists->second.label(col));
        parts.push_back(std::move(colors));
      }
      report["coloring"] = std::move(parts);
    }
  }
  write_json(c.output, out, report);
  return code;
}

inline int cmd_certify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto f = io::family_from_json(read_json_file(c.input));
  const Mode mode = c.mode.empty() ? Mode::star : parse_mode(c.mode);
  const auto result = verify_certificate(f, mode, search_options(c));
  if (!result.accepted) {
    for (const auto& why : result.rejections) err << "rejected: " << why << '\n';
    io::json report{{"accepted", false}, {"rejections", result.rejections}};
    write_json(c.output, out, report);
    return kNegative;
  }
  write_json(c.output, out, io::to_json(result.certificate));
  return kOk;
}

inline int cmd_gen_lists(const RunConfig& c, std::ostream& out) {
  const auto f = io::family_from_json(read_json_file(c.input));
  const GraphKind kind = c.mode.empty() ? GraphKind::graph : parse_kind(c.mode);
  std::optional<std::vector<std::size_t>> target;
  if (!c.m.empty()) {
    if (c.m.size() == 1) target = std::vector<std::size_t>(f.k(), c.m.front());
    else target = std::vector<std::size_t>(c.m.begin(), c.m.end());
  }
  const auto [spec, lists] = lists_from_family(f, kind, target);
  Output o(c.output, out);
  if (c.format == "json") o.stream() << io::to_json(spec, lists).dump(2) << '\n';
  else io::write_lists(o.stream(), spec, lists);
  o.flush();
  return kOk;
}

inline void bounds_table(std::ostream& os, const BoundReport& b) {
  auto row = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(28) << key << value << '\n';
  };
  row("k", std::to_string(b.k));
  row("m", std::to_string(b.m));
  row("mode", to_string(b.kind));
  row("upper_r", std::to_string(b.upper_r));
  row("lower_r", b.lower_r ? std::to_string(*b.lower_r) : "none");
  row("lower_condition", b.lower_r ? b.lower_condition.str() : "-");
  row("expected_unhappy_at_upper", b.expected_unhappy_at_upper.str());
  std::ostringstream asym;
  asym << std::fixed << std::setprecision(4) << b.asymptotic;
  row("asymptotic", asym.str());
  row("consistent", b.consistent ? "yes" : "no");
}

inline void unbalanced_table(std::ostream& os, const UnbalancedReport& u) {
  os << "r = " << (u.r ? std::to_string(*u.r) : "none") << ", claim = " << (u.claim ? "yes" : "no") << '\n';
  os << std::left << std::setw(4) << "r" << std::setw(6) << "q" << std::setw(4) << "i" << std::setw(24) << "lower"
     << std::setw(28) << "upper" << "status" << '\n';
  for (const auto& cand : u.candidates)
    for (const auto& s : cand.intervals)
      os << std::left << std::setw(4) << cand.r << std::setw(6) << cand.q << std::setw(4) << s.member << std::setw(24)
         << s.lower.str() << std::setw(28) << s.upper.str()
         << (s.empty ? "empty" : s.contains ? "contains m_i" : "excludes m_i") << '\n';
  for (const auto& d : u.diagnostics) os << "note: " << d << '\n';
}

inline int cmd_bounds(const RunConfig& c, std::ostream& out) {
  if (c.m.empty()) throw PreconditionError("--m is required");
  const GraphKind kind = c.mode.empty() ? GraphKind::graph : parse_kind(c.mode);
  Output o(c.output, out);
  if (c.m.size() == 1) {
    const auto rep = bound_report(c.k, c.m.front(), kind);
    if (c.format == "table") bounds_table(o.stream(), rep);
    else o.stream() << io::to_json(rep).dump(2) << '\n';
  } else {
    if (c.m.size() != c.k) throw PreconditionError("need exactly k part sizes");
    if (kind != GraphKind::graph) throw PreconditionError("unbalanced bounds are for graphs only");
    const auto rep = unbalanced_lower_threshold(c.m);
    if (c.format == "table") unbalanced_table(o.stream(), rep);
    else o.stream() << io::to_json(rep).dump(2) << '\n';
  }
  o.flush();
  return kOk;
}

inline int cmd_demo(const RunConfig& c, std::ostream& out) {
  bool all_ok = true;

  out << "== 5-cycle family (k=2, r=2) ==\n";
  const auto c5 = c5_family();
  const auto c5_cert = verify_certificate(c5, Mode::star, search_options(c));
  const auto c5_solve = solve_exact(c5, Mode::star, solve_options(c));
  for (const auto& line : c5_solve.log) out << "solver: " << line << '\n';
  if (c5_cert.accepted && !c5_solve.sat) {
    out << "certificate: " << io::to_json(c5_cert.certificate).dump() << '\n';
    out << "χℓ(K(2,5),1) ≥ 3\n";
  } else {
    all_ok = false;
    out << "5-cycle certificate FAILED\n";
  }

  out << "\n== balanced family (k=2, r=2, a=1/2, q=8) ==\n";
  ConstructionParams p;
  p.k = 2;
  p.r = 2;
  p.a = Ratio(1, 2);
  p.seed = c.seed;
  p.search = search_options(c);
  const auto built = balanced_family(p);
  for (const auto& pr : built.trace.padding)
    out << "member " << pr.member << ": " << pr.initial << " edges built, " << pr.simple_added << " simple + "
        << pr.duplicates_added << " duplicate edges added (simple capacity " << pr.simple_capacity.str() << ")\n";
  const auto cert = verify_certificate(built.family, Mode::star, search_options(c));
  const auto bounds = bound_report(2, built.target, GraphKind::graph);
  if (cert.accepted) {
    out << "alpha = " << cert.certificate.alpha[0] << ", " << cert.certificate.alpha[1] << " on "
        << built.family.num_vertices << " colors (need < " << cert.certificate.a.str() << " * "
        << built.family.num_vertices << ")\n";
    out << "certificate: " << io::to_json(cert.certificate).dump() << '\n';
    out << "χℓ(K(2," << built.target << "),1) ≥ " << cert.certificate.lower_bound << '\n';
  } else {
    all_ok = false;
    for (const auto& why : cert.rejections) out << "rejected: " << why << '\n';
  }
  const bool sandwich = bounds.lower_r && *bounds.lower_r + 1 == cert.certificate.lower_bound && bounds.consistent;
  std::ostringstream asym;
  asym << std::fixed << std::setprecision(1) << bounds.asymptotic;
  out << "bounds: lower_r = " << (bounds.lower_r ? std::to_string(*bounds.lower_r) : "none")
      << " (condition value " << bounds.lower_condition.str() << "), upper_r = " << bounds.upper_r << '\n';
  out << cert.certificate.lower_bound << " ≤ χℓ(K(2," << built.target << "),1) ≤ " << bounds.upper_r
      << "  (asymptotic reference " << asym.str() << ")\n";
  all_ok = all_ok && sandwich;
  return all_ok ? kOk : kUnknown;
}

inline std::vector<std::uint64_t> parse_m_list(const std::vector<std::string>& raw) {
  std::vector<std::uint64_t> out;
  for (const auto& item : raw) {
    std::stringstream ss(item);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
      if (piece.empty()) continue;
      try {
        out.push_back(std::stoull(piece));
      } catch (const std::logic_error&) {
        throw ParseError("bad --m value '" + piece + "'");
      }
    }
  }
  return out;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  try {
    if (c.subcommand == "construct") return detail::cmd_construct(c, out);
    if (c.subcommand == "verify") return detail::cmd_verify(c, out);
    if (c.subcommand == "solve") return detail::cmd_solve(c, out);
    if (c.subcommand == "certify") return detail::cmd_certify(c, out, err);
    if (c.subcommand == "gen-lists") return detail::cmd_gen_lists(c, out);
    if (c.subcommand == "bounds") return detail::cmd_bounds(c, out);
    if (c.subcommand == "demo") return detail::cmd_demo(c, out);
    err << "unknown subcommand '" << c.subcommand << "'\n";
  } catch (const BudgetExceeded& e) {
    err << "unknown: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUnknown;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Separation choosability: constructions, certificates, solvers and bounds"};
  app.require_subcommand(1);
  RunConfig c;
  std::vector<std::string> m_raw;
  std::string a_verify;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--out", c.output, "Output file (default: stdout)");
    sub->add_option("--budget", c.budget, "Node budget for exact searches");
    sub->add_option("--seed", c.seed, "Random seed");
  };

  auto* construct = app.add_subcommand("construct", "Build a nearly disjoint family and pad it");
  common(construct);
  construct->add_option("--k", c.k, "Number of members")->check(CLI::Range(2u, 16u));
  construct->add_option("--r", c.r, "Uniformity");
  construct->add_option("--a", c.a, "Density P/Q in (0,1)");
  construct->add_option("--q", c.q, "Parts per level (default ceil(r^2/a))");
  construct->add_option("--t", c.t, "Build a single partite hypergraph with parts of this size");
  construct->add_option("--strategy", c.strategy, "greedy-cover or randomized");
  construct->add_option("--max-retries", c.max_retries, "Randomized attempts per level");
  construct->add_option("--trace", c.trace_output, "Write the construction trace here");
  construct->add_flag("!--no-pad", c.pad, "Skip padding to the balanced edge count");
  construct->add_flag("!--no-duplicates", c.allow_duplicates, "Fail instead of duplicating edges");
  construct->add_flag("!--lenient", c.strict, "Record unverified checks instead of failing");

  auto* verify = app.add_subcommand("verify", "Validate a family file and report independence numbers");
  common(verify);
  verify->add_option("--in", c.input, "Family JSON")->required();
  verify->add_option("--a", a_verify, "Check alpha(H_i) < a n");
  verify->add_option("--mode", c.mode, "star|star_star: check the certificate density");
  verify->add_option("--certificate", c.certificate, "Re-verify this certificate against the family");

  auto* solve = app.add_subcommand("solve", "Solve the partition problem of a family or list file");
  common(solve);
  solve->add_option("--in", c.input, "Family JSON, list JSON or list text")->required();
  solve->add_option("--mode", c.mode, "star|star_star (graph|hypergraph)");
  solve->add_option("--method", c.method, "exact or random");
  solve->add_option("--trials", c.trials, "Random trials");

  auto* certify = app.add_subcommand("certify", "Check lower-bound premises and emit a certificate");
  common(certify);
  certify->add_option("--in", c.input, "Family JSON")->required();
  certify->add_option("--mode", c.mode, "star (default) or star_star");

  auto* gen = app.add_subcommand("gen-lists", "Turn a family into a list assignment");
  common(gen);
  gen->add_option("--in", c.input, "Family JSON")->required();
  gen->add_option("--m", m_raw, "Part sizes (one value or k values)");
  gen->add_option("--mode", c.mode, "graph or hypergraph");
  gen->add_option("--format", c.format, "text or json")->default_val("text");

  auto* bounds = app.add_subcommand("bounds", "Threshold report for K(k,m) or K^k(k,m)");
  common(bounds);
  bounds->add_option("--k", c.k, "Number of parts")->check(CLI::Range(2u, 1000u));
  bounds->add_option("--m", m_raw, "Part size, or k nondecreasing sizes")->required();
  bounds->add_option("--mode", c.mode, "graph or hypergraph");
  bounds->add_option("--format", c.format, "json or table");

  auto* demo = app.add_subcommand("demo", "Run the 5-cycle and balanced-family experiments");
  common(demo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUnknown;
  }
  for (auto* sub : app.get_subcommands()) c.subcommand = sub->get_name();
  if (c.subcommand == "verify") c.a = a_verify;
  try {
    c.m = detail::parse_m_list(m_raw);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUnknown;
  }
  return run(c, out, err);
}

}  // namespace sepchoose::cli
