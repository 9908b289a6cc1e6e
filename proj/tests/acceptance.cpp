// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sepchoose/experiments.hpp"
#include "sepchoose/sepchoose.hpp"

using namespace sepchoose;

namespace {

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail.str("");
      detail << "failed: " << what;
    }
  }
};

using Clock = std::chrono::steady_clock;

bool criterion(int id, const std::string& name, double limit_seconds, const std::function<void(Check&)>& body) {
  Check c;
  const auto start = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail.str("");
    c.detail << "exception: " << e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_seconds > 0 && secs >= limit_seconds && c.ok) {
    c.ok = false;
    c.detail << " [over time limit " << limit_seconds << " s]";
  }
  std::printf("[%s] %d. %s (%.3f s) %s\n", c.ok ? "PASS" : "FAIL", id, name.c_str(), secs, c.detail.str().c_str());
  std::fflush(stdout);
  return c.ok;
}

void c5_certificate(Check& c) {
  const auto f = c5_family();
  c.require(are_nearly_disjoint(f).nearly_disjoint && oracle::nearly_disjoint(f), "nearly disjoint");
  for (const auto& h : f.members) {
    const auto alpha = independence_number(h).alpha;
    c.require(alpha == 2 && oracle::alpha(h) == 2, "alpha = 2");
    c.require(less_than_fraction_of(alpha, Ratio(1, 2), 5), "alpha < 5/2");
  }
  const auto cert = verify_certificate(f, Mode::star);
  c.require(cert.accepted, "certificate accepted");
  c.require(cert.certificate.min_m == 5 && cert.certificate.lower_bound == 3, "claim K(2,5) >= 3");
  c.require(!solve_exact(f, Mode::star).sat, "solve_exact UNSAT");
  c.require(!oracle::partition_exists(f, Mode::star), "enumeration of all 2^5 bipartitions finds none");
  if (c.ok) c.detail << claim_text(cert.certificate);
}

void lemma1_desk(Check& c) {
  for (auto strategy : {Strategy::greedy_cover, Strategy::randomized}) {
    ConstructionParams p;
    p.r = 2;
    p.a = Ratio(1, 2);
    p.t = 1;
    p.q = 8;
    p.strategy = strategy;
    const auto res = lemma1_construct(p);
    const auto& h = res.hypergraph;
    const std::string tag = std::string(to_string(strategy)) + ": ";
    c.require(h.num_vertices == 8 && h.uniformity == 2, tag + "8 vertices, 2-uniform");
    c.require(res.partition.num_parts == 8 && validate(h, &res.partition).ok(), tag + "partite w.r.t. 8 singletons");
    const auto alpha = oracle::alpha(h);
    c.require(alpha <= 3, tag + "alpha <= 3 over 2^8 subsets");
    c.require(h.num_edges() <= 128, tag + "|E| <= 128");
    c.detail << tag << "|E| = " << h.num_edges() << ", alpha = " << alpha << "; ";
  }
}

void corollary_family(Check& c) {
  ConstructionParams p;
  p.k = 2;
  p.r = 2;
  p.a = Ratio(1, 2);
  p.q = 8;
  const auto bal = balanced_family(p);
  const auto& f = bal.family;
  c.require(f.num_vertices == 64 && f.k() == 2 && f.uniformity == 2, "two 2-uniform members on 64 vertices");
  c.require(are_nearly_disjoint(f).nearly_disjoint && oracle::nearly_disjoint(f), "nearly disjoint");
  std::size_t duplicates = 0;
  for (const auto& rec : bal.trace.padding) duplicates += rec.duplicates_added;
  c.require(duplicates > 0, "duplicates reported in the trace");
  for (const auto& h : f.members) {
    c.require(h.num_edges() == 1024, "padded to 1024 edges");
    c.require(independence_number(h).alpha <= 31, "exact alpha <= 31");
  }
  const auto cert = verify_certificate(f, Mode::star);
  c.require(cert.accepted, "certificate accepted");
  c.require(cert.certificate.min_m == 1024 && cert.certificate.lower_bound == 3, "claim K(2,1024) >= 3");
  const auto b = bound_report(2, 1024, GraphKind::graph);
  c.require(b.lower_r == 2u && b.lower_condition == 1024, "lower_r = 2 with condition value 1024");
  c.require(b.upper_r == 12, "upper_r = 12");
  c.require(b.asymptotic == 10.0, "asymptotic reference 10.0");
  c.require(cert.certificate.lower_bound <= b.upper_r && b.asymptotic <= b.upper_r &&
                cert.certificate.lower_bound <= b.asymptotic,
            "sandwich 3 <= 10.0 <= 12");
  if (c.ok)
    c.detail << "alpha = " << cert.certificate.alpha[0] << ", " << cert.certificate.alpha[1] << "; " << duplicates
             << " duplicate edges; 3 <= chi <= 12";
}

constexpr int kSuitePerMode = 1000;

template <typename F>
void for_each_suite_instance(F&& f) {
  std::mt19937_64 rng(20261016);
  for (auto kind : {GraphKind::graph, GraphKind::hypergraph})
    for (int i = 0; i < kSuitePerMode; ++i) {
      const std::size_t k = 2 + rng() % 2;
      const unsigned r = 1 + static_cast<unsigned>(rng() % 3);
      auto [spec, l] = oracle::random_lists(rng, kind, k, 3, 6, r);
      f(spec, l);
    }
}

void reduction_equivalence(Check& c) {
  int agree = 0;
  int sat = 0;
  int total = 0;
  for_each_suite_instance([&](const MultipartiteSpec& spec, const ListAssignment& l) {
    ++total;
    const auto out = solve_exact(reduce(spec, l), mode_for(spec.kind));
    const bool brute = oracle::list_colorable(spec, l);
    if (out.sat == brute) ++agree;
    if (out.sat) {
      ++sat;
      c.require(is_proper_list_coloring(spec, l, realize_coloring(spec, l, out.partition)), "realized coloring");
    }
  });
  c.require(agree == total, "brute force and solver agree on every instance");
  c.detail << agree << "/" << total << " agree (" << kSuitePerMode << " per mode, " << sat << " colorable)";
}

void separation_equivalence(Check& c) {
  int agree = 0;
  int total = 0;
  int monotone_checks = 0;
  for_each_suite_instance([&](const MultipartiteSpec& spec, const ListAssignment& l) {
    ++total;
    if (check_separation(spec, l, 1).separated == are_nearly_disjoint(reduce(spec, l)).nearly_disjoint) ++agree;
    for (std::size_t s1 = 0; s1 <= l.r; ++s1)
      for (std::size_t s2 = s1; s2 <= l.r; ++s2) {
        ++monotone_checks;
        if (check_separation(spec, l, s1).separated)
          c.require(check_separation(spec, l, s2).separated, "s-monotonicity");
      }
  });
  c.require(agree == total, "separation matches near-disjointness");
  c.detail << agree << "/" << total << " agree, " << monotone_checks << " monotonicity pairs";
}

// Two members of m r-sets on n colors; an edge is kept only if it meets
// every edge of the other member in at most one color.
HypergraphFamily random_nearly_disjoint(std::mt19937_64& rng, std::size_t n, unsigned r, std::size_t m) {
  HypergraphFamily f;
  f.num_vertices = n;
  f.uniformity = r;
  f.members.assign(2, Hypergraph{n, r, {}});
  auto compatible = [&](const Edge& e, const Hypergraph& other) {
    for (const auto& x : other.edges) {
      std::size_t common = 0;
      for (Vertex v : e) common += std::binary_search(x.begin(), x.end(), v);
      if (common > 1) return false;
    }
    return true;
  };
  while (f.members[0].num_edges() < m || f.members[1].num_edges() < m) {
    const std::size_t i = f.members[0].num_edges() <= f.members[1].num_edges() ? 0 : 1;
    auto e = oracle::random_edge(rng, n, r);
    if (compatible(e, f.members[1 - i])) f.members[i].edges.push_back(std::move(e));
  }
  return f;
}

void union_bound_colorer(Check& c) {
  c.require(expected_unhappy(2, 20, 6, GraphKind::graph) == BigRational(40, 64), "expected unhappy = 40/64");
  std::mt19937_64 rng(6);
  int successes = 0;
  unsigned worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_nearly_disjoint(rng, 72, 6, 20);
    c.require(are_nearly_disjoint(f).nearly_disjoint, "generated family is nearly disjoint");
    const auto out = solve_random(f, Mode::star, static_cast<std::uint64_t>(trial), 50);
    if (out.found && check_partition(f, out.partition, Mode::star).ok) {
      ++successes;
      worst = std::max(worst, out.trials_used);
    }
  }
  c.require(successes >= 99, "at least 99 of 100 families solved");
  c.detail << successes << "/100 solved, at most " << worst << " trials";
}

void greedy_transversal_bound(Check& c) {
  std::mt19937_64 rng(7);
  int compared = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 3 + rng() % 10;
    const unsigned r = 2 + static_cast<unsigned>(rng() % 2);
    const auto h = oracle::random_hypergraph(rng, n, r, 1 + rng() % (2 * n));
    const auto t = greedy_transversal(h);
    c.require(is_transversal(h, t), "output is a transversal");
    c.require(BigRational(t.size()) <= harmonic_transversal_bound(h), "harmonic bound H(D) n / u");
    if (n <= 10) {
      ++compared;
      c.require(BigRational(t.size()) <= harmonic(max_degree(h)) * oracle::tau(h), "within H(D) of brute-force tau");
    }
  }
  c.detail << "1000 hypergraphs, " << compared << " compared with brute-force tau";
}

void unbalanced_diagnostic(Check& c) {
  const std::vector<std::vector<std::uint64_t>> cases{{5, 5}, {1023, 4000}, {1024, 1024}, {5000, 10000}, {100000, 100000}};
  for (const auto& m : cases) {
    const auto u = unbalanced_lower_threshold(m);
    const auto again = unbalanced_lower_threshold(m);
    c.require(u.diagnostics == again.diagnostics && u.r == again.r && u.claim == again.claim, "deterministic");
    c.require(!u.candidates.empty() && u.candidates.front().r == 2, "r = 2 candidate reported");
    if (u.candidates.empty()) continue;
    const auto& first = u.candidates.front();
    c.require(first.q == 8 && first.lower == 1024, "q = 8, lower value 1024");
    c.require(first.intervals[0].upper == 224 && first.intervals[0].empty, "interval i = 1 empty (224 < 1024)");
    bool diagnosed = false;
    for (const auto& d : u.diagnostics) diagnosed = diagnosed || d.find("r = 2, i = 1: interval empty") == 0;
    c.require(diagnosed, "diagnostic names the empty interval");
    if (u.r == 2u) c.require(!u.claim, "no claim at r = 2");
  }
  if (c.ok) c.detail << cases.size() << " part-size vectors, each reports capacity 224 < 1024 at r = 2";
}

}  // namespace

int main() {
  bool all = true;
  all &= criterion(1, "C5 certificate", 1.0, c5_certificate);
  all &= criterion(2, "partite desk instance (t=1, q=8, r=2, a=1/2)", 1.0, lemma1_desk);
  all &= criterion(3, "balanced family (k=2, r=2, a=1/2, q=8) and bounds sandwich", 120.0, corollary_family);
  all &= criterion(4, "reduction equivalence", 0, reduction_equivalence);
  all &= criterion(5, "separation equivalence and s-monotonicity", 0, separation_equivalence);
  all &= criterion(6, "union-bound colorer (k=2, r=6, m=20)", 30.0, union_bound_colorer);
  all &= criterion(7, "greedy transversal harmonic bound", 0, greedy_transversal_bound);
  all &= criterion(8, "unbalanced interval diagnostic at r=2", 0, unbalanced_diagnostic);
  std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAILED");
  return all ? 0 : 1;
}
