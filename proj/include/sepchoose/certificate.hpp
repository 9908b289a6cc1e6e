#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "sepchoose/coloring.hpp"
#include "sepchoose/exact.hpp"
#include "sepchoose/hypergraph.hpp"
#include "sepchoose/independence.hpp"

namespace sepchoose {

// A checked lower bound: for every m >= min_m the target (K(k,m) in star
// mode, K^k(k,m) in star_star mode) has 1-separated r-lists from which it
// cannot be colored, so its separation choosability is at least r + 1.
struct Certificate {
  Mode mode = Mode::star;
  std::size_t k = 0;
  unsigned r = 0;
  std::size_t n = 0;
  std::vector<std::size_t> alpha;
  std::vector<std::size_t> edge_counts;
  Ratio a;
  std::size_t min_m = 0;
  unsigned lower_bound = 0;  // r + 1

  GraphKind graph_kind() const { return kind_for(mode); }

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct CertificateResult {
  bool accepted = false;
  Certificate certificate;  // premise evidence is filled in even on rejection
  std::vector<std::string> rejections;
  std::optional<NearDisjointWitness> overlap_witness;

  explicit operator bool() const noexcept { return accepted; }
};

// (k-1)/k in star mode, 1/k in star_star mode.
inline Ratio density_for(Mode mode, std::size_t k) {
  const auto kk = static_cast<std::int64_t>(k);
  return mode == Mode::star ? Ratio(kk - 1, kk) : Ratio(1, kk);
}

// Checks the premises the pigeonhole argument consumes: the members are
// pairwise nearly disjoint and every alpha(H_i) < a|V|, with alpha exact.
// Throws BudgetExceeded if an independence number cannot be settled.
inline CertificateResult verify_certificate(const HypergraphFamily& f, Mode mode, SearchOptions options = {}) {
  CertificateResult out;
  auto& cert = out.certificate;
  cert.mode = mode;
  cert.k = f.k();
  cert.r = f.uniformity;
  cert.n = f.num_vertices;
  cert.lower_bound = f.uniformity + 1;

  if (auto report = validate(f); !report.ok()) {
    out.rejections = report.violations;
    return out;
  }
  if (f.k() < 2) {
    out.rejections.push_back("need at least two members");
    return out;
  }
  cert.a = density_for(mode, f.k());

  if (auto nd = are_nearly_disjoint(f); !nd) {
    out.overlap_witness = nd.witness;
    out.rejections.push_back("members " + std::to_string(nd.witness->member_a) + " and " +
                             std::to_string(nd.witness->member_b) + " are not nearly disjoint: " +
                             detail::edge_str(nd.witness->edge_a) + " and " + detail::edge_str(nd.witness->edge_b));
  }
  for (std::size_t i = 0; i < f.k(); ++i) {
    const auto alpha = independence_number(f.members[i], options).alpha;
    cert.alpha.push_back(alpha);
    cert.edge_counts.push_back(f.members[i].num_edges());
    if (!less_than_fraction_of(alpha, cert.a, f.num_vertices))
      out.rejections.push_back("member " + std::to_string(i + 1) + ": alpha = " + std::to_string(alpha) +
                               " is not below " + cert.a.str() + " * " + std::to_string(f.num_vertices));
  }
  cert.min_m = cert.edge_counts.empty() ? 0 : *std::max_element(cert.edge_counts.begin(), cert.edge_counts.end());
  out.accepted = out.rejections.empty();
  return out;
}

inline std::string claim_text(const Certificate& c) {
  const std::string target = c.mode == Mode::star ? "K(" + std::to_string(c.k) + ",m)"
                                                  : "K^" + std::to_string(c.k) + "(" + std::to_string(c.k) + ",m)";
  return "χℓ(" + target + ",1) ≥ " + std::to_string(c.lower_bound) + " for all m ≥ " + std::to_string(c.min_m);
}

}  // namespace sepchoose
