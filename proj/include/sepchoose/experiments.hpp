#pragma once

#include <cstdint>
#include <vector>

#include "sepchoose/construction.hpp"
#include "sepchoose/hypergraph.hpp"

namespace sepchoose {

// The 5-cycle and its complement on colors 0..4: two edge-disjoint graphs,
// each with independence number 2 < 5/2.
inline HypergraphFamily c5_family() {
  return HypergraphFamily::make(5, 2,
                                {{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}},
                                 {{0, 2}, {2, 4}, {1, 4}, {1, 3}, {0, 3}}});
}

struct BalancedFamily {
  HypergraphFamily family;
  ConstructionTrace trace;
  std::size_t target = 0;  // common member size after padding
};

// Iterative construction followed by padding every member to
// floor(4 q^k (1/a)^r) edges.
inline BalancedFamily balanced_family(const ConstructionParams& params, bool allow_duplicates = true) {
  auto built = iterative_family(params);
  BalancedFamily out;
  out.target = balanced_edge_target(params.k, params.r, params.a, built.trace.q).convert_to<std::size_t>();
  auto padded = pad_family(built.family, std::vector<std::size_t>(params.k, out.target), allow_duplicates);
  out.family = std::move(padded.family);
  out.trace = std::move(built.trace);
  out.trace.padding = std::move(padded.records);
  return out;
}

}  // namespace sepchoose
