#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sepchoose/error.hpp"
#include "sepchoose/exact.hpp"
#include "sepchoose/hypergraph.hpp"

namespace sepchoose {

// Greedy hitting set for an arbitrary set system over elements
// [0, num_elements): repeatedly take the element lying in the most sets not
// yet hit, smallest id on ties. Sets are counted with multiplicity. Returns
// the chosen elements in ascending order.
inline std::vector<std::size_t> greedy_hitting_set(std::size_t num_elements,
                                                   std::span<const std::vector<std::size_t>> sets) {
  std::vector<std::vector<std::size_t>> containing(num_elements);
  std::vector<std::size_t> degree(num_elements, 0);
  for (std::size_t s = 0; s < sets.size(); ++s) {
    if (sets[s].empty()) throw PreconditionError("set " + std::to_string(s) + " is empty and cannot be hit");
    for (auto x : sets[s]) {
      if (x >= num_elements) throw PreconditionError("set element out of range");
      containing[x].push_back(s);
      ++degree[x];
    }
  }

  std::vector<bool> hit(sets.size(), false);
  std::size_t remaining = sets.size();
  std::vector<std::size_t> chosen;
  while (remaining > 0) {
    std::size_t best = 0;
    for (std::size_t x = 1; x < num_elements; ++x)
      if (degree[x] > degree[best]) best = x;
    if (degree[best] == 0) throw InternalError("greedy hitting set stalled with sets remaining");
    chosen.push_back(best);
    for (auto s : containing[best]) {
      if (hit[s]) continue;
      hit[s] = true;
      --remaining;
      for (auto x : sets[s]) --degree[x];
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

// Greedy transversal of h. Throws PreconditionError on an empty edge.
inline VertexSet greedy_transversal(const Hypergraph& h) {
  std::vector<std::vector<std::size_t>> sets;
  sets.reserve(h.edges.size());
  for (const auto& e : h.edges) sets.emplace_back(e.begin(), e.end());
  VertexSet out;
  for (auto x : greedy_hitting_set(h.num_vertices, sets)) out.push_back(static_cast<Vertex>(x));
  return out;
}

// (1 + 1/2 + ... + 1/Delta) * |V| / u, u the minimum edge size. Zero for
// an edgeless hypergraph.
inline BigRational harmonic_transversal_bound(const Hypergraph& h) {
  if (h.edges.empty()) return 0;
  const auto u = min_edge_size(h);
  if (u == 0) throw PreconditionError("hypergraph has an empty edge");
  return harmonic(max_degree(h)) * BigRational(h.num_vertices, u);
}

}  // namespace sepchoose
