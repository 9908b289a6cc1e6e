#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sepchoose/bitset.hpp"
#include "sepchoose/error.hpp"
#include "sepchoose/hypergraph.hpp"

namespace sepchoose {

struct SearchOptions {
  // Maximum number of search nodes before BudgetExceeded is thrown.
  std::uint64_t node_budget = 20'000'000;
};

struct IndependenceResult {
  std::size_t alpha = 0;
  VertexSet witness;  // a maximum independent set, ascending
  std::uint64_t nodes = 0;
};

struct ThresholdResult {
  bool reached = false;
  VertexSet witness;  // independent, size >= threshold when reached
  std::uint64_t nodes = 0;
};

namespace detail {

// Include/exclude branch and bound over vertices in ascending id order
// (include first). The bound is a greedy clique cover of the candidate set
// for graphs and a greedy packing of disjoint residual edges otherwise.
class IndependenceSearch {
 public:
  IndependenceSearch(const Hypergraph& h, SearchOptions options)
      : n_(h.num_vertices), graph_(h.uniformity == 2), options_(options), incident_(n_) {
    const auto edges = simple_edges(h);
    Bitset forbidden(n_);
    for (const auto& e : edges) {
      if (e.size() == 1) {
        forbidden.set(e[0]);
        continue;
      }
      const auto idx = edges_.size();
      edges_.push_back(e);
      for (Vertex v : e) incident_[v].push_back(idx);
    }
    if (graph_) {
      adjacency_.assign(n_, Bitset(n_));
      for (const auto& e : edges_) {
        adjacency_[e[0]].set(e[1]);
        adjacency_[e[1]].set(e[0]);
      }
    }
    root_ = Bitset(n_);
    root_.set_all();
    root_.subtract(forbidden);
  }

  // threshold == 0 means optimise.
  void run(std::size_t threshold) {
    threshold_ = threshold;
    in_set_ = Bitset(n_);
    current_.clear();
    best_.clear();
    done_ = false;
    nodes_ = 0;
    if (threshold_ > 0 && threshold_ > n_) return;
    search(root_);
  }

  const VertexSet& best() const noexcept { return best_; }
  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void search(const Bitset& candidates) {
    if (++nodes_ > options_.node_budget) throw BudgetExceeded("independence search nodes", options_.node_budget);
    if (current_.size() > best_.size()) {
      best_ = current_;
      if (threshold_ > 0 && best_.size() >= threshold_) {
        done_ = true;
        return;
      }
    }
    if (candidates.none()) return;

    const std::size_t bound = current_.size() + upper_bound(candidates);
    if (threshold_ > 0 ? bound < threshold_ : bound <= best_.size()) return;

    const auto v = static_cast<Vertex>(candidates.first());
    Bitset without_v = candidates;
    without_v.reset(v);

    // include v
    {
      Bitset next = without_v;
      in_set_.set(v);
      for (auto idx : incident_[v]) {
        const Edge& e = edges_[idx];
        std::size_t outside = 0;
        Vertex last = 0;
        for (Vertex w : e) {
          if (!in_set_.test(w)) {
            ++outside;
            last = w;
          }
        }
        if (outside == 1) next.reset(last);
      }
      current_.push_back(v);
      search(next);
      current_.pop_back();
      in_set_.reset(v);
      if (done_) return;
    }
    // exclude v
    search(without_v);
  }

  std::size_t upper_bound(const Bitset& candidates) const {
    if (graph_) {
      Bitset rest = candidates;
      std::size_t cliques = 0;
      while (!rest.none()) {
        const auto v = rest.first();
        rest.reset(v);
        Bitset grow = rest;
        grow &= adjacency_[v];
        while (!grow.none()) {
          const auto w = grow.first();
          rest.reset(w);
          grow.reset(w);
          grow &= adjacency_[w];
        }
        ++cliques;
      }
      return cliques;
    }
    Bitset used(n_);
    std::size_t packed = 0;
    for (const auto& e : edges_) {
      bool residual = true;
      bool clash = false;
      for (Vertex w : e) {
        if (in_set_.test(w)) continue;
        if (!candidates.test(w)) {
          residual = false;
          break;
        }
        if (used.test(w)) clash = true;
      }
      if (!residual || clash) continue;
      for (Vertex w : e)
        if (!in_set_.test(w)) used.set(w);
      ++packed;
    }
    return candidates.count() - packed;
  }

  std::size_t n_;
  bool graph_;
  SearchOptions options_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
  std::vector<Bitset> adjacency_;
  Bitset root_;

  std::size_t threshold_ = 0;
  Bitset in_set_;
  VertexSet current_;
  VertexSet best_;
  bool done_ = false;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

// Exact independence number with a maximum independent set as witness.
// Throws BudgetExceeded when the node budget runs out.
inline IndependenceResult independence_number(const Hypergraph& h, SearchOptions options = {}) {
  detail::IndependenceSearch search(h, options);
  search.run(0);
  return {search.best().size(), search.best(), search.nodes()};
}

// Decides alpha(h) >= threshold. Usually far cheaper than computing alpha.
inline ThresholdResult has_independent_set(const Hypergraph& h, std::size_t threshold, SearchOptions options = {}) {
  if (threshold == 0) return {true, {}, 0};
  detail::IndependenceSearch search(h, options);
  search.run(threshold);
  const bool reached = search.best().size() >= threshold;
  return {reached, reached ? search.best() : VertexSet{}, search.nodes()};
}

}  // namespace sepchoose
