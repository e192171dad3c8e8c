#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fvc/error.hpp"

namespace fvc {

// Undirected simple graph on vertices 1..n. Edges are stored normalized
// (i < j) and sorted. n is capped at 64 so vertex sets fit in one word.
class Graph {
 public:
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Bit v-1 set for every u in N[v] ∪ {v}.
  uint64_t closed_neighborhood_mask(int v) const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<uint64_t> closed_;
};

// N[v] ∪ {v}, ascending.
std::vector<int> closed_neighborhood(const Graph& g, int v);

// True iff every vertex outside s has a neighbor in s; equivalently the
// closed neighborhoods of s cover all vertices.
bool is_dominating_set(const Graph& g, std::span<const int> s);

// Exhaustive search over all subsets of size <= k; returns the
// lexicographically smallest dominating set by sorted vertex sequence
// (so {1,2} precedes {3}), or nullopt when none exists.
std::optional<std::vector<int>> find_dominating_set(const Graph& g, int k);

// Deterministic G(n, p): unordered pairs (i, j), i < j, visited in
// lexicographic order; pair accepted iff the next splitmix64 double is < p.
Graph random_graph(int n, double edge_probability, uint64_t seed);

}  // namespace fvc
