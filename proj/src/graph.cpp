#include "fvc/graph.hpp"

#include <algorithm>

#include "fvc/rng.hpp"

namespace fvc {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw Error("graph needs at least one vertex");
  if (n_ > 64) throw Error("graphs above 64 vertices are not supported");
  for (auto& [a, b] : edges_) {
    if (a < 1 || a > n_ || b < 1 || b > n_) throw Error("edge endpoint out of range");
    if (a == b) throw Error("self-loops are not allowed");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw Error("duplicate edge");
  }
  closed_.assign(n_, 0);
  for (int v = 1; v <= n_; ++v) closed_[v - 1] = 1ULL << (v - 1);
  for (const auto& [a, b] : edges_) {
    closed_[a - 1] |= 1ULL << (b - 1);
    closed_[b - 1] |= 1ULL << (a - 1);
  }
}

uint64_t Graph::closed_neighborhood_mask(int v) const {
  if (v < 1 || v > n_) throw Error("vertex out of range");
  return closed_[v - 1];
}

std::vector<int> closed_neighborhood(const Graph& g, int v) {
  const uint64_t mask = g.closed_neighborhood_mask(v);
  std::vector<int> out;
  for (int u = 1; u <= g.num_vertices(); ++u) {
    if (mask & (1ULL << (u - 1))) out.push_back(u);
  }
  return out;
}

bool is_dominating_set(const Graph& g, std::span<const int> s) {
  uint64_t covered = 0;
  for (int v : s) covered |= g.closed_neighborhood_mask(v);
  const int n = g.num_vertices();
  const uint64_t all = (n == 64) ? ~0ULL : (1ULL << n) - 1;
  return covered == all;
}

namespace {

// Preorder walk of the subset tree (extend by larger vertices only) visits
// sorted vertex sequences in lexicographic order; the first hit is the
// lexicographic minimum.
bool dominating_dfs(const Graph& g, uint64_t covered, uint64_t all, int next, int remaining,
                    std::vector<int>& current) {
  if (covered == all) return true;
  if (remaining == 0) return false;
  for (int v = next; v <= g.num_vertices(); ++v) {
    current.push_back(v);
    if (dominating_dfs(g, covered | g.closed_neighborhood_mask(v), all, v + 1, remaining - 1,
                       current)) {
      return true;
    }
    current.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_dominating_set(const Graph& g, int k) {
  const int n = g.num_vertices();
  if (k < 1 || k > n) throw Error("dominating-set bound must satisfy 1 <= k <= n");
  const uint64_t all = (n == 64) ? ~0ULL : (1ULL << n) - 1;
  std::vector<int> current;
  if (dominating_dfs(g, 0, all, 1, k, current)) return current;
  return std::nullopt;
}

Graph random_graph(int n, double edge_probability, uint64_t seed) {
  if (n < 1) throw Error("graph needs at least one vertex");
  SplitMix64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (rng.next_double() < edge_probability) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace fvc
