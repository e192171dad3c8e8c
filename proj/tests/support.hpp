#pragma once

// Shared helpers for the test suites: seeded random elections / control
// instances, graphs from edge masks, and a plain unpruned enumeration oracle
// that works through the materializing apply_action path.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fvc/control.hpp"
#include "fvc/election.hpp"
#include "fvc/graph.hpp"
#include "fvc/io.hpp"
#include "fvc/rng.hpp"

namespace support {

inline std::vector<std::string> letter_names(int count) {
  std::vector<std::string> names;
  for (int i = 0; i < count; ++i) names.push_back(std::string(1, static_cast<char>('a' + i)));
  return names;
}

inline fvc::Vote random_vote(fvc::SplitMix64& rng, int num_candidates) {
  std::vector<int> perm(num_candidates);
  for (int i = 0; i < num_candidates; ++i) perm[i] = i;
  for (int i = num_candidates - 1; i > 0; --i) {
    const int j = static_cast<int>(rng.next_below(i + 1));
    std::swap(perm[i], perm[j]);
  }
  const int approved = static_cast<int>(rng.next_below(num_candidates + 1));
  return fvc::Vote{{perm.begin(), perm.begin() + approved}};
}

inline fvc::Election random_election(fvc::SplitMix64& rng, int max_candidates = 6,
                                     int max_votes = 9) {
  const int m = 1 + static_cast<int>(rng.next_below(max_candidates));
  const int v = static_cast<int>(rng.next_below(max_votes + 1));
  std::vector<fvc::Vote> votes;
  for (int i = 0; i < v; ++i) votes.push_back(random_vote(rng, m));
  return fvc::Election(letter_names(m), std::move(votes));
}

inline fvc::AddCandidatesInstance random_add_candidates(fvc::SplitMix64& rng) {
  const int m = 2 + static_cast<int>(rng.next_below(4));           // universe of 2..5
  const int qualified = 1 + static_cast<int>(rng.next_below(m));   // at least one qualified
  std::vector<fvc::Vote> votes;
  const int v = static_cast<int>(rng.next_below(8));
  for (int i = 0; i < v; ++i) votes.push_back(random_vote(rng, m));
  fvc::AddCandidatesInstance inst;
  inst.election = fvc::Election(letter_names(m), std::move(votes));
  for (int d = qualified; d < m; ++d) inst.spoilers.push_back(d);
  inst.designated = static_cast<int>(rng.next_below(qualified));
  inst.budget = static_cast<int>(rng.next_below(3));
  return inst;
}

inline fvc::DeleteCandidatesInstance random_delete_candidates(fvc::SplitMix64& rng) {
  fvc::DeleteCandidatesInstance inst;
  const int m = 1 + static_cast<int>(rng.next_below(5));
  std::vector<fvc::Vote> votes;
  const int v = static_cast<int>(rng.next_below(8));
  for (int i = 0; i < v; ++i) votes.push_back(random_vote(rng, m));
  inst.election = fvc::Election(letter_names(m), std::move(votes));
  inst.designated = static_cast<int>(rng.next_below(m));
  inst.budget = static_cast<int>(rng.next_below(3));
  return inst;
}

inline fvc::AddVotersInstance random_add_voters(fvc::SplitMix64& rng) {
  fvc::AddVotersInstance inst;
  const int m = 1 + static_cast<int>(rng.next_below(5));
  const int registered = static_cast<int>(rng.next_below(5));
  const int pool = static_cast<int>(rng.next_below(8 - registered));
  std::vector<fvc::Vote> votes;
  for (int i = 0; i < registered; ++i) votes.push_back(random_vote(rng, m));
  inst.registered = fvc::Election(letter_names(m), std::move(votes));
  for (int i = 0; i < pool; ++i) inst.unregistered.push_back(random_vote(rng, m));
  inst.designated = static_cast<int>(rng.next_below(m));
  inst.budget = static_cast<int>(rng.next_below(3));
  return inst;
}

inline fvc::DeleteVotersInstance random_delete_voters(fvc::SplitMix64& rng) {
  fvc::DeleteVotersInstance inst;
  const int m = 1 + static_cast<int>(rng.next_below(5));
  std::vector<fvc::Vote> votes;
  const int v = static_cast<int>(rng.next_below(8));
  for (int i = 0; i < v; ++i) votes.push_back(random_vote(rng, m));
  inst.election = fvc::Election(letter_names(m), std::move(votes));
  inst.designated = static_cast<int>(rng.next_below(m));
  inst.budget = static_cast<int>(rng.next_below(3));
  return inst;
}

// All graphs on n vertices correspond to masks over the C(n,2) vertex pairs,
// pairs in the same lexicographic order random_graph uses.
inline fvc::Graph graph_from_mask(int n, unsigned mask) {
  std::vector<std::pair<int, int>> edges;
  int bit = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j, ++bit) {
      if (mask & (1u << bit)) edges.emplace_back(i, j);
    }
  }
  return fvc::Graph(n, std::move(edges));
}

// First subset (increasing size, then lexicographic) of {0..pool-1} with at
// most `budget` elements accepted by `ok`; plain nested loops, no pruning.
inline std::optional<std::vector<int>> enumerate_min_subset(
    int pool, int budget, const std::function<bool(const std::vector<int>&)>& ok) {
  std::vector<int> subset;
  std::function<std::optional<std::vector<int>>(int, int)> grow =
      [&](int start, int remaining) -> std::optional<std::vector<int>> {
    if (remaining == 0) return ok(subset) ? std::optional(subset) : std::nullopt;
    for (int v = start; v < pool; ++v) {
      subset.push_back(v);
      auto found = grow(v + 1, remaining - 1);
      subset.pop_back();
      if (found) return found;
    }
    return std::nullopt;
  };
  for (int size = 0; size <= std::min(budget, pool); ++size) {
    if (auto found = grow(0, size)) return found;
  }
  return std::nullopt;
}

inline std::string instance_designated_name(const fvc::AddCandidatesInstance& inst) {
  return inst.election.candidate_name(inst.designated);
}
inline std::string instance_designated_name(const fvc::DeleteCandidatesInstance& inst) {
  return inst.election.candidate_name(inst.designated);
}
inline std::string instance_designated_name(const fvc::AddVotersInstance& inst) {
  return inst.registered.candidate_name(inst.designated);
}
inline std::string instance_designated_name(const fvc::DeleteVotersInstance& inst) {
  return inst.election.candidate_name(inst.designated);
}

// Enumeration oracle for a control instance: applies every subset through the
// materializing path and tests the goal on the resulting election. Candidate
// ids shift under restriction, so the designated candidate travels by name.
template <typename Instance>
std::optional<fvc::Witness> oracle_solve(const Instance& inst, int pool_size, fvc::Goal goal,
                                         fvc::Witness::Kind kind) {
  const std::string designated = instance_designated_name(inst);
  auto ok = [&](const std::vector<int>& subset) {
    const fvc::Election after = fvc::apply_action(inst, subset);
    const bool unique = fvc::is_unique_winner(after, designated);
    return goal == fvc::Goal::Constructive ? unique : !unique;
  };
  auto found = enumerate_min_subset(pool_size, inst.budget, ok);
  if (!found) return std::nullopt;
  return fvc::Witness{kind, *found};
}

}  // namespace support
