#include "fvc/control.hpp"

#include <algorithm>

namespace fvc {

namespace {

void check_designated(const Election& e, CandidateId designated) {
  if (designated < 0 || designated >= e.num_candidates()) {
    throw Error("designated candidate is not part of the election");
  }
}

void check_budget(int budget) {
  if (budget < 0) throw Error("budget must be >= 0");
}

void check_pool_votes(const Election& e, const std::vector<Vote>& pool) {
  const int m = e.num_candidates();
  std::vector<char> seen(m, 0);
  for (const Vote& v : pool) {
    std::fill(seen.begin(), seen.end(), 0);
    for (CandidateId c : v.approved) {
      if (c < 0 || c >= m) throw Error("pool vote references candidate id out of range");
      if (seen[c]) throw Error("duplicate candidate in pool vote");
      seen[c] = 1;
    }
  }
}

// Last earlier pool entry with an identical ballot, or -1.
std::vector<int> identical_ballot_pred(const std::vector<Vote>& pool) {
  const int n = static_cast<int>(pool.size());
  std::vector<int> pred(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = i - 1; j >= 0; --j) {
      if (pool[j].approved == pool[i].approved) {
        pred[i] = j;
        break;
      }
    }
  }
  return pred;
}

bool canonical_partial(std::span<const int> partial, std::span<const int> pred) {
  for (int e : partial) {
    const int p = pred[e];
    if (p >= 0 && !std::binary_search(partial.begin(), partial.end(), p)) return false;
  }
  return true;
}

// Size-then-lex enumeration of subsets of {0..pool_size-1} with at most
// `budget` elements. `test` sees each surviving subset; the first accepted one
// is returned. `prune` may cut a prefix and all its extensions.
template <typename TestFn, typename PruneFn>
std::optional<std::vector<int>> search_size_lex(int pool_size, int budget, TestFn&& test,
                                                PruneFn&& prune) {
  budget = std::min(budget, pool_size);
  std::vector<int> current;
  std::optional<std::vector<int>> found;

  for (int size = 0; size <= budget && !found; ++size) {
    auto dfs = [&](auto&& self, int start) -> bool {
      if (static_cast<int>(current.size()) == size) {
        if (test(current)) {
          found = current;
          return true;
        }
        return false;
      }
      const int need = size - static_cast<int>(current.size());
      for (int v = start; v <= pool_size - need; ++v) {
        current.push_back(v);
        if (prune(current) && self(self, v + 1)) return true;
        current.pop_back();
      }
      return false;
    };
    dfs(dfs, 0);
  }
  return found;
}

bool goal_satisfied(Goal goal, bool designated_unique) {
  return goal == Goal::Constructive ? designated_unique : !designated_unique;
}

}  // namespace

void validate(const AddCandidatesInstance& inst) {
  check_designated(inst.election, inst.designated);
  check_budget(inst.budget);
  std::vector<char> spoiler(inst.election.num_candidates(), 0);
  for (CandidateId d : inst.spoilers) {
    if (d < 0 || d >= inst.election.num_candidates()) throw Error("spoiler id out of range");
    if (spoiler[d]) throw Error("duplicate spoiler candidate");
    spoiler[d] = 1;
  }
  if (spoiler[inst.designated]) throw Error("designated candidate must be qualified, not a spoiler");
}

void validate(const DeleteCandidatesInstance& inst) {
  check_designated(inst.election, inst.designated);
  check_budget(inst.budget);
}

void validate(const AddVotersInstance& inst) {
  check_designated(inst.registered, inst.designated);
  check_budget(inst.budget);
  check_pool_votes(inst.registered, inst.unregistered);
}

void validate(const DeleteVotersInstance& inst) {
  check_designated(inst.election, inst.designated);
  check_budget(inst.budget);
}

std::vector<CandidateId> deletable_pool(const DeleteCandidatesInstance& inst) {
  std::vector<CandidateId> pool;
  pool.reserve(inst.election.num_candidates() - 1);
  for (CandidateId c = 0; c < inst.election.num_candidates(); ++c) {
    if (c != inst.designated) pool.push_back(c);
  }
  return pool;
}

std::optional<Witness> solve_add_candidates(const AddCandidatesInstance& inst, Goal goal,
                                            const SolveOptions& options) {
  (void)options;  // no sound candidate-pool pruning implemented; kept conservative
  validate(inst);
  const Election& e = inst.election;
  std::vector<char> cand_alive(e.num_candidates(), 1);
  for (CandidateId d : inst.spoilers) cand_alive[d] = 0;
  const std::vector<char> vote_alive(e.num_votes(), 1);
  OutcomeEvaluator eval(e);

  auto test = [&](const std::vector<int>& subset) {
    for (int i : subset) cand_alive[inst.spoilers[i]] = 1;
    const bool unique = eval.unique_winner_is(inst.designated, cand_alive, vote_alive);
    for (int i : subset) cand_alive[inst.spoilers[i]] = 0;
    return goal_satisfied(goal, unique);
  };
  auto found = search_size_lex(static_cast<int>(inst.spoilers.size()), inst.budget, test,
                               [](const std::vector<int>&) { return true; });
  if (!found) return std::nullopt;
  return Witness{Witness::Kind::Candidates, std::move(*found)};
}

std::optional<Witness> solve_delete_candidates(const DeleteCandidatesInstance& inst, Goal goal,
                                               const SolveOptions& options) {
  (void)options;
  validate(inst);
  const Election& e = inst.election;
  const std::vector<CandidateId> pool = deletable_pool(inst);
  std::vector<char> cand_alive(e.num_candidates(), 1);
  const std::vector<char> vote_alive(e.num_votes(), 1);
  OutcomeEvaluator eval(e);

  auto test = [&](const std::vector<int>& subset) {
    for (int i : subset) cand_alive[pool[i]] = 0;
    const bool unique = eval.unique_winner_is(inst.designated, cand_alive, vote_alive);
    for (int i : subset) cand_alive[pool[i]] = 1;
    return goal_satisfied(goal, unique);
  };
  auto found = search_size_lex(static_cast<int>(pool.size()), inst.budget, test,
                               [](const std::vector<int>&) { return true; });
  if (!found) return std::nullopt;
  return Witness{Witness::Kind::Candidates, std::move(*found)};
}

std::optional<Witness> solve_add_voters(const AddVotersInstance& inst, Goal goal,
                                        const SolveOptions& options) {
  validate(inst);
  const Election combined = add_votes(inst.registered, inst.unregistered);
  const int base = inst.registered.num_votes();
  const std::vector<char> cand_alive(combined.num_candidates(), 1);
  std::vector<char> vote_alive(combined.num_votes(), 1);
  std::fill(vote_alive.begin() + base, vote_alive.end(), 0);
  OutcomeEvaluator eval(combined);

  auto test = [&](const std::vector<int>& subset) {
    for (int i : subset) vote_alive[base + i] = 1;
    const bool unique = eval.unique_winner_is(inst.designated, cand_alive, vote_alive);
    for (int i : subset) vote_alive[base + i] = 0;
    return goal_satisfied(goal, unique);
  };
  const std::vector<int> pred = identical_ballot_pred(inst.unregistered);
  auto prune = [&](const std::vector<int>& partial) {
    return !options.use_pruning || canonical_partial(partial, pred);
  };
  auto found =
      search_size_lex(static_cast<int>(inst.unregistered.size()), inst.budget, test, prune);
  if (!found) return std::nullopt;
  return Witness{Witness::Kind::Votes, std::move(*found)};
}

std::optional<Witness> solve_delete_voters(const DeleteVotersInstance& inst, Goal goal,
                                           const SolveOptions& options) {
  validate(inst);
  const Election& e = inst.election;
  const std::vector<char> cand_alive(e.num_candidates(), 1);
  std::vector<char> vote_alive(e.num_votes(), 1);
  OutcomeEvaluator eval(e);

  auto test = [&](const std::vector<int>& subset) {
    for (int i : subset) vote_alive[i] = 0;
    const bool unique = eval.unique_winner_is(inst.designated, cand_alive, vote_alive);
    for (int i : subset) vote_alive[i] = 1;
    return goal_satisfied(goal, unique);
  };
  const std::vector<int> pred = identical_ballot_pred(e.votes());
  auto prune = [&](const std::vector<int>& partial) {
    return !options.use_pruning || canonical_partial(partial, pred);
  };
  auto found = search_size_lex(e.num_votes(), inst.budget, test, prune);
  if (!found) return std::nullopt;
  return Witness{Witness::Kind::Votes, std::move(*found)};
}

PruneDecision prune_subset(std::span<const int> partial, const AddCandidatesInstance& inst,
                           Goal goal) {
  (void)partial;
  (void)inst;
  (void)goal;
  return PruneDecision::Keep;
}

PruneDecision prune_subset(std::span<const int> partial, const DeleteCandidatesInstance& inst,
                           Goal goal) {
  (void)partial;
  (void)inst;
  (void)goal;
  return PruneDecision::Keep;
}

PruneDecision prune_subset(std::span<const int> partial, const AddVotersInstance& inst,
                           Goal goal) {
  (void)goal;
  const std::vector<int> pred = identical_ballot_pred(inst.unregistered);
  return canonical_partial(partial, pred) ? PruneDecision::Keep : PruneDecision::Discard;
}

PruneDecision prune_subset(std::span<const int> partial, const DeleteVotersInstance& inst,
                           Goal goal) {
  (void)goal;
  const std::vector<int> pred = identical_ballot_pred(inst.election.votes());
  return canonical_partial(partial, pred) ? PruneDecision::Keep : PruneDecision::Discard;
}

Election apply_action(const AddCandidatesInstance& inst, std::span<const int> subset) {
  std::vector<char> alive(inst.election.num_candidates(), 1);
  for (CandidateId d : inst.spoilers) alive[d] = 0;
  for (int i : subset) alive[inst.spoilers.at(i)] = 1;
  std::vector<CandidateId> keep;
  for (CandidateId c = 0; c < inst.election.num_candidates(); ++c) {
    if (alive[c]) keep.push_back(c);
  }
  return restrict_candidates(inst.election, keep);
}

Election apply_action(const DeleteCandidatesInstance& inst, std::span<const int> subset) {
  const std::vector<CandidateId> pool = deletable_pool(inst);
  std::vector<char> alive(inst.election.num_candidates(), 1);
  for (int i : subset) alive[pool.at(i)] = 0;
  std::vector<CandidateId> keep;
  for (CandidateId c = 0; c < inst.election.num_candidates(); ++c) {
    if (alive[c]) keep.push_back(c);
  }
  return restrict_candidates(inst.election, keep);
}

Election apply_action(const AddVotersInstance& inst, std::span<const int> subset) {
  std::vector<Vote> extra;
  extra.reserve(subset.size());
  for (int i : subset) extra.push_back(inst.unregistered.at(i));
  return add_votes(inst.registered, std::move(extra));
}

Election apply_action(const DeleteVotersInstance& inst, std::span<const int> subset) {
  std::vector<int> indices(subset.begin(), subset.end());
  return remove_votes(inst.election, indices);
}

}  // namespace fvc
