#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fvc/election.hpp"

namespace fvc {

enum class Goal {
  Constructive,  // make the designated candidate the unique winner
  Destructive,   // prevent the designated candidate from being the unique winner
};

// Adding candidates: the election is held over qualified ∪ spoilers; the chair
// may register up to `budget` spoilers. Votes rank the full universe; only the
// registered candidates count.
struct AddCandidatesInstance {
  Election election;                  // over the full universe C ∪ D
  std::vector<CandidateId> spoilers;  // D, in pool order (witness indices refer here)
  CandidateId designated = -1;        // must be qualified
  int budget = 0;

  bool operator==(const AddCandidatesInstance&) const = default;
};

struct DeleteCandidatesInstance {
  Election election;
  CandidateId designated = -1;  // may never be deleted, under either goal
  int budget = 0;

  bool operator==(const DeleteCandidatesInstance&) const = default;
};

struct AddVotersInstance {
  Election registered;            // (C, V)
  std::vector<Vote> unregistered; // W, same candidate universe; pool order
  CandidateId designated = -1;
  int budget = 0;

  bool operator==(const AddVotersInstance&) const = default;
};

struct DeleteVotersInstance {
  Election election;
  CandidateId designated = -1;
  int budget = 0;

  bool operator==(const DeleteVotersInstance&) const = default;
};

// A successful chair action: indices into the instance's action pool
// (spoilers / deletable candidates / unregistered votes / registered votes),
// ascending, at most `budget` of them.
struct Witness {
  enum class Kind { Candidates, Votes };

  Kind kind = Kind::Candidates;
  std::vector<int> elements;  // 0-based pool indices, ascending

  bool operator==(const Witness&) const = default;
};

struct SolveOptions {
  bool use_pruning = true;
};

// Instance invariant checks; solvers run them on entry.
void validate(const AddCandidatesInstance& inst);
void validate(const DeleteCandidatesInstance& inst);
void validate(const AddVotersInstance& inst);
void validate(const DeleteVotersInstance& inst);

// Each solver searches every action subset of size <= budget, in increasing
// size and then lexicographic pool order, and returns the first subset whose
// modified election satisfies the goal (designated is / is not the unique
// winner); nullopt when no subset works. The returned witness is therefore
// the minimum in that order, independent of pruning.
std::optional<Witness> solve_add_candidates(const AddCandidatesInstance& inst, Goal goal,
                                            const SolveOptions& options = {});
std::optional<Witness> solve_delete_candidates(const DeleteCandidatesInstance& inst, Goal goal,
                                               const SolveOptions& options = {});
std::optional<Witness> solve_add_voters(const AddVotersInstance& inst, Goal goal,
                                        const SolveOptions& options = {});
std::optional<Witness> solve_delete_voters(const DeleteVotersInstance& inst, Goal goal,
                                           const SolveOptions& options = {});

enum class PruneDecision { Keep, Discard };

// Sound search-tree pruning: Discard only when no extension of `partial` can
// change the solver's answer. The voter variants discard partial subsets that
// pick a vote while skipping an identical earlier vote (swapping the two
// preserves the outcome and lowers the subset in size-then-lex order, so the
// minimal witness never does that). Candidate pools are kept conservatively.
PruneDecision prune_subset(std::span<const int> partial, const AddCandidatesInstance& inst,
                           Goal goal);
PruneDecision prune_subset(std::span<const int> partial, const DeleteCandidatesInstance& inst,
                           Goal goal);
PruneDecision prune_subset(std::span<const int> partial, const AddVotersInstance& inst, Goal goal);
PruneDecision prune_subset(std::span<const int> partial, const DeleteVotersInstance& inst,
                           Goal goal);

// Apply an action subset, materializing the resulting election. Solvers
// evaluate subsets without materialization; these are for witness
// re-validation and for showing outcomes.
Election apply_action(const AddCandidatesInstance& inst, std::span<const int> subset);
Election apply_action(const DeleteCandidatesInstance& inst, std::span<const int> subset);
Election apply_action(const AddVotersInstance& inst, std::span<const int> subset);
Election apply_action(const DeleteVotersInstance& inst, std::span<const int> subset);

// The deletable-candidate pool: every candidate except the designated one, in
// election order. Witness indices for delete-candidates refer to this pool.
std::vector<CandidateId> deletable_pool(const DeleteCandidatesInstance& inst);

}  // namespace fvc
