#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fvc/error.hpp"

namespace fvc {

using CandidateId = int;

// One ballot: the candidates the voter approves of, most preferred first.
// Everything not listed is disapproved — the disapproved set is always the
// complement of `approved` within the election's candidate set.
struct Vote {
  std::vector<CandidateId> approved;

  bool operator==(const Vote&) const = default;
};

// Legal candidate names are non-empty tokens without whitespace, '|' or '#'.
// Two extra reservations keep every election serializable in the line format:
// no trailing ':' (role lines, "Nx:" multiplicity prefix) and no leading '['
// (section markers).
bool is_valid_candidate_name(std::string_view name);

// Immutable after construction. Votes keep their construction order, so a
// vote's position is a stable index usable in deletion witnesses.
class Election {
 public:
  Election() = default;
  Election(std::vector<std::string> candidate_names, std::vector<Vote> votes);

  int num_candidates() const { return static_cast<int>(names_.size()); }
  int num_votes() const { return static_cast<int>(votes_.size()); }
  const std::vector<std::string>& candidate_names() const { return names_; }
  const std::string& candidate_name(CandidateId c) const;
  const std::vector<Vote>& votes() const { return votes_; }

  // Throws on unknown names; find_candidate is the non-throwing variant.
  CandidateId candidate_id(std::string_view name) const;
  std::optional<CandidateId> find_candidate(std::string_view name) const;

  bool operator==(const Election& other) const {
    return names_ == other.names_ && votes_ == other.votes_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Vote> votes_;
  std::unordered_map<std::string, CandidateId> index_;
};

struct Outcome {
  enum class Kind { LevelWinners, ScoreWinners };

  Kind kind = Kind::ScoreWinners;
  int level = 0;  // meaningful only when kind == LevelWinners
  std::vector<CandidateId> winners;  // ascending candidate ids

  bool unique() const { return winners.size() == 1; }
  bool operator==(const Outcome&) const = default;
};

// Number of voters approving c at rank <= level. Saturates at the approval
// score once level reaches the ballot length.
int level_score(const Election& e, CandidateId c, int level);
int level_score(const Election& e, std::string_view candidate, int level);

// Number of voters approving c at any rank.
int approval_score(const Election& e, CandidateId c);
int approval_score(const Election& e, std::string_view candidate);

// Smallest score that is a strict majority: floor(V/2) + 1.
int majority_threshold(const Election& e);

// Level-by-level winner determination. At the first level where some
// candidate's level score is a strict majority, the majority candidates with
// maximal level score win. If no level produces one, the candidates with
// maximal approval score win.
Outcome fv_outcome(const Election& e);

bool is_unique_winner(const Election& e, CandidateId c);
bool is_unique_winner(const Election& e, std::string_view candidate);

// New election over `keep` (original candidate order preserved); approved
// prefixes are filtered in place, the vote count is unchanged.
Election restrict_candidates(const Election& e, std::span<const CandidateId> keep);

// Vote multiset edits. Candidate set is unchanged; surviving votes keep their
// relative order.
Election add_votes(const Election& e, std::vector<Vote> extra);
Election remove_votes(const Election& e, std::span<const int> indices);

// Winner determination restricted to candidate / vote subsets without
// materializing the restricted election. Scratch buffers are reused across
// calls; one evaluator per thread.
class OutcomeEvaluator {
 public:
  explicit OutcomeEvaluator(const Election& e);

  Outcome outcome(std::span<const char> cand_alive, std::span<const char> vote_alive);
  bool unique_winner_is(CandidateId c, std::span<const char> cand_alive,
                        std::span<const char> vote_alive);

 private:
  // Runs levels until one has a strict-majority candidate. Returns that level,
  // or 0 when the election falls through to approval scores. Leaves the
  // scores as of the stopping point in cum_.
  int run(std::span<const char> cand_alive, std::span<const char> vote_alive);

  const Election* e_;
  int threshold_ = 0;
  std::vector<int> cum_;   // per-candidate score at the current level
  std::vector<int> pos_;   // per-vote cursor into the approved prefix
};

}  // namespace fvc
