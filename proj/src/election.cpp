#include "fvc/election.hpp"

#include <algorithm>
#include <cctype>

namespace fvc {

bool is_valid_candidate_name(std::string_view name) {
  if (name.empty()) return false;
  for (unsigned char ch : name) {
    if (std::isspace(ch) || ch == '|' || ch == '#') return false;
  }
  if (name.back() == ':') return false;
  if (name.front() == '[') return false;
  return true;
}

Election::Election(std::vector<std::string> candidate_names, std::vector<Vote> votes)
    : names_(std::move(candidate_names)), votes_(std::move(votes)) {
  index_.reserve(names_.size());
  for (size_t i = 0; i < names_.size(); ++i) {
    if (!is_valid_candidate_name(names_[i])) {
      throw Error("invalid candidate name: '" + names_[i] + "'");
    }
    if (!index_.emplace(names_[i], static_cast<CandidateId>(i)).second) {
      throw Error("duplicate candidate name: " + names_[i]);
    }
  }
  const int m = num_candidates();
  std::vector<char> seen(m, 0);
  for (const Vote& v : votes_) {
    std::fill(seen.begin(), seen.end(), 0);
    for (CandidateId c : v.approved) {
      if (c < 0 || c >= m) throw Error("vote references candidate id out of range");
      if (seen[c]) throw Error("duplicate candidate in approved prefix: " + names_[c]);
      seen[c] = 1;
    }
  }
}

const std::string& Election::candidate_name(CandidateId c) const {
  if (c < 0 || c >= num_candidates()) throw Error("candidate id out of range");
  return names_[c];
}

CandidateId Election::candidate_id(std::string_view name) const {
  auto found = find_candidate(name);
  if (!found) throw Error("unknown candidate: " + std::string(name));
  return *found;
}

std::optional<CandidateId> Election::find_candidate(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

void require_candidate(const Election& e, CandidateId c) {
  if (c < 0 || c >= e.num_candidates()) throw Error("candidate id out of range");
}

}  // namespace

int level_score(const Election& e, CandidateId c, int level) {
  require_candidate(e, c);
  if (level < 1) throw Error("level must be >= 1");
  int score = 0;
  for (const Vote& v : e.votes()) {
    const size_t limit = std::min<size_t>(v.approved.size(), static_cast<size_t>(level));
    for (size_t r = 0; r < limit; ++r) {
      if (v.approved[r] == c) {
        ++score;
        break;
      }
    }
  }
  return score;
}

int level_score(const Election& e, std::string_view candidate, int level) {
  return level_score(e, e.candidate_id(candidate), level);
}

int approval_score(const Election& e, CandidateId c) {
  require_candidate(e, c);
  int score = 0;
  for (const Vote& v : e.votes()) {
    if (std::find(v.approved.begin(), v.approved.end(), c) != v.approved.end()) ++score;
  }
  return score;
}

int approval_score(const Election& e, std::string_view candidate) {
  return approval_score(e, e.candidate_id(candidate));
}

int majority_threshold(const Election& e) { return e.num_votes() / 2 + 1; }

OutcomeEvaluator::OutcomeEvaluator(const Election& e)
    : e_(&e), cum_(e.num_candidates(), 0), pos_(e.num_votes(), 0) {}

int OutcomeEvaluator::run(std::span<const char> cand_alive, std::span<const char> vote_alive) {
  const auto& votes = e_->votes();
  const int m = e_->num_candidates();
  const int nv = e_->num_votes();
  std::fill(cum_.begin(), cum_.end(), 0);
  std::fill(pos_.begin(), pos_.end(), 0);

  int alive_votes = 0;
  for (int v = 0; v < nv; ++v) alive_votes += vote_alive[v] ? 1 : 0;
  int alive_cands = 0;
  for (int c = 0; c < m; ++c) alive_cands += cand_alive[c] ? 1 : 0;
  threshold_ = alive_votes / 2 + 1;

  bool majority = false;
  for (int level = 1; level <= alive_cands; ++level) {
    bool progressed = false;
    for (int v = 0; v < nv; ++v) {
      if (!vote_alive[v]) continue;
      const auto& approved = votes[v].approved;
      int& p = pos_[v];
      while (p < static_cast<int>(approved.size()) && !cand_alive[approved[p]]) ++p;
      if (p < static_cast<int>(approved.size())) {
        const CandidateId c = approved[p];
        ++p;
        if (++cum_[c] == threshold_) majority = true;
        progressed = true;
      }
    }
    if (majority) return level;
    // Every surviving ballot is exhausted: scores are final, no strict
    // majority can appear at a later level.
    if (!progressed) break;
  }
  return 0;
}

Outcome OutcomeEvaluator::outcome(std::span<const char> cand_alive,
                                  std::span<const char> vote_alive) {
  const int m = e_->num_candidates();
  bool any_alive = false;
  for (int c = 0; c < m; ++c) any_alive = any_alive || cand_alive[c];
  if (!any_alive) throw Error("winner determination over an empty candidate set");

  const int stop_level = run(cand_alive, vote_alive);
  Outcome out;
  if (stop_level > 0) {
    out.kind = Outcome::Kind::LevelWinners;
    out.level = stop_level;
    int best = 0;
    for (int c = 0; c < m; ++c) {
      if (cand_alive[c] && cum_[c] >= threshold_) best = std::max(best, cum_[c]);
    }
    for (int c = 0; c < m; ++c) {
      if (cand_alive[c] && cum_[c] >= threshold_ && cum_[c] == best) out.winners.push_back(c);
    }
  } else {
    out.kind = Outcome::Kind::ScoreWinners;
    int best = -1;
    for (int c = 0; c < m; ++c) {
      if (cand_alive[c]) best = std::max(best, cum_[c]);
    }
    for (int c = 0; c < m; ++c) {
      if (cand_alive[c] && cum_[c] == best) out.winners.push_back(c);
    }
  }
  return out;
}

bool OutcomeEvaluator::unique_winner_is(CandidateId cand, std::span<const char> cand_alive,
                                        std::span<const char> vote_alive) {
  if (cand < 0 || cand >= e_->num_candidates() || !cand_alive[cand]) return false;
  const int m = e_->num_candidates();
  const int stop_level = run(cand_alive, vote_alive);
  if (stop_level > 0) {
    if (cum_[cand] < threshold_) return false;
    for (int c = 0; c < m; ++c) {
      if (c != cand && cand_alive[c] && cum_[c] >= threshold_ && cum_[c] >= cum_[cand]) return false;
    }
    return true;
  }
  for (int c = 0; c < m; ++c) {
    if (c != cand && cand_alive[c] && cum_[c] >= cum_[cand]) return false;
  }
  return true;
}

Outcome fv_outcome(const Election& e) {
  if (e.num_candidates() == 0) throw Error("election has no candidates");
  OutcomeEvaluator eval(e);
  std::vector<char> cand_alive(e.num_candidates(), 1);
  std::vector<char> vote_alive(e.num_votes(), 1);
  return eval.outcome(cand_alive, vote_alive);
}

bool is_unique_winner(const Election& e, CandidateId c) {
  require_candidate(e, c);
  if (e.num_candidates() == 0) throw Error("election has no candidates");
  OutcomeEvaluator eval(e);
  std::vector<char> cand_alive(e.num_candidates(), 1);
  std::vector<char> vote_alive(e.num_votes(), 1);
  return eval.unique_winner_is(c, cand_alive, vote_alive);
}

bool is_unique_winner(const Election& e, std::string_view candidate) {
  return is_unique_winner(e, e.candidate_id(candidate));
}

Election restrict_candidates(const Election& e, std::span<const CandidateId> keep) {
  const int m = e.num_candidates();
  std::vector<char> keep_mask(m, 0);
  for (CandidateId c : keep) {
    require_candidate(e, c);
    if (keep_mask[c]) throw Error("duplicate candidate in keep set");
    keep_mask[c] = 1;
  }
  std::vector<std::string> names;
  std::vector<CandidateId> remap(m, -1);
  for (int c = 0; c < m; ++c) {
    if (keep_mask[c]) {
      remap[c] = static_cast<CandidateId>(names.size());
      names.push_back(e.candidate_name(c));
    }
  }
  std::vector<Vote> votes;
  votes.reserve(e.num_votes());
  for (const Vote& v : e.votes()) {
    Vote nv;
    for (CandidateId c : v.approved) {
      if (keep_mask[c]) nv.approved.push_back(remap[c]);
    }
    votes.push_back(std::move(nv));
  }
  return Election(std::move(names), std::move(votes));
}

Election add_votes(const Election& e, std::vector<Vote> extra) {
  std::vector<Vote> votes = e.votes();
  votes.insert(votes.end(), std::make_move_iterator(extra.begin()),
               std::make_move_iterator(extra.end()));
  return Election(e.candidate_names(), std::move(votes));
}

Election remove_votes(const Election& e, std::span<const int> indices) {
  std::vector<char> drop(e.num_votes(), 0);
  for (int i : indices) {
    if (i < 0 || i >= e.num_votes()) throw Error("vote index out of range");
    if (drop[i]) throw Error("duplicate vote index in removal set");
    drop[i] = 1;
  }
  std::vector<Vote> votes;
  votes.reserve(e.num_votes());
  for (int i = 0; i < e.num_votes(); ++i) {
    if (!drop[i]) votes.push_back(e.votes()[i]);
  }
  return Election(e.candidate_names(), std::move(votes));
}

}  // namespace fvc
