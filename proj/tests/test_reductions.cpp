#include <doctest.h>

#include <algorithm>

#include "fvc/reductions.hpp"
#include "fvc/rng.hpp"
#include "support.hpp"

using namespace fvc;

namespace {

Graph path3() { return Graph(3, {{1, 2}, {2, 3}}); }
Graph isolated3() { return Graph(3, {}); }
Graph complete4() { return Graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

// Translate a dominating set into the matching control-action subset
// (pool indices). For adding voters the set is padded to exactly k vertices;
// a smaller dominating set leaves the designated candidate one approval short.
std::vector<int> transfer_witness(const ReducedInstance& red, const Graph& g,
                                  std::vector<int> ds, int k) {
  switch (red.construction) {
    case Construction::AddCandidatesConstructive:
    case Construction::AddCandidatesDestructive: {
      std::vector<int> subset;
      for (int v : ds) subset.push_back(v - 1);  // spoiler pool is b1..bn
      return subset;
    }
    case Construction::DeleteCandidatesDestructive:
    case Construction::DeleteCandidatesConstructive: {
      const auto& inst = std::get<DeleteCandidatesInstance>(red.instance);
      const auto pool = deletable_pool(inst);
      std::vector<int> subset;
      for (int v : ds) {
        const CandidateId id = inst.election.candidate_id("b" + std::to_string(v));
        const auto it = std::find(pool.begin(), pool.end(), id);
        subset.push_back(static_cast<int>(it - pool.begin()));
      }
      std::sort(subset.begin(), subset.end());
      return subset;
    }
    case Construction::AddVotersConstructive: {
      for (int v = 1; static_cast<int>(ds.size()) < k; ++v) {
        if (std::find(ds.begin(), ds.end(), v) == ds.end()) ds.push_back(v);
      }
      std::vector<int> subset;
      for (int v : ds) subset.push_back(v - 1);
      std::sort(subset.begin(), subset.end());
      (void)g;
      return subset;
    }
    case Construction::DeleteVotersConstructive: {
      std::vector<int> subset;
      for (int v : ds) subset.push_back(v - 1);  // group-1 vote of vertex v
      std::sort(subset.begin(), subset.end());
      return subset;
    }
  }
  return {};
}

template <typename Fn>
void visit_instance_election(const ReducedInstance& red, Fn&& fn) {
  std::visit(
      [&](const auto& inst) {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, AddVotersInstance>) {
          fn(inst.registered);
        } else {
          fn(inst.election);
        }
      },
      red.instance);
}

}  // namespace

TEST_CASE("adding-candidates instances have the advertised shape") {
  SUBCASE("constructive, n=3") {
    const auto red = reduce_add_candidates(path3(), 1, Goal::Constructive);
    const auto& inst = std::get<AddCandidatesInstance>(red.instance);
    CHECK(inst.election.num_candidates() == 10);  // c w + 3 spoilers + 2+1+2 padding
    CHECK(inst.election.num_votes() == 7);
    CHECK(inst.spoilers.size() == 3);
    CHECK(inst.election.candidate_name(inst.designated) == "w");
    CHECK(red.roles.x.size() == 2);
    CHECK(red.roles.y.size() == 1);
    CHECK(red.roles.z.size() == 2);

    // qualified-only election: c is the unique level-3 winner, scores 2n vs n+1
    const Election base = apply_action(inst, {});
    CHECK(fvc::level_score(base, "c", 3) == 6);
    CHECK(fvc::level_score(base, "w", 3) == 4);
    const Outcome out = fvc::fv_outcome(base);
    CHECK(out.kind == Outcome::Kind::LevelWinners);
    CHECK(out.level == 3);
    CHECK(out.winners == std::vector<int>{base.candidate_id("c")});
    // in every group-1 vote restricted to qualified candidates, c has rank n
    for (int i = 0; i < 3; ++i) {
      const Vote& v = base.votes()[i];
      CHECK(v.approved.size() == 3);
      CHECK(v.approved.back() == base.candidate_id("c"));
    }
  }
  SUBCASE("destructive, n=3") {
    const auto red = reduce_add_candidates(path3(), 1, Goal::Destructive);
    const auto& inst = std::get<AddCandidatesInstance>(red.instance);
    CHECK(inst.election.num_candidates() == 9);  // z-padding shrinks by one
    CHECK(inst.election.num_votes() == 7);
    CHECK(inst.election.candidate_name(inst.designated) == "c");
    const Election base = apply_action(inst, {});
    CHECK(fvc::level_score(base, "c", 3) == 7);  // 2n+1
    CHECK(fvc::level_score(base, "w", 3) == 4);  // n+1
    CHECK(fvc::is_unique_winner(base, "c"));
  }
  SUBCASE("too-small graphs are rejected") {
    CHECK_THROWS_AS(reduce_add_candidates(Graph(2, {}), 1, Goal::Constructive), Error);
  }
  SUBCASE("budgets above n clamp to the spoiler pool") {
    const auto red = reduce_add_candidates(path3(), 9, Goal::Constructive);
    CHECK(std::get<AddCandidatesInstance>(red.instance).budget == 3);
  }
}

TEST_CASE("delete constructions enforce the budget range") {
  CHECK_THROWS_AS(reduce_delete_candidates(path3(), 4, Goal::Destructive), Error);
  CHECK_THROWS_AS(reduce_delete_candidates(path3(), 0, Goal::Constructive), Error);
  CHECK_THROWS_AS(reduce_delete_voters(path3(), 4), Error);
  CHECK_THROWS_AS(reduce_delete_voters(path3(), 0), Error);
}

TEST_CASE("deleting-candidates instances have the advertised shape") {
  SUBCASE("x-padding slices on the path") {
    const auto red = reduce_delete_candidates(path3(), 1, Goal::Destructive);
    CHECK(red.roles.x.size() == 2);  // n^2 - sum |N_c| = 9 - 7
    REQUIRE(red.x_slices.size() == 3);
    CHECK(red.x_slices[0] == std::vector<std::string>{"x1"});
    CHECK(red.x_slices[1].empty());
    CHECK(red.x_slices[2] == std::vector<std::string>{"x2"});
    CHECK(red.roles.y.size() == 2);
    CHECK(red.roles.z.size() == 1);
  }
  SUBCASE("baseline outcome, destructive") {
    const auto red = reduce_delete_candidates(path3(), 1, Goal::Destructive);
    const auto& inst = std::get<DeleteCandidatesInstance>(red.instance);
    CHECK(inst.election.num_votes() == 7);
    CHECK(inst.election.candidate_name(inst.designated) == "c");
    CHECK(fvc::level_score(inst.election, "c", 3) == 4);  // n+1
    const Outcome out = fvc::fv_outcome(inst.election);
    CHECK(out.kind == Outcome::Kind::LevelWinners);
    CHECK(out.level == 3);
    CHECK(out.winners == std::vector<int>{inst.election.candidate_id("c")});
  }
  SUBCASE("w sits at rank n+1 in every group-1 vote") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
      const Graph g = fvc::random_graph(5, 0.5, seed);
      for (Goal goal : {Goal::Constructive, Goal::Destructive}) {
        const auto red = reduce_delete_candidates(g, 2, goal);
        const auto& inst = std::get<DeleteCandidatesInstance>(red.instance);
        for (int i = 0; i < 5; ++i) {
          const Vote& v = inst.election.votes()[i];
          REQUIRE(v.approved.size() == 6);  // n+1 entries, w last
          CHECK(v.approved.back() == inst.election.candidate_id("w"));
        }
      }
    }
  }
  SUBCASE("constructive: deleting a dominating set lifts w past c") {
    const auto red = reduce_delete_candidates(path3(), 1, Goal::Constructive);
    const auto& inst = std::get<DeleteCandidatesInstance>(red.instance);
    const auto subset = transfer_witness(red, path3(), {2}, 1);
    const Election after = apply_action(inst, subset);
    CHECK(fvc::level_score(after, "w", 3) == 5);  // n+2
    CHECK(fvc::level_score(after, "c", 3) == 4);  // n+1
    CHECK(fvc::is_unique_winner(after, "w"));
  }
}

TEST_CASE("adding-voters instances have the advertised shape") {
  const auto red = reduce_add_voters(path3(), 2);
  const auto& inst = std::get<AddVotersInstance>(red.instance);
  CHECK(inst.registered.num_votes() == 1);  // k-1
  CHECK(inst.unregistered.size() == 3);
  CHECK(inst.registered.candidate_name(inst.designated) == "w");

  // registered-only: x is the unique level-1 winner
  const Outcome base = fvc::fv_outcome(inst.registered);
  CHECK(base.kind == Outcome::Kind::LevelWinners);
  CHECK(base.level == 1);
  CHECK(base.winners == std::vector<int>{inst.registered.candidate_id("x")});

  // unregistered ballots: (B - N_c[b_i]) then w
  const auto name_seq = [&](const Vote& v) {
    std::vector<std::string> names;
    for (CandidateId c : v.approved) names.push_back(inst.registered.candidate_name(c));
    return names;
  };
  CHECK(name_seq(inst.unregistered[0]) == std::vector<std::string>{"b3", "w"});
  CHECK(name_seq(inst.unregistered[1]) == std::vector<std::string>{"w"});
  CHECK(name_seq(inst.unregistered[2]) == std::vector<std::string>{"b1", "w"});

  // adding voters for a dominating set of size exactly k
  const Election after = apply_action(inst, transfer_witness(red, path3(), {2}, 2));
  CHECK(after.num_votes() == 3);  // 2k-1
  CHECK(fvc::majority_threshold(after) == 2);
  CHECK(fvc::approval_score(after, "w") == 2);
  CHECK(fvc::approval_score(after, "x") == 1);
  for (const std::string& b : red.roles.b) CHECK(fvc::approval_score(after, b) <= 1);
  CHECK(fvc::is_unique_winner(after, "w"));

  CHECK_THROWS_AS(reduce_add_voters(path3(), 1), Error);
  CHECK_THROWS_AS(reduce_add_voters(path3(), 4), Error);
}

TEST_CASE("deleting-voters instances have the advertised shape") {
  const auto red = reduce_delete_voters(path3(), 1);
  const auto& inst = std::get<DeleteVotersInstance>(red.instance);
  CHECK(inst.election.num_votes() == 7);  // 2n+k
  for (const char* name : {"b1", "b2", "b3", "w"}) {
    CHECK(fvc::approval_score(inst.election, name) == 3);
  }
  CHECK_FALSE(fvc::is_unique_winner(inst.election, "w"));

  // deleting the group-1 voter of the middle vertex leaves w alone on top
  const Election after = apply_action(inst, transfer_witness(red, path3(), {2}, 1));
  const Outcome out = fvc::fv_outcome(after);
  CHECK(out.kind == Outcome::Kind::ScoreWinners);
  CHECK(out.winners == std::vector<int>{after.candidate_id("w")});
  CHECK(fvc::approval_score(after, "w") == 3);
  for (const std::string& b : red.roles.b) CHECK(fvc::approval_score(after, b) == 2);

  // group-3 ballots approve nobody
  for (int i = 6; i < inst.election.num_votes(); ++i) {
    CHECK(inst.election.votes()[i].approved.empty());
  }
}

TEST_CASE("vote counts match the construction formulas") {
  for (uint64_t seed = 50; seed < 60; ++seed) {
    const Graph g = fvc::random_graph(6, 0.4, seed);
    const int n = 6, k = 2;
    for (Goal goal : {Goal::Constructive, Goal::Destructive}) {
      visit_instance_election(reduce_add_candidates(g, k, goal),
                              [&](const Election& e) { CHECK(e.num_votes() == 2 * n + 1); });
      visit_instance_election(reduce_delete_candidates(g, k, goal),
                              [&](const Election& e) { CHECK(e.num_votes() == 2 * n + 1); });
    }
    const auto av = reduce_add_voters(g, k);
    CHECK(std::get<AddVotersInstance>(av.instance).registered.num_votes() == k - 1);
    CHECK(std::get<AddVotersInstance>(av.instance).unregistered.size() == 6);
    visit_instance_election(reduce_delete_voters(g, k),
                            [&](const Election& e) { CHECK(e.num_votes() == 2 * n + k); });
  }
}

TEST_CASE("solver answers on worked reduction instances") {
  SUBCASE("adding candidates on the path, k=1: register b2") {
    const auto red = reduce_add_candidates(path3(), 1, Goal::Constructive);
    const auto& inst = std::get<AddCandidatesInstance>(red.instance);
    const auto witness = solve_add_candidates(inst, Goal::Constructive);
    REQUIRE(witness.has_value());
    REQUIRE(witness->elements.size() == 1);
    CHECK(inst.election.candidate_name(inst.spoilers[witness->elements[0]]) == "b2");
  }
  SUBCASE("destructive adding on isolated vertices, k=1: impossible") {
    const auto red = reduce_add_candidates(isolated3(), 1, Goal::Destructive);
    const auto& inst = std::get<AddCandidatesInstance>(red.instance);
    CHECK_FALSE(solve_add_candidates(inst, Goal::Destructive).has_value());
  }
  SUBCASE("destructive deleting on the path, k=1: remove b2") {
    const auto red = reduce_delete_candidates(path3(), 1, Goal::Destructive);
    const auto& inst = std::get<DeleteCandidatesInstance>(red.instance);
    const auto witness = solve_delete_candidates(inst, Goal::Destructive);
    REQUIRE(witness.has_value());
    REQUIRE(witness->elements.size() == 1);
    CHECK(inst.election.candidate_name(deletable_pool(inst)[witness->elements[0]]) == "b2");
  }
  SUBCASE("adding voters on the path, k=2: the first two unregistered voters") {
    const auto red = reduce_add_voters(path3(), 2);
    const auto& inst = std::get<AddVotersInstance>(red.instance);
    const auto witness = solve_add_voters(inst, Goal::Constructive);
    REQUIRE(witness.has_value());
    CHECK(witness->elements == std::vector<int>{0, 1});
  }
}

TEST_CASE("worked verification examples") {
  SUBCASE("deleting voters on the path") {
    const auto report = verify_equivalence(path3(), 1, Construction::DeleteVotersConstructive);
    CHECK(report.equivalent);
    CHECK(report.ds_answer);
    CHECK(report.ds_witness == std::vector<int>{2});
    REQUIRE(report.control_witness.has_value());
    CHECK(report.control_witness->elements == std::vector<int>{1});  // the b2 group-1 voter
  }
  SUBCASE("adding voters on isolated vertices") {
    const auto report = verify_equivalence(isolated3(), 2, Construction::AddVotersConstructive);
    CHECK(report.equivalent);
    CHECK_FALSE(report.ds_answer);
    CHECK_FALSE(report.control_answer);
  }
  SUBCASE("adding candidates on the complete graph") {
    const auto report = verify_equivalence(complete4(), 1, Construction::AddCandidatesConstructive);
    CHECK(report.equivalent);
    CHECK(report.ds_answer);
    CHECK(report.control_answer);
  }
}

TEST_CASE("equivalence holds exhaustively for the sound constructions") {
  const Construction sound[] = {
      Construction::AddCandidatesConstructive, Construction::AddCandidatesDestructive,
      Construction::DeleteCandidatesDestructive, Construction::AddVotersConstructive,
      Construction::DeleteVotersConstructive,
  };
  for (int n = 3; n <= 4; ++n) {
    const unsigned pairs = n * (n - 1) / 2;
    for (unsigned mask = 0; mask < (1u << pairs); ++mask) {
      const Graph g = support::graph_from_mask(n, mask);
      for (int k = 1; k <= 2; ++k) {
        for (Construction c : sound) {
          if (c == Construction::AddVotersConstructive && k < 2) continue;
          CHECK(verify_equivalence(g, k, c).equivalent);
        }
      }
    }
  }
}

TEST_CASE("constructive deleting defeats its own reduction by removing the rival") {
  // No dominating set of size 1 exists here, yet deleting candidate c alone
  // makes w the unique winner (w reaches the only strict majority, on level
  // n+1), so the equivalence check reports a mismatch. This is inherent to
  // the construction: c is not the designated candidate and so is deletable.
  const auto report =
      verify_equivalence(isolated3(), 1, Construction::DeleteCandidatesConstructive);
  CHECK_FALSE(report.ds_answer);
  CHECK(report.control_answer);
  CHECK_FALSE(report.equivalent);
  const auto red = reduce_delete_candidates(isolated3(), 1, Goal::Constructive);
  const auto& inst = std::get<DeleteCandidatesInstance>(red.instance);
  const auto witness = solve_delete_candidates(inst, Goal::Constructive);
  REQUIRE(witness.has_value());
  REQUIRE(witness->elements.size() == 1);
  CHECK(deletable_pool(inst)[witness->elements[0]] == inst.election.candidate_id("c"));

  // the forward direction still holds: dominating sets transfer
  const auto fwd = verify_equivalence(path3(), 1, Construction::DeleteCandidatesConstructive);
  CHECK(fwd.ds_answer);
  CHECK(fwd.control_answer);
  CHECK(fwd.equivalent);
}

TEST_CASE("dominating sets transfer to control witnesses") {
  fvc::SplitMix64 rng(616);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.next_below(4));
    const Graph g = fvc::random_graph(n, 0.4, rng.next());
    const int k = 2 + static_cast<int>(rng.next_below(2));
    if (k > n) continue;
    const auto ds = fvc::find_dominating_set(g, k);
    if (!ds) continue;
    for (Construction c : ALL_CONSTRUCTIONS) {
      const auto red = make_reduction(g, k, c);
      const auto subset = transfer_witness(red, g, *ds, k);
      const Goal goal = construction_goal(c);
      std::visit(
          [&](const auto& inst) {
            const Election after = apply_action(inst, subset);
            const bool unique_designated =
                fvc::is_unique_winner(after, support::instance_designated_name(inst));
            if (goal == Goal::Constructive) {
              CHECK(unique_designated);
            } else {
              CHECK_FALSE(unique_designated);
            }
          },
          red.instance);
    }
  }
}
