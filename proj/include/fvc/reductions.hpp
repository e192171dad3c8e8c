#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "fvc/control.hpp"
#include "fvc/graph.hpp"

namespace fvc {

// The six dominating-set constructions. A graph (B, E) with bound k maps to a
// control instance that has a successful chair action of size <= k exactly
// when the graph has a dominating set of size <= k.
enum class Construction {
  AddCandidatesConstructive,     // ccac
  AddCandidatesDestructive,      // dcac
  DeleteCandidatesDestructive,   // dcdc
  DeleteCandidatesConstructive,  // ccdc
  AddVotersConstructive,         // ccav
  DeleteVotersConstructive,      // ccdv
};

inline constexpr std::array ALL_CONSTRUCTIONS = {
    Construction::AddCandidatesConstructive,  Construction::AddCandidatesDestructive,
    Construction::DeleteCandidatesDestructive, Construction::DeleteCandidatesConstructive,
    Construction::AddVotersConstructive,       Construction::DeleteVotersConstructive,
};

std::string_view construction_code(Construction c);
std::optional<Construction> construction_from_code(std::string_view code);
Goal construction_goal(Construction c);

// Which candidates and votes play which role in a generated instance.
// Padding sets are in index order (x[0] is "x1"). Unused roles stay empty.
struct CandidateRoles {
  std::vector<std::string> b;  // one candidate per graph vertex
  std::vector<std::string> x;  // x-padding
  std::vector<std::string> y;  // y-padding
  std::vector<std::string> z;  // z-padding
  std::string c;               // front-runner in the candidate constructions
  std::string w;               // the candidate the chair works for (or its rival)
  std::string x_front;         // level-1 front-runner in the adding-voters construction
};

struct ReducedInstance {
  Construction construction;
  std::variant<AddCandidatesInstance, DeleteCandidatesInstance, AddVotersInstance,
               DeleteVotersInstance>
      instance;
  CandidateRoles roles;
  // Voter-group tag per vote, 1-based groups in construction order. For
  // adding voters the registered votes come first, then the unregistered pool.
  std::vector<int> vote_group;
  // Delete-candidates only: the x-padding slice inserted into each group-1
  // vote, indexed by graph vertex - 1.
  std::vector<std::vector<std::string>> x_slices;
};

// Generators. Graphs need n >= 3 for the candidate constructions (the y/z
// padding sets must be non-empty); adding voters needs k >= 2 (with a single
// added voter the front-runner cannot be overtaken and the registered-only
// election would be empty). Budgets above n are clamped to n.
ReducedInstance reduce_add_candidates(const Graph& g, int k, Goal goal);
ReducedInstance reduce_delete_candidates(const Graph& g, int k, Goal goal);
ReducedInstance reduce_add_voters(const Graph& g, int k);
ReducedInstance reduce_delete_voters(const Graph& g, int k);
ReducedInstance make_reduction(const Graph& g, int k, Construction c);

// One trial: the dominating-set oracle versus the control solver on the
// reduced instance. The two must agree on presence/absence.
struct VerificationReport {
  Construction construction;
  int n = 0;
  int edge_count = 0;
  uint64_t seed = 0;  // seed the graph was generated from, when known
  int k = 0;
  bool ds_answer = false;
  bool control_answer = false;
  std::optional<std::vector<int>> ds_witness;
  std::optional<Witness> control_witness;
  bool equivalent = false;
  std::chrono::duration<double> elapsed{0};
};

VerificationReport verify_equivalence(const Graph& g, int k, Construction c, uint64_t seed = 0);

// Runs the matching solver on a generated instance.
std::optional<Witness> solve_reduced(const ReducedInstance& red, const SolveOptions& options = {});

}  // namespace fvc
