#include "fvc/reductions.hpp"

#include <algorithm>

namespace fvc {

std::string_view construction_code(Construction c) {
  switch (c) {
    case Construction::AddCandidatesConstructive: return "ccac";
    case Construction::AddCandidatesDestructive: return "dcac";
    case Construction::DeleteCandidatesDestructive: return "dcdc";
    case Construction::DeleteCandidatesConstructive: return "ccdc";
    case Construction::AddVotersConstructive: return "ccav";
    case Construction::DeleteVotersConstructive: return "ccdv";
  }
  throw Error("unknown construction");
}

std::optional<Construction> construction_from_code(std::string_view code) {
  for (Construction c : ALL_CONSTRUCTIONS) {
    if (construction_code(c) == code) return c;
  }
  return std::nullopt;
}

Goal construction_goal(Construction c) {
  switch (c) {
    case Construction::AddCandidatesDestructive:
    case Construction::DeleteCandidatesDestructive:
      return Goal::Destructive;
    default:
      return Goal::Constructive;
  }
}

namespace {

std::vector<std::string> indexed_names(std::string_view prefix, int count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (int i = 1; i <= count; ++i) out.push_back(std::string(prefix) + std::to_string(i));
  return out;
}

void append_all(std::vector<CandidateId>& dst, int first_id, int count) {
  for (int i = 0; i < count; ++i) dst.push_back(first_id + i);
}

int clamp_budget(const Graph& g, int k) {
  if (k < 1) throw Error("budget must be >= 1");
  return std::min(k, g.num_vertices());
}

int require_budget_in_range(const Graph& g, int k) {
  if (k < 1 || k > g.num_vertices()) {
    throw Error("budget must satisfy 1 <= k <= n");
  }
  return k;
}

void require_min_vertices(const Graph& g, int min_n) {
  if (g.num_vertices() < min_n) {
    throw Error("construction requires at least " + std::to_string(min_n) + " vertices");
  }
}

}  // namespace

ReducedInstance reduce_add_candidates(const Graph& g, int k, Goal goal) {
  require_min_vertices(g, 3);
  k = clamp_budget(g, k);
  const int n = g.num_vertices();
  const int x_count = n - 1;
  const int y_count = n - 2;
  const int z_count = goal == Goal::Constructive ? n - 1 : n - 2;

  // Universe order: qualified candidates first (c, w, x, y, z), spoilers (b) last.
  const CandidateId id_c = 0, id_w = 1;
  const int x0 = 2, y0 = x0 + x_count, z0 = y0 + y_count, b0 = z0 + z_count;
  std::vector<std::string> names = {"c", "w"};
  auto x_names = indexed_names("x", x_count);
  auto y_names = indexed_names("y", y_count);
  auto z_names = indexed_names("z", z_count);
  auto b_names = indexed_names("b", n);
  names.insert(names.end(), x_names.begin(), x_names.end());
  names.insert(names.end(), y_names.begin(), y_names.end());
  names.insert(names.end(), z_names.begin(), z_names.end());
  names.insert(names.end(), b_names.begin(), b_names.end());

  std::vector<Vote> votes;
  std::vector<int> groups;
  // Group 1, one vote per vertex:  N_c[b_i]  x1..x_{n-1}  c  |  rest
  for (int i = 1; i <= n; ++i) {
    Vote v;
    for (int u : closed_neighborhood(g, i)) v.approved.push_back(b0 + u - 1);
    append_all(v.approved, x0, x_count);
    v.approved.push_back(id_c);
    votes.push_back(std::move(v));
    groups.push_back(1);
  }
  // Group 2, n votes:  y1..y_{n-2}  c  w  |  rest
  for (int i = 0; i < n; ++i) {
    Vote v;
    append_all(v.approved, y0, y_count);
    v.approved.push_back(id_c);
    v.approved.push_back(id_w);
    votes.push_back(std::move(v));
    groups.push_back(2);
  }
  // Group 3, one vote:  z1..  w  |  rest   (the destructive variant also ranks c last)
  {
    Vote v;
    append_all(v.approved, z0, z_count);
    v.approved.push_back(id_w);
    if (goal == Goal::Destructive) v.approved.push_back(id_c);
    votes.push_back(std::move(v));
    groups.push_back(3);
  }

  ReducedInstance red;
  red.construction = goal == Goal::Constructive ? Construction::AddCandidatesConstructive
                                                : Construction::AddCandidatesDestructive;
  AddCandidatesInstance inst;
  inst.election = Election(std::move(names), std::move(votes));
  append_all(inst.spoilers, b0, n);
  inst.designated = goal == Goal::Constructive ? id_w : id_c;
  inst.budget = k;
  red.instance = std::move(inst);
  red.roles.b = std::move(b_names);
  red.roles.x = std::move(x_names);
  red.roles.y = std::move(y_names);
  red.roles.z = std::move(z_names);
  red.roles.c = "c";
  red.roles.w = "w";
  red.vote_group = std::move(groups);
  return red;
}

ReducedInstance reduce_delete_candidates(const Graph& g, int k, Goal goal) {
  require_min_vertices(g, 3);
  k = require_budget_in_range(g, k);
  const int n = g.num_vertices();

  std::vector<std::vector<int>> nc(n);
  int total_nc = 0;
  for (int i = 1; i <= n; ++i) {
    nc[i - 1] = closed_neighborhood(g, i);
    total_nc += static_cast<int>(nc[i - 1].size());
  }
  const int x_count = n * n - total_nc;
  const int y_count = n - 1;
  const int z_count = n - 2;

  const CandidateId id_c = 0, id_w = 1;
  const int b0 = 2, x0 = b0 + n, y0 = x0 + x_count, z0 = y0 + y_count;
  std::vector<std::string> names = {"c", "w"};
  auto b_names = indexed_names("b", n);
  auto x_names = indexed_names("x", x_count);
  auto y_names = indexed_names("y", y_count);
  auto z_names = indexed_names("z", z_count);
  names.insert(names.end(), b_names.begin(), b_names.end());
  names.insert(names.end(), x_names.begin(), x_names.end());
  names.insert(names.end(), y_names.begin(), y_names.end());
  names.insert(names.end(), z_names.begin(), z_names.end());

  std::vector<Vote> votes;
  std::vector<int> groups;
  std::vector<std::vector<std::string>> slices(n);
  // Group 1, one vote per vertex:  N_c[b_i]  X_i  w  |  rest
  // The x-padding is sliced so that w sits at rank n+1 in every group-1 vote:
  // |X_i| = n - |N_c[b_i]|, slices consecutive in x index order.
  int slice_start = 0;
  for (int i = 1; i <= n; ++i) {
    Vote v;
    for (int u : nc[i - 1]) v.approved.push_back(b0 + u - 1);
    const int slice_len = n - static_cast<int>(nc[i - 1].size());
    for (int j = 0; j < slice_len; ++j) {
      v.approved.push_back(x0 + slice_start + j);
      slices[i - 1].push_back(x_names[slice_start + j]);
    }
    slice_start += slice_len;
    v.approved.push_back(id_w);
    votes.push_back(std::move(v));
    groups.push_back(1);
  }
  // Group 2:  y1..y_{n-1}  c  |  rest   (n votes, or n-1 in the constructive variant)
  const int full_y_votes = goal == Goal::Destructive ? n : n - 1;
  for (int i = 0; i < full_y_votes; ++i) {
    Vote v;
    append_all(v.approved, y0, y_count);
    v.approved.push_back(id_c);
    votes.push_back(std::move(v));
    groups.push_back(2);
  }
  // Constructive only, one vote:  y2..y_{n-1}  c  w  |  rest
  if (goal == Goal::Constructive) {
    Vote v;
    append_all(v.approved, y0 + 1, y_count - 1);
    v.approved.push_back(id_c);
    v.approved.push_back(id_w);
    votes.push_back(std::move(v));
    groups.push_back(3);
  }
  // Final vote:  z1..z_{n-2}  w  c  |  rest
  {
    Vote v;
    append_all(v.approved, z0, z_count);
    v.approved.push_back(id_w);
    v.approved.push_back(id_c);
    votes.push_back(std::move(v));
    groups.push_back(goal == Goal::Constructive ? 4 : 3);
  }

  ReducedInstance red;
  red.construction = goal == Goal::Constructive ? Construction::DeleteCandidatesConstructive
                                                : Construction::DeleteCandidatesDestructive;
  DeleteCandidatesInstance inst;
  inst.election = Election(std::move(names), std::move(votes));
  inst.designated = goal == Goal::Constructive ? id_w : id_c;
  inst.budget = k;
  red.instance = std::move(inst);
  red.roles.b = std::move(b_names);
  red.roles.x = std::move(x_names);
  red.roles.y = std::move(y_names);
  red.roles.z = std::move(z_names);
  red.roles.c = "c";
  red.roles.w = "w";
  red.vote_group = std::move(groups);
  red.x_slices = std::move(slices);
  return red;
}

ReducedInstance reduce_add_voters(const Graph& g, int k) {
  if (k < 2) {
    // With k = 1 there are no registered voters at all and the front-runner
    // argument degenerates; such budgets are rejected rather than guessed at.
    throw Error("adding-voters construction requires k >= 2");
  }
  const int n = g.num_vertices();
  if (k > n) throw Error("budget must not exceed the vertex count");

  const CandidateId id_w = n, id_x = n + 1;
  std::vector<std::string> names = indexed_names("b", n);
  auto b_names = names;
  names.push_back("w");
  names.push_back("x");

  // Registered: k-1 votes approving only x.
  std::vector<Vote> registered_votes(k - 1, Vote{{id_x}});
  std::vector<int> groups(k - 1, 1);
  // Unregistered, one vote per vertex:  B - N_c[b_i]  w  |  N_c[b_i]  x
  std::vector<Vote> unregistered;
  for (int i = 1; i <= n; ++i) {
    const uint64_t nc_mask = g.closed_neighborhood_mask(i);
    Vote v;
    for (int u = 1; u <= n; ++u) {
      if (!(nc_mask & (1ULL << (u - 1)))) v.approved.push_back(u - 1);
    }
    v.approved.push_back(id_w);
    unregistered.push_back(std::move(v));
    groups.push_back(2);
  }

  ReducedInstance red;
  red.construction = Construction::AddVotersConstructive;
  AddVotersInstance inst;
  inst.registered = Election(std::move(names), std::move(registered_votes));
  inst.unregistered = std::move(unregistered);
  inst.designated = id_w;
  inst.budget = k;
  red.instance = std::move(inst);
  red.roles.b = std::move(b_names);
  red.roles.w = "w";
  red.roles.x_front = "x";
  red.vote_group = std::move(groups);
  return red;
}

ReducedInstance reduce_delete_voters(const Graph& g, int k) {
  const int n = g.num_vertices();
  k = require_budget_in_range(g, k);

  const CandidateId id_w = n;
  std::vector<std::string> names = indexed_names("b", n);
  auto b_names = names;
  names.push_back("w");

  std::vector<Vote> votes;
  std::vector<int> groups;
  // Group 1, one vote per vertex:  N_c[b_i]  |  rest
  for (int i = 1; i <= n; ++i) {
    Vote v;
    for (int u : closed_neighborhood(g, i)) v.approved.push_back(u - 1);
    votes.push_back(std::move(v));
    groups.push_back(1);
  }
  // Group 2, one vote per vertex:  B - N_c[b_i]  w  |  N_c[b_i]
  for (int i = 1; i <= n; ++i) {
    const uint64_t nc_mask = g.closed_neighborhood_mask(i);
    Vote v;
    for (int u = 1; u <= n; ++u) {
      if (!(nc_mask & (1ULL << (u - 1)))) v.approved.push_back(u - 1);
    }
    v.approved.push_back(id_w);
    votes.push_back(std::move(v));
    groups.push_back(2);
  }
  // Group 3, k votes approving nobody.
  for (int i = 0; i < k; ++i) {
    votes.emplace_back();
    groups.push_back(3);
  }

  ReducedInstance red;
  red.construction = Construction::DeleteVotersConstructive;
  DeleteVotersInstance inst;
  inst.election = Election(std::move(names), std::move(votes));
  inst.designated = id_w;
  inst.budget = k;
  red.instance = std::move(inst);
  red.roles.b = std::move(b_names);
  red.roles.w = "w";
  red.vote_group = std::move(groups);
  return red;
}

ReducedInstance make_reduction(const Graph& g, int k, Construction c) {
  switch (c) {
    case Construction::AddCandidatesConstructive:
      return reduce_add_candidates(g, k, Goal::Constructive);
    case Construction::AddCandidatesDestructive:
      return reduce_add_candidates(g, k, Goal::Destructive);
    case Construction::DeleteCandidatesDestructive:
      return reduce_delete_candidates(g, k, Goal::Destructive);
    case Construction::DeleteCandidatesConstructive:
      return reduce_delete_candidates(g, k, Goal::Constructive);
    case Construction::AddVotersConstructive:
      return reduce_add_voters(g, k);
    case Construction::DeleteVotersConstructive:
      return reduce_delete_voters(g, k);
  }
  throw Error("unknown construction");
}

std::optional<Witness> solve_reduced(const ReducedInstance& red, const SolveOptions& options) {
  const Goal goal = construction_goal(red.construction);
  return std::visit(
      [&](const auto& inst) -> std::optional<Witness> {
        using T = std::decay_t<decltype(inst)>;
        if constexpr (std::is_same_v<T, AddCandidatesInstance>) {
          return solve_add_candidates(inst, goal, options);
        } else if constexpr (std::is_same_v<T, DeleteCandidatesInstance>) {
          return solve_delete_candidates(inst, goal, options);
        } else if constexpr (std::is_same_v<T, AddVotersInstance>) {
          return solve_add_voters(inst, goal, options);
        } else {
          return solve_delete_voters(inst, goal, options);
        }
      },
      red.instance);
}

VerificationReport verify_equivalence(const Graph& g, int k, Construction c, uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.construction = c;
  report.n = g.num_vertices();
  report.edge_count = g.num_edges();
  report.seed = seed;
  report.k = k;

  report.ds_witness = find_dominating_set(g, std::min(k, g.num_vertices()));
  report.ds_answer = report.ds_witness.has_value();

  const ReducedInstance red = make_reduction(g, k, c);
  report.control_witness = solve_reduced(red);
  report.control_answer = report.control_witness.has_value();

  report.equivalent = report.ds_answer == report.control_answer;
  report.elapsed = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace fvc
