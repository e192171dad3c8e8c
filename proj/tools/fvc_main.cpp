// fvc — fallback voting winner determination, exact control solvers, and
// the dominating-set reduction harness.
//
// Exit codes: 0 = success / YES, 1 = NO (a decision answered negatively),
// 2 = error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fvc/batch.hpp"
#include "fvc/io.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fvc::Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw fvc::Error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw fvc::Error("failed to write file: " + path);
}

void print_outcome(const fvc::Election& e, const fvc::Outcome& outcome) {
  if (outcome.kind == fvc::Outcome::Kind::LevelWinners) {
    std::cout << "level " << outcome.level << " winners:";
  } else {
    std::cout << "by-score winners:";
  }
  for (fvc::CandidateId c : outcome.winners) std::cout << ' ' << e.candidate_name(c);
  std::cout << '\n';
}

struct ControlProblem {
  enum class Kind { AddCandidates, DeleteCandidates, AddVoters, DeleteVoters };
  Kind kind;
  fvc::Goal goal;
};

std::optional<ControlProblem> control_problem_from_code(const std::string& code) {
  using Kind = ControlProblem::Kind;
  if (code.size() != 4) return std::nullopt;
  fvc::Goal goal;
  if (code.substr(0, 2) == "cc") {
    goal = fvc::Goal::Constructive;
  } else if (code.substr(0, 2) == "dc") {
    goal = fvc::Goal::Destructive;
  } else {
    return std::nullopt;
  }
  const std::string action = code.substr(2);
  if (action == "ac") return ControlProblem{Kind::AddCandidates, goal};
  if (action == "dc") return ControlProblem{Kind::DeleteCandidates, goal};
  if (action == "av") return ControlProblem{Kind::AddVoters, goal};
  if (action == "dv") return ControlProblem{Kind::DeleteVoters, goal};
  return std::nullopt;
}

// Prints "YES\nwitness: ..." or "NO". Returns the process exit code.
int report_witness(const fvc::Election& name_source, const std::optional<fvc::Witness>& witness,
                   const std::vector<fvc::CandidateId>& candidate_pool) {
  if (!witness) {
    std::cout << "NO\n";
    return 1;
  }
  std::cout << "YES\n";
  std::cout << "witness:";
  if (witness->elements.empty()) {
    std::cout << " (empty)";
  } else if (witness->kind == fvc::Witness::Kind::Candidates) {
    for (int i : witness->elements) std::cout << ' ' << name_source.candidate_name(candidate_pool[i]);
  } else {
    for (int i : witness->elements) std::cout << ' ' << (i + 1);  // 1-based within the pool
  }
  std::cout << '\n';
  return 0;
}

int run_control(const std::string& code, const std::string& path, std::optional<int> budget) {
  const auto problem = control_problem_from_code(code);
  if (!problem) throw fvc::Error("unknown control problem code: " + code);
  const std::string text = read_file(path);
  using Kind = ControlProblem::Kind;
  switch (problem->kind) {
    case Kind::AddCandidates: {
      const auto inst = fvc::parse_add_candidates(text, budget);
      return report_witness(inst.election, fvc::solve_add_candidates(inst, problem->goal),
                            inst.spoilers);
    }
    case Kind::DeleteCandidates: {
      const auto inst = fvc::parse_delete_candidates(text, budget);
      return report_witness(inst.election, fvc::solve_delete_candidates(inst, problem->goal),
                            fvc::deletable_pool(inst));
    }
    case Kind::AddVoters: {
      const auto inst = fvc::parse_add_voters(text, budget);
      return report_witness(inst.registered, fvc::solve_add_voters(inst, problem->goal), {});
    }
    case Kind::DeleteVoters: {
      const auto inst = fvc::parse_delete_voters(text, budget);
      return report_witness(inst.election, fvc::solve_delete_voters(inst, problem->goal), {});
    }
  }
  throw fvc::Error("unreachable");
}

int run_reduce(const std::string& code, const std::string& graph_path, int k,
               const std::string& out_path) {
  const auto construction = fvc::construction_from_code(code);
  if (!construction) throw fvc::Error("unknown construction code: " + code);
  const fvc::Graph g = fvc::parse_graph(read_file(graph_path));
  const fvc::ReducedInstance red = fvc::make_reduction(g, k, *construction);
  const std::string text = std::visit(
      [](const auto& inst) { return fvc::format_instance(inst); }, red.instance);
  std::ostringstream out;
  out << "# " << code << " instance reduced from a graph with " << g.num_vertices()
      << " vertices, " << g.num_edges() << " edges, k=" << k << '\n';
  out << text;
  write_file(out_path, out.str());
  return 0;
}

int run_verify(const std::string& code, const fvc::BatchParams& params) {
  std::vector<fvc::Construction> constructions;
  if (code == "all") {
    constructions.assign(fvc::ALL_CONSTRUCTIONS.begin(), fvc::ALL_CONSTRUCTIONS.end());
  } else {
    const auto c = fvc::construction_from_code(code);
    if (!c) throw fvc::Error("unknown construction code: " + code);
    constructions.push_back(*c);
  }
  const fvc::BatchSummary summary = fvc::run_verify_batch(constructions, params);
  std::cout << fvc::render_batch_summary(summary, params);
  return summary.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fallback voting: winners, control solvers, reduction harness"};
  app.require_subcommand(1);

  std::string election_path, candidate, code, instance_path, graph_path, out_path;
  std::optional<int> level;
  std::optional<int> budget;
  int reduce_k = 0;
  fvc::BatchParams params;

  auto* winner = app.add_subcommand("winner", "print the fallback voting outcome");
  winner->add_option("election-file", election_path)->required();

  auto* score = app.add_subcommand("score", "print a candidate's level or approval score");
  score->add_option("election-file", election_path)->required();
  score->add_option("--candidate", candidate)->required();
  score->add_option("--level", level);

  auto* control = app.add_subcommand("control", "decide a control problem, with witness");
  control
      ->add_option("problem", code,
                   "one of ccac dcac ccdc dcdc ccav dcav ccdv dcdv")
      ->required();
  control->add_option("instance-file", instance_path)->required();
  control->add_option("-k,--budget", budget, "override the instance's budget");

  auto* reduce = app.add_subcommand("reduce", "write the reduced control instance for a graph");
  reduce->add_option("construction", code, "one of ccac dcac ccdc dcdc ccav ccdv")->required();
  reduce->add_option("graph-file", graph_path)->required();
  reduce->add_option("-k,--budget", reduce_k)->required();
  reduce->add_option("-o,--output", out_path)->required();

  auto* verify = app.add_subcommand("verify", "batch equivalence check on random graphs");
  verify->add_option("construction", code, "construction code or 'all'")->required();
  verify->add_option("--n-max", params.n_max)->required();
  verify->add_option("--k-max", params.k_max)->required();
  verify->add_option("--trials", params.trials_per_cell)->required();
  verify->add_option("--p", params.edge_probability)->required();
  verify->add_option("--seed", params.seed)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (winner->parsed()) {
      const fvc::Election e = fvc::parse_election(read_file(election_path));
      print_outcome(e, fvc::fv_outcome(e));
      return 0;
    }
    if (score->parsed()) {
      const fvc::Election e = fvc::parse_election(read_file(election_path));
      const int value = level ? fvc::level_score(e, candidate, *level)
                              : fvc::approval_score(e, candidate);
      std::cout << value << '\n';
      return 0;
    }
    if (control->parsed()) return run_control(code, instance_path, budget);
    if (reduce->parsed()) return run_reduce(code, graph_path, reduce_k, out_path);
    if (verify->parsed()) return run_verify(code, params);
  } catch (const fvc::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
