#include "fvc/batch.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "fvc/rng.hpp"

namespace fvc {

int thread_cap() {
  long cap = 0;
  if (const char* env = std::getenv("FVC_THREADS")) {
    char* end = nullptr;
    cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 0) cap = 0;
  }
  if (cap == 0) cap = static_cast<long>(std::thread::hardware_concurrency());
  return static_cast<int>(std::max(1L, cap));
}

void parallel_for(long count, const std::function<void(long)>& fn) {
  if (count <= 0) return;
  const int workers = static_cast<int>(std::min<long>(thread_cap(), count));
  if (workers <= 1) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<long> next{0};
  auto loop = [&] {
    for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) threads.emplace_back(loop);
  loop();
  for (auto& t : threads) t.join();
}

uint64_t trial_seed(uint64_t seed, Construction c, int n, int k, long t) {
  uint64_t h = seed;
  h = mix_seed(h, static_cast<uint64_t>(c) + 1);
  h = mix_seed(h, static_cast<uint64_t>(n));
  h = mix_seed(h, static_cast<uint64_t>(k));
  h = mix_seed(h, static_cast<uint64_t>(t));
  return h;
}

namespace {

int min_feasible_k(Construction c) {
  return c == Construction::AddVotersConstructive ? 2 : 1;
}

struct TrialSpec {
  Construction construction;
  int n;
  int k;
  long t;
  size_t cell;
};

}  // namespace

BatchSummary run_verify_batch(const std::vector<Construction>& constructions,
                              const BatchParams& params) {
  if (params.n_max < BATCH_MIN_VERTICES) {
    throw Error("n-max must be >= " + std::to_string(BATCH_MIN_VERTICES));
  }
  if (params.trials_per_cell < 0) throw Error("trials must be >= 0");
  if (params.edge_probability < 0.0 || params.edge_probability > 1.0) {
    throw Error("edge probability must be in [0, 1]");
  }

  BatchSummary summary;
  summary.seed = params.seed;
  std::vector<TrialSpec> specs;
  for (Construction c : constructions) {
    bool c_feasible = false;
    for (int n = BATCH_MIN_VERTICES; n <= params.n_max; ++n) {
      for (int k = min_feasible_k(c); k <= std::min(params.k_max, n); ++k) {
        c_feasible = true;
        const size_t cell = summary.cells.size();
        summary.cells.push_back({c, n, k, params.trials_per_cell, 0});
        for (long t = 0; t < params.trials_per_cell; ++t) specs.push_back({c, n, k, t, cell});
      }
    }
    if (!c_feasible) {
      throw Error(std::string("no feasible (n, k) cell for ") +
                  std::string(construction_code(c)) + " within the given bounds");
    }
    summary.per_construction.push_back({c, 0, 0});
  }

  std::vector<VerificationReport> reports(specs.size());
  parallel_for(static_cast<long>(specs.size()), [&](long i) {
    const TrialSpec& s = specs[i];
    const uint64_t gs = trial_seed(params.seed, s.construction, s.n, s.k, s.t);
    const Graph g = random_graph(s.n, params.edge_probability, gs);
    reports[i] = verify_equivalence(g, s.k, s.construction, gs);
  });

  for (size_t i = 0; i < specs.size(); ++i) {
    const TrialSpec& s = specs[i];
    auto& cell = summary.cells[s.cell];
    auto tally = std::find_if(summary.per_construction.begin(), summary.per_construction.end(),
                              [&](const auto& t) { return t.construction == s.construction; });
    ++summary.trials;
    ++tally->trials;
    if (!reports[i].equivalent) {
      ++summary.failures;
      ++cell.failures;
      ++tally->failures;
      summary.failure_reports.push_back(reports[i]);
    }
  }
  return summary;
}

BatchSummary run_verify_batch(Construction construction, const BatchParams& params) {
  return run_verify_batch(std::vector<Construction>{construction}, params);
}

std::string render_batch_summary(const BatchSummary& summary, const BatchParams& params) {
  std::ostringstream out;
  out << "verify: seed=" << params.seed << " p=" << params.edge_probability
      << " n=" << BATCH_MIN_VERTICES << ".." << params.n_max << " k<=" << params.k_max
      << " trials-per-cell=" << params.trials_per_cell << '\n';
  for (const auto& cell : summary.cells) {
    out << "cell " << construction_code(cell.construction) << " n=" << cell.n << " k=" << cell.k
        << ": trials=" << cell.trials << " failures=" << cell.failures << '\n';
  }
  for (const auto& tally : summary.per_construction) {
    out << "construction " << construction_code(tally.construction) << ": trials=" << tally.trials
        << " failures=" << tally.failures << '\n';
  }
  for (const auto& report : summary.failure_reports) {
    out << "FAILED " << construction_code(report.construction) << " n=" << report.n
        << " edges=" << report.edge_count << " k=" << report.k << " seed=" << report.seed
        << " ds=" << (report.ds_answer ? "yes" : "no")
        << " control=" << (report.control_answer ? "yes" : "no") << '\n';
  }
  out << "total: trials=" << summary.trials << " failures=" << summary.failures << '\n';
  return out.str();
}

}  // namespace fvc
