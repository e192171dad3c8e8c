#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fvc/reductions.hpp"

namespace fvc {

struct BatchParams {
  int n_max = 0;
  int k_max = 0;
  long trials_per_cell = 0;
  double edge_probability = 0.0;
  uint64_t seed = 0;
};

struct BatchSummary {
  struct Cell {
    Construction construction;
    int n = 0;
    int k = 0;
    long trials = 0;
    long failures = 0;
  };
  struct Tally {
    Construction construction;
    long trials = 0;
    long failures = 0;
  };

  long trials = 0;
  long failures = 0;
  uint64_t seed = 0;
  std::vector<Cell> cells;                     // deterministic (construction, n, k) order
  std::vector<Tally> per_construction;
  std::vector<VerificationReport> failure_reports;
};

// Smallest graph size the batch runner uses; satisfies every construction's
// precondition (the CLI only exposes an upper bound).
constexpr int BATCH_MIN_VERTICES = 3;

// For every cell (n, k) with BATCH_MIN_VERTICES <= n <= n_max and feasible
// k <= min(k_max, n), generates `trials_per_cell` seeded random graphs and
// checks oracle/solver equivalence on each. Deterministic given the seed;
// trials may run on multiple threads (see thread_cap), results are collected
// in (n, k, trial) order regardless of scheduling.
BatchSummary run_verify_batch(Construction construction, const BatchParams& params);
BatchSummary run_verify_batch(const std::vector<Construction>& constructions,
                              const BatchParams& params);

// Byte-stable text for a summary; identical parameters yield identical bytes.
std::string render_batch_summary(const BatchSummary& summary, const BatchParams& params);

// Worker cap from FVC_THREADS (unset or 0 = hardware concurrency).
int thread_cap();

// Runs fn(0..count-1) on up to thread_cap() workers; fn must only write to
// per-index slots.
void parallel_for(long count, const std::function<void(long)>& fn);

// Seed for trial `t` of cell (construction, n, k) under a batch seed.
uint64_t trial_seed(uint64_t seed, Construction c, int n, int k, long t);

}  // namespace fvc
