#pragma once

#include <map>
#include <string>
#include <vector>

#include "gcr/interp.hpp"
#include "gcr/mlp.hpp"

namespace gcr {

struct SweepCell {
  std::string group_spec;
  uint64_t seed = 0;
  TrainConfig config;  // fully resolved (defaults + overrides)
};

struct SweepSpec {
  std::vector<SweepCell> cells;
  int parallelism = 1;
  std::string out_dir;  // optional; the CLI --out overrides

  /// Parses {"groups":[{group_spec, architecture?, seeds, overrides?}...],
  /// "parallelism"?, "out_dir"?}; rejects empty seed lists, duplicate
  /// (group, seed) cells, and non-MLP architectures.
  static SweepSpec from_json(const std::string& text);
};

struct CellDigest {
  std::string group_spec;
  uint64_t seed = 0;
  bool ok = false;
  std::string error;
  double test_acc = 0, test_loss = 0, train_loss = 0;
  double logit_fve = 0;
  std::vector<std::string> key_reps;  // in learned order
  double embed_key_wa = 0, embed_key_wb = 0, embed_key_wu = 0;  // combined key FVE
  double mlp_ab_key = 0;  // mean rho(ab) fraction over key-rep clusters
  double restricted = 0, excluded = 0;
  std::map<std::string, long> rep_first_epoch;  // -1 = never crossed
};

struct SweepSummary {
  std::vector<CellDigest> cells;  // sorted by (group, seed)
};

/// Trains and analyzes every cell, skipping cells whose digest already exists
/// on disk (resumability). Per-cell failures are recorded and the sweep
/// continues. Writes summary.csv, summary.json, and aggregate.csv.
SweepSummary run_sweep(const SweepSpec& spec, const std::string& out_dir);

/// First epoch at which each irrep's logit similarity exceeds the threshold
/// and stays above it for `sustain` consecutive evaluations (or all remaining
/// ones); -1 when never crossed.
std::map<std::string, long> rep_learning_order(const std::vector<TrajectoryPoint>& points,
                                               double threshold = 0.005, int sustain = 3);

std::string summary_csv(const SweepSummary& summary);
SweepSummary summary_from_csv(const std::string& text);

/// Mean/std rows per group in the style of a multi-seed results table.
std::string aggregate_csv(const SweepSummary& summary);

}  // namespace gcr
