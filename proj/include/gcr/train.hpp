#pragma once

#include <string>
#include <vector>

#include "gcr/group.hpp"
#include "gcr/mlp.hpp"

namespace gcr {

struct MetricsRow {
  long epoch = 0;
  double train_loss = 0, test_loss = 0;
  double train_acc = 0, test_acc = 0;
  double sum_sq_weights = 0;
};

struct TrainResult {
  MlpParams params;
  std::vector<MetricsRow> metrics;
  std::vector<std::string> checkpoint_files;
};

/// Full-batch training loop. When `out_dir` is nonempty it receives
/// config.json, metrics.csv (appended as training progresses) and
/// ckpt_<epoch>.bin files at the checkpoint cadence plus epoch 0 and the
/// final epoch. Aborts with a diagnostic if the loss goes non-finite.
TrainResult train(const TrainConfig& cfg, const std::string& out_dir = "");

std::string metrics_csv_header();
std::string metrics_csv_row(const MetricsRow& row);
std::vector<MetricsRow> read_metrics_csv(const std::string& path);

}  // namespace gcr
