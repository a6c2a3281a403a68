#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gcr/group.hpp"
#include "gcr/irreps.hpp"

namespace gcr {

struct TrainConfig {
  std::string group_spec;
  uint64_t seed = 0;
  double train_frac = 0.4;
  int d_embed = 256;
  int hidden = 128;
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.98;
  double weight_decay = 1.0;
  long epochs = 250000;
  long eval_every = 100;
  long checkpoint_every = 1000;
  std::string loss_kind = "cross_entropy";

  void validate() const;
  std::string to_json() const;
  /// Strict parse: unknown keys are rejected.
  static TrainConfig from_json(const std::string& text);
};

/// The four weight matrices of the one-hidden-layer ReLU MLP:
///   logits = w_unembed * relu(w_mlp * [w_left[:,a]; w_right[:,b]])
/// No bias terms anywhere.
struct MlpParams {
  Eigen::MatrixXd w_left;     // d_embed x n
  Eigen::MatrixXd w_right;    // d_embed x n
  Eigen::MatrixXd w_mlp;      // h x 2*d_embed
  Eigen::MatrixXd w_unembed;  // n x h

  int n() const { return static_cast<int>(w_left.cols()); }
  int d_embed() const { return static_cast<int>(w_left.rows()); }
  int hidden() const { return static_cast<int>(w_mlp.rows()); }
  bool finite() const;
};

using Pair = std::pair<int, int>;

struct DataSplit {
  std::vector<Pair> train_pairs;
  std::vector<Pair> test_pairs;
};

/// Seeded uniform shuffle of all n^2 input pairs; the prefix of size
/// round(frac * n^2) becomes the training set. Throws on a degenerate split.
DataSplit split_dataset(const Group& g, double frac, uint64_t seed);

/// Centered normal entries with std 1/sqrt(fan_in) per matrix, drawn from a
/// counter-based generator so runs are reproducible bit-for-bit.
MlpParams init_params(const TrainConfig& cfg, int n);

/// Full forward pass record for a batch of pairs (batch-major rows).
struct ActivationCache {
  Eigen::MatrixXd preact;   // batch x h
  Eigen::MatrixXd postact;  // batch x h, relu(preact)
  Eigen::MatrixXd logits;   // batch x n
};

ActivationCache forward(const MlpParams& p, std::span<const Pair> pairs);

/// Mean cross-entropy (numerically stable log-sum-exp) and argmax accuracy
/// with lowest-index tie-breaking.
std::pair<double, double> loss_and_accuracy(const Eigen::MatrixXd& logits,
                                            std::span<const int> targets);

/// Analytic gradients of the mean cross-entropy loss. The ReLU subgradient
/// at exactly 0 is taken to be 0.
MlpParams backward(const MlpParams& p, std::span<const Pair> pairs,
                   std::span<const int> targets);

struct AdamState {
  MlpParams m;
  MlpParams v;
  long t = 0;
  static AdamState zeros_like(const MlpParams& p);
};

/// Decoupled-weight-decay AdamW update (eps = 1e-8).
void adamw_step(MlpParams& p, const MlpParams& grads, AdamState& state, const TrainConfig& cfg);

/// Tied products w_a = w_mlp[:, :d] * w_left and w_b = w_mlp[:, d:] * w_right
/// (each h x n); preactivations equal w_a[:,a] + w_b[:,b] exactly.
std::pair<Eigen::MatrixXd, Eigen::MatrixXd> effective_embeddings(const MlpParams& p);

/// Four-ReLU multiplication gadget; equals x*y exactly for x, y in {-1, 0, 1}.
double relu_multiply(double x, double y);

/// Constructs network weights that implement composition via characters for
/// the given irreps: embeddings hold flattened representation matrices, the
/// hidden layer multiplies them with ReLU gadgets that interpolate t^2/4 at
/// every attainable input sum, and the unembedding reads off traces against
/// rho(c^-1). Logits equal the weighted character sum up to float roundoff.
MlpParams hand_built_gcr_params(const Group& g, const std::vector<const Irrep*>& irreps);

double sum_sq_weights(const MlpParams& p);

}  // namespace gcr
