#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcr/container.hpp"
#include "gcr/group.hpp"
#include "gcr/irreps.hpp"
#include "gcr/mlp.hpp"
#include "gcr/oracle.hpp"
#include "gcr/rep_basis.hpp"

namespace gcr {

/// Precomputed per-group analysis machinery: representation-space bases over
/// elements and (for n <= 256) the hidden bases over input pairs, plus
/// character-direction norms for logit attribution.
struct AnalysisContext {
  const Group* group = nullptr;
  const IrrepCatalog* catalog = nullptr;
  std::vector<RepBasis> rep_bases;                    // aligned with catalog->irreps
  std::vector<HiddenRepBasis> hidden_bases;           // empty when not materialized
  bool hidden_materialized = false;

  const RepBasis& rep_basis(const std::string& name) const;
  const HiddenRepBasis& hidden_basis(const std::string& name) const;
};

AnalysisContext make_context(const Group& g, const IrrepCatalog& catalog);

// ---- centering -------------------------------------------------------------

/// Subtracts the mean over the output dimension for each (a, b) row.
LogitTensor center_logits(const LogitTensor& t);
/// Matrix form: rows index pairs, columns index outputs. Returns row means.
Eigen::VectorXd center_logits_inplace(Eigen::MatrixXd& logits);

struct CenteredActs {
  Eigen::MatrixXd acts;      // batch x h, column means removed
  Eigen::RowVectorXd mean;   // 1 x h batch mean
};
CenteredActs center_activations(const Eigen::MatrixXd& acts);

// ---- logit attribution ------------------------------------------------------

/// Cosine similarity between the centered model logits (rows = pairs, in
/// row-major (a,b) order) and the character tensor chi(a b c^-1) of one irrep.
double logit_similarity(const Eigen::MatrixXd& centered_logits, const Group& g,
                        const Irrep& rho);

/// All similarities for the non-trivial catalog (the trivial direction is
/// removed by centering and never registers).
std::map<std::string, double> logit_similarities(const Eigen::MatrixXd& centered_logits,
                                                 const AnalysisContext& ctx);

std::vector<std::string> find_key_reps(const std::map<std::string, double>& similarities,
                                       double threshold = 0.005);

/// Fraction of centered-logit variance explained by the key character
/// directions (orthogonal across irreps by Schur orthogonality).
double logit_fve(const Eigen::MatrixXd& centered_logits, const AnalysisContext& ctx,
                 const std::vector<std::string>& key_reps);

// ---- weight-space analysis --------------------------------------------------

struct EmbeddingFve {
  std::map<std::string, double> fractions;  // non-trivial irreps, centered W
  double residual = 0;                      // 1 - sum(fractions)
  double trivial = 0;                       // share of the raw W in the mean direction
};

/// W has its group axis first (n x h): pass w_a^T, w_b^T, or w_unembed.
EmbeddingFve embedding_fve(const Eigen::MatrixXd& w, const AnalysisContext& ctx);

// ---- hidden-layer analysis --------------------------------------------------

struct NeuronClustering {
  std::vector<std::string> assignment;                 // per neuron: name | "off" | "mixed"
  std::map<std::string, std::vector<int>> clusters;    // irrep -> neuron indices
  std::vector<int> off_neurons;
};

struct ClusterOptions {
  double off_variance = 1e-10;
  double dominance = 0.5;
};

NeuronClustering neuron_clusters(const CenteredActs& acts, const AnalysisContext& ctx,
                                 const ClusterOptions& opts = {});

struct MlpFve {
  double a = 0, b = 0, ab = 0, residual = 0;  // sequential projection order a, b, ab
};

/// Frobenius variance split of a neuron cluster against one irrep's three
/// hidden blocks.
MlpFve mlp_fve(const CenteredActs& acts, const std::vector<int>& cluster,
               const AnalysisContext& ctx, const std::string& irrep_name);

struct RepRecovery {
  Eigen::MatrixXd change_of_basis;  // m_neurons x d^2 least-squares map
  double mse = 0;                   // per-entry, after the optimal linear fit
  int rank = 0;                     // numerical rank of the cluster activations
  std::vector<Eigen::MatrixXd> per_pair;  // recovered rho(ab), row-major pair order
};

/// Least-squares recovery of rho(ab) matrices from (a subset of) neuron
/// activations; small MSE certifies that the pattern lives in their span.
RepRecovery recover_rep_matrices(const CenteredActs& acts, const std::vector<int>& cluster,
                                 const AnalysisContext& ctx, const std::string& irrep_name,
                                 bool keep_per_pair = false);

struct UnembedPattern {
  Eigen::MatrixXd matrix;   // hidden rho(ab) coords x output rho(c^-1) coords
  double correlation = 0;   // cosine against the exact trace-contraction pattern
};

/// Changes basis of the activations-to-logits map on both sides: hidden
/// rho(ab) representation coordinates in, output representation coordinates
/// out. For a network implementing the character algorithm this is the sparse
/// trace-pairing matrix.
UnembedPattern unembed_in_rep_basis(const MlpParams& params, const CenteredActs& acts,
                                    const AnalysisContext& ctx, const std::string& irrep_name);

// ---- ablations and progress measures ----------------------------------------

enum class AblationSite { logits, mlp_acts, unembed };
enum class AblationMode { restrict_to, exclude };

struct AblationSpec {
  AblationSite site = AblationSite::mlp_acts;
  AblationMode mode = AblationMode::exclude;
  std::vector<std::string> irreps;          // term selection
  std::vector<std::string> blocks = {"ab"}; // for mlp_acts: subset of {"a","b","ab"}
  bool on_train_split = false;              // evaluate on train instead of test
};

double ablate(const MlpParams& params, const AnalysisContext& ctx, const DataSplit& split,
              const AblationSpec& spec);

/// Project centered MLP activations onto the rho(ab) blocks of the key
/// representations, restore the batch mean, and evaluate test loss.
double restricted_loss(const MlpParams& params, const AnalysisContext& ctx,
                       const DataSplit& split, const std::vector<std::string>& key_reps);

/// Complement projection of restricted_loss, evaluated on the training split.
double excluded_loss(const MlpParams& params, const AnalysisContext& ctx,
                     const DataSplit& split, const std::vector<std::string>& key_reps);

// ---- checkpoint-level reports -----------------------------------------------

struct AnalysisOptions {
  double similarity_threshold = 0.005;
  ClusterOptions cluster;
  bool full = true;  // hidden-layer analyses require materialized bases (n <= 256)
};

struct AnalysisReport {
  std::string group;
  long epoch = 0;
  std::map<std::string, double> logit_similarity;
  std::vector<std::string> key_reps;
  double logit_fve = 0;
  std::map<std::string, EmbeddingFve> embedding_fve;  // "w_a", "w_b", "w_unembed"
  std::vector<std::string> neuron_clusters;           // per neuron
  std::map<std::string, MlpFve> mlp_fve;              // per cluster irrep
  std::map<std::string, double> rep_recovery_mse;     // key irreps
  std::map<std::string, double> unembed_pattern_corr; // key irreps
  std::map<std::string, double> ablation_losses;
  double restricted = 0;
  double excluded = 0;
  double train_loss = 0, test_loss = 0, train_acc = 0, test_acc = 0;
  double sum_sq_weights_value = 0;
  nlohmann::json metadata;

  nlohmann::ordered_json to_json() const;
  static AnalysisReport from_json(const nlohmann::json& j);
};

AnalysisReport analyze_checkpoint(const Checkpoint& ckpt, const AnalysisContext& ctx,
                                  const DataSplit& split, const AnalysisOptions& opts = {});

// ---- trajectory analysis ----------------------------------------------------

struct TrajectoryPoint {
  long epoch = 0;
  std::map<std::string, double> similarity;
  std::map<std::string, EmbeddingFve> embedding_fve;
  double restricted = 0, excluded = 0;
  double train_loss = 0, test_loss = 0, sum_sq_weights_value = 0;
};

struct TrajectoryAnalysis {
  std::vector<TrajectoryPoint> points;
  AnalysisReport final_report;  // full analysis of the last checkpoint
};

/// Analyzes every ckpt_<epoch>.bin in a run directory (sorted by epoch).
/// Key representations are taken from the final checkpoint and applied
/// retroactively to the whole trajectory.
TrajectoryAnalysis analyze_trajectory(const std::string& run_dir, const AnalysisContext& ctx,
                                      const AnalysisOptions& opts = {});

/// Writes logit_similarity_over_time.csv, embedding_fve_over_time.csv and
/// progress_measures.csv next to the checkpoints.
void write_trajectory_csvs(const std::string& run_dir, const TrajectoryAnalysis& traj,
                           const AnalysisContext& ctx);

}  // namespace gcr
