#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "gcr/irreps.hpp"
#include "gcr/mlp.hpp"

namespace gcr {

/// Self-describing tensor container: a single-line JSON header
/// {"format","byte_order":"little","dtype":"f64","meta",...,"tensors":[{name,shape}...]}
/// terminated by '\n', followed by the concatenated row-major payloads.
struct TensorEntry {
  std::string name;
  std::vector<long> shape;
  std::vector<double> data;  // row-major
};

struct Container {
  nlohmann::json meta;
  std::vector<TensorEntry> tensors;

  const TensorEntry* find(const std::string& name) const;
};

void write_container(const std::string& path, const Container& c);
Container read_container(const std::string& path);

// Checkpoint files: the four MLP matrices plus epoch/config metadata,
// named ckpt_<epoch>.bin by the training loop.
struct Checkpoint {
  MlpParams params;
  long epoch = 0;
  nlohmann::json meta;
};

void save_checkpoint(const std::string& path, const MlpParams& params, long epoch,
                     const nlohmann::json& meta = {});
Checkpoint load_checkpoint(const std::string& path);

// Irrep catalog container: per-irrep [n, d, d] tensors plus a header listing
// names, dims, and flags.
void save_catalog(const std::string& path, const IrrepCatalog& catalog);
IrrepCatalog load_catalog(const std::string& path);

// Tensor helpers (row-major round trip with Eigen's column-major storage).
TensorEntry tensor_from_matrix(const std::string& name, const Eigen::MatrixXd& m);
Eigen::MatrixXd matrix_from_tensor(const TensorEntry& t);

}  // namespace gcr
