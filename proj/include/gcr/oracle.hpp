#pragma once

#include <Eigen/Dense>
#include <span>
#include <string>
#include <vector>

#include "gcr/group.hpp"
#include "gcr/irreps.hpp"

namespace gcr {

struct GcrTerm {
  const Irrep* irrep = nullptr;
  double weight = 1.0;
};

/// A weighted set of irreps defining a character-sum oracle for composition.
struct GcrSpec {
  const Group* group = nullptr;
  std::vector<GcrTerm> terms;

  /// True when some term with positive weight is faithful, which guarantees a
  /// unique argmax at c = ab.
  bool has_faithful_term() const;
  void validate() const;  // throws on mismatched irreps / non-finite weights
};

/// Dense n^3 logit tensor, row-major in (a, b, c).
struct LogitTensor {
  int n = 0;
  std::string provenance;  // "oracle" or "model"
  std::vector<double> data;

  double& at(int a, int b, int c) {
    return data[(static_cast<size_t>(a) * n + b) * n + c];
  }
  double at(int a, int b, int c) const {
    return data[(static_cast<size_t>(a) * n + b) * n + c];
  }
};

/// Materializes L[a][b][c] = sum_terms weight * chi(a*b*c^-1) via pure table
/// walks and character lookups. Only allowed for n <= 256; larger groups must
/// stream with gcr_logit_slice.
LogitTensor gcr_logit_tensor(const GcrSpec& spec);

/// One (a, b) slice of the oracle tensor: out[c] = sum_terms w * chi(a*b*c^-1).
void gcr_logit_slice(const GcrSpec& spec, int a, int b, std::span<double> out);

struct ComposeResult {
  int c = -1;
  bool unique = false;
};

/// argmax_c of the character sum; ties broken toward the lowest index, with
/// `unique` reporting whether the maximizer was a singleton.
ComposeResult gcr_compose(const GcrSpec& spec, int a, int b);

/// Eq-style trace read-off: sum_ij (M .* rho(c^-1)^T)_ij = tr(M rho(c^-1)).
double trace_readoff(const Eigen::MatrixXd& m, const Irrep& rho, const Group& g, int c);

}  // namespace gcr
