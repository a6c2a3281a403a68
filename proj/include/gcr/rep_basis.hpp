#pragma once

#include <Eigen/Dense>
#include <string>

#include "gcr/group.hpp"
#include "gcr/irreps.hpp"

namespace gcr {

/// Orthonormal basis of the representation space of an irrep: the span in
/// R^n of the d^2 coordinate functions g -> rho(g)_ij (row-major flattening).
/// For absolutely irreducible irreps the rank is d^2 and the basis columns
/// are the scaled matrix-element functions themselves, keeping coordinates
/// aligned with matrix entries; complex-type irreps are rank-deficient and
/// fall back to a pivoted QR.
struct RepBasis {
  std::string irrep_name;
  Eigen::MatrixXd basis;  // n x rank, orthonormal columns
  int rank() const { return static_cast<int>(basis.cols()); }
};

RepBasis rep_space_basis(const Irrep& rho);

/// Hidden representation subspaces over all n^2 input pairs, enumerated
/// row-major in (a, b): orthonormal bases for the patterns
/// (a,b) -> rho(a), (a,b) -> rho(b), and (a,b) -> rho(ab).
struct HiddenRepBasis {
  std::string irrep_name;
  Eigen::MatrixXd basis_a, basis_b, basis_ab;  // n^2 x rank each
};

HiddenRepBasis hidden_rep_bases(const Group& g, const Irrep& rho);

/// Orthonormalizes the columns of m, dropping directions with residual norm
/// below `tol` (relative to the largest column norm).
Eigen::MatrixXd orthonormal_columns(const Eigen::MatrixXd& m, double tol = 1e-9);

}  // namespace gcr
