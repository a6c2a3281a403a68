#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "gcr/group.hpp"

namespace gcr {

// Tolerance ladder: construction exactness, homomorphism/orthogonality of
// individual matrices, and cross-irrep orthogonality are held to separate
// thresholds so float roundoff never masks a genuine failure.
inline constexpr double kTolConstruct = 1e-12;
inline constexpr double kTolHomomorphism = 1e-10;
inline constexpr double kTolOrthogonal = 1e-10;
inline constexpr double kTolCrossIrrep = 1e-8;

/// One irreducible real representation: n orthogonal d x d matrices.
/// `endo_dim` is the dimension of the commutant algebra (1 = absolutely
/// irreducible, 2 = complex type, 4 = quaternionic type); the character
/// norm <chi,chi> of an irreducible real representation equals endo_dim.
struct Irrep {
  std::string name;
  int dim = 0;
  std::vector<Eigen::MatrixXd> matrices;  // matrices[g] = rho(g)
  Eigen::VectorXd character;              // character[g] = tr rho(g)
  bool faithful = false;
  bool orthogonal = false;
  int endo_dim = 1;
};

struct IrrepCheck {
  double identity_residual = 0;       // |rho(e) - I|_max
  double homomorphism_residual = 0;   // max over pairs |rho(a)rho(b)-rho(ab)|_max
  double orthogonality_residual = 0;  // max over g |rho(g)^T rho(g) - I|_max
  double character_norm = 0;          // <chi, chi>
  double class_function_residual = 0; // max within-class character spread
  double trace_bound_violation = 0;   // max over g of character[g] - dim
  bool argmax_only_identity_matrices = true;
  bool ok = false;
};

/// Exhaustive validation of the Irrep invariants against its group.
IrrepCheck validate_irrep(const Group& g, const Irrep& rho);

Irrep trivial_irrep(const Group& g);

/// Sign representation: +1 on the index-2 subgroup, -1 on its coset.
/// Supported for S_k (k >= 2), D_n, and C_n with n even; throws otherwise.
Irrep sign_irrep(const Group& g);

/// Rotation representation 2_k of C_n: rho_k(x) = planar rotation by 2*pi*k*x/n.
/// Requires 0 < k < n/2.
Irrep cyclic_2d_irrep(int n, int k);

/// 2d representation of D_n (n odd): rotations map to planar rotations,
/// reflections to planar reflections. Requires 0 < k < n/2.
Irrep dihedral_2d_irrep(int n, int k);

/// Standard representation of S_k: permutation matrices restricted to the
/// orthogonal complement of the all-ones vector (dimension k-1).
Irrep symmetric_standard_irrep(int k);

/// Tensor with a 1-dimensional representation (entrywise scaling).
Irrep tensor_1d_irrep(const Irrep& rho, const Irrep& sigma);

/// Normalized character inner product (1/|G|) sum_g chi1(g) chi2(g).
double character_inner(const Eigen::VectorXd& chi1, const Eigen::VectorXd& chi2);

/// Gram matrix of matrix elements: entry [(i,j),(i',j')] = sum_g rho1(g)_ij rho2(g)_i'j'.
Eigen::MatrixXd matrix_element_gram(const Irrep& rho1, const Irrep& rho2);

struct IrrepCatalog {
  std::string group_name;
  std::vector<Irrep> irreps;  // includes the trivial representation
  bool complete = false;

  const Irrep* find(const std::string& name) const;
  std::vector<const Irrep*> nontrivial() const;
};

/// Numerically decomposes the regular representation into irreducible blocks
/// by eigensplitting group-averaged random symmetric matrices. Retries with
/// fresh random draws on degenerate clusterings; throws if all retries fail.
IrrepCatalog discover_irreps(const Group& g, double tolerance = 1e-8, uint64_t seed = 0);

/// Full real irrep catalog: closed-form constructions where available
/// (cyclic, odd dihedral, and the low S_k irreps), discovery for the rest.
IrrepCatalog full_catalog(const Group& g, uint64_t seed = 0);

// Derivation helpers shared by constructors and discovery.
Eigen::VectorXd character_of(const std::vector<Eigen::MatrixXd>& matrices);
bool is_faithful(const std::vector<Eigen::MatrixXd>& matrices);
int endomorphism_dim(const Group& g, const Eigen::VectorXd& character);
Eigen::VectorXd flatten_row_major(const Eigen::MatrixXd& m);

}  // namespace gcr
