#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sla/exterior.hpp"
#include "sla/graded.hpp"
#include "sla/liesuper.hpp"

namespace sla {

struct Signature {
  int r = 0;  // basis vectors with <e,e> = +1
  int s = 0;  // basis vectors with <e,e> = -1

  int n() const { return r + s; }
  // residue class of r - s mod 8 in {1..8}
  int residue_class() const {
    int c = ((r - s) % 8 + 8) % 8;
    return c == 0 ? 8 : c;
  }
  std::string str() const { return "(" + std::to_string(r) + "," + std::to_string(s) + ")"; }
};

// Real irreducible Clifford module for the inner product of signature (r,s),
// eta = diag(+1 x r, -1 x s). The generators satisfy the relation
//     gamma_i gamma_j + gamma_j gamma_i = -2 eta_ij,
// i.e. v.v = -<v,v>; this is the convention under which the real spin
// modules have the dimensions used by all worked examples here (dim 2 in
// signature (1,2), dim 32 in signature (1,10)). All entries lie in
// {-1, 0, 1} and every gamma is a signed permutation matrix.
struct CliffordRep {
  Signature sig;
  Eigen::Index spin_dim = 0;
  std::vector<RatMat> gammas;  // one per basis vector of R^{r,s}

  Rat eta(Eigen::Index i) const { return Rat(i < sig.r ? 1 : -1); }
  RatMat eta_matrix() const;

  RatMat gamma_of(const RatVec& v) const;  // sum v_i gamma_i

  // Clifford element of a decomposable alternating k-vector: antisymmetrized
  // product (1/k!) sum sgn(pi) gamma(...) over the tuple entries, extended
  // linearly; `basis_gammas` maps the form's index set to gamma matrices
  // (defaults to this->gammas).
  RatMat clifford_of(const AltForm& kvector) const;
  static RatMat clifford_of(const std::vector<RatMat>& basis_gammas, const AltForm& kvector,
                            Eigen::Index spin_dim);

  // Verifies the Clifford relations exactly.
  void check_relations() const;

  // Dimension of the real matrix algebra generated by the gammas (span of all
  // 2^n subset products), and the expected dimension of the simple factor for
  // this residue class. Equality certifies irreducibility.
  Eigen::Index generated_algebra_dim() const;
  Eigen::Index expected_simple_factor_dim() const;
};

// Known minimal real dimension of an irreducible Clifford module.
Eigen::Index minimal_spin_dim(const Signature& sig);

// Builds gamma matrices by the inductive tensor construction; throws when the
// signature is outside the supported range (pure parts up to 9|7 after
// (1,1)-reductions, which covers every signature with r+s <= 11 used here).
CliffordRep build_gamma(const Signature& sig);

// spin(r,s): generators q_{ij} := (1/4)[gamma_i, gamma_j] for i<j, together
// with the so(r,s) matrices of e_i ^ e_j := <e_i,.> e_j - <e_j,.> e_i.
struct SpinLieAlgebra {
  CliffordRep rep;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> pairs;  // (i,j), i<j
  std::vector<RatMat> generators;      // on S
  std::vector<RatMat> vector_actions;  // on R^{r,s}

  Eigen::Index dim() const { return static_cast<Eigen::Index>(pairs.size()); }

  // xi_*: expresses a spin element (matrix in the span of the generators) as
  // an so(r,s) matrix, and back. Throws when outside the span.
  RatMat xi_star(const RatMat& spin_element) const;
  RatMat xi_star_inv(const RatMat& so_element) const;
};

SpinLieAlgebra spin_algebra(const CliffordRep& rep);

// Basis of spin(r,s)-equivariant endomorphisms of S (the Schur algebra).
std::vector<RatMat> schur_algebra(const CliffordRep& rep);

enum class FormSymmetry { Symmetric, Skew, Any };
enum class FormTarget { Scalar, Vector };

// Basis of spin-equivariant bilinear forms S (x) S -> R (target Scalar) or
// S (x) S -> R^{r,s} (target Vector), filtered by symmetry type.
std::vector<SuperBilinearForm> invariant_bilinear_forms(const CliffordRep& rep, FormTarget target,
                                                        FormSymmetry symmetry);

// Lambda^k R^{r,s}-valued transfer of a scalar bilinear form:
//   <Gamma^k_beta(s,t), v_1 ^ .. ^ v_k> = sum_pi sgn(pi) beta(v_pi1 ... v_pik . s, t).
// The target space is indexed by increasing k-tuples.
SuperBilinearForm gamma_transfer(const SuperBilinearForm& beta, int k, const CliffordRep& rep);

// Action of the spin generators on Lambda^k R^{r,s} (for equivariance checks
// of gamma_transfer outputs).
std::vector<RatMat> exterior_vector_actions(const SpinLieAlgebra& spin, int k);

GradedSpace spinor_space(const CliffordRep& rep, const std::string& prefix = "s");
GradedSpace vector_space_of(const Signature& sig, const std::string& prefix = "e");

}  // namespace sla
