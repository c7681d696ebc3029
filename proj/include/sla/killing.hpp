#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sla/clifford.hpp"
#include "sla/liesuper.hpp"

namespace sla {

// Algebra of supersymmetry adapted to a homogeneous spin manifold:
// g = (h + m0) + m1 with the isotropy acting on spinors through the lift
// ad~ : h -> spin(m0) and on m0 through xi_* of the same lift.
struct AdaptedSupersymmetryAlgebra {
  const LieSuperalgebra* algebra = nullptr;
  std::vector<Eigen::Index> h_indices;
  std::vector<Eigen::Index> m0_indices;
  std::vector<Eigen::Index> m1_indices;

  CliffordRep rep;            // Clifford module over m0's inner product signature
  RatMat metric;              // invariant metric on m0, in the m0 basis
  std::vector<RatMat> basis_gammas;  // gamma of each m0 basis vector
  std::vector<RatMat> ad_tilde;      // spin lift of each h generator, on S

  std::optional<AltForm> flux;  // degree-4 form on m0 (indices in m0 basis)

  Eigen::Index m0_dim() const { return static_cast<Eigen::Index>(m0_indices.size()); }
  Eigen::Index m1_dim() const { return static_cast<Eigen::Index>(m1_indices.size()); }

  // ad(x)|_{m1} for an algebra basis index (generalized Clifford
  // multiplication C when x lies in m0).
  RatMat action_on_m1(Eigen::Index algebra_index) const;
  // ad(x)|_{m0}
  RatMat action_on_m0(Eigen::Index algebra_index) const;

  // Gamma = projection to m0 of the odd-odd bracket.
  SuperBilinearForm gamma_form() const;

  ReductiveDecomposition decomposition() const;  // h vs m0+m1
};

struct CheckReport {
  bool pass = true;
  std::string detail;
};

// Verifies: ad_h|m1 = ad~ entrywise, xi_* of ad~ = ad_h|m0, and super-Jacobi.
CheckReport check_adapted(const AdaptedSupersymmetryAlgebra& a);

// Kosmann derivative of the Killing spinor psi^s along the Killing field of
// x, evaluated at the base point: returns -[x,s] in m1 coordinates.
RatVec kosmann_bracket(const AdaptedSupersymmetryAlgebra& a, const RatVec& x_algebra,
                       const RatVec& s_m1);

// Dirac current bracket of two Killing spinors at the base point: -Gamma(s,t).
RatVec dirac_bracket(const AdaptedSupersymmetryAlgebra& a, const RatVec& s_m1, const RatVec& t_m1);

// Taylor coefficients of psi^s(exp(t x)) = Ad_{exp(-t x)} s up to the given
// order: term k is (-1)^k (ad x)^k s / k!.
std::vector<RatVec> killing_spinor_jet(const AdaptedSupersymmetryAlgebra& a, const RatVec& x_algebra,
                                       const RatVec& s_m1, int order);

// The transported bracket tables (Kosmann + Dirac + Killing-vector brackets)
// regenerate the negative of the original structure constants and satisfy
// super-Jacobi.
CheckReport killing_superalgebra_check(const AdaptedSupersymmetryAlgebra& a);

// R(A,B)|_{m1} = [C_A, C_B] - C_{[A,B]_{m0}} - ad~([A,B]_h) for A,B in m0;
// returns the table and whether it vanishes identically. Requires a
// symmetric body ([m0,m0] in h).
struct SpinorCurvatureReport {
  bool flat = true;
  std::vector<std::vector<RatMat>> table;  // m0 x m0 operators on m1
  std::string detail;
};
SpinorCurvatureReport spinor_connection_curvature(const AdaptedSupersymmetryAlgebra& a);

// Dimension (and basis) of the full generalized Killing spinor space: the
// joint kernel of the holonomy of the spinor-block connection.
std::vector<RatVec> killing_spinor_space(const AdaptedSupersymmetryAlgebra& a);

// The 11-dimensional supergravity connection term
//   Omega(X) = -(1/12) (X-flat wedge F)-sharp + (1/6) (i_X F)-sharp
// as a Clifford operator on the 32-dimensional spin module, with optional
// sign toggles for the two terms.
RatMat supergravity_connection_term(const AdaptedSupersymmetryAlgebra& a, const AltForm& flux,
                                    const RatVec& x_m0, int sign_wedge = 1, int sign_contraction = 1);

// Exhaustive search over the finite convention set {flux sign, wedge-term
// sign, contraction-term sign}: reports the residuals C_X - Omega(X) summed
// over the m0 basis for each choice.
struct CalibrationReport {
  struct Entry {
    int sign_flux = 1, sign_wedge = 1, sign_contraction = 1;
    long nonzero_entries = 0;  // residual support over all X in the m0 basis
  };
  std::vector<Entry> entries;       // all 8 convention choices
  std::vector<Entry> exact_matches; // residual-free choices
  bool calibrated() const { return !exact_matches.empty(); }
  std::string describe() const;
};
CalibrationReport calibrate_flux(const AdaptedSupersymmetryAlgebra& a, const AltForm& flux);

}  // namespace sla
