#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sla/tensor.hpp"

namespace sla {

// Sparse vector in a graded space, keyed by basis index.
using SparseVec = std::map<Eigen::Index, Rat>;

RatVec densify(const SparseVec& s, Eigen::Index dim);
SparseVec sparsify(const RatVec& v);

// Finite-dimensional Lie superalgebra given by structure constants over Q.
// Brackets are entered for i <= j only; the other half is reconstructed from
// super-antisymmetry, so antisymmetry holds by construction. Diagonal entries
// are allowed (and meaningful) for odd basis elements.
class LieSuperalgebra {
 public:
  explicit LieSuperalgebra(GradedSpace space);

  const GradedSpace& space() const { return space_; }
  Eigen::Index dim() const { return space_.dim(); }

  // [b_i, b_j] = sum_k result[k] b_k, for i <= j.
  void set_bracket(Eigen::Index i, Eigen::Index j, const SparseVec& result);
  void set_bracket(const std::string& left, const std::string& right,
                   const std::vector<std::pair<std::string, Rat>>& result);

  const SparseVec& bracket_basis(Eigen::Index i, Eigen::Index j) const;
  RatVec bracket(const RatVec& x, const RatVec& y) const;

  // Matrix of ad(b_i) acting on the algebra.
  RatMat ad_matrix(Eigen::Index i) const;

  // Validates parity consistency of the structure table.
  void validate() const;

  struct JacobiReport {
    bool pass = true;
    long total_failures = 0;
    Eigen::Index i = -1, j = -1, k = -1;  // first failing triple
    RatVec residual;                      // its residual vector
    std::string describe(const GradedSpace& sp) const;
  };

  // Jacobi residual [x,[y,z]] - [[x,y],z] - (-1)^{|x||y|}[y,[x,z]] over all
  // ordered basis triples.
  JacobiReport check_super_jacobi() const;

 private:
  GradedSpace space_;
  std::map<std::pair<Eigen::Index, Eigen::Index>, SparseVec> table_;  // keys i <= j
  static const SparseVec kEmpty;
};

struct ReductiveDecomposition {
  const LieSuperalgebra* algebra = nullptr;
  std::vector<Eigen::Index> h_indices;
  std::vector<Eigen::Index> m_indices;

  ReductiveDecomposition() = default;
  ReductiveDecomposition(const LieSuperalgebra& g, std::vector<Eigen::Index> h,
                         std::vector<Eigen::Index> m);

  Eigen::Index h_dim() const { return static_cast<Eigen::Index>(h_indices.size()); }
  Eigen::Index m_dim() const { return static_cast<Eigen::Index>(m_indices.size()); }

  // m with its own labels/parities.
  GradedSpace m_space() const;

  // Position of algebra index in m (or h); -1 when absent.
  Eigen::Index m_position(Eigen::Index algebra_index) const;
  Eigen::Index h_position(Eigen::Index algebra_index) const;

  // Projections of an algebra vector.
  RatVec project_m(const RatVec& x) const;
  RatVec project_h(const RatVec& x) const;

  // [x, -]_m restricted to m, as an m x m matrix, for an algebra basis index.
  RatMat ad_m_matrix(Eigen::Index algebra_index) const;

  // Actions of all h-basis generators on m.
  std::vector<RatMat> h_actions_on_m() const;

  struct Report {
    bool reductive = false;
    bool symmetric = false;
    std::string detail;
  };
  Report check() const;
};

// Representation of a Lie superalgebra: one matrix per basis element, with
// the parity of the element.
struct Representation {
  const LieSuperalgebra* algebra = nullptr;
  GradedSpace module;
  std::vector<RatMat> matrices;

  // rho([x,y]) = rho(x)rho(y) - (-1)^{|x||y|} rho(y)rho(x) on basis pairs.
  bool check_representation(std::string* why = nullptr) const;
};

Representation adjoint_rep(const LieSuperalgebra& g);

// Bilinear form left x right -> target with coefficient tensor
// coeff[t][(l,r)]: value(l,r) = sum_t coeff[t](l,r) basis_t.
struct SuperBilinearForm {
  GradedSpace left, right, target;
  std::vector<RatMat> coeff;  // one (left.dim x right.dim) matrix per target basis element

  RatVec apply(const RatVec& l, const RatVec& r) const;
  bool is_symmetric() const;
  bool is_skew() const;
};

// x·B(s,t) = B(x·s, t) + (-1)^{|x||s|} B(s, x·t) for all generators and basis
// pairs; generators are given by their actions on left, right and target.
struct EquivarianceReport {
  bool pass = true;
  std::string detail;
};
EquivarianceReport check_equivariance(const SuperBilinearForm& form,
                                      const std::vector<RatMat>& left_actions,
                                      const std::vector<RatMat>& right_actions,
                                      const std::vector<RatMat>& target_actions,
                                      const std::vector<Parity>& gen_parities);

// Basis of h-invariant tensors on m of type (r,s), i.e. the joint kernel of
// the tensor actions of all h-generators on m^{⊗r} ⊗ (m*)^{⊗s}.
std::vector<RatVec> invariants_in_tensor(const ReductiveDecomposition& d, int r, int s);

// Membership test: is the given tensor annihilated by every h-generator?
bool is_invariant_tensor(const ReductiveDecomposition& d, int r, int s, const RatVec& tensor);

}  // namespace sla
