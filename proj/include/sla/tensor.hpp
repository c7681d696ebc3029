#pragma once

#include <map>
#include <vector>

#include "sla/graded.hpp"

namespace sla {

// Koszul sign of bringing the letters word[perm[0]], word[perm[1]], ... into
// the order given by perm, where word[i] has parity parities[i]: -1 for every
// inversion of two odd letters.
int koszul_sign(const std::vector<Parity>& parities, const std::vector<int>& perm);

// Sign of a permutation.
int perm_sign(const std::vector<int>& perm);

// Formal tensor product of graded spaces with variance flags (false =
// covariant factor V, true = contravariant factor V*).
class TensorSpace {
 public:
  TensorSpace(std::vector<GradedSpace> factors, std::vector<bool> dual);

  // Tensor power V^{⊗r} ⊗ (V*)^{⊗s}.
  static TensorSpace power(const GradedSpace& v, int r, int s);

  Eigen::Index factor_count() const { return static_cast<Eigen::Index>(factors_.size()); }
  const GradedSpace& factor(Eigen::Index f) const { return factors_[static_cast<std::size_t>(f)]; }
  bool is_dual(Eigen::Index f) const { return dual_[static_cast<std::size_t>(f)]; }

  Eigen::Index dim() const { return dim_; }
  Eigen::Index linear_index(const std::vector<Eigen::Index>& multi) const;
  std::vector<Eigen::Index> multi_index(Eigen::Index linear) const;
  Parity parity(const std::vector<Eigen::Index>& multi) const;

  // The tensor space flattened into a GradedSpace with composite labels.
  GradedSpace as_graded_space() const;

 private:
  std::vector<GradedSpace> factors_;
  std::vector<bool> dual_;
  Eigen::Index dim_ = 1;
};

// Sparse element of a tensor space.
struct TensorElement {
  const TensorSpace* space = nullptr;
  std::map<std::vector<Eigen::Index>, Rat> coeff;

  RatVec to_vector() const;
  static TensorElement from_vector(const TensorSpace& ts, const RatVec& v);
};

// Action of one generator x on the dual space V*: with pairing invariance
// (x·φ)(v) = -(-1)^{|x||φ|} φ(x·v); for even x this is -Aᵀ.
RatMat dual_action(const RatMat& action, const GradedSpace& base, Parity gen_parity);

// Leibniz-rule action of a single generator on the tensor space. actions[f]
// is the generator's action on the BASE space of factor f (the dual twist is
// applied internally); Koszul signs appear when an odd generator passes odd
// factors.
RatMat tensor_action(const TensorSpace& ts, const std::vector<RatMat>& actions, Parity gen_parity);

// Same generator action on every factor.
RatMat tensor_action(const TensorSpace& ts, const RatMat& action, Parity gen_parity);

// Basis of linear maps T : dom -> cod with T∘ρ_dom(x) = ρ_cod(x)∘T for every
// generator. Optionally restricted to maps of fixed parity. Throws on
// dimension mismatch between an action matrix and its space.
std::vector<GradedMap> equivariant_maps(const GradedSpace& dom, const GradedSpace& cod,
                                        const std::vector<RatMat>& dom_actions,
                                        const std::vector<RatMat>& cod_actions);
std::vector<GradedMap> equivariant_maps(const GradedSpace& dom, const GradedSpace& cod,
                                        const std::vector<RatMat>& dom_actions,
                                        const std::vector<RatMat>& cod_actions, Parity parity);

// Joint kernel of a family of square matrices, i.e. vectors annihilated by
// every matrix.
std::vector<RatVec> joint_kernel(const std::vector<RatMat>& ops);

}  // namespace sla
