#pragma once

#include <map>
#include <vector>

#include "sla/matrix.hpp"

namespace sla {

// Alternating k-tensors over an n-dimensional space, stored sparsely on
// strictly increasing index tuples.
struct AltForm {
  int degree = 0;
  Eigen::Index n = 0;
  std::map<std::vector<Eigen::Index>, Rat> coeff;  // keys strictly increasing, length = degree

  void add(std::vector<Eigen::Index> idx, Rat c);  // sorts and signs the tuple
  bool is_zero() const;
};

AltForm wedge(const AltForm& a, const AltForm& b);

// Interior product with a coordinate vector x (components in the same basis).
AltForm contract(const RatVec& x, const AltForm& w);

// Index raising with the inverse Gram matrix (all k indices).
AltForm sharp(const RatMat& gram_inverse, const AltForm& w);

// x-flat as a 1-form.
AltForm flat(const RatMat& gram, const RatVec& x);

AltForm scale(const AltForm& w, const Rat& c);

// All strictly increasing k-tuples from {0..n-1}, lexicographic.
std::vector<std::vector<Eigen::Index>> increasing_tuples(Eigen::Index n, int k);

}  // namespace sla
