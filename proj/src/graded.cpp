#include "sla/graded.hpp"

#include <set>
#include <stdexcept>

namespace sla {

GradedSpace::GradedSpace(std::vector<std::string> labels, std::vector<Parity> parities)
    : labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.size() != parities_.size())
    throw std::invalid_argument("GradedSpace: labels/parities size mismatch");
  std::set<std::string> seen;
  for (const std::string& l : labels_)
    if (!seen.insert(l).second) throw std::invalid_argument("GradedSpace: duplicate label " + l);
  for (Parity p : parities_)
    if (p == Parity::Even) ++dim_even_;
}

GradedSpace GradedSpace::even(const std::vector<std::string>& labels) {
  return GradedSpace(labels, std::vector<Parity>(labels.size(), Parity::Even));
}

Eigen::Index GradedSpace::index(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<Eigen::Index>(i);
  return -1;
}

Parity GradedSpace::parity_of(const RatVec& v) const {
  if (v.size() != dim()) throw std::invalid_argument("parity_of: dimension mismatch");
  bool has_even = false, has_odd = false;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i).is_zero()) continue;
    (parity(i) == Parity::Even ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) throw std::invalid_argument("parity_of: inhomogeneous vector");
  return has_odd ? Parity::Odd : Parity::Even;
}

GradedMap::GradedMap(GradedSpace dom, GradedSpace cod, RatMat m, Parity p)
    : domain(std::move(dom)), codomain(std::move(cod)), matrix(std::move(m)), parity(p) {
  if (matrix.rows() != codomain.dim() || matrix.cols() != domain.dim())
    throw std::invalid_argument("GradedMap: matrix shape mismatch");
  for (Eigen::Index i = 0; i < matrix.rows(); ++i)
    for (Eigen::Index j = 0; j < matrix.cols(); ++j)
      if (!matrix(i, j).is_zero() && codomain.parity(i) != domain.parity(j) + parity)
        throw std::invalid_argument("GradedMap: entry (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") violates parity block structure");
}

GradedMap GradedMap::zero(const GradedSpace& dom, const GradedSpace& cod, Parity p) {
  return GradedMap(dom, cod, RatMat::Constant(cod.dim(), dom.dim(), Rat(0)), p);
}

GradedMap GradedMap::identity(const GradedSpace& sp) {
  return GradedMap(sp, sp, RatMat::Identity(sp.dim(), sp.dim()), Parity::Even);
}

RatMat super_commutator(const RatMat& a, Parity pa, const RatMat& b, Parity pb) {
  RatMat ab = a * b;
  RatMat ba = b * a;
  return (sign_pow(pa, pb) < 0) ? RatMat(ab + ba) : RatMat(ab - ba);
}

}  // namespace sla
