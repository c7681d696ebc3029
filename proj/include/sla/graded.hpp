#pragma once

#include <string>
#include <vector>

#include "sla/matrix.hpp"

namespace sla {

enum class Parity : int { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>((static_cast<int>(a) + static_cast<int>(b)) % 2);
}
inline int sign_pow(Parity a, Parity b) {
  return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1;
}
inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Finite-dimensional super vector space with a named homogeneous basis.
class GradedSpace {
 public:
  GradedSpace() = default;
  GradedSpace(std::vector<std::string> labels, std::vector<Parity> parities);

  static GradedSpace even(const std::vector<std::string>& labels);

  Eigen::Index dim() const { return static_cast<Eigen::Index>(parities_.size()); }
  Eigen::Index dim_even() const { return dim_even_; }
  Eigen::Index dim_odd() const { return dim() - dim_even_; }
  Parity parity(Eigen::Index i) const { return parities_[static_cast<std::size_t>(i)]; }
  const std::string& label(Eigen::Index i) const { return labels_[static_cast<std::size_t>(i)]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Index of a label; -1 when absent.
  Eigen::Index index(const std::string& label) const;

  bool operator==(const GradedSpace& o) const {
    return labels_ == o.labels_ && parities_ == o.parities_;
  }

  // Parity of a vector, when homogeneous; throws otherwise.
  Parity parity_of(const RatVec& v) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
  Eigen::Index dim_even_ = 0;
};

// Homogeneous linear map between graded spaces, stored densely.
// Construction validates the parity block structure: an even map keeps
// parities, an odd map flips them.
struct GradedMap {
  GradedSpace domain;
  GradedSpace codomain;
  RatMat matrix;
  Parity parity = Parity::Even;

  GradedMap() = default;
  GradedMap(GradedSpace dom, GradedSpace cod, RatMat m, Parity p);

  static GradedMap zero(const GradedSpace& dom, const GradedSpace& cod, Parity p = Parity::Even);
  static GradedMap identity(const GradedSpace& sp);

  RatVec apply(const RatVec& v) const { return matrix * v; }
};

// Super commutator [A,B] = AB - (-1)^{|A||B|} BA of two operators on the
// same space.
RatMat super_commutator(const RatMat& a, Parity pa, const RatMat& b, Parity pb);

}  // namespace sla
