#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sla/rational.hpp"

namespace sla {

using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Reduced row echelon form, in place. Pivot rows are chosen among the
// candidates by smallest bit length of the pivot entry, which keeps the
// intermediate numerators small on the structured systems we solve.
// Returns the pivot column of each pivot row, in order.
std::vector<Eigen::Index> rref(RatMat& m);

Eigen::Index rank(RatMat m);

// Basis of the right kernel {v : m v = 0}, echelon-normalized: each basis
// vector has entry 1 at "its" free column and 0 at the other free columns.
std::vector<RatVec> kernel(const RatMat& m);

// Basis of the row space of m (as vectors), echelon-normalized.
std::vector<RatVec> row_space(const RatMat& m);

// Solves a x = b exactly. Returns false when the system is inconsistent.
bool solve(const RatMat& a, const RatVec& b, RatVec& x);

// Exact inverse; throws std::domain_error on singular input.
RatMat inverse(const RatMat& a);

bool is_zero(const RatMat& m);

// Stacks matrices vertically. All blocks must agree on columns.
RatMat vstack(const std::vector<RatMat>& blocks);

// Incremental echelon basis of a growing family of vectors. Used for span
// saturation (holonomy, generated matrix algebras).
class SpanBasis {
 public:
  explicit SpanBasis(Eigen::Index dim) : dim_(dim) {}

  // Reduces v against the basis; if a nonzero remainder is left, it is
  // normalized and inserted. Returns true when the vector was new.
  bool insert(RatVec v);
  bool contains(RatVec v) const;
  Eigen::Index dim() const { return static_cast<Eigen::Index>(rows_.size()); }
  Eigen::Index ambient() const { return dim_; }
  const std::vector<RatVec>& vectors() const { return rows_; }

 private:
  void reduce(RatVec& v) const;
  Eigen::Index dim_;
  std::vector<RatVec> rows_;          // echelon-normalized
  std::vector<Eigen::Index> leads_;   // lead column of each row
};

}  // namespace sla
