#include "sla/matrix.hpp"

#include <stdexcept>

namespace sla {

std::vector<Eigen::Index> rref(RatMat& m) {
  const Eigen::Index rows = m.rows(), cols = m.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best = -1;
    std::size_t best_bits = 0;
    for (Eigen::Index i = r; i < rows; ++i) {
      if (m(i, c).is_zero()) continue;
      const std::size_t b = m(i, c).bits();
      if (best < 0 || b < best_bits) {
        best = i;
        best_bits = b;
      }
    }
    if (best < 0) continue;
    if (best != r) m.row(best).swap(m.row(r));
    const Rat inv = Rat(1) / m(r, c);
    for (Eigen::Index j = c; j < cols; ++j) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const Rat f = m(i, c);
      for (Eigen::Index j = c; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Eigen::Index rank(RatMat m) { return static_cast<Eigen::Index>(rref(m).size()); }

std::vector<RatVec> kernel(const RatMat& m) {
  RatMat e = m;
  const std::vector<Eigen::Index> pivots = rref(e);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (Eigen::Index c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (Eigen::Index c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v = RatVec::Constant(cols, Rat(0));
    v(c) = Rat(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) v(pivots[p]) = -e(static_cast<Eigen::Index>(p), c);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<RatVec> row_space(const RatMat& m) {
  RatMat e = m;
  const std::vector<Eigen::Index> pivots = rref(e);
  std::vector<RatVec> basis;
  for (std::size_t p = 0; p < pivots.size(); ++p) basis.push_back(e.row(static_cast<Eigen::Index>(p)).transpose());
  return basis;
}

bool solve(const RatMat& a, const RatVec& b, RatVec& x) {
  RatMat aug(a.rows(), a.cols() + 1);
  aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const std::vector<Eigen::Index> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return false;
  x = RatVec::Constant(a.cols(), Rat(0));
  for (std::size_t p = 0; p < pivots.size(); ++p) x(pivots[p]) = aug(static_cast<Eigen::Index>(p), a.cols());
  return true;
}

RatMat inverse(const RatMat& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse: non-square");
  const Eigen::Index n = a.rows();
  RatMat aug(n, 2 * n);
  aug.leftCols(n) = a;
  aug.rightCols(n) = RatMat::Identity(n, n);
  const std::vector<Eigen::Index> pivots = rref(aug);
  if (static_cast<Eigen::Index>(pivots.size()) != n || pivots.back() != n - 1)
    throw std::domain_error("inverse: singular matrix");
  return aug.rightCols(n);
}

bool is_zero(const RatMat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

RatMat vstack(const std::vector<RatMat>& blocks) {
  if (blocks.empty()) return RatMat(0, 0);
  Eigen::Index rows = 0;
  const Eigen::Index cols = blocks.front().cols();
  for (const RatMat& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  RatMat out(rows, cols);
  Eigen::Index at = 0;
  for (const RatMat& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

void SpanBasis::reduce(RatVec& v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat& c = v(leads_[i]);
    if (c.is_zero()) continue;
    const Rat f = c;  // rows are normalized to lead coefficient 1
    v -= f * rows_[i];
  }
}

bool SpanBasis::insert(RatVec v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  reduce(v);
  Eigen::Index lead = -1;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (!v(i).is_zero()) {
      lead = i;
      break;
    }
  }
  if (lead < 0) return false;
  const Rat inv = Rat(1) / v(lead);
  for (Eigen::Index i = lead; i < v.size(); ++i) v(i) *= inv;
  // Back-substitute to keep earlier rows fully reduced.
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rat c = rows_[i](lead);
    if (!c.is_zero()) rows_[i] -= c * v;
  }
  rows_.push_back(std::move(v));
  leads_.push_back(lead);
  // Keep rows sorted by lead column for determinism.
  for (std::size_t i = rows_.size(); i > 1 && leads_[i - 1] < leads_[i - 2]; --i) {
    std::swap(leads_[i - 1], leads_[i - 2]);
    rows_[i - 1].swap(rows_[i - 2]);
  }
  return true;
}

bool SpanBasis::contains(RatVec v) const {
  reduce(v);
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) return false;
  return true;
}

}  // namespace sla
