#include "sla/tensor.hpp"

#include <stdexcept>

namespace sla {

int perm_sign(const std::vector<int>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) s = -s;
  return s;
}

int koszul_sign(const std::vector<Parity>& parities, const std::vector<int>& perm) {
  int s = 1;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j] && parities[static_cast<std::size_t>(perm[i])] == Parity::Odd &&
          parities[static_cast<std::size_t>(perm[j])] == Parity::Odd)
        s = -s;
  return s;
}

TensorSpace::TensorSpace(std::vector<GradedSpace> factors, std::vector<bool> dual)
    : factors_(std::move(factors)), dual_(std::move(dual)) {
  if (factors_.size() != dual_.size())
    throw std::invalid_argument("TensorSpace: factors/variance size mismatch");
  for (const GradedSpace& f : factors_) dim_ *= f.dim();
}

TensorSpace TensorSpace::power(const GradedSpace& v, int r, int s) {
  std::vector<GradedSpace> factors;
  std::vector<bool> dual;
  for (int i = 0; i < r; ++i) {
    factors.push_back(v);
    dual.push_back(false);
  }
  for (int i = 0; i < s; ++i) {
    factors.push_back(v);
    dual.push_back(true);
  }
  return TensorSpace(std::move(factors), std::move(dual));
}

Eigen::Index TensorSpace::linear_index(const std::vector<Eigen::Index>& multi) const {
  if (static_cast<Eigen::Index>(multi.size()) != factor_count())
    throw std::invalid_argument("TensorSpace: multi-index arity mismatch");
  Eigen::Index idx = 0;
  for (Eigen::Index f = 0; f < factor_count(); ++f) idx = idx * factor(f).dim() + multi[static_cast<std::size_t>(f)];
  return idx;
}

std::vector<Eigen::Index> TensorSpace::multi_index(Eigen::Index linear) const {
  std::vector<Eigen::Index> multi(static_cast<std::size_t>(factor_count()));
  for (Eigen::Index f = factor_count() - 1; f >= 0; --f) {
    const Eigen::Index d = factor(f).dim();
    multi[static_cast<std::size_t>(f)] = linear % d;
    linear /= d;
  }
  return multi;
}

Parity TensorSpace::parity(const std::vector<Eigen::Index>& multi) const {
  Parity p = Parity::Even;
  for (Eigen::Index f = 0; f < factor_count(); ++f) p = p + factor(f).parity(multi[static_cast<std::size_t>(f)]);
  return p;
}

GradedSpace TensorSpace::as_graded_space() const {
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (Eigen::Index i = 0; i < dim(); ++i) {
    const std::vector<Eigen::Index> multi = multi_index(i);
    std::string l;
    for (Eigen::Index f = 0; f < factor_count(); ++f) {
      if (f) l += "(x)";
      l += factor(f).label(multi[static_cast<std::size_t>(f)]);
      if (is_dual(f)) l += "*";
    }
    labels.push_back(l);
    parities.push_back(parity(multi));
  }
  return GradedSpace(std::move(labels), std::move(parities));
}

RatVec TensorElement::to_vector() const {
  RatVec v = RatVec::Constant(space->dim(), Rat(0));
  for (const auto& [multi, c] : coeff) v(space->linear_index(multi)) = c;
  return v;
}

TensorElement TensorElement::from_vector(const TensorSpace& ts, const RatVec& v) {
  TensorElement t;
  t.space = &ts;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) t.coeff[ts.multi_index(i)] = v(i);
  return t;
}

RatMat dual_action(const RatMat& action, const GradedSpace& base, Parity gen_parity) {
  const Eigen::Index n = base.dim();
  if (action.rows() != n || action.cols() != n)
    throw std::invalid_argument("dual_action: action/space dimension mismatch");
  RatMat out = RatMat::Constant(n, n, Rat(0));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      Rat v = -action(j, i);
      if (gen_parity == Parity::Odd && base.parity(j) == Parity::Odd) v = -v;
      out(i, j) = v;
    }
  return out;
}

RatMat tensor_action(const TensorSpace& ts, const std::vector<RatMat>& actions, Parity gen_parity) {
  if (static_cast<Eigen::Index>(actions.size()) != ts.factor_count())
    throw std::invalid_argument("tensor_action: one action per factor required");
  std::vector<RatMat> fact;
  for (Eigen::Index f = 0; f < ts.factor_count(); ++f) {
    const GradedSpace& b = ts.factor(f);
    const RatMat& a = actions[static_cast<std::size_t>(f)];
    if (a.rows() != b.dim() || a.cols() != b.dim())
      throw std::invalid_argument("tensor_action: action/space dimension mismatch");
    fact.push_back(ts.is_dual(f) ? dual_action(a, b, gen_parity) : a);
  }
  const Eigen::Index n = ts.dim();
  RatMat out = RatMat::Constant(n, n, Rat(0));
  for (Eigen::Index col = 0; col < n; ++col) {
    const std::vector<Eigen::Index> src = ts.multi_index(col);
    for (Eigen::Index f = 0; f < ts.factor_count(); ++f) {
      // Koszul sign: the generator moves past factors 0..f-1.
      int sgn = 1;
      if (gen_parity == Parity::Odd)
        for (Eigen::Index g = 0; g < f; ++g)
          if (ts.factor(g).parity(src[static_cast<std::size_t>(g)]) == Parity::Odd) sgn = -sgn;
      const RatMat& a = fact[static_cast<std::size_t>(f)];
      std::vector<Eigen::Index> dst = src;
      for (Eigen::Index i = 0; i < ts.factor(f).dim(); ++i) {
        const Rat& c = a(i, src[static_cast<std::size_t>(f)]);
        if (c.is_zero()) continue;
        dst[static_cast<std::size_t>(f)] = i;
        const Eigen::Index row = ts.linear_index(dst);
        out(row, col) += (sgn < 0) ? Rat(-c.value()) : c;
      }
    }
  }
  return out;
}

RatMat tensor_action(const TensorSpace& ts, const RatMat& action, Parity gen_parity) {
  std::vector<RatMat> actions(static_cast<std::size_t>(ts.factor_count()), action);
  return tensor_action(ts, actions, gen_parity);
}

namespace {

// Rows of the intertwining system are inserted into an incremental echelon
// basis; duplicates and dependent rows vanish immediately, so the final
// elimination runs on at most (#variables) rows.
std::vector<RatVec> kernel_of_rows(SpanBasis& rows, Eigen::Index nvars) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(nvars), false);
  std::vector<Eigen::Index> leads;
  for (const RatVec& r : rows.vectors()) {
    for (Eigen::Index i = 0; i < nvars; ++i)
      if (!r(i).is_zero()) {
        is_pivot[static_cast<std::size_t>(i)] = true;
        leads.push_back(i);
        break;
      }
  }
  std::vector<RatVec> basis;
  for (Eigen::Index c = 0; c < nvars; ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    RatVec v = RatVec::Constant(nvars, Rat(0));
    v(c) = Rat(1);
    const auto& rs = rows.vectors();
    for (std::size_t r = 0; r < rs.size(); ++r) v(leads[r]) = -rs[r](c);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

std::vector<GradedMap> equivariant_maps(const GradedSpace& dom, const GradedSpace& cod,
                                        const std::vector<RatMat>& dom_actions,
                                        const std::vector<RatMat>& cod_actions) {
  std::vector<GradedMap> out;
  for (Parity p : {Parity::Even, Parity::Odd}) {
    std::vector<GradedMap> part = equivariant_maps(dom, cod, dom_actions, cod_actions, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<GradedMap> equivariant_maps(const GradedSpace& dom, const GradedSpace& cod,
                                        const std::vector<RatMat>& dom_actions,
                                        const std::vector<RatMat>& cod_actions, Parity parity) {
  if (dom_actions.size() != cod_actions.size())
    throw std::invalid_argument("equivariant_maps: generator list length mismatch");
  for (const RatMat& a : dom_actions)
    if (a.rows() != dom.dim() || a.cols() != dom.dim())
      throw std::invalid_argument("equivariant_maps: domain action dimension mismatch");
  for (const RatMat& a : cod_actions)
    if (a.rows() != cod.dim() || a.cols() != cod.dim())
      throw std::invalid_argument("equivariant_maps: codomain action dimension mismatch");

  // Variables: entries T[i,j] allowed by the requested parity.
  std::vector<std::pair<Eigen::Index, Eigen::Index>> vars;
  RatMat var_id = RatMat::Constant(cod.dim(), dom.dim(), Rat(-1));
  for (Eigen::Index i = 0; i < cod.dim(); ++i)
    for (Eigen::Index j = 0; j < dom.dim(); ++j)
      if (cod.parity(i) == dom.parity(j) + parity) {
        var_id(i, j) = Rat(static_cast<int>(vars.size()));
        vars.emplace_back(i, j);
      }
  const Eigen::Index nvars = static_cast<Eigen::Index>(vars.size());
  auto var_of = [&](Eigen::Index i, Eigen::Index j) -> Eigen::Index {
    const Rat& v = var_id(i, j);
    return (v.sign() < 0) ? -1 : static_cast<Eigen::Index>(v.num().get_si());
  };

  SpanBasis rows(nvars);
  for (std::size_t g = 0; g < dom_actions.size(); ++g) {
    const RatMat& rd = dom_actions[g];
    const RatMat& rc = cod_actions[g];
    for (Eigen::Index r = 0; r < cod.dim(); ++r)
      for (Eigen::Index c = 0; c < dom.dim(); ++c) {
        RatVec row = RatVec::Constant(nvars, Rat(0));
        bool nonzero = false;
        for (Eigen::Index i = 0; i < cod.dim(); ++i) {
          if (rc(r, i).is_zero()) continue;
          const Eigen::Index v = var_of(i, c);
          if (v < 0) continue;
          row(v) += rc(r, i);
          nonzero = true;
        }
        for (Eigen::Index j = 0; j < dom.dim(); ++j) {
          if (rd(j, c).is_zero()) continue;
          const Eigen::Index v = var_of(r, j);
          if (v < 0) continue;
          row(v) -= rd(j, c);
          nonzero = true;
        }
        if (nonzero) rows.insert(std::move(row));
      }
  }

  std::vector<RatVec> null = kernel_of_rows(rows, nvars);
  std::vector<GradedMap> basis;
  for (const RatVec& v : null) {
    RatMat t = RatMat::Constant(cod.dim(), dom.dim(), Rat(0));
    for (Eigen::Index k = 0; k < nvars; ++k)
      if (!v(k).is_zero()) t(vars[static_cast<std::size_t>(k)].first, vars[static_cast<std::size_t>(k)].second) = v(k);
    basis.emplace_back(dom, cod, std::move(t), parity);
  }
  return basis;
}

std::vector<RatVec> joint_kernel(const std::vector<RatMat>& ops) {
  if (ops.empty()) throw std::invalid_argument("joint_kernel: no operators");
  const Eigen::Index n = ops.front().cols();
  SpanBasis rows(n);
  for (const RatMat& op : ops) {
    if (op.cols() != n) throw std::invalid_argument("joint_kernel: dimension mismatch");
    for (Eigen::Index r = 0; r < op.rows(); ++r) {
      bool nonzero = false;
      for (Eigen::Index c = 0; c < n; ++c)
        if (!op(r, c).is_zero()) {
          nonzero = true;
          break;
        }
      if (nonzero) rows.insert(op.row(r).transpose());
    }
  }
  RatMat stacked(static_cast<Eigen::Index>(rows.vectors().size()), n);
  for (std::size_t i = 0; i < rows.vectors().size(); ++i) stacked.row(static_cast<Eigen::Index>(i)) = rows.vectors()[i].transpose();
  if (stacked.rows() == 0) {
    std::vector<RatVec> basis;
    for (Eigen::Index i = 0; i < n; ++i) {
      RatVec v = RatVec::Constant(n, Rat(0));
      v(i) = Rat(1);
      basis.push_back(std::move(v));
    }
    return basis;
  }
  return kernel(stacked);
}

}  // namespace sla
