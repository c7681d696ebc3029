#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sla/killing.hpp"

namespace sla {

struct CatalogEntry {
  std::string name;
  std::string provenance;
  std::shared_ptr<LieSuperalgebra> algebra;
  std::vector<Eigen::Index> h_indices;
  std::vector<Eigen::Index> m_indices;
  std::optional<AdaptedSupersymmetryAlgebra> adapted;

  ReductiveDecomposition decomposition() const {
    return ReductiveDecomposition(*algebra, h_indices, m_indices);
  }
};

// Poincare Lie superalgebra g(Gamma) = (spin(r,s) + R^{r,s}) + S with
// [A,s] = Delta(A)s, [R^{r,s},S] = 0 and [s,t] = Gamma(s,t). gamma_choice
// indexes the basis of symmetric equivariant vector-valued forms; throws when
// that basis is empty.
CatalogEntry build_poincare(const Signature& sig, std::size_t gamma_choice = 0);

// The Poincare superspacetime data (h = spin, m = R^{r,s} + S) without
// requiring a nonzero Gamma: used by the invariant-connection table, which
// depends only on the isotropy module structure. Gamma is the first
// symmetric form when available, zero otherwise.
CatalogEntry build_poincare_spacetime(const Signature& sig);

// The Cahen-Wallach plane-wave superalgebra in signature (1,10):
// g = (E* + so(3) + so(6)) + R^{1,10} + S(32), with the flux 4-form
// F = -q* ^ e1* ^ e2* ^ e3* attached.
CatalogEntry build_cahen_wallach();

enum class FreundRubinKind { AdS4xS7, AdS7xS4 };
CatalogEntry build_freund_rubin(FreundRubinKind kind);

// The superconformal algebra of Wess and Zumino, rationalized by rescaling
// the second spinor block by sqrt(2); r is the free nonzero parameter of the
// odd-odd bracket.
CatalogEntry build_wess_zumino(const Rat& r = Rat(1));

// Purely even test model: so(3) = so(2) + m with m = R^2.
CatalogEntry fixture_so3_sphere();

// Synthetic Lie superalgebra sl(2|1) built from 3x3 supertraceless matrices;
// dim g_1 = 4 with nonzero [g_1,[g_1,g_1]] (exercises degree-4 Koszul terms).
CatalogEntry fixture_sl21();

// Registered catalog names.
std::vector<std::string> catalog_names();
CatalogEntry catalog_build(const std::string& name);

// JSON serialization (schema: basis/brackets with rationals as "p/q" strings,
// plus optional h/m, adapted and flux sections).
std::string export_entry_json(const CatalogEntry& entry);
CatalogEntry import_entry_json(const std::string& json_text);

}  // namespace sla
