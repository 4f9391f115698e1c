#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zg/algebra.hpp"
#include "zg/dirichlet.hpp"
#include "zg/padic.hpp"
#include "zg/sublattice_enum.hpp"

namespace zg {

struct CatalogEntry {
  std::string name;
  std::string note;
  std::optional<StructureConstantAlgebra> ring;
  std::map<ClosureKind, ZetaClosedForm> closed_forms;
  /// Abscissae known without a closed form in the catalog.
  std::map<ClosureKind, Rational> known_abscissa;
  std::optional<ConeIntegralData> integral;

  /// Closed-form abscissa when present, else the stored value.
  std::optional<Rational> abscissa(ClosureKind kind) const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws std::out_of_range for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);

/// The three-variable cone integral whose value is zeta(s+2) L(chi_4, s+2).
ConeIntegralData chi4_cone_integral_data();

enum class CatalogDepth { quick, standard, full };
CatalogDepth parse_catalog_depth(const std::string& text);

struct CatalogCheck {
  std::string entry;
  std::string check;
  bool passed = false;
  std::string detail;
};

std::vector<CatalogCheck> verify_catalog(CatalogDepth depth);

}  // namespace zg
