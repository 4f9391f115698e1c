#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zg/integer.hpp"

namespace zg {

/// Row-style echelon Hermite form of a (possibly rank-deficient) lattice in Z^n.
/// Pivots strictly increase, are positive, and entries above a pivot lie in [0, pivot).
struct EchelonBasis {
  std::size_t ambient = 0;
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return rows.size(); }
  bool operator==(const EchelonBasis&) const = default;
};

EchelonBasis echelon_form(std::vector<IntVector> generators, std::size_t ambient);

/// Same reduction, also returning the unimodular transform U with U * G = [rows; 0].
struct EchelonTransform {
  EchelonBasis basis;
  std::vector<IntVector> transform;  // one row per input generator
};
EchelonTransform echelon_with_transform(const std::vector<IntVector>& generators, std::size_t ambient);

bool contains(const EchelonBasis& lattice, const IntVector& x);
bool contains(const EchelonBasis& outer, const EchelonBasis& inner);

/// Coordinates of x in the echelon rows, if x lies in the lattice.
std::optional<IntVector> coordinates(const EchelonBasis& lattice, const IntVector& x);

/// Basis of {x in Z^cols : A x = 0}, where rows has length cols.
std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols);

/// The pure sublattice (L tensor Q) intersected with Z^n.
EchelonBasis saturation(const EchelonBasis& lattice);

/// Some x in Z^cols with A x = b, if one exists.
std::optional<IntVector> solve_integer(const std::vector<IntVector>& rows, std::size_t cols, const IntVector& b);

/// [outer : inner] for lattices of equal rank with inner contained in outer.
Integer relative_index(const EchelonBasis& outer, const EchelonBasis& inner);

Integer determinant(std::vector<std::vector<Integer>> m);
std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols);

IntVector unit_vector(std::size_t n, std::size_t i);
IntVector scaled(const IntVector& v, const Integer& c);

}  // namespace zg
