#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zg/integer.hpp"
#include "zg/lattice.hpp"

namespace zg {

enum class AlgebraKind { lie, associative, unital };

std::string to_string(AlgebraKind kind);
AlgebraKind parse_algebra_kind(const std::string& text);

/// One nonzero structure constant c_{ij}^k, zero-based indices.
struct StructureConstant {
  std::size_t i, j, k;
  Integer value;
  bool operator==(const StructureConstant&) const = default;
};

/// Ring of finite additive rank given by e_i e_j = sum_k c_{ij}^k e_k.
/// Construction does not check the ring axioms; see validate().
class StructureConstantAlgebra {
 public:
  StructureConstantAlgebra() = default;
  StructureConstantAlgebra(std::size_t rank, AlgebraKind kind,
                           const std::vector<StructureConstant>& constants,
                           std::optional<IntVector> identity = std::nullopt, std::string name = {});

  std::size_t rank() const { return rank_; }
  AlgebraKind kind() const { return kind_; }
  const std::optional<IntVector>& identity() const { return identity_; }
  const std::string& name() const { return name_; }
  StructureConstantAlgebra renamed(std::string name) const;

  const Integer& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * rank_ + j) * rank_ + k];
  }
  /// Nonzero constants in (i, j, k) lexicographic order.
  std::vector<StructureConstant> nonzero_constants() const;

  IntVector multiply(const IntVector& x, const IntVector& y) const;
  IntVector basis_product(std::size_t i, std::size_t j) const;
  bool has_zero_product() const;
  bool is_commutative() const;

  bool operator==(const StructureConstantAlgebra& other) const;

 private:
  std::size_t rank_ = 0;
  AlgebraKind kind_ = AlgebraKind::lie;
  std::vector<Integer> c_;
  std::optional<IntVector> identity_;
  std::string name_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const StructureConstantAlgebra& L);

struct Sublattice {
  EchelonBasis basis;

  std::size_t ambient_rank() const { return basis.ambient; }
  std::size_t rank() const { return basis.rank(); }
  bool is_zero() const { return basis.rows.empty(); }
  /// Index in Z^h, present only for full rank.
  std::optional<Integer> index() const;
};

struct LowerCentralSeries {
  std::vector<Sublattice> terms;  // gamma_1, ..., gamma_{c+1} = 0
  int nilpotency_class = 0;
};

/// Throws std::runtime_error if gamma_{cap} is still nonzero (default cap h+1).
LowerCentralSeries lower_central_series(const StructureConstantAlgebra& L, std::optional<int> depth_cap = std::nullopt);

struct CenterSaturation {
  Sublattice saturation;
  std::size_t gamma_rank = 0;
  Integer index_over_gamma;
  int nilpotency_class = 0;
  Sublattice gamma;
};

CenterSaturation center_saturation(const StructureConstantAlgebra& L);

/// Lattice spanned by all products of elements of A and B (A*B for associative kinds).
Sublattice product_lattice(const StructureConstantAlgebra& L, const std::vector<IntVector>& A,
                           const std::vector<IntVector>& B);

StructureConstantAlgebra direct_product(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b);
StructureConstantAlgebra tensor_with_order(const StructureConstantAlgebra& L, const StructureConstantAlgebra& O);

namespace rings {

StructureConstantAlgebra abelian(std::size_t h);
/// [x,y] = scale * z.
StructureConstantAlgebra heisenberg(const Integer& scale = 1);
/// x_1..x_m, y_1..y_m, t_1..t_r, z with [x_i, y_i] = z.
StructureConstantAlgebra central_product(std::size_t m, std::size_t r);
/// Rank-1 unital ring Z.
StructureConstantAlgebra integers();
/// Maximal order of Q(sqrt k) on the basis {1, w}.
StructureConstantAlgebra quadratic_order(std::int64_t k);
StructureConstantAlgebra power(const StructureConstantAlgebra& L, std::size_t d);

}  // namespace rings

}  // namespace zg
