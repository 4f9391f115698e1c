#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zg/algebra.hpp"
#include "zg/integer.hpp"

namespace zg {

/// Full-rank sublattice of Z^h in row Hermite form: upper triangular,
/// m_ii >= 1 and 0 <= m_ij < m_jj for i < j.
class HermiteMatrix {
 public:
  HermiteMatrix() = default;
  HermiteMatrix(std::size_t h, std::vector<std::int64_t> entries);  // row-major, validated
  static HermiteMatrix identity(std::size_t h);

  std::size_t size() const { return h_; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return m_[i * h_ + j]; }
  IntVector row(std::size_t i) const;
  std::vector<IntVector> rows() const;
  std::vector<std::int64_t> diagonal() const;
  Integer index() const;
  bool contains(const IntVector& x) const;
  const std::vector<std::int64_t>& entries() const { return m_; }
  std::string to_string() const;

  bool operator==(const HermiteMatrix&) const = default;

 private:
  std::size_t h_ = 0;
  std::vector<std::int64_t> m_;
};

enum class ClosureKind { subgroup, subring, left_ideal, right_ideal, two_sided_ideal, order };

std::string to_string(ClosureKind kind);
ClosureKind parse_closure_kind(const std::string& text);

/// Every index-n sublattice of Z^h once: diagonal vectors in lexicographic
/// order, then off-diagonal entries row-major lexicographically.
void for_each_hnf(std::size_t h, std::int64_t n, const std::function<void(const HermiteMatrix&)>& visit);
std::vector<HermiteMatrix> enumerate_hnf(std::size_t h, std::int64_t n);

bool is_closed(const StructureConstantAlgebra& L, const HermiteMatrix& M, ClosureKind kind);

enum class CountStrategy {
  automatic,
  reference,  // enumerate_hnf filtered by is_closed, serial
  pruned,     // row-by-row search with partial closure tests, parallel over diagonal shapes
  central,    // class-2 Lie rings: decomposition over the saturated centre
};

std::string to_string(CountStrategy s);
CountStrategy parse_count_strategy(const std::string& text);

Integer count(const StructureConstantAlgebra& L, std::int64_t n, ClosureKind kind,
              CountStrategy strategy = CountStrategy::automatic);

/// a_1, ..., a_nmax (index 0 holds a_1).
std::vector<Integer> count_range(const StructureConstantAlgebra& L, std::int64_t nmax, ClosureKind kind,
                                 CountStrategy strategy = CountStrategy::automatic);

/// (a_{p^0}, ..., a_{p^kmax}).
std::vector<Integer> local_coefficients(const StructureConstantAlgebra& L, std::int64_t p, int kmax, ClosureKind kind,
                                        CountStrategy strategy = CountStrategy::automatic);

/// Visits every closed sublattice of index n, in enumerate_hnf order.
void for_each_closed(const StructureConstantAlgebra& L, std::int64_t n, ClosureKind kind,
                     const std::function<void(const HermiteMatrix&)>& visit);

}  // namespace zg
