#include <doctest.h>

#include "zg/algebra.hpp"

using namespace zg;

namespace {
IntVector e(std::size_t h, std::size_t i) { return unit_vector(h, i); }
}  // namespace

TEST_CASE("multiply in the Heisenberg ring") {
  const auto H = rings::heisenberg();
  CHECK(H.multiply(e(3, 0), e(3, 1)) == e(3, 2));
  CHECK(H.multiply(e(3, 1), e(3, 0)) == scaled(e(3, 2), -1));
  CHECK(H.multiply(e(3, 0), e(3, 0)) == IntVector{0, 0, 0});
  CHECK_THROWS_AS(H.multiply(IntVector{1, 0}, e(3, 1)), std::invalid_argument);
  CHECK(H.multiply(IntVector{2, 3, 5}, IntVector{-1, 4, 7}) == IntVector{0, 0, 2 * 4 - 3 * -1});
}

TEST_CASE("Lie identities hold on basis triples of catalog Lie rings") {
  for (const auto& L : {rings::heisenberg(), rings::power(rings::heisenberg(), 2), rings::central_product(2, 1),
                        tensor_with_order(rings::heisenberg(), rings::quadratic_order(5))}) {
    const std::size_t h = L.rank();
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = 0; j < h; ++j) {
        auto a = L.basis_product(i, j), b = L.basis_product(j, i);
        for (std::size_t k = 0; k < h; ++k) CHECK(a[k] + b[k] == 0);
      }
    CHECK(validate(L).ok());
  }
}

TEST_CASE("lower central series") {
  const auto H = rings::heisenberg();
  const auto s = lower_central_series(H);
  CHECK(s.nilpotency_class == 2);
  REQUIRE(s.terms.size() == 3);
  CHECK(s.terms[0].rank() == 3);
  CHECK(s.terms[1].rank() == 1);
  CHECK(contains(s.terms[1].basis, e(3, 2)));
  CHECK(s.terms[2].is_zero());

  const auto A = lower_central_series(rings::abelian(4));
  CHECK(A.nilpotency_class == 1);
  CHECK(A.terms[1].is_zero());

  const auto H2 = lower_central_series(rings::power(H, 2));
  CHECK(H2.nilpotency_class == 2);
  CHECK(H2.terms[1].rank() == 2);

  // descending: generators of gamma_{i+1} lie in gamma_i
  for (const auto& L : {H, rings::central_product(2, 0), direct_product(H, rings::abelian(1))}) {
    const auto t = lower_central_series(L).terms;
    for (std::size_t i = 0; i + 1 < t.size(); ++i)
      for (const auto& r : t[i + 1].basis.rows) CHECK(contains(t[i].basis, r));
  }
}

TEST_CASE("lower central series rejects non-nilpotent rings") {
  // [e1, e2] = e2 is solvable but not nilpotent
  StructureConstantAlgebra L(2, AlgebraKind::lie, {{0, 1, 1, 1}, {1, 0, 1, -1}});
  CHECK(validate(L).ok());
  CHECK_THROWS_AS(lower_central_series(L), std::runtime_error);
}

TEST_CASE("saturated centre") {
  const auto H = center_saturation(rings::heisenberg());
  CHECK(H.gamma_rank == 1);
  CHECK(H.index_over_gamma == 1);
  CHECK(H.saturation.basis.rows == std::vector<IntVector>{e(3, 2)});

  const auto HZ = center_saturation(direct_product(rings::heisenberg(), rings::abelian(1)));
  CHECK(HZ.gamma_rank == 1);
  CHECK(HZ.saturation.basis.rows == std::vector<IntVector>{e(4, 2)});

  const auto H2 = center_saturation(rings::heisenberg(2));
  CHECK(H2.index_over_gamma == 2);
  CHECK(H2.saturation.basis.rows == std::vector<IntVector>{e(3, 2)});

  CHECK_THROWS_AS(center_saturation(rings::abelian(3)), std::invalid_argument);
}

TEST_CASE("direct products") {
  const auto H = rings::heisenberg();
  const auto H2 = direct_product(H, H);
  CHECK(H2.rank() == 6);
  CHECK(H2.basis_product(3, 4) == e(6, 5));
  CHECK(H2.basis_product(0, 4) == IntVector(6, 0));

  const auto Z2 = direct_product(rings::integers(), rings::integers());
  CHECK(Z2.kind() == AlgebraKind::unital);
  CHECK(*Z2.identity() == IntVector{1, 1});
  CHECK(validate(Z2).ok());

  const StructureConstantAlgebra zero(0, AlgebraKind::lie, {});
  CHECK(direct_product(H, zero) == H);
  CHECK_THROWS_AS(direct_product(H, rings::integers()), std::invalid_argument);
}

TEST_CASE("tensor with a quadratic order") {
  const auto H = rings::heisenberg();
  const auto L5 = tensor_with_order(H, rings::quadratic_order(5));
  CHECK(L5.rank() == 6);
  CHECK(L5.kind() == AlgebraKind::lie);
  CHECK(validate(L5).ok());
  // (x (x) w)(y (x) w) = z (x) w^2 = z (x) (1 + w)
  CHECK(L5.basis_product(1, 3) == IntVector{0, 0, 0, 0, 1, 1});

  const auto G = tensor_with_order(rings::integers(), rings::quadratic_order(-1));
  CHECK(G == rings::quadratic_order(-1).renamed(G.name()));
  CHECK(tensor_with_order(H, rings::integers()) == H.renamed(tensor_with_order(H, rings::integers()).name()));

  // tensoring distributes over direct products in the documented basis order
  const auto O = rings::quadratic_order(2);
  const auto lhs = tensor_with_order(direct_product(H, rings::abelian(1)), O);
  const auto rhs = direct_product(tensor_with_order(H, O), tensor_with_order(rings::abelian(1), O));
  CHECK(lhs.nonzero_constants().size() == rhs.nonzero_constants().size());
  for (std::size_t i = 0; i < 8; ++i)
    for (std::size_t j = 0; j < 8; ++j) CHECK(lhs.basis_product(i, j) == rhs.basis_product(i, j));

  CHECK_THROWS(tensor_with_order(H, rings::heisenberg()));
}

TEST_CASE("validate reports violations") {
  StructureConstantAlgebra bad(3, AlgebraKind::lie, {{0, 1, 2, 1}, {1, 0, 2, 1}});
  const auto r = validate(bad);
  REQUIRE_FALSE(r.ok());
  CHECK(r.violations.front() == "antisymmetry violation at (1,2,3)");

  CHECK(validate(rings::quadratic_order(-1)).ok());
  StructureConstantAlgebra wrong_unit(2, AlgebraKind::unital, rings::quadratic_order(-1).nonzero_constants(),
                                      IntVector{0, 1});
  CHECK_FALSE(validate(wrong_unit).ok());

  // [e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e1 is antisymmetric but fails Jacobi
  StructureConstantAlgebra jac(3, AlgebraKind::lie,
                               {{0, 1, 2, 1}, {1, 0, 2, -1}, {1, 2, 0, 1}, {2, 1, 0, -1}, {2, 0, 0, 1}, {0, 2, 0, -1}});
  const auto j = validate(jac);
  REQUIRE_FALSE(j.ok());
  CHECK(j.violations.front().rfind("Jacobi violation at", 0) == 0);
}
