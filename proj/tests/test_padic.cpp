#include <doctest.h>

#include "oracles.hpp"
#include "zg/catalog.hpp"
#include "zg/cone.hpp"
#include "zg/padic.hpp"

using namespace zg;

namespace {

Polynomial P(const char* s, std::size_t vars) { return Polynomial::parse(s, vars); }

// Exact coefficients from the brute-force point sum, when every point is resolved.
std::vector<Rational> brute_coefficients(const ConeIntegralData& D, std::int64_t p, int M, int kmax) {
  const auto b = oracle::brute_integral(D.f0, D.g0, D.conditions, D.variables, p, M, kmax);
  REQUIRE(b.unresolved == 0);
  std::vector<Rational> c(static_cast<std::size_t>(kmax + 1), 0);
  for (const auto& [key, n] : b.terms)
    c[static_cast<std::size_t>(key.first)] += Rational(n) * rpow(p, -static_cast<long>(D.variables) * M - key.second);
  return c;
}

}  // namespace

TEST_CASE("one-variable integral pins at level kmax + 1") {
  ConeIntegralData D{1, P("1:1", 1), P("1:0", 1), {}};
  const auto I = truncated_integral(D, 3, 3, 4);
  for (int k = 0; k <= 3; ++k) {
    CHECK(I.coefficients[static_cast<std::size_t>(k)].pinned());
    CHECK(I.coefficients[static_cast<std::size_t>(k)].lower == Rational(2, 3) * rpow(3, -k));
  }
  CHECK(I.total_mass() == 1);
  CHECK(I.undetermined_mass == 0);
}

TEST_CASE("chi4 cone data: coefficients match the brute-force point sum") {
  const auto D = chi4_cone_integral_data();
  for (auto [p, M] : {std::pair<std::int64_t, int>{2, 5}, {3, 4}}) {
    const auto I = truncated_integral(D, p, 2, 7);
    const auto b = brute_coefficients(D, p, M, 2);
    for (int k = 0; k <= 2; ++k) {
      CHECK(I.coefficients[static_cast<std::size_t>(k)].pinned());
      CHECK(I.coefficients[static_cast<std::size_t>(k)].lower == b[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("chi4 cone data: normalised local factors") {
  const auto D = chi4_cone_integral_data();
  const auto I5 = truncated_integral(D, 5, 2, 7);
  const auto a0 = I5.coefficients[0].lower;
  CHECK(I5.coefficients[1].lower / a0 == Rational(2, 25));
  const auto I7 = truncated_integral(D, 7, 2, 7);
  CHECK(I7.coefficients[1].lower == 0);
  CHECK(I7.coefficients[2].lower / I7.coefficients[0].lower == Rational(1, 2401));

  const auto F = catalog_entry("chi4-cone").closed_forms.at(ClosureKind::subgroup);
  CHECK(verify_against(D, 5, 2, closed_form_local(F, 5)).passed());
  const PadicRationalFunction two(TPPolynomial(1), {{1, -2}});
  CHECK(verify_against(D, 2, 2, two).passed());
  const PadicRationalFunction wrong(TPPolynomial(1), {{1, -1}});
  const auto r = verify_against(D, 5, 2, wrong);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure);
  CHECK(*r.first_failure == 1);
  CHECK(r.verdicts[0] == CoefficientVerdict::pass);
}

TEST_CASE("conservation and interval monotonicity") {
  const auto D = chi4_cone_integral_data();
  for (std::int64_t p : {2, 3, 5}) {
    std::vector<CoefficientInterval> prev;
    for (int M = 1; M <= 4; ++M) {
      const auto I = truncated_integral(D, p, 2, M);
      CHECK(I.total_mass() == 1);
      for (std::size_t k = 0; k < I.coefficients.size(); ++k) {
        const auto& c = I.coefficients[k];
        CHECK(c.lower <= c.upper);
        if (!prev.empty()) {
          CHECK(c.lower >= prev[k].lower);
          CHECK(c.upper <= prev[k].upper);
        }
      }
      prev = I.coefficients;
    }
  }
}

TEST_CASE("monomial integrals agree with the cone route") {
  // toy datum: f_0 = x1, g_0 = 1, x1 | x2 (ord x1 <= ord x2)
  ConeIntegralData D{2, P("1:1,0", 2), P("1:0,0", 2), {{P("1:1,0", 2), P("1:0,1", 2)}}};
  MonomialConeDatum M;
  M.dimension = 2;
  M.nf = {{1, 0}, {1, 0}};
  M.ng = {{0, 0}, {0, 1}};
  M.nu = {1, 1};
  const auto F = monomial_local_factor(M);
  for (std::int64_t p : {2, 3, 5, 7}) {
    const auto I = truncated_integral(D, p, 4, 5);
    const auto e = F.expand(p, 4);
    for (int k = 0; k <= 4; ++k) {
      CHECK(I.coefficients[static_cast<std::size_t>(k)].pinned());
      CHECK(I.coefficients[static_cast<std::size_t>(k)].lower == e[static_cast<std::size_t>(k)]);
    }
  }
}

TEST_CASE("lattice integrand reproduces oracle counts") {
  const auto Z = oracle_consistency(rings::integers(), 3, 3, ClosureKind::subring);
  REQUIRE(Z.matching);
  CHECK(Z.candidates[0].matches);
  CHECK(Z.candidates[1].matches);  // both constants coincide for h = 1

  const auto Z2 = oracle_consistency(rings::abelian(2), 2, 2, ClosureKind::subring);
  REQUIRE(Z2.matching);
  CHECK(*Z2.matching == "unit-triangular");
  CHECK(Z2.oracle == std::vector<Integer>{1, 3, 7});

  for (auto kind : {ClosureKind::subring, ClosureKind::two_sided_ideal}) {
    const auto H = oracle_consistency(rings::heisenberg(), 2, 2, kind);
    REQUIRE(H.matching);
    CHECK(*H.matching == "unit-triangular");
    CHECK_FALSE(H.candidates[1].matches);
  }
  const auto G = oracle_consistency(rings::quadratic_order(-1), 3, 3, ClosureKind::order);
  REQUIRE(G.matching);
  CHECK(*G.matching == "unit-triangular");
}

TEST_CASE("integrator input checks") {
  ConeIntegralData D{1, P("1:1", 1), P("1:0", 1), {}};
  CHECK_THROWS_AS(truncated_integral(D, 4, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(truncated_integral(D, 3, 2, 0), std::invalid_argument);
  ConeIntegralData Z{1, Polynomial(1), P("1:0", 1), {}};
  CHECK_THROWS_AS(truncated_integral(Z, 3, 2, 3), std::invalid_argument);
  const auto capped = truncated_integral(chi4_cone_integral_data(), 3, 3, 2);
  CHECK(capped.exhausted());
  CHECK(capped.total_mass() == 1);
}
