#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "zg/algebra.hpp"
#include "zg/number_theory.hpp"
#include "zg/sublattice_enum.hpp"

using namespace zg;

namespace {

oracle::Kind to_oracle(ClosureKind k) {
  switch (k) {
    case ClosureKind::subring: return oracle::Kind::subring;
    case ClosureKind::left_ideal: return oracle::Kind::left;
    case ClosureKind::right_ideal: return oracle::Kind::right;
    case ClosureKind::two_sided_ideal: return oracle::Kind::two_sided;
    case ClosureKind::order: return oracle::Kind::order;
    default: throw std::logic_error("no oracle kind");
  }
}

// Non-commutative unital ring: upper-triangular 2x2 integer matrices on e11, e12, e22.
StructureConstantAlgebra upper_triangular_matrices() {
  return StructureConstantAlgebra(3, AlgebraKind::unital,
                                  {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 2, 1, 1}, {2, 2, 2, 1}}, IntVector{1, 0, 1}, "T2");
}

}  // namespace

TEST_CASE("enumerate_hnf small cases") {
  const auto m = enumerate_hnf(2, 2);
  REQUIRE(m.size() == 3);
  CHECK(m[0].diagonal() == std::vector<std::int64_t>{1, 2});
  CHECK(m[2].diagonal() == std::vector<std::int64_t>{2, 1});
  CHECK(m[0].to_string() == "1,0;0,2");
  CHECK(m[1].to_string() == "1,1;0,2");
  for (std::int64_t n : {1, 7, 12}) {
    const auto one = enumerate_hnf(1, n);
    REQUIRE(one.size() == 1);
    CHECK(one[0](0, 0) == n);
  }
  for (std::int64_t p : {2, 3, 5, 7}) CHECK(enumerate_hnf(3, p).size() == static_cast<std::size_t>(1 + p + p * p));
}

TEST_CASE("enumerate_hnf matches the independent enumeration exactly and in order") {
  for (std::size_t h = 1; h <= 4; ++h)
    for (std::int64_t n = 1; n <= (h == 4 ? 8 : 24); ++n) {
      const auto ours = enumerate_hnf(h, n);
      const auto theirs = oracle::hermite_matrices(h, n);
      REQUIRE(ours.size() == theirs.size());
      std::set<std::vector<std::int64_t>> seen;
      for (std::size_t i = 0; i < ours.size(); ++i) {
        std::vector<std::int64_t> flat;
        for (const auto& r : theirs[i]) flat.insert(flat.end(), r.begin(), r.end());
        CHECK(ours[i].entries() == flat);
        seen.insert(ours[i].entries());
      }
      CHECK(seen.size() == ours.size());
      CHECK(static_cast<std::int64_t>(ours.size()) == sublattice_count(h, n));
    }
}

TEST_CASE("HermiteMatrix validation") {
  CHECK_THROWS_AS(HermiteMatrix(2, {1, 2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(HermiteMatrix(2, {0, 0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(HermiteMatrix(2, {1, 0, 1, 1}), std::invalid_argument);
  CHECK(HermiteMatrix(2, {2, 1, 0, 3}).index() == 6);
}

TEST_CASE("is_closed examples") {
  const auto H = rings::heisenberg();
  for (auto k : {ClosureKind::subgroup, ClosureKind::subring, ClosureKind::two_sided_ideal, ClosureKind::left_ideal})
    CHECK(is_closed(H, HermiteMatrix::identity(3), k));
  CHECK(is_closed(H, HermiteMatrix(3, {2, 0, 0, 0, 2, 0, 0, 0, 2}), ClosureKind::subring));
  CHECK_FALSE(is_closed(H, HermiteMatrix(3, {1, 0, 0, 0, 1, 0, 0, 0, 2}), ClosureKind::subring));
  CHECK_THROWS_AS(is_closed(H, HermiteMatrix::identity(2), ClosureKind::subring), std::invalid_argument);
  CHECK_THROWS_AS(is_closed(H, HermiteMatrix::identity(3), ClosureKind::order), std::invalid_argument);
}

TEST_CASE("is_closed agrees with the independent membership test") {
  const std::vector<StructureConstantAlgebra> rings_ = {rings::heisenberg(), rings::quadratic_order(-1),
                                                        rings::quadratic_order(5), upper_triangular_matrices(),
                                                        direct_product(rings::heisenberg(), rings::abelian(1))};
  for (const auto& L : rings_) {
    std::vector<ClosureKind> kinds = {ClosureKind::subring, ClosureKind::left_ideal, ClosureKind::right_ideal,
                                      ClosureKind::two_sided_ideal};
    if (L.kind() == AlgebraKind::unital) kinds.push_back(ClosureKind::order);
    for (std::int64_t n = 1; n <= (L.rank() == 4 ? 8 : 16); ++n)
      for (const auto& M : enumerate_hnf(L.rank(), n)) {
        oracle::Matrix m(L.rank(), std::vector<std::int64_t>(L.rank()));
        for (std::size_t i = 0; i < L.rank(); ++i)
          for (std::size_t j = 0; j < L.rank(); ++j) m[i][j] = M(i, j);
        for (auto k : kinds) CHECK(is_closed(L, M, k) == oracle::closed(L, m, to_oracle(k)));
      }
  }
}

TEST_CASE("count examples") {
  const auto Z2 = rings::abelian(2);
  CHECK(count(Z2, 4, ClosureKind::subring) == 7);
  const auto Gi = rings::quadratic_order(-1);
  CHECK(count(Gi, 5, ClosureKind::two_sided_ideal) == 2);
  CHECK(count(Gi, 3, ClosureKind::two_sided_ideal) == 0);
  for (std::int64_t k : {-1, 5, -3, 2})
    for (std::int64_t f = 1; f <= 12; ++f) CHECK(count(rings::quadratic_order(k), f, ClosureKind::order) == 1);
  CHECK_THROWS_AS(count(rings::heisenberg(), 4, ClosureKind::order), std::invalid_argument);
}

TEST_CASE("Heisenberg counts are frozen against the independent oracle") {
  const auto H = rings::heisenberg();
  const std::vector<std::int64_t> subring = {1, 3, 4, 19, 6, 12, 8, 43, 49, 18, 12, 76, 14, 24, 24, 203};
  const std::vector<std::int64_t> ideal = {1, 3, 4, 7, 6, 12, 8, 19, 13, 18, 12, 28, 14, 24, 24, 43};
  for (std::int64_t n = 1; n <= 16; ++n) {
    CHECK(oracle::count(H, n, oracle::Kind::subring) == subring[static_cast<std::size_t>(n - 1)]);
    CHECK(oracle::count(H, n, oracle::Kind::two_sided) == ideal[static_cast<std::size_t>(n - 1)]);
  }
  for (auto strategy : {CountStrategy::reference, CountStrategy::pruned, CountStrategy::central, CountStrategy::automatic}) {
    CAPTURE(to_string(strategy));
    const auto s = count_range(H, 16, ClosureKind::subring, strategy);
    const auto i = count_range(H, 16, ClosureKind::two_sided_ideal, strategy);
    for (std::size_t n = 0; n < 16; ++n) {
      CHECK(s[n] == subring[n]);
      CHECK(i[n] == ideal[n]);
    }
  }
}

TEST_CASE("all counting strategies agree") {
  const std::vector<StructureConstantAlgebra> lie = {rings::heisenberg(2), direct_product(rings::heisenberg(), rings::abelian(1)),
                                                     rings::central_product(2, 0)};
  for (const auto& L : lie)
    for (auto kind : {ClosureKind::subring, ClosureKind::two_sided_ideal, ClosureKind::left_ideal}) {
      const std::int64_t nmax = L.rank() == 5 ? 8 : 12;
      const auto ref = count_range(L, nmax, kind, CountStrategy::reference);
      CHECK(count_range(L, nmax, kind, CountStrategy::pruned) == ref);
      CHECK(count_range(L, nmax, kind, CountStrategy::central) == ref);
    }
  const auto T = upper_triangular_matrices();
  for (auto kind : {ClosureKind::subring, ClosureKind::left_ideal, ClosureKind::right_ideal, ClosureKind::two_sided_ideal,
                    ClosureKind::order}) {
    const auto ref = count_range(T, 16, kind, CountStrategy::reference);
    CHECK(count_range(T, 16, kind, CountStrategy::pruned) == ref);
    for (std::int64_t n = 1; n <= 16; ++n)
      CHECK(ref[static_cast<std::size_t>(n - 1)] == oracle::count(T, n, to_oracle(kind)));
  }
}

TEST_CASE("one-sided ideals differ for a non-commutative ring") {
  // T2 is anti-isomorphic to itself, so the counts agree while the sets differ
  const auto T = upper_triangular_matrices();
  std::size_t left_only = 0, right_only = 0;
  for (std::int64_t n = 1; n <= 8; ++n) {
    for (const auto& M : enumerate_hnf(3, n)) {
      const bool l = is_closed(T, M, ClosureKind::left_ideal), r = is_closed(T, M, ClosureKind::right_ideal);
      left_only += l && !r;
      right_only += r && !l;
    }
    CHECK(count(T, n, ClosureKind::left_ideal) == count(T, n, ClosureKind::right_ideal));
  }
  CHECK(left_only > 0);
  CHECK(left_only == right_only);
}

TEST_CASE("multiplicativity on coprime indices") {
  std::mt19937_64 rng(20240611);
  const std::vector<StructureConstantAlgebra> rings_ = {rings::heisenberg(), rings::quadratic_order(-1), upper_triangular_matrices()};
  for (const auto& L : rings_)
    for (int trial = 0; trial < 10; ++trial) {
      std::int64_t m, n;
      do {
        m = 1 + static_cast<std::int64_t>(rng() % 20);
        n = 1 + static_cast<std::int64_t>(rng() % 20);
      } while (gcd64(m, n) != 1 || m * n > 120);
      const auto kind = L.kind() == AlgebraKind::unital ? ClosureKind::two_sided_ideal : ClosureKind::subring;
      CHECK(count(L, m * n, kind) == count(L, m, kind) * count(L, n, kind));
    }
}

TEST_CASE("closure kinds are nested") {
  for (const auto& L : {rings::heisenberg(), upper_triangular_matrices(), direct_product(rings::heisenberg(), rings::abelian(1))})
    for (std::int64_t n = 1; n <= 12; ++n) {
      const auto two = count(L, n, ClosureKind::two_sided_ideal);
      const auto left = count(L, n, ClosureKind::left_ideal);
      const auto right = count(L, n, ClosureKind::right_ideal);
      const auto sub = count(L, n, ClosureKind::subring);
      const auto grp = count(L, n, ClosureKind::subgroup);
      CHECK(two <= left);
      CHECK(two <= right);
      if (L.kind() != AlgebraKind::unital) {
        CHECK(left <= sub);
        CHECK(right <= sub);
      }
      CHECK(sub <= grp);
    }
}

TEST_CASE("local coefficients") {
  for (std::int64_t p : {2, 3, 5}) {
    const auto a = local_coefficients(rings::abelian(2), p, 4, ClosureKind::subring);
    std::int64_t s = 0, q = 1;
    for (int k = 0; k <= 4; ++k) {
      s += q;
      q *= p;
      CHECK(a[static_cast<std::size_t>(k)] == s);
    }
  }
  CHECK(local_coefficients(rings::heisenberg(), 7, 0, ClosureKind::subring) == std::vector<Integer>{1});
  const auto h2 = local_coefficients(rings::heisenberg(), 2, 4, ClosureKind::subring);
  CHECK(h2 == std::vector<Integer>{1, 3, 19, 43, 203});
}

TEST_CASE("free abelian counts equal the convolution formula") {
  for (std::size_t h = 1; h <= 4; ++h) {
    const std::int64_t nmax = h == 4 ? 40 : 60;
    const auto expected = oracle::free_abelian_coefficients(h, nmax);
    const auto got = count_range(rings::abelian(h), nmax, ClosureKind::subring, CountStrategy::pruned);
    for (std::int64_t n = 1; n <= nmax; ++n) CHECK(got[static_cast<std::size_t>(n - 1)] == expected[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("for_each_closed visits exactly the closed lattices in order") {
  const auto H = rings::heisenberg();
  std::vector<HermiteMatrix> visited;
  for_each_closed(H, 8, ClosureKind::subring, [&](const HermiteMatrix& M) { visited.push_back(M); });
  std::vector<HermiteMatrix> expected;
  for (const auto& M : enumerate_hnf(3, 8))
    if (is_closed(H, M, ClosureKind::subring)) expected.push_back(M);
  CHECK(visited == expected);
}
