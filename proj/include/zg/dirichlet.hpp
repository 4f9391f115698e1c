#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zg/algebra.hpp"
#include "zg/integer.hpp"
#include "zg/rational_function.hpp"
#include "zg/sublattice_enum.hpp"

namespace zg {

enum class FactorType { riemann, dedekind, chi4 };

/// F(a s - b)^exponent, F one of zeta, zeta_{Q(sqrt field)}, L(chi_4, .).
struct ZetaFactor {
  FactorType type = FactorType::riemann;
  std::int64_t a = 1;
  std::int64_t b = 0;
  int exponent = 1;
  std::int64_t field = 0;
};

/// coefficient * scale^{-s} * prod factors
struct ZetaTerm {
  Rational coefficient = 1;
  std::int64_t scale = 1;
  std::vector<ZetaFactor> factors;
};

struct ZetaClosedForm {
  std::string name;
  std::vector<ZetaTerm> terms;

  bool is_product() const { return terms.size() == 1 && terms[0].coefficient == 1 && terms[0].scale == 1; }
  std::string to_string() const;
};

namespace closed_forms {
ZetaFactor zeta(std::int64_t a, std::int64_t b, int exponent = 1);
ZetaFactor dedekind(std::int64_t k, std::int64_t a = 1, std::int64_t b = 0, int exponent = 1);
ZetaFactor chi4(std::int64_t a, std::int64_t b, int exponent = 1);
ZetaClosedForm product(std::string name, std::vector<ZetaFactor> factors);
/// zeta(s) zeta(s-1) ... zeta(s-h+1)
ZetaClosedForm free_abelian(std::size_t h);
}  // namespace closed_forms

/// a_1..a_nmax (index 0 holds a_1).
std::vector<Rational> closed_form_coefficients(const ZetaClosedForm& F, std::int64_t nmax);
PadicRationalFunction closed_form_local(const ZetaClosedForm& F, std::int64_t p);

enum class SplittingType { split, inert, ramified };
std::string to_string(SplittingType s);
SplittingType splitting_type(std::int64_t k, std::int64_t p);

/// Split primes of Q(sqrt k) in increasing order.
std::vector<std::int64_t> smallest_split_primes(std::int64_t k, std::size_t count);

struct LocalSeries {
  Integer p;
  std::vector<Rational> coefficients;
};

LocalSeries oracle_local_series(const StructureConstantAlgebra& L, std::int64_t p, int kmax, ClosureKind kind);

enum class FitStatus { certified, no_fit, underdetermined };
std::string to_string(FitStatus s);

struct MarginCheck {
  int k;
  Rational predicted;
  Rational actual;
};

struct FitResult {
  FitStatus status = FitStatus::no_fit;
  std::optional<PadicRationalFunction> function;
  std::vector<DenominatorFactor> shape;
  int numerator_degree_cap = 0;
  int margin = 4;
  Integer p;
  std::vector<MarginCheck> margin_checks;
  std::string message;

  std::string certificate() const;
};

/// Fits N(t)/prod(1 - p^b t^a) with deg N <= cap using the coefficients up to
/// kmax - margin, then predicts the last `margin` coefficients.
FitResult fit_rational_local(const LocalSeries& S, const std::vector<DenominatorFactor>& shape, int num_degree_cap,
                             int margin = 4);

bool compare_locals(const StructureConstantAlgebra& L1, const StructureConstantAlgebra& L2, std::int64_t p, int kmax,
                    ClosureKind kind);

/// max over factors with positive exponent of (b+1)/a; sums take the max over terms.
Rational abscissa_of_closed_form(const ZetaClosedForm& F);

struct BoundReport {
  std::size_t h = 0;
  int c = 0;
  Rational subring_bound, ideal_bound;
  Rational alpha_subring, alpha_ideal;
  bool subring_ok = false, ideal_ok = false;
  bool ok() const { return subring_ok && ideal_ok; }
  std::string to_string() const;
};

BoundReport abscissa_bound_check(std::size_t h, int c, const Rational& alpha_le, const Rational& alpha_ideal);

struct PartialSumReport {
  int e = 0;
  double delta = 0;
  std::int64_t nmax = 0;
  double witness = 0;          // max over N <= nmax of the ratio
  double first_half_max = 0;   // max over N <= nmax/2
  double final_ratio = 0;
  bool bounded = false;
  std::string to_string() const;
};

/// Ratio (sum_{n<=N} a_n(Z^e) / n^{e-delta}) / N^delta; bounded when its running
/// maximum grows by less than 1% over the last doubling of the range.
PartialSumReport partial_sum_bound_check(int e, double delta, std::int64_t nmax);

struct OrderCensus {
  std::int64_t k = 0;
  std::int64_t discriminant = 0;
  std::int64_t bound = 0;
  Integer order_count;
  std::map<std::int64_t, Integer> eta;  // |disc| -> number of orders
  std::map<std::int64_t, Integer> order_counts;  // f -> a_f
  bool identity_holds = false;
  std::vector<std::string> mismatches;
};

OrderCensus order_discriminant_census(std::int64_t k, std::int64_t X);

/// Discriminant of the trace form on the rows of M inside a unital ring.
Integer trace_discriminant(const StructureConstantAlgebra& O, const HermiteMatrix& M);

}  // namespace zg
