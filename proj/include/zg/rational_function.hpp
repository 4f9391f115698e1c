#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zg/integer.hpp"

namespace zg {

/// Finite sum of c * t^a * p^b with a >= 0, b any integer and rational c.
class TPPolynomial {
 public:
  using Key = std::pair<int, int>;  // (a, b)

  TPPolynomial() = default;
  TPPolynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  static TPPolynomial monomial(int a, int b, const Rational& c = 1);
  /// 1 - p^b t^a
  static TPPolynomial one_minus(int a, int b);

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int t_degree() const;  // -1 for zero

  TPPolynomial operator+(const TPPolynomial& o) const;
  TPPolynomial operator-(const TPPolynomial& o) const;
  TPPolynomial operator*(const TPPolynomial& o) const;
  TPPolynomial operator-() const;
  bool operator==(const TPPolynomial& o) const { return terms_ == o.terms_; }

  /// Coefficients of t^0..t^kmax after substituting the prime p.
  std::vector<Rational> at_prime(const Integer& p, int kmax) const;
  /// Exact quotient by 1 - p^b t^a if it divides.
  std::optional<TPPolynomial> divide_one_minus(int a, int b) const;

  std::string to_string() const;

 private:
  void add_term(int a, int b, const Rational& c);
  std::map<Key, Rational> terms_;
};

/// 1 - p^b t^a; a = 0 is allowed when b != 0.
struct DenominatorFactor {
  int a = 1;
  int b = 0;
  auto operator<=>(const DenominatorFactor&) const = default;
};

/// N(t, p) / prod (1 - p^b t^a) with t = p^{-s}.
class PadicRationalFunction {
 public:
  PadicRationalFunction() : num_(Rational(1)) {}
  explicit PadicRationalFunction(TPPolynomial numerator, std::vector<DenominatorFactor> denominator = {});

  const TPPolynomial& numerator() const { return num_; }
  const std::vector<DenominatorFactor>& denominator() const { return den_; }

  std::vector<Rational> expand(const Integer& p, int kmax) const;
  /// Cancels denominator factors dividing the numerator; factors are sorted.
  PadicRationalFunction reduced() const;
  bool equals(const PadicRationalFunction& o) const;
  /// Equality after substituting the prime p.
  bool equals_at(const PadicRationalFunction& o, const Integer& p) const;

  PadicRationalFunction operator*(const PadicRationalFunction& o) const;
  PadicRationalFunction operator+(const PadicRationalFunction& o) const;
  PadicRationalFunction scaled(const TPPolynomial& c) const;

  std::string to_string() const;

 private:
  TPPolynomial num_;
  std::vector<DenominatorFactor> den_;
};

/// Product of two truncated power series in t.
std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b, int kmax);

}  // namespace zg
