#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace zg {

/// Sparse polynomial with 64-bit integer coefficients in a fixed number of variables.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : vars_(variables) {}
  static Polynomial constant(std::size_t variables, std::int64_t c);
  static Polynomial variable(std::size_t variables, std::size_t i);

  std::size_t variables() const { return vars_; }
  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Indices of variables that occur with positive exponent.
  std::vector<std::size_t> support() const;

  void add_term(const Exponents& e, std::int64_t c);
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  /// Value at x modulo m (x entries already reduced, m < 2^62).
  std::int64_t evaluate_mod(const std::vector<std::int64_t>& x, std::int64_t m) const;

  /// "coef:e1,e2,...; coef:..." with terms in increasing exponent order.
  std::string to_string() const;
  static Polynomial parse(const std::string& text, std::size_t variables);

 private:
  std::size_t vars_ = 0;
  std::map<Exponents, std::int64_t> terms_;
};

}  // namespace zg
