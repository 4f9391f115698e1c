#include "zg/dirichlet.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zg/number_theory.hpp"

namespace zg {

namespace closed_forms {

ZetaFactor zeta(std::int64_t a, std::int64_t b, int exponent) { return {FactorType::riemann, a, b, exponent, 0}; }
ZetaFactor dedekind(std::int64_t k, std::int64_t a, std::int64_t b, int exponent) {
  quadratic_discriminant(k);
  return {FactorType::dedekind, a, b, exponent, k};
}
ZetaFactor chi4(std::int64_t a, std::int64_t b, int exponent) { return {FactorType::chi4, a, b, exponent, 0}; }

ZetaClosedForm product(std::string name, std::vector<ZetaFactor> factors) {
  for (const auto& f : factors)
    if (f.a <= 0) throw std::invalid_argument("closed form factor needs a > 0");
  return {std::move(name), {ZetaTerm{1, 1, std::move(factors)}}};
}

ZetaClosedForm free_abelian(std::size_t h) {
  std::vector<ZetaFactor> fs;
  for (std::size_t i = 0; i < h; ++i) fs.push_back(zeta(1, static_cast<std::int64_t>(i)));
  return product("zeta(s)...zeta(s-" + std::to_string(h - 1) + ")", fs);
}

}  // namespace closed_forms

namespace {

std::string shifted(std::int64_t a, std::int64_t b) {
  std::string s = a == 1 ? "s" : std::to_string(a) + "s";
  if (b > 0) s += "-" + std::to_string(b);
  if (b < 0) s += "+" + std::to_string(-b);
  return s;
}

int chi4_value(std::int64_t m) {
  if (m % 2 == 0) return 0;
  return m % 4 == 1 ? 1 : -1;
}

std::vector<Rational> factor_series(const ZetaFactor& f, std::int64_t nmax) {
  std::vector<Rational> s(static_cast<std::size_t>(nmax + 1), 0);
  std::int64_t disc = f.type == FactorType::dedekind ? quadratic_discriminant(f.field) : 0;
  for (std::int64_t m = 1;; ++m) {
    Integer ma = ipow(Integer(m), static_cast<unsigned>(f.a));
    if (ma > nmax) break;
    Rational weight;
    switch (f.type) {
      case FactorType::riemann: weight = 1; break;
      case FactorType::chi4: weight = chi4_value(m); break;
      case FactorType::dedekind: {
        std::int64_t r = 0;
        for (auto d : divisors(m)) r += kronecker(disc, d);
        weight = r;
        break;
      }
    }
    s[static_cast<std::size_t>(ma)] = weight * rpow(Integer(m), static_cast<long>(f.b));
  }
  return s;
}

std::vector<Rational> convolve(const std::vector<Rational>& f, const std::vector<Rational>& g) {
  const std::size_t n = f.size() - 1;
  std::vector<Rational> out(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    if (f[i] == 0) continue;
    for (std::size_t j = 1; i * j <= n; ++j)
      if (g[j] != 0) out[i * j] += f[i] * g[j];
  }
  return out;
}

std::vector<Rational> dirichlet_inverse(const std::vector<Rational>& f) {
  const std::size_t n = f.size() - 1;
  std::vector<Rational> g(n + 1, 0);
  if (f[1] == 0) throw std::domain_error("Dirichlet inverse of a series with a_1 = 0");
  g[1] = 1 / f[1];
  for (std::size_t m = 2; m <= n; ++m) {
    Rational s = 0;
    for (auto d : divisors(static_cast<std::int64_t>(m)))
      if (static_cast<std::size_t>(d) < m) s += f[m / static_cast<std::size_t>(d)] * g[static_cast<std::size_t>(d)];
    g[m] = -s / f[1];
  }
  return g;
}

}  // namespace

std::string ZetaClosedForm::to_string() const {
  std::ostringstream os;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const auto& term = terms[t];
    if (t) os << " + ";
    if (term.coefficient != 1) os << zg::to_string(term.coefficient) << "*";
    if (term.scale != 1) os << term.scale << "^(-s)*";
    if (term.factors.empty()) os << "1";
    for (std::size_t i = 0; i < term.factors.size(); ++i) {
      const auto& f = term.factors[i];
      if (i) os << "*";
      switch (f.type) {
        case FactorType::riemann: os << "zeta(" << shifted(f.a, f.b) << ")"; break;
        case FactorType::dedekind: os << "zetaK[" << f.field << "](" << shifted(f.a, f.b) << ")"; break;
        case FactorType::chi4: os << "L4(" << shifted(f.a, f.b) << ")"; break;
      }
      if (f.exponent != 1) os << "^" << f.exponent;
    }
  }
  return os.str();
}

std::vector<Rational> closed_form_coefficients(const ZetaClosedForm& F, std::int64_t nmax) {
  if (nmax < 1) throw std::invalid_argument("closed_form_coefficients: nmax must be positive");
  std::vector<Rational> total(static_cast<std::size_t>(nmax + 1), 0);
  for (const auto& term : F.terms) {
    std::vector<Rational> acc(static_cast<std::size_t>(nmax + 1), 0);
    acc[1] = 1;
    for (const auto& f : term.factors) {
      auto s = factor_series(f, nmax);
      if (f.exponent < 0) s = dirichlet_inverse(s);
      for (int i = 0; i < std::abs(f.exponent); ++i) acc = convolve(acc, s);
    }
    for (std::int64_t n = 1; n * term.scale <= nmax; ++n)
      total[static_cast<std::size_t>(n * term.scale)] += term.coefficient * acc[static_cast<std::size_t>(n)];
  }
  return {total.begin() + 1, total.end()};
}

std::string to_string(SplittingType s) {
  switch (s) {
    case SplittingType::split: return "split";
    case SplittingType::inert: return "inert";
    case SplittingType::ramified: return "ramified";
  }
  return "?";
}

SplittingType splitting_type(std::int64_t k, std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("splitting_type: p must be prime");
  const int kr = kronecker(quadratic_discriminant(k), p);
  return kr == 1 ? SplittingType::split : kr == -1 ? SplittingType::inert : SplittingType::ramified;
}

std::vector<std::int64_t> smallest_split_primes(std::int64_t k, std::size_t count) {
  std::vector<std::int64_t> out;
  for (std::int64_t p = 2; out.size() < count; ++p)
    if (is_prime(p) && splitting_type(k, p) == SplittingType::split) out.push_back(p);
  return out;
}

PadicRationalFunction closed_form_local(const ZetaClosedForm& F, std::int64_t p) {
  if (!F.is_product()) throw std::invalid_argument("closed_form_local: '" + F.name + "' is not a pure Euler product");
  if (!is_prime(p)) throw std::invalid_argument("closed_form_local: p must be prime");
  TPPolynomial num(Rational(1));
  std::vector<DenominatorFactor> den;
  for (const auto& f : F.terms[0].factors) {
    const int a = static_cast<int>(f.a), b = static_cast<int>(f.b);
    TPPolynomial n(Rational(1));
    std::vector<DenominatorFactor> d;
    switch (f.type) {
      case FactorType::riemann: d = {{a, b}}; break;
      case FactorType::dedekind:
        switch (splitting_type(f.field, p)) {
          case SplittingType::split: d = {{a, b}, {a, b}}; break;
          case SplittingType::inert: d = {{2 * a, 2 * b}}; break;
          case SplittingType::ramified: d = {{a, b}}; break;
        }
        break;
      case FactorType::chi4:
        if (p == 2) break;
        if (p % 4 == 1) {
          d = {{a, b}};
        } else {
          n = TPPolynomial::one_minus(a, b);
          d = {{2 * a, 2 * b}};
        }
        break;
    }
    for (int i = 0; i < std::abs(f.exponent); ++i) {
      if (f.exponent > 0) {
        num = num * n;
        den.insert(den.end(), d.begin(), d.end());
      } else {
        // invert n / prod(d): multiply the numerator by prod(d), divide by n
        for (const auto& x : d) num = num * TPPolynomial::one_minus(x.a, x.b);
        if (!(n == TPPolynomial(Rational(1)))) {
          // n = 1 - X with denominator 1 - X^2 only occurs for chi4; its inverse is 1 + X
          num = num * (TPPolynomial(Rational(1)) + TPPolynomial::monomial(a, b));
          num = *num.divide_one_minus(2 * a, 2 * b);
        }
      }
    }
  }
  return PadicRationalFunction(num, den).reduced();
}

LocalSeries oracle_local_series(const StructureConstantAlgebra& L, std::int64_t p, int kmax, ClosureKind kind) {
  LocalSeries s{p, {}};
  for (const auto& c : local_coefficients(L, p, kmax, kind)) s.coefficients.emplace_back(c);
  return s;
}

std::string to_string(FitStatus s) {
  switch (s) {
    case FitStatus::certified: return "certified";
    case FitStatus::no_fit: return "no-fit";
    case FitStatus::underdetermined: return "underdetermined";
  }
  return "?";
}

FitResult fit_rational_local(const LocalSeries& S, const std::vector<DenominatorFactor>& shape, int num_degree_cap,
                             int margin) {
  FitResult r;
  r.shape = shape;
  r.numerator_degree_cap = num_degree_cap;
  r.margin = margin;
  r.p = S.p;
  if (num_degree_cap < 0 || margin < 0) throw std::invalid_argument("fit_rational_local: negative cap or margin");
  const int kmax = static_cast<int>(S.coefficients.size()) - 1;
  int shape_degree = 0;
  for (const auto& f : shape) shape_degree += f.a;
  const int needed = num_degree_cap + shape_degree + margin;
  if (kmax < needed) {
    r.status = FitStatus::underdetermined;
    r.message = "need coefficients up to k=" + std::to_string(needed) + ", have k=" + std::to_string(kmax);
    return r;
  }
  const int k0 = kmax - margin;
  std::vector<Rational> den(static_cast<std::size_t>(k0 + 1), 0);
  den[0] = 1;
  for (const auto& f : shape) {
    std::vector<Rational> fac = TPPolynomial::one_minus(f.a, f.b).at_prime(S.p, k0);
    den = series_product(den, fac, k0);
  }
  std::vector<Rational> head(S.coefficients.begin(), S.coefficients.begin() + k0 + 1);
  auto prod = series_product(head, den, k0);
  for (int k = num_degree_cap + 1; k <= k0; ++k)
    if (prod[static_cast<std::size_t>(k)] != 0) {
      r.status = FitStatus::no_fit;
      r.message = "series times denominator has a nonzero coefficient at t^" + std::to_string(k);
      return r;
    }
  TPPolynomial num;
  for (int k = 0; k <= num_degree_cap; ++k) num = num + TPPolynomial::monomial(k, 0, prod[static_cast<std::size_t>(k)]);
  PadicRationalFunction fn(num, shape);
  const auto predicted = fn.expand(S.p, kmax);
  bool all_ok = true;
  for (int k = k0 + 1; k <= kmax; ++k) {
    r.margin_checks.push_back({k, predicted[static_cast<std::size_t>(k)], S.coefficients[static_cast<std::size_t>(k)]});
    all_ok = all_ok && predicted[static_cast<std::size_t>(k)] == S.coefficients[static_cast<std::size_t>(k)];
  }
  r.function = fn;
  r.status = all_ok ? FitStatus::certified : FitStatus::no_fit;
  if (!all_ok) r.message = "held-out coefficients not reproduced";
  return r;
}

std::string FitResult::certificate() const {
  std::ostringstream os;
  os << "fit certificate\n";
  os << "prime: " << p << "\n";
  os << "denominator shape:";
  for (const auto& f : shape) os << " (" << f.a << "," << f.b << ")";
  os << "\n";
  os << "numerator degree cap: " << numerator_degree_cap << "\n";
  if (function) {
    os << "numerator: " << function->numerator().to_string() << "\n";
    os << "function: " << function->to_string() << "\n";
  }
  os << "margin: " << margin << "\n";
  for (const auto& m : margin_checks)
    os << "  k=" << m.k << " predicted=" << zg::to_string(m.predicted) << " actual=" << zg::to_string(m.actual)
       << (m.predicted == m.actual ? " ok" : " MISMATCH") << "\n";
  os << "status: " << zg::to_string(status) << "\n";
  if (!message.empty()) os << "note: " << message << "\n";
  return os.str();
}

bool compare_locals(const StructureConstantAlgebra& L1, const StructureConstantAlgebra& L2, std::int64_t p, int kmax,
                    ClosureKind kind) {
  if (L1.rank() != L2.rank()) throw std::invalid_argument("compare_locals: ranks differ");
  return local_coefficients(L1, p, kmax, kind) == local_coefficients(L2, p, kmax, kind);
}

Rational abscissa_of_closed_form(const ZetaClosedForm& F) {
  std::optional<Rational> best;
  for (const auto& term : F.terms)
    for (const auto& f : term.factors) {
      if (f.exponent <= 0) continue;
      Rational a(f.b + 1, f.a);
      if (!best || a > *best) best = a;
    }
  if (!best) throw std::invalid_argument("abscissa_of_closed_form: no zeta-type factor");
  return *best;
}

BoundReport abscissa_bound_check(std::size_t h, int c, const Rational& alpha_le, const Rational& alpha_ideal) {
  if (c < 2) throw std::invalid_argument("abscissa_bound_check: nilpotency class must be at least 2");
  BoundReport r;
  r.h = h, r.c = c, r.alpha_subring = alpha_le, r.alpha_ideal = alpha_ideal;
  const Rational hh(static_cast<long>(h));
  r.subring_bound = c == 2 ? hh - Rational(1, 2) : hh - Rational(1, c - 1);
  r.ideal_bound = hh - 1;
  r.subring_ok = alpha_le <= r.subring_bound;
  r.ideal_ok = alpha_ideal <= r.ideal_bound;
  return r;
}

std::string BoundReport::to_string() const {
  std::ostringstream os;
  os << "h=" << h << " c=" << c << "\n";
  os << "subring abscissa " << zg::to_string(alpha_subring) << " <= " << zg::to_string(subring_bound) << ": "
     << (subring_ok ? "pass" : "FAIL") << "\n";
  os << "ideal abscissa " << zg::to_string(alpha_ideal) << " <= " << zg::to_string(ideal_bound) << ": "
     << (ideal_ok ? "pass" : "FAIL") << "\n";
  return os.str();
}

PartialSumReport partial_sum_bound_check(int e, double delta, std::int64_t nmax) {
  if (e < 1 || !(delta > 0) || !(delta < e)) throw std::invalid_argument("partial_sum_bound_check: need 0 < delta < e");
  if (nmax < 2) throw std::invalid_argument("partial_sum_bound_check: nmax must be at least 2");
  PartialSumReport r;
  r.e = e, r.delta = delta, r.nmax = nmax;
  const auto a = closed_form_coefficients(closed_forms::free_abelian(static_cast<std::size_t>(e)), nmax);
  long double sum = 0;
  for (std::int64_t n = 1; n <= nmax; ++n) {
    sum += a[static_cast<std::size_t>(n - 1)].convert_to<long double>() / std::pow(static_cast<long double>(n), e - delta);
    const double ratio = static_cast<double>(sum / std::pow(static_cast<long double>(n), delta));
    r.witness = std::max(r.witness, ratio);
    if (n <= nmax / 2) r.first_half_max = r.witness;
    r.final_ratio = ratio;
  }
  r.bounded = r.witness <= 1.01 * r.first_half_max;
  return r;
}

std::string PartialSumReport::to_string() const {
  std::ostringstream os;
  os << "e=" << e << " delta=" << delta << " N<=" << nmax << " witness k=" << witness
     << " (max up to N/2: " << first_half_max << ", final ratio " << final_ratio << "): "
     << (bounded ? "bounded" : "NOT bounded");
  return os.str();
}

Integer trace_discriminant(const StructureConstantAlgebra& O, const HermiteMatrix& M) {
  const std::size_t h = O.rank();
  IntVector tau(h, 0);
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) tau[i] += O.constant(i, j, j);
  const auto rows = M.rows();
  std::vector<std::vector<Integer>> gram(h, std::vector<Integer>(h, 0));
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j) {
      const auto x = O.multiply(rows[i], rows[j]);
      for (std::size_t c = 0; c < h; ++c) gram[i][j] += x[c] * tau[c];
    }
  return determinant(gram);
}

OrderCensus order_discriminant_census(std::int64_t k, std::int64_t X) {
  OrderCensus r;
  r.k = k, r.bound = X;
  r.discriminant = quadratic_discriminant(k);
  const std::int64_t D = r.discriminant < 0 ? -r.discriminant : r.discriminant;
  const auto O = rings::quadratic_order(k);
  for (std::int64_t f = 1; D * f * f <= X; ++f) {
    for_each_closed(O, f, ClosureKind::order, [&](const HermiteMatrix& M) {
      const Integer disc = trace_discriminant(O, M);
      if (disc != Integer(r.discriminant) * f * f)
        r.mismatches.push_back("order " + M.to_string() + " has discriminant " + disc.str());
      r.eta[to_int64(abs(disc))] += 1;
    });
    r.order_counts[f] = count(O, f, ClosureKind::order);
  }
  r.order_count = 0;
  for (const auto& [n, c] : r.eta) r.order_count += c;
  for (const auto& [n, c] : r.eta) {
    const bool form = n % D == 0 && [&] {
      const std::int64_t m = n / D;
      const auto f = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
      return f * f == m && r.order_counts.count(f) && r.order_counts[f] == c;
    }();
    if (!form) r.mismatches.push_back("eta coefficient at " + std::to_string(n) + " is " + c.str());
  }
  for (const auto& [f, a] : r.order_counts) {
    const std::int64_t n = D * f * f;
    const Integer have = r.eta.count(n) ? r.eta[n] : Integer(0);
    if (have != a) r.mismatches.push_back("eta at " + std::to_string(n) + " is " + have.str() + ", expected " + a.str());
  }
  r.identity_holds = r.mismatches.empty();
  return r;
}

}  // namespace zg
