#include "zg/rational_function.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace zg {

TPPolynomial::TPPolynomial(const Rational& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

TPPolynomial TPPolynomial::monomial(int a, int b, const Rational& c) {
  if (a < 0) throw std::invalid_argument("TPPolynomial: negative power of t");
  TPPolynomial out;
  out.add_term(a, b, c);
  return out;
}

TPPolynomial TPPolynomial::one_minus(int a, int b) { return TPPolynomial(Rational(1)) - monomial(a, b); }

void TPPolynomial::add_term(int a, int b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TPPolynomial::t_degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first);
  return d;
}

TPPolynomial TPPolynomial::operator+(const TPPolynomial& o) const {
  TPPolynomial out = *this;
  for (const auto& [k, c] : o.terms_) out.add_term(k.first, k.second, c);
  return out;
}

TPPolynomial TPPolynomial::operator-() const {
  TPPolynomial out;
  for (const auto& [k, c] : terms_) out.terms_[k] = -c;
  return out;
}

TPPolynomial TPPolynomial::operator-(const TPPolynomial& o) const { return *this + (-o); }

TPPolynomial TPPolynomial::operator*(const TPPolynomial& o) const {
  TPPolynomial out;
  for (const auto& [k1, c1] : terms_)
    for (const auto& [k2, c2] : o.terms_) out.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return out;
}

std::vector<Rational> TPPolynomial::at_prime(const Integer& p, int kmax) const {
  std::vector<Rational> out(static_cast<std::size_t>(kmax + 1), 0);
  for (const auto& [k, c] : terms_)
    if (k.first <= kmax) out[static_cast<std::size_t>(k.first)] += c * rpow(p, k.second);
  return out;
}

std::optional<TPPolynomial> TPPolynomial::divide_one_minus(int a, int b) const {
  if (a < 0 || (a == 0 && b == 0)) throw std::invalid_argument("divide_one_minus: invalid factor");
  if (is_zero()) return TPPolynomial();
  TPPolynomial q;
  if (a > 0) {
    // Q = N + p^b t^a Q, solved degree by degree in t.
    const int deg = t_degree() - a;
    if (deg < 0) return std::nullopt;
    std::map<int, TPPolynomial> slices;
    for (const auto& [k, c] : terms_) slices[k.first].add_term(0, k.second, c);
    std::vector<TPPolynomial> qd(static_cast<std::size_t>(deg + 1));
    for (int d = 0; d <= deg; ++d) {
      TPPolynomial v = slices.count(d) ? slices[d] : TPPolynomial();
      if (d >= a) v = v + qd[static_cast<std::size_t>(d - a)] * monomial(0, b);
      qd[static_cast<std::size_t>(d)] = v;
      for (const auto& [k, c] : v.terms_) q.add_term(d, k.second, c);
    }
  } else {
    // a == 0: divide every t-slice by 1 - p^b as a Laurent polynomial in p.
    const int step = b > 0 ? b : -b;
    std::map<int, std::map<int, Rational>> slices;
    for (const auto& [k, c] : terms_) slices[k.first][k.second] = c;
    for (auto& [ta, coeffs] : slices) {
      // 1 - p^b = -p^b (1 - p^{-b}) when b < 0
      std::map<int, Rational> n = coeffs;
      if (b < 0) {
        std::map<int, Rational> shifted;
        for (auto& [e, c] : n) shifted[e - b] = -c;
        n = std::move(shifted);
      }
      // N = Q (1 - p^step): Q_e = N_e + Q_{e-step}, ascending in e.
      const int lo = n.begin()->first, hi = n.rbegin()->first;
      std::map<int, Rational> qc;
      for (int e = lo; e <= hi - step; ++e) {
        Rational v = n.count(e) ? n[e] : Rational(0);
        if (qc.count(e - step)) v += qc[e - step];
        if (v != 0) qc[e] = v;
      }
      for (auto& [e, c] : qc) q.add_term(ta, e, c);
    }
  }
  if (q * one_minus(a, b) == *this) return q;
  return std::nullopt;
}

std::string TPPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    std::string mono;
    if (k.second != 0) mono += k.second == 1 ? "p" : "p^" + std::to_string(k.second);
    if (k.first != 0) mono += (mono.empty() ? "" : "*") + (k.first == 1 ? std::string("t") : "t^" + std::to_string(k.first));
    if (mono.empty()) {
      os << zg::to_string(mag);
    } else {
      if (mag != 1) os << zg::to_string(mag) << "*";
      os << mono;
    }
  }
  return os.str();
}

PadicRationalFunction::PadicRationalFunction(TPPolynomial numerator, std::vector<DenominatorFactor> denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  for (const auto& f : den_)
    if (f.a < 0 || (f.a == 0 && f.b == 0)) throw std::invalid_argument("invalid denominator factor");
}

std::vector<Rational> series_product(const std::vector<Rational>& a, const std::vector<Rational>& b, int kmax) {
  std::vector<Rational> out(static_cast<std::size_t>(kmax + 1), 0);
  for (std::size_t i = 0; i < a.size() && static_cast<int>(i) <= kmax; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && static_cast<int>(i + j) <= kmax; ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

std::vector<Rational> PadicRationalFunction::expand(const Integer& p, int kmax) const {
  if (kmax < 0) throw std::invalid_argument("expand: kmax must be non-negative");
  std::vector<Rational> s = num_.at_prime(p, kmax);
  for (const auto& f : den_) {
    const Rational c = rpow(p, f.b);
    if (f.a == 0) {
      if (c == 1) throw std::domain_error("expand: denominator factor vanishes");
      for (auto& v : s) v /= (1 - c);
      continue;
    }
    std::vector<Rational> g(static_cast<std::size_t>(kmax + 1), 0);
    Rational cj = 1;
    for (int k = 0; k <= kmax; k += f.a, cj *= c) g[static_cast<std::size_t>(k)] = cj;
    s = series_product(s, g, kmax);
  }
  return s;
}

PadicRationalFunction PadicRationalFunction::reduced() const {
  TPPolynomial n = num_;
  std::vector<DenominatorFactor> kept;
  for (const auto& f : den_) {
    if (auto q = n.divide_one_minus(f.a, f.b)) {
      n = *q;
    } else {
      kept.push_back(f);
    }
  }
  std::sort(kept.begin(), kept.end());
  return PadicRationalFunction(n, kept);
}

namespace {
TPPolynomial product_of(const std::vector<DenominatorFactor>& fs) {
  TPPolynomial out(Rational(1));
  for (const auto& f : fs) out = out * TPPolynomial::one_minus(f.a, f.b);
  return out;
}
}  // namespace

bool PadicRationalFunction::equals(const PadicRationalFunction& o) const {
  return num_ * product_of(o.den_) == o.num_ * product_of(den_);
}

bool PadicRationalFunction::equals_at(const PadicRationalFunction& o, const Integer& p) const {
  TPPolynomial lhs = num_ * product_of(o.den_), rhs = o.num_ * product_of(den_);
  const int deg = std::max(lhs.t_degree(), rhs.t_degree());
  if (deg < 0) return true;
  return lhs.at_prime(p, deg) == rhs.at_prime(p, deg);
}

PadicRationalFunction PadicRationalFunction::operator*(const PadicRationalFunction& o) const {
  std::vector<DenominatorFactor> d = den_;
  d.insert(d.end(), o.den_.begin(), o.den_.end());
  return PadicRationalFunction(num_ * o.num_, d);
}

PadicRationalFunction PadicRationalFunction::operator+(const PadicRationalFunction& o) const {
  std::vector<DenominatorFactor> d = den_;
  d.insert(d.end(), o.den_.begin(), o.den_.end());
  return PadicRationalFunction(num_ * product_of(o.den_) + o.num_ * product_of(den_), d).reduced();
}

PadicRationalFunction PadicRationalFunction::scaled(const TPPolynomial& c) const {
  return PadicRationalFunction(num_ * c, den_);
}

std::string PadicRationalFunction::to_string() const {
  std::string out = "(" + num_.to_string() + ")";
  if (den_.empty()) return out;
  out += " / (";
  for (std::size_t i = 0; i < den_.size(); ++i) {
    if (i) out += "*";
    out += "(" + TPPolynomial::one_minus(den_[i].a, den_[i].b).to_string() + ")";
  }
  return out + ")";
}

}  // namespace zg
