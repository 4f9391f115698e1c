#include "zg/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace zg {

Polynomial Polynomial::constant(std::size_t variables, std::int64_t c) {
  Polynomial p(variables);
  p.add_term(Exponents(variables, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t variables, std::size_t i) {
  Polynomial p(variables);
  Exponents e(variables, 0);
  e.at(i) = 1;
  p.add_term(e, 1);
  return p;
}

std::vector<std::size_t> Polynomial::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < vars_; ++i)
    for (const auto& [e, c] : terms_)
      if (e[i] > 0) {
        out.push_back(i);
        break;
      }
  return out;
}

void Polynomial::add_term(const Exponents& e, std::int64_t c) {
  if (e.size() != vars_) throw std::invalid_argument("polynomial term has wrong number of exponents");
  for (auto x : e)
    if (x < 0) throw std::invalid_argument("polynomial exponents must be non-negative");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    if (__builtin_add_overflow(it->second, c, &it->second)) throw std::overflow_error("polynomial coefficient overflow");
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial neg(o.vars_);
  for (const auto& [e, c] : o.terms_) neg.add_term(e, -c);
  return *this + neg;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (o.vars_ != vars_) throw std::invalid_argument("polynomial variable count mismatch");
  Polynomial out(vars_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponents e(vars_);
      for (std::size_t i = 0; i < vars_; ++i) e[i] = e1[i] + e2[i];
      std::int64_t c;
      if (__builtin_mul_overflow(c1, c2, &c)) throw std::overflow_error("polynomial coefficient overflow");
      out.add_term(e, c);
    }
  return out;
}

namespace {
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}
}  // namespace

std::int64_t Polynomial::evaluate_mod(const std::vector<std::int64_t>& x, std::int64_t m) const {
  std::int64_t total = 0;
  for (const auto& [e, c] : terms_) {
    std::int64_t t = ((c % m) + m) % m;
    for (std::size_t i = 0; i < vars_ && t != 0; ++i)
      for (int k = 0; k < e[i]; ++k) t = mulmod(t, x[i], m);
    total = (total + t) % m;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << "; ";
    first = false;
    os << c << ":";
    for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  }
  return os.str();
}

Polynomial Polynomial::parse(const std::string& text, std::size_t variables) {
  Polynomial p(variables);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("polynomial term '" + item + "' lacks ':'");
    std::int64_t c;
    try {
      std::size_t used = 0;
      c = std::stoll(item.substr(0, colon), &used);
      if (item.substr(0, colon).find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient in polynomial term '" + item + "'");
    }
    Exponents e;
    std::stringstream es(item.substr(colon + 1));
    std::string tok;
    while (std::getline(es, tok, ',')) {
      try {
        std::size_t used = 0;
        e.push_back(std::stoi(tok, &used));
        if (tok.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("bad exponent in polynomial term '" + item + "'");
      }
    }
    if (e.size() != variables)
      throw std::invalid_argument("polynomial term '" + item + "' has " + std::to_string(e.size()) + " exponents, expected " +
                                  std::to_string(variables));
    p.add_term(e, c);
  }
  return p;
}

}  // namespace zg
