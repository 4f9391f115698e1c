#include "zg/padic.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <omp.h>

#include "zg/number_theory.hpp"
#include "zg/parallel.hpp"

namespace zg {

void ConeIntegralData::check() const {
  auto one = [&](const Polynomial& f, const std::string& what) {
    if (f.variables() != variables) throw std::invalid_argument(what + " has the wrong number of variables");
    if (f.is_zero()) throw std::invalid_argument(what + " is the zero polynomial");
  };
  one(f0, "f_0");
  one(g0, "g_0");
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    one(conditions[i].first, "f_" + std::to_string(i + 1));
    one(conditions[i].second, "g_" + std::to_string(i + 1));
  }
}

namespace {

using i64 = std::int64_t;
using u64 = std::uint64_t;
constexpr int kInf = INT_MAX / 4;

struct Ord {
  int lo = 0, hi = kInf;
  bool exact() const { return lo == hi; }
};

struct CompiledPoly {
  const Polynomial* poly = nullptr;
  std::vector<std::size_t> support;
  bool monomial = false;
  int coef_val = 0;                        // monomial: valuation of the coefficient
  std::vector<std::pair<std::size_t, int>> powers;  // monomial: (variable, exponent)
  std::vector<std::pair<int, std::vector<std::pair<std::size_t, int>>>> terms;  // (coef valuation, powers)
};

struct Box {
  std::vector<int> prec;
  std::vector<i64> res;
};

struct Accumulator {
  std::map<std::pair<int, int>, u64> determined;  // (k, exponent of p^{-1}) -> box count
  std::map<int, u64> window, beyond, excluded, undetermined;
  std::map<std::tuple<int, int, int>, u64> upper;  // (k_lo, k_hi, exponent)
  u64 boxes = 0;

  void merge(const Accumulator& o) {
    for (const auto& [k, v] : o.determined) determined[k] += v;
    for (const auto& [k, v] : o.window) window[k] += v;
    for (const auto& [k, v] : o.beyond) beyond[k] += v;
    for (const auto& [k, v] : o.excluded) excluded[k] += v;
    for (const auto& [k, v] : o.undetermined) undetermined[k] += v;
    for (const auto& [k, v] : o.upper) upper[k] += v;
    boxes += o.boxes;
  }
};

class Integrator {
 public:
  Integrator(const ConeIntegralData& D, i64 p, int kmax, int cap) : D_(D), p_(p), kmax_(kmax), cap_(cap) {
    D.check();
    if (!is_prime(p)) throw std::invalid_argument("truncated_integral: p must be prime");
    if (cap < 1) throw std::invalid_argument("truncated_integral: depth cap must be at least 1");
    if (kmax < 0) throw std::invalid_argument("truncated_integral: kmax must be non-negative");
    pw_.push_back(1);
    for (int i = 1; i <= cap; ++i) {
      if (pw_.back() > (INT64_C(1) << 61) / p) throw std::overflow_error("truncated_integral: p^cap exceeds 61 bits");
      pw_.push_back(pw_.back() * p);
    }
    polys_.push_back(compile(D.f0));
    polys_.push_back(compile(D.g0));
    for (const auto& [f, g] : D.conditions) {
      polys_.push_back(compile(f));
      polys_.push_back(compile(g));
    }
  }

  void run(Accumulator& total) const {
    const std::size_t m = D_.variables;
    std::vector<Box> frontier{Box{std::vector<int>(m, 0), std::vector<i64>(m, 0)}};
    Accumulator head;
    const std::size_t target = static_cast<std::size_t>(64 * worker_count());
    // breadth-first expansion to get independent work items
    for (int round = 0; round < 6 && frontier.size() < target; ++round) {
      std::vector<Box> next;
      for (auto& b : frontier) {
        auto child_var = step(b, head);
        if (!child_var) continue;
        for (i64 j = 0; j < p_; ++j) next.push_back(child(b, *child_var, j));
      }
      frontier = std::move(next);
      if (frontier.empty()) break;
    }
    std::vector<Accumulator> parts(frontier.size());
    const long long items = static_cast<long long>(frontier.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long long i = 0; i < items; ++i) {
      std::vector<Box> stack{frontier[static_cast<std::size_t>(i)]};
      while (!stack.empty()) {
        Box b = std::move(stack.back());
        stack.pop_back();
        auto v = step(b, parts[static_cast<std::size_t>(i)]);
        if (!v) continue;
        for (i64 j = p_ - 1; j >= 0; --j) stack.push_back(child(b, *v, j));
      }
    }
    total.merge(head);
    for (const auto& a : parts) total.merge(a);
  }

 private:
  CompiledPoly compile(const Polynomial& f) const {
    CompiledPoly c;
    c.poly = &f;
    c.support = f.support();
    c.monomial = f.is_monomial();
    for (const auto& [e, coef] : f.terms()) {
      std::vector<std::pair<std::size_t, int>> pw;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) pw.emplace_back(i, e[i]);
      c.terms.emplace_back(valuation(coef, p_), pw);
    }
    if (c.monomial) {
      c.coef_val = c.terms[0].first;
      c.powers = c.terms[0].second;
    }
    return c;
  }

  Box child(const Box& b, std::size_t var, i64 digit) const {
    Box c = b;
    c.res[var] += digit * pw_[static_cast<std::size_t>(b.prec[var])];
    c.prec[var] += 1;
    return c;
  }

  Ord var_ord(const Box& b, std::size_t i) const {
    if (b.res[i] == 0) return {b.prec[i], kInf};
    const int v = valuation(b.res[i], p_);
    return {v, v};
  }

  Ord poly_ord(const Box& b, const CompiledPoly& c) const {
    if (c.support.empty()) return {c.terms[0].first, c.terms[0].first};
    if (c.monomial) {
      Ord o{c.coef_val, c.coef_val};
      bool exact = true;
      for (const auto& [i, e] : c.powers) {
        const Ord vi = var_ord(b, i);
        o.lo += e * vi.lo;
        exact = exact && vi.exact();
      }
      if (!exact) o.hi = kInf;
      else o.hi = o.lo;
      return o;
    }
    int mg = cap_ + 1;
    for (auto i : c.support) mg = std::min(mg, b.prec[i]);
    if (mg > 0) {
      std::vector<i64> x(b.res.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = b.res[i] % pw_[static_cast<std::size_t>(mg)];
      const i64 val = c.poly->evaluate_mod(x, pw_[static_cast<std::size_t>(mg)]);
      if (val != 0) {
        const int v = valuation(val, p_);
        return {v, v};
      }
    }
    int term_lo = kInf;
    for (const auto& [cv, pws] : c.terms) {
      int lo = cv;
      for (const auto& [i, e] : pws) lo += e * var_ord(b, i).lo;
      term_lo = std::min(term_lo, lo);
    }
    return {std::max(mg, term_lo), kInf};
  }

  // Variable of `c` worth refining, if any.
  std::optional<std::size_t> refine_var(const Box& b, const CompiledPoly& c) const {
    std::optional<std::size_t> best;
    bool best_inexact = false;
    for (auto i : c.support) {
      if (b.prec[i] >= cap_) continue;
      const bool inexact = b.res[i] == 0;
      if (c.monomial && !inexact) continue;
      if (!best || (inexact && !best_inexact) || (inexact == best_inexact && b.prec[i] < b.prec[*best])) {
        best = i;
        best_inexact = inexact;
      }
    }
    return best;
  }

  // Classifies the box; returns the variable to split on, or nothing if the box is final.
  std::optional<std::size_t> step(const Box& b, Accumulator& acc) const {
    ++acc.boxes;
    int mass_exp = 0;
    for (auto x : b.prec) mass_exp += x;
    std::vector<const CompiledPoly*> pending;
    bool conditions_ok = true;
    for (std::size_t i = 0; i < D_.conditions.size(); ++i) {
      const auto& cf = polys_[2 + 2 * i];
      const auto& cg = polys_[3 + 2 * i];
      const Ord f = poly_ord(b, cf), g = poly_ord(b, cg);
      if (g.hi < f.lo) {
        acc.excluded[mass_exp] += 1;
        return std::nullopt;
      }
      if (f.hi <= g.lo) continue;
      conditions_ok = false;
      if (!f.exact()) pending.push_back(&cf);
      if (!g.exact()) pending.push_back(&cg);
    }
    const Ord f0 = poly_ord(b, polys_[0]);
    if (f0.lo > kmax_) {
      acc.beyond[mass_exp] += 1;
      return std::nullopt;
    }
    const Ord g0 = poly_ord(b, polys_[1]);
    if (conditions_ok && f0.exact() && g0.exact()) {
      acc.window[mass_exp] += 1;
      acc.determined[{f0.lo, mass_exp + g0.lo}] += 1;
      return std::nullopt;
    }
    std::vector<const CompiledPoly*> order;
    if (!f0.exact()) order.push_back(&polys_[0]);
    order.insert(order.end(), pending.begin(), pending.end());
    if (!g0.exact()) order.push_back(&polys_[1]);
    for (const auto* c : order)
      if (auto v = refine_var(b, *c)) return v;
    acc.undetermined[mass_exp] += 1;
    const int hi = std::min(kmax_, f0.hi);
    acc.upper[{f0.lo, hi, mass_exp + g0.lo}] += 1;
    return std::nullopt;
  }

  const ConeIntegralData& D_;
  i64 p_;
  int kmax_, cap_;
  std::vector<i64> pw_;
  std::vector<CompiledPoly> polys_;
};

}  // namespace

TruncatedLocalIntegral truncated_integral(const ConeIntegralData& D, std::int64_t p, int kmax, int depth_cap) {
  Integrator integrator(D, p, kmax, depth_cap);
  Accumulator acc;
  integrator.run(acc);
  TruncatedLocalIntegral r;
  r.p = p, r.kmax = kmax, r.depth_cap = depth_cap, r.boxes = acc.boxes;
  const Integer P(p);
  auto mass = [&](const std::map<int, u64>& m) {
    Rational s = 0;
    for (const auto& [e, c] : m) s += Rational(Integer(c)) * rpow(P, -e);
    return s;
  };
  r.window_mass = mass(acc.window);
  r.beyond_mass = mass(acc.beyond);
  r.excluded_mass = mass(acc.excluded);
  r.undetermined_mass = mass(acc.undetermined);
  r.coefficients.assign(static_cast<std::size_t>(kmax + 1), {0, 0});
  for (const auto& [key, c] : acc.determined) {
    const Rational v = Rational(Integer(c)) * rpow(P, -key.second);
    r.coefficients[static_cast<std::size_t>(key.first)].lower += v;
  }
  for (auto& ci : r.coefficients) ci.upper = ci.lower;
  for (const auto& [key, c] : acc.upper) {
    const auto [lo, hi, e] = key;
    const Rational v = Rational(Integer(c)) * rpow(P, -e);
    for (int k = lo; k <= hi; ++k) r.coefficients[static_cast<std::size_t>(k)].upper += v;
  }
  return r;
}

std::string to_string(CoefficientVerdict v) {
  switch (v) {
    case CoefficientVerdict::pass: return "pass";
    case CoefficientVerdict::indeterminate: return "indeterminate";
    case CoefficientVerdict::fail: return "fail";
  }
  return "?";
}

bool VerificationReport::passed() const {
  for (auto v : verdicts)
    if (v != CoefficientVerdict::pass) return false;
  return true;
}

std::string VerificationReport::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < verdicts.size(); ++k)
    os << "k=" << k << " expected=" << zg::to_string(expected[k]) << " interval=[" << zg::to_string(normalized[k].lower)
       << ", " << zg::to_string(normalized[k].upper) << "] " << zg::to_string(verdicts[k]) << "\n";
  if (first_failure) os << "first failure at k=" << *first_failure << "\n";
  return os.str();
}

VerificationReport verify_against(const ConeIntegralData& D, std::int64_t p, int kmax,
                                  const PadicRationalFunction& target, const Rational& normalization,
                                  std::optional<int> depth_cap) {
  const int cap = depth_cap.value_or(kmax + static_cast<int>(D.variables) + 2);
  const auto I = truncated_integral(D, p, kmax, cap);
  VerificationReport r;
  r.expected = target.expand(Integer(p), kmax);
  for (auto& e : r.expected) e *= normalization;
  const auto& a0 = I.coefficients[0];
  const bool a0_known = a0.pinned() && a0.lower != 0;
  for (int k = 0; k <= kmax; ++k) {
    const auto& c = I.coefficients[static_cast<std::size_t>(k)];
    CoefficientInterval n{0, 0};
    CoefficientVerdict v;
    const Rational& want = r.expected[static_cast<std::size_t>(k)];
    if (a0_known) {
      n = {c.lower / a0.lower, c.upper / a0.lower};
      if (n.pinned()) v = n.lower == want ? CoefficientVerdict::pass : CoefficientVerdict::fail;
      else v = (want < n.lower || want > n.upper) ? CoefficientVerdict::fail : CoefficientVerdict::indeterminate;
    } else {
      // a_{p,0} in [lo, hi]: the normalised coefficient lies in [c.lower/hi, c.upper/lo]
      if (a0.lower > 0) n = {c.lower / a0.upper, c.upper / a0.lower};
      v = (a0.lower > 0 && (want < n.lower || want > n.upper)) ? CoefficientVerdict::fail
                                                               : CoefficientVerdict::indeterminate;
    }
    r.normalized.push_back(n);
    r.verdicts.push_back(v);
    if (v == CoefficientVerdict::fail && !r.first_failure) r.first_failure = k;
  }
  return r;
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

Polynomial poly_det(const PolyMatrix& m, std::size_t vars) {
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(vars, 1);
  if (n == 1) return m[0][0];
  Polynomial total(vars);
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != c) row.push_back(m[r][j]);
      minor.push_back(row);
    }
    Polynomial term = m[0][c] * poly_det(minor, vars);
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

}  // namespace

ConeIntegralData lattice_integrand(const StructureConstantAlgebra& L, ClosureKind kind) {
  if (kind == ClosureKind::order && L.kind() != AlgebraKind::unital)
    throw std::invalid_argument("closure kind 'order' needs a unital ring");
  const std::size_t h = L.rank();
  const std::size_t vars = h * (h + 1) / 2;
  PolyMatrix M(h, std::vector<Polynomial>(h, Polynomial(vars)));
  std::size_t idx = 0;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i; j < h; ++j) M[i][j] = Polynomial::variable(vars, idx++);
  // adj[t][k] = (-1)^{t+k} det(M without row k and column t)
  PolyMatrix adj(h, std::vector<Polynomial>(h, Polynomial(vars)));
  for (std::size_t t = 0; t < h; ++t)
    for (std::size_t k = 0; k < h; ++k) {
      PolyMatrix minor;
      for (std::size_t r = 0; r < h; ++r) {
        if (r == k) continue;
        std::vector<Polynomial> row;
        for (std::size_t c = 0; c < h; ++c)
          if (c != t) row.push_back(M[r][c]);
        minor.push_back(row);
      }
      Polynomial d = poly_det(minor, vars);
      adj[t][k] = (t + k) % 2 == 0 ? d : Polynomial(vars) - d;
    }
  ConeIntegralData D;
  D.variables = vars;
  D.f0 = Polynomial::constant(vars, 1);
  D.g0 = Polynomial::constant(vars, 1);
  for (std::size_t i = 0; i < h; ++i) {
    D.f0 = D.f0 * M[i][i];
    for (std::size_t e = 0; e < h - 1 - i; ++e) D.g0 = D.g0 * M[i][i];
  }
  auto product = [&](const std::vector<Polynomial>& x, const std::vector<Polynomial>& y) {
    std::vector<Polynomial> out(h, Polynomial(vars));
    for (const auto& c : L.nonzero_constants())
      out[c.k] = out[c.k] + x[c.i] * y[c.j] * Polynomial::constant(vars, to_int64(c.value));
    return out;
  };
  std::set<std::string> seen;
  auto add_vector = [&](const std::vector<Polynomial>& x) {
    for (std::size_t k = 0; k < h; ++k) {
      Polynomial g(vars);
      for (std::size_t t = 0; t < h; ++t) g = g + x[t] * adj[t][k];
      if (g.is_zero() || !seen.insert(g.to_string()).second) continue;
      D.conditions.emplace_back(D.f0, g);
    }
  };
  std::vector<std::vector<Polynomial>> rows(M.begin(), M.end());
  if (kind == ClosureKind::subring || kind == ClosureKind::order) {
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = 0; b < h; ++b) add_vector(product(rows[a], rows[b]));
    if (kind == ClosureKind::order) {
      std::vector<Polynomial> u;
      for (const auto& x : *L.identity()) u.push_back(Polynomial::constant(vars, to_int64(x)));
      add_vector(u);
    }
  } else if (kind != ClosureKind::subgroup) {
    const bool left = kind == ClosureKind::left_ideal || kind == ClosureKind::two_sided_ideal;
    const bool right = kind == ClosureKind::right_ideal || kind == ClosureKind::two_sided_ideal;
    for (std::size_t c = 0; c < h; ++c) {
      std::vector<Polynomial> e(h, Polynomial(vars));
      e[c] = Polynomial::constant(vars, 1);
      for (const auto& r : rows) {
        if (left) add_vector(product(e, r));
        if (right) add_vector(product(r, e));
      }
    }
  }
  return D;
}

std::string ConsistencyReport::table() const {
  std::ostringstream os;
  os << "k,oracle";
  for (const auto& c : candidates) os << "," << c.name << "_lower," << c.name << "_upper";
  os << "\n";
  for (std::size_t k = 0; k < oracle.size(); ++k) {
    os << k << "," << oracle[k];
    for (const auto& c : candidates)
      os << "," << zg::to_string(c.predicted[k].lower) << "," << zg::to_string(c.predicted[k].upper);
    os << "\n";
  }
  for (const auto& c : candidates)
    os << "# " << c.name << " = " << zg::to_string(c.constant) << (c.matches ? " matches" : " does not match") << "\n";
  return os.str();
}

ConsistencyReport oracle_consistency(const StructureConstantAlgebra& L, std::int64_t p, int kmax, ClosureKind kind,
                                     std::optional<int> depth_cap) {
  const std::size_t h = L.rank();
  ConsistencyReport r;
  r.oracle = local_coefficients(L, p, kmax, kind);
  const auto D = lattice_integrand(L, kind);
  r.integral = truncated_integral(D, p, kmax, depth_cap.value_or(kmax + static_cast<int>(h) + 2));
  const Integer P(p);
  const Rational inv_p = Rational(1, P);
  Rational units = 1;
  for (std::size_t i = 0; i < h; ++i) units *= 1 - inv_p;
  std::vector<std::pair<std::string, Rational>> consts = {
      {"unit-triangular", 1 / units},
      {"single-factor", 1 / (1 - rpow(P, -static_cast<long>(h)))},
  };
  for (const auto& [name, K] : consts) {
    NormalizationCandidate c{name, K, {}, true};
    for (int k = 0; k <= kmax; ++k) {
      const Rational scale = K * rpow(P, static_cast<long>(k) * static_cast<long>(h));
      const auto& iv = r.integral.coefficients[static_cast<std::size_t>(k)];
      c.predicted.push_back({iv.lower * scale, iv.upper * scale});
      c.matches = c.matches && iv.pinned() && iv.lower * scale == Rational(r.oracle[static_cast<std::size_t>(k)]);
    }
    if (c.matches && !r.matching) r.matching = name;
    r.candidates.push_back(c);
  }
  return r;
}

}  // namespace zg
