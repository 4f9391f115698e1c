#include "zg/cone.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "zg/lattice.hpp"
#include "zg/number_theory.hpp"

namespace zg {

namespace {

using i64 = std::int64_t;

i64 dot(const IntRow& a, const IntRow& b) {
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntRow primitive(IntRow v) {
  i64 g = 0;
  for (auto x : v) g = gcd64(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

std::vector<IntVector> to_int_vectors(const std::vector<IntRow>& rows) {
  std::vector<IntVector> out;
  for (const auto& r : rows) out.emplace_back(r.begin(), r.end());
  return out;
}

std::size_t rank_of_rows(const std::vector<IntRow>& rows, std::size_t dim) {
  if (rows.empty()) return 0;
  return rank_of(to_int_vectors(rows), dim);
}

// lambda with sum lambda_j gens[j] = u, if u lies in the span.
std::optional<std::vector<Rational>> solve_in_span(const std::vector<IntRow>& gens, const IntRow& u) {
  const std::size_t g = gens.size(), n = u.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(g + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < g; ++j) m[i][j] = gens[j][i];
    m[i][g] = u[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < g && r < n; ++c) {
    std::size_t s = r;
    while (s < n && m[s][c] == 0) ++s;
    if (s == n) continue;
    std::swap(m[s], m[r]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= g; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (m[i][g] != 0) return std::nullopt;
  if (r < g) throw std::logic_error("solve_in_span: generators are linearly dependent");
  std::vector<Rational> lambda(g);
  for (std::size_t i = 0; i < r; ++i) lambda[pivot_col[i]] = m[i][g] / m[i][pivot_col[i]];
  return lambda;
}

}  // namespace

std::string to_string(const IntRow& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void MonomialConeDatum::check() const {
  if (nf.empty() || nf.size() != ng.size()) throw std::invalid_argument("cone datum: need rows f_0..f_l and g_0..g_l");
  if (nu.size() != dimension) throw std::invalid_argument("cone datum: nu has wrong length");
  for (const auto* rows : {&nf, &ng})
    for (const auto& r : *rows) {
      if (r.size() != dimension) throw std::invalid_argument("cone datum: multiplicity row has wrong length");
      for (auto x : r)
        if (x < 0) throw std::invalid_argument("cone datum: multiplicities must be non-negative");
    }
  for (auto x : nu)
    if (x < 1) throw std::invalid_argument("cone datum: weights nu must be positive");
}

bool ConeInequalities::contains(const IntRow& u) const {
  for (const auto& r : rows)
    if (dot(r, u) < 0) return false;
  return true;
}

ConeInequalities orthant_cone(std::size_t dimension, const std::vector<IntRow>& extra_rows) {
  ConeInequalities c;
  c.dimension = dimension;
  for (std::size_t i = 0; i < dimension; ++i) {
    IntRow r(dimension, 0);
    r[i] = 1;
    c.rows.push_back(r);
  }
  for (const auto& r : extra_rows) {
    if (r.size() != dimension) throw std::invalid_argument("cone inequality has wrong length");
    c.rows.push_back(r);
  }
  return c;
}

ConeInequalities cone_from_data(const MonomialConeDatum& D) {
  D.check();
  std::vector<IntRow> extra;
  for (std::size_t j = 1; j < D.nf.size(); ++j) {
    IntRow r(D.dimension);
    for (std::size_t i = 0; i < D.dimension; ++i) r[i] = D.ng[j][i] - D.nf[j][i];
    extra.push_back(r);
  }
  return orthant_cone(D.dimension, extra);
}

std::vector<IntRow> extremal_rays(const ConeInequalities& cone) {
  const std::size_t d = cone.dimension;
  for (std::size_t i = 0; i < d; ++i) {
    IntRow e(d, 0);
    e[i] = 1;
    if (i >= cone.rows.size() || cone.rows[i] != e)
      throw std::invalid_argument("extremal_rays: first rows must be the non-negativity constraints");
  }
  std::vector<IntRow> rays;
  for (std::size_t i = 0; i < d; ++i) {
    IntRow e(d, 0);
    e[i] = 1;
    rays.push_back(e);
  }
  std::vector<std::size_t> processed(d);
  std::iota(processed.begin(), processed.end(), 0);
  auto tight = [&](const IntRow& r) {
    std::vector<std::size_t> z;
    for (auto idx : processed)
      if (dot(cone.rows[idx], r) == 0) z.push_back(idx);
    return z;
  };
  for (std::size_t idx = d; idx < cone.rows.size(); ++idx) {
    const IntRow& a = cone.rows[idx];
    std::vector<IntRow> pos, neg, next;
    for (const auto& r : rays) {
      const i64 v = dot(a, r);
      if (v > 0) pos.push_back(r);
      if (v < 0) neg.push_back(r);
      if (v >= 0) next.push_back(r);
    }
    std::vector<std::vector<std::size_t>> zsets;
    for (const auto& r : rays) zsets.push_back(tight(r));
    auto zset_of = [&](const IntRow& r) -> const std::vector<std::size_t>& {
      for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i] == r) return zsets[i];
      throw std::logic_error("ray not found");
    };
    for (const auto& rp : pos)
      for (const auto& rn : neg) {
        std::vector<std::size_t> common;
        const auto& zp = zset_of(rp);
        const auto& zn = zset_of(rn);
        std::set_intersection(zp.begin(), zp.end(), zn.begin(), zn.end(), std::back_inserter(common));
        bool adjacent = true;
        for (std::size_t i = 0; i < rays.size() && adjacent; ++i) {
          if (rays[i] == rp || rays[i] == rn) continue;
          if (std::includes(zsets[i].begin(), zsets[i].end(), common.begin(), common.end())) adjacent = false;
        }
        if (!adjacent) continue;
        const i64 ap = dot(a, rp), an = dot(a, rn);
        IntRow w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = ap * rn[i] - an * rp[i];
        next.push_back(primitive(w));
      }
    processed.push_back(idx);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    rays = std::move(next);
  }
  std::sort(rays.begin(), rays.end(), std::greater<>());
  return rays;
}

RayInvariants ray_invariants(const std::vector<IntRow>& rays, const MonomialConeDatum& D) {
  D.check();
  RayInvariants out;
  for (const auto& e : rays) {
    RayInvariant ri;
    for (std::size_t i = 0; i < D.dimension; ++i) {
      ri.A += e[i] * D.nf[0][i];
      ri.B += e[i] * (D.ng[0][i] + D.nu[i]);
    }
    out.pairs.push_back(ri);
    if (ri.A != 0) {
      Rational a(1 - ri.B, ri.A);
      if (!out.alpha || a > *out.alpha) out.alpha = a;
    }
  }
  return out;
}

namespace {

struct Triangulator {
  const ConeInequalities& cone;
  const std::vector<IntRow>& rays;
  TriangulationOrder order;

  std::size_t rank(const std::vector<std::size_t>& F) const {
    std::vector<IntRow> rows;
    for (auto i : F) rows.push_back(rays[i]);
    return rank_of_rows(rows, cone.dimension);
  }

  std::vector<std::vector<std::size_t>> facets(const std::vector<std::size_t>& F) const {
    const std::size_t r = rank(F);
    std::set<std::vector<std::size_t>> out;
    for (const auto& row : cone.rows) {
      std::vector<std::size_t> G;
      for (auto i : F)
        if (dot(row, rays[i]) == 0) G.push_back(i);
      if (G.size() < F.size() && !G.empty() && rank(G) + 1 == r) out.insert(G);
    }
    return {out.begin(), out.end()};
  }

  std::vector<std::vector<std::size_t>> run(const std::vector<std::size_t>& F) const {
    if (F.size() == rank(F)) return {F};
    const std::size_t v = order == TriangulationOrder::forward ? F.front() : F.back();
    std::vector<std::vector<std::size_t>> out;
    for (const auto& G : facets(F)) {
      if (std::find(G.begin(), G.end(), v) != G.end()) continue;
      for (auto S : run(G)) {
        S.push_back(v);
        std::sort(S.begin(), S.end());
        out.push_back(S);
      }
    }
    return out;
  }
};

}  // namespace

ConeDecomposition simplicial_decomposition(const ConeInequalities& cone, const std::vector<IntRow>& rays,
                                           TriangulationOrder order) {
  ConeDecomposition dec;
  dec.cone = cone;
  dec.rays = rays;
  std::set<std::vector<std::size_t>> faces{{}};
  if (!rays.empty()) {
    std::vector<std::size_t> all(rays.size());
    std::iota(all.begin(), all.end(), 0);
    for (const auto& S : Triangulator{cone, rays, order}.run(all)) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << S.size()); ++mask) {
        std::vector<std::size_t> sub;
        for (std::size_t b = 0; b < S.size(); ++b)
          if (mask >> b & 1u) sub.push_back(S[b]);
        faces.insert(sub);
      }
    }
  }
  std::vector<std::vector<std::size_t>> sorted(faces.begin(), faces.end());
  std::stable_sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (auto& g : sorted) {
    ConePiece piece;
    piece.generators = g;
    std::set<std::size_t> supp;
    for (auto j : g)
      for (std::size_t i = 0; i < cone.dimension; ++i)
        if (rays[j][i] != 0) supp.insert(i);
    piece.support.assign(supp.begin(), supp.end());
    dec.pieces.push_back(std::move(piece));
  }
  return dec;
}

std::optional<std::size_t> ConeDecomposition::locate(const IntRow& u) const {
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    std::vector<IntRow> gens;
    for (auto j : pieces[k].generators) gens.push_back(rays[j]);
    auto lambda = solve_in_span(gens, u);
    if (!lambda) continue;
    bool open = true;
    for (const auto& l : *lambda) open = open && l > 0;
    if (open) return k;
  }
  return std::nullopt;
}

StanleyResult stanley_series(const std::vector<IntRow>& phi, const IntRow& v, int truncation) {
  if (phi.empty()) throw std::invalid_argument("stanley_series: need at least one constraint row");
  if (phi.size() != v.size()) throw std::invalid_argument("stanley_series: v length differs from row count");
  if (truncation < 0) throw std::invalid_argument("stanley_series: negative truncation");
  StanleyResult r;
  r.variables = phi[0].size();
  r.truncation = truncation;
  if (r.variables == 0) throw std::invalid_argument("stanley_series: need at least one variable");
  for (const auto& row : phi)
    if (row.size() != r.variables) throw std::invalid_argument("stanley_series: ragged constraint matrix");
  const std::size_t n = r.variables;
  IntRow u(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i == n) {
      for (std::size_t j = 0; j < phi.size(); ++j)
        if (dot(phi[j], u) < v[j]) return;
      r.series[Exponent(u.begin(), u.end())] = 1;
      return;
    }
    for (int x = 0; x <= left; ++x) {
      u[i] = x;
      rec(i + 1, left - x);
    }
    u[i] = 0;
  };
  rec(0, truncation);
  r.empty = r.series.empty();
  r.denominator = extremal_rays(orthant_cone(n, phi));
  for (const auto& e : r.denominator)
    for (auto x : e) r.denominator_degree += static_cast<int>(x);
  MultiSeries prod = r.series;
  for (const auto& e : r.denominator) {
    MultiSeries next = prod;
    int de = 0;
    for (auto x : e) de += static_cast<int>(x);
    for (const auto& [w, c] : prod) {
      int dw = 0;
      for (auto x : w) dw += x;
      if (dw + de > truncation) continue;
      Exponent s = w;
      for (std::size_t i = 0; i < n; ++i) s[i] += static_cast<int>(e[i]);
      next[s] -= c;
    }
    prod.clear();
    for (auto& [w, c] : next)
      if (c != 0) prod.emplace(w, c);
  }
  r.numerator = prod;
  for (const auto& [w, c] : prod) {
    int dw = 0;
    for (auto x : w) dw += x;
    r.numerator_degree = std::max(r.numerator_degree, dw);
  }
  r.certified = r.numerator_degree <= truncation - r.denominator_degree;
  return r;
}

GoodReductionCounts monomial_good_reduction_counts(std::size_t m) {
  if (m > 62) throw std::invalid_argument("monomial_good_reduction_counts: too many divisors");
  GoodReductionCounts g;
  const TPPolynomial pm1 = TPPolynomial::monomial(0, 1) - TPPolynomial(Rational(1));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    TPPolynomial c(Rational(1));
    for (std::size_t i = 0; i < m; ++i)
      if (!(mask >> i & 1u)) c = c * pm1;
    g.counts[mask] = c;
  }
  return g;
}

PadicRationalFunction good_prime_factor(const ConeDecomposition& dec, const MonomialConeDatum& D,
                                        const GoodReductionCounts& counts, std::size_t m) {
  const auto inv = ray_invariants(dec.rays, D);
  const TPPolynomial pm1 = TPPolynomial::monomial(0, 1) - TPPolynomial(Rational(1));
  PadicRationalFunction total(TPPolynomial{}, {});
  for (const auto& piece : dec.pieces) {
    std::uint64_t mask = 0;
    for (auto i : piece.support) mask |= std::uint64_t{1} << i;
    auto it = counts.counts.find(mask);
    if (it == counts.counts.end())
      throw std::invalid_argument("good_prime_factor: missing count for support mask " + std::to_string(mask));
    TPPolynomial num = it->second * TPPolynomial::monomial(0, -static_cast<int>(m));
    for (std::size_t i = 0; i < piece.support.size(); ++i) num = num * pm1;
    std::vector<DenominatorFactor> den;
    for (auto j : piece.generators) {
      const auto& ri = inv.pairs[j];
      num = num * TPPolynomial::monomial(static_cast<int>(ri.A), -static_cast<int>(ri.B));
      den.push_back({static_cast<int>(ri.A), -static_cast<int>(ri.B)});
    }
    total = total + PadicRationalFunction(num, den);
  }
  return total.reduced();
}

PadicRationalFunction monomial_local_factor(const MonomialConeDatum& D) {
  const auto cone = cone_from_data(D);
  const auto rays = extremal_rays(cone);
  const auto dec = simplicial_decomposition(cone, rays, TriangulationOrder::reverse);
  const std::size_t n = D.dimension;
  auto specialize = [&](const IntRow& w) {
    i64 ta = 0, pb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      ta += w[i] * D.nf[0][i];
      pb -= w[i] * (D.ng[0][i] + D.nu[i]);
    }
    if (ta == 0 && pb == 0 && std::any_of(w.begin(), w.end(), [](i64 x) { return x != 0; }))
      throw std::domain_error("monomial_local_factor: nonzero lattice point specialises to 1");
    return std::pair<int, int>{static_cast<int>(ta), static_cast<int>(pb)};
  };
  TPPolynomial scale(Rational(1));
  for (std::size_t i = 0; i < n; ++i) scale = scale * TPPolynomial::one_minus(0, -1);
  PadicRationalFunction total(TPPolynomial{}, {});
  for (const auto& piece : dec.pieces) {
    std::vector<IntRow> gens;
    for (auto j : piece.generators) gens.push_back(rays[j]);
    IntRow hi(n, 0);
    for (const auto& e : gens)
      for (std::size_t i = 0; i < n; ++i) hi[i] += e[i];
    double box = 1;
    for (auto x : hi) box *= static_cast<double>(x + 1);
    if (box > 1e7) throw std::runtime_error("monomial_local_factor: fundamental parallelepiped too large");
    TPPolynomial points;
    IntRow u(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        auto lambda = solve_in_span(gens, u);
        if (!lambda) return;
        for (const auto& l : *lambda)
          if (l <= 0 || l > 1) return;
        if (gens.empty() && std::any_of(u.begin(), u.end(), [](i64 x) { return x != 0; })) return;
        auto [ta, pb] = specialize(u);
        points = points + TPPolynomial::monomial(ta, pb);
        return;
      }
      for (i64 x = 0; x <= hi[i]; ++x) {
        u[i] = x;
        rec(i + 1);
      }
      u[i] = 0;
    };
    rec(0);
    std::vector<DenominatorFactor> den;
    for (const auto& e : gens) {
      auto [ta, pb] = specialize(e);
      den.push_back({ta, pb});
    }
    total = total + PadicRationalFunction(points * scale, den);
  }
  return total.reduced();
}

}  // namespace zg
