#include "zg/catalog.hpp"

#include <sstream>
#include <stdexcept>

#include "zg/number_theory.hpp"

namespace zg {

std::optional<Rational> CatalogEntry::abscissa(ClosureKind kind) const {
  if (auto it = closed_forms.find(kind); it != closed_forms.end()) return abscissa_of_closed_form(it->second);
  if (auto it = known_abscissa.find(kind); it != known_abscissa.end()) return it->second;
  return std::nullopt;
}

ConeIntegralData chi4_cone_integral_data() {
  auto P = [](const char* s) { return Polynomial::parse(s, 3); };
  ConeIntegralData D;
  D.variables = 3;
  D.f0 = P("1:1,0,1");
  D.g0 = P("1:1,0,0");
  D.conditions = {{P("1:1,0,0"), P("1:0,1,0")},
                  {P("1:1,0,1"), P("1:0,2,0; 1:2,0,0")},
                  {P("1:1,0,0"), P("1:0,0,1")}};
  return D;
}

namespace {

using closed_forms::zeta;

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  const auto sub = ClosureKind::subring;
  const auto ideal = ClosureKind::two_sided_ideal;
  const auto order = ClosureKind::order;

  for (std::size_t h = 1; h <= 4; ++h) {
    CatalogEntry e;
    e.name = "z" + std::to_string(h);
    e.note = "free abelian Lie ring of rank " + std::to_string(h);
    e.ring = rings::abelian(h).renamed(e.name);
    auto F = closed_forms::free_abelian(h);
    e.closed_forms = {{ClosureKind::subgroup, F}, {sub, F}, {ideal, F}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "heisenberg";
    e.note = "[x,y] = z, class 2, rank 3";
    e.ring = rings::heisenberg().renamed(e.name);
    e.closed_forms = {
        {sub, closed_forms::product("heisenberg-subring",
                                    {zeta(1, 0), zeta(1, 1), zeta(2, 2), zeta(2, 3), zeta(3, 3, -1)})},
        {ideal, closed_forms::product("heisenberg-ideal", {zeta(1, 0), zeta(1, 1), zeta(3, 2)})}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "heisenberg-squared";
    e.note = "H x H, rank 6, both abscissae equal 4";
    e.ring = rings::power(rings::heisenberg(), 2).renamed(e.name);
    e.known_abscissa = {{sub, 4}, {ideal, 4}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "heisenberg-times-z";
    e.note = "H x Z, rank 4; the free factor is central but outside the saturation of gamma_2";
    e.ring = direct_product(rings::heisenberg(), rings::abelian(1)).renamed(e.name);
    out.push_back(e);
  }
  for (std::int64_t k : {-1, 2, 5}) {
    CatalogEntry e;
    e.name = "l" + std::string(k < 0 ? "m" : "") + std::to_string(k < 0 ? -k : k);
    e.note = "H tensor the maximal order of Q(sqrt " + std::to_string(k) + "), rank 6; locally H x H at split primes";
    e.ring = tensor_with_order(rings::heisenberg(), rings::quadratic_order(k)).renamed(e.name);
    e.known_abscissa = {{sub, 4}, {ideal, 4}};
    out.push_back(e);
  }
  const std::vector<std::pair<std::string, std::int64_t>> fields = {
      {"gaussian-integers", -1}, {"o-sqrt5", 5}, {"o-sqrt-3", -3}};
  for (const auto& [name, k] : fields) {
    CatalogEntry e;
    e.name = name;
    e.note = "maximal order of Q(sqrt " + std::to_string(k) + ")";
    e.ring = rings::quadratic_order(k).renamed(name);
    e.closed_forms = {{ideal, closed_forms::product(name + "-ideal", {closed_forms::dedekind(k)})},
                      {order, closed_forms::product(name + "-order", {zeta(1, 0)})}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "z-ring-squared";
    e.note = "the unital ring Z x Z";
    e.ring = rings::power(rings::integers(), 2).renamed(e.name);
    e.closed_forms = {{ideal, closed_forms::product("z-ring-squared-ideal", {zeta(1, 0, 2)})},
                      {order, closed_forms::product("z-ring-squared-order", {zeta(1, 0)})}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "g-1-0";
    e.note = "central product G(1,0); ideal abscissa h - 1 = 2";
    e.ring = rings::central_product(1, 0).renamed(e.name);
    e.closed_forms = {{ideal, closed_forms::product("g-1-0-ideal", {zeta(1, 0), zeta(1, 1), zeta(3, 2)})}};
    e.known_abscissa = {{ideal, 2}, {sub, 2}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "virtually-abelian";
    e.note = "subgroup zeta function 2^{-s} zeta(s) + zeta(s-1)";
    ZetaClosedForm F;
    F.name = "virtually-abelian";
    F.terms = {ZetaTerm{1, 2, {zeta(1, 0)}}, ZetaTerm{1, 1, {zeta(1, 1)}}};
    e.closed_forms = {{ClosureKind::subgroup, F}};
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.name = "chi4-cone";
    e.note = "cone integral with value zeta(s+2) L(chi_4, s+2); abscissa -1";
    e.closed_forms = {{ClosureKind::subgroup, closed_forms::product("chi4-cone", {zeta(1, -2), closed_forms::chi4(1, -2)})}};
    e.integral = chi4_cone_integral_data();
    out.push_back(e);
  }
  return out;
}

std::string kind_name(ClosureKind k) { return to_string(k); }

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw std::out_of_range("unknown catalog entry '" + name + "'");
}

CatalogDepth parse_catalog_depth(const std::string& text) {
  if (text == "quick") return CatalogDepth::quick;
  if (text == "standard") return CatalogDepth::standard;
  if (text == "full") return CatalogDepth::full;
  throw std::invalid_argument("unknown depth '" + text + "' (quick, standard, full)");
}

std::vector<CatalogCheck> verify_catalog(CatalogDepth depth) {
  const std::int64_t nmax = depth == CatalogDepth::quick ? 16 : depth == CatalogDepth::standard ? 40 : 100;
  const int local_k = depth == CatalogDepth::full ? 3 : 2;
  std::vector<CatalogCheck> out;
  for (const auto& e : catalog()) {
    if (e.ring) {
      const auto report = validate(*e.ring);
      out.push_back({e.name, "validate", report.ok(), report.ok() ? "" : report.violations.front()});
    }
    for (const auto& [kind, F] : e.closed_forms) {
      const auto coeffs = closed_form_coefficients(F, nmax);
      if (F.is_product()) {
        // Euler product consistency
        std::vector<Rational> euler(static_cast<std::size_t>(nmax), 0);
        euler[0] = 1;
        std::map<std::int64_t, std::vector<Rational>> local;
        for (auto p : primes_up_to(nmax)) {
          int kmax = 0;
          for (std::int64_t q = p; q <= nmax / p; q *= p) ++kmax;
          local[p] = closed_form_local(F, p).expand(Integer(p), kmax + 1);
        }
        bool ok = true;
        for (std::int64_t n = 1; n <= nmax && ok; ++n) {
          Rational v = 1;
          for (const auto& [p, k] : factorize(n)) v *= local[p][static_cast<std::size_t>(k)];
          ok = v == coeffs[static_cast<std::size_t>(n - 1)];
        }
        out.push_back({e.name, "euler-product " + kind_name(kind), ok, "n <= " + std::to_string(nmax)});
      }
      if (!e.ring || kind == ClosureKind::subgroup) continue;
      const auto counts = count_range(*e.ring, nmax, kind);
      std::string detail = "n <= " + std::to_string(nmax);
      bool ok = true;
      for (std::int64_t n = 1; n <= nmax; ++n)
        if (Rational(counts[static_cast<std::size_t>(n - 1)]) != coeffs[static_cast<std::size_t>(n - 1)]) {
          ok = false;
          detail = "first mismatch at n=" + std::to_string(n) + ": oracle " +
                   to_string(counts[static_cast<std::size_t>(n - 1)]) + ", closed form " +
                   to_string(coeffs[static_cast<std::size_t>(n - 1)]);
          break;
        }
      out.push_back({e.name, "oracle-vs-closed-form " + kind_name(kind), ok, detail});
    }
    if (e.integral) {
      for (std::int64_t p : {2, 3, 5}) {
        const auto target = closed_form_local(e.closed_forms.at(ClosureKind::subgroup), p);
        const auto r = verify_against(*e.integral, p, local_k, target);
        out.push_back({e.name, "integral p=" + std::to_string(p), r.passed(),
                       r.first_failure ? "first failure at k=" + std::to_string(*r.first_failure) : ""});
      }
    }
    if (e.name.size() >= 2 && e.name[0] == 'l' && e.ring && e.ring->rank() == 6) {
      const std::int64_t k = e.name[1] == 'm' ? -std::stoll(e.name.substr(2)) : std::stoll(e.name.substr(1));
      const auto& H2 = *catalog_entry("heisenberg-squared").ring;
      const std::size_t nprimes = depth == CatalogDepth::full ? 2 : 1;
      for (auto p : smallest_split_primes(k, nprimes))
        for (auto kind : {ClosureKind::subring, ClosureKind::two_sided_ideal}) {
          const bool ok = compare_locals(*e.ring, H2, p, local_k, kind);
          out.push_back({e.name, "split-prime p=" + std::to_string(p) + " " + kind_name(kind), ok,
                         "k <= " + std::to_string(local_k)});
        }
    }
  }
  return out;
}

}  // namespace zg
