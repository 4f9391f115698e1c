#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zg/catalog.hpp"
#include "zg/cone.hpp"
#include "zg/dirichlet.hpp"
#include "zg/io.hpp"
#include "zg/padic.hpp"
#include "zg/parallel.hpp"
#include "zg/sublattice_enum.hpp"

namespace {

using namespace zg;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Failures {
  std::vector<std::string> items;
  void add(const std::string& check, const std::string& detail = "") {
    items.push_back(check + (detail.empty() ? "" : " " + detail));
  }
  int finish() const {
    for (const auto& f : items) std::cerr << "FAIL " << f << "\n";
    return items.empty() ? 0 : 1;
  }
};

StructureConstantAlgebra load_ring(const std::string& spec) {
  if (std::filesystem::exists(spec)) return parse_ring(read_file(spec));
  try {
    const auto& e = catalog_entry(spec);
    if (!e.ring) throw UsageError("catalog entry '" + spec + "' has no ring");
    return *e.ring;
  } catch (const std::out_of_range&) {
    throw UsageError("'" + spec + "' is neither a ring file nor a catalog entry");
  }
}

// Writes to <out>/<file> when an output directory is given, else to stdout.
void emit(const std::string& out_dir, const std::string& file, const std::string& body) {
  if (out_dir.empty()) {
    std::cout << body;
    return;
  }
  std::filesystem::create_directories(out_dir);
  const auto path = std::filesystem::path(out_dir) / file;
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path.string());
  f << body;
  std::cout << "wrote " << path.string() << "\n";
}

std::vector<IntRow> parse_matrix(const std::string& text) {
  std::vector<IntRow> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    IntRow r;
    std::stringstream rs(row);
    std::string x;
    while (std::getline(rs, x, ',')) r.push_back(std::stoll(x));
    rows.push_back(r);
  }
  return rows;
}

std::vector<DenominatorFactor> parse_shape(const std::string& text) {
  std::vector<DenominatorFactor> out;
  for (const auto& r : parse_matrix(text)) {
    if (r.size() != 2) throw UsageError("shape entries are 'a,b' pairs separated by ';'");
    out.push_back({static_cast<int>(r[0]), static_cast<int>(r[1])});
  }
  return out;
}

std::string ring_label(const StructureConstantAlgebra& L, const std::string& spec) {
  return L.name().empty() ? std::filesystem::path(spec).stem().string() : L.name();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zg: subring and ideal zeta function toolkit"};
  app.require_subcommand(1);
  int workers = 0;
  std::string out_dir;
  app.add_option("--workers", workers, "Cap on parallel workers (overrides ZG_WORKERS)");
  app.add_option("--out", out_dir, "Output directory (default: stdout)");

  std::string ring, ring2, kind_text = "subring", strategy_text = "automatic";
  std::int64_t nmax = 100, p = 2;
  int kmax = 3, margin = 4, num_degree = 0;
  std::optional<int> depth_cap;

  auto* count_cmd = app.add_subcommand("count", "Count closed sublattices of index n <= nmax");
  count_cmd->add_option("--ring", ring, "Ring file or catalog name")->required();
  count_cmd->add_option("--kind", kind_text, "subgroup|subring|left-ideal|right-ideal|ideal|order");
  count_cmd->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
  count_cmd->add_option("--strategy", strategy_text, "automatic|reference|pruned|central");

  auto* local_cmd = app.add_subcommand("local", "Local coefficients a_{p^k}, k <= kmax");
  local_cmd->add_option("--ring", ring)->required();
  local_cmd->add_option("--kind", kind_text);
  local_cmd->add_option("--p", p)->required();
  local_cmd->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  local_cmd->add_option("--strategy", strategy_text);

  std::string shape_text;
  auto* fit_cmd = app.add_subcommand("fit", "Fit and certify a rational local factor");
  fit_cmd->add_option("--ring", ring)->required();
  fit_cmd->add_option("--kind", kind_text);
  fit_cmd->add_option("--p", p)->required();
  fit_cmd->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  fit_cmd->add_option("--shape", shape_text, "Denominator factors 'a,b;a,b' for (1 - p^b t^a)")->required();
  fit_cmd->add_option("--num-degree", num_degree, "Numerator degree cap")->required();
  fit_cmd->add_option("--margin", margin)->check(CLI::NonNegativeNumber);

  auto* compare_cmd = app.add_subcommand("compare", "Compare local coefficients of two rings");
  compare_cmd->add_option("--ring", ring)->required();
  compare_cmd->add_option("--ring2", ring2)->required();
  compare_cmd->add_option("--kind", kind_text);
  compare_cmd->add_option("--p", p)->required();
  compare_cmd->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);

  std::string datum_file, grc_file;
  auto* cone_cmd = app.add_subcommand("cone", "Rays, invariants, decomposition and local factor of a cone datum");
  cone_cmd->add_option("--datum", datum_file, ".cone file")->required();
  cone_cmd->add_option("--grc", grc_file, ".grc file of good-reduction counts");
  cone_cmd->add_option("--p", p, "Prime for the evaluated expansion");
  cone_cmd->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);

  std::string phi_text, v_text;
  int truncation = 12;
  auto* stanley_cmd = app.add_subcommand("stanley", "Lattice-point series of {u >= 0 : Phi u >= v}");
  stanley_cmd->add_option("--phi", phi_text, "Rows 'a,b;c,d'")->required();
  stanley_cmd->add_option("--v", v_text, "Comma-separated right-hand side")->required();
  stanley_cmd->add_option("--truncation", truncation)->check(CLI::NonNegativeNumber);

  std::string cint_file, target;
  auto* integrate_cmd = app.add_subcommand("integrate", "Truncated p-adic cone integral");
  integrate_cmd->add_option("--data", cint_file, ".cint file");
  integrate_cmd->add_option("--ring", ring, "Ring for the triangular-matrix integrand (oracle consistency)");
  integrate_cmd->add_option("--kind", kind_text);
  integrate_cmd->add_option("--p", p)->required();
  integrate_cmd->add_option("--kmax", kmax)->check(CLI::NonNegativeNumber);
  integrate_cmd->add_option("--depth-cap", depth_cap)->check(CLI::PositiveNumber);
  integrate_cmd->add_option("--target", target, "Catalog entry whose closed form is the expected value");

  std::int64_t field = -1, bound = 100;
  auto* census_cmd = app.add_subcommand("census", "Orders of a quadratic field by discriminant");
  census_cmd->add_option("--field", field, "Squarefree k of Q(sqrt k)");
  census_cmd->add_option("--bound", bound)->check(CLI::NonNegativeNumber);

  std::string depth_text = "standard";
  auto* verify_cmd = app.add_subcommand("verify-catalog", "Run every catalog agreement check");
  verify_cmd->add_option("--depth", depth_text, "quick|standard|full");

  auto* bounds_cmd = app.add_subcommand("bounds", "Abscissa bounds for a nilpotent catalog ring");
  bounds_cmd->add_option("--ring", ring)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (workers > 0) set_worker_limit(workers);

  Failures failures;
  try {
    const ClosureKind kind = parse_closure_kind(kind_text);
    const CountStrategy strategy = parse_count_strategy(strategy_text);

    if (*count_cmd) {
      const auto L = load_ring(ring);
      const auto label = ring_label(L, ring);
      const auto counts = count_range(L, nmax, kind, strategy);
      std::ostringstream os;
      os << "n,count,kind,ring\n";
      for (std::int64_t n = 1; n <= nmax; ++n)
        os << n << "," << counts[static_cast<std::size_t>(n - 1)] << "," << to_string(kind) << "," << label << "\n";
      emit(out_dir, "count_" + label + "_" + to_string(kind) + ".csv", os.str());
    } else if (*local_cmd) {
      const auto L = load_ring(ring);
      const auto label = ring_label(L, ring);
      const auto a = local_coefficients(L, p, kmax, kind, strategy);
      std::ostringstream os;
      os << "p,k,coefficient,source\n";
      for (int k = 0; k <= kmax; ++k) os << p << "," << k << "," << a[static_cast<std::size_t>(k)] << ",oracle\n";
      std::optional<std::vector<Rational>> closed;
      try {
        const auto& e = catalog_entry(label);
        if (auto it = e.closed_forms.find(kind); it != e.closed_forms.end() && it->second.is_product())
          closed = closed_form_local(it->second, p).expand(Integer(p), kmax);
      } catch (const std::out_of_range&) {
      }
      if (closed) {
        for (int k = 0; k <= kmax; ++k) {
          const auto& c = (*closed)[static_cast<std::size_t>(k)];
          os << p << "," << k << "," << to_string(c) << ",closed-form\n";
          if (c != Rational(a[static_cast<std::size_t>(k)])) failures.add("local", "k=" + std::to_string(k));
        }
      }
      emit(out_dir, "local_" + label + "_" + to_string(kind) + "_p" + std::to_string(p) + ".csv", os.str());
    } else if (*fit_cmd) {
      const auto L = load_ring(ring);
      const auto label = ring_label(L, ring);
      const auto S = oracle_local_series(L, p, kmax, kind);
      const auto r = fit_rational_local(S, parse_shape(shape_text), num_degree, margin);
      std::ostringstream os;
      os << r.certificate();
      if (r.function) {
        const auto e = r.function->expand(Integer(p), kmax);
        os << "\np,k,coefficient,source\n";
        for (int k = 0; k <= kmax; ++k) {
          os << p << "," << k << "," << to_string(S.coefficients[static_cast<std::size_t>(k)]) << ",oracle\n";
          os << p << "," << k << "," << to_string(e[static_cast<std::size_t>(k)]) << ",fit\n";
        }
      }
      emit(out_dir, "fit_" + label + "_" + to_string(kind) + "_p" + std::to_string(p) + ".txt", os.str());
      if (r.status != FitStatus::certified) failures.add("fit", to_string(r.status) + ": " + r.message);
    } else if (*compare_cmd) {
      const auto A = load_ring(ring), B = load_ring(ring2);
      const auto a = local_coefficients(A, p, kmax, kind), b = local_coefficients(B, p, kmax, kind);
      std::ostringstream os;
      os << "p,k," << ring_label(A, ring) << "," << ring_label(B, ring2) << "\n";
      for (int k = 0; k <= kmax; ++k) {
        os << p << "," << k << "," << a[static_cast<std::size_t>(k)] << "," << b[static_cast<std::size_t>(k)] << "\n";
        if (a[static_cast<std::size_t>(k)] != b[static_cast<std::size_t>(k)]) failures.add("compare", "k=" + std::to_string(k));
      }
      emit(out_dir, "compare_" + ring_label(A, ring) + "_" + ring_label(B, ring2) + ".csv", os.str());
    } else if (*cone_cmd) {
      const auto D = parse_cone(read_file(datum_file));
      const auto C = cone_from_data(D);
      const auto rays = extremal_rays(C);
      const auto inv = ray_invariants(rays, D);
      const auto dec = simplicial_decomposition(C, rays);
      const auto mono = monomial_local_factor(D);
      std::ostringstream os;
      os << "rays\n";
      for (std::size_t i = 0; i < rays.size(); ++i)
        os << "  e_" << i + 1 << " = " << to_string(rays[i]) << "  (A,B) = (" << inv.pairs[i].A << "," << inv.pairs[i].B << ")\n";
      os << "alpha = " << (inv.alpha ? to_string(*inv.alpha) : "undefined") << "\n";
      os << "pieces\n";
      for (std::size_t k = 0; k < dec.pieces.size(); ++k) {
        os << "  R_" << k << " M = {";
        for (std::size_t i = 0; i < dec.pieces[k].generators.size(); ++i)
          os << (i ? "," : "") << dec.pieces[k].generators[i] + 1;
        os << "} I = {";
        for (std::size_t i = 0; i < dec.pieces[k].support.size(); ++i)
          os << (i ? "," : "") << dec.pieces[k].support[i] + 1;
        os << "}\n";
      }
      os << "monomial factor = " << mono.to_string() << "\n";
      if (!grc_file.empty()) {
        const auto counts = parse_grc(read_file(grc_file));
        const auto good = good_prime_factor(dec, D, counts, D.dimension);
        os << "good-prime factor = " << good.to_string() << "\n";
        const bool same = good.equals_at(mono, Integer(p));
        os << "routes agree at p=" << p << ": " << (same ? "yes" : "no") << "\n";
        if (!same) failures.add("cone", "good-prime and monomial factors differ at p=" + std::to_string(p));
      }
      os << "p,k,coefficient,source\n";
      const auto e = mono.expand(Integer(p), kmax);
      for (int k = 0; k <= kmax; ++k) os << p << "," << k << "," << to_string(e[static_cast<std::size_t>(k)]) << ",closed-form\n";
      emit(out_dir, "cone_" + std::filesystem::path(datum_file).stem().string() + ".txt", os.str());
    } else if (*stanley_cmd) {
      const auto phi = parse_matrix(phi_text);
      const auto v = parse_matrix(v_text);
      if (v.size() != 1) throw UsageError("--v is a single comma-separated row");
      const auto r = stanley_series(phi, v[0], truncation);
      std::ostringstream os;
      if (r.empty) {
        os << "empty solution set: zero series\n";
      } else {
        os << "denominator:";
        for (const auto& e : r.denominator) os << " (1 - X^" << to_string(e) << ")";
        os << "\ndenominator degree = " << r.denominator_degree << "\nnumerator degree = " << r.numerator_degree
           << "\ntruncation = " << r.truncation << "\ncertified = " << (r.certified ? "yes" : "no") << "\nnumerator:\n";
        for (const auto& [e, c] : r.numerator) {
          IntRow row(e.begin(), e.end());
          os << "  " << c << " X^" << to_string(row) << "\n";
        }
      }
      emit(out_dir, "stanley.txt", os.str());
      if (!r.empty && !r.certified) failures.add("stanley", "numerator degree exceeds the certified bound");
    } else if (*integrate_cmd) {
      std::ostringstream os;
      if (!ring.empty()) {
        const auto L = load_ring(ring);
        const auto r = oracle_consistency(L, p, kmax, kind, depth_cap);
        os << r.table();
        if (!r.matching) failures.add("integrate", "no normalisation candidate matches the oracle");
        emit(out_dir, "consistency_" + ring_label(L, ring) + "_p" + std::to_string(p) + ".csv", os.str());
      } else {
        if (cint_file.empty()) throw UsageError("integrate needs --data or --ring");
        const auto D = parse_cint(read_file(cint_file));
        const int cap = depth_cap.value_or(kmax + static_cast<int>(D.variables) + 2);
        const auto I = truncated_integral(D, p, kmax, cap);
        os << "p,k,lower,upper\n";
        for (int k = 0; k <= kmax; ++k)
          os << p << "," << k << "," << to_string(I.coefficients[static_cast<std::size_t>(k)].lower) << ","
             << to_string(I.coefficients[static_cast<std::size_t>(k)].upper) << "\n";
        os << "# depth cap " << cap << ", boxes " << I.boxes << ", undetermined mass " << to_string(I.undetermined_mass)
           << "\n";
        if (!target.empty()) {
          const auto& e = catalog_entry(target);
          if (e.closed_forms.empty()) throw UsageError("catalog entry '" + target + "' has no closed form");
          const auto rep = verify_against(D, p, kmax, closed_form_local(e.closed_forms.begin()->second, p), 1, cap);
          os << rep.to_string();
          if (!rep.passed())
            failures.add("integrate", rep.first_failure ? "first failure at k=" + std::to_string(*rep.first_failure)
                                                        : "indeterminate coefficients");
        }
        emit(out_dir, "integral_" + std::filesystem::path(cint_file).stem().string() + "_p" + std::to_string(p) + ".csv",
             os.str());
      }
    } else if (*census_cmd) {
      const auto c = order_discriminant_census(field, bound);
      std::ostringstream os;
      os << "disc,orders\n";
      for (const auto& [d, n] : c.eta) os << d << "," << n << "\n";
      os << "# field discriminant " << c.discriminant << ", orders with |disc| <= " << bound << ": " << c.order_count
         << "\n# identity " << (c.identity_holds ? "holds" : "fails") << "\n";
      emit(out_dir, "census_" + std::to_string(field) + ".csv", os.str());
      for (const auto& m : c.mismatches) failures.add("census", m);
    } else if (*verify_cmd) {
      const auto checks = verify_catalog(parse_catalog_depth(depth_text));
      std::ostringstream os;
      os << "entry,check,result,detail\n";
      for (const auto& c : checks) {
        os << c.entry << "," << c.check << "," << (c.passed ? "pass" : "fail") << "," << c.detail << "\n";
        if (!c.passed) failures.add(c.entry + ":" + c.check, c.detail);
      }
      emit(out_dir, "verify_catalog.csv", os.str());
    } else if (*bounds_cmd) {
      const auto L = load_ring(ring);
      const auto label = ring_label(L, ring);
      const auto& e = catalog_entry(label);
      const auto lcs = lower_central_series(L);
      const auto a_le = e.abscissa(ClosureKind::subring), a_id = e.abscissa(ClosureKind::two_sided_ideal);
      if (!a_le || !a_id) throw UsageError("no known abscissae for '" + label + "'");
      const auto r = abscissa_bound_check(L.rank(), lcs.nilpotency_class, *a_le, *a_id);
      emit(out_dir, "bounds_" + label + ".txt", r.to_string());
      if (!r.subring_ok) failures.add("bounds", "subring abscissa bound");
      if (!r.ideal_ok) failures.add("bounds", "ideal abscissa bound");
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return failures.finish();
}
