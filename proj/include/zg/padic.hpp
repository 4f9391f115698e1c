#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zg/algebra.hpp"
#include "zg/integer.hpp"
#include "zg/polynomial.hpp"
#include "zg/rational_function.hpp"
#include "zg/sublattice_enum.hpp"

namespace zg {

/// Z_D(s) = integral of |f_0|^s |g_0| over { x in Z_p^m : ord f_i(x) <= ord g_i(x) for all i }.
struct ConeIntegralData {
  std::size_t variables = 0;
  Polynomial f0, g0;
  std::vector<std::pair<Polynomial, Polynomial>> conditions;

  void check() const;
};

struct CoefficientInterval {
  Rational lower, upper;
  bool pinned() const { return lower == upper; }
};

struct TruncatedLocalIntegral {
  Integer p;
  int kmax = 0;
  int depth_cap = 0;
  std::vector<CoefficientInterval> coefficients;  // coefficient of p^{-ks}, k = 0..kmax
  Rational window_mass, beyond_mass, excluded_mass, undetermined_mass;
  std::uint64_t boxes = 0;

  bool exhausted() const { return undetermined_mass != 0; }
  Rational total_mass() const { return window_mass + beyond_mass + excluded_mass + undetermined_mass; }
};

/// Residue-box evaluation with per-variable refinement up to precision p^{depth_cap}.
TruncatedLocalIntegral truncated_integral(const ConeIntegralData& D, std::int64_t p, int kmax, int depth_cap);

enum class CoefficientVerdict { pass, indeterminate, fail };
std::string to_string(CoefficientVerdict v);

struct VerificationReport {
  std::vector<Rational> expected;
  std::vector<CoefficientInterval> normalized;  // integral divided by a_{p,0}
  std::vector<CoefficientVerdict> verdicts;
  std::optional<int> first_failure;

  bool passed() const;
  std::string to_string() const;
};

VerificationReport verify_against(const ConeIntegralData& D, std::int64_t p, int kmax,
                                  const PadicRationalFunction& target, const Rational& normalization = 1,
                                  std::optional<int> depth_cap = std::nullopt);

/// Triangular-matrix integrand whose cone integral gives the local zeta function of L.
ConeIntegralData lattice_integrand(const StructureConstantAlgebra& L, ClosureKind kind);

struct NormalizationCandidate {
  std::string name;
  Rational constant;
  std::vector<CoefficientInterval> predicted;  // constant * p^{kh} * I_k
  bool matches = false;
};

struct ConsistencyReport {
  std::vector<Integer> oracle;
  TruncatedLocalIntegral integral;
  std::vector<NormalizationCandidate> candidates;
  std::optional<std::string> matching;

  std::string table() const;
};

ConsistencyReport oracle_consistency(const StructureConstantAlgebra& L, std::int64_t p, int kmax, ClosureKind kind,
                                     std::optional<int> depth_cap = std::nullopt);

}  // namespace zg
