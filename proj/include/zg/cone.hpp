#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zg/integer.hpp"
#include "zg/rational_function.hpp"

namespace zg {

using IntRow = std::vector<std::int64_t>;

/// Numerical cone data on an index set T of size `dimension`: multiplicities of
/// f_0..f_l and g_0..g_l along each divisor, plus the weights nu.
struct MonomialConeDatum {
  std::size_t dimension = 0;
  std::vector<IntRow> nf;  // nf[j][iota] = N_iota(f_j), j = 0..l
  std::vector<IntRow> ng;
  IntRow nu;

  std::size_t constraint_count() const { return nf.empty() ? 0 : nf.size() - 1; }
  void check() const;
};

/// { u : row . u >= 0 for every row }; the first `dimension` rows are u_i >= 0.
struct ConeInequalities {
  std::size_t dimension = 0;
  std::vector<IntRow> rows;

  bool contains(const IntRow& u) const;
};

ConeInequalities cone_from_data(const MonomialConeDatum& D);
ConeInequalities orthant_cone(std::size_t dimension, const std::vector<IntRow>& extra_rows = {});

/// Primitive generators of the extremal rays of a pointed cone, sorted in
/// decreasing lexicographic order.
std::vector<IntRow> extremal_rays(const ConeInequalities& cone);

struct RayInvariant {
  std::int64_t A = 0, B = 0;
  bool operator==(const RayInvariant&) const = default;
};

struct RayInvariants {
  std::vector<RayInvariant> pairs;
  std::optional<Rational> alpha;  // undefined when every A_j = 0
};

RayInvariants ray_invariants(const std::vector<IntRow>& rays, const MonomialConeDatum& D);

/// A relatively open simplicial cone spanned by rays[generators]; the origin has no generators.
struct ConePiece {
  std::vector<std::size_t> generators;
  std::vector<std::size_t> support;  // I_k, zero-based coordinate indices
};

enum class TriangulationOrder { forward, reverse };

struct ConeDecomposition {
  ConeInequalities cone;
  std::vector<IntRow> rays;
  std::vector<ConePiece> pieces;

  /// Index of the piece whose relative interior contains u, if any.
  std::optional<std::size_t> locate(const IntRow& u) const;
};

ConeDecomposition simplicial_decomposition(const ConeInequalities& cone, const std::vector<IntRow>& rays,
                                           TriangulationOrder order = TriangulationOrder::forward);

using Exponent = std::vector<int>;
using MultiSeries = std::map<Exponent, Integer>;

struct StanleyResult {
  std::size_t variables = 0;
  int truncation = 0;
  MultiSeries series;                 // points of total degree <= truncation
  std::vector<IntRow> denominator;    // ray generators e_j of prod (1 - X^{e_j})
  int denominator_degree = 0;
  MultiSeries numerator;              // series * denominator, truncated
  int numerator_degree = -1;          // largest total degree of a nonzero numerator term
  bool certified = false;             // numerator_degree <= truncation - denominator_degree
  bool empty = false;
};

StanleyResult stanley_series(const std::vector<IntRow>& phi, const IntRow& v, int truncation);

/// c_{p,I} as Laurent polynomials in p, keyed by bitmask of I.
struct GoodReductionCounts {
  std::map<std::uint64_t, TPPolynomial> counts;
};

/// c_{p,I} = (p-1)^{m-|I|} for the coordinate hyperplane arrangement.
GoodReductionCounts monomial_good_reduction_counts(std::size_t m);

PadicRationalFunction good_prime_factor(const ConeDecomposition& dec, const MonomialConeDatum& D,
                                        const GoodReductionCounts& counts, std::size_t m);

PadicRationalFunction monomial_local_factor(const MonomialConeDatum& D);

std::string to_string(const IntRow& v);

}  // namespace zg
