#include "zg/algebra.hpp"

#include <sstream>
#include <stdexcept>

namespace zg {

std::string to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::lie: return "lie";
    case AlgebraKind::associative: return "associative";
    case AlgebraKind::unital: return "unital";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(const std::string& text) {
  if (text == "lie") return AlgebraKind::lie;
  if (text == "associative") return AlgebraKind::associative;
  if (text == "unital") return AlgebraKind::unital;
  throw std::invalid_argument("unknown algebra kind '" + text + "'");
}

StructureConstantAlgebra::StructureConstantAlgebra(std::size_t rank, AlgebraKind kind,
                                                   const std::vector<StructureConstant>& constants,
                                                   std::optional<IntVector> identity, std::string name)
    : rank_(rank), kind_(kind), c_(rank * rank * rank, 0), identity_(std::move(identity)), name_(std::move(name)) {
  for (const auto& sc : constants) {
    if (sc.i >= rank || sc.j >= rank || sc.k >= rank) throw std::out_of_range("structure constant index out of range");
    c_[(sc.i * rank_ + sc.j) * rank_ + sc.k] += sc.value;
  }
  if (identity_ && identity_->size() != rank) throw std::invalid_argument("identity vector has wrong length");
}

StructureConstantAlgebra StructureConstantAlgebra::renamed(std::string name) const {
  StructureConstantAlgebra copy(*this);
  copy.name_ = std::move(name);
  return copy;
}

std::vector<StructureConstant> StructureConstantAlgebra::nonzero_constants() const {
  std::vector<StructureConstant> out;
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < rank_; ++k)
        if (constant(i, j, k) != 0) out.push_back({i, j, k, constant(i, j, k)});
  return out;
}

IntVector StructureConstantAlgebra::multiply(const IntVector& x, const IntVector& y) const {
  if (x.size() != rank_ || y.size() != rank_) throw std::invalid_argument("multiply: vector length mismatch");
  IntVector out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j] == 0) continue;
      Integer xy = x[i] * y[j];
      for (std::size_t k = 0; k < rank_; ++k)
        if (constant(i, j, k) != 0) out[k] += xy * constant(i, j, k);
    }
  }
  return out;
}

IntVector StructureConstantAlgebra::basis_product(std::size_t i, std::size_t j) const {
  IntVector out(rank_);
  for (std::size_t k = 0; k < rank_; ++k) out[k] = constant(i, j, k);
  return out;
}

bool StructureConstantAlgebra::has_zero_product() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool StructureConstantAlgebra::is_commutative() const {
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      for (std::size_t k = 0; k < rank_; ++k)
        if (constant(i, j, k) != constant(j, i, k)) return false;
  return true;
}

bool StructureConstantAlgebra::operator==(const StructureConstantAlgebra& other) const {
  return rank_ == other.rank_ && kind_ == other.kind_ && c_ == other.c_ && identity_ == other.identity_;
}

namespace {
std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(" << i + 1 << "," << j + 1 << "," << k + 1 << ")";
  return os.str();
}

IntVector add(IntVector a, const IntVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

bool all_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}
}  // namespace

ValidationReport validate(const StructureConstantAlgebra& L) {
  ValidationReport report;
  const std::size_t h = L.rank();
  auto e = [h](std::size_t i) { return unit_vector(h, i); };
  if (L.kind() == AlgebraKind::lie) {
    if (L.identity()) report.violations.push_back("identity given for a Lie ring");
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i; j < h; ++j)
        for (std::size_t k = 0; k < h; ++k)
          if (L.constant(i, j, k) + L.constant(j, i, k) != 0)
            report.violations.push_back("antisymmetry violation at " + triple(i, j, k));
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i + 1; j < h; ++j)
        for (std::size_t k = j + 1; k < h; ++k) {
          IntVector s = add(add(L.multiply(e(i), L.basis_product(j, k)), L.multiply(e(j), L.basis_product(k, i))),
                            L.multiply(e(k), L.basis_product(i, j)));
          if (!all_zero(s)) report.violations.push_back("Jacobi violation at " + triple(i, j, k));
        }
    return report;
  }
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t k = 0; k < h; ++k)
        if (L.multiply(L.basis_product(i, j), e(k)) != L.multiply(e(i), L.basis_product(j, k)))
          report.violations.push_back("associativity violation at " + triple(i, j, k));
  if (L.kind() == AlgebraKind::unital) {
    if (!L.identity()) {
      report.violations.push_back("unital ring without identity vector");
    } else {
      for (std::size_t j = 0; j < h; ++j) {
        if (L.multiply(*L.identity(), e(j)) != e(j))
          report.violations.push_back("identity violation: u*e" + std::to_string(j + 1) + " != e" + std::to_string(j + 1));
        if (L.multiply(e(j), *L.identity()) != e(j))
          report.violations.push_back("identity violation: e" + std::to_string(j + 1) + "*u != e" + std::to_string(j + 1));
      }
    }
  } else if (L.identity()) {
    report.violations.push_back("identity given for a non-unital ring");
  }
  return report;
}

std::optional<Integer> Sublattice::index() const {
  if (basis.rank() != basis.ambient) return std::nullopt;
  Integer idx = 1;
  for (std::size_t i = 0; i < basis.rank(); ++i) idx *= basis.rows[i][basis.pivots[i]];
  return idx;
}

Sublattice product_lattice(const StructureConstantAlgebra& L, const std::vector<IntVector>& A,
                           const std::vector<IntVector>& B) {
  std::vector<IntVector> gens;
  for (const auto& a : A)
    for (const auto& b : B) gens.push_back(L.multiply(a, b));
  return {echelon_form(std::move(gens), L.rank())};
}

LowerCentralSeries lower_central_series(const StructureConstantAlgebra& L, std::optional<int> depth_cap) {
  if (L.kind() != AlgebraKind::lie) throw std::invalid_argument("lower central series needs a Lie ring");
  const std::size_t h = L.rank();
  const int cap = depth_cap.value_or(static_cast<int>(h) + 1);
  std::vector<IntVector> all;
  for (std::size_t i = 0; i < h; ++i) all.push_back(unit_vector(h, i));
  LowerCentralSeries out;
  out.terms.push_back({echelon_form(all, h)});
  while (!out.terms.back().is_zero()) {
    if (static_cast<int>(out.terms.size()) >= cap)
      throw std::runtime_error("lower central series not terminated within depth cap " + std::to_string(cap));
    Sublattice next = product_lattice(L, out.terms.back().basis.rows, all);
    if (next.basis == out.terms.back().basis)
      throw std::runtime_error("lower central series stabilises at a nonzero term; ring is not nilpotent");
    out.terms.push_back(std::move(next));
  }
  out.nilpotency_class = static_cast<int>(out.terms.size()) - 1;
  return out;
}

CenterSaturation center_saturation(const StructureConstantAlgebra& L) {
  auto series = lower_central_series(L);
  if (series.nilpotency_class < 2) throw std::invalid_argument("center_saturation: ring is abelian");
  CenterSaturation out;
  out.nilpotency_class = series.nilpotency_class;
  out.gamma = series.terms[static_cast<std::size_t>(series.nilpotency_class - 1)];
  out.saturation = {saturation(out.gamma.basis)};
  out.gamma_rank = out.gamma.rank();
  out.index_over_gamma = relative_index(out.saturation.basis, out.gamma.basis);
  return out;
}

StructureConstantAlgebra direct_product(const StructureConstantAlgebra& a, const StructureConstantAlgebra& b) {
  if (a.kind() != b.kind()) throw std::invalid_argument("direct_product: kind mismatch");
  const std::size_t ha = a.rank();
  std::vector<StructureConstant> constants = a.nonzero_constants();
  for (auto c : b.nonzero_constants()) constants.push_back({c.i + ha, c.j + ha, c.k + ha, c.value});
  std::optional<IntVector> identity;
  if (a.kind() == AlgebraKind::unital) {
    if (!a.identity() || !b.identity()) throw std::invalid_argument("direct_product: unital factor without identity");
    identity = *a.identity();
    identity->insert(identity->end(), b.identity()->begin(), b.identity()->end());
  }
  return StructureConstantAlgebra(ha + b.rank(), a.kind(), constants, identity, a.name() + " x " + b.name());
}

StructureConstantAlgebra tensor_with_order(const StructureConstantAlgebra& L, const StructureConstantAlgebra& O) {
  if (O.kind() != AlgebraKind::unital || !O.is_commutative() || !validate(O).ok())
    throw std::invalid_argument("tensor_with_order: second factor must be commutative, associative and unital");
  const std::size_t d = O.rank();
  std::vector<StructureConstant> constants;
  for (const auto& l : L.nonzero_constants())
    for (const auto& o : O.nonzero_constants())
      constants.push_back({l.i * d + o.i, l.j * d + o.j, l.k * d + o.k, l.value * o.value});
  std::optional<IntVector> identity;
  if (L.kind() == AlgebraKind::unital && L.identity()) {
    identity = IntVector(L.rank() * d);
    for (std::size_t i = 0; i < L.rank(); ++i)
      for (std::size_t a = 0; a < d; ++a) (*identity)[i * d + a] = (*L.identity())[i] * (*O.identity())[a];
  }
  return StructureConstantAlgebra(L.rank() * d, L.kind(), constants, identity, L.name() + " (x) " + O.name());
}

namespace rings {

StructureConstantAlgebra abelian(std::size_t h) {
  return StructureConstantAlgebra(h, AlgebraKind::lie, {}, std::nullopt, "Z^" + std::to_string(h));
}

StructureConstantAlgebra heisenberg(const Integer& scale) {
  return StructureConstantAlgebra(3, AlgebraKind::lie, {{0, 1, 2, scale}, {1, 0, 2, -scale}}, std::nullopt,
                                  scale == 1 ? "H" : "H[" + scale.str() + "]");
}

StructureConstantAlgebra central_product(std::size_t m, std::size_t r) {
  const std::size_t h = 2 * m + r + 1, z = h - 1;
  std::vector<StructureConstant> constants;
  for (std::size_t i = 0; i < m; ++i) {
    constants.push_back({i, m + i, z, 1});
    constants.push_back({m + i, i, z, -1});
  }
  return StructureConstantAlgebra(h, AlgebraKind::lie, constants, std::nullopt,
                                  "G(" + std::to_string(m) + "," + std::to_string(r) + ")");
}

StructureConstantAlgebra integers() {
  return StructureConstantAlgebra(1, AlgebraKind::unital, {{0, 0, 0, 1}}, IntVector{1}, "Z");
}

StructureConstantAlgebra quadratic_order(std::int64_t k) {
  if (k == 0 || k == 1) throw std::invalid_argument("quadratic_order: k must be squarefree and != 0, 1");
  for (std::int64_t d = 2; d * d <= (k < 0 ? -k : k); ++d)
    if (k % (d * d) == 0) throw std::invalid_argument("quadratic_order: k must be squarefree");
  std::vector<StructureConstant> constants = {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}};
  if (((k % 4) + 4) % 4 == 1) {
    constants.push_back({1, 1, 0, Integer((k - 1) / 4)});
    constants.push_back({1, 1, 1, 1});
  } else {
    constants.push_back({1, 1, 0, Integer(k)});
  }
  return StructureConstantAlgebra(2, AlgebraKind::unital, constants, IntVector{1, 0}, "O(" + std::to_string(k) + ")");
}

StructureConstantAlgebra power(const StructureConstantAlgebra& L, std::size_t d) {
  if (d == 0) throw std::invalid_argument("power: d must be positive");
  StructureConstantAlgebra out = L;
  for (std::size_t i = 1; i < d; ++i) out = direct_product(out, L);
  return out.renamed(L.name() + "^" + std::to_string(d));
}

}  // namespace rings

}  // namespace zg
