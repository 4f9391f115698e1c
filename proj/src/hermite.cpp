#include <sstream>
#include <stdexcept>

#include "zg/number_theory.hpp"
#include "zg/sublattice_enum.hpp"

namespace zg {

HermiteMatrix::HermiteMatrix(std::size_t h, std::vector<std::int64_t> entries) : h_(h), m_(std::move(entries)) {
  if (m_.size() != h * h) throw std::invalid_argument("HermiteMatrix: expected h*h entries");
  for (std::size_t i = 0; i < h; ++i) {
    if (m_[i * h + i] < 1) throw std::invalid_argument("HermiteMatrix: diagonal entries must be positive");
    for (std::size_t j = 0; j < i; ++j)
      if (m_[i * h + j] != 0) throw std::invalid_argument("HermiteMatrix: not upper triangular");
    for (std::size_t j = i + 1; j < h; ++j)
      if (m_[i * h + j] < 0 || m_[i * h + j] >= m_[j * h + j])
        throw std::invalid_argument("HermiteMatrix: off-diagonal entry not reduced modulo its column pivot");
  }
}

HermiteMatrix HermiteMatrix::identity(std::size_t h) {
  std::vector<std::int64_t> e(h * h, 0);
  for (std::size_t i = 0; i < h; ++i) e[i * h + i] = 1;
  return HermiteMatrix(h, std::move(e));
}

IntVector HermiteMatrix::row(std::size_t i) const {
  IntVector r(h_);
  for (std::size_t j = 0; j < h_; ++j) r[j] = m_[i * h_ + j];
  return r;
}

std::vector<IntVector> HermiteMatrix::rows() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < h_; ++i) out.push_back(row(i));
  return out;
}

std::vector<std::int64_t> HermiteMatrix::diagonal() const {
  std::vector<std::int64_t> d(h_);
  for (std::size_t i = 0; i < h_; ++i) d[i] = m_[i * h_ + i];
  return d;
}

Integer HermiteMatrix::index() const {
  Integer idx = 1;
  for (auto d : diagonal()) idx *= d;
  return idx;
}

bool HermiteMatrix::contains(const IntVector& x) const {
  if (x.size() != h_) throw std::invalid_argument("HermiteMatrix::contains: length mismatch");
  IntVector r = x;
  for (std::size_t j = 0; j < h_; ++j) {
    if (r[j] == 0) continue;
    const std::int64_t d = m_[j * h_ + j];
    if (r[j] % d != 0) return false;
    Integer q = r[j] / d;
    for (std::size_t c = j; c < h_; ++c) r[c] -= q * m_[j * h_ + c];
  }
  return true;
}

std::string HermiteMatrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < h_; ++i) {
    os << (i ? ";" : "");
    for (std::size_t j = 0; j < h_; ++j) os << (j ? "," : "") << m_[i * h_ + j];
  }
  return os.str();
}

std::string to_string(ClosureKind kind) {
  switch (kind) {
    case ClosureKind::subgroup: return "subgroup";
    case ClosureKind::subring: return "subring";
    case ClosureKind::left_ideal: return "left-ideal";
    case ClosureKind::right_ideal: return "right-ideal";
    case ClosureKind::two_sided_ideal: return "two-sided-ideal";
    case ClosureKind::order: return "order";
  }
  return "?";
}

ClosureKind parse_closure_kind(const std::string& text) {
  if (text == "subgroup") return ClosureKind::subgroup;
  if (text == "subring") return ClosureKind::subring;
  if (text == "left-ideal") return ClosureKind::left_ideal;
  if (text == "right-ideal") return ClosureKind::right_ideal;
  if (text == "two-sided-ideal" || text == "ideal") return ClosureKind::two_sided_ideal;
  if (text == "order") return ClosureKind::order;
  throw std::invalid_argument("unknown closure kind '" + text + "'");
}

std::string to_string(CountStrategy s) {
  switch (s) {
    case CountStrategy::automatic: return "automatic";
    case CountStrategy::reference: return "reference";
    case CountStrategy::pruned: return "pruned";
    case CountStrategy::central: return "central";
  }
  return "?";
}

CountStrategy parse_count_strategy(const std::string& text) {
  if (text == "automatic") return CountStrategy::automatic;
  if (text == "reference") return CountStrategy::reference;
  if (text == "pruned") return CountStrategy::pruned;
  if (text == "central") return CountStrategy::central;
  throw std::invalid_argument("unknown count strategy '" + text + "'");
}

void for_each_hnf(std::size_t h, std::int64_t n, const std::function<void(const HermiteMatrix&)>& visit) {
  if (h < 1 || n < 1) throw std::invalid_argument("for_each_hnf: need h >= 1 and n >= 1");
  // off-diagonal positions in row-major order; the last one varies fastest
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < h; ++i)
    for (std::size_t j = i + 1; j < h; ++j) slots.emplace_back(i, j);
  for (const auto& d : ordered_factorizations(n, h)) {
    std::vector<std::int64_t> m(h * h, 0);
    for (std::size_t i = 0; i < h; ++i) m[i * h + i] = d[i];
    while (true) {
      visit(HermiteMatrix(h, m));
      std::size_t s = slots.size();
      while (s > 0) {
        auto [i, j] = slots[s - 1];
        if (++m[i * h + j] < d[j]) break;
        m[i * h + j] = 0;
        --s;
      }
      if (s == 0) break;
    }
  }
}

std::vector<HermiteMatrix> enumerate_hnf(std::size_t h, std::int64_t n) {
  std::vector<HermiteMatrix> out;
  for_each_hnf(h, n, [&](const HermiteMatrix& M) { out.push_back(M); });
  return out;
}

bool is_closed(const StructureConstantAlgebra& L, const HermiteMatrix& M, ClosureKind kind) {
  const std::size_t h = L.rank();
  if (M.size() != h) throw std::invalid_argument("is_closed: matrix size differs from ring rank");
  if (kind == ClosureKind::order && L.kind() != AlgebraKind::unital)
    throw std::invalid_argument("closure kind 'order' needs a unital ring");
  if (kind == ClosureKind::subgroup) return true;
  const auto rows = M.rows();
  if (kind == ClosureKind::subring || kind == ClosureKind::order) {
    for (const auto& a : rows)
      for (const auto& b : rows)
        if (!M.contains(L.multiply(a, b))) return false;
    if (kind == ClosureKind::order && !M.contains(*L.identity())) return false;
    return true;
  }
  const bool left = kind == ClosureKind::left_ideal || kind == ClosureKind::two_sided_ideal;
  const bool right = kind == ClosureKind::right_ideal || kind == ClosureKind::two_sided_ideal;
  for (std::size_t c = 0; c < h; ++c) {
    const IntVector e = unit_vector(h, c);
    for (const auto& b : rows) {
      if (left && !M.contains(L.multiply(e, b))) return false;
      if (right && !M.contains(L.multiply(b, e))) return false;
    }
  }
  return true;
}

}  // namespace zg
