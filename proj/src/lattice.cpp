#include "zg/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace zg {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// g = x a + y b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& x, Integer& y) {
  Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r, r = tmp;
    tmp = old_s - q * s;
    old_s = s, s = tmp;
    tmp = old_t - q * t;
    old_t = t, t = tmp;
  }
  if (old_r < 0) old_r = -old_r, old_s = -old_s, old_t = -old_t;
  g = old_r, x = old_s, y = old_t;
}

void axpy(IntVector& row, const Integer& c, const IntVector& other) {
  if (c == 0) return;
  for (std::size_t i = 0; i < row.size(); ++i) row[i] += c * other[i];
}

bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

EchelonTransform echelon_with_transform(const std::vector<IntVector>& generators, std::size_t ambient) {
  const std::size_t m = generators.size();
  std::vector<IntVector> A = generators;
  for (const auto& g : A)
    if (g.size() != ambient) throw std::invalid_argument("echelon: generator length mismatch");
  std::vector<IntVector> U(m, IntVector(m, 0));
  for (std::size_t i = 0; i < m; ++i) U[i][i] = 1;

  EchelonTransform out;
  out.basis.ambient = ambient;
  std::size_t r = 0;
  for (std::size_t col = 0; col < ambient && r < m; ++col) {
    for (std::size_t i = r + 1; i < m; ++i) {
      if (A[i][col] == 0) continue;
      if (A[r][col] == 0) {
        std::swap(A[r], A[i]);
        std::swap(U[r], U[i]);
        continue;
      }
      Integer g, x, y;
      extended_gcd(A[r][col], A[i][col], g, x, y);
      Integer a = A[r][col] / g, b = A[i][col] / g;
      IntVector nr(ambient), ni(ambient), ur(m), ui(m);
      for (std::size_t c = 0; c < ambient; ++c) {
        nr[c] = x * A[r][c] + y * A[i][c];
        ni[c] = b * A[r][c] - a * A[i][c];
      }
      for (std::size_t c = 0; c < m; ++c) {
        ur[c] = x * U[r][c] + y * U[i][c];
        ui[c] = b * U[r][c] - a * U[i][c];
      }
      A[r] = std::move(nr), A[i] = std::move(ni), U[r] = std::move(ur), U[i] = std::move(ui);
    }
    if (A[r][col] == 0) continue;
    if (A[r][col] < 0) {
      for (auto& v : A[r]) v = -v;
      for (auto& v : U[r]) v = -v;
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(A[i][col], A[r][col]);
      if (q == 0) continue;
      axpy(A[i], -q, A[r]);
      axpy(U[i], -q, U[r]);
    }
    out.basis.pivots.push_back(col);
    ++r;
  }
  out.basis.rows.assign(A.begin(), A.begin() + static_cast<std::ptrdiff_t>(r));
  out.transform = std::move(U);
  return out;
}

EchelonBasis echelon_form(std::vector<IntVector> generators, std::size_t ambient) {
  std::vector<IntVector> nonzero;
  for (auto& g : generators) {
    if (g.size() != ambient) throw std::invalid_argument("echelon: generator length mismatch");
    if (!is_zero(g)) nonzero.push_back(std::move(g));
  }
  return echelon_with_transform(nonzero, ambient).basis;
}

std::optional<IntVector> coordinates(const EchelonBasis& lattice, const IntVector& x) {
  if (x.size() != lattice.ambient) throw std::invalid_argument("coordinates: length mismatch");
  IntVector residual = x, coords(lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    const auto p = lattice.pivots[i];
    for (std::size_t c = (i == 0 ? 0 : lattice.pivots[i - 1] + 1); c < p; ++c)
      if (residual[c] != 0) return std::nullopt;
    const Integer& piv = lattice.rows[i][p];
    if (residual[p] % piv != 0) return std::nullopt;
    coords[i] = residual[p] / piv;
    axpy(residual, -coords[i], lattice.rows[i]);
  }
  if (!is_zero(residual)) return std::nullopt;
  return coords;
}

bool contains(const EchelonBasis& lattice, const IntVector& x) { return coordinates(lattice, x).has_value(); }

bool contains(const EchelonBasis& outer, const EchelonBasis& inner) {
  for (const auto& r : inner.rows)
    if (!contains(outer, r)) return false;
  return true;
}

std::vector<IntVector> integer_kernel(const std::vector<IntVector>& rows, std::size_t cols) {
  const std::size_t r = rows.size();
  std::vector<IntVector> transposed(cols, IntVector(r));
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("kernel: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) transposed[j][i] = rows[i][j];
  }
  auto et = echelon_with_transform(transposed, r);
  std::vector<IntVector> kernel(et.transform.begin() + static_cast<std::ptrdiff_t>(et.basis.rank()), et.transform.end());
  return echelon_form(std::move(kernel), cols).rows;
}

EchelonBasis saturation(const EchelonBasis& lattice) {
  auto perp = integer_kernel(lattice.rows, lattice.ambient);
  return echelon_form(integer_kernel(perp, lattice.ambient), lattice.ambient);
}

std::optional<IntVector> solve_integer(const std::vector<IntVector>& rows, std::size_t cols, const IntVector& b) {
  const std::size_t r = rows.size();
  if (b.size() != r) throw std::invalid_argument("solve_integer: right-hand side length mismatch");
  std::vector<IntVector> transposed(cols, IntVector(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) transposed[j][i] = rows[i][j];
  auto et = echelon_with_transform(transposed, r);
  auto y = coordinates(et.basis, b);
  if (!y) return std::nullopt;
  IntVector x(cols, 0);
  for (std::size_t i = 0; i < y->size(); ++i) axpy(x, (*y)[i], et.transform[i]);
  return x;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[k], m[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer relative_index(const EchelonBasis& outer, const EchelonBasis& inner) {
  if (outer.rank() != inner.rank()) throw std::invalid_argument("relative_index: ranks differ");
  std::vector<std::vector<Integer>> m;
  for (const auto& r : inner.rows) {
    auto c = coordinates(outer, r);
    if (!c) throw std::invalid_argument("relative_index: inner lattice not contained in outer");
    m.push_back(*c);
  }
  Integer d = determinant(m);
  return d < 0 ? Integer(-d) : d;
}

std::size_t rank_of(const std::vector<IntVector>& rows, std::size_t cols) { return echelon_form(rows, cols).rank(); }

IntVector unit_vector(std::size_t n, std::size_t i) {
  IntVector v(n, 0);
  v.at(i) = 1;
  return v;
}

IntVector scaled(const IntVector& v, const Integer& c) {
  IntVector out(v);
  for (auto& x : out) x *= c;
  return out;
}

}  // namespace zg
