#include "zg/number_theory.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace zg {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 2) return out;
  std::vector<bool> sieve(static_cast<std::size_t>(n + 1), true);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) sieve[j] = false;
  }
  return out;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) n /= d, ++e;
    if (e) out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

int mobius(std::int64_t n) {
  int sign = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = std::llabs(a), b = std::llabs(b);
  while (b) std::swap(a %= b, b);
  return a;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  return mobius(std::llabs(n)) != 0;
}

namespace {
void factorizations_rec(std::int64_t n, std::size_t slots, std::vector<std::int64_t>& cur,
                        std::vector<std::vector<std::int64_t>>& out) {
  if (slots == 1) {
    cur.push_back(n);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (auto d : divisors(n)) {
    cur.push_back(d);
    factorizations_rec(n / d, slots - 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<std::int64_t>> ordered_factorizations(std::int64_t n, std::size_t h) {
  if (h == 0 || n < 1) throw std::invalid_argument("ordered_factorizations: need h >= 1, n >= 1");
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  factorizations_rec(n, h, cur, out);
  return out;
}

std::int64_t sublattice_count(std::size_t h, std::int64_t n) {
  std::int64_t total = 0;
  for (const auto& d : ordered_factorizations(n, h)) {
    std::int64_t term = 1;
    for (std::size_t j = 0; j < h; ++j)
      for (std::size_t r = 0; r < j; ++r) term *= d[j];
    total += term;
  }
  return total;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    std::int64_t r = ((a % 8) + 8) % 8;
    if (r == 0 || r == 2 || r == 4 || r == 6) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol (a/n) for odd n.
  a %= n;
  if (a < 0) a += n;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      std::int64_t r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

std::int64_t quadratic_discriminant(std::int64_t k) {
  if (k == 0 || k == 1 || !is_squarefree(k)) throw std::invalid_argument("quadratic field needs squarefree k != 0, 1");
  std::int64_t r = ((k % 4) + 4) % 4;
  return r == 1 ? k : 4 * k;
}

int valuation(std::int64_t n, std::int64_t p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  int v = 0;
  while (n % p == 0) n /= p, ++v;
  return v;
}

}  // namespace zg
