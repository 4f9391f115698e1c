#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace zg {

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
int mobius(std::int64_t n);
std::int64_t gcd64(std::int64_t a, std::int64_t b);
bool is_squarefree(std::int64_t n);

/// Ordered factorizations n = d_1 ... d_h, lexicographic in (d_1,...,d_h).
std::vector<std::vector<std::int64_t>> ordered_factorizations(std::int64_t n, std::size_t h);

/// Number of index-n sublattices of Z^h.
std::int64_t sublattice_count(std::size_t h, std::int64_t n);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(std::int64_t a, std::int64_t n);

/// Discriminant of Q(sqrt k), k squarefree and k != 1.
std::int64_t quadratic_discriminant(std::int64_t k);

/// Valuation of n at p (n != 0).
int valuation(std::int64_t n, std::int64_t p);

}  // namespace zg
