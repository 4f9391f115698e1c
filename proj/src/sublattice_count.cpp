#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

#include "zg/number_theory.hpp"
#include "zg/parallel.hpp"
#include "zg/sublattice_enum.hpp"

namespace zg {

namespace {

using i64 = std::int64_t;
using u128 = unsigned __int128;

Integer to_integer(u128 v) {
  Integer hi = static_cast<std::uint64_t>(v >> 64), lo = static_cast<std::uint64_t>(v);
  return (hi << 64) + lo;
}

i64 max_abs_constant(const StructureConstantAlgebra& L) {
  i64 m = 0;
  for (const auto& c : L.nonzero_constants()) m = std::max(m, to_int64(abs(c.value)));
  if (L.identity())
    for (const auto& u : *L.identity()) m = std::max(m, to_int64(abs(u)));
  return m;
}

// Rows are fixed from the bottom up. At level k every product whose support
// starts at column >= k can be tested, since membership of such a vector only
// involves rows k..h-1. Vectors with smaller support are left for later levels.
class PrunedSearch {
 public:
  PrunedSearch(const StructureConstantAlgebra& L, ClosureKind kind) : h_(L.rank()), terms_(h_ * h_) {
    if (kind == ClosureKind::order && L.kind() != AlgebraKind::unital)
      throw std::invalid_argument("closure kind 'order' needs a unital ring");
    subring_ = kind == ClosureKind::subring || kind == ClosureKind::order;
    left_ = kind == ClosureKind::left_ideal || kind == ClosureKind::two_sided_ideal;
    right_ = kind == ClosureKind::right_ideal || kind == ClosureKind::two_sided_ideal;
    unit_ = kind == ClosureKind::order;
    lie_ = L.kind() == AlgebraKind::lie;
    maxc_ = max_abs_constant(L);
    triangular_ = true;
    bool any = false;
    for (const auto& c : L.nonzero_constants()) {
      terms_[c.i * h_ + c.j].push_back({c.k, to_int64(c.value)});
      any = true;
      if (c.k <= std::max(c.i, c.j)) triangular_ = false;
    }
    if (!any) subring_ = left_ = right_ = false;
    if (unit_)
      for (const auto& x : *L.identity()) u_.push_back(to_int64(x));
    level0_free_ = !subring_ && !left_ && !right_ && !unit_;
  }

  void check_range(i64 n) const {
    const long double bound = static_cast<long double>(h_) * h_ * std::max<i64>(maxc_, 1) * n * n * n;
    if (bound > static_cast<long double>(std::numeric_limits<i64>::max() / 4))
      throw std::overflow_error("pruned search: index too large for 64-bit kernels");
  }

  Integer count(i64 n) const {
    check_range(n);
    const auto shapes = ordered_factorizations(n, h_);
    std::vector<u128> partial(shapes.size(), 0);
    const long long items = static_cast<long long>(shapes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (long long s = 0; s < items; ++s) {
      State st(h_);
      u128 total = 0;
      auto leaf = [&total](const State&, u128 box) { total += box; };
      descend(st, shapes[s], static_cast<long>(h_) - 1, leaf, true);
      partial[s] = total;
    }
    u128 sum = 0;
    for (auto v : partial) sum += v;
    return to_integer(sum);
  }

  void enumerate(i64 n, const std::function<void(const HermiteMatrix&)>& visit) const {
    check_range(n);
    for (const auto& d : ordered_factorizations(n, h_)) {
      std::vector<std::vector<i64>> found;
      State st(h_);
      auto leaf = [&found](const State& s, u128) { found.push_back(s.m); };
      descend(st, d, static_cast<long>(h_) - 1, leaf, false);
      std::sort(found.begin(), found.end());
      for (auto& m : found) visit(HermiteMatrix(h_, std::move(m)));
    }
  }

 private:
  struct Term {
    std::size_t k;
    i64 c;
  };
  struct State {
    explicit State(std::size_t h) : m(h * h, 0), x(h, 0) {}
    std::vector<i64> m;
    std::vector<i64> x;
  };

  std::size_t support(const std::vector<i64>& x) const {
    for (std::size_t j = 0; j < h_; ++j)
      if (x[j] != 0) return j;
    return h_;
  }

  // x is consumed.
  bool member(const std::vector<i64>& m, std::vector<i64>& x, std::size_t from) const {
    for (std::size_t j = from; j < h_; ++j) {
      if (x[j] == 0) continue;
      const i64 d = m[j * h_ + j];
      if (x[j] % d != 0) return false;
      const i64 q = x[j] / d;
      for (std::size_t c = j; c < h_; ++c) x[c] -= q * m[j * h_ + c];
    }
    return true;
  }

  void product(const i64* a, const i64* b, std::vector<i64>& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < h_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < h_; ++j) {
        if (b[j] == 0) continue;
        const i64 ab = a[i] * b[j];
        for (const auto& t : terms_[i * h_ + j]) out[t.k] += ab * t.c;
      }
    }
  }

  // e_c * a (left) or a * e_c
  void basis_product(std::size_t c, const i64* a, bool left, std::vector<i64>& out) const {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t j = 0; j < h_; ++j) {
      if (a[j] == 0) continue;
      for (const auto& t : terms_[left ? c * h_ + j : j * h_ + c]) out[t.k] += a[j] * t.c;
    }
  }

  bool test(State& s, std::size_t k) const {
    const std::size_t sp = support(s.x);
    if (sp < k || sp == h_) return true;
    return member(s.m, s.x, sp);
  }

  bool checks(State& s, std::size_t k) const {
    const i64* m = s.m.data();
    if (subring_) {
      for (std::size_t a = k; a < h_; ++a)
        for (std::size_t b = lie_ ? a + 1 : k; b < h_; ++b) {
          if (triangular_ && a != k && b != k) continue;
          product(m + a * h_, m + b * h_, s.x);
          if (!test(s, k)) return false;
        }
    }
    if (left_ || right_) {
      for (std::size_t c = 0; c < h_; ++c)
        for (std::size_t b = k; b < h_; ++b) {
          if (triangular_ && b != k) continue;
          if (left_) {
            basis_product(c, m + b * h_, true, s.x);
            if (!test(s, k)) return false;
          }
          if (right_ && !(lie_ && left_)) {
            basis_product(c, m + b * h_, false, s.x);
            if (!test(s, k)) return false;
          }
        }
    }
    if (unit_) {
      s.x = u_;
      if (!test(s, k)) return false;
    }
    return true;
  }

  template <class Leaf>
  void descend(State& s, const std::vector<i64>& d, long k, Leaf& leaf, bool batch) const {
    if (k < 0) {
      leaf(s, 1);
      return;
    }
    const std::size_t r = static_cast<std::size_t>(k);
    i64* row = s.m.data() + r * h_;
    row[r] = d[r];
    for (std::size_t j = r + 1; j < h_; ++j) row[j] = 0;
    if (r == 0 && batch && level0_free_) {
      u128 box = 1;
      for (std::size_t j = 1; j < h_; ++j) box *= static_cast<u128>(d[j]);
      leaf(s, box);
      return;
    }
    while (true) {
      if (checks(s, r)) descend(s, d, k - 1, leaf, batch);
      bool advanced = false;
      std::size_t j = h_;
      while (j > r + 1) {
        --j;
        if (++row[j] < d[j]) {
          advanced = true;
          break;
        }
        row[j] = 0;
      }
      if (!advanced) break;
    }
    for (std::size_t j = r + 1; j < h_; ++j) row[j] = 0;
  }

  std::size_t h_;
  std::vector<std::vector<Term>> terms_;
  std::vector<i64> u_;
  i64 maxc_ = 0;
  bool subring_ = false, left_ = false, right_ = false, unit_ = false, lie_ = false;
  bool triangular_ = false, level0_free_ = false;
};

// Sublattices of Z^e containing n2 Z^e, kept in canonical Hermite form.
struct ModLattice {
  static constexpr std::size_t kMax = 4;
  std::size_t e = 0;
  i64 n2 = 1;
  std::array<i64, kMax * kMax> H{};

  void init(std::size_t dim, i64 modulus) {
    e = dim, n2 = modulus;
    H.fill(0);
    for (std::size_t i = 0; i < e; ++i) H[i * kMax + i] = n2;
  }

  static i64 mod(i64 a, i64 m) {
    a %= m;
    return a < 0 ? a + m : a;
  }

  static void ext_gcd(i64 a, i64 b, i64& g, i64& x, i64& y) {
    i64 r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (r1 != 0) {
      i64 q = r0 / r1, tmp = r0 - q * r1;
      r0 = r1, r1 = tmp;
      tmp = s0 - q * s1, s0 = s1, s1 = tmp;
      tmp = t0 - q * t1, t0 = t1, t1 = tmp;
    }
    if (r0 < 0) r0 = -r0, s0 = -s0, t0 = -t0;
    g = r0, x = s0, y = t0;
  }

  void insert(const i64* v) {
    std::array<i64, kMax> w{};
    for (std::size_t t = 0; t < e; ++t) w[t] = mod(v[t], n2);
    for (std::size_t j = 0; j < e; ++j) {
      if (w[j] == 0) continue;
      i64* hj = &H[j * kMax];
      const i64 a = hj[j], b = w[j];
      if (b % a == 0) {
        const i64 q = b / a;
        for (std::size_t c = j; c < e; ++c) w[c] = mod(w[c] - q * hj[c], n2);
        continue;
      }
      i64 g, x, y;
      ext_gcd(a, b, g, x, y);
      const i64 ag = a / g, bg = b / g;
      for (std::size_t c = j; c < e; ++c) {
        const i64 nr = mod(x * hj[c] + y * w[c], n2);
        const i64 nw = mod(bg * hj[c] - ag * w[c], n2);
        hj[c] = nr, w[c] = nw;
      }
      hj[j] = g;
    }
  }

  bool is_full() const {
    for (std::size_t i = 0; i < e; ++i)
      if (H[i * kMax + i] != 1) return false;
    return true;
  }

  void canonicalize() {
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = i + 1; j < e; ++j) {
        const i64 d = H[j * kMax + j];
        i64 v = H[i * kMax + j];
        i64 q = v / d;
        if (v % d != 0 && v < 0) --q;
        if (q == 0) continue;
        for (std::size_t c = j; c < e; ++c) H[i * kMax + c] -= q * H[j * kMax + c];
      }
  }

  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < e; ++i)
      for (std::size_t j = i; j < e; ++j) k = k * static_cast<std::uint64_t>(n2 + 1) + static_cast<std::uint64_t>(H[i * kMax + j]);
    return k;
  }
};

// Class-2 Lie rings: with Z the saturation of [L,L], a sublattice is the
// choice of its image B in L/Z, its intersection C with Z and a lift, and it
// is closed iff C contains [B,B] (subrings) or [L,B] (ideals).
class CentralCounter {
 public:
  CentralCounter(const StructureConstantAlgebra& L, ClosureKind kind) {
    if (L.kind() != AlgebraKind::lie) throw std::invalid_argument("central strategy needs a Lie ring");
    if (kind == ClosureKind::order || kind == ClosureKind::subgroup)
      throw std::invalid_argument("central strategy supports subring and ideal kinds only");
    ideal_ = kind != ClosureKind::subring;
    const auto cs = center_saturation(L);
    if (cs.nilpotency_class != 2) throw std::invalid_argument("central strategy needs nilpotency class 2");
    const std::size_t h = L.rank();
    e_ = cs.saturation.rank();
    q_ = h - e_;
    if (e_ > ModLattice::kMax) throw std::invalid_argument("central strategy: centre rank too large");
    const auto& zb = cs.saturation.basis;
    const auto perp = integer_kernel(zb.rows, h);
    std::vector<IntVector> lifts;
    for (std::size_t a = 0; a < q_; ++a) {
      IntVector target(q_, 0);
      target[a] = 1;
      auto f = solve_integer(perp, h, target);
      if (!f) throw std::logic_error("central strategy: quotient map not surjective");
      lifts.push_back(*f);
    }
    beta_.assign(q_ * q_ * e_, 0);
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t b = 0; b < q_; ++b) {
        auto c = coordinates(zb, L.multiply(lifts[a], lifts[b]));
        if (!c) throw std::logic_error("central strategy: bracket outside the saturated centre");
        for (std::size_t t = 0; t < e_; ++t) beta_[(a * q_ + b) * e_ + t] = to_int64((*c)[t]);
      }
  }

  std::size_t quotient_rank() const { return q_; }
  std::size_t centre_rank() const { return e_; }

  Integer count(i64 n) const {
    Integer total = 0;
    for (i64 n1 : divisors(n)) {
      const i64 n2 = n / n1;
      if (n2 == 1) {
        total += sublattice_count(q_, n1);
        continue;
      }
      total += ipow(Integer(n2), static_cast<unsigned>(q_)) * sum_over_quotient(n1, n2);
    }
    return total;
  }

 private:
  struct Cache {
    std::unordered_map<std::uint64_t, i64> memo;
  };

  struct Walk {
    std::vector<i64> b;   // q x q rows of B
    std::vector<i64> mj;  // per row: q x e, M_j[a] = [f_a, b_j]
    std::vector<ModLattice> lat;  // lattice after rows >= i are placed, index i; lat[q] is n2 Z^e
    std::vector<i64> gen;
  };

  i64 containing_count(const ModLattice& lat, const std::vector<std::vector<i64>>& candidates) const {
    i64 c = 0;
    for (const auto& C : candidates) {
      bool ok = true;
      for (std::size_t r = 0; r < e_ && ok; ++r) {
        std::array<i64, ModLattice::kMax> x{};
        for (std::size_t t = 0; t < e_; ++t) x[t] = lat.H[r * ModLattice::kMax + t];
        for (std::size_t j = 0; j < e_ && ok; ++j) {
          if (x[j] == 0) continue;
          const i64 d = C[j * e_ + j];
          if (x[j] % d != 0) {
            ok = false;
            break;
          }
          const i64 qd = x[j] / d;
          for (std::size_t t = j; t < e_; ++t) x[t] -= qd * C[j * e_ + t];
        }
      }
      c += ok;
    }
    return c;
  }

  i64 sum_over_quotient(i64 n1, i64 n2) const {
    std::vector<std::vector<i64>> candidates;
    for_each_hnf(e_, n2, [&](const HermiteMatrix& C) { candidates.push_back(C.entries()); });
    const auto shapes = ordered_factorizations(n1, q_);
    std::vector<i64> partial(shapes.size(), 0);
    const int workers = worker_count();
    std::vector<Cache> caches(static_cast<std::size_t>(workers));
    const long long items = static_cast<long long>(shapes.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
    for (long long s = 0; s < items; ++s) {
      Cache& cache = caches[static_cast<std::size_t>(omp_get_thread_num())];
      Walk w;
      w.b.assign(q_ * q_, 0);
      w.mj.assign(q_ * q_ * e_, 0);
      w.lat.resize(q_ + 1);
      w.lat[q_].init(e_, n2);
      w.gen.assign(e_, 0);
      i64 total = 0;
      walk(w, shapes[s], static_cast<long>(q_) - 1, cache, candidates, total);
      partial[s] = total;
    }
    i64 sum = 0;
    for (auto v : partial) sum += v;
    return sum;
  }

  void place_row(Walk& w, std::size_t i) const {
    const i64* bi = &w.b[i * q_];
    i64* mi = &w.mj[i * q_ * e_];
    for (std::size_t a = 0; a < q_; ++a)
      for (std::size_t t = 0; t < e_; ++t) {
        i64 s = 0;
        for (std::size_t c = 0; c < q_; ++c)
          if (bi[c]) s += bi[c] * beta_[(a * q_ + c) * e_ + t];
        mi[a * e_ + t] = s;
      }
    ModLattice lat = w.lat[i + 1];
    if (ideal_) {
      for (std::size_t a = 0; a < q_; ++a) lat.insert(mi + a * e_);
    } else {
      for (std::size_t j = i + 1; j < q_; ++j) {
        const i64* mjr = &w.mj[j * q_ * e_];
        // [b_i, b_j] = sum_a b_i[a] [f_a, b_j]
        for (std::size_t t = 0; t < e_; ++t) {
          i64 s = 0;
          for (std::size_t a = 0; a < q_; ++a)
            if (bi[a]) s += bi[a] * mjr[a * e_ + t];
          w.gen[t] = s;
        }
        lat.insert(w.gen.data());
      }
    }
    w.lat[i] = lat;
  }

  void walk(Walk& w, const std::vector<i64>& d, long k, Cache& cache,
            const std::vector<std::vector<i64>>& candidates, i64& total) const {
    if (k < 0) {
      ModLattice lat = w.lat[0];
      lat.canonicalize();
      const auto key = lat.key();
      auto it = cache.memo.find(key);
      if (it == cache.memo.end()) it = cache.memo.emplace(key, containing_count(lat, candidates)).first;
      total += it->second;
      return;
    }
    const std::size_t r = static_cast<std::size_t>(k);
    i64* row = &w.b[r * q_];
    row[r] = d[r];
    for (std::size_t j = r + 1; j < q_; ++j) row[j] = 0;
    while (true) {
      place_row(w, r);
      if (!w.lat[r].is_full()) walk(w, d, k - 1, cache, candidates, total);
      std::size_t j = q_;
      bool advanced = false;
      while (j > r + 1) {
        --j;
        if (++row[j] < d[j]) {
          advanced = true;
          break;
        }
        row[j] = 0;
      }
      if (!advanced) break;
    }
  }

  std::size_t q_ = 0, e_ = 0;
  bool ideal_ = false;
  std::vector<i64> beta_;
};

Integer reference_count(const StructureConstantAlgebra& L, i64 n, ClosureKind kind) {
  Integer c = 0;
  for_each_hnf(L.rank(), n, [&](const HermiteMatrix& M) {
    if (is_closed(L, M, kind)) ++c;
  });
  return c;
}

bool central_applies(const StructureConstantAlgebra& L, ClosureKind kind) {
  if (L.kind() != AlgebraKind::lie || kind == ClosureKind::order || kind == ClosureKind::subgroup) return false;
  if (L.has_zero_product()) return false;
  try {
    auto series = lower_central_series(L);
    if (series.nilpotency_class != 2) return false;
    return saturation(series.terms[1].basis).rank() <= ModLattice::kMax;
  } catch (const std::runtime_error&) {
    return false;
  }
}

}  // namespace

Integer count(const StructureConstantAlgebra& L, std::int64_t n, ClosureKind kind, CountStrategy strategy) {
  if (n < 1) throw std::invalid_argument("count: n must be positive");
  if (kind == ClosureKind::order && L.kind() != AlgebraKind::unital)
    throw std::invalid_argument("closure kind 'order' needs a unital ring");
  switch (strategy) {
    case CountStrategy::reference: return reference_count(L, n, kind);
    case CountStrategy::pruned: return PrunedSearch(L, kind).count(n);
    case CountStrategy::central: return CentralCounter(L, kind).count(n);
    case CountStrategy::automatic: break;
  }
  if (kind == ClosureKind::subgroup) return Integer(sublattice_count(L.rank(), n));
  if (central_applies(L, kind)) return CentralCounter(L, kind).count(n);
  return PrunedSearch(L, kind).count(n);
}

std::vector<Integer> count_range(const StructureConstantAlgebra& L, std::int64_t nmax, ClosureKind kind,
                                 CountStrategy strategy) {
  std::vector<Integer> out;
  if (strategy == CountStrategy::automatic && kind != ClosureKind::subgroup && central_applies(L, kind)) {
    CentralCounter cc(L, kind);
    for (i64 n = 1; n <= nmax; ++n) out.push_back(cc.count(n));
    return out;
  }
  if (strategy == CountStrategy::pruned ||
      (strategy == CountStrategy::automatic && kind != ClosureKind::subgroup)) {
    PrunedSearch ps(L, kind);
    for (i64 n = 1; n <= nmax; ++n) out.push_back(ps.count(n));
    return out;
  }
  for (i64 n = 1; n <= nmax; ++n) out.push_back(count(L, n, kind, strategy));
  return out;
}

std::vector<Integer> local_coefficients(const StructureConstantAlgebra& L, std::int64_t p, int kmax, ClosureKind kind,
                                        CountStrategy strategy) {
  if (!is_prime(p)) throw std::invalid_argument("local_coefficients: p must be prime");
  if (kmax < 0) throw std::invalid_argument("local_coefficients: kmax must be non-negative");
  std::vector<Integer> out{1};
  i64 pk = 1;
  for (int k = 1; k <= kmax; ++k) {
    pk *= p;
    out.push_back(count(L, pk, kind, strategy));
  }
  return out;
}

void for_each_closed(const StructureConstantAlgebra& L, std::int64_t n, ClosureKind kind,
                     const std::function<void(const HermiteMatrix&)>& visit) {
  PrunedSearch(L, kind).enumerate(n, visit);
}

}  // namespace zg
