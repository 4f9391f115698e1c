#include "zg/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace zg {

namespace {
std::atomic<int> explicit_limit{0};
}

int worker_count() {
  int n = omp_get_max_threads();
  if (int lim = explicit_limit.load(); lim > 0) return lim < n ? lim : n;
  if (const char* env = std::getenv("ZG_WORKERS")) {
    try {
      int lim = std::stoi(env);
      if (lim > 0 && lim < n) n = lim;
    } catch (const std::exception&) {
    }
  }
  return n;
}

void set_worker_limit(int workers) { explicit_limit.store(workers > 0 ? workers : 0); }

}  // namespace zg
