#pragma once

namespace zg {

/// Worker count for parallel kernels: explicit limit if set, else ZG_WORKERS, else the OpenMP default.
int worker_count();
/// 0 clears the limit.
void set_worker_limit(int workers);

}  // namespace zg
