#pragma once

#include <cstddef>
#include <functional>

namespace pseudogas {

/// Worker count from PSEUDOGAS_THREADS, else the hardware concurrency.
/// The value only affects speed; every parallel reduction in the library
/// merges per-unit results in unit order.
unsigned default_worker_count();

/// Runs body(i) for i in [0, units) on up to `workers` threads (0 = default).
void parallel_for(std::size_t units, unsigned workers,
                  const std::function<void(std::size_t)>& body);

}  // namespace pseudogas
