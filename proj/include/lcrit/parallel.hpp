#pragma once

// Minimal fork-join helper for embarrassingly parallel sweeps.
//
// Every computation in this library is a pure function of its arguments, so
// sweeps parallelize by index with no shared mutable state: workers write
// results into pre-sized slots and any reduction happens serially afterwards.
// Outputs are therefore identical for every thread count.
//
// The environment variable LCRIT_THREADS caps the worker count (default:
// hardware concurrency).

#include <cstddef>
#include <functional>

namespace lcrit {

// Worker cap: max(1, min(hardware_concurrency, LCRIT_THREADS)).  Read once.
std::size_t thread_budget();

// Calls fn(i) for i in [0, n), possibly from several threads.  fn must not
// touch shared mutable state except its own result slot.  Exceptions from
// workers are rethrown (one of them) on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace lcrit
