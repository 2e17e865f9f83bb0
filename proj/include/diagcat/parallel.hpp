#ifndef DIAGCAT_PARALLEL_HPP
#define DIAGCAT_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace diagcat {

/// Worker count: DIAGCAT_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned thread_count();

/// Runs body(i) for i in [0, count) on thread_count() workers. Callers write
/// results into per-index slots, so aggregation order is fixed. The first
/// exception thrown by any body is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace diagcat

#endif // DIAGCAT_PARALLEL_HPP
