#pragma once

#include <cstddef>

namespace aslforge {

/// Selects between a kernel's OpenMP path and its serial reference.
/// Both paths produce identical results; the serial one is kept for tests
/// and benchmarks.
enum class Execution { serial, parallel };

namespace parallel {

/// Thread cap for OpenMP regions. Defaults to ASL_FORGE_THREADS when set,
/// otherwise to the OpenMP runtime's maximum.
int max_threads();
/// Overrides the cap; values < 1 restore the default.
void set_max_threads(int threads);

/// Runs body(i) for i in [0, count), on the OpenMP pool when
/// exec == parallel. Each index must write only to its own output slot.
template <typename Body>
void for_each_index(std::size_t count, Execution exec, Body&& body) {
  if (exec == Execution::serial || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(max_threads())
  for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
}

}  // namespace parallel
}  // namespace aslforge
