#pragma once

// Serial/parallel execution switch for the batch kernels. The serial path is
// the reference implementation kept for testing; both paths run identical
// per-item code, so results must agree bit for bit.

#include <cstddef>

namespace swent {

enum class Exec { Serial, Parallel };

template <class F>
void parallel_for(std::size_t count, Exec exec, F&& body) {
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (long long i = 0; i < static_cast<long long>(count); ++i)
      body(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < count; ++i) body(i);
  }
}

}  // namespace swent
