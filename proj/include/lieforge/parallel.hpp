#pragma once

#include <cstddef>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lieforge::par {

// OpenMP is on by default when compiled in; LIEFORGE_SERIAL=1 or
// set_enabled(false) forces the serial path everywhere.
bool enabled();
void set_enabled(bool on);
int worker_count();

// Parallel loop over [0, n). The body must only touch per-index state; the
// first exception thrown is rethrown after the loop completes.
template <typename Fn>
void for_each_index(std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  if (enabled() && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical(lieforge_par_err)
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace lieforge::par
