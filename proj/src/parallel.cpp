#include "lieforge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace lieforge::par {

namespace {

std::atomic<int> g_enabled{-1};  // -1 = read env on first use

bool env_serial() {
  const char* v = std::getenv("LIEFORGE_SERIAL");
  return v != nullptr && std::strcmp(v, "0") != 0;
}

}  // namespace

bool enabled() {
  int s = g_enabled.load(std::memory_order_relaxed);
  if (s == -1) {
    s = env_serial() ? 0 : 1;
    g_enabled.store(s, std::memory_order_relaxed);
  }
  return s == 1;
}

void set_enabled(bool on) {
  g_enabled.store(on ? 1 : 0, std::memory_order_relaxed);
}

int worker_count() {
#ifdef _OPENMP
  if (enabled()) return omp_get_max_threads();
#endif
  return 1;
}

}  // namespace lieforge::par
