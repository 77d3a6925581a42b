#include "aslforge/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include <omp.h>

namespace aslforge::parallel {

namespace {

std::atomic<int> g_override{0};

int env_threads() {
  const char* raw = std::getenv("ASL_FORGE_THREADS");
  if (raw == nullptr) return 0;
  try {
    int v = std::stoi(raw);
    return v > 0 ? v : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

int max_threads() {
  if (int v = g_override.load(); v > 0) return v;
  static const int from_env = env_threads();
  return from_env > 0 ? from_env : omp_get_max_threads();
}

void set_max_threads(int threads) { g_override.store(threads > 0 ? threads : 0); }

}  // namespace aslforge::parallel
