#include "dcr/sampling.hpp"

#include <cstdlib>
#include <limits>

namespace dcr {

std::string_view mode_name(SamplingPolicy::Mode m) {
  switch (m) {
    case SamplingPolicy::Mode::automatic: return "automatic";
    case SamplingPolicy::Mode::exhaustive: return "exhaustive";
    case SamplingPolicy::Mode::sampled: return "sampled";
  }
  return "?";
}

std::size_t Rng::below(std::size_t n) {
  const std::uint64_t bound = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("CANREP_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && v >= 1) n = std::min<std::size_t>(n, v);
  }
  return n;
}

}  // namespace dcr
