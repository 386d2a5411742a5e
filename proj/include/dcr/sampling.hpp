#pragma once

// Seeded sampling policy and a small deterministic worker pool.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

namespace dcr {

struct SamplingPolicy {
  enum class Mode { automatic, exhaustive, sampled };

  Mode mode = Mode::automatic;
  std::uint64_t seed = 1;
  std::size_t samples = 10'000;

  // automatic: exhaustive up to this many group elements, sampled above.
  static constexpr std::size_t kExhaustiveGroupOrder = 120;

  bool exhaustive_for(std::size_t group_order) const {
    if (mode == Mode::exhaustive) return true;
    if (mode == Mode::sampled) return false;
    return group_order <= kExhaustiveGroupOrder;
  }
};

std::string_view mode_name(SamplingPolicy::Mode m);

// std::mt19937_64 has a fully specified output sequence; bounded draws are
// derived from raw outputs so results do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n), n > 0, by rejection.
  std::size_t below(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

// Workers allowed by CANREP_THREADS (default: hardware concurrency).
std::size_t worker_count();

// Runs fn(i) for i in [0, n) across worker_count() threads. If any call
// throws, the exception from the smallest index is rethrown.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn) {
  const std::size_t workers = std::min(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace dcr
