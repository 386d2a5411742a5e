#include <atomic>
#include <cstdlib>
#include <string>

#include "dcr/error.hpp"
#include "dcr/kernels.hpp"

namespace dcr::kernels {

namespace {

Backend detect() {
  if (const char* env = std::getenv("CANREP_SIMD")) {
    const std::string v = env;
    if (v == "off" || v == "scalar" || v == "0") return Backend::scalar;
  }
  return avx2_available() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
  }
  return "unknown";
}

bool avx2_available() {
#if defined(DCR_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_available()) throw Error("AVX2 backend not available");
  current().store(b, std::memory_order_relaxed);
}

void axpy(const gfq::Field& f, gfq::Elem c, std::span<const gfq::Elem> src,
          std::span<gfq::Elem> dst) {
#if defined(DCR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    if (auto t = f.tables()) return avx2::axpy(*t, c, src, dst);
  }
#endif
  scalar::axpy(f, c, src, dst);
}

void scale(const gfq::Field& f, gfq::Elem c, std::span<gfq::Elem> row) {
#if defined(DCR_HAVE_AVX2)
  if (active_backend() == Backend::avx2) {
    if (auto t = f.tables()) return avx2::scale(*t, c, row);
  }
#endif
  scalar::scale(f, c, row);
}

}  // namespace dcr::kernels
