#pragma once

// Row kernels over GF(q) used by the dense linear algebra.
//
// Two implementations exist: a scalar reference built on Field::add/mul
// (log tables and digit arithmetic), and an AVX2 variant that gathers from
// the dense add/mul tables a Field materializes for q <= kTableOrder. The
// active backend is picked once at startup from the CPU features; setting
// CANREP_SIMD=off forces the scalar path.

#include <span>
#include <string_view>

#include "dcr/gfq.hpp"

namespace dcr::kernels {

enum class Backend { scalar, avx2 };

std::string_view backend_name(Backend b);

bool avx2_available();
Backend active_backend();
// Throws Error if the backend is not available on this CPU/build.
void set_backend(Backend b);

// dst[i] += c * src[i]
void axpy(const gfq::Field& f, gfq::Elem c, std::span<const gfq::Elem> src,
          std::span<gfq::Elem> dst);
// row[i] *= c
void scale(const gfq::Field& f, gfq::Elem c, std::span<gfq::Elem> row);

namespace scalar {
void axpy(const gfq::Field& f, gfq::Elem c, std::span<const gfq::Elem> src,
          std::span<gfq::Elem> dst);
void scale(const gfq::Field& f, gfq::Elem c, std::span<gfq::Elem> row);
}  // namespace scalar

namespace avx2 {
// Require f.tables(); callers go through the dispatching entry points.
void axpy(const gfq::FieldTables& t, gfq::Elem c, std::span<const gfq::Elem> src,
          std::span<gfq::Elem> dst);
void scale(const gfq::FieldTables& t, gfq::Elem c, std::span<gfq::Elem> row);
}  // namespace avx2

}  // namespace dcr::kernels
