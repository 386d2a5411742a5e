// Compiled with -mavx2; only reached after a runtime CPU check.

#include <immintrin.h>

#include "dcr/kernels.hpp"

namespace dcr::kernels::avx2 {

void axpy(const gfq::FieldTables& t, gfq::Elem c, std::span<const gfq::Elem> src,
          std::span<gfq::Elem> dst) {
  if (c == 0) return;
  const std::int32_t* mul_row = t.mul + std::size_t{c} * t.q;
  const __m256i vq = _mm256_set1_epi32(static_cast<int>(t.q));
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src.data() + i));
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst.data() + i));
    const __m256i prod = _mm256_i32gather_epi32(mul_row, s, 4);
    const __m256i idx = _mm256_add_epi32(_mm256_mullo_epi32(d, vq), prod);
    const __m256i sum = _mm256_i32gather_epi32(t.add, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst.data() + i), sum);
  }
  for (; i < n; ++i)
    dst[i] = static_cast<gfq::Elem>(t.add[std::size_t{dst[i]} * t.q + mul_row[src[i]]]);
}

void scale(const gfq::FieldTables& t, gfq::Elem c, std::span<gfq::Elem> row) {
  const std::int32_t* mul_row = t.mul + std::size_t{c} * t.q;
  const std::size_t n = row.size();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(row.data() + i),
                        _mm256_i32gather_epi32(mul_row, x, 4));
  }
  for (; i < n; ++i) row[i] = static_cast<gfq::Elem>(mul_row[row[i]]);
}

}  // namespace dcr::kernels::avx2
