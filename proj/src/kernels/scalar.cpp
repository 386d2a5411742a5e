#include "dcr/kernels.hpp"

namespace dcr::kernels::scalar {

void axpy(const gfq::Field& f, gfq::Elem c, std::span<const gfq::Elem> src,
          std::span<gfq::Elem> dst) {
  if (c == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = f.add(dst[i], f.mul(c, src[i]));
}

void scale(const gfq::Field& f, gfq::Elem c, std::span<gfq::Elem> row) {
  for (auto& x : row) x = f.mul(c, x);
}

}  // namespace dcr::kernels::scalar
