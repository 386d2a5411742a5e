#include <set>
#include <string>

#include "dcr/error.hpp"
#include "dcr/gfq.hpp"

namespace dcr::gfq {

Extension build_extension(const FieldPtr& base, std::uint32_t m) {
  if (m < 1) throw TooLarge("extension degree must be at least 1");
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < base->r() * m; ++i) {
    order *= base->p();
    if (order > kMaxOrder)
      throw TooLarge("GF(" + std::to_string(base->q()) + "^" + std::to_string(m) +
                     ") exceeds 2^16");
  }

  Extension ext;
  ext.base = base;
  ext.degree = m;
  ext.ext = Field::build(base->p(), base->r() * m);
  const Field& big = *ext.ext;

  // The modulus has F_p coefficients; the prime subfield of GF(p^k) is the
  // set of encodings 0..p-1, so the coefficients embed verbatim.
  const auto modulus = base->modulus();
  auto eval_modulus = [&](Elem x) {
    Elem acc = 0;
    for (std::size_t i = modulus.size(); i-- > 0;) acc = big.add(big.mul(acc, x), modulus[i]);
    return acc;
  };
  bool found = false;
  for (Elem x = 0; x < big.q(); ++x) {
    if (eval_modulus(x) == 0) {
      ext.root = x;
      found = true;
      break;
    }
  }
  if (!found) throw Error("base modulus has no root in the extension");

  const std::uint32_t r = base->r();
  std::vector<Elem> root_powers(r);
  for (std::uint32_t i = 0; i < r; ++i) root_powers[i] = big.pow(ext.root, i);

  ext.image.resize(base->q());
  for (Elem a = 0; a < base->q(); ++a) {
    const auto c = base->coeffs(a);
    Elem acc = 0;
    for (std::uint32_t i = 0; i < r; ++i) acc = big.add(acc, big.mul(c[i], root_powers[i]));
    ext.image[a] = acc;
  }

  // Ring homomorphism on all of GF(q): additivity against the F_p-basis,
  // multiplicativity along the powers of a primitive element, injectivity.
  if (ext.image[0] != 0 || ext.image[1] != 1)
    throw Error("embedding does not fix 0 and 1");
  for (Elem a = 0; a < base->q(); ++a)
    for (Elem e : base->prime_basis())
      if (ext.image[base->add(a, e)] != big.add(ext.image[a], ext.image[e]))
        throw Error("embedding is not additive");
  const Elem g = base->primitive();
  Elem power = 1, image_power = 1;
  for (std::uint32_t k = 0; k + 1 < base->q(); ++k) {
    if (ext.image[power] != image_power) throw Error("embedding is not multiplicative");
    power = base->mul(power, g);
    image_power = big.mul(image_power, ext.image[g]);
  }
  std::set<Elem> distinct(ext.image.begin(), ext.image.end());
  if (distinct.size() != ext.image.size()) throw Error("embedding is not injective");
  return ext;
}

}  // namespace dcr::gfq
