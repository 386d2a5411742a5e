#include <string>

#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

namespace dcr::vkdecomp {

std::vector<Matrix> endomorphism_algebra_over_L(const FieldPtr& field, int k) {
  const auto gens = restrict_to_L(field, k);
  const auto endo = matfq::hom_space(gens, gens);
  const std::size_t n = static_cast<std::size_t>(k) + 1;

  const Matrix id = Matrix::identity(field, n);
  matfq::Subspace span(field, n * n);
  std::vector<Matrix> basis;
  span.insert(id.vec());
  basis.push_back(id);
  for (const auto& e : endo)
    if (span.insert(e.vec())) basis.push_back(e);
  if (basis.size() != endo.size())
    throw Error("identity is not an L-endomorphism of V^" + std::to_string(k));
  return basis;
}

Elem LocalityCertificate::evaluate(const gfq::Field& f, std::span<const Elem> coords) const {
  if (coords.size() != lambda.size()) throw DimensionMismatch("coordinate count");
  Elem acc = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) acc = f.add(acc, f.mul(coords[i], lambda[i]));
  return acc;
}

LocalityCertificate locality_certificate(const FieldPtr& field, int k) {
  const gfq::Field& f = *field;
  LocalityCertificate cert;
  cert.k = k;
  cert.endo_basis = endomorphism_algebra_over_L(field, k);
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const Matrix id = Matrix::identity(field, n);

  auto inconclusive = [&](std::string why) {
    cert.status = LocalityCertificate::Status::inconclusive;
    cert.reason = std::move(why);
    return cert;
  };

  // lambda(e) is the unique c with e - c id nilpotent.
  for (std::size_t i = 0; i < cert.endo_basis.size(); ++i) {
    const Matrix& e = cert.endo_basis[i];
    std::optional<Elem> found;
    for (Elem c : f.elements()) {
      if (matfq::is_nilpotent(e - id.scaled(c))) {
        found = c;
        break;
      }
    }
    if (!found) return inconclusive("basis element " + std::to_string(i) + " has no scalar part");
    cert.lambda.push_back(*found);
  }
  if (cert.lambda.front() != 1) return inconclusive("lambda(id) != 1");

  // K = ker lambda, spanned by e_i - lambda_i id for i >= 1.
  matfq::Subspace ideal(field, n * n);
  for (std::size_t i = 1; i < cert.endo_basis.size(); ++i) {
    Matrix kk = cert.endo_basis[i] - id.scaled(cert.lambda[i]);
    if (!matfq::is_nilpotent(kk)) return inconclusive("K basis element is not nilpotent");
    ideal.insert(kk.vec());
    cert.nil_ideal.push_back(std::move(kk));
  }
  if (ideal.dim() != cert.nil_ideal.size()) return inconclusive("K basis is dependent");

  for (const auto& e : cert.endo_basis)
    for (const auto& kk : cert.nil_ideal)
      if (!ideal.contains((e * kk).vec()) || !ideal.contains((kk * e).vec()))
        return inconclusive("K is not a two-sided ideal");

  // K^1 = K, K^{m+1} = span{x y : x in K^m, y in K}.
  const std::size_t bound = n * cert.endo_basis.size();
  std::vector<Matrix> level = cert.nil_ideal;
  std::size_t exponent = 1;
  while (!level.empty()) {
    if (exponent > bound) return inconclusive("K^e does not vanish within the bound");
    matfq::Subspace next(field, n * n);
    std::vector<Matrix> next_basis;
    for (const auto& x : level)
      for (const auto& y : cert.nil_ideal) {
        Matrix xy = x * y;
        if (next.insert(xy.vec())) next_basis.push_back(std::move(xy));
      }
    level = std::move(next_basis);
    ++exponent;
  }
  cert.nil_exponent = exponent;
  cert.status = LocalityCertificate::Status::certified;
  return cert;
}

std::size_t spot_check_certificate(const FieldPtr& field, const LocalityCertificate& cert,
                                   std::uint64_t seed, std::size_t samples) {
  if (!cert.certified()) throw Error("spot check needs a certified certificate");
  const gfq::Field& f = *field;
  const std::size_t n = cert.endo_basis.front().rows();
  const Matrix id = Matrix::identity(field, n);
  Rng rng(seed);
  std::size_t units = 0;
  std::vector<Elem> coords(cert.endo_basis.size());
  for (std::size_t s = 0; s < samples; ++s) {
    Matrix x(field, n, n);
    for (std::size_t i = 0; i < coords.size(); ++i) {
      coords[i] = static_cast<Elem>(rng.below(f.q()));
      x = x + cert.endo_basis[i].scaled(coords[i]);
    }
    const Elem l = cert.evaluate(f, coords);
    if (!matfq::is_nilpotent(x - id.scaled(l)))
      throw Error("e - lambda(e) id is not nilpotent for a sampled endomorphism");
    if (l != 0) {
      const Matrix inv = matfq::inverse(x);  // throws Singular
      if (!(inv * x == id)) throw Error("sampled unit failed to invert");
      ++units;
    } else if (!matfq::is_nilpotent(x)) {
      throw Error("sampled non-unit is not nilpotent");
    }
  }
  return units;
}

}  // namespace dcr::vkdecomp
