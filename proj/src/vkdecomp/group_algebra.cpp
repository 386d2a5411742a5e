#include <string>

#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

namespace dcr::vkdecomp {

Vector GroupAlgebraL::multiply(const Vector& u, const Vector& v) const {
  const gfq::Field& f = *field;
  if (u.size() != f.q() || v.size() != f.q()) throw DimensionMismatch("group algebra element");
  Vector w(f.q(), 0);
  for (Elem a = 0; a < f.q(); ++a) {
    if (u[a] == 0) continue;
    for (Elem b = 0; b < f.q(); ++b) {
      const Elem s = f.add(a, b);
      w[s] = f.add(w[s], f.mul(u[a], v[b]));
    }
  }
  return w;
}

GroupAlgebraL group_algebra_L(const FieldPtr& field) {
  const gfq::Field& f = *field;
  GroupAlgebraL alg;
  alg.field = field;
  alg.labels = f.elements();
  for (Elem e : f.prime_basis()) {
    Matrix m(field, f.q(), f.q());
    for (Elem b = 0; b < f.q(); ++b) m(f.add(b, e), b) = 1;
    alg.generator_matrices.push_back(std::move(m));
  }
  for (Elem b = 1; b < f.q(); ++b) {
    Vector v(f.q(), 0);
    v[b] = 1;
    v[0] = f.neg(1);
    alg.augmentation_basis.push_back(std::move(v));
  }
  return alg;
}

AugmentationReport augmentation_nilpotency_check(const GroupAlgebraL& algebra) {
  const gfq::Field& f = *algebra.field;
  AugmentationReport report;
  report.expected = std::size_t{f.r()} * (f.p() - 1) + 1;

  std::vector<Vector> level = algebra.augmentation_basis;
  std::size_t exponent = 1;
  while (!level.empty()) {
    report.power_dims.push_back(level.size());
    if (exponent > f.q()) break;  // I^q = 0 whenever I is nilpotent
    matfq::Subspace next(algebra.field, f.q());
    std::vector<Vector> next_basis;
    for (const auto& x : level)
      for (const auto& y : algebra.augmentation_basis) {
        Vector xy = algebra.multiply(x, y);
        if (next.insert(xy)) next_basis.push_back(std::move(xy));
      }
    level = std::move(next_basis);
    ++exponent;
  }
  report.exponent = level.empty() ? exponent : 0;
  return report;
}

EmbeddingReport embed_vk_into_group_algebra(const FieldPtr& field, int k) {
  const gfq::Field& f = *field;
  if (k < 0 || k > static_cast<int>(f.q()) - 2)
    throw IndexOutOfRange("degree " + std::to_string(k) + " outside [0, q-2]");
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  const std::uint32_t q = f.q();

  EmbeddingReport report;
  report.k = k;
  Matrix map(field, q, n);
  const auto modulus = gfq::UnivariatePoly::field_equation(field);
  for (std::size_t i = 0; i < n; ++i) {
    const auto monomial = gfq::UnivariatePoly::monomial(field, 1, i);
    // V^k -> F[x]/(x^q - x)
    const auto residue = monomial.rem(modulus);
    if (!(residue == monomial))
      throw ChainViolation("quotient stage: x^" + std::to_string(i) + " changed modulo x^q - x");
    for (Elem b = 0; b < q; ++b) {
      // F[x]/(x^q - x) -> prod_b F[x]/(x - b)
      const auto component = residue.rem(gfq::UnivariatePoly(field, {f.neg(b), 1}));
      if (component.degree() > 0) throw ChainViolation("CRT stage: remainder is not constant");
      // prod_b F[x]/(x - b) -> prod_b F, then relabel as sum zeta_b [b]
      const Elem zeta = component.coeff(0);
      if (zeta != residue.eval(b)) throw ChainViolation("evaluation stage: f_b(b) mismatch");
      // sign
      map(b, i) = f.neg(zeta);
      if (map(b, i) != f.neg(f.pow(b, i)))
        throw ChainViolation("composition: x^i must map to -sum_b b^i [b]");
    }
  }

  report.rank = matfq::rank(map);
  report.injective = report.rank == n;
  if (!report.injective) throw ChainViolation("injectivity: image rank below dim V^k");

  // a acts on the target by [b] -> [b - a]; the relabeling [b] -> [-b]
  // turns this into the regular action [b] -> [b + a].
  Matrix negate(field, q, q);
  for (Elem b = 0; b < q; ++b) negate(f.neg(b), b) = 1;
  const Matrix regular_map = negate * map;
  const auto alg = group_algebra_L(field);
  const auto sources = restrict_to_L(field, k);
  const auto basis = f.prime_basis();
  report.equivariant = report.regular_equivariant = report.submodule = true;
  for (std::size_t g = 0; g < basis.size(); ++g) {
    Matrix shift(field, q, q);
    for (Elem b = 0; b < q; ++b) shift(f.sub(b, basis[g]), b) = 1;
    if (!(map * sources[g] == shift * map)) report.equivariant = false;
    if (!(regular_map * sources[g] == alg.generator_matrices[g] * regular_map))
      report.regular_equivariant = false;

    const Matrix moved = shift * map;
    Matrix joined(field, q, 2 * n);
    for (Elem b = 0; b < q; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        joined(b, c) = map(b, c);
        joined(b, n + c) = moved(b, c);
      }
    if (matfq::rank(joined) != report.rank) report.submodule = false;
  }
  if (!report.equivariant) throw ChainViolation("equivariance: map does not commute with L");
  if (!report.regular_equivariant)
    throw ChainViolation("equivariance: relabeled map does not commute with the regular action");
  if (!report.submodule) throw ChainViolation("submodule: image is not L-stable");
  report.map = std::move(map);
  return report;
}

}  // namespace dcr::vkdecomp
