#include <string>

#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

namespace dcr::vkdecomp {

namespace {

void check_degree(const gfq::Field& f, int k) {
  if (k < 0 || k > static_cast<int>(f.q()) - 2)
    throw IndexOutOfRange("degree " + std::to_string(k) + " outside [0, q-2]");
}

// a acting on 1, x, ..., x^k by x^i -> (x + a)^i.
Matrix translation_matrix(const FieldPtr& field, int k, Elem a) {
  const gfq::Field& f = *field;
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto binom = canrep::binomial_row(f, i);
    for (std::size_t e = 0; e <= i; ++e) m(e, i) = f.mul(binom[e], f.pow(a, i - e));
  }
  return m;
}

}  // namespace

Matrix vk_matrix(int k, const sl2::GroupElement& g) {
  const FieldPtr& field = g.field();
  const gfq::Field& f = *field;
  check_degree(f, k);
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  Matrix m(field, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // x^{k-j} y^j -> (a x + c y)^{k-j} (b x + d y)^j
    const auto col = canrep::expand_linear_forms(f, g.a(), g.c(), k - j, g.b(), g.d(), j);
    for (std::size_t row = 0; row < n; ++row) m(row, j) = col[row];
  }
  return m;
}

Matrix duality_intertwiner(const FieldPtr& field, int k) {
  const gfq::Field& f = *field;
  check_degree(f, k);
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  Matrix t(field, n, n);
  for (std::size_t i = 0; i < n; ++i) t(k - i, i) = i % 2 == 0 ? 1 : f.neg(1);
  return t;
}

IntertwiningReport verify_intertwining(const FieldPtr& field, int k, std::uint64_t seed,
                                       std::size_t samples) {
  IntertwiningReport report;
  report.k = k;
  const Matrix t = duality_intertwiner(field, k);
  auto check = [&](const sl2::GroupElement& g) {
    if (!(t * vk_matrix(k, g) == canrep::action_block(k, g) * t))
      throw IntertwinerViolation("T rho_V(g) != rho_W(g) T for k = " + std::to_string(k) +
                                 ", g = " + g.serialize());
  };

  const auto gens = sl2::generators(field);
  std::vector<Matrix> v_gens, w_gens;
  for (const auto& g : gens.elements) {
    check(g);
    v_gens.push_back(vk_matrix(k, g));
    w_gens.push_back(canrep::action_block(k, g));
    ++report.generators_checked;
  }

  if (samples > 0) {
    const auto group = sl2::enumerate_group(field);
    Rng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) check(group[rng.below(group.size())]);
    report.samples_checked = samples;
  }

  const auto hom = matfq::hom_space(v_gens, w_gens);
  report.hom_dim = hom.size();
  matfq::Subspace span(field, t.rows() * t.cols());
  for (const auto& h : hom) span.insert(h.vec());
  report.hom_contains_t = span.contains(t.vec());
  return report;
}

std::vector<Matrix> restrict_to_L(const FieldPtr& field, int k) {
  check_degree(*field, k);
  std::vector<Matrix> out;
  for (Elem e : field->prime_basis()) out.push_back(translation_matrix(field, k, e));
  return out;
}

bool restriction_matches_vk(const FieldPtr& field, int k) {
  check_degree(*field, k);
  const std::size_t n = static_cast<std::size_t>(k) + 1;
  for (Elem a : field->elements()) {
    const Matrix m = translation_matrix(field, k, a);
    const Matrix v = vk_matrix(k, sl2::GroupElement::lower(field, a));
    // V^k index j is x^{k-j} y^j, which becomes x^{k-j} at y = 1.
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        if (m(r, c) != v(k - r, k - c)) return false;
  }
  return true;
}

}  // namespace dcr::vkdecomp
