#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "dcr/canrep.hpp"
#include "dcr/error.hpp"
#include "oracle.hpp"

using namespace dcr;
using namespace dcr::canrep;

namespace {

FieldPtr field_of(std::uint32_t q) {
  const auto pp = gfq::PrimePower::factor(q);
  return gfq::Field::build(pp.p, pp.r);
}

// Bivariate polynomial keyed by the exponent of y (total degree fixed).
using Poly = std::map<int, Elem>;

Poly times_linear(const gfq::Field& f, const Poly& a, Elem cx, Elem cy) {
  Poly out;
  for (auto [e, c] : a) {
    out[e] = oracle::add(f, out[e], oracle::mul(f, c, cx));
    out[e + 1] = oracle::add(f, out[e + 1], oracle::mul(f, c, cy));
  }
  return out;
}

// Column of omega_{i,j} under g by repeated multiplication of linear forms.
std::vector<Elem> pullback_column(const gfq::Field& f, const sl2::GroupElement& g, int i, int j) {
  Poly p{{0, 1}};
  for (int t = 0; t < i; ++t) p = times_linear(f, p, g.d(), f.neg(g.b()));
  for (int t = 0; t < j; ++t) p = times_linear(f, p, f.neg(g.c()), g.a());
  std::vector<Elem> col(i + j + 1, 0);
  for (auto [e, c] : p) col[e] = c;
  return col;
}

}  // namespace

TEST_CASE("basis indices and genus") {
  CHECK(basis_indices(2) == std::vector<DiffIndex>{{0, 0}});
  CHECK(basis_indices(3) == std::vector<DiffIndex>{{0, 0}, {1, 0}, {0, 1}});
  CHECK(basis_indices(9).size() == 36);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) CHECK(genus(q) == q * (q - 1) / 2);
  CHECK(block_offset(0) == 0);
  CHECK(block_offset(3) == 6);
}

TEST_CASE("binomial rows match the integer binomials mod p") {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 9u}) {
    const auto f = field_of(q);
    for (std::size_t n = 0; n < 30; ++n) {
      const auto row = binomial_row(*f, n);
      REQUIRE(row.size() == n + 1);
      for (std::size_t k = 0; k <= n; ++k) CHECK(row[k] == oracle::binomial_mod(n, k, f->p()));
    }
  }
}

TEST_CASE("action block examples") {
  const auto f3 = field_of(3);
  const auto l = sl2::GroupElement::lower(f3, 1);
  CHECK(action_block(1, l) == Matrix::from_rows(f3, {{1, 2}, {0, 1}}));
  const auto w = sl2::GroupElement::make(f3, 0, 1, 2, 0);
  CHECK(action_block(1, w) == Matrix::from_rows(f3, {{0, 1}, {2, 0}}));
  for (int k = 0; k <= 1; ++k)
    CHECK(action_block(k, sl2::GroupElement::identity(f3)) == Matrix::identity(f3, k + 1));
  CHECK(action_full(sl2::GroupElement::identity(f3)).assembled() == Matrix::identity(f3, 3));
  CHECK(action_full(l).assembled() ==
        Matrix::from_rows(f3, {{1, 0, 0}, {0, 1, 2}, {0, 0, 1}}));
  CHECK_THROWS_AS(action_block(2, l), IndexOutOfRange);
}

TEST_CASE("action blocks match direct polynomial expansion") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const auto f = field_of(q);
    const auto group = sl2::enumerate_group(f);
    for (std::size_t gi = 0; gi < group.size(); gi += 1 + group.size() / 40)
      for (int k = 0; k + 2 <= static_cast<int>(q); ++k) {
        const auto block = action_block(k, group[gi]);
        for (int j = 0; j <= k; ++j) {
          const auto col = pullback_column(*f, group[gi], k - j, j);
          for (int row = 0; row <= k; ++row) REQUIRE(block(row, j) == col[row]);
        }
      }
  }
}

TEST_CASE("assembled matrices are block diagonal") {
  const auto f = field_of(5);
  for (const auto& g : sl2::enumerate_group(f)) {
    const auto full = action_full(g);
    CHECK(full.dim() == 10);
    CHECK(is_block_diagonal(full.assembled(), 5));
  }
  Matrix m(f, 10, 10);
  m(0, 5) = 1;
  CHECK_FALSE(is_block_diagonal(m, 5));
}

TEST_CASE("homomorphism") {
  SamplingPolicy exhaustive;
  exhaustive.mode = SamplingPolicy::Mode::exhaustive;
  const auto r3 = verify_homomorphism(field_of(3), exhaustive);
  CHECK(r3.exhaustive);
  CHECK(r3.pairs_checked == 576);
  CHECK(r3.inverses_checked == 24);

  SamplingPolicy sampled;
  sampled.mode = SamplingPolicy::Mode::sampled;
  sampled.seed = 3;
  sampled.samples = 2000;
  const auto r9 = verify_homomorphism(field_of(9), sampled);
  CHECK_FALSE(r9.exhaustive);
  CHECK(r9.seed == 3);
  CHECK(r9.pairs_checked == 2000);
}
