#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dcr/error.hpp"
#include "dcr/gfq.hpp"
#include "oracle.hpp"

using namespace dcr;
using namespace dcr::gfq;

namespace {

std::vector<std::uint32_t> mod_of(const FieldPtr& f) {
  return {f->modulus().begin(), f->modulus().end()};
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}};

}  // namespace

TEST_CASE("prime powers factor or are rejected") {
  CHECK(PrimePower::factor(9) == PrimePower{3, 2, 9});
  CHECK(PrimePower::factor(2) == PrimePower{2, 1, 2});
  CHECK(PrimePower::factor(256) == PrimePower{2, 8, 256});
  CHECK_THROWS_AS(PrimePower::factor(6), NotPrimePower);
  CHECK_THROWS_AS(PrimePower::factor(1), NotPrimePower);
  CHECK_THROWS_AS(PrimePower::factor(100), NotPrimePower);
  CHECK_THROWS_AS(PrimePower::factor(1u << 17), TooLarge);
  CHECK_THROWS_AS(PrimePower::make(4, 1), NonPrime);
  CHECK_THROWS_AS(Field::build(6, 1), NonPrime);
}

TEST_CASE("moduli are the smallest irreducibles") {
  CHECK(mod_of(Field::build(3, 1)) == std::vector<std::uint32_t>{0, 1});
  CHECK(mod_of(Field::build(2, 2)) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(mod_of(Field::build(3, 2)) == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(mod_of(Field::build(2, 3)) == std::vector<std::uint32_t>{1, 1, 0, 1});
}

TEST_CASE("build is deterministic and serializes round trip") {
  for (auto [p, r] : kFields) {
    const auto a = Field::build(p, r);
    const auto b = Field::build(p, r);
    CHECK(a->same_as(*b));
    const auto c = Field::parse(a->serialize());
    CHECK(c->same_as(*a));
    CHECK(c->primitive() == a->primitive());
  }
  CHECK_THROWS_AS(Field::from_modulus(2, {1, 0, 1}), NotIrreducible);
  CHECK_THROWS_AS(Field::parse("2 2 1 1"), ParseError);
}

TEST_CASE("F_4: omega squared is omega plus one") {
  const auto f = Field::build(2, 2);
  const Elem w = 2;  // Y
  CHECK(f->mul(w, w) == 3);
  CHECK(f->add(w, 1) == 3);
  const FieldElement x(f, w);
  CHECK(x * x == x + FieldElement(f, 1));
}

TEST_CASE("arithmetic agrees with schoolbook polynomial arithmetic") {
  for (auto [p, r] : kFields) {
    const auto f = Field::build(p, r);
    CAPTURE(f->q());
    for (Elem a = 0; a < f->q(); ++a)
      for (Elem b = 0; b < f->q(); ++b) {
        REQUIRE(f->add(a, b) == oracle::add(*f, a, b));
        REQUIRE(f->mul(a, b) == oracle::mul(*f, a, b));
        REQUIRE(f->add(f->sub(a, b), b) == a);
      }
    for (Elem a = 1; a < f->q(); ++a) {
      CHECK(f->mul(a, f->inv(a)) == 1);
      CHECK(f->pow(a, 7) == oracle::pow(*f, a, 7));
      CHECK(f->add(a, f->neg(a)) == 0);
    }
    CHECK_THROWS_AS(f->inv(0), DivisionByZero);
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (auto [p, r] : kFields) {
    const auto f = Field::build(p, r);
    std::set<Elem> seen;
    Elem x = 1;
    for (std::uint32_t i = 0; i + 1 < f->q(); ++i) {
      seen.insert(x);
      x = oracle::mul(*f, x, f->primitive());
    }
    CHECK(seen.size() == f->q() - 1);
    CHECK(x == 1);
  }
}

TEST_CASE("frobenius") {
  const auto f9 = Field::build(3, 2);
  for (Elem a : f9->elements()) CHECK(f9->frobenius(f9->frobenius(a)) == a);
  const auto f16 = Field::build(2, 4);
  std::size_t fixed = 0;
  for (Elem a : f16->elements()) fixed += f16->frobenius(a) == a;
  CHECK(fixed == 2);
}

TEST_CASE("element enumeration") {
  CHECK(Field::build(2, 1)->elements() == std::vector<Elem>{0, 1});
  const auto f4 = enumerate_elements(Field::build(2, 2));
  CHECK(f4.size() == 4);
  CHECK(std::set<Elem>{f4[0].value(), f4[1].value(), f4[2].value(), f4[3].value()}.size() == 4);
  const auto f9 = Field::build(3, 2);
  Elem sum = 0;
  for (Elem a : f9->elements()) sum = f9->add(sum, a);
  CHECK(sum == 0);
}

TEST_CASE("field elements from different fields do not mix") {
  const FieldElement a(Field::build(2, 2), 1);
  const FieldElement b(Field::build(3, 1), 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK_THROWS_AS(a * b, FieldMismatch);
  CHECK_THROWS_AS(FieldElement(Field::build(3, 1), 3), IndexOutOfRange);
}

TEST_CASE("prime basis spans the field over F_p") {
  for (auto [p, r] : kFields) {
    const auto f = Field::build(p, r);
    const auto basis = f->prime_basis();
    REQUIRE(basis.size() == r);
    std::set<Elem> span{0};
    for (Elem e : basis) {
      std::set<Elem> next;
      for (Elem s : span)
        for (std::uint32_t c = 0; c < p; ++c) next.insert(f->add(s, f->mul(f->from_int(c), e)));
      span = next;
    }
    CHECK(span.size() == f->q());
  }
}

TEST_CASE("extensions embed the base as the fixed field of x -> x^q") {
  const auto f3 = Field::build(3, 1);
  const auto id = build_extension(f3, 1);
  for (Elem a : f3->elements()) CHECK(id(a) == a);

  const auto f2 = Field::build(2, 1);
  const auto e = build_extension(f2, 2);
  CHECK(e.ext->q() == 4);
  CHECK(e(0) == 0);
  CHECK(e(1) == 1);

  const auto f4 = Field::build(2, 2);
  const auto e16 = build_extension(f4, 2);
  REQUIRE(e16.ext->q() == 16);
  std::set<Elem> fixed;
  for (Elem x : e16.ext->elements())
    if (e16.ext->pow(x, 4) == x) fixed.insert(x);
  const std::set<Elem> image(e16.image.begin(), e16.image.end());
  CHECK(image == fixed);
  for (Elem a : f4->elements())
    for (Elem b : f4->elements()) {
      CHECK(e16(f4->mul(a, b)) == e16.ext->mul(e16(a), e16(b)));
      CHECK(e16(f4->add(a, b)) == e16.ext->add(e16(a), e16(b)));
    }
  CHECK_THROWS_AS(build_extension(Field::build(2, 9), 2), TooLarge);
}

TEST_CASE("univariate polynomials") {
  const auto f = Field::build(3, 1);
  const UnivariatePoly x(f, {0, 1});
  const UnivariatePoly one(f, {1});
  const auto fe = UnivariatePoly::field_equation(f);
  CHECK(fe.degree() == 3);
  for (Elem b : f->elements()) CHECK(fe.eval(b) == 0);
  CHECK((x * x * x * x).rem(fe) == x * x);
  CHECK((x + one).eval(2) == 0);
  CHECK((x * x).shifted(1) == UnivariatePoly(f, {1, 2, 1}));
  CHECK(UnivariatePoly(f, {1, 2, 0, 0}).degree() == 1);
  CHECK(UnivariatePoly(f).degree() == -1);
  CHECK_THROWS_AS(x.rem(UnivariatePoly(f)), DivisionByZero);
}

TEST_CASE("Artin-Schreier series") {
  const auto f3 = Field::build(3, 1);
  const auto s = series_solve_artin_schreier(f3, 0, 13);
  std::vector<Elem> want(13, 0);
  want[4] = 2;
  want[12] = 2;
  CHECK(std::vector<Elem>(s.coeffs().begin(), s.coeffs().end()) == want);

  for (auto [p, r] : kFields) {
    const auto f = Field::build(p, r);
    if (f->q() > 9) continue;
    CHECK(series_solve_artin_schreier(f, 0, f->q() + 1).is_zero());
  }

  const auto f2 = Field::build(2, 1);
  const auto s2 = series_solve_artin_schreier(f2, 1, 4);
  CHECK(std::vector<Elem>(s2.coeffs().begin(), s2.coeffs().end()) == std::vector<Elem>{1, 0, 0, 1});
}

TEST_CASE("series solutions satisfy their equations") {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 9u}) {
    const auto pp = PrimePower::factor(q);
    const auto f = Field::build(pp.p, pp.r);
    const std::size_t n = q * q + q + 1;
    const auto t = PowerSeries::monomial(f, n, 1, 1);
    for (Elem s0 : f->elements()) {
      const auto s = series_solve_artin_schreier(f, s0, n);
      CHECK(s.coeff(0) == s0);
      CHECK(s.pow(q) - s == t.pow(q + 1));
      const auto v = series_solve_chart_y(f, s0, n);
      CHECK(v - v.pow(q) == t.pow(q + 1));
    }
  }
}

TEST_CASE("constant terms outside the curve's field are rejected") {
  const auto f4 = Field::build(2, 2);
  // 2 = omega is not fixed by x -> x^2.
  CHECK_THROWS_AS(series_solve_artin_schreier(f4, 2, 8, 2), NotRational);
  CHECK_NOTHROW(series_solve_artin_schreier(f4, 1, 8, 2));
  CHECK_THROWS_AS(series_solve_artin_schreier(f4, 0, 0), PrecisionTooLow);
}
