#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dcr/error.hpp"
#include "dcr/gfq.hpp"
#include "dcr/kernels.hpp"
#include "dcr/matfq.hpp"
#include "oracle.hpp"

using namespace dcr;
using gfq::Elem;

namespace {

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kFields = {
    {2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 4}, {2, 8}, {251, 1}};

std::vector<Elem> random_row(std::mt19937_64& rng, std::size_t n, std::uint32_t q) {
  std::vector<Elem> v(n);
  for (auto& x : v) x = static_cast<Elem>(rng() % q);
  return v;
}

}  // namespace

TEST_CASE("scalar kernels match the reference arithmetic") {
  std::mt19937_64 rng(11);
  for (auto [p, r] : kFields) {
    const auto f = gfq::Field::build(p, r);
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 33u}) {
      const Elem c = static_cast<Elem>(rng() % f->q());
      const auto src = random_row(rng, n, f->q());
      auto dst = random_row(rng, n, f->q());
      auto want = dst;
      for (std::size_t i = 0; i < n; ++i) want[i] = oracle::add(*f, want[i], oracle::mul(*f, c, src[i]));
      kernels::scalar::axpy(*f, c, src, dst);
      CHECK(dst == want);

      auto row = src;
      kernels::scalar::scale(*f, c, row);
      for (std::size_t i = 0; i < n; ++i) CHECK(row[i] == oracle::mul(*f, c, src[i]));
    }
  }
}

TEST_CASE("AVX2 kernels are equivalent to the scalar kernels") {
  if (!kernels::avx2_available()) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(12);
  for (auto [p, r] : kFields) {
    const auto f = gfq::Field::build(p, r);
    const auto tables = f->tables();
    REQUIRE(tables.has_value());
    for (std::size_t n = 0; n <= 41; ++n)
      for (int trial = 0; trial < 4; ++trial) {
        const Elem c = trial == 0 ? 0 : trial == 1 ? 1 : static_cast<Elem>(rng() % f->q());
        const auto src = random_row(rng, n, f->q());
        const auto dst0 = random_row(rng, n, f->q());
        auto a = dst0, b = dst0;
        kernels::scalar::axpy(*f, c, src, a);
        kernels::avx2::axpy(*tables, c, src, b);
        REQUIRE(a == b);

        auto s1 = src, s2 = src;
        kernels::scalar::scale(*f, c, s1);
        kernels::avx2::scale(*tables, c, s2);
        REQUIRE(s1 == s2);
      }
  }
}

TEST_CASE("large fields have no dense tables and fall back to scalar") {
  const auto f = gfq::Field::build(2, 9);
  CHECK_FALSE(f->tables().has_value());
  std::vector<Elem> src{1, 2, 3}, dst{0, 0, 0};
  kernels::axpy(*f, 1, src, dst);
  CHECK(dst == src);
}

TEST_CASE("backend switching gives identical linear algebra") {
  const auto f = gfq::Field::build(3, 2);
  std::mt19937_64 rng(13);
  matfq::Matrix a(f, 9, 9), b(f, 9, 9);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) {
      a(i, j) = static_cast<Elem>(rng() % 9);
      b(i, j) = static_cast<Elem>(rng() % 9);
    }
  const auto before = kernels::active_backend();
  kernels::set_backend(kernels::Backend::scalar);
  CHECK(kernels::backend_name(kernels::active_backend()) == "scalar");
  const auto prod_s = a * b;
  const auto rref_s = matfq::rref(a).reduced;
  if (kernels::avx2_available()) {
    kernels::set_backend(kernels::Backend::avx2);
    CHECK(a * b == prod_s);
    CHECK(matfq::rref(a).reduced == rref_s);
  } else {
    CHECK_THROWS_AS(kernels::set_backend(kernels::Backend::avx2), Error);
  }
  kernels::set_backend(before);
}
