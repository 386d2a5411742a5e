#pragma once

// Finite fields GF(p^r), subfield embeddings, univariate polynomials and
// truncated power series.
//
// An element is stored as its integer encoding sum_i c_i p^i, where
// (c_0, ..., c_{r-1}) are its coordinates in the power basis 1, Y, ..., Y^{r-1}
// modulo the field's defining polynomial. Encoding order is the enumeration
// order, so 0 comes first and 1 second.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dcr::gfq {

using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxOrder = 1u << 16;

// Largest order for which the dense add/mul tables used by the SIMD kernels
// are materialized.
inline constexpr std::uint32_t kTableOrder = 256;

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t r = 0;
  std::uint32_t q = 0;

  // Throws NonPrime or TooLarge.
  static PrimePower make(std::uint64_t p, std::uint64_t r);
  // Factors q by trial division. Throws NotPrimePower or TooLarge.
  static PrimePower factor(std::uint64_t q);

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

bool is_prime(std::uint64_t n);

// Pointers into the dense tables; entries are encodings widened to int32 so
// they can feed gather instructions directly.
struct FieldTables {
  const std::int32_t* add = nullptr;  // add[a * q + b]
  const std::int32_t* mul = nullptr;  // mul[a * q + b]
  std::uint32_t q = 0;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// GF(p^r) as F_p[Y] / (modulus). Immutable after construction.
class Field {
 public:
  // Monic irreducible modulus of degree r with the smallest encoding of its
  // non-leading coefficients. Pure function of (p, r).
  static FieldPtr build(std::uint32_t p, std::uint32_t r);
  // Explicit modulus (little-endian, length r+1, monic). Irreducibility is
  // verified; throws NotIrreducible otherwise.
  static FieldPtr from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus);
  // Inverse of serialize().
  static FieldPtr parse(std::string_view line);

  std::uint32_t p() const { return pp_.p; }
  std::uint32_t r() const { return pp_.r; }
  std::uint32_t q() const { return pp_.q; }
  const PrimePower& prime_power() const { return pp_; }
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  // Residue class of Y.
  Elem generator() const;
  // Generator of the multiplicative group used for the log tables.
  Elem primitive() const { return exp_[1 % exp_.size()]; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws DivisionByZero
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem frobenius(Elem a) const { return pow(a, pp_.p); }
  // Image of the integer n under Z -> F_p -> GF(q).
  Elem from_int(std::int64_t n) const;

  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(std::span<const std::uint32_t> c) const;

  // Elements in encoding order: 0, 1, ..., q-1.
  std::vector<Elem> elements() const;
  // The F_p-basis 1, Y, ..., Y^{r-1}, as encodings p^i.
  std::vector<Elem> prime_basis() const;

  // Present only when q <= kTableOrder.
  std::optional<FieldTables> tables() const;

  // "p r c_0 c_1 ... c_r"
  std::string serialize() const;

  bool same_as(const Field& other) const {
    return pp_ == other.pp_ && modulus_ == other.modulus_;
  }

 private:
  Field(PrimePower pp, std::vector<std::uint32_t> modulus);

  PrimePower pp_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> radix_;  // p^i
  std::vector<Elem> exp_;             // exp_[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_;    // log_[a] for a != 0
  std::vector<std::int32_t> add_table_;
  std::vector<std::int32_t> mul_table_;
};

// Value type pairing an encoding with its field. Mixed-field arithmetic
// throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<std::uint32_t> coeffs() const { return field_->coeffs(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement inv() const;
  FieldElement pow(std::uint64_t e) const;
  FieldElement frobenius() const;
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldPtr field_;
  Elem value_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

void require_same_field(const Field& a, const Field& b);

std::vector<FieldElement> enumerate_elements(const FieldPtr& field);

// GF(q) -> GF(q^m), built by locating the smallest-encoding root of the
// GF(q) modulus inside GF(p^{rm}).
struct Extension {
  FieldPtr base;
  FieldPtr ext;
  std::uint32_t degree = 1;
  Elem root = 0;
  std::vector<Elem> image;  // image[a] for every encoding a of the base

  Elem operator()(Elem a) const { return image.at(a); }
};

// Throws TooLarge if p^{rm} exceeds kMaxOrder.
Extension build_extension(const FieldPtr& base, std::uint32_t m);

// Dense polynomial over a field; coeffs[i] multiplies x^i. No trailing zeros.
class UnivariatePoly {
 public:
  explicit UnivariatePoly(FieldPtr field, std::vector<Elem> coeffs = {});
  static UnivariatePoly monomial(FieldPtr field, Elem c, std::size_t degree);
  // x^q - x for q = field->q().
  static UnivariatePoly field_equation(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  Elem eval(Elem x) const;
  // f(x + a)
  UnivariatePoly shifted(Elem a) const;
  UnivariatePoly rem(const UnivariatePoly& divisor) const;

  friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
  friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
  friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b);

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

// Power series in one variable truncated at t^precision.
class PowerSeries {
 public:
  PowerSeries(FieldPtr field, std::size_t precision);
  PowerSeries(FieldPtr field, std::size_t precision, std::vector<Elem> coeffs);
  static PowerSeries constant(FieldPtr field, std::size_t precision, Elem c);
  // c * t^e
  static PowerSeries monomial(FieldPtr field, std::size_t precision, Elem c,
                              std::size_t e);

  const FieldPtr& field() const { return field_; }
  std::size_t precision() const { return coeffs_.size(); }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }

  // Index of the first nonzero coefficient, if any lies below the precision.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation().has_value(); }

  PowerSeries scaled(Elem c) const;
  PowerSeries pow(std::uint64_t n) const;
  // s(t)^{p^e} computed coefficientwise: sum c_i^{p^e} t^{i p^e}. Only valid
  // because raising to a power of the characteristic is additive.
  PowerSeries frobenius_power(std::uint64_t p_power) const;

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend bool operator==(const PowerSeries& a, const PowerSeries& b);

 private:
  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

// Unique s(t) with s(0) = s0 and s^Q - s = t^{Q+1} mod t^N, where Q is
// curve_q (defaults to field->q()). Throws NotRational if s0^Q != s0.
PowerSeries series_solve_artin_schreier(const FieldPtr& field, Elem s0,
                                        std::size_t precision,
                                        std::uint32_t curve_q = 0);

// Same for the other chart at infinity: v - v^Q = w^{Q+1}, v(0) = v0.
PowerSeries series_solve_chart_y(const FieldPtr& field, Elem v0,
                                 std::size_t precision,
                                 std::uint32_t curve_q = 0);

}  // namespace dcr::gfq
