#include <algorithm>
#include <string>

#include "dcr/error.hpp"
#include "dcr/gfq.hpp"

namespace dcr::gfq {

PowerSeries::PowerSeries(FieldPtr field, std::size_t precision)
    : field_(std::move(field)), coeffs_(precision, 0) {}

PowerSeries::PowerSeries(FieldPtr field, std::size_t precision, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  coeffs_.resize(precision, 0);
}

PowerSeries PowerSeries::constant(FieldPtr field, std::size_t precision, Elem c) {
  return monomial(std::move(field), precision, c, 0);
}

PowerSeries PowerSeries::monomial(FieldPtr field, std::size_t precision, Elem c,
                                  std::size_t e) {
  PowerSeries s(std::move(field), precision);
  if (e < precision) s.coeffs_[e] = c;
  return s;
}

std::optional<std::size_t> PowerSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return i;
  return std::nullopt;
}

PowerSeries PowerSeries::scaled(Elem c) const {
  PowerSeries out = *this;
  for (auto& x : out.coeffs_) x = field_->mul(x, c);
  return out;
}

PowerSeries PowerSeries::pow(std::uint64_t n) const {
  PowerSeries result = constant(field_, precision(), 1);
  PowerSeries base = *this;
  for (; n > 0; n >>= 1) {
    if (n & 1) result = result * base;
    if (n > 1) base = base * base;
  }
  return result;
}

PowerSeries PowerSeries::frobenius_power(std::uint64_t p_power) const {
  PowerSeries out(field_, precision());
  for (std::size_t i = 0; i * p_power < coeffs_.size(); ++i)
    out.coeffs_[i * p_power] = field_->pow(coeffs_[i], p_power);
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  require_same_field(*a.field_, *b.field_);
  const std::size_t n = std::min(a.precision(), b.precision());
  PowerSeries out(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = a.field_->add(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  require_same_field(*a.field_, *b.field_);
  const std::size_t n = std::min(a.precision(), b.precision());
  PowerSeries out(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_[i] = a.field_->sub(a.coeffs_[i], b.coeffs_[i]);
  return out;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  require_same_field(*a.field_, *b.field_);
  const Field& f = *a.field_;
  const std::size_t n = std::min(a.precision(), b.precision());
  PowerSeries out(a.field_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      out.coeffs_[i + j] = f.add(out.coeffs_[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  }
  return out;
}

bool operator==(const PowerSeries& a, const PowerSeries& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

namespace {

// Fixed point of X = X^Q + c t^{Q+1}. The map contracts: the error e of an
// iterate becomes e^Q, so its valuation is multiplied by Q each round.
PowerSeries solve_fixed_point(const FieldPtr& field, Elem x0, std::size_t precision,
                              std::uint32_t curve_q, Elem forcing_coeff) {
  if (precision < 1) throw PrecisionTooLow("precision must be at least 1");
  const std::uint32_t q = curve_q == 0 ? field->q() : curve_q;
  std::uint64_t check = 1;
  while (check < q) check *= field->p();
  if (check != q) throw Error(std::to_string(q) + " is not a power of the characteristic");
  if (x0 >= field->q()) throw IndexOutOfRange("constant term outside the field");
  if (field->pow(x0, q) != x0)
    throw NotRational("constant term is not fixed by x -> x^" + std::to_string(q));

  const PowerSeries forcing = PowerSeries::monomial(field, precision, forcing_coeff, q + 1);
  PowerSeries s = PowerSeries::constant(field, precision, x0);
  for (std::size_t iter = 0; iter <= precision; ++iter) {
    PowerSeries next = s.frobenius_power(q) + forcing;
    if (next == s) return s;
    s = std::move(next);
  }
  throw Error("Artin-Schreier iteration did not stabilize");
}

}  // namespace

PowerSeries series_solve_artin_schreier(const FieldPtr& field, Elem s0, std::size_t precision,
                                        std::uint32_t curve_q) {
  // s = s^Q - t^{Q+1}
  return solve_fixed_point(field, s0, precision, curve_q, field->neg(1));
}

PowerSeries series_solve_chart_y(const FieldPtr& field, Elem v0, std::size_t precision,
                                 std::uint32_t curve_q) {
  // v = v^Q + w^{Q+1}
  return solve_fixed_point(field, v0, precision, curve_q, 1);
}

}  // namespace dcr::gfq
