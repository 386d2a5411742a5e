#include <algorithm>

#include "dcr/error.hpp"
#include "dcr/gfq.hpp"

namespace dcr::gfq {

UnivariatePoly::UnivariatePoly(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

UnivariatePoly UnivariatePoly::monomial(FieldPtr field, Elem c, std::size_t degree) {
  std::vector<Elem> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return UnivariatePoly(std::move(field), std::move(coeffs));
}

UnivariatePoly UnivariatePoly::field_equation(FieldPtr field) {
  const std::uint32_t q = field->q();
  std::vector<Elem> coeffs(q + 1, 0);
  coeffs[q] = 1;
  coeffs[1] = field->neg(1);
  return UnivariatePoly(std::move(field), std::move(coeffs));
}

void UnivariatePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem UnivariatePoly::eval(Elem x) const {
  const Field& f = *field_;
  Elem acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), coeffs_[i]);
  return acc;
}

UnivariatePoly UnivariatePoly::shifted(Elem a) const {
  const UnivariatePoly x_plus_a(field_, {a, 1});
  UnivariatePoly acc(field_);
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x_plus_a + UnivariatePoly(field_, {coeffs_[i]});
  return acc;
}

UnivariatePoly UnivariatePoly::rem(const UnivariatePoly& divisor) const {
  require_same_field(*field_, *divisor.field_);
  if (divisor.is_zero()) throw DivisionByZero("polynomial remainder by zero");
  const Field& f = *field_;
  std::vector<Elem> r = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const Elem lead_inv = f.inv(divisor.coeffs_.back());
  while (r.size() > dd) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    const std::size_t shift = r.size() - 1 - dd;
    const Elem c = f.mul(r.back(), lead_inv);
    for (std::size_t i = 0; i <= dd; ++i)
      r[shift + i] = f.sub(r[shift + i], f.mul(c, divisor.coeffs_[i]));
    r.pop_back();
  }
  return UnivariatePoly(field_, std::move(r));
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
  require_same_field(*a.field_, *b.field_);
  const Field& f = *a.field_;
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
  return UnivariatePoly(a.field_, std::move(out));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
  require_same_field(*a.field_, *b.field_);
  const Field& f = *a.field_;
  std::vector<Elem> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.sub(a.coeff(i), b.coeff(i));
  return UnivariatePoly(a.field_, std::move(out));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
  require_same_field(*a.field_, *b.field_);
  if (a.is_zero() || b.is_zero()) return UnivariatePoly(a.field_);
  const Field& f = *a.field_;
  std::vector<Elem> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] = f.add(out[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
  return UnivariatePoly(a.field_, std::move(out));
}

bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
  return a.field_->same_as(*b.field_) && a.coeffs_ == b.coeffs_;
}

}  // namespace dcr::gfq
