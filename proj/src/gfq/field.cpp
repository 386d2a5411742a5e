#include "dcr/gfq.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "dcr/error.hpp"

namespace dcr::gfq {

namespace {

// Polynomials over F_p, little-endian, used only while constructing a field.
using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime and small; Fermat.
  std::uint64_t result = 1, base = a % p;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

PrimePoly poly_rem(PrimePoly f, const PrimePoly& g, std::uint32_t p) {
  trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint32_t lead_inv = inv_mod_p(g.back(), p);
  while (f.size() > dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const std::uint64_t c = std::uint64_t{f.back()} * lead_inv % p;
    for (std::size_t i = 0; i <= dg; ++i) {
      const std::uint64_t sub = c * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m,
                      std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
  return poly_rem(std::move(prod), m, p);
}

PrimePoly digits(std::uint64_t n, std::uint32_t p, std::size_t len) {
  PrimePoly d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(n % p);
    n /= p;
  }
  return d;
}

bool is_irreducible(const PrimePoly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      PrimePoly g = digits(code, p, d);
      g.push_back(1);
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimePower PrimePower::make(std::uint64_t p, std::uint64_t r) {
  if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
  if (r < 1) throw TooLarge("exponent must be at least 1");
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < r; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw TooLarge(std::to_string(p) + "^" + std::to_string(r) + " exceeds 2^16");
  }
  return {static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(r),
          static_cast<std::uint32_t>(q)};
}

PrimePower PrimePower::factor(std::uint64_t q) {
  if (q > kMaxOrder) throw TooLarge(std::to_string(q) + " exceeds 2^16");
  if (q < 2) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  std::uint64_t p = q;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t rest = q, r = 0;
  while (rest % p == 0) {
    rest /= p;
    ++r;
  }
  if (rest != 1) throw NotPrimePower(std::to_string(q) + " is not a prime power");
  return make(p, r);
}

Field::Field(PrimePower pp, std::vector<std::uint32_t> modulus)
    : pp_(pp), modulus_(std::move(modulus)) {
  const std::uint32_t p = pp_.p, q = pp_.q;
  radix_.resize(pp_.r);
  for (std::uint32_t i = 0, v = 1; i < pp_.r; ++i, v *= p) radix_[i] = v;

  // Search for a primitive element in encoding order with the reference
  // polynomial arithmetic, then tabulate logs.
  const PrimePoly mod(modulus_.begin(), modulus_.end());
  auto to_poly = [&](Elem a) {
    PrimePoly d = digits(a, p, pp_.r);
    trim(d);
    return d;
  };
  auto from_poly = [&](const PrimePoly& f) {
    Elem e = 0;
    for (std::size_t i = f.size(); i-- > 0;) e = e * p + f[i];
    return e;
  };
  auto pow_ref = [&](Elem a, std::uint64_t e) {
    PrimePoly result{1}, base = to_poly(a);
    for (; e > 0; e >>= 1) {
      if (e & 1) result = poly_mulmod(result, base, mod, p);
      base = poly_mulmod(base, base, mod, p);
    }
    return from_poly(result);
  };

  const std::uint64_t order = q - 1;
  const auto factors = prime_factors(order);
  Elem g = 1;
  for (Elem cand = 1; cand < q; ++cand) {
    bool primitive = pow_ref(cand, order) == 1;
    for (auto l : factors) primitive = primitive && pow_ref(cand, order / l) != 1;
    if (primitive) {
      g = cand;
      break;
    }
  }

  exp_.assign(2 * order, 0);
  log_.assign(q, 0);
  const PrimePoly gp = to_poly(g);
  PrimePoly cur{1};
  for (std::uint64_t i = 0; i < order; ++i) {
    const Elem e = from_poly(cur);
    exp_[i] = exp_[i + order] = e;
    log_[e] = static_cast<std::uint32_t>(i);
    cur = poly_mulmod(cur, gp, mod, p);
  }

  if (q <= kTableOrder) {
    add_table_.resize(std::size_t{q} * q);
    mul_table_.resize(std::size_t{q} * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        add_table_[a * q + b] = static_cast<std::int32_t>(add(a, b));
        mul_table_[a * q + b] = static_cast<std::int32_t>(mul(a, b));
      }
  }
}

FieldPtr Field::build(std::uint32_t p, std::uint32_t r) {
  const PrimePower pp = PrimePower::make(p, r);
  if (r == 1) return FieldPtr(new Field(pp, {0, 1}));
  const std::uint64_t candidates = pp.q;  // p^r choices of c_0..c_{r-1}
  for (std::uint64_t code = 0; code < candidates; ++code) {
    PrimePoly f = digits(code, p, r);
    f.push_back(1);
    if (f[0] == 0) continue;  // divisible by Y
    if (is_irreducible(f, p)) return FieldPtr(new Field(pp, std::move(f)));
  }
  throw Error("no irreducible polynomial found");  // unreachable for prime p
}

FieldPtr Field::from_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (modulus.size() < 2 || modulus.back() != 1)
    throw NotIrreducible("modulus must be monic of degree >= 1");
  const PrimePower pp = PrimePower::make(p, modulus.size() - 1);
  for (auto c : modulus)
    if (c >= p) throw ParseError("modulus coefficient out of range");
  if (!is_irreducible(modulus, p)) throw NotIrreducible("modulus is reducible over F_p");
  return FieldPtr(new Field(pp, std::move(modulus)));
}

FieldPtr Field::parse(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::uint64_t p = 0, r = 0;
  if (!(in >> p >> r)) throw ParseError("field line must start with p r");
  std::vector<std::uint32_t> modulus;
  std::uint64_t c;
  while (in >> c) modulus.push_back(static_cast<std::uint32_t>(c));
  if (modulus.size() != r + 1) throw ParseError("expected r+1 modulus coefficients");
  if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
  return from_modulus(static_cast<std::uint32_t>(p), std::move(modulus));
}

Elem Field::generator() const {
  if (pp_.r >= 2) return pp_.p;
  return (pp_.p - modulus_[0]) % pp_.p;
}

Elem Field::add(Elem a, Elem b) const {
  const std::uint32_t p = pp_.p;
  if (pp_.r == 1) {
    const Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem out = 0;
  for (std::uint32_t i = 0; i < pp_.r; ++i) {
    const std::uint32_t s = a % p + b % p;
    out += (s >= p ? s - p : s) * radix_[i];
    a /= p;
    b /= p;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  const std::uint32_t p = pp_.p;
  if (pp_.r == 1) return a == 0 ? 0 : p - a;
  Elem out = 0;
  for (std::uint32_t i = 0; i < pp_.r; ++i) {
    const std::uint32_t d = a % p;
    out += (d == 0 ? 0 : p - d) * radix_[i];
    a /= p;
  }
  return out;
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DivisionByZero("inverse of zero");
  const std::uint32_t order = pp_.q - 1;
  return exp_[(order - log_[a]) % order];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = pp_.q - 1;
  return exp_[(std::uint64_t{log_[a]} * (e % order)) % order];
}

Elem Field::from_int(std::int64_t n) const {
  const std::int64_t p = pp_.p;
  return static_cast<Elem>(((n % p) + p) % p);
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const { return digits(a, pp_.p, pp_.r); }

Elem Field::from_coeffs(std::span<const std::uint32_t> c) const {
  if (c.size() != pp_.r) throw DimensionMismatch("coefficient vector must have length r");
  Elem e = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= pp_.p) throw ParseError("coefficient out of range");
    e = e * pp_.p + c[i];
  }
  return e;
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> out(pp_.q);
  for (Elem a = 0; a < pp_.q; ++a) out[a] = a;
  return out;
}

std::vector<Elem> Field::prime_basis() const { return radix_; }

std::optional<FieldTables> Field::tables() const {
  if (add_table_.empty()) return std::nullopt;
  return FieldTables{add_table_.data(), mul_table_.data(), pp_.q};
}

std::string Field::serialize() const {
  std::ostringstream out;
  out << pp_.p << ' ' << pp_.r;
  for (auto c : modulus_) out << ' ' << c;
  return out.str();
}

void require_same_field(const Field& a, const Field& b) {
  if (&a != &b && !a.same_as(b))
    throw FieldMismatch("operands live in different fields (" + a.serialize() + " vs " +
                       b.serialize() + ")");
}

FieldElement::FieldElement(FieldPtr field, Elem value) : field_(std::move(field)), value_(value) {
  if (value_ >= field_->q()) throw IndexOutOfRange("encoding out of range for field");
}

FieldElement FieldElement::inv() const { return {field_, field_->inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t e) const { return {field_, field_->pow(value_, e)}; }
FieldElement FieldElement::frobenius() const { return {field_, field_->frobenius(value_)}; }
FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(*a.field_, *b.field_);
  return {a.field_, a.field_->div(a.value_, b.value_)};
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.value_ == b.value_ && a.field_->same_as(*b.field_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value(); }

std::vector<FieldElement> enumerate_elements(const FieldPtr& field) {
  std::vector<FieldElement> out;
  out.reserve(field->q());
  for (Elem a : field->elements()) out.emplace_back(field, a);
  return out;
}

}  // namespace dcr::gfq
