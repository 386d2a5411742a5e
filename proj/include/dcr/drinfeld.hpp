#pragma once

// The Drinfeld curve C : X Y^q - X^q Y - Z^{q+1} = 0, the SL_2(F_q) action on
// its points, and vanishing orders of the differentials
// omega_{i,j} = x^i y^j / x^q dx.
//
// The curve parameter q is always the order of the base field. Points may
// have coordinates in an extension GF(q^m); they carry curve_q separately.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "dcr/gfq.hpp"
#include "dcr/sl2.hpp"

namespace dcr::drinfeld {

using gfq::Elem;
using gfq::FieldPtr;

bool on_curve(const gfq::Field& field, std::uint32_t curve_q, Elem x, Elem y, Elem z);
// Curve parameter taken from the elements' field.
bool on_curve(const gfq::FieldElement& x, const gfq::FieldElement& y,
              const gfq::FieldElement& z);

enum class PointClass { affine, infinity_generic, infinity_x, infinity_y };

std::string_view point_class_name(PointClass c);

// [x : y : z] scaled so the first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  // Normalizes; throws NotOnCurve (also for the all-zero triple).
  static ProjectivePoint make(FieldPtr field, std::uint32_t curve_q, Elem x, Elem y, Elem z);
  static ProjectivePoint make(FieldPtr field, Elem x, Elem y, Elem z) {
    const std::uint32_t q = field->q();
    return make(std::move(field), q, x, y, z);
  }

  const FieldPtr& field() const { return field_; }
  std::uint32_t curve_q() const { return curve_q_; }
  Elem x() const { return x_; }
  Elem y() const { return y_; }
  Elem z() const { return z_; }
  bool at_infinity() const { return z_ == 0; }
  PointClass point_class() const;

  // "x y z"
  std::string serialize() const;

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b);
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b);

 private:
  ProjectivePoint(FieldPtr field, std::uint32_t curve_q, Elem x, Elem y, Elem z)
      : field_(std::move(field)), curve_q_(curve_q), x_(x), y_(y), z_(z) {}

  FieldPtr field_;
  std::uint32_t curve_q_;
  Elem x_, y_, z_;
};

// [x:y:z] -> [a x + b y : c x + d y : z]. g must live in P's field.
ProjectivePoint act(const sl2::GroupElement& g, const ProjectivePoint& p);

// [1:y:0] for y in encoding order, then [0:1:0].
std::vector<ProjectivePoint> points_at_infinity(const FieldPtr& field);

// Brute force over GF(q^m)^2; requires q^m <= 2^8 (throws TooLarge).
std::vector<ProjectivePoint> affine_points_over_extension(const FieldPtr& field, std::uint32_t m);

inline constexpr std::uint32_t kMaxAffineSearchOrder = 1u << 8;

struct FreeActionReport {
  std::uint32_t q = 0;
  std::uint32_t m = 1;
  std::size_t points = 0;
  std::size_t comparisons = 0;
  bool vacuous = false;
  std::vector<std::string> violations;
  std::string scope;

  bool passed() const { return violations.empty(); }
};

FreeActionReport verify_free_action(const FieldPtr& field, std::uint32_t m);

struct TransitivityReport {
  std::vector<ProjectivePoint> orbit;
  std::vector<sl2::GroupElement> stabilizer;
  std::size_t infinity_points = 0;
  bool orbit_is_everything = false;
  bool stabilizer_upper_triangular = false;
  bool stabilizer_order_ok = false;
  bool orbit_divides_group = false;

  bool passed() const {
    return orbit_is_everything && stabilizer_upper_triangular && stabilizer_order_ok &&
           orbit_divides_group;
  }
};

TransitivityReport verify_transitivity_at_infinity(const FieldPtr& field);

// 0, q-2-(i+j), q-2-i+jq, q-2-j+iq for the four classes. Throws
// IndexOutOfRange unless i, j >= 0 and i + j <= q - 2.
int vanishing_order_closed_form(std::uint32_t q, int i, int j, PointClass point_class);

// q^2 + q + 1, above the largest order q^2 - q - 2.
std::size_t default_series_precision(std::uint32_t q);

// Valuation of the chart coefficient -t^{q-2-(i+j)} s^j (chart X) or
// -w^{q-2-(i+j)} v^i (chart Y) at a point at infinity. precision 0 selects
// the default. Throws PrecisionTooLow if the coefficient vanishes below the
// precision.
int vanishing_order_via_series(const FieldPtr& field, int i, int j, const ProjectivePoint& p,
                               std::size_t precision = 0);

// Sum of closed-form orders over all points of C.
long canonical_degree_check(std::uint32_t q, int i, int j);

struct OrderRow {
  int i = 0;
  int j = 0;
  int affine = 0;
  int infinity_generic = 0;
  int infinity_x = 0;
  int infinity_y = 0;
  bool series_agree = false;
  long total = 0;
};

// One row per basis index (degree ascending, i descending), series
// cross-checked at every point at infinity.
std::vector<OrderRow> order_table(const FieldPtr& field);

}  // namespace dcr::drinfeld
