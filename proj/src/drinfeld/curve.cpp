#include <algorithm>
#include <set>
#include <sstream>

#include "dcr/drinfeld.hpp"
#include "dcr/error.hpp"

namespace dcr::drinfeld {

bool on_curve(const gfq::Field& f, std::uint32_t curve_q, Elem x, Elem y, Elem z) {
  const Elem lhs = f.sub(f.mul(x, f.pow(y, curve_q)), f.mul(f.pow(x, curve_q), y));
  return lhs == f.pow(z, std::uint64_t{curve_q} + 1);
}

bool on_curve(const gfq::FieldElement& x, const gfq::FieldElement& y,
              const gfq::FieldElement& z) {
  gfq::require_same_field(*x.field(), *y.field());
  gfq::require_same_field(*x.field(), *z.field());
  return on_curve(*x.field(), x.field()->q(), x.value(), y.value(), z.value());
}

std::string_view point_class_name(PointClass c) {
  switch (c) {
    case PointClass::affine: return "affine";
    case PointClass::infinity_generic: return "infinity";
    case PointClass::infinity_x: return "[1:0:0]";
    case PointClass::infinity_y: return "[0:1:0]";
  }
  return "?";
}

ProjectivePoint ProjectivePoint::make(FieldPtr field, std::uint32_t curve_q, Elem x, Elem y,
                                      Elem z) {
  const gfq::Field& f = *field;
  for (Elem e : {x, y, z})
    if (e >= f.q()) throw IndexOutOfRange("coordinate outside the field");
  const Elem lead = x != 0 ? x : y != 0 ? y : z;
  if (lead == 0) throw NotOnCurve("[0:0:0] is not a projective point");
  const Elem s = f.inv(lead);
  x = f.mul(x, s);
  y = f.mul(y, s);
  z = f.mul(z, s);
  if (!on_curve(f, curve_q, x, y, z)) throw NotOnCurve("point does not lie on the curve");
  return ProjectivePoint(std::move(field), curve_q, x, y, z);
}

PointClass ProjectivePoint::point_class() const {
  if (z_ != 0) return PointClass::affine;
  if (x_ != 0 && y_ != 0) return PointClass::infinity_generic;
  return x_ != 0 ? PointClass::infinity_x : PointClass::infinity_y;
}

std::string ProjectivePoint::serialize() const {
  std::ostringstream out;
  out << x_ << ' ' << y_ << ' ' << z_;
  return out.str();
}

bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) {
  return a.x_ == b.x_ && a.y_ == b.y_ && a.z_ == b.z_ && a.curve_q_ == b.curve_q_ &&
         a.field_->same_as(*b.field_);
}

bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
  if (a.z_ != b.z_) return a.z_ < b.z_;
  if (a.x_ != b.x_) return a.x_ < b.x_;
  return a.y_ < b.y_;
}

ProjectivePoint act(const sl2::GroupElement& g, const ProjectivePoint& p) {
  gfq::require_same_field(*g.field(), *p.field());
  const gfq::Field& f = *p.field();
  const Elem x = f.add(f.mul(g.a(), p.x()), f.mul(g.b(), p.y()));
  const Elem y = f.add(f.mul(g.c(), p.x()), f.mul(g.d(), p.y()));
  return ProjectivePoint::make(p.field(), p.curve_q(), x, y, p.z());
}

std::vector<ProjectivePoint> points_at_infinity(const FieldPtr& field) {
  std::vector<ProjectivePoint> out;
  for (Elem y : field->elements()) out.push_back(ProjectivePoint::make(field, 1, y, 0));
  out.push_back(ProjectivePoint::make(field, 0, 1, 0));
  return out;
}

std::vector<ProjectivePoint> affine_points_over_extension(const FieldPtr& field, std::uint32_t m) {
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    order *= field->q();
    if (order > kMaxAffineSearchOrder)
      throw TooLarge("affine point search needs q^m <= 2^8");
  }
  const gfq::Extension ext = gfq::build_extension(field, m);
  const gfq::Field& big = *ext.ext;
  const std::uint32_t q = field->q();
  std::vector<ProjectivePoint> out;
  for (Elem x = 0; x < big.q(); ++x) {
    const Elem xq = big.pow(x, q);
    for (Elem y = 0; y < big.q(); ++y) {
      const Elem lhs = big.sub(big.mul(x, big.pow(y, q)), big.mul(xq, y));
      if (lhs == 1) out.push_back(ProjectivePoint::make(ext.ext, q, x, y, 1));
    }
  }
  return out;
}

FreeActionReport verify_free_action(const FieldPtr& field, std::uint32_t m) {
  FreeActionReport report;
  report.q = field->q();
  report.m = m;
  report.scope = "GF(" + std::to_string(field->q()) + "^" + std::to_string(m) +
                 ")-rational points of the affine chart";
  const auto points = affine_points_over_extension(field, m);
  report.points = points.size();
  report.vacuous = points.empty();
  if (points.empty()) return report;

  const gfq::Extension ext = gfq::build_extension(field, m);
  std::vector<sl2::GroupElement> group;
  for (const auto& g : sl2::enumerate_group(field)) group.push_back(g.mapped(ext));
  for (const auto& p : points)
    for (const auto& g : group) {
      ++report.comparisons;
      const bool fixed = act(g, p) == p;
      if (fixed != g.is_identity())
        report.violations.push_back("g = " + g.serialize() + (fixed ? " fixes " : " moves ") +
                                    p.serialize());
    }
  return report;
}

TransitivityReport verify_transitivity_at_infinity(const FieldPtr& field) {
  TransitivityReport report;
  const auto group = sl2::enumerate_group(field);
  const auto infinity = points_at_infinity(field);
  report.infinity_points = infinity.size();
  const ProjectivePoint base = ProjectivePoint::make(field, 1, 0, 0);

  std::set<ProjectivePoint> orbit;
  for (const auto& g : group) {
    const ProjectivePoint image = act(g, base);
    orbit.insert(image);
    if (image == base) report.stabilizer.push_back(g);
  }
  report.orbit.assign(orbit.begin(), orbit.end());
  report.orbit_is_everything =
      orbit == std::set<ProjectivePoint>(infinity.begin(), infinity.end());

  const std::size_t q = field->q();
  report.stabilizer_upper_triangular =
      std::all_of(report.stabilizer.begin(), report.stabilizer.end(),
                  [](const sl2::GroupElement& g) { return g.c() == 0; });
  // Upper triangular elements of SL_2 number q(q-1); equal size plus
  // containment gives equality.
  report.stabilizer_order_ok = report.stabilizer.size() == q * (q - 1);
  report.orbit_divides_group = !orbit.empty() && group.size() % orbit.size() == 0 &&
                               group.size() / orbit.size() == report.stabilizer.size();
  return report;
}

namespace {

void check_index(std::uint32_t q, int i, int j) {
  if (i < 0 || j < 0 || i + j > static_cast<int>(q) - 2)
    throw IndexOutOfRange("differential index (" + std::to_string(i) + "," + std::to_string(j) +
                          ") outside 0 <= i+j <= q-2");
}

}  // namespace

int vanishing_order_closed_form(std::uint32_t q, int i, int j, PointClass point_class) {
  check_index(q, i, j);
  const int qi = static_cast<int>(q);
  switch (point_class) {
    case PointClass::affine: return 0;
    case PointClass::infinity_generic: return qi - 2 - (i + j);
    case PointClass::infinity_x: return qi - 2 - i + j * qi;
    case PointClass::infinity_y: return qi - 2 - j + i * qi;
  }
  return 0;
}

std::size_t default_series_precision(std::uint32_t q) {
  const std::size_t n = q;
  return n * n + n + 1;
}

int vanishing_order_via_series(const FieldPtr& field, int i, int j, const ProjectivePoint& p,
                               std::size_t precision) {
  gfq::require_same_field(*field, *p.field());
  const std::uint32_t q = p.curve_q();
  check_index(q, i, j);
  if (!p.at_infinity()) throw Error("series cross-check is only defined at infinity");
  if (precision == 0) precision = default_series_precision(q);
  const gfq::Field& f = *field;
  const std::size_t t_exp = q - 2 - static_cast<std::size_t>(i + j);

  gfq::PowerSeries coefficient(field, precision);
  if (p.x() != 0) {
    // Chart X: s = Y/X, t = Z/X, omega = -t^{q-2-(i+j)} s^j dt.
    const Elem s0 = f.div(p.y(), p.x());
    const auto s = gfq::series_solve_artin_schreier(field, s0, precision, q);
    coefficient = gfq::PowerSeries::monomial(field, precision, f.neg(1), t_exp) *
                  s.pow(static_cast<std::uint64_t>(j));
  } else {
    // Chart Y: v = X/Y, w = Z/Y, omega = -w^{q-2-(i+j)} v^i dw.
    const Elem v0 = f.div(p.x(), p.y());
    const auto v = gfq::series_solve_chart_y(field, v0, precision, q);
    coefficient = gfq::PowerSeries::monomial(field, precision, f.neg(1), t_exp) *
                  v.pow(static_cast<std::uint64_t>(i));
  }
  const auto val = coefficient.valuation();
  if (!val)
    throw PrecisionTooLow("no nonzero coefficient below t^" + std::to_string(precision));
  return static_cast<int>(*val);
}

long canonical_degree_check(std::uint32_t q, int i, int j) {
  const long generic = q - 1;  // [1:y:0] with y != 0
  return generic * vanishing_order_closed_form(q, i, j, PointClass::infinity_generic) +
         vanishing_order_closed_form(q, i, j, PointClass::infinity_x) +
         vanishing_order_closed_form(q, i, j, PointClass::infinity_y);
}

std::vector<OrderRow> order_table(const FieldPtr& field) {
  const std::uint32_t q = field->q();
  const auto infinity = points_at_infinity(field);
  std::vector<OrderRow> rows;
  for (int k = 0; k <= static_cast<int>(q) - 2; ++k)
    for (int i = k; i >= 0; --i) {
      const int j = k - i;
      OrderRow row;
      row.i = i;
      row.j = j;
      row.affine = vanishing_order_closed_form(q, i, j, PointClass::affine);
      row.infinity_generic = vanishing_order_closed_form(q, i, j, PointClass::infinity_generic);
      row.infinity_x = vanishing_order_closed_form(q, i, j, PointClass::infinity_x);
      row.infinity_y = vanishing_order_closed_form(q, i, j, PointClass::infinity_y);
      row.series_agree = true;
      for (const auto& p : infinity) {
        const int expected = vanishing_order_closed_form(q, i, j, p.point_class());
        if (vanishing_order_via_series(field, i, j, p) != expected) row.series_agree = false;
      }
      row.total = canonical_degree_check(q, i, j);
      rows.push_back(row);
    }
  return rows;
}

}  // namespace dcr::drinfeld
