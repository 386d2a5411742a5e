#include "dcr/app.hpp"

#include <fstream>
#include <sstream>

#include "dcr/canrep.hpp"
#include "dcr/drinfeld.hpp"
#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

namespace dcr::app {

gfq::FieldPtr resolve_field(const RunConfig& config) {
  gfq::PrimePower pp;
  if (config.q) {
    pp = gfq::PrimePower::factor(*config.q);
    if ((config.p && *config.p != pp.p) || (config.r && *config.r != pp.r))
      throw ParseError("--q " + std::to_string(*config.q) + " disagrees with --p/--r");
  } else if (config.p) {
    pp = gfq::PrimePower::make(*config.p, config.r.value_or(1));
  } else {
    throw ParseError("one of --q or --p is required");
  }
  return gfq::Field::build(pp.p, pp.r);
}

namespace {

void add_check(json::ordered& checks, const std::string& name, bool passed, json::ordered detail,
               bool& all) {
  json::ordered entry;
  entry["status"] = passed ? "pass" : "fail";
  for (const auto& [key, value] : detail.items()) entry[key] = value;
  checks[name] = std::move(entry);
  all = all && passed;
}

template <class Fn>
void guarded(json::ordered& checks, const std::string& name, bool& all, Fn&& fn) {
  json::ordered detail = json::ordered::object();
  bool passed = false;
  try {
    passed = fn(detail);
  } catch (const std::exception& e) {
    detail["error"] = e.what();
  }
  add_check(checks, name, passed, std::move(detail), all);
}

}  // namespace

VerifyResult run_verify(const gfq::FieldPtr& field, const RunConfig& config) {
  const auto report = vkdecomp::verify_theorem(field, config.policy);
  VerifyResult out;
  out.report = vkdecomp::to_json(report, config.timings);
  bool all = report.certified();
  json::ordered& checks = out.report["checks"];
  const std::uint32_t q = field->q();

  guarded(checks, "free_action", all, [&](json::ordered& d) {
    std::vector<std::uint32_t> degrees;
    if (config.ext_degree) {
      degrees.push_back(*config.ext_degree);
    } else {
      for (std::uint32_t m : {1u, 2u}) {
        std::uint64_t order = 1;
        for (std::uint32_t i = 0; i < m; ++i) order *= q;
        if (order <= drinfeld::kMaxAffineSearchOrder) degrees.push_back(m);
      }
    }
    bool ok = true;
    json::ordered rows = json::ordered::array();
    for (std::uint32_t m : degrees) {
      const auto fa = drinfeld::verify_free_action(field, m);
      json::ordered row;
      row["m"] = m;
      row["points"] = fa.points;
      row["comparisons"] = fa.comparisons;
      row["vacuous"] = fa.vacuous;
      if (!fa.passed()) row["violations"] = fa.violations;
      rows.push_back(std::move(row));
      ok = ok && fa.passed();
    }
    d["extensions"] = std::move(rows);
    return ok;
  });

  guarded(checks, "transitivity", all, [&](json::ordered& d) {
    const auto t = drinfeld::verify_transitivity_at_infinity(field);
    d["orbit_size"] = t.orbit.size();
    d["infinity_points"] = t.infinity_points;
    d["stabilizer_order"] = t.stabilizer.size();
    d["stabilizer_upper_triangular"] = t.stabilizer_upper_triangular;
    return t.passed();
  });

  std::vector<drinfeld::OrderRow> table;
  guarded(checks, "vanishing_orders", all, [&](json::ordered& d) {
    table = drinfeld::order_table(field);
    bool ok = true;
    for (const auto& row : table) ok = ok && row.series_agree;
    d["rows"] = table.size();
    d["precision"] = drinfeld::default_series_precision(q);
    return ok;
  });

  guarded(checks, "canonical_degree", all, [&](json::ordered& d) {
    const long expected = static_cast<long>(q) * q - q - 2;
    bool ok = true;
    std::size_t rows = 0;
    for (const auto& idx : canrep::basis_indices(q)) {
      ok = ok && drinfeld::canonical_degree_check(q, idx.i, idx.j) == expected;
      ++rows;
    }
    for (const auto& row : table) ok = ok && row.total == expected;
    d["expected"] = expected;
    d["differentials"] = rows;
    return ok;
  });

  out.report["certified"] = all;
  out.certified = all;
  return out;
}

std::string render_json(const json::ordered& doc) { return doc.dump(2) + "\n"; }

OrdersResult run_orders(const gfq::FieldPtr& field) {
  OrdersResult out;
  out.rows = json::ordered::array();
  out.ok = true;
  const long expected = static_cast<long>(field->q()) * field->q() - field->q() - 2;
  std::ostringstream text;
  text << "i j affine inf_generic inf_x inf_y series total\n";
  for (const auto& row : drinfeld::order_table(field)) {
    const bool ok = row.series_agree && row.total == expected;
    out.ok = out.ok && ok;
    text << row.i << ' ' << row.j << ' ' << row.affine << ' ' << row.infinity_generic << ' '
         << row.infinity_x << ' ' << row.infinity_y << ' ' << (row.series_agree ? "ok" : "MISMATCH")
         << ' ' << row.total << '\n';
    json::ordered j;
    j["i"] = row.i;
    j["j"] = row.j;
    j["affine"] = row.affine;
    j["infinity_generic"] = row.infinity_generic;
    j["infinity_x"] = row.infinity_x;
    j["infinity_y"] = row.infinity_y;
    j["series_agree"] = row.series_agree;
    j["total"] = row.total;
    out.rows.push_back(std::move(j));
  }
  out.text = text.str();
  return out;
}

std::string matrix_dump(const sl2::GroupElement& g, std::optional<int> k) {
  const std::uint32_t q = g.field()->q();
  std::ostringstream os;
  os << q << ' ' << canrep::genus(q) << ' ';
  if (k) {
    os << *k << '\n' << canrep::action_block(*k, g).dump();
  } else {
    os << "all\n" << canrep::action_full(g).assembled().dump();
  }
  return os.str();
}

json::ordered load_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read report " + path);
  json::ordered doc;
  try {
    doc = json::ordered::parse(in);
  } catch (const std::exception& e) {
    throw ParseError("malformed report " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("q") || !doc.contains("summands") ||
      !doc.contains("checks"))
    throw ParseError("not a decomposition report: " + path);
  return doc;
}

std::string render_report(const json::ordered& report) {
  std::ostringstream os;
  os << "q: " << report.at("q").get<std::uint64_t>()
     << "  genus: " << report.at("genus").get<std::uint64_t>();
  if (report.contains("seed")) os << "  seed: " << report.at("seed").get<std::uint64_t>();
  os << "\n\nk  dim  indecomposable  simple\n";
  for (const auto& s : report.at("summands")) {
    os << s.at("k").get<int>() << "  " << s.at("dim").get<int>() << "  "
       << (s.at("indecomposable").get<bool>() ? "yes" : "no") << "  "
       << (s.at("simple").get<bool>() ? "yes" : "no") << '\n';
  }
  os << '\n';
  if (report.at("semisimple").get<bool>()) {
    os << "semisimple: yes\n";
  } else if (report.contains("witness")) {
    os << "semisimple: no (witness k=" << report.at("witness").get<int>() << ")\n";
  } else {
    os << "semisimple: no\n";
  }
  os << "\nchecks:\n";
  for (const auto& [name, entry] : report.at("checks").items())
    os << "  " << name << ": " << entry.at("status").get<std::string>() << '\n';
  if (report.contains("certified"))
    os << "\ncertified: " << (report.at("certified").get<bool>() ? "yes" : "no") << '\n';
  return os.str();
}

}  // namespace dcr::app
