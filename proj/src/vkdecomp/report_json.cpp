#include "dcr/vkdecomp.hpp"

namespace dcr::vkdecomp {

namespace {

json::ordered summand_json(const SummandReport& s) {
  const LocalityCertificate& c = s.certificate;
  json::ordered cert;
  cert["status"] = c.certified() ? "certified" : "inconclusive";
  if (!c.certified()) cert["reason"] = c.reason;
  cert["endo_dim"] = c.endo_basis.size();
  cert["lambda"] = c.lambda;
  cert["nil_ideal_dim"] = c.nil_ideal.size();
  cert["nil_exponent"] = c.nil_exponent;
  cert["spot_checks"] = s.spot_checks;
  if (s.embedding) {
    const EmbeddingReport& e = *s.embedding;
    cert["embedding"] = {{"rank", e.rank},
                         {"injective", e.injective},
                         {"equivariant", e.equivariant},
                         {"regular_equivariant", e.regular_equivariant},
                         {"submodule", e.submodule}};
  } else {
    cert["embedding"] = nullptr;
  }
  cert["routes_agree"] = s.routes_agree;

  json::ordered out;
  out["k"] = s.k;
  out["dim"] = s.dim;
  out["indecomposable"] = s.indecomposable;
  out["simple"] = s.simple;
  out["certificate"] = std::move(cert);
  return out;
}

}  // namespace

json::ordered to_json(const DecompositionReport& report, bool include_timings) {
  json::ordered doc;
  doc["q"] = report.q;
  doc["genus"] = report.genus;
  json::ordered summands = json::ordered::array();
  for (const auto& s : report.summands) summands.push_back(summand_json(s));
  doc["summands"] = std::move(summands);
  doc["semisimple"] = report.semisimple;
  if (report.witness) doc["witness"] = *report.witness;
  doc["seed"] = report.seed;
  doc["policy"] = report.policy;

  json::ordered checks = json::ordered::object();
  for (const auto& c : report.checks) {
    json::ordered entry;
    entry["status"] = c.passed ? "pass" : "fail";
    for (const auto& [key, value] : c.detail.items()) entry[key] = value;
    checks[c.name] = std::move(entry);
  }
  doc["checks"] = std::move(checks);
  doc["certified"] = report.certified();

  if (include_timings) {
    json::ordered t = json::ordered::object();
    for (const auto& [name, ms] : report.timings_ms) t[name] = ms;
    doc["timings_ms"] = std::move(t);
  }
  return doc;
}

}  // namespace dcr::vkdecomp
