#include <chrono>
#include <exception>
#include <functional>
#include <string>

#include "dcr/error.hpp"
#include "dcr/vkdecomp.hpp"

namespace dcr::vkdecomp {

namespace {

constexpr std::size_t kIntertwinerSamples = 1000;
constexpr std::size_t kSpotCheckSamples = 1000;

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Independent stream per (purpose, k).
std::uint64_t sub_seed(std::uint64_t seed, std::uint64_t tag, int k) {
  return splitmix(splitmix(seed ^ (tag << 32)) + static_cast<std::uint64_t>(k));
}

enum Tag : std::uint64_t { kTagVk = 1, kTagIntertwine = 2, kTagSpot = 3 };

struct PerK {
  std::optional<IntertwiningReport> intertwining;
  std::string intertwining_error;
  bool self_dual = false;
  bool restriction_ok = false;
  LocalityCertificate certificate;
  std::size_t units = 0;
  std::string spot_error;
  std::optional<EmbeddingReport> embedding;
  std::string embedding_error;
};

class Ledger {
 public:
  explicit Ledger(DecompositionReport& report) : report_(report) {}

  // Runs body, which fills detail and returns pass/fail; exceptions fail the
  // check and land in detail["error"].
  void run(const std::string& name, const std::function<bool(json::ordered&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    c.name = name;
    c.detail = json::ordered::object();
    try {
      c.passed = body(c.detail);
    } catch (const std::exception& e) {
      c.passed = false;
      c.detail["error"] = e.what();
    }
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
    report_.timings_ms.emplace_back(name, dt.count());
    report_.checks.push_back(std::move(c));
  }

 private:
  DecompositionReport& report_;
};

}  // namespace

bool DecompositionReport::certified() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  for (const auto& s : summands)
    if (!s.indecomposable || !s.routes_agree) return false;
  return !checks.empty() && summands.size() + 1 == q;
}

SemisimplicityVerdict semisimplicity_check(const DecompositionReport& report) {
  SemisimplicityVerdict v;
  v.semisimple = true;
  for (const auto& s : report.summands)
    if (!s.simple) {
      v.semisimple = false;
      v.witness = s.k;
      break;
    }
  return v;
}

SemisimplicityVerdict semisimplicity_check(const FieldPtr& field) {
  SemisimplicityVerdict v;
  v.semisimple = true;
  for (int k = 0; k + 2 <= static_cast<int>(field->q()); ++k)
    if (!is_simple(k, field->p())) {
      v.semisimple = false;
      v.witness = k;
      break;
    }
  return v;
}

DecompositionReport verify_theorem(const FieldPtr& field, const SamplingPolicy& policy) {
  const gfq::Field& f = *field;
  DecompositionReport report;
  report.p = f.p();
  report.r = f.r();
  report.q = f.q();
  report.genus = canrep::genus(f.q());
  report.seed = policy.seed;
  const int top = static_cast<int>(f.q()) - 2;
  const std::size_t count = static_cast<std::size_t>(top + 1);
  const std::size_t order = sl2::group_order(f.q());
  const bool exhaustive = policy.exhaustive_for(order);
  report.policy = std::string(mode_name(exhaustive ? SamplingPolicy::Mode::exhaustive
                                                   : SamplingPolicy::Mode::sampled));
  Ledger ledger(report);

  ledger.run("field", [&](json::ordered& d) {
    d["p"] = f.p();
    d["r"] = f.r();
    d["modulus"] = std::vector<std::uint32_t>(f.modulus().begin(), f.modulus().end());
    d["primitive"] = f.primitive();
    return f.q() >= 2;
  });

  ledger.run("genus", [&](json::ordered& d) {
    std::size_t total = 0;
    std::vector<std::size_t> dims;
    for (int k = 0; k <= top; ++k) {
      dims.push_back(static_cast<std::size_t>(k) + 1);
      total += dims.back();
    }
    const std::size_t basis = canrep::basis_indices(f.q()).size();
    d["genus"] = report.genus;
    d["basis_size"] = basis;
    d["summand_dims"] = dims;
    return total == report.genus && basis == report.genus &&
           report.genus == std::size_t{f.q()} * (f.q() - 1) / 2;
  });

  ledger.run("homomorphism", [&](json::ordered& d) {
    const auto h = canrep::verify_homomorphism(field, policy);
    d["exhaustive"] = h.exhaustive;
    d["seed"] = h.seed;
    d["pairs"] = h.pairs_checked;
    d["inverses"] = h.inverses_checked;
    d["block_diagonal"] = h.block_diagonal_checked;
    return true;
  });

  const auto group = sl2::enumerate_group(field);
  const auto gens = sl2::generators(field);

  ledger.run("vk_homomorphism", [&](json::ordered& d) {
    std::size_t pairs = 0;
    for (int k = 0; k <= top; ++k) {
      std::vector<Matrix> rho;
      rho.reserve(group.size());
      for (const auto& g : group) rho.push_back(vk_matrix(k, g));
      auto check = [&](std::size_t a, std::size_t b) {
        if (!(rho[a] * rho[b] == vk_matrix(k, group[a] * group[b])))
          throw HomomorphismViolation("V^" + std::to_string(k) + " at g = " + group[a].serialize() +
                                      ", h = " + group[b].serialize());
        ++pairs;
      };
      for (const auto& g : gens.elements)
        for (const auto& h : gens.elements)
          if (!(vk_matrix(k, g) * vk_matrix(k, h) == vk_matrix(k, g * h)))
            throw HomomorphismViolation("V^" + std::to_string(k) + " on generators " +
                                        g.serialize() + ", " + h.serialize());
      if (exhaustive) {
        for (std::size_t a = 0; a < group.size(); ++a)
          for (std::size_t b = 0; b < group.size(); ++b) check(a, b);
      } else {
        Rng rng(sub_seed(policy.seed, kTagVk, k));
        for (std::size_t s = 0; s < policy.samples; ++s) {
          const std::size_t a = rng.below(group.size());
          const std::size_t b = rng.below(group.size());
          check(a, b);
        }
      }
    }
    d["exhaustive"] = exhaustive;
    d["pairs"] = pairs;
    return true;
  });

  // Per-k certification is independent across k.
  std::vector<PerK> per_k(count);
  const auto per_k_start = std::chrono::steady_clock::now();
  parallel_for(count, [&](std::size_t idx) {
    const int k = static_cast<int>(idx);
    PerK& out = per_k[idx];
    try {
      out.intertwining =
          verify_intertwining(field, k, sub_seed(policy.seed, kTagIntertwine, k), kIntertwinerSamples);
      const Matrix t = duality_intertwiner(field, k);
      out.self_dual = out.intertwining->hom_contains_t && matfq::determinant(t) != 0;
    } catch (const std::exception& e) {
      out.intertwining_error = e.what();
    }
    out.restriction_ok = restriction_matches_vk(field, k);
    out.certificate = locality_certificate(field, k);
    if (out.certificate.certified()) {
      try {
        out.units =
            spot_check_certificate(field, out.certificate, sub_seed(policy.seed, kTagSpot, k),
                                   kSpotCheckSamples);
      } catch (const std::exception& e) {
        out.spot_error = e.what();
      }
    }
    try {
      out.embedding = embed_vk_into_group_algebra(field, k);
    } catch (const std::exception& e) {
      out.embedding_error = e.what();
    }
  });
  const std::chrono::duration<double, std::milli> per_k_ms =
      std::chrono::steady_clock::now() - per_k_start;
  report.timings_ms.emplace_back("per_k_certification", per_k_ms.count());

  ledger.run("intertwiners", [&](json::ordered& d) {
    bool ok = true;
    json::ordered rows = json::ordered::array();
    for (int k = 0; k <= top; ++k) {
      const PerK& pk = per_k[k];
      json::ordered row;
      row["k"] = k;
      if (pk.intertwining) {
        row["generators"] = pk.intertwining->generators_checked;
        row["samples"] = pk.intertwining->samples_checked;
      } else {
        row["error"] = pk.intertwining_error;
        ok = false;
      }
      rows.push_back(std::move(row));
    }
    d["per_k"] = std::move(rows);
    return ok;
  });

  ledger.run("self_duality", [&](json::ordered& d) {
    bool ok = true;
    std::vector<std::size_t> hom_dims;
    for (int k = 0; k <= top; ++k) {
      ok = ok && per_k[k].self_dual;
      hom_dims.push_back(per_k[k].intertwining ? per_k[k].intertwining->hom_dim : 0);
    }
    d["hom_dims"] = hom_dims;
    return ok;
  });

  ledger.run("restriction_to_L", [&](json::ordered& d) {
    bool ok = true;
    for (int k = 0; k <= top; ++k) ok = ok && per_k[k].restriction_ok;
    d["degrees"] = count;
    return ok;
  });

  ledger.run("locality", [&](json::ordered& d) {
    bool ok = true;
    json::ordered failures = json::ordered::array();
    for (int k = 0; k <= top; ++k)
      if (!per_k[k].certificate.certified()) {
        ok = false;
        failures.push_back({{"k", k}, {"reason", per_k[k].certificate.reason}});
      }
    d["certified"] = ok ? count : count - failures.size();
    if (!failures.empty()) d["inconclusive"] = std::move(failures);
    return ok;
  });

  ledger.run("locality_spot_check", [&](json::ordered& d) {
    bool ok = true;
    for (int k = 0; k <= top; ++k)
      if (!per_k[k].certificate.certified() || !per_k[k].spot_error.empty()) {
        ok = false;
        if (!per_k[k].spot_error.empty()) d["error_k" + std::to_string(k)] = per_k[k].spot_error;
      }
    d["samples_per_k"] = kSpotCheckSamples;
    return ok;
  });

  AugmentationReport aug;
  ledger.run("augmentation_ideal", [&](json::ordered& d) {
    aug = augmentation_nilpotency_check(group_algebra_L(field));
    d["exponent"] = aug.exponent;
    d["expected"] = aug.expected;
    d["power_dims"] = aug.power_dims;
    return aug.passed();
  });

  ledger.run("embedding_chain", [&](json::ordered& d) {
    bool ok = true;
    for (int k = 0; k <= top; ++k)
      if (!per_k[k].embedding) {
        ok = false;
        d["error_k" + std::to_string(k)] = per_k[k].embedding_error;
      }
    d["degrees"] = count;
    return ok;
  });

  for (int k = 0; k <= top; ++k) {
    PerK& pk = per_k[k];
    SummandReport s;
    s.k = k;
    s.dim = static_cast<std::size_t>(k) + 1;
    s.simple = is_simple(k, f.p());
    const bool locality_route = pk.certificate.certified() && pk.spot_error.empty();
    const bool embedding_route = pk.embedding.has_value() && aug.passed();
    s.routes_agree = locality_route == embedding_route;
    s.indecomposable = locality_route && embedding_route;
    s.spot_checks = locality_route ? kSpotCheckSamples : 0;
    s.certificate = std::move(pk.certificate);
    s.embedding = std::move(pk.embedding);
    report.summands.push_back(std::move(s));
  }

  ledger.run("routes_agree", [&](json::ordered& d) {
    bool ok = true;
    for (const auto& s : report.summands) ok = ok && s.routes_agree;
    d["degrees"] = count;
    return ok;
  });

  ledger.run("digit_sets", [&](json::ordered& d) {
    // I(k) is also the support of row k of Pascal's triangle mod p.
    for (int k = 0; k <= top; ++k) {
      const auto row = canrep::binomial_row(f, static_cast<std::size_t>(k));
      std::set<std::uint64_t> support;
      for (std::size_t m = 0; m < row.size(); ++m)
        if (row[m] != 0) support.insert(m);
      if (support != digit_set_I(static_cast<std::uint64_t>(k), f.p())) {
        d["mismatch_k"] = k;
        return false;
      }
    }
    std::vector<int> simple;
    for (const auto& s : report.summands)
      if (s.simple) simple.push_back(s.k);
    d["simple_degrees"] = simple;
    return true;
  });

  const auto verdict = semisimplicity_check(report);
  report.semisimple = verdict.semisimple;
  report.witness = verdict.witness;

  ledger.run("semisimplicity", [&](json::ordered& d) {
    const auto direct = semisimplicity_check(field);
    d["semisimple"] = verdict.semisimple;
    if (verdict.witness) d["witness"] = *verdict.witness;
    const bool agree = direct.semisimple == verdict.semisimple && direct.witness == verdict.witness;
    const bool expected = verdict.semisimple == (f.r() == 1) &&
                          (verdict.semisimple || (verdict.witness && *verdict.witness ==
                                                                         static_cast<int>(f.p())));
    return agree && expected;
  });

  ledger.run("multiplicity_one", [&](json::ordered& d) {
    std::set<std::size_t> dims;
    for (const auto& s : report.summands) dims.insert(s.dim);
    d["distinct_dims"] = dims.size();
    return dims.size() == report.summands.size() && report.summands.size() == count;
  });

  return report;
}

}  // namespace dcr::vkdecomp
