#pragma once

// Command implementations behind the canrep executable. Each returns text
// plus a status so the CLI stays a thin argument parser.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dcr/gfq.hpp"
#include "dcr/json.hpp"
#include "dcr/sampling.hpp"
#include "dcr/sl2.hpp"

namespace dcr::app {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

struct RunConfig {
  std::optional<std::uint64_t> q;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> r;
  SamplingPolicy policy;
  std::optional<std::uint32_t> ext_degree;  // free-action scope; default all m in {1, 2} within caps
  bool timings = false;
};

// Resolves --q or --p/--r (which must agree when both are given).
// Throws NotPrimePower, NonPrime, TooLarge or ParseError.
gfq::FieldPtr resolve_field(const RunConfig& config);

struct VerifyResult {
  json::ordered report;
  bool certified = false;
};

// verify_theorem plus the geometric checks (free action, transitivity at
// infinity, canonical degree, vanishing orders).
VerifyResult run_verify(const gfq::FieldPtr& field, const RunConfig& config);

// Two-space indented JSON with a trailing newline.
std::string render_json(const json::ordered& doc);

struct OrdersResult {
  json::ordered rows;
  std::string text;
  bool ok = false;
};

OrdersResult run_orders(const gfq::FieldPtr& field);

// Header "q g k" (or "q g all" for the full graded matrix), then the matrix
// dump. Throws IndexOutOfRange for a bad k.
std::string matrix_dump(const sl2::GroupElement& g, std::optional<int> k);

// Throws ParseError if the file is missing or not a report.
json::ordered load_report(const std::string& path);

std::string render_report(const json::ordered& report);

}  // namespace dcr::app
