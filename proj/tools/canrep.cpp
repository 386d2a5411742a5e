// canrep: verify the decomposition of the canonical representation of
// SL_2(F_q) on the Drinfeld curve and inspect its pieces.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "dcr/app.hpp"
#include "dcr/error.hpp"

namespace {

using namespace dcr;

void add_field_options(CLI::App& cmd, app::RunConfig& cfg) {
  cmd.add_option("--q", cfg.q, "field order (a prime power)");
  cmd.add_option("--p", cfg.p, "characteristic");
  cmd.add_option("--r", cfg.r, "degree over the prime field");
}

int emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return app::kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << '\n';
    return app::kConfigError;
  }
  out << text;
  return app::kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Canonical representation of SL_2(F_q) on the Drinfeld curve"};
  cli.require_subcommand(1);

  app::RunConfig cfg;
  std::string policy = "auto";
  std::string out_path;
  std::string format = "json";
  std::optional<std::size_t> samples;

  auto* verify = cli.add_subcommand("verify", "run every check and write a JSON report");
  add_field_options(*verify, cfg);
  verify->add_option("--policy", policy, "exhaustive, sampled or auto")
      ->check(CLI::IsMember({"auto", "exhaustive", "sampled"}));
  verify->add_option("--seed", cfg.policy.seed, "sampling seed");
  verify->add_option("--n", samples, "sampled pair count")->check(CLI::PositiveNumber);
  verify->add_option("--out", out_path, "report path (default stdout)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--ext-degree", cfg.ext_degree, "extension degree for the free-action check")
      ->check(CLI::Range(1u, 16u));
  verify->add_flag("--timings", cfg.timings, "include stage timings in the report");

  auto* orders = cli.add_subcommand("orders", "vanishing orders of the basis differentials");
  add_field_options(*orders, cfg);
  orders->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  orders->add_option("--out", out_path, "output path (default stdout)");

  std::vector<std::uint32_t> g_entries;
  std::optional<int> k;
  auto* matrix = cli.add_subcommand("matrix", "dump the action matrix of g");
  add_field_options(*matrix, cfg);
  matrix->add_option("--g", g_entries, "entries a b c d as field encodings")
      ->expected(4)
      ->required();
  matrix->add_option("--k", k, "degree block (default: full graded matrix)");
  matrix->add_option("--out", out_path, "output path (default stdout)");

  std::string in_path;
  auto* report = cli.add_subcommand("report", "summarize a report");
  add_field_options(*report, cfg);
  report->add_option("--in", in_path, "report produced by verify (default: run inline)");
  report->add_option("--seed", cfg.policy.seed, "sampling seed for an inline run");
  report->add_option("--out", out_path, "output path (default stdout)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? app::kOk : app::kConfigError;
  }

  try {
    if (policy == "exhaustive") cfg.policy.mode = SamplingPolicy::Mode::exhaustive;
    if (policy == "sampled") cfg.policy.mode = SamplingPolicy::Mode::sampled;
    if (samples) cfg.policy.samples = *samples;

    if (*report && !in_path.empty()) {
      const auto doc = app::load_report(in_path);
      return emit(app::render_report(doc), out_path);
    }

    const auto field = app::resolve_field(cfg);

    if (*verify) {
      const auto result = app::run_verify(field, cfg);
      const std::string text = format == "json" ? app::render_json(result.report)
                                                : app::render_report(result.report);
      const int code = emit(text, out_path);
      if (code != app::kOk) return code;
      return result.certified ? app::kOk : app::kCheckFailed;
    }
    if (*orders) {
      const auto result = app::run_orders(field);
      const int code =
          emit(format == "json" ? app::render_json(result.rows) : result.text, out_path);
      if (code != app::kOk) return code;
      return result.ok ? app::kOk : app::kCheckFailed;
    }
    if (*matrix) {
      const auto g = sl2::GroupElement::make(field, g_entries[0], g_entries[1], g_entries[2],
                                             g_entries[3]);
      return emit(app::matrix_dump(g, k), out_path);
    }
    if (*report) {
      const auto result = app::run_verify(field, cfg);
      const int code = emit(app::render_report(result.report), out_path);
      if (code != app::kOk) return code;
      return result.certified ? app::kOk : app::kCheckFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return app::kConfigError;
  }
  return app::kOk;
}
