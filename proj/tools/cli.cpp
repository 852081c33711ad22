#include "cli.hpp"

#include "sti/angles.hpp"
#include "sti/criterion.hpp"
#include "sti/integrate.hpp"
#include "sti/montecarlo.hpp"
#include "sti/raster.hpp"
#include "sti/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <ostream>
#include <stdexcept>

namespace sti::cli {

namespace {

using nlohmann::json;

constexpr double kRadToDeg = 180.0 / kPi;

void emit(const RunConfig& config, std::ostream& out, const json& doc) {
  out << (config.json ? doc.dump() : doc.dump(2)) << "\n";
}

double r12(double x) { return round_significant(x); }

std::optional<unsigned> threads_from_env(std::ostream& err) {
  const char* raw = std::getenv("STI_THREADS");
  if (raw == nullptr || *raw == '\0') return 0u;
  unsigned value = 0;
  const char* end = raw + std::strlen(raw);
  const auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc() || ptr != end) {
    err << "error: STI_THREADS must be a non-negative integer, got '" << raw
        << "'\n";
    return std::nullopt;
  }
  return value;
}

int run_prob(const RunConfig& c, std::ostream& out) {
  const ProbabilityResult r =
      probability(c.outer_resolution, c.inner_resolution, c.threads);
  emit(c, out,
       {{"estimate", r12(r.estimate)},
        {"lower", r12(r.bounds->lo)},
        {"upper", r12(r.bounds->hi)},
        {"method", std::string(to_string(r.method))},
        {"outer_resolution", r.outer_resolution},
        {"inner_resolution", r.inner_resolution}});
  return kExitOk;
}

int run_quad(const RunConfig& c, std::ostream& out) {
  const ProbabilityResult r = probability_quadrature(c.nodes);
  emit(c, out,
       {{"estimate", r12(r.estimate)},
        {"method", std::string(to_string(r.method))},
        {"nodes", c.nodes}});
  return kExitOk;
}

int run_mc(const RunConfig& c, std::ostream& out) {
  const McEstimate m = estimate(c.samples, c.seed);
  emit(c, out,
       {{"p_hat", r12(m.p_hat)},
        {"std_error", r12(m.std_error)},
        {"samples", m.samples},
        {"seed", m.seed},
        {"conditional_p_hat", r12(m.conditional_p_hat)},
        {"conditional_std_error", r12(m.conditional_std_error)},
        {"conditional_samples", m.conditional_samples},
        {"obtuse_samples", m.obtuse_samples},
        {"obtuse_successes", m.obtuse_successes},
        {"proposals", m.proposals}});
  return kExitOk;
}

int run_frame(const RunConfig& c, std::ostream& out) {
  const FrameGrid frame = render_frame(*c.gamma, c.points, c.threads);
  const std::filesystem::path sidecar = sidecar_path(c.output_path);
  write_pgm(frame, c.output_path);
  write_sidecar(frame, sidecar);
  emit(c, out,
       {{"pgm", c.output_path.string()},
        {"sidecar", sidecar.string()},
        {"gamma", r12(frame.gamma())},
        {"points", frame.points()},
        {"negative_fraction", r12(negative_fraction(frame))}});
  return kExitOk;
}

int run_constants(const RunConfig& c, std::ostream& out) {
  const double g_crit = gamma_crit();
  const double g_bb = bb_bound();
  constexpr int kRows = 8;
  json table = json::array();
  for (int k = 0; k < kRows; ++k) {
    const double g = g_crit + k * (kHalfPi - g_crit) / kRows;
    table.push_back({{"gamma", r12(g)},
                     {"i_gamma", r12(i_of_gamma(g))},
                     {"e_gamma", r12(e_of_gamma(g))}});
  }
  emit(c, out,
       {{"gamma_crit", r12(g_crit)},
        {"gamma_crit_degrees", r12(g_crit * kRadToDeg)},
        {"bb_bound", r12(g_bb)},
        {"bb_bound_degrees", r12(g_bb * kRadToDeg)},
        {"i_e_table", std::move(table)}});
  return kExitOk;
}

json check_json(const CheckResult& r) {
  return {{"name", r.name},
          {"checked", r.checked},
          {"failures", r.failures},
          {"worst", std::isfinite(r.worst) ? json(r12(r.worst)) : json(nullptr)},
          {"threshold", r12(r.threshold)},
          {"passed", r.passed()}};
}

int run_verify(const RunConfig& c, std::ostream& out) {
  VerifyReport report = run_identity_suite(c.seed, c.samples);
  report.checks.push_back(check_infinitesimal_limit(c.seed));
  json checks = json::array();
  for (const CheckResult& r : report.checks) checks.push_back(check_json(r));
  emit(c, out,
       {{"seed", report.seed},
        {"samples", c.samples},
        {"passed", report.passed_count()},
        {"failed", report.failed_count()},
        {"checks", std::move(checks)}});
  return report.all_passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

double round_significant(double x) noexcept {
  if (!std::isfinite(x) || x == 0.0) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::variant<RunConfig, int> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out, std::ostream& err) {
  RunConfig config;
  bool degrees = false;
  double gamma = 0.0;

  CLI::App app{"Certified probability of the strong triangle inequality "
               "a + b > c + h for random hyperbolic triangles",
               "sti"};
  app.require_subcommand(1);
  app.add_flag("--json", config.json, "Compact single-line JSON output");

  auto* prob = app.add_subcommand("prob", "Certified Riemann enclosure of the probability");
  prob->add_option("--outer", config.outer_resolution, "Outer cells per gamma regime")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24))
      ->capture_default_str();
  prob->add_option("--inner", config.inner_resolution, "Inner cells per zero-curve integral")
      ->check(CLI::Range(std::size_t{2}, std::size_t{1} << 24))
      ->capture_default_str();

  auto* quad = app.add_subcommand("quad", "Gauss-Legendre estimate (no error bound)");
  quad->add_option("--nodes", config.nodes, "Nodes per dimension")
      ->check(CLI::Range(std::size_t{4}, std::size_t{4096}))
      ->capture_default_str();

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate by rejection sampling");
  mc->add_option("--samples", config.samples, "Accepted triangles")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mc->add_option("--seed", config.seed, "SplitMix64 seed")->capture_default_str();

  auto* frame = app.add_subcommand("frame", "Rasterize the strength field at fixed gamma");
  frame->add_option("--gamma", gamma, "Angle gamma (radians unless --degrees)")->required();
  frame->add_flag("--degrees", degrees, "Interpret --gamma in degrees");
  frame->add_option("--points", config.points, "Raster width and height")
      ->check(CLI::Range(std::size_t{16}, std::size_t{1} << 15))
      ->capture_default_str();
  frame->add_option("--out", config.output_path, "Output PGM path")->required();

  std::uint64_t verify_samples = kDefaultVerifySamples;
  auto* verify = app.add_subcommand("verify", "Run the sampled identity suite");
  verify->add_option("--samples", verify_samples, "Samples per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", config.seed, "SplitMix64 seed")->capture_default_str();

  auto* constants = app.add_subcommand("constants", "Print gamma_crit, bb_bound and i/e tables");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  if (prob->parsed()) config.command = Command::Prob;
  if (quad->parsed()) config.command = Command::Quad;
  if (mc->parsed()) config.command = Command::Mc;
  if (frame->parsed()) {
    config.command = Command::Frame;
    config.gamma = degrees ? gamma / kRadToDeg : gamma;
  }
  if (verify->parsed()) {
    config.command = Command::Verify;
    config.samples = verify_samples;
  }
  if (constants->parsed()) config.command = Command::Constants;

  const std::optional<unsigned> threads = threads_from_env(err);
  if (!threads) return kExitInvalid;
  config.threads = *threads;
  return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.command) {
      case Command::Prob:
        return run_prob(config, out);
      case Command::Quad:
        return run_quad(config, out);
      case Command::Mc:
        return run_mc(config, out);
      case Command::Frame:
        if (!config.gamma) throw DomainError("frame: --gamma is required");
        return run_frame(config, out);
      case Command::Verify:
        return run_verify(config, out);
      case Command::Constants:
        return run_constants(config, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  auto parsed = parse_args(args, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  return run(std::get<RunConfig>(parsed), out, err);
}

}  // namespace sti::cli
