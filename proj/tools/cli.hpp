#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sti::cli {

enum class Command { Prob, Quad, Mc, Frame, Verify, Constants };

struct RunConfig {
  Command command = Command::Prob;
  std::size_t outer_resolution = 2048;
  std::size_t inner_resolution = 2048;
  std::size_t nodes = 64;
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 42;
  std::optional<double> gamma;  // radians
  std::size_t points = 1000;
  std::filesystem::path output_path;
  bool json = false;     // compact single-line JSON instead of indented
  unsigned threads = 0;  // 0 = hardware concurrency
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Parses arguments (without the program name). Returns the configuration,
/// or the exit code to use when parsing ends early (help, or an error that
/// has already been reported on `err`). STI_THREADS is read from the
/// environment.
std::variant<RunConfig, int> parse_args(const std::vector<std::string>& args,
                                        std::ostream& out, std::ostream& err);

/// Executes one subcommand. JSON goes to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_args followed by run.
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

/// x rounded to 12 significant digits, so the shortest JSON rendering of the
/// result has at most 12 digits.
double round_significant(double x) noexcept;

}  // namespace sti::cli
