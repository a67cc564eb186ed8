#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace bornsim::cli {

// Exit codes shared by all subcommands.
inline constexpr int exit_ok = 0;
inline constexpr int exit_bad_params = 2;
inline constexpr int exit_tolerance = 3;
inline constexpr int exit_io = 4;

enum class OutputFormat { csv, tsv };

struct SplitOptions {
  std::uint64_t n = 1;
  std::uint64_t m = 1;
  bool trace = false;
  std::string out;
  OutputFormat format = OutputFormat::csv;
};

struct DiscriminateOptions {
  std::uint64_t n = 2;
  std::vector<double> exponents;
  std::string out;
  OutputFormat format = OutputFormat::csv;
};

enum class BranchMode { exact, sampled };

struct BranchesOptions {
  double alpha = 0.05;
  double beta = 0.1;
  std::vector<std::uint64_t> n_grid;
  BranchMode mode = BranchMode::exact;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  std::string out;
  OutputFormat format = OutputFormat::csv;
};

/// Runs the equalization protocol for (n, m) and writes per-dot amplitude
/// rows plus a summary row with the Born probabilities and dot-count
/// ratios. Exit 0 iff the final dot norms are equal within tolerance.
int cmd_split(const SplitOptions& options);

/// Writes one row (exponent, P_L_before, P_L_after, change) per requested
/// exponent of the deformation-discrimination experiment.
int cmd_discriminate(const DiscriminateOptions& options);

/// Writes one row per requested history length N with the exact (or
/// sampled) typical fraction, the atypical complement, the central
/// binomial fraction, the concentration estimate and whether it holds.
int cmd_branches(const BranchesOptions& options);

/// Flat key=value config file ('#' starts a comment). Throws
/// std::runtime_error when the file cannot be read.
std::map<std::string, std::string> load_config(const std::string& path);

/// Directory for outputs when --out is not given: $BORNSIM_OUT_DIR if
/// set, otherwise the current directory.
std::string default_output_dir();

/// `<default_output_dir()>/<command>.<csv|tsv>` unless explicit_out is
/// nonempty, in which case it is returned unchanged.
std::string resolve_out_path(const std::string& explicit_out,
                             const std::string& command, OutputFormat format);

const char* format_name(OutputFormat format);

}  // namespace bornsim::cli
