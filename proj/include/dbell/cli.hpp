#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <dbell/degenerate_bell.hpp>
#include <dbell/numeric.hpp>

namespace dbell::cli {

enum class Command { table, verify, eval };
enum class Family { bell, stirling1, stirling2, dstirling, dbell };
enum class Format { text, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct CliConfig {
    Command command = Command::verify;
    Family family = Family::dbell;
    unsigned n_max = 12;
    unsigned n = 0; // eval only
    std::optional<double> lambda;
    std::optional<double> x;
    unsigned terms = kDefaultTerms;
    double tol = kDefaultTol;
    bool dobinski = false;
    Format format = Format::text;
    std::optional<std::string> output;
};

/// Bad flags or values; maps to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses argv-style arguments (without the program name). Throws
/// UsageError on invalid input. Returns nullopt when help was requested,
/// with the help text stored in `help`.
std::optional<CliConfig> parse_args(const std::vector<std::string>& args, std::string& help);

using VerifyItem = std::variant<VerificationReport, NumericCheck>;

/// Numeric identities are only checked up to this n; beyond it the values
/// outgrow what an absolute 1e-9 tolerance can resolve in double precision.
inline constexpr unsigned kNumericGridMaxN = 8;

/// Exact identity sweep for n = 0..n_max plus the numeric grid, sorted by
/// (identity, n, lambda, x).
std::vector<VerifyItem> collect_verification(unsigned n_max, unsigned terms, double tol);

bool item_passed(const VerifyItem& item);

struct RunResult {
    std::string output;
    int exit_code = kExitOk;
};

RunResult run_table(const CliConfig& config);
RunResult run_verify(const CliConfig& config);
RunResult run_eval(const CliConfig& config);

/// Full front end: parse, dispatch, write to `out` or --output. Returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dbell::cli
