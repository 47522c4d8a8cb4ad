#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli/reference.hpp"
#include "tilecount/arrangement.hpp"
#include "tilecount/error.hpp"

namespace tilecount::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitBadArguments = 2,
    kExitNumericFailure = 3,
    kExitIoFailure = 4,
    kExitMismatch = 5,
};

inline constexpr int kDefaultMaxN = 64;

/// Counts for one n, or the failure that stopped them.
struct Evaluation {
    int n = 0;
    std::optional<CountSummary> summary;
    std::optional<Error> error;
    std::chrono::duration<double> elapsed{};
};

/// Evaluates counts() for every n in [lo, hi] on up to `threads` workers.
/// Results come back ordered by n.
std::vector<Evaluation> evaluate_range(int lo, int hi, Tolerance tol, unsigned threads,
                                       SplitAlgorithm algorithm = SplitAlgorithm::Fast);

struct VerifyRow {
    CountSummary computed;
    ReferenceRow reference;
    bool match;
    std::chrono::duration<double> elapsed;
};

struct VerifyReport {
    std::vector<VerifyRow> rows;
    bool all_match = true;
};

/// Compares counts for n = 2..max_n with the reference table on V, E and F.
/// Throws Error(InvalidArgument) unless 2 <= max_n <= 39; rethrows the first
/// numeric failure.
VerifyReport verify(int max_n, Tolerance tol, unsigned threads);

enum class TableFormat { Text, Csv, Json };

inline constexpr const char* kCsvHeader = "N,n,F,E,V,per_ray,central";

/// "<E> edges <V> vertices <F> tiles"
std::string count_line(const CountSummary& c);

nlohmann::json to_json(const CountSummary& c);

std::string format_table(std::span<const CountSummary> rows, TableFormat format);

/// Entry point behind the `tilecount` executable.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tilecount::cli
