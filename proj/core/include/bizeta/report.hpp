#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bizeta/abs_irr.hpp"

namespace bizeta {

/// `p=<prime>; k=<ext>; f=<poly in x>; h=<poly in x>`, fields separated by
/// `;` or newlines; k and h are optional.
struct CurveSpec {
    std::uint64_t p = 0;
    unsigned k = 1;
    std::vector<Integer> f;
    std::vector<Integer> h;
};

/// ParseError (with line and column) on malformed text, NotPrimeError for a
/// composite p.
CurveSpec parseCurveSpec(std::string_view text);

/// The validated model over F_{p^k}; coefficients are reduced mod p.
HyperellipticModel buildModel(const CurveSpec& spec, const Limits& limits = {});

/// Canonical one-line form, e.g. `p=3; k=1; f=x^3+x; h=0`.
std::string formatCurveSpec(const CurveSpec& spec);

/// Header `g=<int>; pic0=<rational>`, then one `n nu value` triple per line.
/// Blank lines and `#` comments are ignored; omitted entries are zero.
/// Throws ParseError or InvalidMeasureError.
Measure parseMeasureTable(std::string_view text);

enum class OutputFormat { text, machine };

struct RunConfig {
    std::optional<CurveSpec> spec;
    std::optional<std::string> measureTablePath;
    /// Required to match the table header when given.
    std::optional<int> genus;
    unsigned baseChange = 1;
    /// Kapranov / divisor-count horizon; 2g+2 when unset.
    std::optional<unsigned> seriesOrder;
    OutputFormat format = OutputFormat::text;
    bool timing = true;
    Limits limits;
};

struct AnalysisReport {
    std::string source;  // canonical spec, or "measure-table:<path>"
    int genus = 0;
    unsigned baseChange = 1;
    std::optional<Integer> q;
    std::vector<Integer> pointCounts;
    std::optional<LPolynomial> L;
    std::optional<StratumTable> strata;
    Measure measure;
    TwoVarZeta zeta;
    CheckReport theorem2;
    CheckReport theorem3;
    CheckReport kapranov;
    CheckReport consistency;
    std::optional<double> seconds;

    bool allPassed() const;
};

AnalysisReport runAnalyze(const RunConfig& config);

std::string renderText(const AnalysisReport& report);

/// Canonical JSON: sorted keys, exact values as strings, two-space indent.
/// Timing is included only when present in the report.
std::string renderMachine(const AnalysisReport& report);

/// Parses a machine report and re-emits it canonically.
std::string canonicalize(std::string_view machineReport);

/// 2 for input errors, 3 for capacity, 4 for consistency failures, 1 otherwise.
int exitCodeFor(const std::exception& e);

/// 0 when every check passes, 4 otherwise. Errors propagate.
int runVerify(const RunConfig& config);

struct BatchEntry {
    std::size_t line = 0;
    std::string input;
    bool passed = false;
    int exitCode = 0;
    std::string message;
};

struct BatchSummary {
    std::vector<BatchEntry> entries;
    std::size_t passed = 0;
    std::size_t failed = 0;

    std::string render() const;
};

/// One curve spec (or JSON record with a "spec" string, optionally
/// "base_change") per line; blank and `#` lines are skipped. Lines are
/// processed concurrently with at most `workers` in flight; entries keep
/// input order. Throws ParseError when the file cannot be read.
BatchSummary runBatch(const std::string& inputPath, const RunConfig& defaults, unsigned workers = 0);

}  // namespace bizeta
