#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "niep/blockcomp.hpp"
#include "niep/circulant.hpp"
#include "niep/matrix.hpp"

namespace niep {

enum class OutputFormat { Json, Csv, Pretty };

// Exit statuses of run(): every invocation ends in exactly one of these.
inline constexpr int kExitOk = 0;            // construction + verification passed
inline constexpr int kExitIoError = 1;       // I/O or parse failure
inline constexpr int kExitGateFailed = 2;    // a named condition gate failed
inline constexpr int kExitVerifyFailed = 3;  // spectrum verification failed

/// One CLI invocation: a command, its inputs (file paths, or inline JSON
/// when the string starts with '{'), and the knobs it needs.
struct JobSpec {
    std::string command;  // check | realize-suleimanova | realize-pair |
                          // compose-even | compose-odd | circulant | guo |
                          // guo-pair | verify | extract
    std::vector<std::string> inputs;

    double gamma = 1.0;
    int sign = +1;
    double t = 0.0;
    double t1 = 0.0;
    double t2 = 0.0;
    double theta = 0.0;
    int branch = +1;
    GuoVariant variant = GuoVariant::General;
    std::optional<std::vector<double>> phi1;
    std::optional<std::vector<double>> phi2;
    std::optional<double> tol;  // overrides the scale-aware default
    PairingPolicy pairing = PairingPolicy::Sorted;
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> out;  // output path; stdout when absent
    int power_sum_count = 4;         // K for `check`
    int jll_depth = 3;               // M for `check`
};

/// Executes one job. Artifacts go to job.out or `out`; diagnostics to `err`.
/// Every constructed matrix is verified before it is emitted; the exit
/// status is one of the kExit* codes above.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Executes a JSON array of jobs sequentially, one JSON-line result each.
int run_batch(const std::string& jobs_json, std::ostream& report, std::ostream& err);

/// Renders a matrix: shared JSON schema, CSV (complex entries as "re+imj"
/// only when the imaginary part is nonzero), or an aligned table that shows
/// dyadic entries with denominator <= 4 as fractions.
std::string emit(const DenseMatrix& m, OutputFormat format);

}  // namespace niep
