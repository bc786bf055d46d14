#pragma once

#include <string>
#include <vector>

namespace hecke {

/// The end-to-end verification suite: every check the library promises,
/// runnable from the CLI (verify-all) and from the acceptance test binary.
struct AcceptanceOptions {
    /// Path to the hecke CLI binary; used by the exit-code criterion. When
    /// empty, the verdict/exit-code mapping is exercised in-process instead.
    std::string cli_path;
    /// Directory holding the documented fixture files.
    std::string fixtures_dir = "tests/fixtures";
};

struct CriterionResult {
    int number;
    std::string name;
    bool pass;
    std::string detail;
    double seconds;
};

constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int number, const AcceptanceOptions& options);
std::vector<CriterionResult> run_all_acceptance(const AcceptanceOptions& options);

/// "[PASS] criterion 3: ... (0.12s)" with the detail appended.
std::string format_result(const CriterionResult& result);

} // namespace hecke
