#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace hodgemod {

/// The self-check battery behind `hodgemod verify`: runs every identity the
/// construction must satisfy over a grid of (n, d, g) cells and reports a
/// pass/fail matrix.
struct VerifyOptions {
    int max_rank = 3;
    int max_genus = 4;
    std::optional<std::filesystem::path> cache_dir;
};

struct VerifyCell {
    int n = 0;
    long long d = 0;
    int g = 0;
    /// (check name, passed); checks not applicable to the cell are absent.
    std::vector<std::pair<std::string, bool>> checks;
    /// Empty unless some check failed; names the identity and the first
    /// differing coefficient.
    std::string failure_detail;

    bool passed() const;
};

struct VerifyOutcome {
    std::vector<VerifyCell> cells;
    bool all_passed = false;
};

/// Checks per cell: closed-form agreement (n <= 3), the chi(t) closed form
/// and the vanishing of the full-space chi, Euler/signature vanishing,
/// agreement of the bivariate diagonal with the univariate Betti recursion,
/// the Jacobian product identity, symmetry/duality/nonnegativity/
/// normalization, and (spot checks) the d -> d + n invariance computed
/// without the memo shortcut.
VerifyOutcome run_verify(const VerifyOptions& options);

std::string format_verify_matrix(const VerifyOutcome& outcome);

}  // namespace hodgemod
