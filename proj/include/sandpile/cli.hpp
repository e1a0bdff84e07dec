#pragma once

#include <chrono>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sandpile::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

struct NRange {
    std::size_t first = 3;
    std::size_t last = 3;
};

/// Parses "A..B" with 3 <= A <= B.
NRange parse_range(const std::string& text);

struct VerifyEntry {
    std::size_t n = 0;
    bool passed = false;
    std::string detail;
};

struct VerifySummary {
    NRange range;
    std::vector<VerifyEntry> entries; // ordered by n
    std::optional<std::size_t> first_failure;
    std::chrono::duration<double> elapsed{};
};

/// Three-way group agreement (closed form, relations matrix, full Laplacian)
/// plus tree-count consistency for each n; with `pipeline`, also the staged
/// reduction checks. jobs = 0 picks the hardware thread count.
VerifySummary run_verify(NRange range, bool pipeline, unsigned jobs);

/// Entry point; `args` excludes the program name. Returns 0 on success,
/// 1 on a failed verification, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sandpile::cli
