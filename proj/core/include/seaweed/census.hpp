#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "seaweed/report.hpp"

namespace seaweed {

struct CensusOptions {
    Family family = Family::C;
    int min_rank = 1;
    int max_rank = 1;
    int oracle_max_rank = 0;  // oracle cross-check for ranks up to this bound
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    bool timing = false;  // adds wall time per record; output is then no longer reproducible
};

/// The i-th subset pair of rank n in enumeration order: the base-3 digit of
/// i at position k-1 places alpha_k in pi1 only (0), pi2 only (1) or both (2).
Seaweed census_seaweed(Family family, int rank, std::uint64_t i);
std::uint64_t census_size(int rank);

/// Runs every check on one seaweed. Oracle checks run when `with_oracle`.
CensusRecord evaluate(const Seaweed& s, bool with_oracle, std::uint64_t seed);

struct CensusSummary {
    std::uint64_t pairs = 0;
    std::uint64_t frobenius = 0;
    std::uint64_t oracle_checked = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> violation_report;  // "literal: check, check"
};

/// Records reach `sink` in enumeration order regardless of `jobs`.
CensusSummary run_census(const CensusOptions& opts, const std::function<void(const CensusRecord&)>& sink);

}  // namespace seaweed
