#pragma once

// The claim registry: every headline identity bound to an exhaustive,
// parameter-sweeping check with machine-readable reports.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cycdes/classes.hpp"

namespace cycdes {

struct VerificationReport {
    std::string claim;
    std::vector<std::pair<std::string, std::string>> parameters;
    bool pass = false;
    std::string counterexample;  // nonempty iff fail
    double elapsed_seconds = 0.0;

    std::string params_str() const;
    std::string to_json_line() const;
};

struct ClaimInfo {
    std::string id;
    std::string description;
    int min_n = 2;
    int default_lo = 2;
    int default_hi = 6;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo* find_claim(const std::string& id);

struct VerifyOptions {
    int threads = 1;
    bool run_all = false;                 // keep sweeping past a failure
    std::optional<std::string> j_filter;  // restrict J-parametrized claims
};

/// Runs one claim over [n_lo, n_hi]; reports are ordered canonically by
/// parameter cell. Throws std::invalid_argument for unknown ids or ranges
/// below the claim's domain.
std::vector<VerificationReport> run_claim(const std::string& id, int n_lo, int n_hi,
                                          const VerifyOptions& options = {});

}  // namespace cycdes
