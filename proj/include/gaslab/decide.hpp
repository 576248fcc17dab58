// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/dispatch.hpp>

#include <string>
#include <vector>

namespace gaslab {

/// Answers to the pattern-selection questionnaire.
struct DecisionAnswers {
    bool needs_upgradeability = false;
    bool extensive_features_or_large_code = false;
    bool frequent_upgrades = false;
    bool modularity_priority = false;

    bool operator==(const DecisionAnswers&) const = default;
};

/// Advisor output: the recommended pattern, why it fits, and what it costs.
struct Recommendation {
    Pattern pattern = Pattern::Classic;
    std::vector<std::string> rationale;  ///< never empty
    std::vector<std::string> cautions;
};

/// Total mapping from answers to a recommendation:
///  - no upgradeability needed        -> Classic
///  - extensive features/large code,
///    or modularity as a priority     -> Diamond
///  - otherwise                       -> Proxy
Recommendation decide(const DecisionAnswers& answers);

}  // namespace gaslab
