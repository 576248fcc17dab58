// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/decide.hpp>

namespace gaslab {

Recommendation decide(const DecisionAnswers& answers) {
    Recommendation rec;

    if (!answers.needs_upgradeability) {
        rec.pattern = Pattern::Classic;
        rec.rationale.push_back(
            "No upgrade path is required, so a single immutable contract is the simplest and "
            "cheapest fit.");
        rec.rationale.push_back(
            "Calls go straight to the contract with no dispatch overhead, and deployment is a "
            "single transaction.");
        rec.cautions.push_back(
            "Changing the code later means deploying a replacement contract and migrating any "
            "stored data to it by hand.");
        return rec;
    }

    const bool diamond = answers.extensive_features_or_large_code || answers.modularity_priority ||
                         (answers.frequent_upgrades && answers.extensive_features_or_large_code);
    if (diamond) {
        rec.pattern = Pattern::Diamond;
        if (answers.extensive_features_or_large_code) {
            rec.rationale.push_back(
                "The feature set or code size is expected to outgrow what a single contract "
                "comfortably holds; facets remove that ceiling.");
        }
        if (answers.modularity_priority) {
            rec.rationale.push_back(
                "Functionality is split across facets that can be added, replaced, or removed "
                "independently, keeping each rollout small.");
        }
        if (answers.frequent_upgrades) {
            rec.rationale.push_back(
                "Frequent upgrades only redeploy the facets that changed instead of the whole "
                "application.");
        }
        if (rec.rationale.empty()) {
            rec.rationale.push_back(
                "Modular facet routing fits applications that expect to keep growing.");
        }
        rec.cautions.push_back(
            "Highest up-front deployment cost of the three patterns: the dispatcher, its "
            "maintenance facets, and the selector table all cost gas before the app does "
            "anything.");
        rec.cautions.push_back(
            "Every call pays for the selector lookup on top of the delegate hop.");
        return rec;
    }

    rec.pattern = Pattern::Proxy;
    rec.rationale.push_back(
        "Upgradeability with a compact codebase and an occasional release cadence is exactly "
        "what a single proxy with a swappable implementation provides.");
    rec.rationale.push_back(
        "Stored data lives in the proxy, so an upgrade is one implementation deployment plus one "
        "pointer update.");
    rec.cautions.push_back(
        "Each upgrade redeploys the entire implementation contract, even for small changes.");
    rec.cautions.push_back("Every call pays the delegate-dispatch overhead.");
    return rec;
}

}  // namespace gaslab
