// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/schedule.hpp>

namespace gaslab {

std::vector<std::string> GasSchedule::validate() const {
    std::vector<std::string> violations;
    if (refund_cap_divisor < 1) violations.push_back("refund_cap_divisor must be >= 1");
    if (cold_sload <= warm_sload) violations.push_back("cold_sload must exceed warm_sload");
    if (cold_account_access <= warm_account_access)
        violations.push_back("cold_account_access must exceed warm_account_access");
    return violations;
}

}  // namespace gaslab
