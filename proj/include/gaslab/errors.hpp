// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gaslab {

/// Invalid input: malformed config, impossible request, bad flag value.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
    /// Joins every violation so callers see the full list at once.
    explicit ValidationError(const std::vector<std::string>& violations)
        : std::runtime_error(join(violations)) {}

  private:
    static std::string join(const std::vector<std::string>& violations) {
        std::string all = "invalid input:";
        for (const auto& v : violations) {
            all += "\n  - ";
            all += v;
        }
        return all;
    }
};

/// Filesystem-level failure: unreadable or unwritable path.
class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

}  // namespace gaslab
