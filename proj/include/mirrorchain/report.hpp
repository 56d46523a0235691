// Copyright 2026 The mirrorchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace mirrorchain {

/// Outcome of one named property check.
struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// A list of checks; a report passes when every check passes.
struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back({std::move(name), passed, std::move(detail)});
    }
    void append(const Report &other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    [[nodiscard]] bool ok() const {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return true;
    }
    [[nodiscard]] std::size_t failures() const {
        std::size_t n = 0;
        for (const auto &c : checks) {
            n += c.passed ? 0 : 1;
        }
        return n;
    }
};

} // namespace mirrorchain
