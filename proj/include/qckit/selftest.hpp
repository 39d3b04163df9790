/*
   Copyright 2026 The qckit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qckit {

inline constexpr std::uint64_t kDefaultSeed = 20261018;

struct SelftestItem {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    /// Instances that contradicted the checked claim, one line each.
    std::vector<std::string> findings;
};

struct SelftestReport {
    std::uint64_t seed = kDefaultSeed;
    std::vector<SelftestItem> items;
    double seconds = 0;
    bool passed() const;
};

/// Names accepted by run_selftest_item, in run order.
const std::vector<std::string>& selftest_names();
SelftestItem run_selftest_item(const std::string& name, std::uint64_t seed);
/// Runs every item; progress, when set, is called after each one.
SelftestReport run_selftest(std::uint64_t seed = kDefaultSeed,
                            const std::function<void(const SelftestItem&)>& progress = {});

}  // namespace qckit
