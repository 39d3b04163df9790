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

// Acceptance driver: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

#include "qckit/selftest.hpp"

namespace {

struct Criterion {
    const char* id;
    const char* item;
    double limit_seconds;  // 0 means no limit
};

constexpr Criterion kCriteria[] = {
    {"1", "factorization", 10},          {"2", "crt-roundtrip", 30},
    {"3", "propodual", 60},              {"4", "main:thm", 300},
    {"5", "cor:condi", 0},               {"6", "thm:equivalent2", 60},
    {"7", "selfdual-existence", 30},     {"8", "th:prime", 60},
    {"9", "multiplier-consistency", 10}, {"image", "prop:image", 0},
};

}  // namespace

int main() {
    bool all = true;
    for (const auto& c : kCriteria) {
        const auto it = qckit::run_selftest_item(c.item, qckit::kDefaultSeed);
        const bool in_time = c.limit_seconds == 0 || it.seconds < c.limit_seconds;
        const bool ok = it.passed && in_time;
        all = all && ok;
        std::printf("%s criterion %s (%s) %.2fs: %s", ok ? "PASS" : "FAIL", c.id, c.item, it.seconds, it.detail.c_str());
        if (!in_time) std::printf(" [over %.0fs limit]", c.limit_seconds);
        for (const auto& f : it.findings) std::printf(" [finding: %s]", f.c_str());
        std::printf("\n");
        std::fflush(stdout);
    }

    const std::string cmd = std::string("\"") + QCKIT_CLI_PATH + "\" selftest > /dev/null";
    const auto start = std::chrono::steady_clock::now();
    const int status = std::system(cmd.c_str());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const int code = status == -1 ? -1 : WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    const bool ok = code == 0 && secs < 600;
    all = all && ok;
    std::printf("%s criterion 10 (cli selftest) %.2fs: exit %d\n", ok ? "PASS" : "FAIL", secs, code);
    return all ? 0 : 1;
}
