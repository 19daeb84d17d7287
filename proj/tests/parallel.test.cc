// Copyright 2026 The heliwave Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heliwave/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"

using namespace heliwave;

TEST(parallel, visits_every_index_once) {
    for (int threads : {1, 2, 7, 64}) {
        std::vector<std::atomic<int>> hits(1000);
        parallel_for(hits.size(), threads, [&](std::size_t i) { hits[i]++; });
        for (auto& h : hits) {
            ASSERT_EQ(h.load(), 1);
        }
    }
    parallel_for(0, 4, [](std::size_t) { FAIL(); });
}

TEST(parallel, rethrows_lowest_failure) {
    for (int threads : {1, 3, 8}) {
        try {
            parallel_for(100, threads, [](std::size_t i) {
                if (i == 40 || i == 90) {
                    throw std::runtime_error(std::to_string(i));
                }
            });
            FAIL() << "expected an exception";
        } catch (const std::runtime_error& e) {
            EXPECT_STREQ(e.what(), "40");
        }
    }
}

TEST(parallel, thread_count_from_environment) {
    setenv(kThreadsEnvVar, "3", 1);
    EXPECT_EQ(default_thread_count(), 3);
    setenv(kThreadsEnvVar, "zero", 1);
    EXPECT_GE(default_thread_count(), 1);
    unsetenv(kThreadsEnvVar);
    EXPECT_GE(default_thread_count(), 1);
}
