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

/**
 * @file
 * Bounded fan-out over independent work items. The worker count is capped
 * by MIRRORCHAIN_JOBS (default: hardware concurrency).
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace mirrorchain {

/// Worker limit from MIRRORCHAIN_JOBS, else the hardware thread count; always >= 1.
inline int job_limit() {
    if (const char *env = std::getenv("MIRRORCHAIN_JOBS")) {
        try {
            const int v = std::stoi(env);
            if (v >= 1) {
                return v;
            }
        } catch (const std::exception &) {
            // fall through to the default
        }
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

/**
 * Calls fn(i) for i in [0, n) on up to `jobs` threads. Results must be
 * written by index so the outcome does not depend on scheduling. The first
 * exception thrown by any item is rethrown after all workers stop.
 */
template <class Fn> void parallel_for(std::size_t n, Fn &&fn, int jobs = job_limit()) {
    const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, jobs)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) {
                try {
                    fn(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) {
                        error = std::current_exception();
                    }
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace mirrorchain
