// Copyright 2026 The mubkit Authors
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

#include "mubkit/parallel.h"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace mubkit {

size_t max_threads() {
    size_t n = std::max<size_t>(1, std::thread::hardware_concurrency());
    if (const char *env = std::getenv("MUBKIT_THREADS")) {
        try {
            long cap = std::stol(env);
            if (cap >= 1) {
                n = static_cast<size_t>(cap);
            }
        } catch (const std::exception &) {
            // unparseable values leave the default in place
        }
    }
    return n;
}

void parallel_for(size_t n, const std::function<void(size_t)> &body) {
    size_t workers = std::min(max_threads(), n);
    if (workers <= 1) {
        for (size_t i = 0; i < n; i++) {
            body(i);
        }
        return;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (size_t w = 0; w < workers; w++) {
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= n) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
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

}  // namespace mubkit
