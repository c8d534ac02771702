/*
   Copyright 2026 The gmcfar Authors

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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace gmcfar {

/// Worker count; 0 selects std::thread::hardware_concurrency().
struct Execution {
    unsigned threads = 1;

    unsigned resolved() const noexcept {
        if (threads != 0) return threads;
        return std::max(1u, std::thread::hardware_concurrency());
    }
};

/// Splits [0, total) into fixed chunks, runs count(begin, end) on each and
/// returns the sum. The chunking does not depend on the worker count, and
/// addition of integer counts is exact, so the result is the same for any
/// number of threads.
template <class CountFn>
std::uint64_t parallel_count(std::uint64_t total, Execution exec, CountFn&& count) {
    constexpr std::uint64_t kChunk = 1u << 15;
    const std::uint64_t chunks = (total + kChunk - 1) / kChunk;
    const unsigned workers =
        static_cast<unsigned>(std::min<std::uint64_t>(exec.resolved(), std::max<std::uint64_t>(chunks, 1)));
    if (workers <= 1) return count(std::uint64_t{0}, total);

    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> sum{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            std::uint64_t local = 0;
            for (std::uint64_t c = next++; c < chunks; c = next++) {
                const std::uint64_t begin = c * kChunk;
                local += count(begin, std::min(total, begin + kChunk));
            }
            sum += local;
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = chunks;
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return sum.load();
}

}  // namespace gmcfar
