// Copyright 2026 The maass-theta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maass/parallel.hpp"

#include <cstdlib>
#include <string>

namespace maass::parallel {

namespace {

std::atomic<std::size_t> g_override{0};

std::size_t default_workers() {
    static const std::size_t n = [] {
        std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("MAASS_THREADS")) {
            try {
                const long v = std::stol(env);
                if (v >= 1) return static_cast<std::size_t>(v);
            } catch (...) {
            }
        }
        return hw;
    }();
    return n;
}

}  // namespace

std::size_t worker_count() {
    const std::size_t o = g_override.load();
    return o ? o : default_workers();
}

void set_worker_count(std::size_t n) { g_override.store(n); }

ScopedWorkerCount::ScopedWorkerCount(std::size_t n) : previous_(g_override.load()) { set_worker_count(n); }
ScopedWorkerCount::~ScopedWorkerCount() { set_worker_count(previous_); }

}  // namespace maass::parallel
