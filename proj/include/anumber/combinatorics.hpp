/*
   Copyright 2026 The anumber Authors

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

#ifndef ANUMBER_COMBINATORICS_HPP
#define ANUMBER_COMBINATORICS_HPP

#include <cstdint>
#include <algorithm>
#include <vector>

#include "errors.hpp"

namespace anumber {

/**
 * Number of k-tuples (w_1, ..., w_k) with lo <= w_i <= hi and sum s.
 *
 * Exact integer count by dynamic programming over the number of parts.
 * Throws if the count does not fit in 64 bits.
 */
inline std::uint64_t count_restricted_compositions(std::uint64_t s, std::uint64_t k, std::uint64_t lo,
                                                   std::uint64_t hi) {
    if (lo > hi) throw domain_error("count_restricted_compositions: lo > hi");
    if (k == 0) return s == 0 ? 1 : 0;
    if (s < k * lo || s > k * hi) return 0;
    // shift to parts in [0, hi - lo] summing to s - k*lo
    const std::uint64_t span = hi - lo;
    const std::uint64_t target = s - k * lo;
    std::vector<std::uint64_t> ways(target + 1, 0), next(target + 1);
    ways[0] = 1;
    for (std::uint64_t part = 0; part < k; ++part) {
        std::fill(next.begin(), next.end(), 0);
        for (std::uint64_t t = 0; t <= target; ++t) {
            if (ways[t] == 0) continue;
            for (std::uint64_t x = 0; x <= span && t + x <= target; ++x)
                if (__builtin_add_overflow(next[t + x], ways[t], &next[t + x]))
                    throw domain_error("composition count overflows 64 bits");
        }
        ways.swap(next);
    }
    return ways[target];
}

}  // namespace anumber

#endif
