// Copyright 2026 The toric-entropy Authors
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

#include "toric/engine.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "toric/errors.h"
#include "toric/gf2.h"

namespace toric {

EntropyReport group_stats(const Surface &s, const Region &r) {
    r.check_surface(s);
    if (!r.is_nontrivial()) {
        throw ArgumentError("entropy needs a nontrivial partition (A and B both nonempty)");
    }
    const BitMatrix &stars = s.star_matrix();
    auto rank_A = static_cast<int64_t>(rank(column_submatrix(stars, r.mask())));
    auto rank_B = static_cast<int64_t>(rank(column_submatrix(stars, ~r.mask())));
    auto group = static_cast<int64_t>(s.star_rank());

    EntropyReport out;
    out.log2_group = group;
    out.rank_MA = rank_A;
    out.rank_MB = rank_B;
    out.log2_dA = group - rank_B;
    out.log2_dB = group - rank_A;
    out.log2_f = group - out.log2_dB;
    out.entropy_bits = out.log2_f - out.log2_dA;
    return out;
}

int64_t entanglement_entropy(const Surface &s, const Region &r) {
    return group_stats(s, r).entropy_bits;
}

std::vector<SweepRow> sweep_rectangles(const Surface &s, std::span<const std::pair<size_t, size_t>> sizes) {
    // Build every region first so argument errors surface before any work starts.
    std::vector<Region> regions;
    regions.reserve(sizes.size());
    for (const auto &[a, b] : sizes) {
        regions.push_back(rect_region(s, 0, 0, a, b));
    }
    std::vector<SweepRow> out(regions.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next++; i < regions.size(); i = next++) {
            const Region &r = regions[i];
            out[i] = SweepRow{
                sizes[i].first, sizes[i].second, region_stats(s, r).boundary_links.value(), entanglement_entropy(s, r)};
        }
    };
    size_t n_threads = std::min<size_t>(std::max(1u, std::thread::hardware_concurrency()), regions.size());
    std::vector<std::thread> threads;
    for (size_t t = 1; t < n_threads; t++) {
        threads.emplace_back(worker);
    }
    worker();
    for (auto &t : threads) {
        t.join();
    }
    return out;
}

}  // namespace toric
