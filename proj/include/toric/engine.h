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

#ifndef TORIC_ENGINE_H
#define TORIC_ENGINE_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "toric/regions.h"
#include "toric/surface.h"

namespace toric {

/// Group-theoretic entropy data for a basis ground state and a bipartition.
/// All quantities are exact base-2 logarithms of group orders.
struct EntropyReport {
    int64_t log2_group;  // |A| = 2^(n0 - 1)
    int64_t log2_dA;     // subgroup acting only on A
    int64_t log2_dB;     // subgroup acting only on B
    int64_t log2_f;      // |A| / d_B
    int64_t entropy_bits;
    int64_t rank_MA;  // rank of the star matrix restricted to A's columns
    int64_t rank_MB;

    bool operator==(const EntropyReport &) const = default;
};

/// Ranks of the star matrix restricted to A and to B give every field:
/// log2 d_A = (n0 - 1) - rank(M_B) and S = rank(M_A) + rank(M_B) - (n0 - 1).
/// Throws ArgumentError for a trivial region (A or B empty).
EntropyReport group_stats(const Surface &s, const Region &r);

/// Entanglement entropy in bits of any of the basis ground states.
int64_t entanglement_entropy(const Surface &s, const Region &r);

struct SweepRow {
    size_t a, b;
    size_t boundary_links;
    int64_t entropy_bits;
    bool operator==(const SweepRow &) const = default;
};

/// One row per (a, b), rectangles anchored at face (0, 0); rows keep input order.
std::vector<SweepRow> sweep_rectangles(const Surface &s, std::span<const std::pair<size_t, size_t>> sizes);

}  // namespace toric

#endif
