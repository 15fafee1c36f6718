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

#ifndef TORIC_REGIONS_H
#define TORIC_REGIONS_H

#include <cstddef>
#include <optional>
#include <span>

#include "toric/gf2.h"
#include "toric/surface.h"

namespace toric {

enum class ChainOrientation { kRow, kColumn };
enum class LinkOrientation { kVertical, kHorizontal };

/// An a x b block of faces anchored at face (i0, j0).
struct RectShape {
    size_t i0, j0, a, b;
    bool operator==(const RectShape &) const = default;
};

/// A bipartition (A, B) of the links of a surface; bit set <=> link in A.
class Region {
   public:
    /// Throws ArgumentError if the mask length differs from s.n_links().
    Region(const Surface &s, BitVector mask);

    const BitVector &mask() const {
        return mask_;
    }
    size_t size_A() const {
        return mask_.popcount();
    }
    size_t n_links() const {
        return mask_.size();
    }
    uint64_t surface_id() const {
        return surface_id_;
    }
    /// Set only for regions built by rect_region.
    const std::optional<RectShape> &rect() const {
        return rect_;
    }
    /// A and B are both nonempty.
    bool is_nontrivial() const {
        return mask_.any() && mask_.popcount() != mask_.size();
    }
    Region complement() const;

    /// Throws ArgumentError unless the region was built on `s`.
    void check_surface(const Surface &s) const;

    /// Same surface and same link set.
    bool operator==(const Region &other) const {
        return surface_id_ == other.surface_id_ && mask_ == other.mask_;
    }

    friend Region rect_region(const Surface &s, size_t i0, size_t j0, size_t a, size_t b);

   private:
    Region(uint64_t surface_id, BitVector mask, std::optional<RectShape> rect)
        : mask_(std::move(mask)), surface_id_(surface_id), rect_(rect) {
    }

    BitVector mask_;
    uint64_t surface_id_;
    std::optional<RectShape> rect_;
};

struct RegionStats {
    size_t size_A;
    /// Sites whose star meets both A and B.
    size_t boundary_sites;
    /// Sites whose star lies entirely in A.
    size_t bulk_sites_A;
    size_t bulk_sites_B;
    /// Links with exactly one incident face in the defining face block (rectangles only).
    std::optional<size_t> boundary_links;
};

/// All links incident to at least one face of the a x b block at (i0, j0), on
/// the square torus. Requires i0, j0 < k and 1 <= a, b < k.
Region rect_region(const Surface &s, size_t i0, size_t j0, size_t a, size_t b);

/// Row `index` -> horizontal links h(index, *); column `index` -> vertical links v(*, index).
Region chain_region(const Surface &s, ChainOrientation orientation, size_t index);

/// All vertical or all horizontal links of the torus.
Region orientation_region(const Surface &s, LinkOrientation which);

/// Explicit link list; throws ArgumentError naming the first out-of-range link.
Region links_region(const Surface &s, std::span<const size_t> links);

RegionStats region_stats(const Surface &s, const Region &r);

}  // namespace toric

#endif
