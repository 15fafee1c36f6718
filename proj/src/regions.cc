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

#include "toric/regions.h"

#include <string>

#include "toric/errors.h"

namespace toric {

Region::Region(const Surface &s, BitVector mask) : mask_(std::move(mask)), surface_id_(s.id()) {
    if (mask_.size() != s.n_links()) {
        throw ArgumentError(
            "region mask has " + std::to_string(mask_.size()) + " bits but the surface has " +
            std::to_string(s.n_links()) + " links");
    }
}

Region Region::complement() const {
    return Region(surface_id_, ~mask_, std::nullopt);
}

void Region::check_surface(const Surface &s) const {
    if (surface_id_ != s.id() || mask_.size() != s.n_links()) {
        throw ArgumentError("region was built on a different surface");
    }
}

Region rect_region(const Surface &s, size_t i0, size_t j0, size_t a, size_t b) {
    const TorusLattice &t = s.torus();
    if (i0 >= t.k || j0 >= t.k) {
        throw ArgumentError(
            "rect anchor (" + std::to_string(i0) + "," + std::to_string(j0) + ") out of range: need 0 <= i0,j0 < k = " +
            std::to_string(t.k));
    }
    if (a < 1 || b < 1 || a >= t.k || b >= t.k) {
        throw ArgumentError(
            "rect size " + std::to_string(a) + "x" + std::to_string(b) + " violates 1 <= a,b < k = " +
            std::to_string(t.k) + " (the bounding loop must be contractible)");
    }
    BitVector mask(s.n_links());
    for (size_t r = 0; r < a; r++) {
        for (size_t c = 0; c < b; c++) {
            mask |= s.plaquette(t.face(static_cast<long long>(i0 + r), static_cast<long long>(j0 + c)));
        }
    }
    return Region(s.id(), std::move(mask), RectShape{i0, j0, a, b});
}

Region chain_region(const Surface &s, ChainOrientation orientation, size_t index) {
    const TorusLattice &t = s.torus();
    if (index >= t.k) {
        throw ArgumentError(
            "chain index " + std::to_string(index) + " out of range: need 0 <= index < k = " + std::to_string(t.k));
    }
    BitVector mask(s.n_links());
    auto idx = static_cast<long long>(index);
    for (size_t x = 0; x < t.k; x++) {
        auto xx = static_cast<long long>(x);
        mask.set(orientation == ChainOrientation::kRow ? t.h(idx, xx) : t.v(xx, idx));
    }
    return Region(s, std::move(mask));
}

Region orientation_region(const Surface &s, LinkOrientation which) {
    s.torus();
    BitVector mask(s.n_links());
    for (size_t link = which == LinkOrientation::kVertical ? 1 : 0; link < s.n_links(); link += 2) {
        mask.set(link);
    }
    return Region(s, std::move(mask));
}

Region links_region(const Surface &s, std::span<const size_t> links) {
    BitVector mask(s.n_links());
    for (size_t link : links) {
        if (link >= s.n_links()) {
            throw ArgumentError(
                "link " + std::to_string(link) + " out of range (n_links = " + std::to_string(s.n_links()) + ")");
        }
        mask.set(link);
    }
    return Region(s, std::move(mask));
}

RegionStats region_stats(const Surface &s, const Region &r) {
    r.check_surface(s);
    RegionStats out{r.size_A(), 0, 0, 0, std::nullopt};
    const BitVector &mask = r.mask();
    for (size_t site = 0; site < s.n_sites(); site++) {
        const BitVector &star = s.star(site);
        size_t inside = (star & mask).popcount();
        if (inside == 0) {
            out.bulk_sites_B++;
        } else if (inside == star.popcount()) {
            out.bulk_sites_A++;
        } else {
            out.boundary_sites++;
        }
    }
    if (r.rect()) {
        const TorusLattice &t = s.torus();
        const RectShape &shape = *r.rect();
        std::vector<unsigned> faces_inside(s.n_links(), 0);
        for (size_t dr = 0; dr < shape.a; dr++) {
            for (size_t dc = 0; dc < shape.b; dc++) {
                s.plaquette(t.face(static_cast<long long>(shape.i0 + dr), static_cast<long long>(shape.j0 + dc)))
                    .for_each_set_bit([&](size_t link) { faces_inside[link]++; });
            }
        }
        size_t boundary = 0;
        for (unsigned c : faces_inside) {
            boundary += c == 1;
        }
        out.boundary_links = boundary;
    }
    return out;
}

}  // namespace toric
