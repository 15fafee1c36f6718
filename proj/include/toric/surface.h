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

#ifndef TORIC_SURFACE_H
#define TORIC_SURFACE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "toric/gf2.h"

namespace toric {

/// Link/site/face numbering on the k x k square torus.
///
/// h(i,j) = 2(ik+j) joins site (i,j) to (i,j+1); v(i,j) = 2(ik+j)+1 joins (i,j)
/// to (i+1,j). Face (i,j) has corners (i,j),(i,j+1),(i+1,j),(i+1,j+1). All
/// coordinates wrap modulo k.
struct TorusLattice {
    size_t k;

    size_t wrap(long long x) const {
        long long m = static_cast<long long>(k);
        return static_cast<size_t>(((x % m) + m) % m);
    }
    size_t h(long long i, long long j) const {
        return 2 * (wrap(i) * k + wrap(j));
    }
    size_t v(long long i, long long j) const {
        return 2 * (wrap(i) * k + wrap(j)) + 1;
    }
    size_t site(long long i, long long j) const {
        return wrap(i) * k + wrap(j);
    }
    size_t face(long long i, long long j) const {
        return wrap(i) * k + wrap(j);
    }
    std::vector<size_t> star_links(long long i, long long j) const {
        return {h(i, j), h(i, j - 1), v(i, j), v(i - 1, j)};
    }
    std::vector<size_t> plaquette_links(long long i, long long j) const {
        return {h(i, j), h(i + 1, j), v(i, j), v(i, j + 1)};
    }
};

/// Explicit-incidence description of a cell complex: the on-disk surface format.
struct SurfaceDocument {
    size_t n_links = 0;
    std::vector<std::vector<size_t>> stars;
    std::vector<std::vector<size_t>> plaquettes;
};

SurfaceDocument parse_surface_document(const nlohmann::json &doc);
nlohmann::json to_json(const SurfaceDocument &doc);

struct InvariantCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Runs every cell-complex check, in order, without stopping at the first failure.
/// Checks that need well-formed link ids are reported as failed when ids are bad.
std::vector<InvariantCheck> check_surface_invariants(const SurfaceDocument &doc);

/// A validated closed cell complex with spins on links.
///
/// Star s and plaquette p are bit-vectors over links. Every link lies in exactly
/// two stars and two plaquettes, stars and plaquettes overlap evenly, and the
/// product of all stars (and of all plaquettes) is the identity.
class Surface {
   public:
    size_t n_sites() const {
        return stars_.num_rows();
    }
    size_t n_links() const {
        return stars_.num_cols();
    }
    size_t n_faces() const {
        return plaquettes_.num_rows();
    }
    const BitMatrix &star_matrix() const {
        return stars_;
    }
    const BitMatrix &plaquette_matrix() const {
        return plaquettes_;
    }
    const BitVector &star(size_t s) const {
        return stars_.row(s);
    }
    const BitVector &plaquette(size_t p) const {
        return plaquettes_.row(p);
    }
    bool is_torus() const {
        return torus_.has_value();
    }
    /// Throws ArgumentError on generic surfaces.
    const TorusLattice &torus() const;
    long long euler_characteristic() const {
        return static_cast<long long>(n_sites()) - static_cast<long long>(n_links()) + static_cast<long long>(n_faces());
    }
    /// Ranks measured during validation (n0 - 1 and n2 - 1 on every valid surface).
    size_t star_rank() const {
        return star_rank_;
    }
    size_t plaquette_rank() const {
        return plaquette_rank_;
    }
    /// Fingerprint of the incidence data; regions remember which surface they belong to.
    uint64_t id() const {
        return id_;
    }
    /// The two sites joined by `link` (ascending).
    std::pair<size_t, size_t> link_sites(size_t link) const {
        return link_sites_[link];
    }

    friend Surface build_torus(size_t k);
    friend Surface load_surface(const SurfaceDocument &doc);

   private:
    Surface(
        BitMatrix stars, BitMatrix plaquettes, std::optional<TorusLattice> torus, size_t star_rank,
        size_t plaquette_rank);

    BitMatrix stars_;
    BitMatrix plaquettes_;
    std::optional<TorusLattice> torus_;
    size_t star_rank_ = 0;
    size_t plaquette_rank_ = 0;
    uint64_t id_ = 0;
    std::vector<std::pair<size_t, size_t>> link_sites_;
};

/// The k x k square lattice on the torus. Throws ArgumentError for k < 2.
Surface build_torus(size_t k);

/// Validates and builds; throws ValidationError naming the first failed check.
Surface load_surface(const SurfaceDocument &doc);
Surface load_surface(const nlohmann::json &doc);
Surface load_surface_file(const std::string &path);

SurfaceDocument to_document(const Surface &s);

struct GenusDegeneracy {
    size_t genus;
    /// 2*genus, from the Euler characteristic.
    size_t log2_degeneracy;
    /// n1 - rank(stars) - rank(plaquettes); equals log2_degeneracy on valid surfaces.
    size_t log2_degeneracy_from_ranks;
    /// 2^log2_degeneracy, or nullopt when it does not fit in 64 bits.
    std::optional<uint64_t> degeneracy;
};

GenusDegeneracy genus_and_degeneracy(const Surface &s);

/// Non-contractible closed strings on the square torus.
struct LadderPair {
    BitVector w1;  // vertical links crossed by the horizontal dual loop through face row 0
    BitVector w2;  // horizontal links crossed by the vertical dual loop through face column 0
};

/// Throws UnsupportedOperationError on generic surfaces.
LadderPair ladder_operators(const Surface &s);

}  // namespace toric

#endif
