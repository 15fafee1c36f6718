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

#ifndef TORIC_ORACLE_H
#define TORIC_ORACLE_H

#include <array>
#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toric/gf2.h"
#include "toric/hermitian_jacobi.h"
#include "toric/regions.h"
#include "toric/surface.h"

namespace toric {

// Brute-force ground-state construction and reduced-density-matrix spectra.
// Exponential in the number of sites; intended for small lattices, as an
// independent check on the rank formulas in engine.h.

using Amplitude = std::complex<double>;

/// Coefficients of |xi_00>, |xi_01>, |xi_10>, |xi_11> in a ground state.
struct SectorAmplitudes {
    std::array<Amplitude, 4> a{};

    /// The basis state |xi_ij>.
    static SectorAmplitudes basis(int i, int j) {
        SectorAmplitudes out;
        out.a[static_cast<size_t>(2 * i + j)] = 1;
        return out;
    }
};

struct OracleLimits {
    /// Largest log2 of the star group that will be enumerated.
    size_t max_group_bits = 24;
    /// Largest matrix handed to the dense eigensolver.
    size_t max_gram_dim = 4096;
    /// When false, reduced_spectrum always diagonalizes.
    bool allow_counting = true;
};

/// A state as a sparse map from computational basis strings over links
/// (bit set = spin flipped) to amplitudes.
class StateSupport {
   public:
    explicit StateSupport(size_t n_links) : n_links_(n_links) {
    }

    size_t n_links() const {
        return n_links_;
    }
    size_t size() const {
        return amplitudes_.size();
    }
    const std::map<BitVector, Amplitude> &amplitudes() const {
        return amplitudes_;
    }
    std::optional<Amplitude> find(const BitVector &e) const;
    /// Inserts or overwrites. Throws ArgumentError on a length mismatch.
    void set(const BitVector &e, Amplitude amplitude);
    double norm_squared() const;

   private:
    size_t n_links_;
    std::map<BitVector, Amplitude> amplitudes_;
};

/// sum_ij a_ij |xi_ij>, with |xi_ij> the uniform superposition over the star
/// group orbit of w1^j w2^i |0...0>. Ladder operators are only needed (and only
/// available on the torus) when some a_ij with (i,j) != (0,0) is nonzero.
/// Throws ArgumentError if sum |a_ij|^2 differs from 1 by more than 1e-9 and
/// ResourceLimitError if the group has more than 2^max_group_bits elements.
StateSupport build_ground_state(const Surface &s, const SectorAmplitudes &amps, const OracleLimits &limits = {});

/// True iff psi is a nonzero +1 eigenvector of every star and plaquette:
/// star-translates of each support string carry the same amplitude (to 1e-12)
/// and each support string meets every plaquette evenly.
bool verify_ground_state(const Surface &s, const StateSupport &psi);

struct SpectrumReport {
    /// Eigenvalues of rho_A, descending, clamped to [0, 1]; includes the zero
    /// eigenvalues of whichever Gram matrix was diagonalized.
    std::vector<double> eigenvalues;
    double entropy_bits = 0;
    double purity = 0;
    /// All eigenvalues above 1e-12 agree within 1e-9.
    bool flat = false;
    /// Spectrum was obtained by counting instead of diagonalizing.
    bool combinatorial = false;

    size_t nonzero_count(double threshold = 1e-12) const;
};

/// Spectrum of rho_A = Tr_B |psi><psi| for the region's A side.
///
/// Strings are grouped by their B restriction; the nonzero spectrum of rho_A is
/// that of the Gram matrix of the per-class A vectors (or, equivalently, the
/// smaller of the two Gram matrices). Uniform-amplitude states whose classes
/// have identical-or-disjoint A sets are counted combinatorially; anything else
/// goes through hermitian_eigenvalues and is subject to max_gram_dim.
SpectrumReport reduced_spectrum(const StateSupport &psi, const Region &r, const OracleLimits &limits = {});

/// 4x4 reduced density matrix of two links, basis index 2*s_link1 + s_link2.
ComplexMatrix two_spin_density(const StateSupport &psi, size_t link1, size_t link2);

/// Wootters concurrence of a two-qubit density matrix that must be diagonal:
/// throws StructuralError if an off-diagonal entry exceeds 1e-12 in magnitude.
double concurrence_of_diagonal(const ComplexMatrix &rho);

double two_spin_concurrence(const StateSupport &psi, size_t link1, size_t link2);

/// The four basis ground states have the same sorted rho_A spectrum (within 1e-9).
bool isospectral_check(const Surface &s, const Region &r, const OracleLimits &limits = {});

/// Entropy of the given ground-state superposition on a rectangle equals
/// boundary_links - 1 within 1e-6. Throws ArgumentError for non-rectangle regions.
bool generic_disk_check(
    const Surface &s, const Region &r, const SectorAmplitudes &amps, const OracleLimits &limits = {});

/// -sum lambda log2 lambda over positive lambda.
double von_neumann_entropy_bits(const std::vector<double> &eigenvalues);

}  // namespace toric

#endif
