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

#include "toric/oracle.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "toric/errors.h"

namespace toric {

namespace {

constexpr double kAmplitudeTolerance = 1e-12;
constexpr double kZeroEigenvalue = 1e-12;
constexpr double kFlatTolerance = 1e-9;

std::vector<double> finish_eigenvalues(std::vector<double> values) {
    for (double &v : values) {
        v = std::clamp(v, 0.0, 1.0);
    }
    std::sort(values.begin(), values.end(), std::greater<>());
    return values;
}

SpectrumReport make_report(std::vector<double> eigenvalues, bool combinatorial) {
    SpectrumReport out;
    out.eigenvalues = finish_eigenvalues(std::move(eigenvalues));
    out.entropy_bits = von_neumann_entropy_bits(out.eigenvalues);
    for (double v : out.eigenvalues) {
        out.purity += v * v;
    }
    double lo = 1, hi = 0;
    for (double v : out.eigenvalues) {
        if (v > kZeroEigenvalue) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    out.flat = hi >= lo && hi - lo <= kFlatTolerance;
    out.combinatorial = combinatorial;
    return out;
}

struct Entry {
    size_t other;  // index of the string's restriction to the opposite side
    Amplitude amplitude;
};

// Splits each support string into (A part, B part) and numbers the distinct parts.
struct Bipartition {
    std::vector<BitVector> a_keys;
    std::vector<BitVector> b_keys;
    std::vector<std::vector<Entry>> by_b;  // per B class: (A index, amplitude)
    std::vector<std::vector<Entry>> by_a;  // per A class: (B index, amplitude)
};

Bipartition split(const StateSupport &psi, const BitVector &mask) {
    Bipartition out;
    std::map<BitVector, size_t> a_index, b_index;
    BitVector complement = ~mask;
    for (const auto &[e, amp] : psi.amplitudes()) {
        BitVector a = e & mask;
        BitVector b = e & complement;
        auto [ai, a_new] = a_index.try_emplace(std::move(a), out.a_keys.size());
        if (a_new) {
            out.a_keys.push_back(ai->first);
            out.by_a.emplace_back();
        }
        auto [bi, b_new] = b_index.try_emplace(std::move(b), out.b_keys.size());
        if (b_new) {
            out.b_keys.push_back(bi->first);
            out.by_b.emplace_back();
        }
        out.by_b[bi->second].push_back(Entry{ai->second, amp});
        out.by_a[ai->second].push_back(Entry{bi->second, amp});
    }
    return out;
}

// Each B class contributes |phi_b><phi_b| with phi_b = amp * 1_{S_b}. When the sets S_b
// are pairwise identical or disjoint, the m classes sharing a set S of size c give a
// single eigenvalue m * c * |amp|^2.
std::optional<std::vector<double>> count_spectrum(const StateSupport &psi, const Bipartition &parts) {
    if (psi.size() == 0) {
        return std::nullopt;
    }
    Amplitude reference = psi.amplitudes().begin()->second;
    for (const auto &[e, amp] : psi.amplitudes()) {
        if (std::abs(amp - reference) > 1e-15) {
            return std::nullopt;
        }
    }
    std::map<std::vector<size_t>, size_t> multiplicity;
    for (const auto &cls : parts.by_b) {
        std::vector<size_t> set;
        set.reserve(cls.size());
        for (const auto &entry : cls) {
            set.push_back(entry.other);
        }
        std::sort(set.begin(), set.end());
        multiplicity[std::move(set)]++;
    }
    std::vector<int64_t> owner(parts.a_keys.size(), -1);
    int64_t id = 0;
    for (const auto &[set, m] : multiplicity) {
        for (size_t a : set) {
            if (owner[a] >= 0) {
                return std::nullopt;
            }
            owner[a] = id;
        }
        id++;
    }
    double weight = std::norm(reference);
    std::vector<double> eigenvalues;
    for (const auto &[set, m] : multiplicity) {
        eigenvalues.push_back(static_cast<double>(m) * static_cast<double>(set.size()) * weight);
    }
    size_t dim = std::min(parts.a_keys.size(), parts.b_keys.size());
    eigenvalues.resize(std::max(dim, eigenvalues.size()), 0.0);
    return eigenvalues;
}

std::vector<double> diagonalize(const Bipartition &parts, const OracleLimits &limits) {
    // rho_A = sum_b |phi_b><phi_b| lives on the A classes; the B-class Gram matrix has the
    // same nonzero spectrum. Diagonalize whichever is smaller.
    bool use_a = parts.a_keys.size() <= parts.b_keys.size();
    size_t dim = use_a ? parts.a_keys.size() : parts.b_keys.size();
    if (dim > limits.max_gram_dim) {
        throw ResourceLimitError(
            "reduced density matrix needs a " + std::to_string(dim) + "-dimensional eigensolve (limit " +
            std::to_string(limits.max_gram_dim) + ")");
    }
    ComplexMatrix m(dim);
    const auto &groups = use_a ? parts.by_b : parts.by_a;
    for (const auto &group : groups) {
        for (const auto &x : group) {
            for (const auto &y : group) {
                if (use_a) {
                    m(x.other, y.other) += x.amplitude * std::conj(y.amplitude);
                } else {
                    m(x.other, y.other) += std::conj(x.amplitude) * y.amplitude;
                }
            }
        }
    }
    return hermitian_eigenvalues(std::move(m));
}

}  // namespace

std::optional<Amplitude> StateSupport::find(const BitVector &e) const {
    auto it = amplitudes_.find(e);
    if (it == amplitudes_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void StateSupport::set(const BitVector &e, Amplitude amplitude) {
    if (e.size() != n_links_) {
        throw ArgumentError("basis string length does not match the state");
    }
    amplitudes_[e] = amplitude;
}

double StateSupport::norm_squared() const {
    double sum = 0;
    for (const auto &[e, amp] : amplitudes_) {
        sum += std::norm(amp);
    }
    return sum;
}

size_t SpectrumReport::nonzero_count(double threshold) const {
    return static_cast<size_t>(
        std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double v) { return v > threshold; }));
}

double von_neumann_entropy_bits(const std::vector<double> &eigenvalues) {
    double s = 0;
    for (double v : eigenvalues) {
        if (v > 0) {
            s -= v * std::log2(v);
        }
    }
    return s;
}

StateSupport build_ground_state(const Surface &s, const SectorAmplitudes &amps, const OracleLimits &limits) {
    double norm = 0;
    for (const auto &a : amps.a) {
        norm += std::norm(a);
    }
    if (std::abs(norm - 1) > 1e-9) {
        throw ArgumentError("sector amplitudes must satisfy sum |a_ij|^2 = 1 (got " + std::to_string(norm) + ")");
    }
    if (s.star_rank() > limits.max_group_bits) {
        throw ResourceLimitError(
            "star group has 2^" + std::to_string(s.star_rank()) + " elements (limit 2^" +
            std::to_string(limits.max_group_bits) + ")");
    }

    std::array<BitVector, 4> offsets;
    offsets.fill(BitVector(s.n_links()));
    bool needs_ladders = amps.a[1] != Amplitude(0) || amps.a[2] != Amplitude(0) || amps.a[3] != Amplitude(0);
    if (needs_ladders) {
        LadderPair ladders = ladder_operators(s);
        offsets[1] = ladders.w1;
        offsets[2] = ladders.w2;
        offsets[3] = ladders.w1 ^ ladders.w2;
    }

    double scale = std::pow(2.0, -0.5 * static_cast<double>(s.star_rank()));
    StateSupport psi(s.n_links());
    for_each_in_rowspace(
        s.star_matrix(),
        [&](const BitVector &g) {
            for (size_t sector = 0; sector < 4; sector++) {
                if (amps.a[sector] != Amplitude(0)) {
                    psi.set(g ^ offsets[sector], amps.a[sector] * scale);
                }
            }
        },
        limits.max_group_bits);
    return psi;
}

bool verify_ground_state(const Surface &s, const StateSupport &psi) {
    if (psi.n_links() != s.n_links() || psi.size() == 0) {
        return false;
    }
    for (const auto &[e, amp] : psi.amplitudes()) {
        for (size_t p = 0; p < s.n_faces(); p++) {
            if ((e & s.plaquette(p)).popcount() % 2) {
                return false;
            }
        }
        for (size_t st = 0; st < s.n_sites(); st++) {
            auto partner = psi.find(e ^ s.star(st));
            if (!partner || std::abs(*partner - amp) > kAmplitudeTolerance) {
                return false;
            }
        }
    }
    return true;
}

SpectrumReport reduced_spectrum(const StateSupport &psi, const Region &r, const OracleLimits &limits) {
    if (r.n_links() != psi.n_links()) {
        throw ArgumentError("region and state have different link counts");
    }
    if (psi.size() == 0) {
        throw ArgumentError("reduced_spectrum needs a nonempty state");
    }
    Bipartition parts = split(psi, r.mask());
    if (limits.allow_counting) {
        if (auto counted = count_spectrum(psi, parts)) {
            return make_report(std::move(*counted), true);
        }
    }
    return make_report(diagonalize(parts, limits), false);
}

ComplexMatrix two_spin_density(const StateSupport &psi, size_t link1, size_t link2) {
    if (link1 == link2 || link1 >= psi.n_links() || link2 >= psi.n_links()) {
        throw ArgumentError("two_spin_density needs two distinct in-range links");
    }
    std::map<BitVector, std::array<Amplitude, 4>> by_rest;
    for (const auto &[e, amp] : psi.amplitudes()) {
        BitVector rest = e;
        rest.set(link1, false);
        rest.set(link2, false);
        size_t index = 2 * static_cast<size_t>(e.get(link1)) + static_cast<size_t>(e.get(link2));
        by_rest[std::move(rest)][index] += amp;
    }
    ComplexMatrix rho(4);
    for (const auto &[rest, v] : by_rest) {
        for (size_t x = 0; x < 4; x++) {
            for (size_t y = 0; y < 4; y++) {
                rho(x, y) += v[x] * std::conj(v[y]);
            }
        }
    }
    return rho;
}

double concurrence_of_diagonal(const ComplexMatrix &rho) {
    if (rho.size() != 4) {
        throw ArgumentError("concurrence needs a 4x4 density matrix");
    }
    for (size_t x = 0; x < 4; x++) {
        for (size_t y = 0; y < 4; y++) {
            if (x != y && std::abs(rho(x, y)) > kAmplitudeTolerance) {
                throw StructuralError(
                    "two-spin density matrix is not diagonal: |rho(" + std::to_string(x) + "," + std::to_string(y) +
                    ")| = " + std::to_string(std::abs(rho(x, y))));
            }
        }
    }
    double a = rho(0, 0).real(), b = rho(1, 1).real(), c = rho(2, 2).real(), d = rho(3, 3).real();
    // For diag(a,b,c,d), rho (sy x sy) rho* (sy x sy) = diag(ad, bc, bc, ad).
    std::array<double, 4> lambda{a * d, a * d, b * c, b * c};
    for (double &l : lambda) {
        l = std::sqrt(std::max(l, 0.0));
    }
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double two_spin_concurrence(const StateSupport &psi, size_t link1, size_t link2) {
    return concurrence_of_diagonal(two_spin_density(psi, link1, link2));
}

bool isospectral_check(const Surface &s, const Region &r, const OracleLimits &limits) {
    std::vector<std::vector<double>> spectra;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(i, j), limits);
            spectra.push_back(reduced_spectrum(psi, r, limits).eigenvalues);
        }
    }
    size_t len = 0;
    for (const auto &sp : spectra) {
        len = std::max(len, sp.size());
    }
    for (auto &sp : spectra) {
        sp.resize(len, 0.0);
    }
    for (size_t x = 1; x < spectra.size(); x++) {
        for (size_t i = 0; i < len; i++) {
            if (std::abs(spectra[x][i] - spectra[0][i]) > 1e-9) {
                return false;
            }
        }
    }
    return true;
}

bool generic_disk_check(const Surface &s, const Region &r, const SectorAmplitudes &amps, const OracleLimits &limits) {
    if (!r.rect()) {
        throw ArgumentError("generic_disk_check needs a rectangle region");
    }
    size_t boundary = region_stats(s, r).boundary_links.value();
    StateSupport psi = build_ground_state(s, amps, limits);
    double entropy = reduced_spectrum(psi, r, limits).entropy_bits;
    return std::abs(entropy - (static_cast<double>(boundary) - 1)) <= 1e-6;
}

}  // namespace toric
