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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "test_support.h"
#include "toric/engine.h"
#include "toric/errors.h"

using namespace toric;
using namespace toric::testing;

namespace {

SectorAmplitudes random_amplitudes(std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    SectorAmplitudes out;
    double norm = 0;
    for (auto &a : out.a) {
        a = Amplitude(g(rng), g(rng));
        norm += std::norm(a);
    }
    for (auto &a : out.a) {
        a /= std::sqrt(norm);
    }
    return out;
}

double trace(const SpectrumReport &r) {
    double t = 0;
    for (double v : r.eigenvalues) {
        t += v;
    }
    return t;
}

}  // namespace

TEST(build_ground_state, k2_sector_00) {
    Surface s = build_torus(2);
    StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    EXPECT_EQ(psi.size(), 8u);
    for (const auto &[e, amp] : psi.amplitudes()) {
        EXPECT_NEAR(amp.real(), 1 / std::sqrt(8.0), 1e-15);
        EXPECT_EQ(amp.imag(), 0);
        EXPECT_TRUE(in_rowspace(s.star_matrix(), e));
    }
    EXPECT_NEAR(psi.norm_squared(), 1, 1e-12);
}

TEST(build_ground_state, k2_sector_01_is_translated_by_w1) {
    Surface s = build_torus(2);
    StateSupport base = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    StateSupport moved = build_ground_state(s, SectorAmplitudes::basis(0, 1));
    BitVector w1 = ladder_operators(s).w1;
    ASSERT_EQ(moved.size(), 8u);
    for (const auto &[e, amp] : base.amplitudes()) {
        auto partner = moved.find(e ^ w1);
        ASSERT_TRUE(partner.has_value());
        EXPECT_EQ(*partner, amp);
    }
}

TEST(build_ground_state, k2_two_sector_superposition) {
    Surface s = build_torus(2);
    double h = 1 / std::sqrt(2.0);
    StateSupport psi = build_ground_state(s, SectorAmplitudes{{h, h, 0, 0}});
    EXPECT_EQ(psi.size(), 16u);
    for (const auto &[e, amp] : psi.amplitudes()) {
        EXPECT_NEAR(std::abs(amp), 0.25, 1e-15);
    }
}

TEST(build_ground_state, errors) {
    Surface s = build_torus(2);
    EXPECT_THROW(build_ground_state(s, SectorAmplitudes{{1, 1, 0, 0}}), ArgumentError);
    EXPECT_THROW(build_ground_state(build_torus(5), SectorAmplitudes::basis(0, 0), OracleLimits{10, 4096}),
                 ResourceLimitError);
    Surface cube = load_surface(cube_complex().document());
    EXPECT_EQ(build_ground_state(cube, SectorAmplitudes::basis(0, 0)).size(), 128u);
    EXPECT_THROW(build_ground_state(cube, SectorAmplitudes::basis(1, 0)), UnsupportedOperationError);
}

TEST(build_ground_state, four_sectors_are_disjoint_and_equal_sized) {
    for (size_t k : {2, 3}) {
        Surface s = build_torus(k);
        std::vector<StateSupport> sectors;
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                sectors.push_back(build_ground_state(s, SectorAmplitudes::basis(i, j)));
                EXPECT_EQ(sectors.back().size(), size_t{1} << (k * k - 1));
            }
        }
        for (size_t x = 0; x < 4; x++) {
            for (size_t y = x + 1; y < 4; y++) {
                for (const auto &[e, amp] : sectors[x].amplitudes()) {
                    EXPECT_FALSE(sectors[y].find(e).has_value());
                }
            }
        }
    }
}

TEST(verify_ground_state, accepts_every_constructed_state) {
    std::mt19937_64 rng(11);
    for (size_t k : {2, 3}) {
        Surface s = build_torus(k);
        for (int i = 0; i < 2; i++) {
            for (int j = 0; j < 2; j++) {
                EXPECT_TRUE(verify_ground_state(s, build_ground_state(s, SectorAmplitudes::basis(i, j))));
            }
        }
        for (int trial = 0; trial < 5; trial++) {
            EXPECT_TRUE(verify_ground_state(s, build_ground_state(s, random_amplitudes(rng))));
        }
    }
    Surface genus2 = load_surface(double_torus_complex(3).document());
    EXPECT_TRUE(verify_ground_state(genus2, build_ground_state(genus2, SectorAmplitudes::basis(0, 0))));
}

TEST(verify_ground_state, rejects_non_ground_states) {
    Surface s = build_torus(2);
    StateSupport vacuum(s.n_links());
    vacuum.set(BitVector(s.n_links()), 1);
    EXPECT_FALSE(verify_ground_state(s, vacuum));
    EXPECT_FALSE(verify_ground_state(s, StateSupport(s.n_links())));

    StateSupport good = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    StateSupport perturbed = good;
    const auto &[first, amp] = *good.amplitudes().begin();
    perturbed.set(first, amp + 1e-3);
    EXPECT_FALSE(verify_ground_state(s, perturbed));

    // A string with odd plaquette overlap (an open string) violates B_p = 1.
    StateSupport open = good;
    for (const auto &[e, a] : good.amplitudes()) {
        BitVector flipped = e;
        flipped.flip(0);
        open.set(flipped, a);
    }
    EXPECT_FALSE(verify_ground_state(s, open));
}

TEST(verify_ground_state, any_single_string_perturbation_is_caught) {
    std::mt19937_64 rng(4);
    Surface s = build_torus(2);
    StateSupport good = build_ground_state(s, random_amplitudes(rng));
    for (const auto &[e, amp] : good.amplitudes()) {
        StateSupport bad = good;
        bad.set(e, amp * Amplitude(1.0, 1e-6));
        EXPECT_FALSE(verify_ground_state(s, bad));
    }
}

TEST(reduced_spectrum, named_examples) {
    Surface s = build_torus(2);
    StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    size_t link[] = {0};
    SpectrumReport one = reduced_spectrum(psi, links_region(s, link));
    ASSERT_EQ(one.nonzero_count(), 2u);
    EXPECT_NEAR(one.eigenvalues[0], 0.5, 1e-12);
    EXPECT_NEAR(one.eigenvalues[1], 0.5, 1e-12);
    EXPECT_NEAR(one.entropy_bits, 1.0, 1e-12);

    EXPECT_NEAR(reduced_spectrum(psi, chain_region(s, ChainOrientation::kRow, 0)).entropy_bits, 1.0, 1e-12);

    SpectrumReport face = reduced_spectrum(psi, rect_region(s, 0, 0, 1, 1));
    EXPECT_NEAR(face.entropy_bits, 3.0, 1e-12);
    EXPECT_TRUE(face.flat);
    ASSERT_EQ(face.nonzero_count(), 8u);
    for (size_t i = 0; i < 8; i++) {
        EXPECT_NEAR(face.eigenvalues[i], 0.125, 1e-12);
    }
}

TEST(reduced_spectrum, counting_and_eigensolver_agree) {
    std::mt19937_64 rng(21);
    Surface s = build_torus(3);
    StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    OracleLimits dense;
    dense.allow_counting = false;
    for (int trial = 0; trial < 40; trial++) {
        Region r(s, random_nontrivial_mask(s.n_links(), rng));
        SpectrumReport counted = reduced_spectrum(psi, r);
        SpectrumReport solved = reduced_spectrum(psi, r, dense);
        EXPECT_TRUE(counted.combinatorial);
        EXPECT_FALSE(solved.combinatorial);
        ASSERT_EQ(counted.nonzero_count(), solved.nonzero_count(1e-9));
        for (size_t i = 0; i < counted.nonzero_count(); i++) {
            EXPECT_NEAR(counted.eigenvalues[i], solved.eigenvalues[i], 1e-10);
        }
        EXPECT_NEAR(counted.entropy_bits, solved.entropy_bits, 1e-9);
    }
}

TEST(reduced_spectrum, projector_law_and_trace) {
    std::mt19937_64 rng(5);
    for (size_t k : {2, 3}) {
        Surface s = build_torus(k);
        StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(1, 1));
        for (int trial = 0; trial < 100; trial++) {
            Region r(s, random_nontrivial_mask(s.n_links(), rng));
            EntropyReport rep = group_stats(s, r);
            SpectrumReport sp = reduced_spectrum(psi, r);
            double expected = std::ldexp(1.0, -static_cast<int>(rep.entropy_bits));
            EXPECT_NEAR(trace(sp), 1, 1e-9);
            EXPECT_TRUE(sp.flat);
            EXPECT_EQ(sp.nonzero_count(), size_t{1} << rep.entropy_bits);
            EXPECT_NEAR(sp.eigenvalues[0], expected, 1e-12);
            EXPECT_NEAR(sp.purity, expected, 1e-9);
            EXPECT_NEAR(sp.entropy_bits, static_cast<double>(rep.entropy_bits), 1e-9);
        }
    }
}

TEST(reduced_spectrum, superposition_uses_eigensolver_and_keeps_trace) {
    std::mt19937_64 rng(9);
    Surface s = build_torus(3);
    StateSupport psi = build_ground_state(s, random_amplitudes(rng));
    SpectrumReport sp = reduced_spectrum(psi, chain_region(s, ChainOrientation::kColumn, 0));
    EXPECT_FALSE(sp.combinatorial);
    EXPECT_NEAR(trace(sp), 1, 1e-9);
    EXPECT_THROW(reduced_spectrum(psi, rect_region(s, 0, 0, 2, 2), OracleLimits{24, 1}), ResourceLimitError);
}

TEST(reduced_spectrum, rejects_mismatched_region) {
    Surface s2 = build_torus(2), s3 = build_torus(3);
    StateSupport psi = build_ground_state(s2, SectorAmplitudes::basis(0, 0));
    EXPECT_THROW(reduced_spectrum(psi, rect_region(s3, 0, 0, 1, 1)), ArgumentError);
}

TEST(two_spin_concurrence, vanishes_for_all_k2_pairs) {
    Surface s = build_torus(2);
    StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    EXPECT_EQ(two_spin_concurrence(psi, 0, 1), 0.0);
    for (size_t a = 0; a < 8; a++) {
        for (size_t b = a + 1; b < 8; b++) {
            ComplexMatrix rho = two_spin_density(psi, a, b);
            double tr = 0;
            for (size_t i = 0; i < 4; i++) {
                tr += rho(i, i).real();
            }
            EXPECT_NEAR(tr, 1, 1e-12);
            EXPECT_EQ(two_spin_concurrence(psi, a, b), 0.0);
        }
    }
}

TEST(concurrence_of_diagonal, formula_path) {
    ComplexMatrix product(4);
    product(0, 0) = 1;
    EXPECT_EQ(concurrence_of_diagonal(product), 0.0);

    ComplexMatrix mixed(4);
    for (size_t i = 0; i < 4; i++) {
        mixed(i, i) = 0.25;
    }
    EXPECT_EQ(concurrence_of_diagonal(mixed), 0.0);

    ComplexMatrix bell(4);  // (|00> + |11>)/sqrt(2) is not diagonal
    bell(0, 0) = bell(3, 3) = bell(0, 3) = bell(3, 0) = 0.5;
    EXPECT_THROW(concurrence_of_diagonal(bell), StructuralError);

    Surface s = build_torus(2);
    StateSupport psi = build_ground_state(s, SectorAmplitudes::basis(0, 0));
    EXPECT_THROW(two_spin_density(psi, 3, 3), ArgumentError);
}

TEST(isospectral_check, sector_states_share_spectra) {
    Surface s2 = build_torus(2);
    EXPECT_TRUE(isospectral_check(s2, rect_region(s2, 0, 0, 1, 1)));
    size_t three[] = {0, 3, 6};
    EXPECT_TRUE(isospectral_check(s2, links_region(s2, three)));
    Surface s3 = build_torus(3);
    EXPECT_TRUE(isospectral_check(s3, chain_region(s3, ChainOrientation::kRow, 1)));
}

TEST(generic_disk_check, superpositions_on_rectangles) {
    Surface s3 = build_torus(3);
    Region face = rect_region(s3, 0, 0, 1, 1);
    EXPECT_TRUE(generic_disk_check(s3, face, SectorAmplitudes{{0.5, 0.5, 0.5, 0.5}}));
    EXPECT_TRUE(generic_disk_check(s3, face, SectorAmplitudes::basis(0, 0)));

    std::mt19937_64 rng(123);
    Surface s4 = build_torus(4);
    Region strip = rect_region(s4, 0, 0, 2, 1);
    SectorAmplitudes amps = random_amplitudes(rng);
    EXPECT_TRUE(generic_disk_check(s4, strip, amps));
    SpectrumReport sp = reduced_spectrum(build_ground_state(s4, amps), strip);
    EXPECT_NEAR(sp.entropy_bits, 5.0, 1e-6);

    EXPECT_THROW(generic_disk_check(s3, chain_region(s3, ChainOrientation::kRow, 0), amps), ArgumentError);
}

TEST(generic_disk_check, rectangle_holding_a_dual_loop_is_not_a_disk) {
    // At k=3 a 2x1 rectangle contains h(0,0), h(1,0), h(2,0): a closed loop on the
    // dual lattice that winds around the torus. Mixing sectors then changes rho_A.
    Surface s = build_torus(3);
    Region r = rect_region(s, 0, 0, 2, 1);
    SectorAmplitudes amps{{0.5, Amplitude(0, 0.5), Amplitude(-0.5, 0.3), Amplitude(0, 0.4)}};
    EXPECT_FALSE(generic_disk_check(s, r, amps));
    // Reference value from an independent dense partial trace.
    EXPECT_NEAR(reduced_spectrum(build_ground_state(s, amps), r).entropy_bits, 4.992774453987808, 1e-9);
    EXPECT_TRUE(generic_disk_check(s, r, SectorAmplitudes::basis(1, 0)));
}
