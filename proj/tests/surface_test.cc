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

#include "toric/surface.h"

#include <gtest/gtest.h>

#include "test_support.h"
#include "toric/errors.h"

using namespace toric;
using namespace toric::testing;

TEST(build_torus, counts) {
    Surface s = build_torus(2);
    EXPECT_EQ(s.n_sites(), 4u);
    EXPECT_EQ(s.n_links(), 8u);
    EXPECT_EQ(s.n_faces(), 4u);
    EXPECT_EQ(s.euler_characteristic(), 0);
    for (size_t k = 2; k <= 9; k++) {
        Surface t = build_torus(k);
        EXPECT_EQ(t.n_sites(), k * k);
        EXPECT_EQ(t.n_links(), 2 * k * k);
        EXPECT_EQ(t.n_faces(), k * k);
    }
}

TEST(build_torus, star_indexing_convention) {
    Surface s = build_torus(3);
    const TorusLattice &t = s.torus();
    EXPECT_EQ(s.star(t.site(1, 1)), BitVector::from_indices(18, {8, 6, 9, 3}));
    EXPECT_EQ(t.h(1, 1), 8u);
    EXPECT_EQ(t.h(1, 0), 6u);
    EXPECT_EQ(t.v(1, 1), 9u);
    EXPECT_EQ(t.v(0, 1), 3u);
}

TEST(build_torus, matches_independent_coordinate_construction) {
    for (size_t k = 2; k <= 6; k++) {
        Surface s = build_torus(k);
        Surface ref = load_surface(torus_complex(k).document());
        EXPECT_EQ(s.star_matrix(), ref.star_matrix()) << "k=" << k;
        EXPECT_EQ(s.plaquette_matrix(), ref.plaquette_matrix()) << "k=" << k;
    }
}

TEST(build_torus, products_of_all_stars_and_plaquettes_are_identity) {
    for (size_t k = 2; k <= 10; k++) {
        Surface s = build_torus(k);
        EXPECT_TRUE(s.star_matrix().row_sum().none());
        EXPECT_TRUE(s.plaquette_matrix().row_sum().none());
    }
}

TEST(build_torus, stars_commute_with_plaquettes) {
    Surface s = build_torus(4);
    for (size_t st = 0; st < s.n_sites(); st++) {
        for (size_t p = 0; p < s.n_faces(); p++) {
            size_t overlap = (s.star(st) & s.plaquette(p)).popcount();
            EXPECT_TRUE(overlap == 0 || overlap == 2);
        }
    }
}

TEST(build_torus, rejects_k_below_2) {
    EXPECT_THROW(build_torus(1), ArgumentError);
    EXPECT_THROW(build_torus(0), ArgumentError);
}

TEST(load_surface, cube_is_a_sphere) {
    Surface s = load_surface(cube_complex().document());
    EXPECT_EQ(s.n_sites(), 8u);
    EXPECT_EQ(s.n_links(), 12u);
    EXPECT_EQ(s.n_faces(), 6u);
    EXPECT_EQ(s.euler_characteristic(), 2);
    EXPECT_FALSE(s.is_torus());
    for (size_t st = 0; st < 8; st++) {
        EXPECT_EQ(s.star(st).popcount(), 3u);
    }
    GenusDegeneracy g = genus_and_degeneracy(s);
    EXPECT_EQ(g.genus, 0u);
    EXPECT_EQ(g.degeneracy, 1u);
    EXPECT_EQ(g.log2_degeneracy_from_ranks, 0u);
}

TEST(load_surface, torus_round_trips_through_json) {
    for (size_t k = 2; k <= 5; k++) {
        Surface s = build_torus(k);
        nlohmann::json doc = to_json(to_document(s));
        Surface back = load_surface(nlohmann::json::parse(doc.dump()));
        EXPECT_EQ(back.star_matrix(), s.star_matrix());
        EXPECT_EQ(back.plaquette_matrix(), s.plaquette_matrix());
        EXPECT_EQ(back.id(), s.id());
    }
}

TEST(load_surface, link_in_three_stars_fails_degree_check) {
    SurfaceDocument doc = to_document(build_torus(3));
    doc.stars[4].push_back(0);
    try {
        load_surface(doc);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.check, "star_degree");
        EXPECT_NE(std::string(e.what()).find("link 0 is in 3 stars"), std::string::npos);
    }
}

TEST(load_surface, odd_overlap_fails_commutation_check) {
    // Swap two links between stars: degrees stay 2, commutation breaks.
    SurfaceDocument doc = to_document(build_torus(3));
    const TorusLattice t{3};
    auto &a = doc.stars[t.site(0, 0)];
    auto &b = doc.stars[t.site(2, 2)];
    size_t from_a = a[0], from_b = b[0];
    a[0] = from_b;
    b[0] = from_a;
    try {
        load_surface(doc);
        FAIL() << "expected ValidationError";
    } catch (const ValidationError &e) {
        EXPECT_EQ(e.check, "star_plaquette_commutation");
    }
}

TEST(load_surface, odd_euler_characteristic_is_rejected) {
    // A triangle: 3 sites, 3 links, 2 faces (both sides). Euler = 2, valid sphere.
    SurfaceDocument tri{3, {{0, 2}, {0, 1}, {1, 2}}, {{0, 1, 2}, {0, 1, 2}}};
    EXPECT_NO_THROW(load_surface(tri));
    // Drop a face: plaquette degree breaks before Euler is reached.
    SurfaceDocument broken{3, {{0, 2}, {0, 1}, {1, 2}}, {{0, 1, 2}}};
    auto checks = check_surface_invariants(broken);
    bool euler_failed = false;
    for (const auto &c : checks) {
        if (c.name == "euler_characteristic") {
            euler_failed = !c.passed;
        }
    }
    EXPECT_TRUE(euler_failed);
    EXPECT_THROW(load_surface(broken), ValidationError);
}

TEST(load_surface, malformed_documents) {
    EXPECT_THROW(load_surface(nlohmann::json::parse(R"({"stars": []})")), ValidationError);
    EXPECT_THROW(
        load_surface(nlohmann::json::parse(R"({"n_links": 2, "stars": [[0, 5]], "plaquettes": [[0]]})")),
        ValidationError);
    EXPECT_THROW(
        load_surface(nlohmann::json::parse(R"({"n_links": 2, "stars": [[0, 0]], "plaquettes": [[0]]})")),
        ValidationError);
    EXPECT_THROW(load_surface_file("/nonexistent/surface.json"), ArgumentError);
}

TEST(load_surface, all_checks_reported_in_order) {
    auto checks = check_surface_invariants(to_document(build_torus(3)));
    std::vector<std::string> names;
    for (const auto &c : checks) {
        EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
        names.push_back(c.name);
    }
    EXPECT_EQ(
        names, (std::vector<std::string>{
                   "well_formed", "star_degree", "plaquette_degree", "star_plaquette_commutation",
                   "star_product_identity", "plaquette_product_identity", "euler_characteristic", "star_rank",
                   "plaquette_rank"}));
}

TEST(genus_and_degeneracy, torus_is_genus_one_fourfold) {
    for (size_t k = 2; k <= 8; k++) {
        GenusDegeneracy g = genus_and_degeneracy(build_torus(k));
        EXPECT_EQ(g.genus, 1u);
        EXPECT_EQ(g.degeneracy, 4u);
        EXPECT_EQ(g.log2_degeneracy_from_ranks, 2u);
    }
}

TEST(genus_and_degeneracy, double_torus_is_sixteenfold) {
    Complex c = double_torus_complex(3);
    Surface s = load_surface(c.document());
    EXPECT_EQ(s.euler_characteristic(), -2);
    GenusDegeneracy g = genus_and_degeneracy(s);
    EXPECT_EQ(g.genus, 2u);
    EXPECT_EQ(g.degeneracy, 16u);
    EXPECT_EQ(g.log2_degeneracy_from_ranks, 4u);
    EXPECT_EQ(rank(s.star_matrix()), s.n_sites() - 1);
    EXPECT_EQ(rank(s.plaquette_matrix()), s.n_faces() - 1);
}

TEST(ladder_operators, k2_values) {
    LadderPair w = ladder_operators(build_torus(2));
    EXPECT_EQ(w.w1, BitVector::from_indices(8, {1, 3}));
    EXPECT_EQ(w.w2, BitVector::from_indices(8, {0, 4}));
}

TEST(ladder_operators, commute_with_plaquettes_and_are_noncontractible) {
    for (size_t k = 2; k <= 7; k++) {
        Surface s = build_torus(k);
        LadderPair w = ladder_operators(s);
        EXPECT_EQ(w.w1.popcount(), k);
        EXPECT_EQ(w.w2.popcount(), k);
        for (size_t p = 0; p < s.n_faces(); p++) {
            EXPECT_EQ((w.w1 & s.plaquette(p)).popcount() % 2, 0u);
            EXPECT_EQ((w.w2 & s.plaquette(p)).popcount() % 2, 0u);
        }
        EXPECT_FALSE(in_rowspace(s.star_matrix(), w.w1));
        EXPECT_FALSE(in_rowspace(s.star_matrix(), w.w2));
        EXPECT_FALSE(in_rowspace(s.star_matrix(), w.w1 ^ w.w2));
    }
}

TEST(ladder_operators, unsupported_on_generic_surfaces) {
    EXPECT_THROW(ladder_operators(load_surface(cube_complex().document())), UnsupportedOperationError);
}
