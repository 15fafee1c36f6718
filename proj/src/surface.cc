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

#include <fstream>
#include <unordered_map>

#include "toric/errors.h"

namespace toric {

namespace {

struct CheckedSurface {
    std::vector<InvariantCheck> checks;
    std::optional<BitMatrix> stars;
    std::optional<BitMatrix> plaquettes;
    size_t star_rank = 0;
    size_t plaquette_rank = 0;
};

void add(std::vector<InvariantCheck> &checks, std::string name, bool passed, std::string detail = "") {
    checks.push_back(InvariantCheck{std::move(name), passed, std::move(detail)});
}

// Validates ids and builds the incidence matrix; returns an error message on failure.
std::optional<std::string> build_incidence(
    const std::vector<std::vector<size_t>> &cells, size_t n_links, const char *what, BitMatrix &out) {
    out = BitMatrix(cells.size(), n_links);
    for (size_t c = 0; c < cells.size(); c++) {
        if (cells[c].empty()) {
            return std::string(what) + " " + std::to_string(c) + " is empty";
        }
        for (size_t link : cells[c]) {
            if (link >= n_links) {
                return std::string(what) + " " + std::to_string(c) + ": link " + std::to_string(link) +
                       " out of range (n_links = " + std::to_string(n_links) + ")";
            }
            if (out.get(c, link)) {
                return std::string(what) + " " + std::to_string(c) + ": link " + std::to_string(link) + " listed twice";
            }
            out.set(c, link);
        }
    }
    return std::nullopt;
}

std::vector<std::vector<size_t>> cells_of_link(const BitMatrix &m) {
    std::vector<std::vector<size_t>> out(m.num_cols());
    for (size_t r = 0; r < m.num_rows(); r++) {
        m.row(r).for_each_set_bit([&](size_t link) { out[link].push_back(r); });
    }
    return out;
}

InvariantCheck degree_check(const std::vector<std::vector<size_t>> &incident, const char *name, const char *what) {
    for (size_t link = 0; link < incident.size(); link++) {
        if (incident[link].size() != 2) {
            return {name, false,
                    "link " + std::to_string(link) + " is in " + std::to_string(incident[link].size()) + " " + what +
                        " (expected 2)"};
        }
    }
    return {name, true, ""};
}

InvariantCheck commutation_check(const BitMatrix &stars, const BitMatrix &plaquettes) {
    auto stars_of = cells_of_link(stars);
    auto plaqs_of = cells_of_link(plaquettes);
    std::unordered_map<uint64_t, size_t> overlap;
    uint64_t n_plaq = plaquettes.num_rows();
    for (size_t link = 0; link < stars.num_cols(); link++) {
        for (size_t s : stars_of[link]) {
            for (size_t p : plaqs_of[link]) {
                overlap[s * n_plaq + p]++;
            }
        }
    }
    // Report the smallest offending pair so the message is deterministic.
    std::optional<uint64_t> worst;
    for (const auto &[key, count] : overlap) {
        if (count % 2 && (!worst || key < *worst)) {
            worst = key;
        }
    }
    if (worst) {
        return {"star_plaquette_commutation", false,
                "star " + std::to_string(*worst / n_plaq) + " and plaquette " + std::to_string(*worst % n_plaq) +
                    " share " + std::to_string(overlap[*worst]) + " links (must be even)"};
    }
    return {"star_plaquette_commutation", true, ""};
}

CheckedSurface run_checks(const SurfaceDocument &doc) {
    CheckedSurface out;
    auto &checks = out.checks;

    BitMatrix stars, plaquettes;
    std::optional<std::string> bad = build_incidence(doc.stars, doc.n_links, "star", stars);
    if (!bad) {
        bad = build_incidence(doc.plaquettes, doc.n_links, "plaquette", plaquettes);
    }
    if (!bad && (doc.n_links == 0 || doc.stars.empty() || doc.plaquettes.empty())) {
        bad = "surface needs at least one link, star and plaquette";
    }
    add(checks, "well_formed", !bad, bad.value_or(""));
    if (bad) {
        for (const char *name :
             {"star_degree", "plaquette_degree", "star_plaquette_commutation", "star_product_identity",
              "plaquette_product_identity", "euler_characteristic", "star_rank", "plaquette_rank"}) {
            add(checks, name, false, "not evaluated: document is malformed");
        }
        return out;
    }

    checks.push_back(degree_check(cells_of_link(stars), "star_degree", "stars"));
    checks.push_back(degree_check(cells_of_link(plaquettes), "plaquette_degree", "plaquettes"));
    checks.push_back(commutation_check(stars, plaquettes));

    BitVector star_sum = stars.row_sum();
    add(checks, "star_product_identity", star_sum.none(),
        star_sum.none() ? "" : "XOR of all stars is nonzero at link " + std::to_string(star_sum.lowest_set_bit()));
    BitVector plaq_sum = plaquettes.row_sum();
    add(checks, "plaquette_product_identity", plaq_sum.none(),
        plaq_sum.none() ? "" : "XOR of all plaquettes is nonzero at link " + std::to_string(plaq_sum.lowest_set_bit()));

    long long euler = static_cast<long long>(doc.stars.size()) - static_cast<long long>(doc.n_links) +
                      static_cast<long long>(doc.plaquettes.size());
    bool euler_ok = euler % 2 == 0 && euler <= 2;
    add(checks, "euler_characteristic", euler_ok,
        euler_ok ? "" : "n0 - n1 + n2 = " + std::to_string(euler) + " (must be even and <= 2)");

    size_t star_rank = rank(stars);
    add(checks, "star_rank", star_rank + 1 == stars.num_rows(),
        "rank " + std::to_string(star_rank) + ", n0 - 1 = " + std::to_string(stars.num_rows() - 1));
    size_t plaq_rank = rank(plaquettes);
    add(checks, "plaquette_rank", plaq_rank + 1 == plaquettes.num_rows(),
        "rank " + std::to_string(plaq_rank) + ", n2 - 1 = " + std::to_string(plaquettes.num_rows() - 1));
    if (checks[checks.size() - 2].passed) {
        checks[checks.size() - 2].detail.clear();
    }
    if (checks.back().passed) {
        checks.back().detail.clear();
    }

    out.stars = std::move(stars);
    out.plaquettes = std::move(plaquettes);
    out.star_rank = star_rank;
    out.plaquette_rank = plaq_rank;
    return out;
}

void throw_first_failure(const std::vector<InvariantCheck> &checks) {
    for (const auto &c : checks) {
        if (!c.passed) {
            throw ValidationError(c.name, c.detail);
        }
    }
}

uint64_t fingerprint(const BitMatrix &a, const BitMatrix &b) {
    BitVectorHash hash;
    uint64_t h = 0x9e3779b97f4a7c15ull ^ a.num_cols();
    for (const BitMatrix *m : {&a, &b}) {
        h = h * 31 + m->num_rows();
        for (const auto &r : m->rows()) {
            h = (h ^ hash(r)) * 0x100000001b3ull;
        }
    }
    return h;
}

}  // namespace

SurfaceDocument parse_surface_document(const nlohmann::json &doc) {
    auto cells = [&](const char *key) {
        if (!doc.contains(key) || !doc[key].is_array()) {
            throw ValidationError("well_formed", std::string("missing array '") + key + "'");
        }
        std::vector<std::vector<size_t>> out;
        for (const auto &cell : doc[key]) {
            if (!cell.is_array()) {
                throw ValidationError("well_formed", std::string("'") + key + "' entries must be arrays of link ids");
            }
            std::vector<size_t> links;
            for (const auto &id : cell) {
                if (!id.is_number_integer() || id.get<long long>() < 0) {
                    throw ValidationError("well_formed", std::string("'") + key + "' contains a non-integer link id");
                }
                links.push_back(id.get<size_t>());
            }
            out.push_back(std::move(links));
        }
        return out;
    };
    if (!doc.is_object() || !doc.contains("n_links") || !doc["n_links"].is_number_integer() ||
        doc["n_links"].get<long long>() < 0) {
        throw ValidationError("well_formed", "document must be an object with integer 'n_links'");
    }
    SurfaceDocument out;
    out.n_links = doc["n_links"].get<size_t>();
    out.stars = cells("stars");
    out.plaquettes = cells("plaquettes");
    return out;
}

nlohmann::json to_json(const SurfaceDocument &doc) {
    nlohmann::ordered_json j;
    j["n_links"] = doc.n_links;
    j["stars"] = doc.stars;
    j["plaquettes"] = doc.plaquettes;
    return nlohmann::json(j);
}

std::vector<InvariantCheck> check_surface_invariants(const SurfaceDocument &doc) {
    return run_checks(doc).checks;
}

Surface::Surface(
    BitMatrix stars, BitMatrix plaquettes, std::optional<TorusLattice> torus, size_t star_rank, size_t plaquette_rank)
    : stars_(std::move(stars)),
      plaquettes_(std::move(plaquettes)),
      torus_(torus),
      star_rank_(star_rank),
      plaquette_rank_(plaquette_rank) {
    id_ = fingerprint(stars_, plaquettes_);
    auto incident = cells_of_link(stars_);
    link_sites_.reserve(n_links());
    for (const auto &pair : incident) {
        link_sites_.emplace_back(pair[0], pair[1]);
    }
}

const TorusLattice &Surface::torus() const {
    if (!torus_) {
        throw ArgumentError("operation requires a square-torus surface");
    }
    return *torus_;
}

Surface build_torus(size_t k) {
    if (k < 2) {
        throw ArgumentError("torus size k must be >= 2 (got " + std::to_string(k) + ")");
    }
    TorusLattice lattice{k};
    SurfaceDocument doc;
    doc.n_links = 2 * k * k;
    for (size_t i = 0; i < k; i++) {
        for (size_t j = 0; j < k; j++) {
            auto ii = static_cast<long long>(i);
            auto jj = static_cast<long long>(j);
            doc.stars.push_back(lattice.star_links(ii, jj));
            doc.plaquettes.push_back(lattice.plaquette_links(ii, jj));
        }
    }
    CheckedSurface checked = run_checks(doc);
    throw_first_failure(checked.checks);
    return Surface(
        std::move(*checked.stars), std::move(*checked.plaquettes), lattice, checked.star_rank, checked.plaquette_rank);
}

Surface load_surface(const SurfaceDocument &doc) {
    CheckedSurface checked = run_checks(doc);
    throw_first_failure(checked.checks);
    return Surface(
        std::move(*checked.stars), std::move(*checked.plaquettes), std::nullopt, checked.star_rank,
        checked.plaquette_rank);
}

Surface load_surface(const nlohmann::json &doc) {
    return load_surface(parse_surface_document(doc));
}

Surface load_surface_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ArgumentError("cannot open surface file '" + path + "'");
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error &e) {
        throw ValidationError("well_formed", std::string("invalid JSON in '") + path + "': " + e.what());
    }
    return load_surface(doc);
}

SurfaceDocument to_document(const Surface &s) {
    SurfaceDocument doc;
    doc.n_links = s.n_links();
    for (const auto &r : s.star_matrix().rows()) {
        doc.stars.push_back(r.indices());
    }
    for (const auto &r : s.plaquette_matrix().rows()) {
        doc.plaquettes.push_back(r.indices());
    }
    return doc;
}

GenusDegeneracy genus_and_degeneracy(const Surface &s) {
    long long euler = s.euler_characteristic();
    GenusDegeneracy out;
    out.genus = static_cast<size_t>(1 - euler / 2);
    out.log2_degeneracy = 2 * out.genus;
    out.log2_degeneracy_from_ranks = s.n_links() - s.star_rank() - s.plaquette_rank();
    if (out.log2_degeneracy < 64) {
        out.degeneracy = uint64_t{1} << out.log2_degeneracy;
    }
    return out;
}

LadderPair ladder_operators(const Surface &s) {
    if (!s.is_torus()) {
        throw UnsupportedOperationError("ladder operators are only defined on the square torus");
    }
    const TorusLattice &t = s.torus();
    LadderPair out{BitVector(s.n_links()), BitVector(s.n_links())};
    for (size_t x = 0; x < t.k; x++) {
        out.w1.set(t.v(0, static_cast<long long>(x)));
        out.w2.set(t.h(static_cast<long long>(x), 0));
    }
    return out;
}

}  // namespace toric
