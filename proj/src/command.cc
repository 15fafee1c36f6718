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

#include "toric/command.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <new>

#include "CLI11.hpp"
#include "json.hpp"
#include "toric/engine.h"
#include "toric/errors.h"
#include "toric/region_dsl.h"
#include "toric/surface.h"

namespace toric {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kMatchTolerance = 1e-9;

std::string csv_text(const Json &v) {
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_array()) {
        std::string out;
        for (size_t i = 0; i < v.size(); i++) {
            out += (i ? ";" : "") + csv_text(v[i]);
        }
        return out;
    }
    return v.dump();
}

// Quotes a field when it holds a separator, quote or newline.
std::string csv_cell(const Json &v) {
    std::string text = csv_text(v);
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char c : text) {
        quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return quoted + "\"";
}

void emit(std::ostream &out, const Json &doc, OutputFormat format) {
    if (format == OutputFormat::kJson) {
        out << doc.dump() << "\n";
        return;
    }
    std::string header, row;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        header += (header.empty() ? "" : ",") + it.key();
        row += (it == doc.begin() ? "" : ",") + csv_cell(it.value());
    }
    out << header << "\n" << row << "\n";
}

int emit_error(std::ostream &out, const std::string &kind, const std::string &detail, int status) {
    Json doc;
    doc["error"] = kind;
    doc["detail"] = detail;
    out << doc.dump() << "\n";
    return status;
}

Surface load(const Command &c) {
    if (const auto *t = std::get_if<TorusSource>(&c.surface)) {
        return build_torus(t->k);
    }
    return load_surface_file(std::get<FileSource>(c.surface).path);
}

Json surface_header(const Command &c, const Surface &s) {
    Json doc;
    if (s.is_torus()) {
        doc["surface"] = "torus";
        doc["k"] = s.torus().k;
    } else {
        doc["surface"] = "file";
        doc["path"] = std::get<FileSource>(c.surface).path;
    }
    return doc;
}

void put_degeneracy(Json &doc, const GenusDegeneracy &g) {
    if (g.degeneracy) {
        doc["degeneracy"] = *g.degeneracy;
    } else {
        doc["degeneracy"] = nullptr;
    }
    doc["log2_degeneracy"] = g.log2_degeneracy;
}

Region require_region(const Command &c, const Surface &s) {
    if (c.region_spec.empty()) {
        throw ArgumentError("this command needs --region");
    }
    return parse_region_spec(c.region_spec, s);
}

int run_info(const Command &c, std::ostream &out, OutputFormat format) {
    Surface s = load(c);
    GenusDegeneracy g = genus_and_degeneracy(s);
    Json doc = surface_header(c, s);
    doc["n_sites"] = s.n_sites();
    doc["n_links"] = s.n_links();
    doc["n_faces"] = s.n_faces();
    doc["euler_characteristic"] = s.euler_characteristic();
    doc["genus"] = g.genus;
    put_degeneracy(doc, g);
    emit(out, doc, format);
    return kExitOk;
}

int run_degeneracy(const Command &c, std::ostream &out, OutputFormat format) {
    Surface s = load(c);
    GenusDegeneracy g = genus_and_degeneracy(s);
    if (g.log2_degeneracy != g.log2_degeneracy_from_ranks) {
        throw StructuralError("Euler genus and rank count disagree on the degeneracy");
    }
    Json doc;
    put_degeneracy(doc, g);
    emit(out, doc, format);
    return kExitOk;
}

int run_entropy(const Command &c, std::ostream &out, OutputFormat format) {
    Surface s = load(c);
    Region r = require_region(c, s);
    EntropyReport rep = group_stats(s, r);
    Json doc;
    doc["region"] = c.region_spec;
    doc["size_A"] = r.size_A();
    doc["log2_group"] = rep.log2_group;
    doc["log2_dA"] = rep.log2_dA;
    doc["log2_dB"] = rep.log2_dB;
    doc["log2_f"] = rep.log2_f;
    doc["entropy_bits"] = rep.entropy_bits;
    doc["rank_MA"] = rep.rank_MA;
    doc["rank_MB"] = rep.rank_MB;
    emit(out, doc, format);
    return kExitOk;
}

int run_sweep(const Command &c, std::ostream &out, OutputFormat format) {
    Surface s = load(c);
    std::vector<std::pair<size_t, size_t>> sizes = c.sizes;
    if (sizes.empty()) {
        for (size_t a = 1; a < s.torus().k; a++) {
            sizes.emplace_back(a, a);
        }
    }
    std::vector<SweepRow> rows = sweep_rectangles(s, sizes);
    if (format == OutputFormat::kCsv) {
        out << "a,b,boundary_links,entropy_bits\n";
        for (const auto &row : rows) {
            out << row.a << "," << row.b << "," << row.boundary_links << "," << row.entropy_bits << "\n";
        }
        return kExitOk;
    }
    Json doc = surface_header(c, s);
    Json list = Json::array();
    for (const auto &row : rows) {
        Json item;
        item["a"] = row.a;
        item["b"] = row.b;
        item["boundary_links"] = row.boundary_links;
        item["entropy_bits"] = row.entropy_bits;
        list.push_back(item);
    }
    doc["rows"] = list;
    emit(out, doc, format);
    return kExitOk;
}

int run_oracle(const Command &c, std::ostream &out, OutputFormat format) {
    Surface s = load(c);
    Region r = require_region(c, s);
    int64_t engine = entanglement_entropy(s, r);
    StateSupport psi = build_ground_state(s, c.amplitudes.value_or(SectorAmplitudes::basis(0, 0)), c.limits);
    SpectrumReport spec = reduced_spectrum(psi, r, c.limits);

    Json doc;
    doc["region"] = c.region_spec;
    Json eigenvalues = Json::array();
    for (double v : spec.eigenvalues) {
        eigenvalues.push_back(round_for_output(v));
    }
    doc["eigenvalues"] = eigenvalues;
    doc["entropy_bits"] = round_for_output(spec.entropy_bits);
    doc["purity"] = round_for_output(spec.purity);
    doc["flat"] = spec.flat;
    doc["method"] = spec.combinatorial ? "counting" : "jacobi";
    doc["engine_entropy_bits"] = engine;
    bool match = std::abs(spec.entropy_bits - static_cast<double>(engine)) <= kMatchTolerance;
    doc["match"] = match;
    if (!match) {
        doc["error"] = "oracle_mismatch";
        doc["detail"] = "oracle entropy differs from the engine by more than 1e-9 bits";
    }
    emit(out, doc, format);
    return match ? kExitOk : kExitOracleMismatch;
}

void push_check(Json &list, const std::string &name, bool passed, const std::string &detail = "") {
    Json item;
    item["name"] = name;
    item["passed"] = passed;
    item["detail"] = detail;
    list.push_back(item);
}

int run_verify(const Command &c, std::ostream &out, OutputFormat format) {
    SurfaceDocument doc_in;
    if (const auto *t = std::get_if<TorusSource>(&c.surface)) {
        doc_in = to_document(build_torus(t->k));
    } else {
        const std::string &path = std::get<FileSource>(c.surface).path;
        std::ifstream in(path);
        if (!in) {
            throw ArgumentError("cannot open surface file '" + path + "'");
        }
        nlohmann::json raw;
        try {
            in >> raw;
        } catch (const nlohmann::json::parse_error &e) {
            throw ValidationError("well_formed", std::string("invalid JSON: ") + e.what());
        }
        doc_in = parse_surface_document(raw);
    }

    Json checks = Json::array();
    bool all_passed = true;
    for (const auto &check : check_surface_invariants(doc_in)) {
        push_check(checks, check.name, check.passed, check.detail);
        all_passed &= check.passed;
    }

    if (all_passed) {
        Surface s = load_surface(doc_in);
        if (const auto *t = std::get_if<TorusSource>(&c.surface)) {
            s = build_torus(t->k);
        }
        GenusDegeneracy g = genus_and_degeneracy(s);
        bool agree = g.log2_degeneracy == g.log2_degeneracy_from_ranks;
        push_check(
            checks, "degeneracy_agreement", agree,
            "2g = " + std::to_string(g.log2_degeneracy) + ", n1 - rank(stars) - rank(plaquettes) = " +
                std::to_string(g.log2_degeneracy_from_ranks));
        all_passed &= agree;

        if (s.is_torus()) {
            LadderPair ladders = ladder_operators(s);
            bool commute = true;
            for (size_t p = 0; p < s.n_faces(); p++) {
                commute &= (ladders.w1 & s.plaquette(p)).popcount() % 2 == 0;
                commute &= (ladders.w2 & s.plaquette(p)).popcount() % 2 == 0;
            }
            push_check(checks, "ladders_commute_with_plaquettes", commute);
            bool noncontractible = !in_rowspace(s.star_matrix(), ladders.w1) &&
                                   !in_rowspace(s.star_matrix(), ladders.w2) &&
                                   !in_rowspace(s.star_matrix(), ladders.w1 ^ ladders.w2);
            push_check(checks, "ladders_noncontractible", noncontractible);
            all_passed &= commute && noncontractible;

            if (s.star_rank() <= c.limits.max_group_bits) {
                std::vector<StateSupport> sectors;
                bool stabilized = true;
                for (int i = 0; i < 2; i++) {
                    for (int j = 0; j < 2; j++) {
                        sectors.push_back(build_ground_state(s, SectorAmplitudes::basis(i, j), c.limits));
                        stabilized &= verify_ground_state(s, sectors.back());
                    }
                }
                push_check(checks, "sector_states_stabilized", stabilized);
                bool sizes_ok = true;
                for (const auto &psi : sectors) {
                    sizes_ok &= psi.size() == (size_t{1} << s.star_rank());
                }
                push_check(checks, "sector_sizes", sizes_ok, "each sector has 2^(n0-1) basis strings");
                bool disjoint = true;
                for (size_t x = 0; x < sectors.size(); x++) {
                    for (size_t y = x + 1; y < sectors.size(); y++) {
                        for (const auto &[e, amp] : sectors[x].amplitudes()) {
                            disjoint &= !sectors[y].find(e).has_value();
                        }
                    }
                }
                push_check(checks, "sectors_disjoint", disjoint);
                all_passed &= stabilized && sizes_ok && disjoint;
            } else {
                push_check(
                    checks, "ground_state_checks", true,
                    "skipped: star group has 2^" + std::to_string(s.star_rank()) + " elements, above --max-group-bits");
            }
        }
    }

    Json doc;
    if (const auto *t = std::get_if<TorusSource>(&c.surface)) {
        doc["surface"] = "torus";
        doc["k"] = t->k;
    } else {
        doc["surface"] = "file";
        doc["path"] = std::get<FileSource>(c.surface).path;
    }
    doc["checks"] = checks;
    doc["passed"] = all_passed;
    if (!all_passed) {
        doc["error"] = "validation_error";
        doc["detail"] = "one or more invariant checks failed";
    }
    if (format == OutputFormat::kCsv) {
        out << "name,passed,detail\n";
        for (const auto &item : checks) {
            out << csv_cell(item["name"]) << "," << csv_cell(item["passed"]) << "," << csv_cell(item["detail"]) << "\n";
        }
    } else {
        emit(out, doc, format);
    }
    return all_passed ? kExitOk : kExitArgumentError;
}

int dispatch(const Command &c, std::ostream &out) {
    OutputFormat format = c.format.value_or(c.verb == Verb::kSweep ? OutputFormat::kCsv : OutputFormat::kJson);
    switch (c.verb) {
        case Verb::kInfo:
            return run_info(c, out, format);
        case Verb::kEntropy:
            return run_entropy(c, out, format);
        case Verb::kSweep:
            return run_sweep(c, out, format);
        case Verb::kOracle:
            return run_oracle(c, out, format);
        case Verb::kVerify:
            return run_verify(c, out, format);
        case Verb::kDegeneracy:
            return run_degeneracy(c, out, format);
    }
    return kExitArgumentError;
}

size_t parse_size(const std::string &text, const std::string &what) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw ArgumentError("invalid " + what + " '" + text + "'");
    }
    return static_cast<size_t>(std::stoull(text));
}

double parse_real(const std::string &text) {
    char *end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (text.empty() || end != text.c_str() + text.size() || !std::isfinite(v)) {
        throw ArgumentError("invalid number '" + text + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> out;
    size_t start = 0;
    while (true) {
        size_t at = text.find(sep, start);
        out.push_back(text.substr(start, at - start));
        if (at == std::string::npos) {
            return out;
        }
        start = at + 1;
    }
}

std::string strip(const std::string &text) {
    size_t a = text.find_first_not_of(" \t");
    size_t b = text.find_last_not_of(" \t");
    return a == std::string::npos ? "" : text.substr(a, b - a + 1);
}

}  // namespace

double round_for_output(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return std::strtod(buf, nullptr);
}

SectorAmplitudes parse_amplitudes(const std::string &text) {
    std::vector<std::string> parts = split(text, ',');
    if (parts.size() != 4) {
        throw ArgumentError("--amplitudes needs four comma-separated entries a00,a01,a10,a11");
    }
    SectorAmplitudes out;
    for (size_t i = 0; i < 4; i++) {
        std::vector<std::string> re_im = split(strip(parts[i]), ':');
        if (re_im.size() > 2) {
            throw ArgumentError("amplitude '" + parts[i] + "' must be 're' or 're:im'");
        }
        double re = parse_real(strip(re_im[0]));
        double im = re_im.size() == 2 ? parse_real(strip(re_im[1])) : 0.0;
        out.a[i] = Amplitude(re, im);
    }
    return out;
}

std::vector<std::pair<size_t, size_t>> parse_sizes(const std::string &text) {
    std::vector<std::pair<size_t, size_t>> out;
    if (strip(text).empty()) {
        return out;
    }
    for (const std::string &item : split(text, ',')) {
        std::vector<std::string> ab = split(strip(item), 'x');
        if (ab.size() != 2) {
            throw ArgumentError("rectangle size '" + item + "' must look like AxB");
        }
        out.emplace_back(parse_size(strip(ab[0]), "rectangle size"), parse_size(strip(ab[1]), "rectangle size"));
    }
    return out;
}

int run(const Command &c, std::ostream &out) {
    try {
        return dispatch(c, out);
    } catch (const ParseError &e) {
        return emit_error(out, "parse_error", e.what(), kExitArgumentError);
    } catch (const ValidationError &e) {
        return emit_error(out, "validation_error", e.what(), kExitArgumentError);
    } catch (const ArgumentError &e) {
        return emit_error(out, "argument_error", e.what(), kExitArgumentError);
    } catch (const UnsupportedOperationError &e) {
        return emit_error(out, "unsupported_operation", e.what(), kExitArgumentError);
    } catch (const ResourceLimitError &e) {
        return emit_error(out, "resource_limit", e.what(), kExitResourceLimit);
    } catch (const std::bad_alloc &) {
        return emit_error(out, "resource_limit", "out of memory", kExitResourceLimit);
    } catch (const StructuralError &e) {
        return emit_error(out, "structural_error", e.what(), kExitArgumentError);
    }
}

int run_cli(const std::vector<std::string> &args, std::ostream &out) {
    CLI::App app{"Exact ground-state entanglement entropy for the toric code"};
    app.require_subcommand(1);

    Command command;
    std::optional<size_t> torus;
    std::string surface_path;
    std::string amplitudes;
    std::string sizes;
    std::string format;

    struct VerbSpec {
        const char *name;
        const char *help;
        Verb verb;
        bool region;
    };
    const VerbSpec verbs[] = {
        {"info", "surface counts, genus and degeneracy", Verb::kInfo, false},
        {"entropy", "exact entropy of a region (GF(2) ranks)", Verb::kEntropy, true},
        {"sweep", "entropy of rectangles anchored at face (0,0)", Verb::kSweep, false},
        {"oracle", "brute-force reduced spectrum, compared with the engine", Verb::kOracle, true},
        {"verify", "run the surface and ground-state invariant suite", Verb::kVerify, false},
        {"degeneracy", "ground-state degeneracy", Verb::kDegeneracy, false},
    };
    std::vector<std::pair<CLI::App *, Verb>> subs;
    for (const auto &v : verbs) {
        CLI::App *sub = app.add_subcommand(v.name, v.help);
        auto *t = sub->add_option("--torus", torus, "k x k square torus (k >= 2)");
        auto *f = sub->add_option("--surface", surface_path, "surface document (JSON)");
        t->excludes(f);
        f->excludes(t);
        if (v.region) {
            sub->add_option("--region", command.region_spec, "region spec, e.g. rect:0,0,2,2")->required();
        }
        if (v.verb == Verb::kOracle) {
            sub->add_option("--amplitudes", amplitudes, "a00,a01,a10,a11 with entries re or re:im");
        }
        if (v.verb == Verb::kSweep) {
            sub->add_option("--sizes", sizes, "rectangle sizes, e.g. 1x1,2x2,3x3");
        }
        if (v.verb == Verb::kOracle || v.verb == Verb::kVerify) {
            sub->add_option("--max-group-bits", command.limits.max_group_bits, "largest log2 group order to enumerate");
            sub->add_option("--max-gram-dim", command.limits.max_gram_dim, "largest dense eigensolve");
        }
        sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        subs.emplace_back(sub, v.verb);
    }

    std::vector<std::string> argv_storage{"toric_entropy"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_storage) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        CLI::App *target = &app;
        for (auto &[sub, verb] : subs) {
            if (sub->parsed()) {
                target = sub;
            }
        }
        out << target->help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        return emit_error(out, "argument_error", e.what(), kExitArgumentError);
    }

    for (auto &[sub, verb] : subs) {
        if (sub->parsed()) {
            command.verb = verb;
        }
    }
    try {
        if (torus) {
            command.surface = TorusSource{*torus};
        } else if (!surface_path.empty()) {
            command.surface = FileSource{surface_path};
        } else {
            throw ArgumentError("one of --torus or --surface is required");
        }
        if (!amplitudes.empty()) {
            command.amplitudes = parse_amplitudes(amplitudes);
        }
        command.sizes = parse_sizes(sizes);
        if (!format.empty()) {
            command.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;
        }
    } catch (const ArgumentError &e) {
        return emit_error(out, "argument_error", e.what(), kExitArgumentError);
    }
    return run(command, out);
}

}  // namespace toric
