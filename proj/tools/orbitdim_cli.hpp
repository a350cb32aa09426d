// Copyright 2026 The orbitdim Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "orbitdim/orbitdim.hpp"

namespace orbitdim::cli {

enum ExitCode : int { Ok = 0, Mismatch = 1, ParseFailure = 2, UnknownState = 3 };

struct GlobalFlags {
    std::uint64_t seed = 0;
    int trials = 5;
    long ilo_range = 9;
    bool float_check = false;
    bool json = false;
    bool tsv = false;

    SamplingOptions sampling() const { return {trials, ilo_range, seed}; }
    RankOptions rank() const { return {float_check, {}, nullptr}; }
};

struct SourceFlags {
    std::string name;
    std::string file;
};

/// Everything printed for one state. Integers are copied straight from the
/// library results.
struct ReportRow {
    std::string label;
    PureKet ket;
    ClassDimensions dims;
    int w1 = 0;
    std::vector<OrbitReport> groups;
    std::vector<GroupKind> shown;
    std::optional<ClassTriple> expected;
    std::optional<KetDimPair> expected_ket_dims;

    std::vector<OrbitReport> shown_groups() const {
        std::vector<OrbitReport> out;
        for (const auto& r : groups)
            if (std::find(shown.begin(), shown.end(), r.group) != shown.end()) out.push_back(r);
        return out;
    }

    const OrbitReport* group(GroupKind g) const {
        for (const auto& r : groups)
            if (r.group == g) return &r;
        return nullptr;
    }

    /// Null when there is nothing to compare against.
    std::optional<bool> matches() const {
        if (!expected && !expected_ket_dims) return std::nullopt;
        bool ok = true;
        if (expected) ok = ok && *expected == ClassTriple{dims.d1, dims.d2, dims.d3};
        if (expected_ket_dims) {
            const auto* gl = group(GroupKind::GL);
            const auto* sl = group(GroupKind::SL);
            ok = ok && gl && sl && expected_ket_dims->gl == gl->ket_dim && expected_ket_dims->sl == sl->ket_dim;
        }
        return ok;
    }
};

inline ReportRow compute_row(const NamedState& state, const std::vector<GroupKind>& groups, const GlobalFlags& flags) {
    const auto rank = flags.rank();
    ReportRow row{state.name, state.ket, class_dimensions(state.ket, flags.sampling(), rank), 0, {}, groups,
                  state.expected, state.expected_ket_dims};
    std::vector<GroupKind> wanted = groups;
    for (auto g : {GroupKind::GL, GroupKind::SL})
        if (std::find(wanted.begin(), wanted.end(), g) == wanted.end()) wanted.push_back(g);
    for (auto g : all_groups)
        if (std::find(wanted.begin(), wanted.end(), g) != wanted.end())
            row.groups.push_back(orbit_report(state.ket, g, rank));
    row.w1 = row.group(GroupKind::GL)->ket_dim - row.group(GroupKind::SL)->ket_dim;
    return row;
}

inline std::string status_of(const ReportRow& row) {
    const auto m = row.matches();
    if (!m) return "prediction";
    return *m ? "PASS" : "FAIL";
}

inline nlohmann::json row_json(const ReportRow& row) {
    nlohmann::json groups = nlohmann::json::object();
    for (const auto& g : row.shown_groups())
        groups[std::string(to_string(g.group))] = {{"ket_dim", g.ket_dim}, {"state_dim", g.state_dim}};
    nlohmann::json j = {
        {"label", row.label},
        {"n", row.ket.qubits()},
        {"representative", format_ket(row.ket)},
        {"state", serialize_state(row.ket)},
        {"D1", row.dims.d1},
        {"D2", row.dims.d2},
        {"D3", row.dims.d3},
        {"W1", row.w1},
        {"D2_label", std::string(d2_ladder_label(row.ket.qubits(), row.dims.d2))},
        {"groups", groups},
        {"trial_values", row.dims.trial_values},
        {"trials", row.dims.trials_used},
        {"seed", row.dims.seed},
        {"trial_disagreement", row.dims.disagreement},
        {"status", status_of(row)},
    };
    if (row.expected)
        j["expected"] = {{"D1", row.expected->d1}, {"D2", row.expected->d2}, {"D3", row.expected->d3}};
    else
        j["expected"] = nullptr;
    return j;
}

inline std::string join(const std::vector<int>& values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? std::string(1, sep) : "") + std::to_string(values[i]);
    return out;
}

inline void print_table(std::ostream& out, const std::vector<ReportRow>& rows, const GlobalFlags& flags) {
    if (flags.json) {
        nlohmann::json arr = nlohmann::json::array();
        bool all = true;
        for (const auto& r : rows) {
            arr.push_back(row_json(r));
            all = all && r.matches().value_or(true);
        }
        out << nlohmann::json{{"seed", flags.seed}, {"trials", flags.trials}, {"ilo_range", flags.ilo_range},
                               {"rows", arr}, {"all_pass", all}}
                   .dump(2)
            << '\n';
        return;
    }
    if (flags.tsv) {
        out << "label\trepresentative\tD1\tD2\tD3\texp_D1\texp_D2\texp_D3\tW1\tket_GL\tket_SL\tstatus\n";
        for (const auto& r : rows) {
            out << r.label << '\t' << format_ket(r.ket) << '\t' << r.dims.d1 << '\t' << r.dims.d2 << '\t' << r.dims.d3;
            if (r.expected) out << '\t' << r.expected->d1 << '\t' << r.expected->d2 << '\t' << r.expected->d3;
            else out << "\t-\t-\t-";
            out << '\t' << r.w1 << '\t' << r.group(GroupKind::GL)->ket_dim << '\t' << r.group(GroupKind::SL)->ket_dim
                << '\t' << status_of(r) << '\n';
        }
        return;
    }
    std::size_t label_w = 5, rep_w = 14;
    for (const auto& r : rows) {
        label_w = std::max(label_w, r.label.size());
        rep_w = std::max(rep_w, format_ket(r.ket).size());
    }
    auto expected_cell = [](const ReportRow& r) {
        if (!r.expected) return std::string("-");
        return std::to_string(r.expected->d1) + "/" + std::to_string(r.expected->d2) + "/" +
               std::to_string(r.expected->d3);
    };
    out << std::left << std::setw(static_cast<int>(label_w)) << "class" << "  " << std::setw(static_cast<int>(rep_w))
        << "representative" << "  " << std::right << std::setw(3) << "D1" << ' ' << std::setw(3) << "D2" << ' '
        << std::setw(3) << "D3" << "  " << std::setw(9) << "expected" << "  " << std::setw(2) << "W1" << "  "
        << "status\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(static_cast<int>(label_w)) << r.label << "  " << std::setw(static_cast<int>(rep_w))
            << format_ket(r.ket) << "  " << std::right << std::setw(3) << r.dims.d1 << ' ' << std::setw(3) << r.dims.d2
            << ' ' << std::setw(3) << r.dims.d3 << "  " << std::setw(9) << expected_cell(r) << "  " << std::setw(2)
            << r.w1 << "  " << status_of(r) << (r.dims.disagreement ? "  (trials disagree)" : "") << '\n';
    }
}

inline void print_dims(std::ostream& out, const ReportRow& row, const GlobalFlags& flags) {
    if (flags.json) {
        out << row_json(row).dump(2) << '\n';
        return;
    }
    if (flags.tsv) {
        out << "label\tgroup\tket_dim\tstate_dim\n";
        for (const auto& g : row.shown_groups())
            out << row.label << '\t' << to_string(g.group) << '\t' << g.ket_dim << '\t' << g.state_dim << '\n';
        out << "label\tD1\tD2\tD3\tW1\n"
            << row.label << '\t' << row.dims.d1 << '\t' << row.dims.d2 << '\t' << row.dims.d3 << '\t' << row.w1 << '\n';
        return;
    }
    out << "state  " << row.label << "  (n=" << row.ket.qubits() << ")  " << format_ket(row.ket) << '\n';
    out << "group  ket_dim  state_dim\n";
    for (const auto& g : row.shown_groups())
        out << std::left << std::setw(5) << to_string(g.group) << "  " << std::right << std::setw(7) << g.ket_dim
            << "  " << std::setw(9) << g.state_dim << '\n';
    out << "D1=" << row.dims.d1 << " D2=" << row.dims.d2 << " D3=" << row.dims.d3 << " W1=" << row.w1 << '\n';
    out << "trials=" << row.dims.trials_used << " seed=" << row.dims.seed << " values=" << join(row.dims.trial_values, ',')
        << (row.dims.disagreement ? "  warning: trials disagree" : "") << '\n';
    if (row.expected)
        out << "expected D1=" << row.expected->d1 << " D2=" << row.expected->d2 << " D3=" << row.expected->d3 << "  "
            << status_of(row) << '\n';
}

inline NamedState load_source(const SourceFlags& src) {
    if (!src.name.empty()) return corpus(src.name);
    std::ifstream in(src.file);
    if (!in) throw Error(ErrorCode::BadDocument, "cannot open '" + src.file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return {src.file, parse_state(buf.str()), std::nullopt, std::nullopt};
}

inline int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::UnknownName: return UnknownState;
    case ErrorCode::RankMismatch:
    case ErrorCode::AmbiguousRank: return Mismatch;
    default: return ParseFailure;
    }
}

/// Reference D1 of a generic ket for the qubit counts with known values.
inline std::optional<int> generic_reference(std::size_t n) {
    switch (n) {
    case 1: return 2;
    case 2: return 6;
    case 3: return 14;
    case 4: return 24;
    default: return std::nullopt;
    }
}

inline constexpr std::size_t generic_ceiling = 12;

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Orbit dimensions and SLOCC class dimensions of multi-qubit pure states", "orbitdim"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_option("--seed", flags.seed, "Master seed for random local operators");
    app.add_option("--trials", flags.trials, "Random ILO trials per state")->check(CLI::PositiveNumber);
    app.add_option("--ilo-range", flags.ilo_range, "Entries a+bi with |a|,|b| <= range")->check(CLI::PositiveNumber);
    app.add_flag("--float-check", flags.float_check, "Cross-check every exact rank against the SVD rank");
    auto* json_flag = app.add_flag("--json", flags.json, "JSON output");
    app.add_flag("--tsv", flags.tsv, "Tab-separated output")->excludes(json_flag);

    auto add_source = [](CLI::App* cmd, SourceFlags& src) {
        auto* name = cmd->add_option("--name", src.name, "Corpus state (e.g. GHZ3, chi4, A-W, W7)");
        auto* file = cmd->add_option("--file", src.file, "State file (JSON)");
        name->excludes(file);
        file->excludes(name);
        cmd->callback([name, file] {
            if (name->count() == 0 && file->count() == 0) throw CLI::RequiredError("--name or --file");
        });
    };

    SourceFlags dims_src;
    std::vector<std::string> dims_groups;
    auto* dims = app.add_subcommand("dims", "Orbit dimensions, D1/D2/D3 and W1 of one state");
    add_source(dims, dims_src);
    dims->add_option("--group", dims_groups, "Restrict to GL, SL, U2 or SU2 (repeatable)");

    SourceFlags witness_src;
    auto* witness = app.add_subcommand("witness", "W1 and the D2 separability label of one state");
    add_source(witness, witness_src);

    std::size_t table_n = 0;
    auto* table = app.add_subcommand("table", "Reproduce the class table for n qubits");
    table->add_option("n", table_n, "Qubit count")->required()->check(CLI::Range(1, 24));

    std::size_t generic_n = 0;
    auto* generic = app.add_subcommand("generic", "D1 of a randomly drawn ket");
    generic->add_option("n", generic_n, "Qubit count")->required()->check(CLI::Range(std::size_t{1}, generic_ceiling));

    SourceFlags dump_src;
    std::string dump_group = "GL";
    auto* dump = app.add_subcommand("dump-tangent", "Print the tangent matrix as TSV");
    add_source(dump, dump_src);
    dump->add_option("--group", dump_group, "GL, SL, U2 or SU2");

    std::vector<std::string> argv_store{"orbitdim"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Ok : ParseFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }

    try {
        if (dims->parsed() || witness->parsed()) {
            std::vector<GroupKind> groups;
            for (const auto& g : dims_groups) groups.push_back(parse_group(g));
            if (groups.empty()) groups.assign(all_groups.begin(), all_groups.end());
            const auto state = load_source(dims->parsed() ? dims_src : witness_src);
            const auto row = compute_row(state, groups, flags);
            if (dims->parsed()) {
                print_dims(out, row, flags);
            } else if (flags.json) {
                out << nlohmann::json{{"label", row.label}, {"W1", row.w1}, {"D2", row.dims.d2},
                                      {"D2_label", std::string(d2_ladder_label(row.ket.qubits(), row.dims.d2))}}
                           .dump(2)
                    << '\n';
            } else {
                out << "W1=" << row.w1 << " D2=" << row.dims.d2 << " ("
                    << d2_ladder_label(row.ket.qubits(), row.dims.d2) << ")\n";
            }
            return Ok;
        }

        if (table->parsed()) {
            std::vector<NamedState> states = corpus_table(table_n);
            if (states.empty()) {
                states.push_back(corpus("GHZ" + std::to_string(table_n)));
                states.push_back(corpus("W" + std::to_string(table_n)));
            }
            std::vector<std::future<ReportRow>> pending;
            for (const auto& s : states)
                pending.push_back(std::async(std::launch::async, [&s, &flags] {
                    return compute_row(s, {GroupKind::GL, GroupKind::SL}, flags);
                }));
            std::vector<ReportRow> rows;
            for (auto& f : pending) rows.push_back(f.get());
            print_table(out, rows, flags);
            bool all = true;
            for (const auto& r : rows) all = all && r.matches().value_or(true);
            return all ? Ok : Mismatch;
        }

        if (generic->parsed()) {
            Rng rng(flags.seed);
            const auto sample = sample_generic(generic_n, rng, flags.ilo_range, flags.rank());
            const auto ref = generic_reference(generic_n);
            if (flags.json) {
                nlohmann::json j = {{"n", generic_n}, {"seed", flags.seed}, {"D1", sample.d1},
                                    {"nonzero_terms", sample.ket.nonzero_terms()},
                                    {"state", serialize_state(sample.ket)},
                                    {"status", ref ? (*ref == sample.d1 ? "PASS" : "FAIL") : "prediction"}};
                j["reference"] = ref ? nlohmann::json(*ref) : nlohmann::json(nullptr);
                out << j.dump(2) << '\n';
            } else {
                out << "n=" << generic_n << " seed=" << flags.seed << " nonzero_terms=" << sample.ket.nonzero_terms()
                    << '\n';
                if (generic_n <= 3) out << "ket " << format_ket(sample.ket) << '\n';
                out << "D1=" << sample.d1;
                if (ref) out << "  reference=" << *ref << (*ref == sample.d1 ? "  PASS" : "  FAIL");
                else out << "  prediction";
                out << '\n';
            }
            return Ok;
        }

        if (dump->parsed()) {
            const auto state = load_source(dump_src);
            const auto tm = tangent_matrix(state.ket, parse_group(dump_group));
            write_tangent_tsv(out, tm);
            if (flags.float_check) certified_rank(tm.matrix, flags.rank());
            return Ok;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return Ok;
}

} // namespace orbitdim::cli
