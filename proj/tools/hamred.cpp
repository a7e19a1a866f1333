// Copyright 2026 The hamred Authors
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

// Command-line front end. Producing commands write the artifact to -o (or
// stdout) and the run report to --report (or stderr); checking commands
// write the report to stdout. Exit codes: 0 every check holds, 1 a check
// fails, 2 undetermined, 3 usage or schema error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hamred/hamred.h"

namespace {

using json = nlohmann::json;

constexpr int kUsage = 3;

// Thrown after a library call fails; carries the exit code.
struct Failure {
    int code;
};

void check(hamred_status s) {
    if (s == HAMRED_OK) return;
    std::cerr << "error: " << hamred_status_name(s) << ": " << hamred_last_error() << '\n';
    throw Failure{hamred_status_exit_code(s)};
}

struct ArtifactHandle {
    hamred_artifact *p = nullptr;
    ArtifactHandle() = default;
    ArtifactHandle(const ArtifactHandle &) = delete;
    ArtifactHandle(ArtifactHandle &&o) noexcept : p(o.p) { o.p = nullptr; }
    ArtifactHandle &operator=(ArtifactHandle &&o) noexcept {
        std::swap(p, o.p);
        return *this;
    }
    ~ArtifactHandle() { hamred_artifact_free(p); }
};

struct ReportHandle {
    hamred_report *p = nullptr;
    ReportHandle() = default;
    ReportHandle(const ReportHandle &) = delete;
    ~ReportHandle() { hamred_report_free(p); }
};

ArtifactHandle load(const std::string &path) {
    ArtifactHandle a;
    if (path == "-") {
        std::ostringstream text;
        text << std::cin.rdbuf();
        check(hamred_artifact_parse(text.str().c_str(), &a.p));
    } else {
        check(hamred_artifact_load(path.c_str(), &a.p));
    }
    return a;
}

std::string take(char *s) {
    std::string out(s);
    hamred_string_free(s);
    return out;
}

void write_text(const std::string &path, const std::string &text, std::ostream &fallback) {
    if (path.empty() || path == "-") {
        fallback << text << '\n';
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f || !(f << text << '\n')) {
        std::cerr << "error: cannot write " << path << '\n';
        throw Failure{kUsage};
    }
}

std::string report_text(const ReportHandle &r) {
    char *s = nullptr;
    check(hamred_report_to_json(r.p, &s));
    return take(s);
}

// Producing commands: artifact to -o or stdout, report to --report or stderr.
int emit(const ArtifactHandle &a, const ReportHandle &r, const std::string &out, const std::string &report) {
    char *s = nullptr;
    check(hamred_artifact_to_json(a.p, &s));
    write_text(out, take(s), std::cout);
    write_text(report, report_text(r), std::cerr);
    return hamred_report_exit_code(r.p);
}

// Checking commands: report to --report or stdout.
int emit(const ReportHandle &r, const std::string &report) {
    write_text(report, report_text(r), std::cout);
    return hamred_report_exit_code(r.p);
}

std::vector<int> parse_indices(const std::string &text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception &) {
            std::cerr << "error: '" << item << "' is not a term index\n";
            throw Failure{kUsage};
        }
    }
    return out;
}

template <class T>
void put(json &o, const char *key, const std::optional<T> &v) {
    if (v) o[key] = *v;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Local Hamiltonian reductions: compile verifier circuits, run reductions, certify spectra"};
    app.require_subcommand(1);
    std::optional<std::size_t> dim_cap;
    app.add_option("--dim-cap", dim_cap, "Largest dense dimension (overrides HAMRED_DIM_CAP)");

    std::string out, report;
    auto add_output = [&](CLI::App *c, bool produces) {
        if (produces) c->add_option("-o,--output", out, "Artifact file (default stdout)");
        c->add_option("--report", report, "Report file (default " + std::string(produces ? "stderr" : "stdout") + ")");
    };

    // toy
    std::string toy_name;
    int toy_n = 1;
    CLI::App *toy = app.add_subcommand("toy", "Write a built-in toy circuit");
    toy->add_option("name", toy_name, std::string("One of: ") + hamred_toy_names())->required();
    toy->add_option("--n", toy_n, "Input width for the sized families");
    toy->add_option("-o,--output", out, "Circuit file (default stdout)");

    // compile
    std::string input, clock = "legal";
    CLI::App *compile = app.add_subcommand("compile", "Compile a circuit into its clock Hamiltonian");
    compile->add_option("circuit", input, "Circuit file, or - for stdin")->required();
    compile->add_option("--clock", clock, "Clock encoding")->check(CLI::IsMember({"legal", "unary"}));
    add_output(compile, true);

    // reduce
    std::string kind;
    std::vector<std::string> inputs;
    std::optional<double> delta, epsilon, max_delta, slack;
    std::optional<int> g, g_prime, t;
    std::optional<std::uint64_t> seed;
    std::string mode = "basic";
    CLI::App *reduce = app.add_subcommand("reduce", "Run one reduction step");
    reduce->add_option("kind", kind, "qmw, qmsa, qssc, qirr, lh, lh-hw or amplify")
        ->required()
        ->check(CLI::IsMember({"qmw", "qmsa", "qssc", "qirr", "lh", "lh-hw", "amplify"}));
    reduce->add_option("inputs", inputs, "Input files (circuit [tree], qmw, qssc)")->required();
    reduce->add_option("--delta", delta, "Penalty strength (default: smallest certified power of two)");
    reduce->add_option("--max-delta", max_delta, "Give up the automatic penalty search beyond this value");
    reduce->add_option("--epsilon", epsilon, "Completeness error of the verifier");
    reduce->add_option("--clock", clock, "Clock encoding")->check(CLI::IsMember({"legal", "unary"}));
    reduce->add_option("--mode", mode, "QIRR construction")->check(CLI::IsMember({"basic", "improved"}));
    reduce->add_option("--g", g, "YES weight threshold (direct qmw/qmsa wrap without a tree)");
    reduce->add_option("--g-prime", g_prime, "NO weight threshold (direct qmw/qmsa wrap without a tree)");
    reduce->add_option("--t", t, "Composition depth for amplify");
    reduce->add_option("--seed", seed, "Seed recorded in the report");
    reduce->add_option("--slack", slack, "Eigenvalue comparison slack");
    add_output(reduce, true);

    // verify
    std::optional<std::string> subset, cover;
    bool brute_force = false;
    std::optional<int> max_size, k;
    std::optional<double> eps;
    std::optional<std::uint64_t> cap, sample_seed;
    CLI::App *verify = app.add_subcommand("verify", "Check an artifact and report verdicts");
    verify->add_option("instance", input, "Artifact file, or - for stdin")->required();
    verify->add_option("--subset", subset, "Comma-separated 0-based term indices");
    verify->add_option("--cover", cover, "QSSC cover indices, mapped to the QIRR subset");
    verify->add_flag("--brute-force", brute_force, "Enumerate every small QSSC subset");
    verify->add_option("--max-size", max_size, "Largest subset size for --brute-force (default g')");
    verify->add_option("--slack", slack, "Eigenvalue comparison slack");
    verify->add_option("--k", k, "Disperser subset size");
    verify->add_option("--eps", eps, "Disperser error");
    verify->add_option("--cap", cap, "Enumeration cap");
    verify->add_option("--sample-seed", sample_seed, "Sample subsets beyond the cap with this seed");
    add_output(verify, false);

    // spectrum
    std::optional<int> propagation;
    int k_lowest = 6;
    CLI::App *spectrum = app.add_subcommand("spectrum", "List the lowest eigenvalues");
    spectrum->add_option("file", input, "Operator, operator sum, Hamiltonian or instance file");
    spectrum->add_option("--k", k_lowest, "How many of the lowest eigenvalues");
    spectrum->add_option("--subset", subset, "Term subset for qssc and qirr instances");
    spectrum->add_option("--propagation", propagation, "Check the clock propagation operator of this length");
    add_output(spectrum, false);

    // disperser
    CLI::App *disperser = app.add_subcommand("disperser", "Find or verify dispersers");
    disperser->require_subcommand(1);
    std::optional<int> left, depth, right, degree, attempts;
    CLI::App *find = disperser->add_subcommand("find", "Seeded random search");
    find->add_option("--left", left, "Left vertex count");
    find->add_option("--depth", depth, "Tree depth; writes an encoding tree with 2^(depth+1)-1 vertices");
    find->add_option("--right", right, "Right vertex count")->required();
    find->add_option("--degree", degree, "Left degree")->required();
    find->add_option("--k", k, "Subset size parameter")->required();
    find->add_option("--eps", eps, "Error");
    find->add_option("--seed", seed, "Search seed");
    find->add_option("--attempts", attempts, "Candidate graphs before giving up");
    add_output(find, true);
    CLI::App *dverify = disperser->add_subcommand("verify", "Check the disperser property");
    dverify->add_option("graph", input, "Graph or tree file")->required();
    dverify->add_option("--k", k, "Subset size parameter")->required();
    dverify->add_option("--eps", eps, "Error");
    dverify->add_option("--cap", cap, "Enumeration cap");
    dverify->add_option("--sample-seed", sample_seed, "Sample beyond the cap with this seed");
    add_output(dverify, false);

    // lemma
    std::string lemma_kind, first, second;
    std::optional<double> null_tol;
    CLI::App *lemma = app.add_subcommand("lemma", "Check the geometric or projection bound on two operators");
    lemma->add_option("kind", lemma_kind, "geometric or projection")
        ->required()
        ->check(CLI::IsMember({"geometric", "projection"}));
    lemma->add_option("first", first, "First operator file")->required();
    lemma->add_option("second", second, "Second operator file")->required();
    lemma->add_option("--null-tol", null_tol, "Null-space cut");
    lemma->add_option("--slack", slack, "Comparison slack");
    add_output(lemma, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (dim_cap) hamred_set_dim_cap(*dim_cap);

        if (toy->parsed()) {
            ArtifactHandle a;
            check(hamred_toy(toy_name.c_str(), toy_n, &a.p));
            char *s = nullptr;
            check(hamred_artifact_to_json(a.p, &s));
            write_text(out, take(s), std::cout);
            return 0;
        }
        if (compile->parsed()) {
            const ArtifactHandle c = load(input);
            ArtifactHandle a;
            ReportHandle r;
            const std::string opts = json{{"clock", clock}}.dump();
            check(hamred_compile(c.p, opts.c_str(), &a.p, &r.p));
            return emit(a, r, out, report);
        }
        if (reduce->parsed()) {
            std::vector<ArtifactHandle> loaded;
            std::vector<const hamred_artifact *> ptrs;
            for (const std::string &path : inputs) {
                loaded.push_back(load(path));
                ptrs.push_back(loaded.back().p);
            }
            json o = {{"clock", clock}, {"mode", mode}};
            put(o, "delta", delta);
            put(o, "max_delta", max_delta);
            put(o, "epsilon", epsilon);
            put(o, "g", g);
            put(o, "g_prime", g_prime);
            put(o, "t", t);
            put(o, "seed", seed);
            put(o, "slack", slack);
            const std::string opts = o.dump();
            ArtifactHandle a;
            ReportHandle r;
            check(hamred_reduce(kind.c_str(), ptrs.data(), ptrs.size(), opts.c_str(), &a.p, &r.p));
            return emit(a, r, out, report);
        }
        if (verify->parsed()) {
            const ArtifactHandle a = load(input);
            json o = json::object();
            if (subset) o["subset"] = parse_indices(*subset);
            if (cover) o["cover"] = parse_indices(*cover);
            if (brute_force) o["brute_force"] = true;
            put(o, "max_size", max_size);
            put(o, "slack", slack);
            put(o, "k", k);
            put(o, "eps", eps);
            put(o, "cap", cap);
            put(o, "sample_seed", sample_seed);
            const std::string opts = o.dump();
            ReportHandle r;
            check(hamred_verify(a.p, opts.c_str(), &r.p));
            return emit(r, report);
        }
        if (spectrum->parsed()) {
            json o = {{"k", k_lowest}};
            put(o, "propagation", propagation);
            if (subset) o["subset"] = parse_indices(*subset);
            ArtifactHandle a;
            if (!input.empty()) a = load(input);
            const std::string opts = o.dump();
            ReportHandle r;
            check(hamred_spectrum(a.p, opts.c_str(), &r.p));
            return emit(r, report);
        }
        if (find->parsed()) {
            json o = json::object();
            put(o, "left", left);
            put(o, "depth", depth);
            put(o, "right", right);
            put(o, "degree", degree);
            put(o, "k", k);
            put(o, "eps", eps);
            put(o, "seed", seed);
            put(o, "attempts", attempts);
            const std::string opts = o.dump();
            ArtifactHandle a;
            ReportHandle r;
            check(hamred_disperser_find(opts.c_str(), &a.p, &r.p));
            return emit(a, r, out, report);
        }
        if (dverify->parsed()) {
            const ArtifactHandle a = load(input);
            json o = json::object();
            put(o, "k", k);
            put(o, "eps", eps);
            put(o, "cap", cap);
            put(o, "sample_seed", sample_seed);
            const std::string opts = o.dump();
            ReportHandle r;
            check(hamred_disperser_verify(a.p, opts.c_str(), &r.p));
            return emit(r, report);
        }
        if (lemma->parsed()) {
            const ArtifactHandle a = load(first);
            const ArtifactHandle b = load(second);
            json o = json::object();
            put(o, "null_tol", null_tol);
            put(o, "slack", slack);
            const std::string opts = o.dump();
            ReportHandle r;
            check(hamred_lemma(lemma_kind.c_str(), a.p, b.p, opts.c_str(), &r.p));
            return emit(r, report);
        }
    } catch (const Failure &f) {
        return f.code;
    }
    return kUsage;
}
