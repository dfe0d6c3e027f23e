// Copyright 2026 The hypersre Authors
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

#include "hypersre/cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hypersre/chain.h"
#include "hypersre/errors.h"
#include "hypersre/hypergraph.h"
#include "hypersre/sre.h"
#include "json.hpp"

namespace hypersre::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    std::string lattice;
    std::optional<size_t> n;
    std::optional<size_t> l;
    std::string input;
    std::vector<std::string> alphas;
    uint64_t samples = 256;
    uint64_t seed = 0;
    std::string format = "json";
    unsigned threads = 0;
    size_t max_n = kDefaultEnumerationCap;
    bool deterministic = false;
    bool fit = false;
    size_t n_lo = 150;
    size_t n_hi = 200;
    size_t from = 0;
    size_t to = 0;
};

EnumerationOptions enumeration(const Config &cfg) {
    EnumerationOptions e;
    e.max_qubits = cfg.max_n;
    e.threads = cfg.threads;
    return e;
}

Alpha single_alpha(const Config &cfg) {
    if (cfg.alphas.size() != 1) {
        throw InputError("alpha: expected exactly one value");
    }
    return Alpha::parse(cfg.alphas[0]);
}

Hypergraph3 build_lattice(const std::string &kind, size_t size) {
    try {
        if (kind == "chain") {
            return chain(size);
        }
        if (kind == "union-jack") {
            return union_jack(size);
        }
        return triangular(size);
    } catch (const ContractViolation &e) {
        throw InputError(std::string(kind == "chain" ? "n" : "l") + ": " + e.what());
    }
}

Hypergraph3 load_input(const Config &cfg) {
    if (!cfg.input.empty()) {
        std::ifstream in(cfg.input);
        if (!in) {
            throw InputError("input: cannot open " + cfg.input);
        }
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception &e) {
            throw InputError("input: malformed JSON in " + cfg.input + ": " + e.what());
        }
        try {
            return hypergraph_from_json(j);
        } catch (const std::invalid_argument &e) {
            throw InputError("input: " + std::string(e.what()));
        }
    }
    if (cfg.lattice.empty()) {
        throw InputError("input: one of --input or --lattice is required");
    }
    if (cfg.lattice == "chain") {
        if (!cfg.n) {
            throw InputError("n: --n is required for --lattice chain");
        }
        if (cfg.l) {
            throw InputError("l: --l does not apply to --lattice chain");
        }
        return build_lattice(cfg.lattice, *cfg.n);
    }
    if (!cfg.l) {
        throw InputError("l: --l is required for --lattice " + cfg.lattice);
    }
    if (cfg.n) {
        throw InputError("n: --n does not apply to --lattice " + cfg.lattice);
    }
    return build_lattice(cfg.lattice, *cfg.l);
}

std::string rational_string(const Rational &r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

void put_moment(Json &j, const PlMoment &m) {
    if (m.exact) {
        j["pl_moment"] = m.exact->fraction_string();
        j["pl_moment_decimal"] = m.exact->decimal_string();
    }
    j["pl_moment_value"] = m.value;
}

std::string csv_cell(const Json &v) {
    if (v.is_null()) {
        return "";
    }
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s.find_first_of(",\"\n") == std::string::npos) {
            return s;
        }
        std::string quoted = "\"";
        for (char c : s) {
            quoted += c;
            if (c == '"') {
                quoted += '"';
            }
        }
        return quoted + "\"";
    }
    return v.dump();
}

void write_csv(const std::vector<Json> &rows, std::ostream &out) {
    std::vector<std::string> columns;
    for (const auto &row : rows) {
        for (const auto &item : row.items()) {
            if (std::find(columns.begin(), columns.end(), item.key()) == columns.end()) {
                columns.push_back(item.key());
            }
        }
    }
    for (size_t c = 0; c < columns.size(); c++) {
        out << (c ? "," : "") << columns[c];
    }
    out << "\n";
    for (const auto &row : rows) {
        for (size_t c = 0; c < columns.size(); c++) {
            out << (c ? "," : "");
            if (row.contains(columns[c])) {
                out << csv_cell(row[columns[c]]);
            }
        }
        out << "\n";
    }
}

class Reporter {
   public:
    Reporter(const Config &cfg, std::ostream &out) : cfg_(cfg), out_(out), start_(std::chrono::steady_clock::now()) {
    }

    void timing(Json &j) const {
        if (!cfg_.deterministic) {
            j["elapsed_seconds"] =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        }
    }

    // One flat record.
    void record(Json j) const {
        timing(j);
        if (cfg_.format == "csv") {
            write_csv({j}, out_);
        } else {
            out_ << j.dump(2) << "\n";
        }
    }

    // A header object plus a list of rows; CSV keeps only the rows.
    void table(Json header, const std::string &key, const std::vector<Json> &rows) const {
        if (cfg_.format == "csv") {
            write_csv(rows, out_);
            return;
        }
        header[key] = rows;
        timing(header);
        out_ << header.dump(2) << "\n";
    }

   private:
    const Config &cfg_;
    std::ostream &out_;
    std::chrono::steady_clock::time_point start_;
};

int cmd_lattice(const Config &cfg, std::ostream &out) {
    if (cfg.format != "json") {
        throw InputError("format: lattice output is JSON only");
    }
    out << to_json(load_input(cfg)).dump(2) << "\n";
    return kOk;
}

int cmd_exact(const Config &cfg, const Reporter &rep) {
    auto h = load_input(cfg);
    auto alpha = single_alpha(cfg);
    auto r = sre(h, alpha, enumeration(cfg));
    Json j;
    j["command"] = "exact";
    j["n"] = h.num_qubits();
    j["alpha"] = alpha.str();
    j["method"] = std::string(to_string(r.method));
    if (r.pl_moment) {
        put_moment(j, *r.pl_moment);
    }
    if (r.sre_exact) {
        j["sre_exact"] = r.sre_exact->fraction_string();
    }
    j["sre"] = r.sre;
    rep.record(j);
    return kOk;
}

double mc_sre_error(const McEstimate &est, const Alpha &alpha) {
    if (est.mean <= 0) {
        return 0.0;
    }
    return est.std_error / (est.mean * std::log(2.0) * std::abs(1 - alpha.value()));
}

int cmd_mc(const Config &cfg, const Reporter &rep) {
    auto h = load_input(cfg);
    auto alpha = single_alpha(cfg);
    auto est = mc_sre(h, alpha, cfg.samples, cfg.seed, enumeration(cfg));
    Json j;
    j["command"] = "mc";
    j["n"] = h.num_qubits();
    j["alpha"] = alpha.str();
    j["method"] = std::string(to_string(Method::monte_carlo));
    j["samples"] = est.samples;
    j["seed"] = est.seed;
    j["mean"] = est.mean;
    j["std_error"] = est.std_error;
    j["sre"] = est.sre_point;
    j["sre_std_error"] = mc_sre_error(est, alpha);
    rep.record(j);
    return kOk;
}

int cmd_recursion(const Config &cfg, const Reporter &rep) {
    auto alpha = single_alpha(cfg);
    ChainOptions opts;
    opts.enumeration = enumeration(cfg);
    Json j;
    j["command"] = "recursion";
    j["alpha"] = alpha.str();
    if (cfg.fit) {
        if (cfg.n) {
            throw InputError("n: --n and --fit are mutually exclusive");
        }
        auto fit = asymptotic_fit(alpha, cfg.n_lo, cfg.n_hi, opts);
        j["n_lo"] = cfg.n_lo;
        j["n_hi"] = cfg.n_hi;
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
    } else {
        if (!cfg.n) {
            throw InputError("n: --n or --fit is required");
        }
        auto r = chain_sre(*cfg.n, alpha, opts);
        j["n"] = *cfg.n;
        j["method"] = std::string(to_string(r.method));
        if (r.pl_moment) {
            put_moment(j, *r.pl_moment);
        }
        j["sre"] = r.sre;
    }
    rep.record(j);
    return kOk;
}

int cmd_bounds(const Config &cfg, const Reporter &rep) {
    auto h = load_input(cfg);
    auto alpha = single_alpha(cfg);
    auto stats = vertex_stats(h);
    Json j;
    j["command"] = "bounds";
    j["n"] = h.num_qubits();
    j["alpha"] = alpha.str();
    j["h_bar"] = rational_string(stats.h_bar);
    j["delta_bar"] = rational_string(stats.delta_bar);
    j["per_vertex"] = upper_bound(stats, alpha, BoundVariant::per_vertex);
    j["jensen"] = upper_bound(stats, alpha, BoundVariant::jensen);
    j["prev"] = prev_upper_bound(stats, alpha);
    rep.record(j);
    return kOk;
}

int cmd_verify(const Config &cfg, const Reporter &rep, const Environment &env) {
    auto h = load_input(cfg);
    VerifyOptions opts;
    if (!cfg.alphas.empty()) {
        opts.alphas.clear();
        for (const auto &a : cfg.alphas) {
            auto alpha = Alpha::parse(a);
            if (!alpha.is_finite()) {
                throw InputError("alpha: verify needs finite alpha != 1, got " + a);
            }
            opts.alphas.push_back(alpha);
        }
    }
    opts.fast_moment = env.verify_moment;
    auto report = verify_hypergraph(h, opts);
    std::vector<Json> rows;
    for (const auto &c : report.checks) {
        Json row;
        row["name"] = c.name;
        row["passed"] = c.passed;
        row["detail"] = c.detail;
        rows.push_back(row);
    }
    Json header;
    header["command"] = "verify";
    header["n"] = report.n;
    header["passed"] = report.all_passed();
    rep.table(header, "checks", rows);
    return report.all_passed() ? kOk : kVerificationFailure;
}

int cmd_scan(const Config &cfg, const Reporter &rep) {
    if (cfg.lattice.empty()) {
        throw InputError("lattice: scan needs --lattice");
    }
    if (cfg.from == 0 || cfg.to < cfg.from) {
        throw InputError("to: need 1 <= --from <= --to");
    }
    auto alpha = single_alpha(cfg);
    auto opts = enumeration(cfg);
    std::vector<Json> rows;
    std::vector<Json> skipped;
    for (size_t size = cfg.from; size <= cfg.to; size++) {
        std::optional<Hypergraph3> h;
        try {
            h = build_lattice(cfg.lattice, size);
        } catch (const InputError &e) {
            Json s;
            s["size"] = size;
            s["reason"] = e.what();
            skipped.push_back(s);
            continue;
        }
        Json row;
        row["size"] = size;
        row["n"] = h->num_qubits();
        if (h->num_qubits() <= cfg.max_n) {
            auto r = sre(*h, alpha, opts);
            row["sre"] = r.sre;
            row["method"] = std::string(to_string(r.method));
        } else if (cfg.lattice == "chain") {
            auto r = chain_sre(size, alpha, ChainOptions{opts});
            row["sre"] = r.sre;
            row["method"] = std::string(to_string(r.method));
        } else {
            if (!alpha.is_finite()) {
                throw CapacityError(
                    "scan: " + std::to_string(h->num_qubits()) + " qubits exceed the exact cap " +
                        std::to_string(cfg.max_n) + " and Monte Carlo needs finite alpha != 1",
                    "--max-n");
            }
            auto est = mc_sre(*h, alpha, cfg.samples, cfg.seed, opts);
            row["sre"] = est.sre_point;
            row["method"] = std::string(to_string(Method::monte_carlo));
            row["std_error"] = mc_sre_error(est, alpha);
        }
        rows.push_back(row);
    }
    Json header;
    header["command"] = "scan";
    header["lattice"] = cfg.lattice;
    header["alpha"] = alpha.str();
    header["samples"] = cfg.samples;
    header["seed"] = cfg.seed;
    header["skipped"] = skipped;
    rep.table(header, "records", rows);
    return kOk;
}

void add_common(CLI::App *sub, Config &cfg, bool needs_alpha) {
    auto *alpha = sub->add_option("--alpha", cfg.alphas, "Renyi index: a positive number, 1, or inf");
    if (needs_alpha) {
        alpha->required();
    }
    sub->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    sub->add_option("--max-n", cfg.max_n, "Largest qubit count enumerated exactly");
    sub->add_flag("--deterministic", cfg.deterministic, "Omit timing fields");
}

void add_input(CLI::App *sub, Config &cfg) {
    auto *lattice = sub->add_option("--lattice", cfg.lattice, "Generated lattice")
                        ->check(CLI::IsMember({"chain", "union-jack", "triangular"}));
    sub->add_option("--n", cfg.n, "Chain length");
    sub->add_option("--l", cfg.l, "Lattice side");
    sub->add_option("--input", cfg.input, "Hypergraph JSON file")->excludes(lattice);
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Environment &env) {
    Config cfg;
    CLI::App app{"Stabilizer Renyi entropy of 3-uniform hypergraph states", "hypersre"};
    app.require_subcommand(1);

    auto *lattice = app.add_subcommand("lattice", "Emit a lattice as hypergraph JSON");
    add_input(lattice, cfg);

    auto *exact = app.add_subcommand("exact", "SRE by exact enumeration over x");
    add_input(exact, cfg);
    add_common(exact, cfg, true);

    auto *mc = app.add_subcommand("mc", "Monte Carlo SRE estimate");
    add_input(mc, cfg);
    add_common(mc, cfg, true);
    mc->add_option("--samples", cfg.samples, "Number of x samples")->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    mc->add_option("--seed", cfg.seed, "Random seed");

    auto *recursion = app.add_subcommand("recursion", "Triangle chain SRE by transfer-matrix recursion");
    add_common(recursion, cfg, true);
    recursion->add_option("--n", cfg.n, "Chain length");
    recursion->add_flag("--fit", cfg.fit, "Fit the large-n line instead");
    recursion->add_option("--n-lo", cfg.n_lo, "Lower fit size");
    recursion->add_option("--n-hi", cfg.n_hi, "Upper fit size");

    auto *bounds = app.add_subcommand("bounds", "Analytic upper bounds");
    add_input(bounds, cfg);
    add_common(bounds, cfg, true);

    auto *verify = app.add_subcommand("verify", "Cross-check fast paths against the brute-force oracle");
    add_input(verify, cfg);
    add_common(verify, cfg, false);

    auto *scan = app.add_subcommand("scan", "Sweep a lattice family over sizes");
    add_common(scan, cfg, true);
    scan->add_option("--lattice", cfg.lattice, "Lattice family")
        ->required()
        ->check(CLI::IsMember({"chain", "union-jack", "triangular"}));
    scan->add_option("--from", cfg.from, "First size (L, or n for chain)")->required();
    scan->add_option("--to", cfg.to, "Last size")->required();
    scan->add_option("--samples", cfg.samples, "Monte Carlo samples beyond the exact cap")
        ->check(CLI::Range(uint64_t{2}, UINT64_MAX));
    scan->add_option("--seed", cfg.seed, "Random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    Reporter rep(cfg, out);
    try {
        if (*lattice) {
            return cmd_lattice(cfg, out);
        }
        if (*exact) {
            return cmd_exact(cfg, rep);
        }
        if (*mc) {
            return cmd_mc(cfg, rep);
        }
        if (*recursion) {
            return cmd_recursion(cfg, rep);
        }
        if (*bounds) {
            return cmd_bounds(cfg, rep);
        }
        if (*verify) {
            return cmd_verify(cfg, rep, env);
        }
        return cmd_scan(cfg, rep);
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << "\n";
        return kCapacityError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const ConvergenceError &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::logic_error &e) {
        err << "error: internal consistency check failed: " << e.what() << "\n";
        return kVerificationFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace hypersre::cli
