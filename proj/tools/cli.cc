// Copyright 2026 The qlogic Authors
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

#include "cli.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "qlogic/annex.h"
#include "qlogic/assumptions.h"
#include "qlogic/errors.h"
#include "qlogic/grover.h"
#include "qlogic/matrix_io.h"
#include "qlogic/random.h"
#include "qlogic/teleport.h"

namespace qlogic::cli {

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

std::string command_name(Command c) {
    switch (c) {
        case Command::VerifyAssumptions: return "verify-assumptions";
        case Command::Grover: return "grover";
        case Command::Teleport: return "teleport";
        case Command::Annex: return "annex";
        case Command::All: return "all";
    }
    return "unknown";
}

namespace {

Command command_from_name(const std::string& name) {
    for (Command c : {Command::VerifyAssumptions, Command::Grover, Command::Teleport,
                      Command::Annex, Command::All}) {
        if (command_name(c) == name) return c;
    }
    throw std::invalid_argument("unknown command '" + name + "'");
}

std::string format_complex(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << z.real() << (z.imag() < 0 || std::signbit(z.imag()) ? "-" : "+") << std::abs(z.imag())
       << "i";
    return os.str();
}

double parse_real(const std::string& text) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size() || !std::isfinite(v)) {
        throw std::invalid_argument("bad number '" + text + "'");
    }
    return v;
}

}  // namespace

Complex parse_complex(const std::string& raw) {
    std::string text;
    for (char c : raw) {
        if (c != ' ') text.push_back(c);
    }
    if (text.empty()) throw std::invalid_argument("empty complex literal");
    if (text.back() != 'i' && text.back() != 'j') {
        return {parse_real(text), 0.0};
    }
    text.pop_back();
    // Split at the last sign that is not a leading sign or an exponent sign.
    std::size_t split = std::string::npos;
    for (std::size_t k = text.size(); k-- > 1;) {
        if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string re_text = split == std::string::npos ? "" : text.substr(0, split);
    std::string im_text = split == std::string::npos ? text : text.substr(split);
    double im = 0.0;
    if (im_text.empty() || im_text == "+") {
        im = 1.0;
    } else if (im_text == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_text);
    }
    const double re = re_text.empty() ? 0.0 : parse_real(re_text);
    return {re, im};
}

RunConfig parse_args(const std::vector<std::string>& args) {
    RunConfig cfg;
    CLI::App app{"Projection-lattice checks for teleportation, Grover search and their lemmas",
                 "qlogic"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    double tol = cfg.abs_tol;
    double eig_tol = cfg.eig_tol;
    std::string out;
    app.add_option("--seed", seed, "Root seed for every random stream")->capture_default_str();
    app.add_option("--tol", tol, "Absolute (max-norm) tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--eig-tol", eig_tol, "Eigenvalue tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--out", out, "Report path (a directory for 'all')");
    app.add_flag("--json", cfg.json, "Print the run summary as JSON");

    auto* verify = app.add_subcommand("verify-assumptions", "Randomized assumption and lemma suite");
    std::size_t verify_trials = 0;
    std::vector<std::string> matrix_files;
    verify->add_option("--dims", cfg.dims, "Dimensions to test")->delimiter(',');
    verify->add_option("--trials", verify_trials, "Random pairs per configuration")
        ->check(CLI::PositiveNumber);
    verify->add_option("--matrix-file", matrix_files,
                       "Matrix literal files for an extra pair (e then f)");

    auto* grover = app.add_subcommand("grover", "Grover iteration sweep");
    std::string r_text = "20";
    grover->add_option("--n", cfg.n_list, "Database sizes")->delimiter(',');
    grover->add_option("--multiplicity", cfg.multiplicities, "Event ranks")->delimiter(',');
    grover->add_option("--r", r_text, "Largest iteration count, or 'auto'");
    grover->add_option("--target", cfg.target, "Target index k_o (1-based)");

    auto* teleport = app.add_subcommand("teleport", "Teleportation protocol runs");
    std::string alpha_text;
    std::string beta_text;
    std::size_t teleport_trials = 0;
    int force = 0;
    teleport->add_option("--alpha", alpha_text, "Amplitude of |0>, complex literal a+bi");
    teleport->add_option("--beta", beta_text, "Amplitude of |1>, complex literal a+bi");
    teleport->add_option("--trials", teleport_trials, "Protocol runs")->check(CLI::PositiveNumber);
    teleport->add_option("--force-outcome", force, "Force Alpha's outcome k")
        ->check(CLI::Range(1, 4));

    auto* annex = app.add_subcommand("annex", "Closed-form verification grid");
    annex->add_option("--p-grid", cfg.p_grid, "Overlap values p in (0,1)")->delimiter(',');
    annex->add_option("--r-max", cfg.r_max, "Largest iteration count")->capture_default_str();

    app.add_subcommand("all", "Run every suite with default parameters");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        throw UsageError{0, app.help()};
    } catch (const CLI::ParseError& e) {
        throw UsageError{kExitUsage, e.what()};
    }

    cfg.command = command_from_name(app.get_subcommands().front()->get_name());
    cfg.seed = seed;
    cfg.abs_tol = tol;
    cfg.eig_tol = eig_tol;
    if (!out.empty()) cfg.out = fs::path(out);

    auto usage = [](const std::string& msg) { return UsageError{kExitUsage, msg}; };

    if (verify->parsed()) {
        if (verify_trials > 0) cfg.trials = verify_trials;
        if (!matrix_files.empty() && matrix_files.size() != 2) {
            throw usage("--matrix-file must be given exactly twice (e then f)");
        }
        for (const auto& f : matrix_files) cfg.matrix_files.emplace_back(f);
        if (cfg.dims.empty()) throw usage("--dims must not be empty");
        for (std::size_t d : cfg.dims) {
            if (d < 2 || d > 64) throw usage("--dims entries must lie in [2, 64]");
        }
    }
    if (grover->parsed()) {
        if (r_text == "auto") {
            cfg.r.reset();
        } else {
            try {
                std::size_t used = 0;
                const long long v = std::stoll(r_text, &used);
                if (used != r_text.size() || v < 0) throw std::invalid_argument(r_text);
                cfg.r = static_cast<std::size_t>(v);
            } catch (const std::exception&) {
                throw usage("--r must be a non-negative integer or 'auto'");
            }
        }
        if (cfg.n_list.empty() || cfg.multiplicities.empty()) {
            throw usage("--n and --multiplicity must not be empty");
        }
        for (std::size_t n : cfg.n_list) {
            if (n < 2) throw usage("--n entries must be >= 2");
            if (cfg.target < 1 || cfg.target > n) throw usage("--target must lie in [1, n]");
        }
        for (std::size_t m : cfg.multiplicities) {
            if (m < 1) throw usage("--multiplicity entries must be >= 1");
        }
    } else {
        cfg.r = 20;
    }
    if (teleport->parsed()) {
        if (teleport_trials > 0) cfg.trials = teleport_trials;
        if (force != 0) cfg.force_outcome = force;
        if (alpha_text.empty() != beta_text.empty()) {
            throw usage("--alpha and --beta must be given together");
        }
        if (!alpha_text.empty()) {
            try {
                cfg.alpha = parse_complex(alpha_text);
                cfg.beta = parse_complex(beta_text);
            } catch (const std::exception& e) {
                throw usage(std::string("bad complex literal: ") + e.what());
            }
            const double norm2 = std::norm(*cfg.alpha) + std::norm(*cfg.beta);
            if (std::abs(norm2 - 1.0) > 1e-9) {
                throw usage("|alpha|^2 + |beta|^2 must equal 1");
            }
        }
    }
    if (annex->parsed()) {
        for (double p : cfg.p_grid) {
            if (!(p > 0.0 && p < 1.0)) throw usage("--p-grid values must lie in (0, 1)");
        }
    }
    return cfg;
}

RunConfig parse_args(int argc, const char* const* argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return parse_args(args);
}

ojson to_json(const RunConfig& c) {
    ojson j;
    j["command"] = command_name(c.command);
    j["seed"] = c.seed;
    j["abs_tol"] = c.abs_tol;
    j["eig_tol"] = c.eig_tol;
    j["out"] = c.out ? ojson(c.out->string()) : ojson(nullptr);
    j["json"] = c.json;
    j["dims"] = c.dims;
    j["trials"] = c.trials ? ojson(*c.trials) : ojson(nullptr);
    ojson files = ojson::array();
    for (const auto& f : c.matrix_files) files.push_back(f.string());
    j["matrix_files"] = std::move(files);
    j["n"] = c.n_list;
    j["multiplicity"] = c.multiplicities;
    j["r"] = c.r ? ojson(*c.r) : ojson("auto");
    j["target"] = c.target;
    j["alpha"] = c.alpha ? ojson(format_complex(*c.alpha)) : ojson(nullptr);
    j["beta"] = c.beta ? ojson(format_complex(*c.beta)) : ojson(nullptr);
    j["force_outcome"] = c.force_outcome ? ojson(*c.force_outcome) : ojson(nullptr);
    j["p_grid"] = c.p_grid;
    j["r_max"] = c.r_max;
    return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
    RunConfig c;
    c.command = command_from_name(j.at("command").get<std::string>());
    c.seed = j.at("seed").get<std::uint64_t>();
    c.abs_tol = j.at("abs_tol").get<double>();
    c.eig_tol = j.at("eig_tol").get<double>();
    if (!j.at("out").is_null()) c.out = fs::path(j.at("out").get<std::string>());
    c.json = j.at("json").get<bool>();
    c.dims = j.at("dims").get<std::vector<std::size_t>>();
    if (!j.at("trials").is_null()) c.trials = j.at("trials").get<std::size_t>();
    c.matrix_files.clear();
    for (const auto& f : j.at("matrix_files")) c.matrix_files.emplace_back(f.get<std::string>());
    c.n_list = j.at("n").get<std::vector<std::size_t>>();
    c.multiplicities = j.at("multiplicity").get<std::vector<std::size_t>>();
    if (j.at("r").is_string()) {
        c.r.reset();
    } else {
        c.r = j.at("r").get<std::size_t>();
    }
    c.target = j.at("target").get<std::size_t>();
    if (!j.at("alpha").is_null()) c.alpha = parse_complex(j.at("alpha").get<std::string>());
    if (!j.at("beta").is_null()) c.beta = parse_complex(j.at("beta").get<std::string>());
    if (!j.at("force_outcome").is_null()) c.force_outcome = j.at("force_outcome").get<int>();
    c.p_grid = j.at("p_grid").get<std::vector<double>>();
    c.r_max = j.at("r_max").get<std::size_t>();
    return c;
}

namespace {

struct Tally {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::vector<std::string> failure_names;

    void record(bool passed, const std::string& what) {
        ++checks;
        if (!passed) {
            ++failures;
            if (failure_names.size() < 20) failure_names.push_back(what);
        }
    }
    void absorb(const Tally& other) {
        checks += other.checks;
        failures += other.failures;
        for (const auto& n : other.failure_names) {
            if (failure_names.size() < 20) failure_names.push_back(n);
        }
    }
};

struct Report {
    std::string text;  // file content
    Tally tally;
};

void write_atomically(const fs::path& path, const std::string& content) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw std::runtime_error("cannot write " + tmp.string());
        os << content;
        if (!os) throw std::runtime_error("write failed for " + tmp.string());
    }
    fs::rename(tmp, path);
}

Report verify_report(const RunConfig& cfg, const Tolerance& tol) {
    Report rep;
    ojson arr = ojson::array();
    auto add = [&](const std::string& prefix, CheckResult r) {
        r.name = prefix + "/" + r.name;
        rep.tally.record(r.passed, r.name);
        arr.push_back(to_json(r));
    };
    auto add_error = [&](const std::string& name, const std::string& msg) {
        CheckResult r = CheckResult::from_residual(name, INFINITY, tol.abs_tol);
        r.passed = false;
        r.max_residual = std::numeric_limits<double>::max();
        ojson w;
        w["error"] = msg;
        r.witness = w;
        rep.tally.record(false, name);
        arr.push_back(to_json(r));
    };

    for (std::size_t d : cfg.dims) {
        const std::size_t half = std::max<std::size_t>(1, d / 2);
        const std::array<std::pair<std::size_t, std::size_t>, 2> ranks{{{1, half}, {half, 1}}};
        for (const auto& [re, rf] : ranks) {
            const std::string prefix =
                "d" + std::to_string(d) + "/r" + std::to_string(re) + "x" + std::to_string(rf);
            try {
                RandomSpec spec{d, re, rf, cfg.assumption_trials(), cfg.seed};
                for (const auto& r : run_suite(spec, tol)) add(prefix, r);
            } catch (const Error& e) {
                add_error(prefix + "/suite", e.what());
            }
        }
        const std::string prefix = "d" + std::to_string(d) + "/properties";
        try {
            for (const auto& r : run_property_suite(d, 500, cfg.seed, tol)) add(prefix, r);
        } catch (const Error& e) {
            add_error(prefix, e.what());
        }
    }

    if (cfg.matrix_files.size() == 2) {
        try {
            const Projection e = Projection::make(read_matrix_file(cfg.matrix_files[0]), tol);
            const Projection f = Projection::make(read_matrix_file(cfg.matrix_files[1]), tol);
            const std::string prefix = "matrix_pair";
            add(prefix, check_assumption1(e, f, tol));
            add(prefix, check_assumption2(e, f, tol));
            add(prefix, check_assumption3(e, f, tol));
            add(prefix, check_assumption3_state(e, f, State::maximally_mixed(e.dim(), tol), tol));
            add(prefix, check_lemma1(e, f, tol));
            add(prefix, check_lemma2(e, f, tol));
        } catch (const Error& e) {
            add_error("matrix_pair", e.what());
        }
    }
    rep.text = arr.dump(2) + "\n";
    return rep;
}

Report grover_report(const RunConfig& cfg, const Tolerance& tol) {
    Report rep;
    std::string lines;
    for (std::size_t n : cfg.n_list) {
        for (std::size_t m : cfg.multiplicities) {
            const std::string label = "grover/n" + std::to_string(n) + "/m" + std::to_string(m);
            try {
                const GroverInstance inst = build_instance(n, cfg.target, m, kDefaultMaxDim, tol);
                const std::size_t r_max = cfg.r ? *cfg.r : optimal_iterations(n);
                for (const GroverRun& run : sweep(inst, r_max)) {
                    rep.tally.record(run.deviation <= tol.abs_tol,
                                     label + "/r" + std::to_string(run.r));
                    lines += to_json(run).dump() + "\n";
                }
            } catch (const Error& e) {
                ojson j;
                j["n"] = n;
                j["multiplicity"] = m;
                j["target"] = cfg.target;
                j["error"] = e.what();
                rep.tally.record(false, label);
                lines += j.dump() + "\n";
            }
        }
    }
    rep.text = std::move(lines);
    return rep;
}

void merge_named(std::vector<CheckResult>& acc, const std::vector<CheckResult>& more) {
    for (const auto& r : more) {
        auto it = std::find_if(acc.begin(), acc.end(),
                               [&](const CheckResult& a) { return a.name == r.name; });
        if (it == acc.end()) {
            acc.push_back(r);
        } else {
            it->merge(r);
        }
    }
}

Report teleport_report(const RunConfig& cfg, const Tolerance& tol) {
    Report rep;
    ojson doc;
    std::vector<CheckResult> conditions;
    std::vector<CheckResult> lemma3;
    ojson transcripts = ojson::array();
    try {
        const TeleportSystem sys = build_system(tol);
        for (std::size_t t = 0; t < cfg.teleport_trials(); ++t) {
            Rng input_rng(cfg.seed, "teleport/input", t);
            const InputProperty x = cfg.alpha ? InputProperty::ray(*cfg.alpha, *cfg.beta, tol)
                                              : InputProperty::random(input_rng, tol);
            merge_named(conditions, check_conditions(sys, x, tol));
            merge_named(lemma3, check_lemma3(sys, x, tol));
            const std::uint64_t run_seed = derive_seed(cfg.seed, "teleport/outcome", t);
            const TeleportTranscript tr = run(sys, x, run_seed, cfg.force_outcome);
            double probs_dev = 0.0;
            for (double p : tr.outcome_probs) probs_dev = std::max(probs_dev, std::abs(p - 0.25));
            const bool ok = std::abs(tr.final_prob - 1.0) <= tol.abs_tol &&
                            std::abs(tr.corrected_state_prob - 1.0) <= tol.abs_tol &&
                            probs_dev <= tol.abs_tol;
            rep.tally.record(ok, "teleport/trial" + std::to_string(t));
            transcripts.push_back(to_json(tr));
        }
    } catch (const Error& e) {
        doc["error"] = e.what();
        rep.tally.record(false, "teleport/error");
    }
    for (const auto& r : conditions) rep.tally.record(r.passed, "teleport/" + r.name);
    for (const auto& r : lemma3) rep.tally.record(r.passed, "teleport/" + r.name);
    doc["conditions"] = to_json(conditions);
    doc["lemma3"] = to_json(lemma3);
    doc["transcripts"] = std::move(transcripts);
    rep.text = doc.dump(2) + "\n";
    return rep;
}

Report annex_report(const RunConfig& cfg, const Tolerance& tol, std::ostream& err) {
    Report rep;
    const std::vector<double> grid = cfg.p_grid.empty() ? annex::default_p_grid() : cfg.p_grid;
    std::string lines;
    try {
        for (double p : grid) {
            const annex::EigenReport eig = annex::eigen_check(p);
            const std::string label = "annex/p" + std::to_string(p);
            rep.tally.record(eig.max_deviation <= tol.abs_tol, label + "/eigenvalues");
            rep.tally.record(eig.alpha_modulus_deviation <= 1e-12, label + "/alpha_modulus");
            rep.tally.record(eig.rank_m_minus_identity == 3,
                             label + "/jordan_rank");
            for (std::size_t copies : {1u, 2u}) {
                const CheckResult b = annex::verify_basis_action(p, tol, copies);
                rep.tally.record(b.passed, label + "/basis_action/copies" + std::to_string(copies));
            }
        }
        for (const annex::GridPoint& g : annex::sweep(grid, cfg.r_max)) {
            rep.tally.record(g.max_pairwise_dev <= tol.abs_tol,
                             "annex/p" + std::to_string(g.p) + "/r" + std::to_string(g.r));
            lines += annex::to_json(g).dump() + "\n";
        }
    } catch (const Error& e) {
        err << "annex: " << e.what() << "\n";
        ojson j;
        j["error"] = e.what();
        lines += j.dump() + "\n";
        rep.tally.record(false, "annex/error");
    }
    rep.text = std::move(lines);
    return rep;
}

Report run_command(Command c, const RunConfig& cfg, const Tolerance& tol, std::ostream& err) {
    switch (c) {
        case Command::VerifyAssumptions: return verify_report(cfg, tol);
        case Command::Grover: return grover_report(cfg, tol);
        case Command::Teleport: return teleport_report(cfg, tol);
        case Command::Annex: return annex_report(cfg, tol, err);
        case Command::All: break;
    }
    throw std::logic_error("run_command: 'all' is not a single command");
}

std::string report_file_name(Command c) {
    switch (c) {
        case Command::VerifyAssumptions: return "verify-assumptions.json";
        case Command::Grover: return "grover.jsonl";
        case Command::Teleport: return "teleport.json";
        case Command::Annex: return "annex.jsonl";
        case Command::All: return "summary.json";
    }
    return "report";
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    Tolerance tol;
    try {
        tol = Tolerance::make(cfg.abs_tol, cfg.eig_tol);
    } catch (const Error& e) {
        err << "qlogic: " << e.what() << "\n";
        return kExitUsage;
    }

    const std::vector<Command> commands =
        cfg.command == Command::All
            ? std::vector<Command>{Command::VerifyAssumptions, Command::Grover, Command::Teleport,
                                   Command::Annex}
            : std::vector<Command>{cfg.command};

    Tally total;
    ojson per_command = ojson::array();
    std::vector<std::string> files;
    try {
        for (Command c : commands) {
            Report rep = run_command(c, cfg, tol, err);
            total.absorb(rep.tally);
            ojson s;
            s["command"] = command_name(c);
            s["checks"] = rep.tally.checks;
            s["failures"] = rep.tally.failures;
            s["passed"] = rep.tally.failures == 0;
            per_command.push_back(std::move(s));
            if (!cfg.json) {
                out << command_name(c) << ": " << rep.tally.checks << " checks, "
                    << rep.tally.failures << " failures\n";
            }
            for (const auto& name : rep.tally.failure_names) {
                err << "FAILED " << name << "\n";
            }
            if (cfg.out) {
                const fs::path path =
                    cfg.command == Command::All ? *cfg.out / report_file_name(c) : *cfg.out;
                write_atomically(path, rep.text);
                files.push_back(path.filename().string());
            }
        }

        ojson summary;
        summary["command"] = command_name(cfg.command);
        // The output location is left out so reports written to different
        // places stay byte-identical.
        ojson config = to_json(cfg);
        config.erase("out");
        summary["config"] = std::move(config);
        summary["passed"] = total.failures == 0;
        summary["checks"] = total.checks;
        summary["failures"] = total.failures;
        summary["commands"] = std::move(per_command);
        summary["reports"] = files;
        if (cfg.command == Command::All && cfg.out) {
            write_atomically(*cfg.out / report_file_name(Command::All), summary.dump(2) + "\n");
        }
        if (cfg.json) {
            out << summary.dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        err << "qlogic: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return total.failures == 0 ? kExitOk : kExitCheckFailed;
}

}  // namespace qlogic::cli
