/*
Copyright 2026 The gvmhom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include "gvm/cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "gvm/dirac.hpp"
#include "gvm/emit.hpp"
#include "gvm/verify.hpp"
#include "gvm/weyl.hpp"

namespace gvm {

namespace {

const std::map<std::string, EmitFormat> kFormats{
    {"text", EmitFormat::Text}, {"dot", EmitFormat::Dot}, {"json", EmitFormat::Json}};

int write_output(const CliConfig& cfg, const std::string& payload, std::ostream& out, std::ostream& err) {
    if (cfg.output.empty()) {
        out << payload;
        return kExitOk;
    }
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) {
        err << "error: cannot open " << cfg.output << " for writing\n";
        return kExitUsage;
    }
    file << payload;
    return kExitOk;
}

/// Prints failing and flagged rows; returns true when nothing failed.
bool report_rows(const std::vector<CheckRow>& rows, std::ostream& err) {
    bool ok = true;
    for (const auto& r : rows) {
        if (r.status == CheckStatus::Fail) {
            err << "assertion failed: " << r.name << " (" << r.detail << ")\n";
            ok = false;
        } else if (r.status == CheckStatus::Flag) {
            err << "warning: " << r.name << " (" << r.detail << ")\n";
        }
    }
    return ok;
}

int run_orbit(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    AnalyzeOptions options;
    options.max_rank = cfg.max_rank;
    options.threads = cfg.threads;
    HomCache cache;
    const auto report = analyze_orbit(cfg.k, cfg.n, cache, options);
    std::string payload;
    switch (cfg.emit) {
    case EmitFormat::Text: payload = emit_text(report); break;
    case EmitFormat::Dot: payload = emit_dot(report); break;
    case EmitFormat::Json: payload = emit_json(report); break;
    }
    if (const int rc = write_output(cfg, payload, out, err); rc != kExitOk) {
        return rc;
    }
    auto rows = orbit_checks(report);
    if (cfg.oracle && !report.graph.singular) {
        const auto res = check_hasse_arrows_give_standard_homs(report, cache);
        rows.push_back({"Hasse arrows give nonzero standard maps", res.ok() ? CheckStatus::Pass : CheckStatus::Fail,
                        res.summary()});
    }
    return report_rows(rows, err) ? kExitOk : kExitAssertion;
}

int run_sk(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const ParabolicContext ctx(cfg.k, cfg.n);
    const auto graph = sk_graph(ctx);
    std::string payload;
    switch (cfg.emit) {
    case EmitFormat::Text: payload = emit_text(graph); break;
    case EmitFormat::Dot: payload = emit_dot(graph, "sk"); break;
    case EmitFormat::Json: payload = emit_json(graph, ctx); break;
    }
    return write_output(cfg, payload, out, err);
}

int run_hasse(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    const ParabolicContext ctx(cfg.k, cfg.n);
    const auto graph = parabolic_hasse(ctx, cfg.max_length);
    std::string payload;
    switch (cfg.emit) {
    case EmitFormat::Text: payload = emit_text(graph, ctx); break;
    case EmitFormat::Dot: payload = emit_dot(graph, ctx); break;
    case EmitFormat::Json: payload = emit_json(graph, ctx); break;
    }
    if (const int rc = write_output(cfg, payload, out, err); rc != kExitOk) {
        return rc;
    }
    if (cfg.oracle) {
        const auto res = check_hasse_grading_drop(ctx);
        return report_rows({{"Hasse arrows drop grading", res.ok() ? CheckStatus::Pass : CheckStatus::Fail, res.summary()}},
                           err)
                   ? kExitOk
                   : kExitAssertion;
    }
    return kExitOk;
}

int run_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
    VerifyOptions options;
    options.grid = parse_grid(cfg.grid);
    options.oracle = cfg.oracle;
    options.max_rank = cfg.max_rank;
    const auto report = run_verification_suite(options);
    const auto payload = cfg.emit == EmitFormat::Json ? emit_json(report) : report.table();
    if (const int rc = write_output(cfg, payload, out, err); rc != kExitOk) {
        return rc;
    }
    return report.all_passed() ? kExitOk : kExitAssertion;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Verma module homomorphisms on Dirac orbits of so(n+2k)"};
    app.name("gvmhom");
    app.require_subcommand(1);

    CliConfig cfg;
    auto add_common = [&](CLI::App* sub, bool needs_kn) {
        if (needs_kn) {
            sub->add_option("--k", cfg.k, "crossed node / number of Clifford variables")->required();
            sub->add_option("--n", cfg.n, "odd dimension n >= 3")->required();
        }
        sub->add_option("--emit", cfg.emit, "output format")
            ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
        sub->add_option("-o,--output", cfg.output, "write to this file instead of standard output");
        sub->add_flag("--oracle", cfg.oracle, "also run brute-force cross-checks");
        sub->add_option("--max-rank", cfg.max_rank, "refuse ranks above this bound")->check(CLI::Range(1, 7));
    };

    auto* orbit = app.add_subcommand("orbit", "analyze the p-dominant part of the Dirac orbit");
    add_common(orbit, true);
    orbit->add_option("--threads", cfg.threads, "worker threads (0 = hardware concurrency)");

    auto* sk = app.add_subcommand("sk", "emit the recursively defined graph S_k");
    add_common(sk, true);

    auto* hasse = app.add_subcommand("hasse", "emit the parabolic Hasse graph of W^p");
    add_common(hasse, true);
    hasse->add_option("--max-length", cfg.max_length, "keep elements up to this length (-1 = all)");

    auto* verify = app.add_subcommand("verify", "run the verification grid and invariant suites");
    add_common(verify, false);
    verify->add_option("--grid", cfg.grid, "default, extended, or k:n,k:n,...");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        if (cfg.command == "orbit") {
            return run_orbit(cfg, out, err);
        }
        if (cfg.command == "sk") {
            return run_sk(cfg, out, err);
        }
        if (cfg.command == "hasse") {
            return run_hasse(cfg, out, err);
        }
        return run_verify(cfg, out, err);
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        if (e.code() == ErrorCode::InvalidArgument || e.code() == ErrorCode::Parse ||
            e.code() == ErrorCode::RankTooLarge) {
            err << '\n' << app.get_subcommand(cfg.command)->help();
            return kExitUsage;
        }
        return kExitAssertion;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"gvmhom"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gvm
