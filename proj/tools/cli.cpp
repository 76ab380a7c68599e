#include "cli.hpp"

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "brc/bounds.hpp"
#include "brc/channel.hpp"
#include "brc/decoder.hpp"
#include "brc/encoder.hpp"
#include "brc/error.hpp"
#include "brc/fuzz.hpp"
#include "brc/io.hpp"
#include "brc/markers.hpp"
#include "brc/params.hpp"

namespace brc::cli {

namespace {

struct ParamSource {
    std::string file;
    std::optional<std::size_t> m, t, s;
    std::optional<unsigned> w, a;
    std::optional<std::string> modulus;

    void attach(CLI::App* app) {
        app->add_option("--params", file, "Params file (JSON)");
        app->add_option("--m", m, "Information length m (overrides the params file)");
        app->add_option("--w", w, "Overlap length w, M = w+1 (overrides the params file)");
        app->add_option("--t", t, "Break budget t (overrides the params file)");
        app->add_option("--s", s, "Omission budget s in bits (overrides the params file)");
        app->add_option("--a", a, "Marker zero-run length a");
        app->add_option("--modulus", modulus, "Field modulus in hex, e.g. 0x1002b");
    }

    ParamsFile resolve() const {
        ParamsFile p;
        if (!file.empty()) p = parse_params(read_text_file(file));
        else if (!m || !w || !t || !s)
            throw Error(ErrorKind::Parameter, "give --params or all of --m, --w, --t, --s");
        if (m) p.m = *m;
        if (w) p.w = *w;
        if (t) p.t = *t;
        if (s) p.s = *s;
        if (a) p.run_length = *a;
        if (modulus) p.modulus = FieldModulus::from_hex(*modulus);
        return p;
    }
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty())
        out << text;
    else
        write_text_file(path, text);
}

std::uint64_t pick_seed(const std::optional<std::uint64_t>& flag, const ParamsFile& p) {
    return flag.value_or(p.seed.value_or(0));
}

std::string format_real(long double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6Lf", v);
    return buf;
}

std::string params_report(const CodeParams& params) {
    std::ostringstream o;
    o << "m=" << params.m() << " w=" << params.w() << " t=" << params.t() << " s=" << params.s() << "\n";
    o << "M=" << params.M() << " L=" << params.L() << " n=" << params.n() << "\n";
    o << "modulus=" << params.field().modulus().to_hex() << " a=" << params.book().run_length() << "\n";
    o << "redundancy=" << params.redundancy() << "\n";
    const auto b = bound_report(params.n(), params.t(), params.s(), params.redundancy());
    o << "regime=" << to_string(b.regime) << "\n";
    o << "lemma1_dmin=" << b.lemma1_dmin << "\n";
    o << "lemma2_threshold=" << (b.lemma2_threshold ? format_real(*b.lemma2_threshold) : "NA") << "\n";
    o << "theorem1_lb=" << format_real(b.redundancy_lb) << "\n";
    o << "construction_redundancy=" << params.redundancy() << "\n";
    return o.str();
}

std::string ms(std::chrono::nanoseconds ns) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", static_cast<double>(ns.count()) / 1e6);
    return buf;
}

std::string decode_report(const DecodeReport& r, bool timings) {
    std::ostringstream o;
    o << "q_size=" << r.q_size << "\nj_size=" << r.j_size << "\nr=" << r.r << "\nattempts=" << r.attempts
      << "\nboundary_trim=" << (r.boundary_trim ? std::to_string(*r.boundary_trim) : "none") << "\n";
    if (timings) {
        const auto& t = r.timings;
        o << "time_ms classify=" << ms(t.classify) << " syndromes=" << ms(t.syndromes) << " locator=" << ms(t.locator)
          << " roots=" << ms(t.roots) << " reconstruct=" << ms(t.reconstruct) << " verify=" << ms(t.verify) << "\n";
    }
    return o.str();
}

int exit_code(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Parameter: return kParameter;
        case ErrorKind::Validity: return kValidity;
        case ErrorKind::Budget: return kBudget;
        case ErrorKind::Io: return kUsage;
        case ErrorKind::DecodeFailed: return e.cause() == ErrorKind::Budget ? kBudgetEvidence : kDecodeFailed;
        default: return kDecodeFailed;
    }
}

std::vector<StrategyKind> parse_strategy_list(const std::string& text) {
    std::vector<StrategyKind> out;
    if (text == "all") {
        for (auto k : all_strategies())
            if (k != StrategyKind::Identity) out.push_back(k);
        return out;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto k = parse_strategy(item);
        if (!k) throw Error(ErrorKind::Parameter, "unknown strategy '" + item + "'");
        out.push_back(*k);
    }
    if (out.empty()) throw Error(ErrorKind::Parameter, "no strategies given");
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Break-resilient codes: encode, attack, decode and bound."};
    app.name("brc");
    app.require_subcommand(1);

    ParamSource src;
    std::optional<std::uint64_t> seed;
    std::string in_path, out_path;

    // params
    auto* cmd_params = app.add_subcommand("params", "Validate parameters, write a params file, print derived values");
    src.attach(cmd_params);
    cmd_params->add_option("--seed", seed, "Seed stored in the params file");
    cmd_params->add_option("--out", out_path, "Params file to write");

    // encode
    std::string z_out;
    auto* cmd_encode = app.add_subcommand("encode", "Encode an information string (or sample one)");
    ParamSource enc_src;
    enc_src.attach(cmd_encode);
    cmd_encode->add_option("--in", in_path, "File holding z; omitted means sample a valid z");
    cmd_encode->add_option("--seed", seed, "Sampling seed");
    cmd_encode->add_option("--out", out_path, "Codeword file (default stdout)");
    cmd_encode->add_option("--z-out", z_out, "Also write the information string here");

    // fragment
    std::string strategy_name, action_file, action_out;
    std::vector<std::size_t> targets;
    auto* cmd_fragment = app.add_subcommand("fragment", "Apply an adversary to a codeword");
    ParamSource frag_src;
    frag_src.attach(cmd_fragment);
    cmd_fragment->add_option("--in", in_path, "Codeword file")->required();
    auto* strat_opt = cmd_fragment->add_option("--strategy", strategy_name, "Attack strategy");
    auto* action_opt = cmd_fragment->add_option("--action-file", action_file, "Explicit action (JSON)");
    strat_opt->excludes(action_opt);
    cmd_fragment->add_option("--targets", targets, "Bit offsets for knockout-positions")->delimiter(',');
    cmd_fragment->add_option("--seed", seed, "Strategy seed");
    cmd_fragment->add_option("--out", out_path, "Fragments file (default stdout)");
    cmd_fragment->add_option("--action-out", action_out, "Write the applied action here");

    // decode
    std::string report_path;
    bool timings = false;
    auto* cmd_decode = app.add_subcommand("decode", "Recover z from a fragments file");
    ParamSource dec_src;
    dec_src.attach(cmd_decode);
    cmd_decode->add_option("--in", in_path, "Fragments file")->required();
    cmd_decode->add_option("--out", out_path, "Write z here (default stdout)");
    cmd_decode->add_option("--report", report_path, "Write diagnostics here (default stderr)");
    cmd_decode->add_flag("--timings", timings, "Include stage timings in the report");

    // fuzz
    std::size_t trials = 0;
    unsigned threads = 1;
    std::string strategies = "all";
    auto* cmd_fuzz = app.add_subcommand("fuzz", "Seeded encode/attack/decode round trips");
    ParamSource fuzz_src;
    fuzz_src.attach(cmd_fuzz);
    cmd_fuzz->add_option("--trials", trials, "Trials per strategy")->required();
    cmd_fuzz->add_option("--strategy", strategies, "Comma-separated strategies or 'all'");
    cmd_fuzz->add_option("--seed", seed, "Base seed");
    cmd_fuzz->add_option("--threads", threads, "Worker threads");
    cmd_fuzz->add_flag("--timings", timings, "Include timing percentiles (not reproducible)");
    cmd_fuzz->add_option("--out", out_path, "Report file (default stdout)");

    // bounds
    std::string grid;
    auto* cmd_bounds = app.add_subcommand("bounds", "Evaluate redundancy bounds over a grid, as CSV");
    cmd_bounds->add_option("--grid", grid, "e.g. 'n=100;t=10;s=50' or 'm=64,256;c=2.5;t=1,2;s=0,4'")->required();
    cmd_bounds->add_option("--out", out_path, "CSV file (default stdout)");

    // confusable
    std::string x, y;
    std::size_t ct = 0, cs = 0;
    auto* cmd_conf = app.add_subcommand("confusable", "Exhaustive confusability check for short strings");
    cmd_conf->add_option("--x", x, "First string")->required();
    cmd_conf->add_option("--y", y, "Second string")->required();
    cmd_conf->add_option("--t", ct, "Break budget")->required();
    cmd_conf->add_option("--s", cs, "Omission budget")->required();

    // markers
    auto* cmd_markers = app.add_subcommand("markers", "List the synchronization markers");
    ParamSource mark_src;
    mark_src.attach(cmd_markers);

    std::vector<std::string> argv_store{"brc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store) argv.push_back(a.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (cmd_params->parsed()) {
            const ParamsFile pf = src.resolve();
            const CodeParams params = pf.build();
            const auto s = seed ? seed : pf.seed;
            if (!out_path.empty()) write_text_file(out_path, format_params(params, s));
            out << params_report(params);
            return kOk;
        }

        if (cmd_encode->parsed()) {
            const ParamsFile pf = enc_src.resolve();
            const CodeParams params = pf.build();
            BitString z;
            if (!in_path.empty()) {
                std::istringstream in(read_text_file(in_path));
                z = parse_bitstring(in);
                if (!is_valid(z, params))
                    throw Error(ErrorKind::Validity, "information string fails validity (length " +
                                                         std::to_string(z.size()) + ", m = " +
                                                         std::to_string(params.m()) + ")");
            } else {
                z = sample_valid(params, pick_seed(seed, pf)).z;
            }
            if (!z_out.empty()) write_text_file(z_out, z.str() + "\n");
            emit(out_path, encode(z, params).str() + "\n", out);
            return kOk;
        }

        if (cmd_fragment->parsed()) {
            std::istringstream in(read_text_file(in_path));
            const BitString c = parse_bitstring(in);
            AdversaryAction action;
            Budget budget;
            if (!action_file.empty()) {
                action = parse_action(read_text_file(action_file));
                if (frag_src.file.empty() && frag_src.t && frag_src.s) {
                    budget = Budget{*frag_src.t, *frag_src.s};
                } else {
                    budget = frag_src.resolve().build().budget();
                }
            } else {
                if (strategy_name.empty()) throw Error(ErrorKind::Parameter, "give --strategy or --action-file");
                const auto kind = parse_strategy(strategy_name);
                if (!kind) throw Error(ErrorKind::Parameter, "unknown strategy '" + strategy_name + "'");
                const ParamsFile pf = frag_src.resolve();
                const CodeParams params = pf.build();
                if (c.size() != params.n())
                    throw Error(ErrorKind::Parameter, "codeword has " + std::to_string(c.size()) +
                                                          " bits, params expect n = " + std::to_string(params.n()));
                budget = params.budget();
                action = strategy(*kind, c, params, pick_seed(seed, pf), targets);
            }
            const FragmentMultiset fragments = apply_adversary(c, action, budget);
            if (!action_out.empty()) write_text_file(action_out, format_action(action));
            std::ostringstream text;
            write_fragments(text, fragments);
            emit(out_path, text.str(), out);
            return kOk;
        }

        if (cmd_decode->parsed()) {
            const CodeParams params = dec_src.resolve().build();
            std::istringstream in(read_text_file(in_path));
            const FragmentMultiset fragments = parse_fragments(in);
            try {
                const DecodeResult result = decode(fragments, params);
                const std::string report = decode_report(result.report, timings);
                if (report_path.empty())
                    err << report;
                else
                    write_text_file(report_path, report);
                emit(out_path, result.z.str() + "\n", out);
                return kOk;
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::DecodeFailed) throw;
                const std::string report = "status=decode-failed\ncause=" + std::string(to_string(e.cause())) + "\n";
                if (!report_path.empty()) write_text_file(report_path, report);
                err << "brc: " << e.what() << "\n";
                return exit_code(e);
            }
        }

        if (cmd_fuzz->parsed()) {
            const ParamsFile pf = fuzz_src.resolve();
            const CodeParams params = pf.build();
            FuzzConfig config;
            config.trials = trials;
            config.strategies = parse_strategy_list(strategies);
            config.seed = pick_seed(seed, pf);
            config.threads = threads;
            const FuzzReport report = run_fuzz(params, config);
            emit(out_path, format_fuzz_report(report, timings), out);
            return report.silent_wrong() || report.margin_violations() ? kFuzzFailure : kOk;
        }

        if (cmd_bounds->parsed()) {
            emit(out_path, bounds_csv(evaluate_grid(parse_grid(grid))), out);
            return kOk;
        }

        if (cmd_conf->parsed()) {
            const auto witness = confusability_witness(BitString(x), BitString(y), Budget{ct, cs});
            out << (witness ? "true" : "false") << "\n";
            if (witness) {
                out << "witness {";
                for (std::size_t i = 0; i < witness->size(); ++i) out << (i ? ", " : "") << (*witness)[i].str();
                out << "}\n";
            }
            return kOk;
        }

        if (cmd_markers->parsed()) {
            const CodeParams params = mark_src.resolve().build();
            const unsigned M = params.M();
            for (const auto& mk : params.book().markers())
                out << mk.index << ' ' << mk.bits.str() << ' ' << BitString::from_value(mk.beta.value, M).str() << '\n';
            return kOk;
        }
    } catch (const Error& e) {
        err << "brc: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return exit_code(e);
    }
    return kUsage;
}

}  // namespace brc::cli
