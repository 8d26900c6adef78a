#pragma once

// Command-line front end. Every command maps flags and input files to
// output bytes and an exit code: 0 success, 1 a check failed (the report is
// still written), 2 bad input, 3 an internal invariant broke.

#include "json_io.hpp"
#include "svg.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace nestofan::cli {

enum ExitCode : int { success = 0, check_failed = 1, input_error = 2, internal_error = 3 };

struct Options {
    long d = 0;
    long n = 0;
    std::string labels;
    std::string weights;
    std::string building_set;
    std::string fan;
    std::string out;
    std::string format = "json";
    std::uint64_t seed = 0;
    std::size_t trials = 100;
    std::string d_range;
    std::string n_range;
    bool timing = false;
    std::string what;
};

inline json read_json(const std::string& path) {
    if (path.empty()) throw InputError("missing input file");
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
}

inline void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw InputError("cannot write " + o.out);
    file << text;
}

inline int emit_fan(const Fan& f, const Options& o, std::ostream& out) {
    emit(o.format == "svg" ? render_svg(f) : dump(fan_to_json(f)), o, out);
    return success;
}

inline int emit_report(const Report& r, const Options& o, std::ostream& out) {
    emit(dump(report_to_json(r)), o, out);
    return r.ok() ? success : check_failed;
}

inline void require_dn(const Options& o) {
    if (o.d == 0 && o.n == 0) throw InputError("--d and --n are required");
    if (o.d < 1) throw InputError("requires d >= 1");
    if (o.n <= o.d + 2) throw InputError("requires n > d+2");
}

/// "a..b", "a,b,c", "a" or "" (empty).
inline std::vector<long> parse_range(const std::string& text) {
    std::vector<long> out;
    if (text.empty()) return out;
    auto number = [&](const std::string& s) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size()) throw InputError("malformed range '" + text + "'");
        return v;
    };
    if (auto dots = text.find(".."); dots != std::string::npos) {
        const long lo = number(text.substr(0, dots)), hi = number(text.substr(dots + 2));
        for (long v = lo; v <= hi; ++v) out.push_back(v);
        return out;
    }
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(number(part));
    return out;
}

inline std::vector<Label> parse_labels(const std::string& text) {
    std::vector<Label> out;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) out.push_back(Label::parse(part));
    return out;
}

// ------------------------------------------------------------------ commands

inline int cmd_simplex_fan(const Options& o, std::ostream& out) {
    std::vector<Label> labels;
    if (!o.labels.empty())
        labels = parse_labels(o.labels);
    else
        for (long i = 1; i <= o.n; ++i) labels.push_back(Label::simple(i));
    return emit_fan(simplex_fan(labels), o, out);
}

inline int cmd_verify(const Options& o, std::ostream& out) {
    if (o.what == "thm1") {
        require_dn(o);
        return emit_report(verify_thm1_report(o.d, o.n), o, out);
    }
    if (o.what == "thm2") return emit_report(verify_thm2_report(weight_vector_from_json(read_json(o.weights))), o, out);
    if (o.what == "thm3") {
        Report r;
        if (!o.weights.empty()) {
            const WeightVector A = weight_vector_from_json(read_json(o.weights));
            r = verify_thm3_part1(A);
            const Report part2 = verify_thm3_part2_report(A);
            r.checks.insert(r.checks.end(), part2.checks.begin(), part2.checks.end());
        } else if (o.d == 1 && o.n == 3) {
            r = verify_thm3_part1(1, 3, {});
        } else {
            require_dn(o);
            const WeightVector A = lm_weights(o.d, o.n);
            r = verify_thm3_part1(A);
            const Report part2 = verify_thm3_part2_report(A);
            r.checks.insert(r.checks.end(), part2.checks.begin(), part2.checks.end());
        }
        return emit_report(r, o, out);
    }
    if (o.what == "lemma") {
        if (!o.fan.empty()) return emit_report(verify_lemma_report(fan_from_json(read_json(o.fan))), o, out);
        require_dn(o);
        return emit_report(verify_lemma_report(blowup_fan(lm_weights(o.d, o.n))), o, out);
    }
    if (o.what == "order")
        return emit_report(verify_order_report(building_set_from_json(read_json(o.building_set)), o.trials, o.seed), o,
                           out);
    if (o.what == "oracle")
        return emit_report(verify_oracle_report(building_set_from_json(read_json(o.building_set)), o.seed), o, out);
    throw InputError("unknown check '" + o.what + "' (thm1, thm2, thm3, lemma, order, oracle)");
}

/// Rough cost of one sweep instance in milliseconds: m! 2^rank / 10 with
/// m = n-d-1 light points and rank d(m-1).
inline double sweep_estimate_ms(long d, long n) {
    const long m = n - d - 1;
    double factorial = 1;
    for (long k = 2; k <= m; ++k) factorial *= static_cast<double>(k);
    return factorial * std::pow(2.0, static_cast<double>(d * (m - 1))) / 10 + 5;
}

inline int cmd_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<std::pair<long, long>> instances;
    for (long d : parse_range(o.d_range))
        for (long n : parse_range(o.n_range))
            if (d >= 1 && n > d + 2) instances.emplace_back(d, n);
    double estimate = 0;
    for (auto [d, n] : instances) estimate += sweep_estimate_ms(d, n);
    double budget = 600000;
    if (const char* env = std::getenv("NESTOFAN_BUDGET_MS")) {
        char* end = nullptr;
        budget = std::strtod(env, &end);
        if (end == env || *end != '\0' || budget < 0) throw InputError("NESTOFAN_BUDGET_MS must be a number");
    }
    if (estimate > budget) {
        err << "sweep refused: estimated " << static_cast<long long>(estimate) << " ms exceeds the budget of "
            << static_cast<long long>(budget) << " ms\n";
        return input_error;
    }
    json list = json::array();
    bool all = true;
    for (auto [d, n] : instances) {
        const auto start = std::chrono::steady_clock::now();
        Report r = verify_thm1_report(d, n);
        const Fan f = blowup_fan(lm_weights(d, n));
        r.add("join_lemma", verify_lemma_join(f));
        const BuildingSet sym = sym_building_set(complete_building_set(d + 2, n), d);
        const auto count = schedule_count(subdivision_schedule(sym), 5000);
        r.add("order_independent", order_independence_check(sym, o.trials, o.seed),
              count <= 5000 ? "all " + std::to_string(count) + " schedules"
                            : std::to_string(o.trials) + " sampled schedules");
        json entry = report_to_json(r);
        entry["pass"] = r.ok();
        if (o.timing)
            entry["ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        all = all && r.ok();
        list.push_back(std::move(entry));
    }
    emit(dump({{"instances", list}, {"pass", all}}), o, out);
    return all ? success : check_failed;
}

// ---------------------------------------------------------------------- run

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"nested fans, symmetric products and weighted blow-up fans"};
    app.require_subcommand(1);
    Options o;
    auto format_option = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
    };
    auto common = [&](CLI::App* sub) {
        sub->add_option("--out", o.out, "output file (default: stdout)");
        sub->add_option("--seed", o.seed, "random seed");
    };

    auto* simplex = app.add_subcommand("simplex-fan", "fan of the simplex on the given labels");
    simplex->add_option("--labels", o.labels, "comma-separated labels, e.g. 3,4,5");
    simplex->add_option("--n", o.n, "use labels 1..n");
    common(simplex);
    format_option(simplex);

    auto* nested = app.add_subcommand("nested-fan", "nested fan of a building set");
    nested->add_option("--building-set", o.building_set, "building set JSON")->required();
    common(nested);
    format_option(nested);

    auto* symprod = app.add_subcommand("symprod", "fan of the d-th symmetric product of a building set");
    symprod->add_option("--building-set", o.building_set, "connected plain building set JSON")->required();
    symprod->add_option("--d", o.d, "number of factors")->required();
    common(symprod);
    format_option(symprod);

    auto* lm = app.add_subcommand("lm-fan", "blow-up fan of the Losev-Manin weights");
    lm->add_option("--d", o.d)->required();
    lm->add_option("--n", o.n)->required();
    common(lm);
    format_option(lm);

    auto* blowup = app.add_subcommand("blowup-fan", "blow-up fan of a weight vector in the toric chamber");
    blowup->add_option("--weights", o.weights, "weight vector JSON")->required();
    common(blowup);
    format_option(blowup);

    auto* verify = app.add_subcommand("verify", "run a check and write its report");
    verify->add_option("what", o.what, "thm1 | thm2 | thm3 | lemma | order | oracle")->required();
    verify->add_option("--d", o.d);
    verify->add_option("--n", o.n);
    verify->add_option("--weights", o.weights, "weight vector JSON");
    verify->add_option("--building-set", o.building_set, "building set JSON");
    verify->add_option("--fan", o.fan, "fan JSON");
    verify->add_option("--trials", o.trials, "sampled schedules when there are too many to try all");
    common(verify);

    auto* render = app.add_subcommand("render", "SVG picture of a rank-2 fan");
    render->add_option("--fan", o.fan, "fan JSON")->required();
    common(render);

    auto* sweep = app.add_subcommand("sweep", "first theorem, join lemma and order independence over a grid");
    sweep->add_option("--d-range", o.d_range, "e.g. 1..3");
    sweep->add_option("--n-range", o.n_range, "e.g. 5..8");
    sweep->add_option("--trials", o.trials, "sampled schedules per instance");
    sweep->add_flag("--timing", o.timing, "record wall time per instance");
    common(sweep);

    std::vector<std::string> storage{"nestofan"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : storage) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return success;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return input_error;
    }

    try {
        if (*simplex) return cmd_simplex_fan(o, out);
        if (*nested) return emit_fan(nested_fan(building_set_from_json(read_json(o.building_set))), o, out);
        if (*symprod) {
            const BuildingSet b = building_set_from_json(read_json(o.building_set));
            return emit_fan(sym_fan(b, o.d), o, out);
        }
        if (*lm) {
            require_dn(o);
            return emit_fan(blowup_fan(lm_weights(o.d, o.n)), o, out);
        }
        if (*blowup) return emit_fan(blowup_fan(weight_vector_from_json(read_json(o.weights))), o, out);
        if (*verify) return cmd_verify(o, out);
        if (*render) {
            emit(render_svg(fan_from_json(read_json(o.fan))), o, out);
            return success;
        }
        if (*sweep) return cmd_sweep(o, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
    return input_error;
}

inline int run(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

}  // namespace nestofan::cli
