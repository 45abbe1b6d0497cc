// lef — exact computations for Lefschetz properties, Laplace equations,
// and line arrangements. See README.md for the input format.

#include "lef/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using lef::Json;

struct CommonOpts {
    std::string input_path;
    std::string output_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<std::uint64_t> prime;
    bool confirm_rational = false;
    bool table = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_input = true) {
    auto* in = cmd->add_option("-f,--input", opts.input_path,
                               "input document (JSON)");
    if (needs_input) in->required();
    cmd->add_option("-o,--output", opts.output_path,
                    "write the report here instead of stdout");
    cmd->add_option("--seed", opts.seed,
                    "seed for the sampling of general forms/points");
    cmd->add_option("--samples", opts.samples,
                    "samples per generic object (default 3)");
    cmd->add_option("--prime", opts.prime,
                    "run in Z/p for a prime p > 2^30 (acceleration)");
    cmd->add_flag("--confirm-rational", opts.confirm_rational,
                  "re-run in rational mode and cross-check the prime run");
    cmd->add_flag("--table", opts.table, "also print a plain key/value table");
}

lef::Sampler make_sampler(const lef::InputDocument& doc, const CommonOpts& opts) {
    const std::uint64_t seed =
        opts.seed ? *opts.seed
                  : doc.seed.value_or(lef::Sampler::default_seed);
    const int samples =
        opts.samples ? *opts.samples
                     : doc.samples.value_or(lef::Sampler::default_count);
    return lef::Sampler(seed, samples);
}

void print_table(const Json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (const auto& [key, val] : j.items())
            print_table(val, prefix.empty() ? key : prefix + "." + key, os);
    } else if (j.is_array()) {
        std::size_t idx = 0;
        for (const auto& val : j)
            print_table(val, prefix + "[" + std::to_string(idx++) + "]", os);
    } else {
        os << prefix << " = " << j.dump() << "\n";
    }
}

void emit_report(const Json& report, const CommonOpts& opts) {
    const std::string text = report.dump(2) + "\n";
    if (!opts.output_path.empty()) {
        std::ofstream out(opts.output_path);
        if (!out) throw lef::input_error("cannot write " + opts.output_path);
        out << text;
    } else {
        std::cout << text;
    }
    if (opts.table) print_table(report, "", std::cout);
}

/// Runs `body` (templated on the scalar field) under the configured field
/// mode. Rational mode is the default and authoritative. Prime mode needs
/// an explicit prime; verdict-grade commands additionally require
/// --confirm-rational, which re-runs rationally and records whether the
/// two agree (the rational results win on disagreement).
template <class Body>
Json run_with_field(const lef::InputDocument& doc, const CommonOpts& opts,
                    bool verdict_grade, Body&& body) {
    const bool prime_mode = opts.prime.has_value() || doc.prime_mode;
    const std::uint64_t prime =
        opts.prime ? *opts.prime : doc.prime;

    Json report;
    if (!prime_mode) {
        report["field_mode"] = "rational";
        report["results"] = body.template operator()<lef::Rational>();
        return report;
    }
    if (verdict_grade && !opts.confirm_rational)
        throw lef::input_error(
            "verdict-grade commands in prime mode require --confirm-rational "
            "(prime mode is an acceleration device; rational mode is "
            "authoritative)");

    Json prime_results;
    {
        lef::PrimeContext ctx(prime);
        prime_results = body.template operator()<lef::Fp>();
    }
    report["field_mode"] = Json{{"prime", prime}};
    if (opts.confirm_rational) {
        const Json rational_results = body.template operator()<lef::Rational>();
        report["results"] = rational_results;
        report["prime_results"] = prime_results;
        report["prime_cross_check"] =
            (prime_results == rational_results) ? "agree"
                                                : "disagree (rational wins)";
    } else {
        report["results"] = prime_results;
    }
    return report;
}

Json base_report(const std::string& command, const lef::InputDocument& doc,
                 const lef::Sampler& sampler) {
    Json j;
    j["command"] = command;
    j["input"] = lef::echo_input(doc);
    j["seed"] = sampler.seed();
    j["samples"] = sampler.count();
    return j;
}

// -- hilbert ---------------------------------------------------------------

template <class K>
Json results_hilbert(const lef::InputDocument& doc, long long t_min,
                     long long t_max) {
    Json values = Json::array();
    bool all_linear = true;
    for (const auto& g : doc.generators)
        all_linear = all_linear &&
                     g.coeffs.size() == static_cast<std::size_t>(doc.variables);
    if (all_linear) {
        const auto ideal = lef::build_power_ideal<K>(doc);
        for (long long t = t_min; t <= t_max; ++t)
            values.push_back(Json{{"t", t}, {"H", lef::hilbert(ideal, t)}});
    } else {
        const auto ideal = lef::build_equigenerated_ideal<K>(doc);
        for (long long t = t_min; t <= t_max; ++t)
            values.push_back(Json{{"t", t}, {"H", lef::hilbert(ideal, t)}});
    }
    return Json{{"hilbert", values}};
}

// -- slp / wlp ---------------------------------------------------------------

template <class K>
Json results_slp(const lef::InputDocument& doc, lef::Sampler sampler,
                 long long i, long long k) {
    const auto ideal = lef::build_equigenerated_ideal<K>(doc);
    return Json{{"slp", lef::json_of(lef::slp_check(ideal, i, k, sampler))}};
}

// -- unexpected ---------------------------------------------------------------

template <class K>
Json results_unexpected(const lef::InputDocument& doc, lef::Sampler sampler,
                        long long j) {
    const auto pts = lef::build_points<K>(doc);
    const lef::RingContext ctx(doc.variables);
    const auto scheme = lef::FatPointScheme<K>::reduced(ctx, pts);
    return Json{{"unexpected",
                 lef::json_of(lef::unexpected_curve_check(scheme, j, sampler))}};
}

// -- arrangement ---------------------------------------------------------------

template <class K>
Json results_arrangement(const lef::InputDocument& doc, lef::Sampler sampler,
                         std::optional<long long> t_max_opt, bool plot) {
    const auto arr = lef::build_arrangement<K>(doc);
    const auto z = lef::dual_points(arr);
    const long long n_lines = static_cast<long long>(arr.size());

    Json out;
    Json dual = Json::array();
    for (const auto& p : z.points) {
        Json coords = Json::array();
        for (const auto& c : p.coords) {
            if constexpr (lef::is_rational_field_v<K>)
                coords.push_back(lef::str(c));
            else
                coords.push_back(c.residue());
        }
        dual.push_back(coords);
    }
    out["dual_points"] = dual;
    out["max_aligned"] = lef::max_aligned(z);

    const long long char_bound = n_lines + 1;
    out["numerical_character"] =
        lef::json_of(lef::numerical_character(z.points, char_bound));

    try {
        lef::Sampler split_sampler = sampler;
        out["splitting_type"] =
            lef::json_of(lef::splitting_type(z, split_sampler));
    } catch (const lef::hypothesis_violation& e) {
        out["splitting_type"] = Json{{"skipped", e.what()}};
    }

    const long long t_max = t_max_opt.value_or(n_lines - 1);
    out["saito"] = lef::json_of(lef::saito_freeness(arr, t_max));
    out["lattice"] = lef::json_of(lef::intersection_lattice(arr));

    if (plot) {
        Json groups = Json::array();
        for (const auto& g : lef::collinearity_groups(z.points))
            groups.push_back(g);
        out["plot"] = Json{{"points", dual}, {"collinear_groups", groups}};
    }
    return out;
}

// -- verify ---------------------------------------------------------------

template <class K>
Json results_verify(const lef::InputDocument& doc, lef::Sampler sampler,
                    const std::string& which, std::optional<long long> i_opt,
                    std::optional<long long> k_opt,
                    std::optional<long long> j_opt,
                    std::optional<long long> d_opt) {
    const long long i = i_opt.value_or(0);
    const long long k = k_opt.value_or(2);

    if (which == "ei") {
        const auto ideal = lef::build_power_ideal<K>(doc);
        const long long j = j_opt.value_or(ideal.max_exponent());
        const auto rep = lef::ei_duality_report(ideal, j);
        return Json{{"which", which},
                    {"pass", rep.holds()},
                    {"ei", lef::json_of(rep)}};
    }
    if (which == "p1bis") {
        const auto ideal = lef::build_equigenerated_ideal<K>(doc);
        Json runs = Json::array();
        bool all = true;
        for (int t = 0; t < sampler.count(); ++t) {
            const auto l =
                sampler.template linear_form<K>(ideal.ctx.num_vars());
            const auto rep = lef::p1bis_check(ideal, l, i, k);
            all = all && rep.holds();
            runs.push_back(lef::json_of(rep));
        }
        return Json{{"which", which}, {"pass", all}, {"p1bis_runs", runs}};
    }
    if (which == "thgen") {
        const auto ideal = lef::build_equigenerated_ideal<K>(doc);
        const auto rep = lef::thgen_equivalence_check(ideal, i, k, sampler);
        return Json{{"which", which}, {"pass", rep.agree},
                    {"thgen", lef::json_of(rep)}};
    }
    if (which == "th_aligned") {
        const auto ideal = lef::build_power_ideal<K>(doc);
        if (!ideal.is_equigenerated())
            throw lef::input_error(
                "the alignment criterion needs one common exponent d");
        const long long d = d_opt.value_or(ideal.generators.front().second);
        std::vector<lef::LinearForm<K>> forms;
        for (const auto& [l, e] : ideal.generators) forms.push_back(l);
        const auto rep = lef::aligned_criterion_report(forms, d);
        return Json{{"which", which},
                    {"pass", rep.biconditional_holds()},
                    {"th_aligned", lef::json_of(rep)}};
    }
    if (which == "cor_unexp") {
        const auto pts = lef::build_points<K>(doc);
        const long long d =
            d_opt.value_or((static_cast<long long>(pts.size()) - 1) / 2);
        const auto rep = lef::cor_unexp_equivalence(pts, d, sampler);
        return Json{{"which", which},
                    {"pass", rep.consistent()},
                    {"cor_unexp", lef::json_of(rep)}};
    }
    if (which == "prop_bundle") {
        const auto arr = lef::build_arrangement<K>(doc);
        long long d;
        if (d_opt) {
            d = *d_opt;
        } else {
            if (doc.generators.empty())
                throw lef::input_error(
                    "prop_bundle needs --d or power-of-linear generators");
            d = doc.generators.front().power;
        }
        const auto rep = lef::prop_bundle_equivalence(arr, d, sampler);
        return Json{{"which", which},
                    {"pass", rep.consistent},
                    {"prop_bundle", lef::json_of(rep)}};
    }
    throw lef::input_error(
        "unknown check \"" + which +
        "\"; expected ei | p1bis | thgen | th_aligned | cor_unexp | prop_bundle");
}

// -- terao-compare ---------------------------------------------------------------

template <class K>
Json results_terao(const lef::InputDocument& doc_a,
                   const lef::InputDocument& doc_b, lef::Sampler sampler,
                   std::optional<long long> b_opt) {
    const auto arr_a = lef::build_arrangement<K>(doc_a);
    const auto arr_b = lef::build_arrangement<K>(doc_b);
    if (arr_a.size() != arr_b.size())
        throw lef::hypothesis_violation(
            "the arrangements have different numbers of lines");
    const long long b =
        b_opt.value_or((static_cast<long long>(arr_a.size()) - 1) / 2);
    if (static_cast<long long>(arr_a.size()) != 2 * b + 1)
        throw lef::input_error("expected 2b+1 lines for exponent b");

    const auto fp_a = lef::intersection_lattice(arr_a);
    const auto fp_b = lef::intersection_lattice(arr_b);
    if (!(fp_a == fp_b))
        throw lef::hypothesis_violation(
            "the two arrangements do not share their combinatorics "
            "(intersection-lattice fingerprints differ)");

    const auto z_a = lef::dual_points(arr_a);
    const auto z_b = lef::dual_points(arr_b);
    const long long aligned_a = lef::max_aligned(z_a);
    const long long aligned_b = lef::max_aligned(z_b);
    if (aligned_a > b + 1 || aligned_b > b + 1)
        throw lef::hypothesis_violation(
            "more than b+1 aligned dual points: the SLP form of the "
            "conjecture requires at most b+1");

    const auto make_ideal = [&](const lef::LineArrangement<K>& arr) {
        std::vector<std::pair<lef::LinearForm<K>, int>> gens;
        for (const auto& l : arr.lines)
            gens.emplace_back(l, static_cast<int>(b));
        return lef::PowerIdeal<K>(arr.ctx, std::move(gens)).as_equigenerated();
    };
    lef::Sampler sampler_b = sampler; // identical draws for both sides
    const auto slp_a = lef::slp_check(make_ideal(arr_a), 0, 2, sampler);
    const auto slp_b = lef::slp_check(make_ideal(arr_b), 0, 2, sampler_b);

    return Json{{"b", b},
                {"fingerprint_weak", fp_a.weak},
                {"combinatorics_equal", true},
                {"max_aligned_a", aligned_a},
                {"max_aligned_b", aligned_b},
                {"slp_a", lef::json_of(slp_a)},
                {"slp_b", lef::json_of(slp_b)},
                {"verdicts_agree", slp_a.fails == slp_b.fails}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Lefschetz-property, Laplace-equation and line-"
                 "arrangement computations"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::optional<long long> opt_i, opt_k, opt_j, opt_d, opt_tmin, opt_tmax;
    std::string verify_which;
    std::string input_b_path;
    std::optional<long long> opt_b;
    bool plot = false;

    auto* cmd_hilbert =
        app.add_subcommand("hilbert", "tabulate the Hilbert function of R/I");
    add_common(cmd_hilbert, opts);
    cmd_hilbert->add_option("--t-min", opt_tmin, "first degree (default 0)");
    cmd_hilbert->add_option("--t-max", opt_tmax, "last degree");

    auto* cmd_slp = app.add_subcommand(
        "slp", "SLP failure check for x L^k : A_{d+i-k} -> A_{d+i}");
    add_common(cmd_slp, opts);
    cmd_slp->add_option("-i", opt_i, "twist i (default 0)");
    cmd_slp->add_option("-k", opt_k, "range k (default 2)");

    auto* cmd_wlp =
        app.add_subcommand("wlp", "WLP failure check (slp with k = 1)");
    add_common(cmd_wlp, opts);
    cmd_wlp->add_option("-i", opt_i, "twist i (default 0)");

    auto* cmd_unexpected = app.add_subcommand(
        "unexpected", "unexpected-curve check for a point configuration");
    add_common(cmd_unexpected, opts);
    cmd_unexpected->add_option("-j", opt_j, "multiplicity of the general point")
        ->required();

    auto* cmd_arrangement = app.add_subcommand(
        "arrangement",
        "alignment, numerical character, splitting type, freeness, lattice");
    add_common(cmd_arrangement, opts);
    cmd_arrangement->add_option("--t-max", opt_tmax,
                                "degree bound for the freeness scan");
    cmd_arrangement->add_flag("--plot", plot,
                              "emit dual-point coordinates and collinear groups");

    auto* cmd_verify = app.add_subcommand(
        "verify", "run one of the oracle-equivalence checks");
    add_common(cmd_verify, opts);
    cmd_verify
        ->add_option("--which", verify_which,
                     "ei | p1bis | thgen | th_aligned | cor_unexp | prop_bundle")
        ->required();
    cmd_verify->add_option("-i", opt_i, "twist i (default 0)");
    cmd_verify->add_option("-k", opt_k, "range k (default 2)");
    cmd_verify->add_option("-j", opt_j, "degree j (ei duality)");
    cmd_verify->add_option("-d", opt_d, "degree d (th_aligned / cor_unexp / prop_bundle)");

    auto* cmd_terao = app.add_subcommand(
        "terao-compare",
        "compare SLP verdicts of two arrangements with equal combinatorics");
    add_common(cmd_terao, opts);
    cmd_terao->add_option("--input-b", input_b_path, "second arrangement")
        ->required();
    cmd_terao->add_option("--b-exponent", opt_b,
                          "exponent b (default (lines-1)/2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        const lef::InputDocument doc = lef::load_input(opts.input_path);
        const lef::Sampler sampler = make_sampler(doc, opts);

        Json report;
        if (cmd_hilbert->parsed()) {
            long long t_min = opt_tmin.value_or(0);
            long long t_max = opt_tmax.value_or(t_min + 12);
            if (t_max < t_min)
                throw lef::input_error("--t-max must be >= --t-min");
            report = base_report("hilbert", doc, sampler);
            report.update(run_with_field(
                doc, opts, /*verdict_grade=*/false, [&]<class K>() {
                    return results_hilbert<K>(doc, t_min, t_max);
                }));
        } else if (cmd_slp->parsed() || cmd_wlp->parsed()) {
            const long long i = opt_i.value_or(0);
            const long long k = cmd_wlp->parsed() ? 1 : opt_k.value_or(2);
            report = base_report(cmd_wlp->parsed() ? "wlp" : "slp", doc, sampler);
            report["options"] = Json{{"i", i}, {"k", k}};
            report.update(run_with_field(doc, opts, true, [&]<class K>() {
                return results_slp<K>(doc, sampler, i, k);
            }));
        } else if (cmd_unexpected->parsed()) {
            report = base_report("unexpected", doc, sampler);
            report["options"] = Json{{"j", *opt_j}};
            report.update(run_with_field(doc, opts, true, [&]<class K>() {
                return results_unexpected<K>(doc, sampler, *opt_j);
            }));
        } else if (cmd_arrangement->parsed()) {
            report = base_report("arrangement", doc, sampler);
            report.update(run_with_field(doc, opts, true, [&]<class K>() {
                return results_arrangement<K>(doc, sampler, opt_tmax, plot);
            }));
        } else if (cmd_verify->parsed()) {
            report = base_report("verify", doc, sampler);
            report["options"] = Json{{"which", verify_which}};
            report.update(run_with_field(doc, opts, true, [&]<class K>() {
                return results_verify<K>(doc, sampler, verify_which, opt_i,
                                         opt_k, opt_j, opt_d);
            }));
        } else if (cmd_terao->parsed()) {
            const lef::InputDocument doc_b = lef::load_input(input_b_path);
            report = base_report("terao-compare", doc, sampler);
            report["input_b"] = lef::echo_input(doc_b);
            report.update(run_with_field(doc, opts, true, [&]<class K>() {
                return results_terao<K>(doc, doc_b, sampler, opt_b);
            }));
        }
        emit_report(report, opts);
        return 0;
    } catch (const lef::internal_inconsistency& e) {
        std::cerr << "internal inconsistency (this is a bug): " << e.what()
                  << "\n";
        return 3;
    } catch (const lef::hypothesis_violation& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 2;
    } catch (const lef::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
