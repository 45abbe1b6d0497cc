#ifndef LEF_IO_HPP
#define LEF_IO_HPP

#include "lef/arrangements.hpp"

#include <json.hpp>

#include <fstream>
#include <optional>
#include <string>
#include <vector>

namespace lef {

using Json = nlohmann::json;

/// One generator: coefficient vector of a base form (its degree inferred
/// from the length) raised to a power. A plain linear form to the d-th
/// power has 'coeffs' of length n+1 and power d; a general form such as
/// a degree-3 monomial uses the full length-r_3 coefficient vector with
/// power 1.
struct GeneratorSpec {
    std::vector<Rational> coeffs;
    int power = 1;
};

/// Parsed, normalized input document.
struct InputDocument {
    int variables = 3;
    bool prime_mode = false;
    std::uint64_t prime = 0;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::vector<GeneratorSpec> generators;
    std::vector<std::vector<Rational>> arrangement;
    std::vector<std::vector<Rational>> points;
};

namespace detail {

inline std::vector<Rational> parse_rational_list(const Json& j,
                                                 const std::string& where) {
    if (!j.is_array())
        throw input_error(where + ": expected an array of rational strings");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& x : j) {
        if (x.is_string())
            out.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer())
            out.push_back(Rational(x.get<long long>()));
        else
            throw input_error(where + ": entries must be strings like \"-3/7\" "
                                      "or integers");
    }
    return out;
}

} // namespace detail

inline InputDocument parse_input(const Json& j) {
    if (!j.is_object()) throw input_error("input document must be a JSON object");
    InputDocument doc;
    if (j.contains("variables")) {
        if (!j["variables"].is_number_integer() || j["variables"].get<int>() < 1)
            throw input_error("field \"variables\": positive integer expected");
        doc.variables = j["variables"].get<int>();
    }
    if (j.contains("field")) {
        const auto& f = j["field"];
        if (f.is_string() && f.get<std::string>() == "rational") {
            doc.prime_mode = false;
        } else if (f.is_object() && f.contains("prime")) {
            doc.prime_mode = true;
            doc.prime = f["prime"].get<std::uint64_t>();
        } else {
            throw input_error(
                "field \"field\": \"rational\" or {\"prime\": p} expected");
        }
    }
    if (j.contains("seed")) doc.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples")) doc.samples = j["samples"].get<int>();
    if (j.contains("generators")) {
        if (!j["generators"].is_array())
            throw input_error("field \"generators\": array expected");
        for (std::size_t g = 0; g < j["generators"].size(); ++g) {
            const auto& jg = j["generators"][g];
            const std::string where = "generators[" + std::to_string(g) + "]";
            if (!jg.is_object() || !jg.contains("coeffs"))
                throw input_error(where + ": object with \"coeffs\" expected");
            GeneratorSpec spec;
            spec.coeffs = detail::parse_rational_list(jg["coeffs"], where);
            if (jg.contains("power")) spec.power = jg["power"].get<int>();
            if (spec.power < 1)
                throw input_error(where + ": power must be >= 1");
            doc.generators.push_back(std::move(spec));
        }
    }
    if (j.contains("arrangement")) {
        if (!j["arrangement"].is_array())
            throw input_error("field \"arrangement\": array expected");
        for (std::size_t i = 0; i < j["arrangement"].size(); ++i)
            doc.arrangement.push_back(detail::parse_rational_list(
                j["arrangement"][i], "arrangement[" + std::to_string(i) + "]"));
    }
    if (j.contains("points")) {
        if (!j["points"].is_array())
            throw input_error("field \"points\": array expected");
        for (std::size_t i = 0; i < j["points"].size(); ++i)
            doc.points.push_back(detail::parse_rational_list(
                j["points"][i], "points[" + std::to_string(i) + "]"));
    }
    return doc;
}

inline InputDocument load_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open input file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("JSON parse error in " + path + ": " + e.what());
    }
    return parse_input(j);
}

namespace detail {

/// Degree t with dim R_t equal to the given coefficient count.
inline int degree_from_length(const RingContext& ctx, std::size_t len,
                              const std::string& where) {
    for (int t = 0; t <= 64; ++t)
        if (static_cast<std::size_t>(ctx.dim_of_degree(t)) == len) return t;
    throw input_error(where + ": coefficient count " + std::to_string(len) +
                      " is not the dimension of any graded piece");
}

} // namespace detail

template <class K>
std::vector<K> convert_coeffs(const std::vector<Rational>& src) {
    std::vector<K> out;
    out.reserve(src.size());
    for (const auto& q : src) out.push_back(scalar_from_rational<K>(q));
    return out;
}

/// Generators as (linear form, exponent) pairs; every base form must be
/// linear.
template <class K>
PowerIdeal<K> build_power_ideal(const InputDocument& doc) {
    if (doc.generators.empty())
        throw input_error("this command needs a \"generators\" section");
    const RingContext ctx(doc.variables);
    std::vector<std::pair<LinearForm<K>, int>> gens;
    for (std::size_t g = 0; g < doc.generators.size(); ++g) {
        if (doc.generators[g].coeffs.size() !=
            static_cast<std::size_t>(doc.variables))
            throw input_error(
                "generators[" + std::to_string(g) +
                "]: this command needs powers of linear forms (coefficient "
                "count must equal the variable count)");
        gens.emplace_back(
            LinearForm<K>(convert_coeffs<K>(doc.generators[g].coeffs)),
            doc.generators[g].power);
    }
    return PowerIdeal<K>(ctx, std::move(gens));
}

/// Generators as arbitrary forms raised to powers; all final degrees must
/// agree.
template <class K>
EquigeneratedIdeal<K> build_equigenerated_ideal(const InputDocument& doc) {
    if (doc.generators.empty())
        throw input_error("this command needs a \"generators\" section");
    const RingContext ctx(doc.variables);
    std::vector<HomogeneousForm<K>> gens;
    int degree = -1;
    for (std::size_t g = 0; g < doc.generators.size(); ++g) {
        const std::string where = "generators[" + std::to_string(g) + "]";
        const int base_deg = detail::degree_from_length(
            ctx, doc.generators[g].coeffs.size(), where);
        if (base_deg < 1)
            throw input_error(where + ": constant generators are not allowed");
        HomogeneousForm<K> base(ctx, base_deg);
        base.coeffs = convert_coeffs<K>(doc.generators[g].coeffs);
        HomogeneousForm<K> f = base;
        for (int p = 1; p < doc.generators[g].power; ++p)
            f = multiply(ctx, f, base);
        if (degree < 0) degree = f.degree;
        if (f.degree != degree)
            throw input_error(where + ": generator degrees disagree (" +
                              std::to_string(f.degree) + " vs " +
                              std::to_string(degree) + ")");
        gens.push_back(std::move(f));
    }
    return EquigeneratedIdeal<K>(ctx, degree, std::move(gens));
}

template <class K>
LineArrangement<K> build_arrangement(const InputDocument& doc) {
    std::vector<LinearForm<K>> lines;
    if (!doc.arrangement.empty()) {
        for (const auto& c : doc.arrangement)
            lines.emplace_back(convert_coeffs<K>(c));
    } else if (!doc.generators.empty()) {
        // powers of linear forms double as an arrangement description
        for (std::size_t g = 0; g < doc.generators.size(); ++g) {
            if (doc.generators[g].coeffs.size() !=
                static_cast<std::size_t>(doc.variables))
                throw input_error("generators[" + std::to_string(g) +
                                  "]: not a linear form");
            lines.emplace_back(convert_coeffs<K>(doc.generators[g].coeffs));
        }
    } else {
        throw input_error("this command needs an \"arrangement\" section");
    }
    return LineArrangement<K>(std::move(lines));
}

/// Point configuration: explicit "points", else dual points of the
/// arrangement or of the linear generators.
template <class K>
std::vector<Point<K>> build_points(const InputDocument& doc) {
    std::vector<Point<K>> pts;
    if (!doc.points.empty()) {
        for (const auto& c : doc.points)
            pts.emplace_back(convert_coeffs<K>(c));
    } else if (!doc.arrangement.empty()) {
        for (const auto& c : doc.arrangement)
            pts.emplace_back(convert_coeffs<K>(c));
    } else if (!doc.generators.empty()) {
        for (const auto& g : doc.generators) {
            if (g.coeffs.size() != static_cast<std::size_t>(doc.variables))
                throw input_error("generators must be linear to dualize into points");
            pts.emplace_back(convert_coeffs<K>(g.coeffs));
        }
    } else {
        throw input_error(
            "this command needs \"points\", an \"arrangement\", or linear "
            "\"generators\"");
    }
    return pts;
}

// ---------------------------------------------------------------------------
// report serialization
// ---------------------------------------------------------------------------

inline std::string str(const Rational& q) { return q.str(); }

inline Json json_of(const NsTriple& t) {
    return Json{{"N_s", t.n_s},   {"N_plus", t.n_plus}, {"N_minus", t.n_minus},
                {"r", t.r},       {"i", t.i},           {"k", t.k},
                {"d", t.d},       {"s", t.s}};
}

inline Json json_of(const LefschetzReport& r) {
    Json j{{"k", r.k},
           {"i", r.i},
           {"degree", r.degree},
           {"s", r.s},
           {"dim_source", r.dim_source},
           {"dim_target", r.dim_target},
           {"rank", r.rank},
           {"dim_ker", r.dim_ker},
           {"dim_coker", r.dim_coker},
           {"delta", r.delta},
           {"fails", r.fails},
           {"samples_used", r.samples_used},
           {"ns_identity_applies", r.ns_identity_applies},
           {"ns", json_of(r.ns)}};
    return j;
}

inline Json json_of(const EiReport& r) {
    return Json{{"j", r.j},
                {"algebra_side", r.algebra_side},
                {"fat_point_side", r.fat_point_side},
                {"holds", r.holds()}};
}

inline Json json_of(const UnexpectedCurveReport& r) {
    return Json{{"j", r.j},
                {"curve_degree", r.j + 1},
                {"actual", r.actual},
                {"expected", r.expected},
                {"h0_without_point", r.h0_without_point},
                {"has_unexpected", r.has_unexpected},
                {"samples_used", r.samples_used}};
}

inline Json json_of(const OsculatingReport& r) {
    return Json{{"order", r.order_m},
                {"ambient_dim", r.ambient_dim},
                {"expected_dim", r.expected_dim},
                {"actual_dim", r.actual_dim},
                {"delta_total", r.delta_total},
                {"trivial_count", r.trivial_count},
                {"nontrivial_count", r.nontrivial_count},
                {"samples_used", r.samples_used}};
}

inline Json json_of(const P1bisReport& r) {
    return Json{{"s", r.s},
                {"thickened",
                 Json{{"dim_source", r.thick_dim_source},
                      {"dim_target", r.thick_dim_target},
                      {"rank", r.thick_rank},
                      {"dim_ker", r.thick_ker},
                      {"dim_coker", r.thick_coker}}},
                {"times_L_power",
                 Json{{"dim_source", r.times_dim_source},
                      {"dim_target", r.times_dim_target},
                      {"rank", r.times_rank},
                      {"dim_ker", r.times_ker},
                      {"dim_coker", r.times_coker}}},
                {"coker_match", r.coker_match},
                {"ker_offset_match", r.ker_offset_match},
                {"holds", r.holds()}};
}

inline Json json_of(const ThgenReport& r) {
    return Json{{"delta_rank", r.delta_rank},
                {"delta_ker", r.delta_ker},
                {"delta_coker", r.delta_coker},
                {"delta_laplace", r.delta_laplace},
                {"laplace_route_direct", r.laplace_route_direct},
                {"delta_intersection", r.delta_intersection},
                {"agree", r.agree}};
}

inline Json json_of(const CorUnexpReport& r) {
    return Json{{"d", r.d},
                {"unexpected_curve", r.unexpected_curve},
                {"slp_fails", r.slp_fails},
                {"laplace_positive", r.laplace_positive},
                {"consistent", r.consistent()},
                {"curve", json_of(r.curve)},
                {"slp", json_of(r.slp)},
                {"laplace", json_of(r.laplace)}};
}

inline Json json_of(const AlignedCriterionReport& r) {
    return Json{{"power_rank", r.power_rank},
                {"rank_deficient", r.rank_deficient},
                {"max_aligned", r.max_aligned},
                {"too_many_aligned", r.too_many_aligned},
                {"biconditional_holds", r.biconditional_holds()}};
}

inline Json json_of(const SplittingType& s) {
    return Json{{"a", s.a}, {"b", s.b}};
}

inline Json json_of(const NumericalCharacter& c) {
    return Json{{"s", c.s}, {"entries", c.entries}};
}

inline Json json_of(const SaitoReport& r) {
    Json j{{"free", r.free},
           {"a", r.a},
           {"b", r.b},
           {"kernel_dims", r.kernel_dims},
           {"pattern_ok", r.pattern_ok},
           {"determinant_ok", r.determinant_ok}};
    return j;
}

inline Json json_of(const LatticeFingerprint& f) {
    return Json{{"weak", f.weak},
                {"value", f.value},
                {"point_multiplicities", f.point_multiplicities}};
}

inline Json json_of(const PropBundleReport& r) {
    return Json{{"d", r.d},
                {"n", r.n},
                {"fails_slp", r.fails_slp},
                {"splitting", json_of(r.split)},
                {"splitting_gap", r.splitting_gap},
                {"non_balanced", r.non_balanced},
                {"chern_even", r.chern_even},
                {"consistent", r.consistent},
                {"slp", json_of(r.slp)}};
}

/// Normalized echo of the parsed input, so a report pins down exactly
/// what was computed.
inline Json echo_input(const InputDocument& doc) {
    Json j;
    j["variables"] = doc.variables;
    if (doc.prime_mode)
        j["field"] = Json{{"prime", doc.prime}};
    else
        j["field"] = "rational";
    if (!doc.generators.empty()) {
        Json gens = Json::array();
        for (const auto& g : doc.generators) {
            Json coeffs = Json::array();
            for (const auto& q : g.coeffs) coeffs.push_back(str(q));
            gens.push_back(Json{{"coeffs", coeffs}, {"power", g.power}});
        }
        j["generators"] = gens;
    }
    if (!doc.arrangement.empty()) {
        Json arr = Json::array();
        for (const auto& line : doc.arrangement) {
            Json coeffs = Json::array();
            for (const auto& q : line) coeffs.push_back(str(q));
            arr.push_back(coeffs);
        }
        j["arrangement"] = arr;
    }
    if (!doc.points.empty()) {
        Json pts = Json::array();
        for (const auto& p : doc.points) {
            Json coeffs = Json::array();
            for (const auto& q : p) coeffs.push_back(str(q));
            pts.push_back(coeffs);
        }
        j["points"] = pts;
    }
    return j;
}

} // namespace lef

#endif // LEF_IO_HPP
