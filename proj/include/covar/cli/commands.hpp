// Subcommands of the covar CLI. Each takes the parsed JSON input and the
// global options and returns the JSON report plus an exit code.
#ifndef COVAR_CLI_COMMANDS_HPP
#define COVAR_CLI_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "covar/cli/json_io.hpp"
#include "covar/cli/suites.hpp"
#include "covar/covariant.hpp"
#include "covar/integrals.hpp"
#include "covar/orbits.hpp"
#include "covar/transvectant.hpp"

namespace covar::cli {

using io::json;

struct Options {
    std::uint64_t seed = 0;
    int depth_cap = 8;
    std::optional<int> d, mmax, trials, n, m, r;
};

struct Outcome {
    json body;
    int exit_code = 0;
};

inline json report_json(const SpanReport& r) {
    json out = {{"point", io::to_json(r.point)},
                {"family", r.family},
                {"span", io::to_json(r.span)},
                {"saturated", r.saturated},
                {"contains_point", r.contains_point},
                {"points", r.points}};
    if (r.rounds > 0) out["rounds"] = r.rounds;
    if (r.matches_candidate) out["matches_candidate"] = *r.matches_candidate;
    return out;
}

inline json report_json(const NullformReport& r) {
    return {{"is_null", r.is_null}, {"max_multiplicity", r.max_multiplicity}, {"y_multiplicity", r.y_multiplicity}};
}

/// A covariant V_d -> (...) from the family vocabulary:
///   "id" | {"kind": "tau", "r": r} | "phi0_odd" | "phi0_even" | "ad_phi0" |
///   "alpha_phi0" | "psi" | {"kind": "transvect", "a": spec, "b": spec, "r": r} |
///   {"kind": "phis", "phi": spec, "psi": spec, "s": s}
inline Covariant parse_covariant(const json& j, int d, const std::string& field, int depth = 0) {
    if (depth > 16) throw InputError("covariant description nested too deeply", field);
    std::string kind;
    if (j.is_string()) kind = j.get<std::string>();
    else if (j.is_object() && j.contains("kind") && j.at("kind").is_string()) kind = j.at("kind").get<std::string>();
    else throw InputError("expected a covariant name or {\"kind\", ...}", field);
    auto sub = [&](const char* key) { return parse_covariant(io::require(j, key, field), d, io::join_path(field, key), depth + 1); };
    auto num = [&](const char* key, long long lo, long long hi) {
        return static_cast<int>(io::parse_int(io::require(j, key, field), io::join_path(field, key), lo, hi));
    };
    if (kind == "id") return cov_identity(d);
    if (kind == "tau") return cov_tau(d, num("r", 0, d));
    if (kind == "phi0_odd") return cov_phi0_odd(d);
    if (kind == "phi0_even") return cov_phi0_even(d);
    if (kind == "ad_phi0") return cov_ad_phi0(d);
    if (kind == "alpha_phi0") return cov_alpha_phi0(d);
    if (kind == "psi") return cov_psi(d);
    if (kind == "transvect") {
        auto a = sub("a"), b = sub("b");
        return cov_transvect(a, b, num("r", 0, 128));
    }
    if (kind == "phis") {
        auto phi = sub("phi"), psi = sub("psi");
        return cov_phis(phi, psi, num("s", 0, 256));
    }
    throw InputError("unknown covariant kind '" + kind + "'", field);
}

inline FieldFamily parse_family(const json& j, const std::string& field) {
    if (j.is_string()) return builtin_family(j.get<std::string>());
    if (!j.is_object()) throw InputError("expected a family name or {\"vars\", \"fields\"}", field);
    const json& vj = io::require(j, "vars", field);
    if (!vj.is_array() || vj.empty() || vj.size() > 64)
        throw InputError("expected 1..64 variable names", io::join_path(field, "vars"));
    std::vector<std::string> names;
    for (std::size_t i = 0; i < vj.size(); ++i) {
        if (!vj[i].is_string() || vj[i].get<std::string>().empty())
            throw InputError("expected a variable name", io::index_path(io::join_path(field, "vars"), i));
        auto s = vj[i].get<std::string>();
        if (std::find(names.begin(), names.end(), s) != names.end())
            throw InputError("duplicate variable '" + s + "'", io::index_path(io::join_path(field, "vars"), i));
        names.push_back(s);
    }
    auto vars = make_vars(names);
    const json& fj = io::require(j, "fields", field);
    if (!fj.is_array()) throw InputError("expected a list of fields", io::join_path(field, "fields"));
    std::vector<VectorField> fields;
    for (std::size_t i = 0; i < fj.size(); ++i) {
        const auto at = io::index_path(io::join_path(field, "fields"), i);
        const json* comps = &fj[i];
        std::string name = "xi" + std::to_string(i);
        if (fj[i].is_object()) {
            comps = &io::require(fj[i], "components", at);
            if (fj[i].contains("name") && fj[i].at("name").is_string()) name = fj[i].at("name").get<std::string>();
        }
        if (!comps->is_array() || comps->size() != names.size())
            throw InputError("expected " + std::to_string(names.size()) + " components", at);
        std::vector<MultiPoly> phi;
        for (std::size_t k = 0; k < comps->size(); ++k) phi.push_back(io::parse_poly((*comps)[k], vars, io::index_path(at, k)));
        fields.push_back(field_from_endo(vars, phi, name));
    }
    return make_family("custom", vars, std::move(fields));
}

inline Outcome cmd_transvect(const json& in, const Options&) {
    auto f = io::parse_form(io::require(in, "f", ""), "f");
    auto h = io::parse_form(io::require(in, "h", ""), "h");
    int r = static_cast<int>(io::parse_int(io::require(in, "r", ""), "r", 0, std::min(f.degree(), h.degree())));
    return {io::to_json(transvection(f, h, r))};
}

inline Outcome cmd_cmr(const json& in, const Options& opt) {
    auto value = [&](const std::optional<int>& flag, const char* key) {
        if (flag) {
            if (*flag < 0 || *flag > 200) throw InputError("value out of range [0, 200]", key);
            return *flag;
        }
        return static_cast<int>(io::parse_int(io::require(in, key, ""), key, 0, 200));
    };
    int m = value(opt.m, "m");
    if (m < 1) throw InputError("m must be at least 1", "m");
    int r = value(opt.r, "r");
    json out = {{"m", m}, {"r", r}, {"cmr_sum", cmr_sum(m, r).str()}};
    if (r % 2 == 0 && r < 2 * m) out["cmr_closed"] = cmr_closed(m, r / 2).str();
    if (r == m) out["konvalinka"] = konvalinka_cmm(m).str();
    return {out};
}

inline Outcome cmd_nullform(const json& in, const Options&) {
    auto f = in.is_object() && in.contains("form") ? io::parse_form(in.at("form"), "form") : io::parse_form(in, "form");
    auto out = report_json(is_nullform(f));
    out["degree"] = f.degree();
    return {out};
}

inline Outcome cmd_span(const json& in, const Options& opt) {
    if (in.is_object() && in.contains("theorem")) {
        const json& tj = in.at("theorem");
        if (!tj.is_string()) throw InputError("expected \"odd\", \"4m\" or \"2mod4\"", "theorem");
        int d = static_cast<int>(io::parse_int(io::require(in, "d", ""), "d", 1, io::max_form_degree));
        auto which = tj.get<std::string>();
        TheoremInstance t;
        if (which == "odd") t = theorem_odd(d);
        else if (which == "4m") t = theorem_4m(d);
        else if (which == "2mod4") t = theorem_2mod4(d);
        else throw InputError("unknown theorem case '" + which + "'", "theorem");
        auto cert = certify_minimal_symmetric(t.family, t.point, t.subspace);
        return {suite::certificate_json(cert, t), cert.certified() ? 0 : 1};
    }
    auto point = io::parse_form(io::require(in, "point", ""), "point");
    const int d = point.degree();
    const json& fj = io::require(in, "family", "");
    if (!fj.is_array() || fj.empty()) throw InputError("expected a non-empty list of covariants", "family");
    std::vector<Covariant> family;
    for (std::size_t i = 0; i < fj.size(); ++i) family.push_back(parse_covariant(fj[i], d, io::index_path("family", i)));
    std::string mode = "family";
    if (in.contains("mode")) {
        if (!in.at("mode").is_string()) throw InputError("expected \"family\" or \"orbit\"", "mode");
        mode = in.at("mode").get<std::string>();
        if (mode != "family" && mode != "orbit") throw InputError("expected \"family\" or \"orbit\"", "mode");
    }
    SpanReport rep;
    if (mode == "family") {
        rep = family_span(family, point);
    } else {
        std::vector<Generator> gens;
        for (const auto& c : family) gens.push_back(generator_from(c));
        rep = orbit_closure(gens, point.coeffs(), opt.depth_cap);
    }
    const bool certify = in.contains("certify") && in.at("certify").is_boolean() && in.at("certify").get<bool>();
    if (certify && (!in.contains("candidate") || mode != "family"))
        throw InputError("certification needs a candidate subspace and family mode", "certify");
    if (in.contains("candidate")) {
        const json& cj = in.at("candidate");
        Subspace w;
        if (cj.is_string() && cj.get<std::string>() == "vplus") w = subspace_vplus(d);
        else if (cj.is_string() && cj.get<std::string>() == "vplusplus") w = subspace_vplusplus(d);
        else if (cj.is_array()) {
            std::vector<Vec> rows;
            for (std::size_t i = 0; i < cj.size(); ++i) {
                rows.push_back(io::parse_vec(cj[i], io::index_path("candidate", i)));
                if (rows.back().size() != point.coeffs().size())
                    throw InputError("basis vector has the wrong length", io::index_path("candidate", i));
            }
            w = span_reduce(rows, point.coeffs().size());
        } else {
            throw InputError("expected \"vplus\", \"vplusplus\" or a list of basis vectors", "candidate");
        }
        if (certify) {
            auto cert = certify_minimal_symmetric(family, point, w);
            return {suite::certificate_json(cert), cert.certified() ? 0 : 1};
        }
        rep.matches_candidate = rep.span == w;
    }
    auto out = report_json(rep);
    out["mode"] = mode;
    return {out};
}

inline Outcome cmd_matrix(const json& in, const Options&) {
    auto a = io::parse_matrix(io::require(in, "A", ""), "A");
    if (!a.is_square()) throw InputError("matrix must be square", "A");
    if (a.rows() > 16) throw InputError("matrix size above 16", "A");
    auto span = matrix_power_span(a);
    json out = {{"n", a.rows()}, {"regular", span.dim() == a.rows()}, {"power_span", io::to_json(span)}, {"nilpotent", is_nilpotent(a)}};
    if (in.contains("B")) {
        auto b = io::parse_matrix(in.at("B"), "B");
        if (!b.is_square() || b.rows() != a.rows()) throw InputError("B must be square of the same size as A", "B");
        out["rank_profile_equal"] = rank_profile_equal(a, b);
    }
    return {out};
}

inline Outcome cmd_first_integral(const json& in, const Options&) {
    auto fam = parse_family(io::require(in, "family", ""), "family");
    auto f = io::parse_rational_function(io::require(in, "f", ""), fam.ambient, "f");
    json derivs = json::array();
    bool all = true;
    for (const auto& xi : fam.fields) {
        auto v = lie_derivative(xi, f);
        all = all && v.is_zero();
        derivs.push_back({{"field", xi.name}, {"value", io::to_json(v, fam.ambient)}});
    }
    json out = {{"family", fam.name},
                {"vars", *fam.ambient},
                {"f", io::to_json(f, fam.ambient)},
                {"first_integral", all},
                {"derivatives", derivs}};
    return {out, all ? 0 : 1};
}

inline Outcome cmd_quotient(const json& in, const Options&) {
    auto fam = parse_family(io::require(in, "family", ""), "family");
    auto v = io::parse_vec(io::require(in, "point", ""), "point");
    if (v.size() != fam.dim()) throw InputError("point must have " + std::to_string(fam.dim()) + " coordinates", "point");
    auto g = generic_distribution_rank(fam);
    auto p = quotient_point(fam, v, g);
    return {{{"family", fam.name}, {"generic_rank", g}, {"point", io::to_json(v)}, {"plucker", io::to_json(p)}}};
}

inline Outcome cmd_rank(const json& in, const Options&) {
    auto fam = parse_family(io::require(in, "family", ""), "family");
    auto g = generic_distribution_rank(fam);
    json out = {{"family", fam.name}, {"dim", fam.dim()}, {"generic_rank", g}, {"tdeg", fam.dim() - g}};
    if (in.contains("point")) {
        auto v = io::parse_vec(in.at("point"), "point");
        if (v.size() != fam.dim()) throw InputError("point must have " + std::to_string(fam.dim()) + " coordinates", "point");
        auto r = distribution_rank_at(fam, v);
        out["rank_at_point"] = r;
        out["in_open_stratum"] = r == g;
    }
    return {out};
}

inline Outcome cmd_verify(const std::string& name, const Options& opt, bool timing) {
    suite::Params p{opt.seed, opt.d, opt.mmax, opt.trials, opt.n};
    auto r = suite::run(name, p);
    json out = r.to_json();
    if (!timing) out.erase("elapsed_ms");
    return {out, r.passed() ? 0 : 1};
}

}  // namespace covar::cli

#endif
