#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "covar/cli/commands.hpp"

namespace {

using covar::io::json;

void emit(const json& j, int indent) { std::cout << j.dump(indent < 0 ? -1 : indent) << "\n"; }

json read_input(const std::string& path) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(path);
        if (!in) throw covar::InputError("cannot open input file '" + path + "'", "input");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    // Depth-limited parse: rejects pathological nesting before it reaches the stack.
    int depth = 0;
    auto guard = [&depth](int, json::parse_event_t ev, json&) {
        if (ev == json::parse_event_t::object_start || ev == json::parse_event_t::array_start) {
            if (++depth > 256) throw covar::InputError("JSON nested too deeply", "input");
        } else if (ev == json::parse_event_t::object_end || ev == json::parse_event_t::array_end) {
            --depth;
        }
        return true;
    };
    return json::parse(text, guard);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact covariants, nullcone spans and first integrals"};
    app.require_subcommand(1);
    app.fallthrough();

    covar::cli::Options opt;
    std::string input;
    int indent = 2;
    bool timing = false;
    std::string suite_name;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("--input", input, "JSON input file (default: stdin)");
    };
    auto* transvect = app.add_subcommand("transvect", "r-th transvection of two forms: {f, h, r}");
    auto* cmr = app.add_subcommand("cmr", "coefficients c_{m,r} from the three formulas");
    auto* nullform = app.add_subcommand("nullform", "nullcone membership of a form");
    auto* span = app.add_subcommand("span", "E(v) from a covariant family, or a theorem certificate");
    auto* matrix = app.add_subcommand("matrix", "regularity, power span and rank profiles");
    auto* first_integral = app.add_subcommand("first-integral", "check a rational function against a family of fields");
    auto* quotient = app.add_subcommand("quotient", "Pluecker fingerprint of a point of the quotient");
    auto* rank = app.add_subcommand("rank", "generic and pointwise rank of a family of fields");
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    for (auto* sub : {transvect, cmr, nullform, span, matrix, first_integral, quotient, rank}) add_io(sub);
    cmr->add_option("--m", opt.m, "m");
    cmr->add_option("--r", opt.r, "r");
    verify->add_option("suite", suite_name, "cmr, thm-odd, thm-4m, thm-2mod4, nullform, gl2, gln, u3, equivariance, kernel")
        ->required();
    verify->add_option("--d", opt.d, "restrict to one degree");
    verify->add_option("--mmax", opt.mmax, "largest m for the cmr suite");
    verify->add_option("--trials", opt.trials, "number of seeded cases");
    verify->add_option("--n", opt.n, "largest matrix size for the gln suite");
    app.add_option("--seed", opt.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--depth-cap", opt.depth_cap, "depth cap for orbit closure")->capture_default_str();
    app.add_option("--json-indent", indent, "JSON indentation; negative for one line")->capture_default_str();
    app.add_flag("--timing", timing, "report elapsed_ms in suite results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(covar::io::error_json("input_error", "arguments", e.what()), indent);
        return 2;
    }

    try {
        covar::cli::Outcome out;
        if (verify->parsed()) {
            out = covar::cli::cmd_verify(suite_name, opt, timing);
        } else if (cmr->parsed() && opt.m && opt.r) {
            out = covar::cli::cmd_cmr(json::object(), opt);
        } else {
            json in = read_input(input);
            if (transvect->parsed()) out = covar::cli::cmd_transvect(in, opt);
            else if (cmr->parsed()) out = covar::cli::cmd_cmr(in, opt);
            else if (nullform->parsed()) out = covar::cli::cmd_nullform(in, opt);
            else if (span->parsed()) out = covar::cli::cmd_span(in, opt);
            else if (matrix->parsed()) out = covar::cli::cmd_matrix(in, opt);
            else if (first_integral->parsed()) out = covar::cli::cmd_first_integral(in, opt);
            else if (quotient->parsed()) out = covar::cli::cmd_quotient(in, opt);
            else out = covar::cli::cmd_rank(in, opt);
        }
        emit(out.body, indent);
        return out.exit_code;
    } catch (const json::parse_error& e) {
        emit(covar::io::error_json("parse_error", "input", e.what()), indent);
    } catch (const json::exception& e) {
        emit(covar::io::error_json("input_error", "input", e.what()), indent);
    } catch (const covar::InputError& e) {
        emit(covar::io::error_json("input_error", e.field(), e.what()), indent);
    } catch (const covar::PreconditionError& e) {
        emit(covar::io::error_json("precondition_failed", "", e.what()), indent);
    } catch (const covar::StratumError& e) {
        emit(covar::io::error_json("stratum_error", "point", e.what()), indent);
    } catch (const std::exception& e) {
        emit(covar::io::error_json("internal_error", "", e.what()), indent);
    }
    return 2;
}
