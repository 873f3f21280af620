// Runs the eleven acceptance criteria at their default parameters and prints
// one PASS/FAIL line per criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "covar/cli/suites.hpp"

namespace {

using covar::suite::CaseResult;

struct Criterion {
    int id;
    std::string title;
    std::string suite;
    double budget_s;
    std::function<bool(const CaseResult&)> select = [](const CaseResult&) { return true; };
};

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "Coefficient identities", "cmr", 5, [](const CaseResult& c) { return !starts_with(c.case_id, "lemma/"); }},
        {2, "Quadratic transvectant of the weight-two monomial", "cmr", 10,
         [](const CaseResult& c) { return starts_with(c.case_id, "lemma/"); }},
        {3, "Transvectant equivariance", "equivariance", 60},
        {4, "Odd degree minimal symmetric subspace", "thm-odd", 60},
        {5, "Degree 0 mod 4 minimal symmetric subspace", "thm-4m", 120},
        {6, "Degree 2 mod 4 minimal symmetric subspace", "thm-2mod4", 300},
        {7, "Nullform detector", "nullform", 30},
        {8, "GL2 adjoint first integrals and quotient", "gl2", 5},
        {9, "GLn adjoint regularity and rank", "gln", 30},
        {10, "Unipotent example", "u3", 5},
        {11, "Kernel property suites", "kernel", 30},
    };

    int failures = 0;
    std::string cached_suite;
    covar::suite::SuiteResult cached;
    double cached_s = 0;
    for (const auto& cr : criteria) {
        bool ok = true;
        std::vector<std::string> failed;
        std::string error;
        std::size_t selected = 0;
        try {
            if (cr.suite != cached_suite) {
                auto start = std::chrono::steady_clock::now();
                cached = covar::suite::run(cr.suite, covar::suite::Params{});
                cached_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                cached_suite = cr.suite;
            }
            for (const auto& c : cached.cases) {
                if (!cr.select(c)) continue;
                ++selected;
                if (!c.pass) failed.push_back(c.case_id);
            }
            ok = failed.empty() && selected > 0;
        } catch (const std::exception& e) {
            ok = false;
            error = e.what();
            cached_suite.clear();
            cached_s = 0;
        }
        const bool in_budget = cached_s <= cr.budget_s;
        ok = ok && in_budget;
        std::printf("%s %d %s (%.2f s, %zu cases)\n", ok ? "PASS" : "FAIL", cr.id, cr.title.c_str(), cached_s, selected);
        for (const auto& id : failed) std::printf("    failed case: %s\n", id.c_str());
        if (!error.empty()) std::printf("    error: %s\n", error.c_str());
        if (!in_budget) std::printf("    over the %.0f s budget\n", cr.budget_s);
        failures += !ok;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
