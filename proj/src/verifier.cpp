#include "wald/verifier.hpp"

#include <stdexcept>

#include "wald/catalog.hpp"

namespace wald {

namespace {

const std::vector<std::string>& named_types() {
    static const std::vector<std::string> names = {
        "H6_2",   "H6_5",   "H6_9",   "H6_10",  "H7_13",     "H7_17",   "H7_21",
        "H7_29",  "H8_118", "H8_119", "H8_136", "H8_137",    "NINE_17_7", "GENERAL6"};
    return names;
}

} // namespace

std::string verdict_name(const TypeMatch& t) {
    switch (t.verdict) {
        case Verdict::Line: return "Line";
        case Verdict::NearPencil: return "NearPencil";
        case Verdict::ConicContained: return "ConicContained";
        case Verdict::CatalogType: return "CatalogType(" + t.catalog_name + ")";
        case Verdict::Unknown: return "Unknown";
    }
    throw std::logic_error("unreachable");
}

TypeMatch classify_small(const Config& z) {
    if (z.size() == 0) throw std::invalid_argument("empty configuration");
    TypeMatch out;
    const auto sets = maximal_collinear_sets(z);
    const std::size_t largest = sets.empty() ? 0 : sets.front().size();
    if (z.size() <= 2 || largest == z.size()) {
        out.verdict = Verdict::Line;
        return out;
    }
    if (largest == z.size() - 1) {
        out.verdict = Verdict::NearPencil;
        return out;
    }
    ConicResult conic = conic_contained(z);
    if (conic.contained) {
        out.verdict = Verdict::ConicContained;
        out.conic = conic.coeffs;
        return out;
    }
    for (const std::string& name : named_types()) {
        const auto& e = catalog::entry(name);
        if (e.s != z.size()) continue;
        if (auto labeling = abstract_incidence_match(z, e.pattern)) {
            // Patterns require exact maximal-collinear structure, so at
            // most one can match; take the first.
            out.verdict = Verdict::CatalogType;
            out.catalog_name = name;
            out.labeling = std::move(labeling);
            return out;
        }
    }
    out.verdict = Verdict::Unknown;
    return out;
}

std::pair<int, int> theoremB_scan(const std::vector<int>& diffs) {
    int best = 0, best_pos = 0, run = 0;
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        run = diffs[i] == 2 ? run + 1 : 0;
        if (run > best) {
            best = run;
            best_pos = static_cast<int>(i) - run + 2;  // 1-based start of the run
        }
    }
    return {best, best_pos};
}

TheoremBReport theoremB_check(Engine& engine, const Config& z, int max_m, ModePolicy policy) {
    if (max_m < 5) throw std::invalid_argument("theorem B window needs max_m >= 5");
    TheoremBReport rep;
    rep.max_m = max_m;
    rep.diffs = engine.initial_sequence(z, max_m, policy).first_differences();
    std::tie(rep.max_run, rep.run_position) = theoremB_scan(rep.diffs);
    rep.on_conic = conic_contained(z).contained;
    rep.violation = rep.max_run >= 4 && !rep.on_conic;
    return rep;
}

std::vector<SubsetVerdict> subset_survey(const Config& z) {
    if (z.size() != 9) throw std::invalid_argument("subset survey expects exactly 9 points");
    std::vector<SubsetVerdict> out;
    for (std::size_t drop = 0; drop < z.size(); ++drop) {
        std::vector<Pt> pts;
        for (std::size_t i = 0; i < z.size(); ++i)
            if (i != drop) pts.push_back(z.points[i]);
        Config sub(z.label + " minus point " + std::to_string(drop), std::move(pts));
        out.push_back({drop, classify_small(sub)});
    }
    return out;
}

std::string theoremA_verdict_name(TheoremAVerdict v) {
    switch (v) {
        case TheoremAVerdict::Pass: return "Pass";
        case TheoremAVerdict::Fail: return "Fail";
        case TheoremAVerdict::NotApplicable: return "NotApplicable";
    }
    throw std::logic_error("unreachable");
}

TheoremAVerdict theoremA_check(Engine& engine, const Config& z, int max_m, ModePolicy policy) {
    if (z.size() < 9) throw std::invalid_argument("theorem A check expects >= 9 points");
    BoundState st = certify(engine, z, max_m, policy);
    if (st.upper.value >= make_rational(5, 2)) return TheoremAVerdict::NotApplicable;
    if (conic_contained(z).contained) return TheoremAVerdict::Pass;
    if (z.size() == 9 &&
        abstract_incidence_match(z, catalog::entry("NINE_17_7").pattern).has_value())
        return TheoremAVerdict::Pass;
    return TheoremAVerdict::Fail;
}

} // namespace wald
