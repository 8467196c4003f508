// Acceptance gate: every release-blocking criterion in one binary, one
// PASS/FAIL line each, nonzero exit when any criterion fails. Tolerances and
// time limits are pinned here.

#include "betaparry/harness.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

using namespace betaparry;

namespace {

// Shared fixtures, computed once by the first criterion that needs them.
std::optional<SweepResult> sweep_cache;
std::optional<std::vector<CatalogueEntry>> catalogue_cache;
std::optional<SearchResult> cubic_search_cache;

const SweepResult& family_sweep_20() {
    if (!sweep_cache) sweep_cache = family_sweep(20, 200);
    return *sweep_cache;
}

const std::vector<CatalogueEntry>& quadratic_catalogue() {
    if (!catalogue_cache) catalogue_cache = enumerate_parry_catalogue(SearchConfig{});
    return *catalogue_cache;
}

const SearchResult& cubic_search() {
    if (!cubic_search_cache) {
        SearchConfig cfg;
        cfg.max_degree = 3;
        cfg.coeff_bound = 3;
        cfg.root_max = Rational(5);
        cfg.orbit_budget = 5000;
        cubic_search_cache = search_coincident_pairs(cfg);
    }
    return *cubic_search_cache;
}

bool expect(bool ok, const char* what, std::string& reason) {
    if (!ok && reason.empty()) reason = what;
    return ok;
}

// ---- criterion bodies ------------------------------------------------------

bool golden_density_closed_form(std::string& reason) {
    NumberField f = quadratic_family_field(1, 1);
    FieldElement g = f.generator();
    StepFunction h = normalize(build_density(orbit_of_one(g, 100)));
    FieldElement sqrt5 = g + g - Rational(1);

    bool ok = expect(h.segment_count() == 2 && h.breakpoints().size() == 1,
                     "density must have exactly one jump", reason);
    if (!ok) return false;
    ok &= expect(sign(h.breakpoints()[0] * Rational(2) - (sqrt5 - Rational(1))) == 0,
                 "jump must sit at (sqrt5 - 1)/2", reason);
    ok &= expect(sign(h.values()[0] * Rational(10) - (sqrt5 * Rational(3) + Rational(5))) == 0,
                 "left plateau must equal (5 + 3 sqrt5)/10", reason);
    ok &= expect(sign(h.values()[1] * Rational(10) - (sqrt5 + Rational(5))) == 0,
                 "right plateau must equal (5 + sqrt5)/10", reason);
    ok &= expect(decimal_string(h.values()[0], 10) == "1.1708203932",
                 "left plateau decimal must be 1.1708203932", reason);
    ok &= expect(decimal_string(h.values()[1], 10) == "0.7236067977",
                 "right plateau decimal must be 0.7236067977", reason);
    ok &= expect(sign(integral(h) - Rational(1)) == 0, "normalized mass must be one", reason);
    return ok;
}

bool family_pairs_coincide(std::string& reason) {
    const SweepResult& sw = family_sweep_20();
    bool ok = expect(sw.rows.size() == 210, "sweep must cover 210 pairs", reason);
    for (const SweepRow& row : sw.rows) {
        ok &= expect(row.report.coincide(), "every family pair must coincide", reason);
        ok &= expect(row.report.k_equal, "normalization constants must agree", reason);
        ok &= expect(row.h_structure, "density must be 1 + (1/beta1) on [0, beta1 - q)", reason);
        ok &= expect(row.pisot, "family bases must be quadratic Pisot numbers", reason);
        ok &= expect(row.all_ok, "every sweep column must pass", reason);
        if (!ok) break;
    }
    ok &= expect(sw.all_pass, "sweep must report all_pass", reason);
    return ok;
}

bool densities_are_invariant(std::string& reason) {
    const SweepResult& sw = family_sweep_20();
    bool ok = true;
    for (const SweepRow& row : sw.rows) {
        ok &= expect(row.invariance1 && row.invariance2,
                     "both family members must have invariant densities", reason);
        if (!ok) return false;
    }
    std::size_t checked = 0;
    for (const CatalogueEntry& e : quadratic_catalogue()) {
        if (!e.orbit.classified()) continue;
        StepFunction h = normalize(build_density(e.orbit));
        ok &= expect(check_invariance(e.beta, h), "catalogue density must be invariant", reason);
        if (!ok) return false;
        ++checked;
    }
    return expect(checked > 0, "catalogue must contain classified entries", reason) && ok;
}

bool search_matches_characterization(std::string& reason) {
    const SearchResult& sr = cubic_search();
    bool ok = expect(sr.consistent, "measure verdicts must match the characterization", reason);
    ok &= expect(sr.unknown_count > 0, "aperiodic orbits must be counted as unknown", reason);

    // Independently derived expectation: the family pairs whose members both
    // occur in the catalogue by value. root_max 5 caps the family at q <= 4.
    // A member whose minimal polynomial exceeds the coefficient bound can
    // still enter through a composite source polynomial (for example 2+sqrt2
    // as a root of x^3 - 3x^2 - 2x + 2), so membership is decided by value.
    std::set<std::pair<unsigned, unsigned>> expected;
    for (unsigned q = 1; q <= 4; ++q) {
        for (unsigned p = 1; p <= q; ++p) {
            auto [b1, b2] = family_pair(p, q);
            auto present = [&](const FieldElement& v) {
                for (const CatalogueEntry& e : sr.catalogue)
                    if (e.orbit.classified() && equal_cross_field(e.beta, v)) return true;
                return false;
            };
            if (present(b1) && present(b2)) expected.emplace(p, q);
        }
    }
    // Frozen desk-scale content: (1,2) and (2,2) join (1,1) because 2+sqrt2
    // and 2+sqrt3 enter via composite cubics even though their minimal
    // polynomials exceed the coefficient bound.
    const std::set<std::pair<unsigned, unsigned>> frozen{{1, 1}, {1, 2}, {2, 2}};
    ok &= expect(expected == frozen, "catalogue must contain the three known family pairs",
                 reason);

    std::set<std::pair<unsigned, unsigned>> found;
    for (const FoundPair& fp : sr.pairs) {
        ok &= expect(fp.report.coincide(), "found pairs must coincide", reason);
        ok &= expect(fp.report.beta2_is_beta1_plus_one,
                     "larger base must exceed the smaller by one", reason);
        ok &= expect(is_family_pair(fp.report.beta1, fp.report.beta2),
                     "found pairs must satisfy the characterization", reason);
        ok &= expect(fp.report.beta1.field().degree() <= 2 && fp.report.beta2.field().degree() <= 2,
                     "no cubic base may participate in a pair", reason);
        if (fp.report.family) found.insert(*fp.report.family);
    }
    ok &= expect(found == expected && sr.pairs.size() == expected.size(),
                 "found pairs must be exactly the family pairs present", reason);
    return ok;
}

bool dependence_only_at_one_one(std::string& reason) {
    bool ok = true;
    for (unsigned q = 1; q <= 20 && ok; ++q) {
        for (unsigned p = 1; p <= q && ok; ++p) {
            auto [b1, b2] = family_pair(p, q);
            auto witness = multiplicative_dependence(b1, b2, 10);
            if (p == 1 && q == 1)
                ok = expect(witness == std::make_pair(2u, 1u),
                            "pair (1,1) must satisfy beta1^2 == beta2", reason);
            else
                ok = expect(!witness.has_value(),
                            "no other family pair may be multiplicatively dependent", reason);
        }
    }
    return ok;
}

bool series_equals_integral(std::string& reason) {
    bool ok = true;
    std::size_t checked = 0;
    for (const CatalogueEntry& e : quadratic_catalogue()) {
        if (!e.orbit.classified()) continue;
        FieldElement by_series = series_normalization(e.orbit);
        FieldElement by_integral = integral(build_density(e.orbit));
        ok &= expect(sign(by_series - by_integral) == 0,
                     "orbit series must equal the density integral", reason);
        if (!ok) return false;
        ++checked;
    }
    return expect(checked > 0, "catalogue must contain classified entries", reason) && ok;
}

bool coincident_pairs_share_structure(std::string& reason) {
    std::vector<const CoincidenceReport*> reports;
    for (const SweepRow& row : family_sweep_20().rows) reports.push_back(&row.report);
    for (const FoundPair& fp : cubic_search().pairs) reports.push_back(&fp.report);

    bool ok = expect(!reports.empty(), "no coincident pairs available", reason);
    for (const CoincidenceReport* r : reports) {
        ok &= expect(r->zero_in_first && !r->zero_in_second && r->zero_in_exactly_one,
                     "zero must lie in exactly the first orbit", reason);
        ok &= expect(r->orbit_sets_match, "nonzero orbit sets must agree", reason);
        ok &= expect(r->coefficient_sets && r->coefficient_sets->equal_as_sets,
                     "density coefficient sets must agree", reason);
        ok &= expect(r->zero_value_identity && *r->zero_value_identity,
                     "sum of beta1^(-k) must equal beta2/(beta2 - 1)", reason);
        if (!ok) break;
    }
    return ok;
}

bool monte_carlo_corroborates(std::string& reason) {
    NumberField f = quadratic_family_field(1, 1);
    SearchConfig cfg; // one million samples, 32 bins, seed 42
    McResult res = mc_validate(f.generator(), cfg);
    bool ok = expect(res.samples == 1000000 && res.bins == 32 && res.seed == 42,
                     "simulation must use the pinned sample plan", reason);
    ok &= expect(sign(res.max_deviation - Rational(1, 100)) < 0,
                 "max bin deviation must stay below 0.01", reason);
    ok &= expect(res.pass, "simulation must report pass", reason);
    long total = 0;
    for (const McBinRow& row : res.table) total += row.count;
    ok &= expect(total == res.samples, "bin counts must sum to the sample count", reason);
    return ok;
}

struct Criterion {
    int id;
    const char* description;
    double time_limit; // seconds; 0 = unlimited
    std::function<bool(std::string&)> body;
    // A non-blocking criterion still prints its line but a failure asks for
    // investigation instead of vetoing the release (exit code unaffected).
    bool release_blocking = true;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden base normalized density matches its closed form and 10-digit decimals", 1.0,
         golden_density_closed_form},
        {2, "all 210 family pairs with p <= q <= 20 coincide with the claimed density shape", 30.0,
         family_pairs_coincide},
        {3, "transfer invariance holds for all pair members and the quadratic catalogue", 60.0,
         densities_are_invariant},
        {4, "cubic-and-below search finds exactly the family pairs and nothing else", 600.0,
         search_matches_characterization},
        {5, "multiplicative dependence over p <= q <= 20 occurs only at (1,1) via (2,1)", 30.0,
         dependence_only_at_one_one},
        {6, "orbit series equals the density integral on every classified entry", 0.0,
         series_equals_integral},
        {7, "every coincident pair shows the zero split, set match and value-at-zero identity",
         0.0, coincident_pairs_share_structure},
        {8, "monte carlo frequencies track exact bin masses (non-rigorous corroboration)", 30.0,
         monte_carlo_corroborates, /*release_blocking=*/false},
    };

    int failures = 0;
    int warnings = 0;
    for (const Criterion& c : criteria) {
        std::string reason;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.body(reason);
        } catch (const std::exception& e) {
            reason = std::string("exception: ") + e.what();
        }
        double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                             .count();
        if (ok && c.time_limit > 0 && elapsed > c.time_limit) {
            ok = false;
            char buf[64];
            std::snprintf(buf, sizeof(buf), "time limit %.0f s exceeded", c.time_limit);
            reason = buf;
        }
        const char* label = ok ? "PASS" : c.release_blocking ? "FAIL" : "WARN";
        if (!ok && c.release_blocking) ++failures;
        if (!ok && !c.release_blocking) ++warnings;
        std::printf("%s criterion %d (%.2f s): %s%s%s%s\n", label, c.id, elapsed, c.description,
                    reason.empty() ? "" : " -- ", reason.c_str(),
                    ok || c.release_blocking ? "" : " [investigate; not release-blocking]");
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed", criteria.size() - failures - warnings,
                criteria.size());
    if (warnings > 0) std::printf(", %d non-blocking warning%s", warnings, warnings == 1 ? "" : "s");
    std::printf("\n");
    return failures == 0 ? 0 : 1;
}
