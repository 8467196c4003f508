#pragma once

#include "betaparry/coincidence.hpp"
#include "betaparry/decimal.hpp"
#include "betaparry/density.hpp"
#include "betaparry/dynamics.hpp"
#include "betaparry/errors.hpp"
#include "betaparry/number_field.hpp"
#include "betaparry/report.hpp"
#include "betaparry/transfer.hpp"

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace betaparry {

struct SearchConfig {
    int max_degree = 2;
    int coeff_bound = 6;
    Rational root_max = Rational(7);
    long orbit_budget = 10000;
    int family_bound = 5;
    long mc_samples = 1000000;
    int mc_bins = 32;
    std::uint64_t seed = 42;

    void validate() const {
        if (max_degree < 1 || coeff_bound < 1 || family_bound < 1 || orbit_budget < 1)
            throw DomainError("search bounds must be positive");
        if (!(root_max > 1)) throw DomainError("root_max must exceed one");
        if (mc_samples < 1) throw EmptySampleError("sample count must be positive");
        if (mc_bins < 1 || static_cast<long>(mc_bins) > mc_samples)
            throw DomainError("bin count must be in [1, samples]");
    }
};

inline ordered_json to_json(const SearchConfig& c) {
    ordered_json j;
    j["max_degree"] = c.max_degree;
    j["coeff_bound"] = c.coeff_bound;
    j["root_max"] = to_string(c.root_max);
    j["orbit_budget"] = c.orbit_budget;
    j["family_bound"] = c.family_bound;
    j["mc_samples"] = c.mc_samples;
    j["mc_bins"] = c.mc_bins;
    j["seed"] = c.seed;
    return j;
}

// One deduplicated non-integer base beta > 1 with its classified orbit.
struct CatalogueEntry {
    NumberField field;
    FieldElement beta;
    OrbitDescriptor orbit;
    std::string key; // reduced modulus + certified 12-digit decimal
};

// All distinct non-integer real algebraic beta in (1, root_max] arising as
// roots of monic integer polynomials with degree <= max_degree and
// |coefficients| <= coeff_bound, each with the orbit of 1 classified within
// orbit_budget. Integer bases are excluded: their invariant density is the
// constant 1 and their measure is Lebesgue for every integer base. Entries
// are sorted by increasing value.
inline std::vector<CatalogueEntry> enumerate_parry_catalogue(const SearchConfig& cfg) {
    cfg.validate();
    std::vector<CatalogueEntry> entries;
    std::vector<Rational> sort_keys;
    std::unordered_set<std::string> seen;

    for (int deg = 1; deg <= cfg.max_degree; ++deg) {
        std::vector<long> c(static_cast<std::size_t>(deg), -cfg.coeff_bound);
        while (true) {
            IntPoly poly(static_cast<std::size_t>(deg) + 1);
            for (int i = 0; i < deg; ++i) poly[static_cast<std::size_t>(i)] = c[static_cast<std::size_t>(i)];
            poly[static_cast<std::size_t>(deg)] = 1;
            std::vector<NumberField> fields;
            try {
                fields = isolate_roots_above_one(poly);
            } catch (const NoRootAboveOneError&) {
            }
            for (const NumberField& f : fields) {
                if (f.degree() == 1) continue; // integer base
                FieldElement beta = f.generator();
                if (sign(beta - f.from_rational(cfg.root_max)) > 0) continue;
                std::string key = f.modulus_string() + "|" + decimal_string(beta, 12);
                if (!seen.insert(key).second) continue;
                OrbitDescriptor orbit = orbit_of_one(beta, cfg.orbit_budget);
                auto [lo, hi] = to_interval(beta, Rational(1, BigInt(10000000000000LL)));
                sort_keys.push_back((lo + hi) / 2);
                entries.push_back(CatalogueEntry{f, beta, std::move(orbit), std::move(key)});
            }
            // odometer over the non-leading coefficients
            int pos = 0;
            while (pos < deg) {
                if (c[static_cast<std::size_t>(pos)] < cfg.coeff_bound) {
                    ++c[static_cast<std::size_t>(pos)];
                    break;
                }
                c[static_cast<std::size_t>(pos)] = -cfg.coeff_bound;
                ++pos;
            }
            if (pos == deg) break;
        }
    }

    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (sort_keys[a] != sort_keys[b]) return sort_keys[a] < sort_keys[b];
        return cross_compare(entries[a].beta, entries[b].beta) < 0;
    });
    std::vector<CatalogueEntry> out;
    out.reserve(entries.size());
    for (std::size_t i : order) out.push_back(std::move(entries[i]));
    return out;
}

inline ordered_json catalogue_json(const std::vector<CatalogueEntry>& cat) {
    ordered_json arr = ordered_json::array();
    for (const auto& e : cat) {
        ordered_json j;
        j["key"] = e.key;
        j["modulus"] = report::int_poly_json(e.field.modulus());
        j["beta"] = decimal_string(e.beta, 12);
        j["classification"] = to_string(e.orbit.classification);
        j["preperiod_length"] = e.orbit.preperiod.size();
        j["period_length"] = e.orbit.period.size();
        arr.push_back(std::move(j));
    }
    return arr;
}

struct FoundPair {
    std::size_t i, j; // catalogue indices
    CoincidenceReport report;
};

struct SearchResult {
    SearchConfig config;
    std::vector<CatalogueEntry> catalogue;
    std::size_t unknown_count = 0;
    std::vector<FoundPair> pairs;
    std::vector<std::pair<std::size_t, std::size_t>> mismatches;
    bool consistent = true;
};

// Pairwise scan of the catalogue for coinciding normalized densities; every
// pair is also judged by the family characterization and any disagreement is
// recorded as a mismatch.
inline SearchResult search_coincident_pairs(const SearchConfig& cfg) {
    SearchResult res;
    res.config = cfg;
    res.catalogue = enumerate_parry_catalogue(cfg);
    const std::size_t n = res.catalogue.size();
    std::vector<std::optional<StepFunction>> densities(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& e = res.catalogue[i];
        if (e.orbit.classified()) densities[i] = normalize(build_density(e.orbit));
        else ++res.unknown_count;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!densities[i]) continue;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!densities[j]) continue;
            const FieldElement& bi = res.catalogue[i].beta;
            const FieldElement& bj = res.catalogue[j].beta;
            if (equal_cross_field(bi, bj)) continue; // duplicate value, defensive
            const bool same = equal(*densities[i], *densities[j]);
            const bool family = is_family_pair(bi, bj);
            if (same != family) res.mismatches.emplace_back(i, j);
            if (same) res.pairs.push_back(FoundPair{i, j, coincide(bi, bj, cfg.orbit_budget)});
        }
    }
    res.consistent = res.mismatches.empty();
    return res;
}

inline ordered_json to_json(const SearchResult& r) {
    ordered_json j;
    j["config"] = to_json(r.config);
    j["catalogue"] = catalogue_json(r.catalogue);
    j["catalogue_size"] = r.catalogue.size();
    j["unknown_count"] = r.unknown_count;
    ordered_json pairs = ordered_json::array();
    for (const auto& p : r.pairs) {
        ordered_json pj;
        pj["i"] = p.i;
        pj["j"] = p.j;
        pj["report"] = report::coincidence_json(p.report);
        pairs.push_back(std::move(pj));
    }
    j["coincident_pairs"] = pairs;
    ordered_json mism = ordered_json::array();
    for (const auto& [a, b] : r.mismatches) mism.push_back({{"i", a}, {"j", b}});
    j["mismatches"] = mism;
    j["consistent"] = r.consistent;
    return j;
}

struct SweepRow {
    unsigned p, q;
    bool pisot;
    CoincidenceReport report;
    bool h_structure; // both unnormalized densities equal 1 + (1/beta1) on [0, beta1-q)
    bool invariance1, invariance2;
    bool all_ok;
};

struct SweepResult {
    int bound;
    long budget;
    std::vector<SweepRow> rows;
    bool all_pass = true;
};

// Verifies the full claimed picture on every family pair with p <= q <= bound;
// bound 0 yields an empty, vacuously passing report.
inline SweepResult family_sweep(int bound, long budget) {
    if (bound < 0) throw DomainError("bound must be nonnegative");
    SweepResult res;
    res.bound = bound;
    res.budget = budget;
    for (unsigned q = 1; q <= static_cast<unsigned>(bound); ++q) {
        for (unsigned p = 1; p <= q; ++p) {
            auto [b1, b2] = family_pair(p, q);
            const NumberField& f = b1.field();
            SweepRow row{p, q, is_pisot_quadratic(p, q), coincide(b1, b2, budget),
                         false, false, false, false};
            StepFunction h1 = build_density(row.report.orbit1);
            StepFunction h2 = build_density(row.report.orbit2);
            StepFunction expected(f, {b1 - Rational(q)},
                                  {f.one() + invert(b1), f.one()});
            row.h_structure = equal(h1, expected) && equal(h2, expected);
            row.invariance1 = check_invariance(b1, normalize(h1));
            row.invariance2 = check_invariance(b2, normalize(h2));
            const CoincidenceReport& r = row.report;
            row.all_ok = row.pisot && r.coincide() && r.k_equal && r.orbit_sets_match &&
                         r.zero_in_first && !r.zero_in_second && r.zero_in_exactly_one &&
                         r.family && r.family->first == p && r.family->second == q &&
                         r.beta2_is_beta1_plus_one && r.coefficient_sets &&
                         r.coefficient_sets->equal_as_sets && r.zero_value_identity &&
                         *r.zero_value_identity && row.h_structure && row.invariance1 &&
                         row.invariance2;
            res.all_pass = res.all_pass && row.all_ok;
            res.rows.push_back(std::move(row));
        }
    }
    return res;
}

inline ordered_json to_json(const SweepResult& r) {
    ordered_json j;
    j["bound"] = r.bound;
    j["budget"] = r.budget;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.rows) {
        ordered_json rj;
        rj["p"] = row.p;
        rj["q"] = row.q;
        rj["pisot"] = row.pisot;
        rj["verdict"] = to_string(row.report.verdict);
        rj["k_equal"] = row.report.k_equal;
        rj["orbit_sets_match"] = row.report.orbit_sets_match;
        rj["zero_in_exactly_one"] = row.report.zero_in_exactly_one;
        rj["coefficient_sets_equal"] =
            row.report.coefficient_sets && row.report.coefficient_sets->equal_as_sets;
        rj["zero_value_identity"] =
            row.report.zero_value_identity && *row.report.zero_value_identity;
        rj["h_structure"] = row.h_structure;
        rj["invariance1"] = row.invariance1;
        rj["invariance2"] = row.invariance2;
        rj["all_ok"] = row.all_ok;
        rows.push_back(std::move(rj));
    }
    j["rows"] = rows;
    j["all_pass"] = r.all_pass;
    return j;
}

// Data behind the two-panel picture for the smallest family pair (p,q)=(1,1):
// branch segments of both maps and the shared normalized density.
inline ordered_json figure1_json() {
    auto [b1, b2] = family_pair(1, 1);
    const NumberField& f = b1.field();
    StepFunction density = normalize(build_density(orbit_of_one(b1, 100)));

    auto map_segments = [&](const FieldElement& beta) {
        ordered_json segs = ordered_json::array();
        BigInt fl = floor_int(beta);
        FieldElement invb = invert(beta);
        for (BigInt k = 0; k <= fl; ++k) {
            FieldElement xlo = (k == 0) ? f.zero() : f.from_rational(Rational(k)) * invb;
            bool last = (k == fl);
            FieldElement xhi = last ? f.one() : f.from_rational(Rational(k + 1)) * invb;
            FieldElement ylo = beta * xlo - Rational(k);
            FieldElement yhi = beta * xhi - Rational(k);
            if (sign(xhi - xlo) <= 0) continue;
            ordered_json s;
            s["x_lo"] = report::element_json(xlo);
            s["x_hi"] = report::element_json(xhi);
            s["y_lo"] = report::element_json(ylo);
            s["y_hi"] = report::element_json(yhi);
            segs.push_back(std::move(s));
        }
        return segs;
    };

    ordered_json j;
    j["family"] = {{"p", 1}, {"q", 1}};
    j["beta1"] = report::element_json(b1);
    j["beta2"] = report::element_json(b2);
    j["map_beta1"] = map_segments(b1);
    j["map_beta2"] = map_segments(b2);
    ordered_json dens = ordered_json::array();
    for (std::size_t i = 0; i < density.segment_count(); ++i) {
        FieldElement lo = (i == 0) ? f.zero() : density.breakpoints()[i - 1];
        FieldElement hi =
            (i == density.breakpoints().size()) ? f.one() : density.breakpoints()[i];
        ordered_json s;
        s["x_lo"] = report::element_json(lo);
        s["x_hi"] = report::element_json(hi);
        s["value"] = report::element_json(density.values()[i]);
        dens.push_back(std::move(s));
    }
    j["density"] = dens;
    return j;
}

inline std::string figure1_csv() {
    ordered_json j = figure1_json();
    std::string out = "series,x_lo,x_hi,y_lo,y_hi,exact\n";
    auto add_map = [&](const char* name, const ordered_json& segs) {
        for (const auto& s : segs)
            out += std::string(name) + "," + s["x_lo"]["decimal"].get<std::string>() + "," +
                   s["x_hi"]["decimal"].get<std::string>() + "," +
                   s["y_lo"]["decimal"].get<std::string>() + "," +
                   s["y_hi"]["decimal"].get<std::string>() + ",\n";
    };
    add_map("map_beta1", j["map_beta1"]);
    add_map("map_beta2", j["map_beta2"]);
    for (const auto& s : j["density"]) {
        std::string exact;
        for (const auto& c : s["value"]["coeffs"]) {
            if (!exact.empty()) exact += " ";
            exact += c.get<std::string>();
        }
        out += "density," + s["x_lo"]["decimal"].get<std::string>() + "," +
               s["x_hi"]["decimal"].get<std::string>() + "," +
               s["value"]["decimal"].get<std::string>() + "," +
               s["value"]["decimal"].get<std::string>() + "," + exact + "\n";
    }
    return out;
}

inline std::string figure1_svg() {
    auto [b1, b2] = family_pair(1, 1);
    (void)b2;
    StepFunction density = normalize(build_density(orbit_of_one(b1, 100)));
    return report::step_function_svg(density, "normalized invariant density, family (1,1)");
}

// csv, svg or json rendering of the smallest family pair.
inline std::string emit_figure1(const std::string& format) {
    if (format == "csv") return figure1_csv();
    if (format == "svg") return figure1_svg();
    if (format == "json") return figure1_json().dump(2) + "\n";
    throw DomainError("figure format must be csv, svg or json");
}

struct McBinRow {
    long count = 0;
    FieldElement mass;      // exact bin mass of the normalized measure
    FieldElement deviation; // |count/samples - mass|
};

struct McResult {
    long samples;
    int bins;
    std::uint64_t seed;
    Rational threshold;
    std::vector<McBinRow> table;
    FieldElement max_deviation;
    bool pass;
};

// Long-double simulation of the beta-map against exact bin masses of the
// normalized density; non-rigorous corroboration with a fixed threshold.
inline McResult mc_validate(const FieldElement& beta, const SearchConfig& cfg) {
    cfg.validate();
    OrbitDescriptor orbit = orbit_of_one(beta, cfg.orbit_budget);
    StepFunction density = normalize(build_density(orbit)); // throws if unclassified
    const NumberField& f = beta.field();
    const int B = cfg.mc_bins;

    auto [bl, bh] = to_interval(beta, Rational(1, BigInt(1) << 80));
    const long double bf = ((bl + bh) / 2).convert_to<long double>();
    std::mt19937_64 rng(cfg.seed);
    std::vector<long> counts(static_cast<std::size_t>(B), 0);
    for (long s = 0; s < cfg.mc_samples; ++s) {
        long double x = static_cast<long double>(rng() >> 11) * 0x1.0p-53L;
        for (int it = 0; it <= 64; ++it) {
            long double y = bf * x;
            x = y - std::floor(y);
            if (x < 0) x = 0;
            if (x >= 1) x = std::nextafter(1.0L, 0.0L);
        }
        auto bin = static_cast<std::size_t>(x * B);
        if (bin >= static_cast<std::size_t>(B)) bin = static_cast<std::size_t>(B) - 1;
        ++counts[bin];
    }

    McResult res{cfg.mc_samples, B, cfg.seed, Rational(1, 100), {}, f.zero(), false};
    for (int i = 0; i < B; ++i) {
        FieldElement lo = f.from_rational(Rational(i, B));
        FieldElement hi = f.from_rational(Rational(i + 1, B));
        FieldElement mass = integral_over(density, lo, hi);
        FieldElement dev = mass - Rational(counts[static_cast<std::size_t>(i)], cfg.mc_samples);
        if (sign(dev) < 0) dev = -dev;
        if (sign(dev - res.max_deviation) > 0) res.max_deviation = dev;
        res.table.push_back(McBinRow{counts[static_cast<std::size_t>(i)], mass, dev});
    }
    res.pass = sign(res.max_deviation - f.from_rational(res.threshold)) < 0;
    return res;
}

inline ordered_json to_json(const McResult& r) {
    ordered_json j;
    j["samples"] = r.samples;
    j["bins"] = r.bins;
    j["seed"] = r.seed;
    j["threshold"] = to_string(r.threshold);
    j["max_deviation"] = decimal_string(r.max_deviation, 8);
    j["pass"] = r.pass;
    ordered_json rows = ordered_json::array();
    for (const auto& row : r.table) {
        ordered_json rj;
        rj["count"] = row.count;
        rj["exact_mass"] = decimal_string(row.mass, 8);
        rj["deviation"] = decimal_string(row.deviation, 8);
        rows.push_back(std::move(rj));
    }
    j["table"] = rows;
    return j;
}

} // namespace betaparry
