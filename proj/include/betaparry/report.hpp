#pragma once

#include "betaparry/coincidence.hpp"
#include "betaparry/decimal.hpp"
#include "betaparry/density.hpp"
#include "betaparry/dynamics.hpp"
#include "betaparry/number_field.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

namespace betaparry {

using ordered_json = nlohmann::ordered_json;

namespace report {

constexpr unsigned kDecimalDigits = 12;

inline ordered_json json_int(const BigInt& n) {
    if (n >= -(BigInt(1) << 53) && n <= (BigInt(1) << 53)) return n.convert_to<long long>();
    return n.str();
}

inline ordered_json int_poly_json(const IntPoly& p) {
    ordered_json a = ordered_json::array();
    for (const auto& c : p) a.push_back(json_int(c));
    return a;
}

inline ordered_json element_json(const FieldElement& a, unsigned digits = kDecimalDigits) {
    ordered_json j;
    j["decimal"] = decimal_string(a, digits);
    ordered_json coeffs = ordered_json::array();
    for (const auto& c : a.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

inline ordered_json element_list_json(const std::vector<FieldElement>& v) {
    ordered_json a = ordered_json::array();
    for (const auto& e : v) a.push_back(element_json(e));
    return a;
}

inline ordered_json field_json(const NumberField& f) {
    ordered_json j;
    j["modulus"] = int_poly_json(f.modulus());
    j["modulus_string"] = f.modulus_string();
    auto [lo, hi] = f.root_interval();
    j["root_low"] = decimal_string(lo, kDecimalDigits);
    j["root_high"] = decimal_string(hi, kDecimalDigits);
    return j;
}

inline ordered_json orbit_json(const OrbitDescriptor& o) {
    ordered_json j;
    j["beta_poly"] = int_poly_json(o.beta.field().modulus());
    j["beta"] = element_json(o.beta);
    j["classification"] = to_string(o.classification);
    j["hits_zero"] = o.hits_zero;
    j["preperiod"] = element_list_json(o.preperiod);
    j["period"] = element_list_json(o.period);
    ordered_json digits = ordered_json::array();
    for (const auto& d : o.digits) digits.push_back(json_int(d));
    j["digits"] = digits;
    return j;
}

inline ordered_json step_function_json(const StepFunction& f) {
    ordered_json j;
    j["breakpoints"] = element_list_json(f.breakpoints());
    j["values"] = element_list_json(f.values());
    return j;
}

// CSV rows segment_lo,segment_hi,value,value_exact with space-separated
// coefficient vectors in the exact column.
inline std::string step_function_csv(const StepFunction& f) {
    std::string out = "segment_lo,segment_hi,value,value_exact\n";
    const NumberField& fd = f.field();
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        FieldElement lo = (i == 0) ? fd.zero() : f.breakpoints()[i - 1];
        FieldElement hi = (i == f.breakpoints().size()) ? fd.one() : f.breakpoints()[i];
        out += decimal_string(lo, kDecimalDigits) + "," + decimal_string(hi, kDecimalDigits) +
               "," + decimal_string(f.values()[i], kDecimalDigits) + ",";
        const auto& c = f.values()[i].coeffs();
        for (std::size_t k = 0; k < c.size(); ++k) out += (k ? " " : "") + to_string(c[k]);
        out += "\n";
    }
    return out;
}

namespace detail {

inline std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline double plot_value(const FieldElement& a) {
    auto [l, u] = to_interval(a, Rational(1, 1 << 20));
    return ((l + u) / 2).convert_to<double>();
}

} // namespace detail

// Standalone SVG with the step function drawn as horizontal segments.
inline std::string step_function_svg(const StepFunction& f, const std::string& title) {
    const double W = 640, H = 400, ML = 60, MR = 20, MT = 40, MB = 40;
    double ymax = 0;
    for (const auto& v : f.values()) ymax = std::max(ymax, detail::plot_value(v));
    ymax = std::max(ymax * 1.15, 1e-9);
    auto X = [&](double x) { return ML + x * (W - ML - MR); };
    auto Y = [&](double y) { return H - MB - y / ymax * (H - MT - MB); };
    std::string s = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"400\" "
                    "viewBox=\"0 0 640 400\">\n";
    s += "<text x=\"" + detail::svg_coord(W / 2) + "\" y=\"20\" text-anchor=\"middle\" "
         "font-family=\"monospace\" font-size=\"14\">" + title + "</text>\n";
    s += "<line x1=\"" + detail::svg_coord(ML) + "\" y1=\"" + detail::svg_coord(H - MB) +
         "\" x2=\"" + detail::svg_coord(W - MR) + "\" y2=\"" + detail::svg_coord(H - MB) +
         "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + detail::svg_coord(ML) + "\" y1=\"" + detail::svg_coord(MT) +
         "\" x2=\"" + detail::svg_coord(ML) + "\" y2=\"" + detail::svg_coord(H - MB) +
         "\" stroke=\"black\"/>\n";
    const NumberField& fd = f.field();
    for (std::size_t i = 0; i < f.segment_count(); ++i) {
        FieldElement lo = (i == 0) ? fd.zero() : f.breakpoints()[i - 1];
        FieldElement hi = (i == f.breakpoints().size()) ? fd.one() : f.breakpoints()[i];
        double x1 = detail::plot_value(lo), x2 = detail::plot_value(hi);
        double y = detail::plot_value(f.values()[i]);
        s += "<line x1=\"" + detail::svg_coord(X(x1)) + "\" y1=\"" + detail::svg_coord(Y(y)) +
             "\" x2=\"" + detail::svg_coord(X(x2)) + "\" y2=\"" + detail::svg_coord(Y(y)) +
             "\" stroke=\"#2166ac\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + detail::svg_coord(X((x1 + x2) / 2)) + "\" y=\"" +
             detail::svg_coord(Y(y) - 6) + "\" text-anchor=\"middle\" font-family=\"monospace\" "
             "font-size=\"11\">" + decimal_string(f.values()[i], 12) + "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

inline ordered_json coincidence_json(const CoincidenceReport& r) {
    ordered_json j;
    j["verdict"] = to_string(r.verdict);
    j["budget"] = r.budget;
    j["beta1"] = element_json(r.beta1);
    j["beta1_modulus"] = int_poly_json(r.beta1.field().modulus());
    j["beta2"] = element_json(r.beta2);
    j["beta2_modulus"] = int_poly_json(r.beta2.field().modulus());
    if (r.family) j["family"] = {{"p", r.family->first}, {"q", r.family->second}};
    else j["family"] = nullptr;
    j["beta2_is_beta1_plus_one"] = r.beta2_is_beta1_plus_one;
    j["orbit1"] = orbit_json(r.orbit1);
    j["orbit2"] = orbit_json(r.orbit2);
    if (r.k1) j["k1"] = element_json(*r.k1);
    if (r.k2) j["k2"] = element_json(*r.k2);
    j["k_equal"] = r.k_equal;
    j["orbit_sets_match"] = r.orbit_sets_match;
    j["zero_in_first"] = r.zero_in_first;
    j["zero_in_second"] = r.zero_in_second;
    j["zero_in_exactly_one"] = r.zero_in_exactly_one;
    if (r.coefficient_sets) {
        const auto& cs = *r.coefficient_sets;
        j["coefficient_sets"] = {{"zero_side", element_list_json(cs.zero_side)},
                                 {"other_preperiod", element_list_json(cs.other_preperiod)},
                                 {"other_period", element_list_json(cs.other_period)},
                                 {"equal_as_sets", cs.equal_as_sets}};
    }
    if (r.zero_value_identity) j["zero_value_identity"] = *r.zero_value_identity;
    return j;
}

inline ordered_json invariance_json(const FieldElement& beta, const StepFunction& f,
                                    const StepFunction& lf, bool fixed) {
    ordered_json j;
    j["fixed_point"] = fixed;
    j["beta"] = element_json(beta);
    ordered_json lhs = ordered_json::array(), rhs = ordered_json::array();
    for (const auto& b : lf.breakpoints()) lhs.push_back(element_json(b));
    for (const auto& b : f.breakpoints()) rhs.push_back(element_json(b));
    j["lhs_breakpoints"] = lhs;
    j["rhs_breakpoints"] = rhs;
    j["lhs_values"] = element_list_json(lf.values());
    j["rhs_values"] = element_list_json(f.values());
    return j;
}

} // namespace report

} // namespace betaparry
