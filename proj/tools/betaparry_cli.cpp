// Command-line frontend: orbits, densities, invariance checks, coincidence
// decisions, the family sweep, the catalogue search, figure emission and
// Monte Carlo validation. Exit codes: 0 success, 1 property violation,
// 2 usage or domain error.

#include "betaparry/betaparry.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace bp = betaparry;

namespace {

struct BaseOptions {
    std::string poly;
    std::vector<unsigned> pq;
    std::size_t root_index = 0;
};

void add_base_options(CLI::App* cmd, BaseOptions& opt, const std::string& poly_name = "--poly") {
    auto* p = cmd->add_option(poly_name, opt.poly,
                              "monic integer polynomial, constant first, e.g. \"-1,-1,1\"");
    auto* f = cmd->add_option("--pq", opt.pq, "family parameters P,Q for x^2 - Q x - P")
                  ->expected(2)
                  ->delimiter(',');
    cmd->add_option("--root-index", opt.root_index,
                    "which root > 1 of --poly to use, ascending from 0");
    p->excludes(f);
    cmd->callback([cmd, &opt] {
        if (opt.poly.empty() && opt.pq.empty())
            throw CLI::ValidationError(cmd->get_name(), "one of --poly or --pq is required");
    });
}

bp::IntPoly parse_poly(const std::string& s) {
    bp::IntPoly out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) throw bp::DomainError("empty coefficient in --poly");
        out.emplace_back(cur);
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') flush();
        else if (!std::isspace(static_cast<unsigned char>(ch))) cur.push_back(ch);
    }
    flush();
    if (out.size() < 2 || out.back() != 1)
        throw bp::DomainError("--poly must be monic of degree >= 1");
    return out;
}

bp::FieldElement resolve_base(const BaseOptions& opt) {
    if (!opt.pq.empty()) {
        auto [b1, b2] = bp::family_pair(opt.pq[0], opt.pq[1]);
        (void)b2;
        return b1;
    }
    std::vector<bp::NumberField> fields = bp::isolate_roots_above_one(parse_poly(opt.poly));
    if (opt.root_index >= fields.size())
        throw bp::DomainError("--root-index exceeds the number of roots above one (" +
                              std::to_string(fields.size()) + ")");
    return fields[opt.root_index].generator();
}

void write_output(const std::string& out_file, const std::string& content) {
    if (out_file.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_file);
    if (!f) throw bp::Error("cannot open output file " + out_file);
    f << content;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Renyi-Parry densities of beta-transformations"};
    app.require_subcommand(1);
    app.fallthrough(); // allow global options like --out after the subcommand
    app.set_config("--config");

    std::string out_file;
    app.add_option("--out", out_file, "write output to a file instead of stdout");

    int exit_code = 0;

    // orbit
    BaseOptions orbit_opt;
    long orbit_budget = 10000;
    auto* orbit_cmd = app.add_subcommand("orbit", "classify the orbit of 1");
    add_base_options(orbit_cmd, orbit_opt);
    orbit_cmd->add_option("--budget", orbit_budget, "maximum orbit points to compute");
    orbit_cmd->final_callback([&] {
        bp::FieldElement beta = resolve_base(orbit_opt);
        bp::OrbitDescriptor o = bp::orbit_of_one(beta, orbit_budget);
        write_output(out_file, bp::report::orbit_json(o).dump(2) + "\n");
    });

    // density
    BaseOptions dens_opt;
    long dens_budget = 10000;
    bool dens_norm = false;
    std::string dens_format = "json";
    auto* dens_cmd = app.add_subcommand("density", "exact invariant density");
    add_base_options(dens_cmd, dens_opt);
    dens_cmd->add_option("--budget", dens_budget, "maximum orbit points to compute");
    dens_cmd->add_flag("--normalized", dens_norm, "scale to total mass one");
    dens_cmd->add_option("--format", dens_format, "json, csv or svg")
        ->check(CLI::IsMember({"json", "csv", "svg"}));
    dens_cmd->final_callback([&] {
        bp::FieldElement beta = resolve_base(dens_opt);
        bp::StepFunction h = bp::build_density(bp::orbit_of_one(beta, dens_budget));
        if (dens_norm) h = bp::normalize(h);
        if (dens_format == "csv") write_output(out_file, bp::report::step_function_csv(h));
        else if (dens_format == "svg")
            write_output(out_file, bp::report::step_function_svg(h, "invariant density"));
        else {
            bp::ordered_json j;
            j["beta"] = bp::report::element_json(beta);
            j["normalized"] = dens_norm;
            j["density"] = bp::report::step_function_json(h);
            j["integral"] = bp::report::element_json(bp::integral(h));
            write_output(out_file, j.dump(2) + "\n");
        }
    });

    // invariance
    BaseOptions inv_opt;
    long inv_budget = 10000;
    auto* inv_cmd = app.add_subcommand("invariance", "transfer-operator fixed point check");
    add_base_options(inv_cmd, inv_opt);
    inv_cmd->add_option("--budget", inv_budget, "maximum orbit points to compute");
    inv_cmd->final_callback([&] {
        bp::FieldElement beta = resolve_base(inv_opt);
        bp::StepFunction h = bp::normalize(bp::build_density(bp::orbit_of_one(beta, inv_budget)));
        bp::StepFunction lh = bp::transfer_operator(beta, h);
        bool fixed = bp::equal(lh, h);
        write_output(out_file, bp::report::invariance_json(beta, h, lh, fixed).dump(2) + "\n");
        if (!fixed) exit_code = 1;
    });

    // coincide
    BaseOptions co1_opt;
    std::string poly2;
    std::size_t root_index2 = 0;
    long co_budget = 10000;
    auto* co_cmd = app.add_subcommand("coincide", "decide coincidence of two invariant measures");
    add_base_options(co_cmd, co1_opt, "--poly,--poly1");
    co_cmd->add_option("--poly2", poly2, "second base polynomial (--pq implies beta+1)");
    co_cmd->add_option("--root-index2", root_index2, "root choice for --poly2");
    co_cmd->add_option("--budget", co_budget, "maximum orbit points to compute");
    co_cmd->final_callback([&] {
        bp::FieldElement b1 = resolve_base(co1_opt);
        std::optional<bp::FieldElement> b2;
        if (!poly2.empty()) {
            auto fields = bp::isolate_roots_above_one(parse_poly(poly2));
            if (root_index2 >= fields.size())
                throw bp::DomainError("--root-index2 exceeds the number of roots above one");
            b2 = fields[root_index2].generator();
        } else if (!co1_opt.pq.empty()) {
            b2 = b1 + bp::Rational(1);
        } else {
            throw bp::DomainError("coincide needs --poly2 or a --pq family pair");
        }
        bp::CoincidenceReport r = bp::coincide(b1, *b2, co_budget);
        write_output(out_file, bp::report::coincidence_json(r).dump(2) + "\n");
    });

    // sweep
    int sweep_bound = 5;
    long sweep_budget = 10000;
    auto* sweep_cmd = app.add_subcommand("sweep", "verify every family pair with p <= q <= bound");
    sweep_cmd->add_option("--bound", sweep_bound, "largest q");
    sweep_cmd->add_option("--budget", sweep_budget, "maximum orbit points to compute");
    sweep_cmd->final_callback([&] {
        bp::SweepResult r = bp::family_sweep(sweep_bound, sweep_budget);
        write_output(out_file, bp::to_json(r).dump(2) + "\n");
        if (!r.all_pass) exit_code = 1;
    });

    // search
    bp::SearchConfig cfg;
    auto* search_cmd = app.add_subcommand("search", "catalogue scan for coincident pairs");
    search_cmd->add_option("--degree", cfg.max_degree, "maximum modulus degree");
    search_cmd->add_option("--coeff-bound", cfg.coeff_bound, "coefficient magnitude bound");
    double root_max_cli = 7.0;
    auto* rm = search_cmd->add_option("--root-max", root_max_cli, "largest base value");
    search_cmd->add_option("--budget", cfg.orbit_budget, "orbit budget per base");
    search_cmd->final_callback([&] {
        if (*rm) cfg.root_max = bp::Rational(static_cast<long long>(root_max_cli * 1000), 1000);
        bp::SearchResult r = bp::search_coincident_pairs(cfg);
        write_output(out_file, bp::to_json(r).dump(2) + "\n");
        if (!r.consistent) exit_code = 1;
    });

    // figure1
    std::string fig_format = "csv";
    auto* fig_cmd = app.add_subcommand("figure1", "map and density data of the smallest family pair");
    fig_cmd->add_option("--format", fig_format, "csv, svg or json")
        ->check(CLI::IsMember({"csv", "svg", "json"}));
    fig_cmd->final_callback([&] { write_output(out_file, bp::emit_figure1(fig_format)); });

    // mc-validate
    BaseOptions mc_opt;
    bp::SearchConfig mc_cfg;
    auto* mc_cmd = app.add_subcommand("mc-validate", "Monte Carlo corroboration of bin masses");
    add_base_options(mc_cmd, mc_opt);
    mc_cmd->add_option("--samples", mc_cfg.mc_samples, "sample count");
    mc_cmd->add_option("--bins", mc_cfg.mc_bins, "bin count");
    mc_cmd->add_option("--seed", mc_cfg.seed, "RNG seed");
    mc_cmd->add_option("--budget", mc_cfg.orbit_budget, "orbit budget");
    mc_cmd->final_callback([&] {
        bp::FieldElement beta = resolve_base(mc_opt);
        bp::McResult r = bp::mc_validate(beta, mc_cfg);
        write_output(out_file, bp::to_json(r).dump(2) + "\n");
        if (!r.pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
