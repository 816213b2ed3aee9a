// Command-line front end: single-point capacity queries, parameter sweeps
// and figure-reproduction presets, all emitted as CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ricap/sweep.hpp"

namespace {

struct Options {
    int nt = 1;
    int nr = 1;
    double kappa = 0.0;
    double snr_db = 0.0;
    std::string method;
    std::string covariance = "identity";
    long samples = 200000;
    std::uint64_t seed = 12345;
    int shards = 1;
    std::string units = "nats";
    std::string out;
    std::string variable = "kappa";
    std::string grid;
    std::string methods;
};

double linear_power(double snr_db) {
    return std::pow(10.0, snr_db / 10.0);
}

ricap::Units parse_units(const std::string& u) {
    if (u == "nats") return ricap::Units::nats;
    if (u == "bits") return ricap::Units::bits;
    throw CLI::ValidationError("--units must be nats or bits");
}

std::vector<double> parse_grid(const std::string& s) {
    std::vector<double> grid;
    if (s.find(':') != std::string::npos) {
        double start, stop;
        int steps;
        if (std::sscanf(s.c_str(), "%lf:%lf:%d", &start, &stop, &steps) != 3 || steps < 1)
            throw CLI::ValidationError("--grid must be start:stop:steps or a comma list");
        for (int i = 0; i < steps; ++i)
            grid.push_back(steps == 1 ? start : start + (stop - start) * i / (steps - 1));
        return grid;
    }
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
    return grid;
}

void write_output(const std::string& out, const std::string& content) {
    if (out.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + out);
    f << content;
    if (!f) throw std::runtime_error("write failed: " + out);
}

std::string point_csv(const std::string& name, const ricap::CapacityEstimate& e,
                      ricap::Units units) {
    const double scale = units == ricap::Units::bits ? 1.0 / std::log(2.0) : 1.0;
    char buf[128];
    std::snprintf(buf, sizeof buf, "method,capacity,uncertainty\n%s,%.9g,%.9g\n", name.c_str(),
                  e.nats * scale, e.uncertainty * scale);
    return buf;
}

std::string curve_out_path(const std::string& base, const std::string& label) {
    const auto dot = base.rfind('.');
    if (dot == std::string::npos || base.rfind('/') > dot) return base + "_" + label;
    return base.substr(0, dot) + "_" + label + base.substr(dot);
}

int run(int argc, char** argv) {
    CLI::App app{"Ergodic capacity of multiple-antenna Rician fading channels"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "config file with key=value options");

    Options opt;
    app.add_option("--nt", opt.nt, "transmit antennas")->check(CLI::PositiveNumber);
    app.add_option("--nr", opt.nr, "receive antennas")->check(CLI::PositiveNumber);
    app.add_option("--kappa", opt.kappa, "Rician factor")->check(CLI::NonNegativeNumber);
    app.add_option("--snr-db", opt.snr_db, "transmit power budget in dB");
    app.add_option("--samples", opt.samples, "Monte Carlo samples per point");
    app.add_option("--seed", opt.seed, "random seed; fully determines stochastic output");
    app.add_option("--shards", opt.shards, "Monte Carlo shards")->check(CLI::PositiveNumber);
    app.add_option("--units", opt.units, "output units: nats or bits");
    app.add_option("--out", opt.out, "output file (stdout when absent)");

    auto* bound = app.add_subcommand("bound", "closed-form capacity bounds");
    bound->add_option("--method", opt.method, "jensen (default), deterministic or asymptotic");

    auto* capacity = app.add_subcommand("capacity", "ergodic capacity (Monte Carlo or quadrature)");
    capacity->add_option("--method", opt.method, "mc (default) or quad");
    capacity->add_option("--covariance", opt.covariance, "identity (default) or rician");

    auto* scheme = app.add_subcommand("new-scheme", "Rician-weighted covariance capacity");
    scheme->add_option("--method", opt.method, "mc (default), ub, lb or approx");

    auto* sweep = app.add_subcommand("sweep", "parameter sweep to CSV");
    sweep->add_option("--variable", opt.variable, "kappa, n_t, n_r or power_db");
    sweep->add_option("--grid", opt.grid, "comma list or start:stop:steps")->required();
    sweep->add_option("--methods", opt.methods, "comma list of methods")->required();

    int figure_number = 0;
    auto* figure = app.add_subcommand("figure", "figure reproduction preset");
    figure->add_option("number", figure_number, "figure number 1..9")->required();

    CLI11_PARSE(app, argc, argv);

    const ricap::Units units = parse_units(opt.units);
    const ricap::ChannelConfig cfg(opt.nt, opt.nr, opt.kappa, linear_power(opt.snr_db));
    const ricap::MonteCarloSpec mc(opt.samples, opt.seed, opt.shards);

    if (bound->parsed()) {
        const std::string m = opt.method.empty() ? "jensen" : opt.method;
        ricap::CapacityEstimate e{};
        if (m == "jensen")
            e = ricap::capacity_upper_bound(cfg);
        else if (m == "deterministic")
            e = ricap::deterministic_capacity(cfg);
        else if (m == "asymptotic")
            e = ricap::asymptotic_capacity_large_nt(cfg.n_r, cfg.kappa, cfg.power);
        else
            throw CLI::ValidationError("bound --method must be jensen, deterministic or asymptotic");
        write_output(opt.out, point_csv(m, e, units));
        return 0;
    }

    if (capacity->parsed()) {
        const std::string m = opt.method.empty() ? "mc" : opt.method;
        ricap::CapacityEstimate e{};
        if (m == "mc") {
            const auto q = opt.covariance == "rician" ? ricap::CovarianceScheme::rician_weighted(cfg)
                                                      : ricap::CovarianceScheme::scaled_identity(cfg);
            e = ricap::mc_ergodic_capacity(cfg, q, mc);
        } else if (m == "quad") {
            e = ricap::quadrature_capacity_m1(cfg);
        } else {
            throw CLI::ValidationError("capacity --method must be mc or quad");
        }
        write_output(opt.out, point_csv(m, e, units));
        return 0;
    }

    if (scheme->parsed()) {
        const std::string m = opt.method.empty() ? "mc" : opt.method;
        ricap::CapacityEstimate e{};
        if (m == "mc")
            e = ricap::mc_new_scheme_capacity(cfg, mc);
        else if (m == "ub")
            e = ricap::new_scheme_upper_bound(cfg);
        else if (m == "lb")
            e = ricap::new_scheme_lower_bound(cfg, ricap::QuadratureRule::gauss_laguerre(64));
        else if (m == "approx")
            e = ricap::new_scheme_large_kappa_approx(cfg);
        else
            throw CLI::ValidationError("new-scheme --method must be mc, ub, lb or approx");
        write_output(opt.out, point_csv("new_scheme_" + m, e, units));
        return 0;
    }

    if (sweep->parsed()) {
        ricap::SweepSpec spec{ricap::SweepVariable::kappa, parse_grid(opt.grid), cfg, {}, mc, units};
        const auto var = ricap::parse_sweep_variable(opt.variable);
        if (!var) throw CLI::ValidationError("unknown sweep variable: " + opt.variable);
        spec.variable = *var;
        std::stringstream ss(opt.methods);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            const auto m = ricap::parse_sweep_method(tok);
            if (!m) throw CLI::ValidationError("unknown sweep method: " + tok);
            spec.methods.push_back(*m);
        }
        const auto rows = ricap::run_sweep(spec);
        std::ostringstream out;
        ricap::emit_csv(spec, rows, out);
        write_output(opt.out, out.str());
        return 0;
    }

    // figure preset: one CSV per curve
    const auto curves = ricap::figure_preset(figure_number, opt.samples, opt.seed, opt.shards, units);
    for (const auto& curve : curves) {
        const auto rows = ricap::run_sweep(curve.spec);
        std::ostringstream out;
        ricap::emit_csv(curve.spec, rows, out);
        if (opt.out.empty())
            std::cout << "# curve " << curve.label << '\n' << out.str();
        else
            write_output(curve_out_path(opt.out, curve.label), out.str());
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return 1;
    }
}
