#include "ricap/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace ricap {

std::string to_string(SweepVariable v) {
    switch (v) {
        case SweepVariable::kappa: return "kappa";
        case SweepVariable::n_t: return "n_t";
        case SweepVariable::n_r: return "n_r";
        case SweepVariable::power_db: return "power_db";
    }
    return "?";
}

std::string to_string(SweepMethod m) {
    switch (m) {
        case SweepMethod::upper_bound: return "upper_bound";
        case SweepMethod::mc_identity: return "mc_identity";
        case SweepMethod::quad_m1: return "quad_m1";
        case SweepMethod::new_scheme_mc: return "new_scheme_mc";
        case SweepMethod::new_scheme_ub: return "new_scheme_ub";
        case SweepMethod::new_scheme_lb: return "new_scheme_lb";
        case SweepMethod::new_scheme_approx: return "new_scheme_approx";
        case SweepMethod::asymptotic: return "asymptotic";
    }
    return "?";
}

std::optional<SweepMethod> parse_sweep_method(const std::string& name) {
    for (SweepMethod m : {SweepMethod::upper_bound, SweepMethod::mc_identity, SweepMethod::quad_m1,
                          SweepMethod::new_scheme_mc, SweepMethod::new_scheme_ub,
                          SweepMethod::new_scheme_lb, SweepMethod::new_scheme_approx,
                          SweepMethod::asymptotic})
        if (to_string(m) == name) return m;
    return std::nullopt;
}

std::optional<SweepVariable> parse_sweep_variable(const std::string& name) {
    for (SweepVariable v : {SweepVariable::kappa, SweepVariable::n_t, SweepVariable::n_r,
                            SweepVariable::power_db})
        if (to_string(v) == name) return v;
    return std::nullopt;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

bool is_positive_integer(double v) {
    return v >= 1.0 && v == std::floor(v);
}

ChannelConfig config_at(const SweepSpec& spec, double value) {
    switch (spec.variable) {
        case SweepVariable::kappa:
            return ChannelConfig(spec.fixed.n_t, spec.fixed.n_r, value, spec.fixed.power);
        case SweepVariable::n_t:
            return ChannelConfig(static_cast<int>(value), spec.fixed.n_r, spec.fixed.kappa,
                                 spec.fixed.power);
        case SweepVariable::n_r:
            return ChannelConfig(spec.fixed.n_t, static_cast<int>(value), spec.fixed.kappa,
                                 spec.fixed.power);
        case SweepVariable::power_db:
            return ChannelConfig(spec.fixed.n_t, spec.fixed.n_r, spec.fixed.kappa,
                                 std::pow(10.0, value / 10.0));
    }
    throw std::logic_error("config_at: unreachable");
}

void validate(const SweepSpec& spec) {
    if (spec.grid.empty())
        throw std::invalid_argument("SweepSpec: grid must be nonempty");
    for (size_t i = 1; i < spec.grid.size(); ++i)
        if (!(spec.grid[i] > spec.grid[i - 1]))
            throw std::invalid_argument("SweepSpec: grid must be strictly increasing");
    if (spec.methods.empty())
        throw std::invalid_argument("SweepSpec: methods set must be nonempty");
    if (spec.variable == SweepVariable::n_t || spec.variable == SweepVariable::n_r)
        for (double v : spec.grid)
            if (!is_positive_integer(v))
                throw std::invalid_argument("SweepSpec: antenna grid values must be positive integers");
    for (double v : spec.grid) {
        const ChannelConfig cfg = config_at(spec, v);
        for (SweepMethod m : spec.methods) {
            if (m == SweepMethod::quad_m1 && cfg.m() != 1)
                throw std::invalid_argument("SweepSpec: quad_m1 requires min(n_t, n_r) = 1 throughout");
            if ((m == SweepMethod::new_scheme_mc || m == SweepMethod::new_scheme_ub ||
                 m == SweepMethod::new_scheme_lb || m == SweepMethod::new_scheme_approx) &&
                cfg.n_r != 1)
                throw std::invalid_argument("SweepSpec: new-scheme methods require n_r = 1 throughout");
        }
    }
}

CapacityEstimate evaluate(SweepMethod m, const ChannelConfig& cfg, const MonteCarloSpec& mc) {
    switch (m) {
        case SweepMethod::upper_bound: return capacity_upper_bound(cfg);
        case SweepMethod::mc_identity:
            return mc_ergodic_capacity(cfg, CovarianceScheme::scaled_identity(cfg), mc);
        case SweepMethod::quad_m1: return quadrature_capacity_m1(cfg);
        case SweepMethod::new_scheme_mc: return mc_new_scheme_capacity(cfg, mc);
        case SweepMethod::new_scheme_ub: return new_scheme_upper_bound(cfg);
        case SweepMethod::new_scheme_lb: {
            CapacityEstimate e = new_scheme_lower_bound(cfg, QuadratureRule::gauss_laguerre(64));
            if (e.uncertainty > 1e-7)
                e = new_scheme_lower_bound(cfg, QuadratureRule::adaptive(1e-9));
            return e;
        }
        case SweepMethod::new_scheme_approx: return new_scheme_large_kappa_approx(cfg);
        case SweepMethod::asymptotic:
            return asymptotic_capacity_large_nt(cfg.n_r, cfg.kappa, cfg.power);
    }
    throw std::logic_error("evaluate: unreachable");
}

} // namespace

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    validate(spec);
    const double unit_scale = spec.units == Units::bits ? 1.0 / std::log(2.0) : 1.0;
    std::vector<SweepRow> rows;
    rows.reserve(spec.grid.size());
    for (size_t i = 0; i < spec.grid.size(); ++i) {
        SweepRow row;
        row.value = spec.grid[i];
        const ChannelConfig cfg = config_at(spec, spec.grid[i]);
        const MonteCarloSpec point_mc(spec.mc.samples, mix_seed(spec.mc.seed, i), spec.mc.shards,
                                      spec.mc.confidence);
        for (SweepMethod m : spec.methods) {
            SweepEntry entry;
            try {
                const CapacityEstimate e = evaluate(m, cfg, point_mc);
                entry.capacity = e.nats * unit_scale;
                entry.uncertainty = e.uncertainty * unit_scale;
                entry.ok = true;
            } catch (const std::exception& ex) {
                entry.error = ex.what();
            }
            row.entries.push_back(std::move(entry));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out) {
    if (rows.empty())
        throw std::invalid_argument("emit_csv: rows must be nonempty");
    out << "variable,value";
    for (SweepMethod m : spec.methods)
        out << ',' << to_string(m) << "_capacity," << to_string(m) << "_err";
    out << '\n';
    char buf[64];
    const std::string name = to_string(spec.variable);
    for (const SweepRow& row : rows) {
        std::snprintf(buf, sizeof buf, "%.9g", row.value);
        out << name << ',' << buf;
        for (const SweepEntry& e : row.entries) {
            if (!e.ok) {
                out << ",ERROR,ERROR";
                continue;
            }
            std::snprintf(buf, sizeof buf, "%.9g", e.capacity);
            out << ',' << buf;
            std::snprintf(buf, sizeof buf, "%.9g", e.uncertainty);
            out << ',' << buf;
        }
        out << '\n';
    }
    if (!out)
        throw std::runtime_error("emit_csv: write failed");
}

namespace {

std::vector<double> linear_grid(double start, double stop, int steps) {
    std::vector<double> g(steps);
    for (int i = 0; i < steps; ++i)
        g[i] = steps == 1 ? start : start + (stop - start) * i / (steps - 1);
    return g;
}

std::vector<double> integer_grid(int start, int stop) {
    std::vector<double> g;
    for (int v = start; v <= stop; ++v) g.push_back(v);
    return g;
}

} // namespace

std::vector<FigureCurve> figure_preset(int figure, long samples, std::uint64_t seed, int shards,
                                       Units units) {
    const MonteCarloSpec mc(samples, seed, shards);
    auto spec = [&](SweepVariable var, std::vector<double> grid, ChannelConfig fixed,
                    std::vector<SweepMethod> methods) {
        return SweepSpec{var, std::move(grid), fixed, std::move(methods), mc, units};
    };
    const double p0 = 1.0;                           // 0 dB
    const double p10 = 10.0;                         // 10 dB
    std::vector<FigureCurve> curves;
    switch (figure) {
        case 1:
        case 2: {
            const double p = figure == 1 ? p0 : p10;
            for (int nr : {1, 2, 4, 8})
                curves.push_back({"nr" + std::to_string(nr),
                                  spec(SweepVariable::kappa, linear_grid(0.0, 20.0, 21),
                                       ChannelConfig(1, nr, 0.0, p), {SweepMethod::asymptotic})});
            break;
        }
        case 3:
            curves.push_back({"kappa10",
                              spec(SweepVariable::n_r, integer_grid(1, 32),
                                   ChannelConfig(1, 1, 10.0, p10), {SweepMethod::asymptotic})});
            break;
        case 4:
        case 5: {
            const double k = figure == 4 ? 1.0 : 10.0;
            curves.push_back({"rician",
                              spec(SweepVariable::n_r, integer_grid(1, 8),
                                   ChannelConfig(1, 1, k, p10),
                                   {SweepMethod::quad_m1, SweepMethod::upper_bound})});
            curves.push_back({"rayleigh",
                              spec(SweepVariable::n_r, integer_grid(1, 8),
                                   ChannelConfig(1, 1, 0.0, p10), {SweepMethod::quad_m1})});
            break;
        }
        case 6:
        case 7: {
            const double k = figure == 6 ? 1.0 : 10.0;
            curves.push_back({"rician",
                              spec(SweepVariable::n_t, integer_grid(1, 8),
                                   ChannelConfig(1, 1, k, p10),
                                   {SweepMethod::quad_m1, SweepMethod::upper_bound})});
            curves.push_back({"rayleigh",
                              spec(SweepVariable::n_t, integer_grid(1, 8),
                                   ChannelConfig(1, 1, 0.0, p10), {SweepMethod::quad_m1})});
            break;
        }
        case 8:
        case 9: {
            const double k = figure == 8 ? 1.0 : 10.0;
            curves.push_back(
                {"new_scheme",
                 spec(SweepVariable::n_t, integer_grid(1, 16), ChannelConfig(1, 1, k, p10),
                      {SweepMethod::new_scheme_ub, SweepMethod::new_scheme_lb,
                       SweepMethod::new_scheme_approx, SweepMethod::new_scheme_mc,
                       SweepMethod::quad_m1, SweepMethod::upper_bound})});
            break;
        }
        default:
            throw std::invalid_argument("figure_preset: figure must be in 1..9");
    }
    return curves;
}

} // namespace ricap
