#ifndef RICAP_SWEEP_HPP
#define RICAP_SWEEP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ricap/estimators.hpp"

namespace ricap {

enum class SweepVariable { kappa, n_t, n_r, power_db };
enum class SweepMethod {
    upper_bound,
    mc_identity,
    quad_m1,
    new_scheme_mc,
    new_scheme_ub,
    new_scheme_lb,
    new_scheme_approx,
    asymptotic
};
enum class Units { nats, bits };

std::string to_string(SweepVariable v);
std::string to_string(SweepMethod m);
std::optional<SweepMethod> parse_sweep_method(const std::string& name);
std::optional<SweepVariable> parse_sweep_variable(const std::string& name);

/// Declarative parameter sweep: which variable, over which grid, with
/// which methods, against which fixed configuration.
struct SweepSpec {
    SweepVariable variable;
    std::vector<double> grid;
    ChannelConfig fixed;       // the swept field is replaced per grid point
    std::vector<SweepMethod> methods;
    MonteCarloSpec mc;
    Units units = Units::nats;
};

struct SweepEntry {
    double capacity = 0.0;
    double uncertainty = 0.0;
    bool ok = false;
    std::string error;
};

struct SweepRow {
    double value;
    std::vector<SweepEntry> entries;  // one per requested method, in order
};

/// Evaluate every (grid point, method) pair. Per-point failures are
/// recorded in the row and the sweep continues; spec-level validation
/// failures throw.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// CSV with header "variable,value,<method>_capacity,<method>_err,...",
/// 9 significant digits, newline-terminated.
void emit_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows, std::ostream& out);

/// One labeled curve of a figure reproduction.
struct FigureCurve {
    std::string label;
    SweepSpec spec;
};

/// Preset sweeps for the standard capacity figures 1..9.
std::vector<FigureCurve> figure_preset(int figure, long samples, std::uint64_t seed, int shards,
                                       Units units);

} // namespace ricap

#endif
