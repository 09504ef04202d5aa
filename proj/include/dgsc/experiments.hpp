#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dgsc/diagnostics.hpp"
#include "dgsc/dg.hpp"

namespace dgsc {

enum class ExperimentKind {
    SingleRun,
    ConvergenceSweep,
    PeriodDifference,
    DecayCurve,
    Spectrum,
    PadeReport,
};

struct ExperimentSpec {
    std::string name;
    ExperimentKind kind = ExperimentKind::ConvergenceSweep;
    RunConfig base;
    std::vector<int> sweep_n;                 // strictly doubling for sweeps
    std::vector<ProjectionKind> projections;  // columns, in order
    std::vector<int> moments;                 // measured moment indices
    bool measure_downwind = true;
    bool measure_cell_avg = true;
    double decay_t_end = 0.0;  // 0 -> derived from damping_time
    int initial_mode = 4;      // sin(2 pi n x / L)
};

std::vector<std::string> preset_names();
ExperimentSpec preset(const std::string& name);

std::string projection_name(ProjectionKind kind);
ProjectionKind projection_from_name(const std::string& name);

/// One error column of a sweep table plus its appended rates.
struct SweepColumn {
    std::string label;
    std::vector<double> errors;  // one per sweep N
    std::vector<std::optional<double>> rates;
};

struct SweepResult {
    std::vector<int> n_values;
    std::vector<SweepColumn> columns;
};

struct DecayResult {
    std::vector<double> times;
    std::vector<double> errors;
};

SweepResult run_sweep(const ExperimentSpec& spec, int jobs = 1);
DecayResult run_decay(const ExperimentSpec& spec);

/// Runs the experiment and writes <name>.csv (and <name>.gp for decay
/// curves) into out_dir. Returns the paths written.
std::vector<std::string> execute(const ExperimentSpec& spec, const std::string& out_dir,
                                 int jobs = 1);

/// Key-value config file (flat TOML-style) overriding preset fields.
ExperimentSpec spec_from_config(const std::string& path);

}  // namespace dgsc
