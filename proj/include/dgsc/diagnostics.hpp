#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dgsc/dg.hpp"
#include "dgsc/projections.hpp"

namespace dgsc {

struct ErrorReport {
    int n_cells = 0;
    int p = 0;
    double t = 0.0;
    double downwind = 0.0;
    double cell_avg = 0.0;
    std::vector<double> moments;            // index m = 0..p
    std::vector<double> radau_point_errors;  // one per root of R^-_{p+1}
    std::optional<double> period_diff;
};

/// h sum_j |U_j(1,t) - u_j(1,t)| over the downwind points.
double downwind_error(const DgState& state, const InitialCondition& ic, const Mesh& mesh,
                      double a);

/// h sum_j |int (U_j - u_j) P_m dxi|; m = 0 is the cell-average error.
double moment_error(const DgState& state, const InitialCondition& ic, const Mesh& mesh,
                    double a, int m);

/// For each root xi_r of R^-_{p+1}: h sum_j |U_j(xi_r,t) - u_j(xi_r,t)|.
std::vector<double> radau_point_error(const DgState& state, const InitialCondition& ic,
                                      const Mesh& mesh, double a);

/// h sum_j int |U_j^A - U_j^B| dxi with a fixed 2p+4-node Gauss rule.
double period_difference(const DgState& state_a, const DgState& state_b,
                         const Mesh& mesh);

ErrorReport error_report(const DgState& state, const InitialCondition& ic,
                         const Mesh& mesh, double a);

/// r_i = log2(e_i / e_{i+1}) for a doubling-N sweep; absent where undefined.
std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors);

/// Least-squares slope of log(err) vs log(h) for h = L/N.
double loglog_slope(const std::vector<int>& n_values, const std::vector<double>& errors,
                    double domain_length);

}  // namespace dgsc
