#include "dgsc/diagnostics.hpp"

#include <cmath>
#include <stdexcept>

namespace dgsc {

double downwind_error(const DgState& state, const InitialCondition& ic, const Mesh& mesh,
                      double a) {
    const double h = mesh.h(0);
    double s = 0.0;
    for (int j = 0; j < mesh.n_cells(); ++j)
        s += std::abs(state.downwind(j) - ic.advected(mesh.right(j), a, state.time));
    return h * s;
}

double moment_error(const DgState& state, const InitialCondition& ic, const Mesh& mesh,
                    double a, int m) {
    if (m < 0 || m > state.p) throw std::invalid_argument("moment_error: m out of range");
    const double h = mesh.h(0);
    QuadratureRule q = gauss_rule(state.p + 8);
    double s = 0.0;
    for (int j = 0; j < mesh.n_cells(); ++j) {
        // int U_j P_m dxi is exact by orthogonality; the exact-solution part
        // uses quadrature.
        double iu = 2.0 * state.c(j, m) / (2 * m + 1);
        double ie = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i)
            ie += q.weights[i] *
                  ic.advected(mesh.x_of(j, q.nodes[i]), a, state.time) *
                  legendre_eval(m, q.nodes[i]);
        s += std::abs(iu - ie);
    }
    return h * s;
}

std::vector<double> radau_point_error(const DgState& state, const InitialCondition& ic,
                                      const Mesh& mesh, double a) {
    const double h = mesh.h(0);
    std::vector<double> roots = radau_roots(state.p);
    std::vector<double> out(roots.size(), 0.0);
    for (std::size_t r = 0; r < roots.size(); ++r) {
        double s = 0.0;
        for (int j = 0; j < mesh.n_cells(); ++j) {
            double u_num = (roots[r] == 1.0) ? state.downwind(j) : state.eval(j, roots[r]);
            s += std::abs(u_num - ic.advected(mesh.x_of(j, roots[r]), a, state.time));
        }
        out[r] = h * s;
    }
    return out;
}

double period_difference(const DgState& state_a, const DgState& state_b,
                         const Mesh& mesh) {
    if (state_a.p != state_b.p || state_a.n_cells != state_b.n_cells)
        throw std::invalid_argument("period_difference: incompatible states");
    const double h = mesh.h(0);
    QuadratureRule q = gauss_rule(2 * state_a.p + 4);
    double s = 0.0;
    for (int j = 0; j < mesh.n_cells(); ++j) {
        double cell = 0.0;
        for (std::size_t i = 0; i < q.nodes.size(); ++i)
            cell += q.weights[i] *
                    std::abs(state_a.eval(j, q.nodes[i]) - state_b.eval(j, q.nodes[i]));
        s += cell;
    }
    return h * s;
}

ErrorReport error_report(const DgState& state, const InitialCondition& ic,
                         const Mesh& mesh, double a) {
    ErrorReport rep;
    rep.n_cells = mesh.n_cells();
    rep.p = state.p;
    rep.t = state.time;
    rep.downwind = downwind_error(state, ic, mesh, a);
    rep.moments.resize(state.p + 1);
    for (int m = 0; m <= state.p; ++m) rep.moments[m] = moment_error(state, ic, mesh, a, m);
    rep.cell_avg = rep.moments[0];
    rep.radau_point_errors = radau_point_error(state, ic, mesh, a);
    return rep;
}

std::vector<std::optional<double>> convergence_rates(const std::vector<double>& errors) {
    std::vector<std::optional<double>> rates;
    for (std::size_t i = 0; i + 1 < errors.size(); ++i) {
        if (errors[i] > 0.0 && errors[i + 1] > 0.0)
            rates.push_back(std::log2(errors[i] / errors[i + 1]));
        else
            rates.push_back(std::nullopt);
    }
    return rates;
}

double loglog_slope(const std::vector<int>& n_values, const std::vector<double>& errors,
                    double domain_length) {
    if (n_values.size() != errors.size() || n_values.size() < 2)
        throw std::invalid_argument("loglog_slope: need matching sweeps of size >= 2");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(n_values.size());
    for (std::size_t i = 0; i < n_values.size(); ++i) {
        double x = std::log(domain_length / n_values[i]);
        double y = std::log(errors[i]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace dgsc
