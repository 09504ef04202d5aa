#include "dgsc/dg.hpp"

#include <algorithm>
#include <cmath>

namespace dgsc {

Mesh::Mesh(std::vector<double> boundaries) : boundaries_(std::move(boundaries)) {
    if (boundaries_.size() < 3) throw std::invalid_argument("Mesh: need at least 2 cells");
    h_.resize(boundaries_.size() - 1);
    for (std::size_t j = 0; j + 1 < boundaries_.size(); ++j) {
        h_[j] = boundaries_[j + 1] - boundaries_[j];
        if (h_[j] <= 0.0)
            throw std::invalid_argument("Mesh: boundaries not strictly increasing");
    }
    h_min_ = *std::min_element(h_.begin(), h_.end());
}

Mesh Mesh::uniform(double x_left, double x_right, int n_cells) {
    std::vector<double> b(n_cells + 1);
    for (int j = 0; j <= n_cells; ++j)
        b[j] = x_left + (x_right - x_left) * j / n_cells;
    return Mesh(std::move(b));
}

bool Mesh::uniform_spacing() const {
    for (double hj : h_)
        if (std::abs(hj - h_[0]) > 1e-14 * h_[0]) return false;
    return true;
}

std::vector<double> semidiscrete_rhs(const DgState& state, const Mesh& mesh, double a) {
    std::vector<double> out(state.coeffs.size());
    semidiscrete_rhs<double>(state.p, state.n_cells, state.coeffs.data(), mesh, a,
                             out.data());
    return out;
}

DgState rk4_step(const DgState& state, const Mesh& mesh, double a, double dt) {
    if (dt <= 0.0) throw std::invalid_argument("rk4_step: dt <= 0");
    const std::size_t n = state.coeffs.size();
    DgState stage = state;

    std::vector<double> k1 = semidiscrete_rhs(state, mesh, a);
    for (std::size_t i = 0; i < n; ++i) stage.coeffs[i] = state.coeffs[i] + 0.5 * dt * k1[i];
    std::vector<double> k2 = semidiscrete_rhs(stage, mesh, a);
    for (std::size_t i = 0; i < n; ++i) stage.coeffs[i] = state.coeffs[i] + 0.5 * dt * k2[i];
    std::vector<double> k3 = semidiscrete_rhs(stage, mesh, a);
    for (std::size_t i = 0; i < n; ++i) stage.coeffs[i] = state.coeffs[i] + dt * k3[i];
    std::vector<double> k4 = semidiscrete_rhs(stage, mesh, a);

    DgState next = state;
    for (std::size_t i = 0; i < n; ++i)
        next.coeffs[i] =
            state.coeffs[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    next.time = state.time + dt;
    return next;
}

DgState run(const RunConfig& config, const Mesh& mesh, DgState initial,
            const std::function<void(const DgState&)>& on_step) {
    const double t_final = config.resolve_t_final(mesh);
    const double dt = config.dt(mesh);
    DgState state = std::move(initial);
    if (on_step) on_step(state);
    long step = 0;
    while (state.time < t_final - 1e-14 * std::max(1.0, t_final)) {
        double step_dt = std::min(dt, t_final - state.time);
        state = rk4_step(state, mesh, config.a, step_dt);
        ++step;
        for (double v : state.coeffs)
            if (!std::isfinite(v))
                throw std::runtime_error("run: non-finite state at step " +
                                         std::to_string(step));
        if (on_step) on_step(state);
    }
    state.time = t_final;
    return state;
}

}  // namespace dgsc
