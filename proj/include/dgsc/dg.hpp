#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dgsc/polynomials.hpp"

namespace dgsc {

/// Periodic 1-D mesh given by its N+1 strictly increasing cell boundaries.
class Mesh {
public:
    explicit Mesh(std::vector<double> boundaries);

    static Mesh uniform(double x_left, double x_right, int n_cells);

    int n_cells() const { return static_cast<int>(h_.size()); }
    double left(int j) const { return boundaries_[j]; }
    double right(int j) const { return boundaries_[j + 1]; }
    double h(int j) const { return h_[j]; }
    double h_min() const { return h_min_; }
    double x_left() const { return boundaries_.front(); }
    double x_right() const { return boundaries_.back(); }
    double length() const { return boundaries_.back() - boundaries_.front(); }
    bool uniform_spacing() const;

    /// Physical coordinate of canonical point xi in cell j.
    double x_of(int j, double xi) const {
        return 0.5 * (boundaries_[j] + boundaries_[j + 1]) + 0.5 * h_[j] * xi;
    }

private:
    std::vector<double> boundaries_;
    std::vector<double> h_;
    double h_min_;
};

/// Modal DG state: N x (p+1) Legendre coefficients plus the current time.
struct DgState {
    int p = 0;
    int n_cells = 0;
    std::vector<double> coeffs;  // row-major, coeffs[j*(p+1)+k]
    double time = 0.0;

    double& c(int j, int k) { return coeffs[j * (p + 1) + k]; }
    double c(int j, int k) const { return coeffs[j * (p + 1) + k]; }

    /// U_j(xi).
    double eval(int j, double xi) const {
        double s = 0.0;
        for (int k = 0; k <= p; ++k) s += c(j, k) * legendre_eval(k, xi);
        return s;
    }

    /// Downwind trace U_j(1) = sum_k c_jk.
    double downwind(int j) const {
        double s = 0.0;
        for (int k = 0; k <= p; ++k) s += c(j, k);
        return s;
    }

    static DgState zeros(int p, int n_cells) {
        return DgState{p, n_cells, std::vector<double>(n_cells * (p + 1), 0.0), 0.0};
    }
};

/// Semi-discrete upwind DG operator in Legendre coefficient space:
///   dc_jk/dt = -((2k+1)a/h_j) [ int dU_j/dxi P_k dxi + (-1)^k [[U_j]] ],
/// with [[U_j]] = U_j(-1) - U_{j-1}(1), periodic wrap, and the volume term
/// evaluated through int P'_m P_k dxi = 2 for m > k, m+k odd (else 0).
template <class Scalar>
void semidiscrete_rhs(int p, int n_cells, const Scalar* coeffs, const Mesh& mesh,
                      double a, Scalar* out) {
    if (mesh.n_cells() != n_cells)
        throw std::invalid_argument("semidiscrete_rhs: state/mesh size mismatch");
    const int nk = p + 1;
    for (int j = 0; j < n_cells; ++j) {
        const int jm = (j == 0) ? n_cells - 1 : j - 1;
        const Scalar* cj = coeffs + j * nk;
        const Scalar* cl = coeffs + jm * nk;
        Scalar left_trace = Scalar(0), up_downwind = Scalar(0);
        for (int k = 0; k < nk; ++k) {
            left_trace += (k % 2 == 0) ? cj[k] : -cj[k];
            up_downwind += cl[k];
        }
        const Scalar jump = left_trace - up_downwind;
        const double scale = a / mesh.h(j);
        for (int k = 0; k < nk; ++k) {
            Scalar vol = Scalar(0);
            for (int m = k + 1; m <= p; ++m)
                if ((m + k) % 2 == 1) vol += 2.0 * cj[m];
            const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
            out[j * nk + k] = -(2 * k + 1) * scale * (vol + sgn * jump);
        }
    }
}

std::vector<double> semidiscrete_rhs(const DgState& state, const Mesh& mesh, double a);

/// Classical 4-stage Runge-Kutta step of the semi-discrete operator.
DgState rk4_step(const DgState& state, const Mesh& mesh, double a, double dt);

enum class ProjectionKind { L2, LeftRadau, EquidistantInterp };

struct RunConfig {
    int p = 1;
    int n_cells = 16;
    double x_left = -1.0;
    double x_right = 1.0;
    double a = 1.0;
    double cfl_numerator = 0.15;  // dt = cfl_numerator/(2p+1) * h_min/a
    double t_final = 0.0;
    double t_final_h_multiple = -1.0;  // when >= 0, t_final = multiple * h_min
    ProjectionKind projection = ProjectionKind::L2;

    double resolve_t_final(const Mesh& mesh) const {
        return t_final_h_multiple >= 0.0 ? t_final_h_multiple * mesh.h_min() : t_final;
    }
    double dt(const Mesh& mesh) const {
        return cfl_numerator / (2 * p + 1) * mesh.h_min() / a;
    }
};

/// Advance to t_final; the last step is truncated to land exactly on it.
/// The callback, when set, is invoked after every step (and once at t=0).
DgState run(const RunConfig& config, const Mesh& mesh, DgState initial,
            const std::function<void(const DgState&)>& on_step = nullptr);

}  // namespace dgsc
