#include "dgsc/projections.hpp"

#include <cmath>
#include <stdexcept>

namespace dgsc {

InitialCondition InitialCondition::fourier(std::vector<Mode> modes, double x_left,
                                           double x_right) {
    InitialCondition ic;
    ic.is_fourier_ = true;
    ic.modes_ = std::move(modes);
    ic.x_left_ = x_left;
    ic.length_ = x_right - x_left;
    return ic;
}

InitialCondition InitialCondition::callable(std::function<double(double)> f,
                                            double x_left, double x_right) {
    InitialCondition ic;
    ic.is_fourier_ = false;
    ic.f_ = std::move(f);
    ic.x_left_ = x_left;
    ic.length_ = x_right - x_left;
    return ic;
}

InitialCondition InitialCondition::sine(int n, double x_left, double x_right) {
    // sin(2 pi n x / L) = -i/2 e^{2 pi i n x/L} + i/2 e^{-2 pi i n x/L}
    std::vector<Mode> modes{{n, {0.0, -0.5}}, {-n, {0.0, 0.5}}};
    return fourier(std::move(modes), x_left, x_right);
}

double InitialCondition::operator()(double x) const {
    if (is_fourier_) {
        std::complex<double> s = 0.0;
        for (const auto& [n, amp] : modes_)
            s += amp * std::exp(std::complex<double>(0.0, 2.0 * M_PI * n * x / length_));
        return s.real();
    }
    return f_(x);
}

double InitialCondition::advected(double x, double a, double t) const {
    double y = x - a * t;
    if (is_fourier_) return (*this)(y);  // analytic, already periodic
    y = std::fmod(y - x_left_, length_);
    if (y < 0.0) y += length_;
    return f_(x_left_ + y);
}

DgState project_l2(const InitialCondition& ic, const Mesh& mesh, int p) {
    const int n = mesh.n_cells();
    DgState state = DgState::zeros(p, n);
    QuadratureRule q = gauss_rule(p + 6);
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= p; ++k) {
            double integral = 0.0;
            for (std::size_t i = 0; i < q.nodes.size(); ++i)
                integral += q.weights[i] * ic(mesh.x_of(j, q.nodes[i])) *
                            legendre_eval(k, q.nodes[i]);
            state.c(j, k) = 0.5 * (2 * k + 1) * integral;
        }
    }
    return state;
}

DgState project_left_radau(const InitialCondition& ic, const Mesh& mesh, int p) {
    if (p < 1) throw std::invalid_argument("project_left_radau: p >= 1 required");
    DgState state = project_l2(ic, mesh, p);
    for (int j = 0; j < mesh.n_cells(); ++j) {
        // Keep moments 0..p-1; fix c_jp by matching the left endpoint value.
        double partial = 0.0;
        for (int k = 0; k < p; ++k)
            partial += state.c(j, k) * ((k % 2 == 0) ? 1.0 : -1.0);
        const double target = ic(mesh.left(j));
        const double sgn_p = (p % 2 == 0) ? 1.0 : -1.0;
        state.c(j, p) = sgn_p * (target - partial);
    }
    return state;
}

DgState project_equidistant_interp(const InitialCondition& ic, const Mesh& mesh, int p) {
    if (p < 1) throw std::invalid_argument("project_equidistant_interp: p >= 1 required");
    const int n = mesh.n_cells();
    const int nk = p + 1;
    DgState state = DgState::zeros(p, n);

    // Vandermonde in the Legendre basis at the equispaced nodes, shared by all cells.
    std::vector<double> nodes(nk);
    for (int i = 0; i <= p; ++i) nodes[i] = -1.0 + 2.0 * i / p;
    std::vector<double> vm(nk * nk);
    for (int i = 0; i < nk; ++i)
        for (int k = 0; k < nk; ++k) vm[i * nk + k] = legendre_eval(k, nodes[i]);

    for (int j = 0; j < n; ++j) {
        std::vector<double> A = vm;
        std::vector<double> b(nk);
        for (int i = 0; i < nk; ++i) b[i] = ic(mesh.x_of(j, nodes[i]));
        // Gaussian elimination with partial pivoting.
        for (int col = 0; col < nk; ++col) {
            int piv = col;
            for (int r = col + 1; r < nk; ++r)
                if (std::abs(A[r * nk + col]) > std::abs(A[piv * nk + col])) piv = r;
            if (std::abs(A[piv * nk + col]) < 1e-14)
                throw std::runtime_error("project_equidistant_interp: singular system");
            if (piv != col) {
                for (int c2 = 0; c2 < nk; ++c2) std::swap(A[col * nk + c2], A[piv * nk + c2]);
                std::swap(b[col], b[piv]);
            }
            for (int r = col + 1; r < nk; ++r) {
                double fct = A[r * nk + col] / A[col * nk + col];
                for (int c2 = col; c2 < nk; ++c2) A[r * nk + c2] -= fct * A[col * nk + c2];
                b[r] -= fct * b[col];
            }
        }
        for (int r = nk - 1; r >= 0; --r) {
            double s = b[r];
            for (int c2 = r + 1; c2 < nk; ++c2) s -= A[r * nk + c2] * state.c(j, c2);
            state.c(j, r) = s / A[r * nk + r];
        }
    }
    return state;
}

DgState project(ProjectionKind kind, const InitialCondition& ic, const Mesh& mesh,
                int p) {
    switch (kind) {
        case ProjectionKind::L2: return project_l2(ic, mesh, p);
        case ProjectionKind::LeftRadau: return project_left_radau(ic, mesh, p);
        case ProjectionKind::EquidistantInterp:
            return project_equidistant_interp(ic, mesh, p);
    }
    throw std::invalid_argument("project: unknown projection kind");
}

}  // namespace dgsc
