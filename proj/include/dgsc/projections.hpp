#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

#include "dgsc/dg.hpp"

namespace dgsc {

/// Periodic initial profile on [x_left, x_right): either a finite Fourier sum
/// with conjugate-symmetric amplitudes (evaluated analytically) or an
/// arbitrary callable, which must itself be periodic.
class InitialCondition {
public:
    using Mode = std::pair<int, std::complex<double>>;  // (index n, amplitude)

    static InitialCondition fourier(std::vector<Mode> modes, double x_left,
                                    double x_right);
    static InitialCondition callable(std::function<double(double)> f, double x_left,
                                     double x_right);

    /// sin(2 pi n x / L) as a two-mode Fourier sum.
    static InitialCondition sine(int n, double x_left, double x_right);

    double operator()(double x) const;

    /// Exact advected solution u(x, t) = u0(x - a t), wrapped periodically.
    double advected(double x, double a, double t) const;

private:
    InitialCondition() = default;
    bool is_fourier_ = false;
    std::vector<Mode> modes_;
    std::function<double(double)> f_;
    double x_left_ = 0.0, length_ = 1.0;
};

DgState project_l2(const InitialCondition& ic, const Mesh& mesh, int p);
DgState project_left_radau(const InitialCondition& ic, const Mesh& mesh, int p);
DgState project_equidistant_interp(const InitialCondition& ic, const Mesh& mesh, int p);

DgState project(ProjectionKind kind, const InitialCondition& ic, const Mesh& mesh, int p);

}  // namespace dgsc
