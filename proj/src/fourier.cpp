#include "dgsc/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dgsc {

FrequencySet frequencies(int p, double h, std::complex<double> kappa) {
    if (h <= 0.0) throw std::invalid_argument("frequencies: h <= 0");
    FGPair fg = build_fg(p);
    PolyCoeffs f1 = fg.f_at_one();
    const std::complex<double> phase = std::exp(kappa * h);

    // Polynomial in z = omega h: e^{kappa h} g(z) - f(z,1).
    std::vector<std::complex<double>> c(p + 2);
    for (int d = 0; d <= p + 1; ++d) {
        c[d] = phase * fg.g.coeffs[d];
        if (d <= f1.degree()) c[d] -= f1.coeffs[d];
    }

    std::vector<std::complex<double>> z_roots;
    if (std::abs(kappa) == 0.0) {
        // kappa = 0: z = 0 is an exact root (f(0,1) = g(0)); deflate it.
        std::vector<std::complex<double>> defl(c.begin() + 1, c.end());
        z_roots = polynomial_roots(defl);
        z_roots.push_back(0.0);
    } else {
        z_roots = polynomial_roots(c);
    }

    // Newton polish in extended precision: the physical root must be resolved
    // to well below |omega_0 - kappa| ~ (kappa h)^{2p+1} at the finest meshes.
    using cld = std::complex<long double>;
    std::vector<cld> cl(p + 2), dl(p + 1);
    {
        const cld phase_l = std::exp(cld(kappa.real() * h, kappa.imag() * h));
        for (int d = 0; d <= p + 1; ++d) {
            cl[d] = phase_l * static_cast<long double>(fg.g.coeffs[d]);
            if (d <= f1.degree()) cl[d] -= static_cast<long double>(f1.coeffs[d]);
        }
        for (int d = 1; d <= p + 1; ++d) dl[d - 1] = static_cast<long double>(d) * cl[d];
    }
    auto eval_l = [](const std::vector<cld>& poly, cld z) {
        cld r = 0.0L;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) r = r * z + *it;
        return r;
    };
    for (auto& z : z_roots) {
        if (std::abs(z) == 0.0) continue;
        cld zl(z.real(), z.imag());
        for (int it = 0; it < 40; ++it) {
            cld der = eval_l(dl, zl);
            if (std::abs(der) == 0.0L) break;
            cld step = eval_l(cl, zl) / der;
            zl -= step;
            if (std::abs(step) < 1e-19L * (1.0L + std::abs(zl))) break;
        }
        z = std::complex<double>(static_cast<double>(zl.real()),
                                 static_cast<double>(zl.imag()));
    }

    FrequencySet set;
    set.kappa = kappa;
    set.roots.resize(z_roots.size());
    for (std::size_t i = 0; i < z_roots.size(); ++i) set.roots[i] = z_roots[i] / h;

    std::sort(set.roots.begin(), set.roots.end(), [&](const auto& a, const auto& b) {
        return std::abs(a - kappa) < std::abs(b - kappa);
    });
    if (set.roots.size() >= 2 &&
        std::abs(std::abs(set.roots[0] - kappa) - std::abs(set.roots[1] - kappa)) < 1e-6)
        throw std::runtime_error("frequencies: ambiguous physical root classification");
    set.physical_index = 0;
    return set;
}

std::vector<std::complex<double>> mode_coefficients(int p, double h,
                                                    std::complex<double> omega) {
    FGPair fg = build_fg(p);
    const std::complex<double> z = omega * h;
    const std::complex<double> gz = fg.eval_g(z);
    if (std::abs(gz) < 1e-12) throw std::runtime_error("mode_coefficients: g(omega h) ~ 0");
    std::vector<std::complex<double>> out(p + 1);
    for (int k = 0; k <= p; ++k) {
        std::complex<double> phi = 0.0;
        for (auto it = fg.f_legendre[k].coeffs.rbegin();
             it != fg.f_legendre[k].coeffs.rend(); ++it)
            phi = phi * z + *it;
        out[k] = phi / gz;
    }
    return out;
}

std::vector<double> operator_residual(int p, int n_cells, const Mesh& mesh, double a,
                                      const FrequencySet& set) {
    if (!mesh.uniform_spacing())
        throw std::invalid_argument("operator_residual: uniform mesh required");
    const double h = mesh.h(0);
    const int nk = p + 1;
    std::vector<double> out;
    out.reserve(set.roots.size());
    for (const auto& omega : set.roots) {
        auto shape = mode_coefficients(p, h, omega);
        std::vector<std::complex<double>> v(n_cells * nk), rhs(n_cells * nk);
        for (int j = 0; j < n_cells; ++j) {
            std::complex<double> amp = std::exp(set.kappa * mesh.left(j));
            for (int k = 0; k < nk; ++k) v[j * nk + k] = amp * shape[k];
        }
        semidiscrete_rhs<std::complex<double>>(p, n_cells, v.data(), mesh, a, rhs.data());
        double vmax = 0.0, rmax = 0.0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            vmax = std::max(vmax, std::abs(v[i]));
            rmax = std::max(rmax, std::abs(rhs[i] + a * omega * v[i]));
        }
        out.push_back(rmax / vmax);
    }
    return out;
}

std::complex<double> product_condition_residual(int p, const Mesh& mesh,
                                                std::complex<double> omega) {
    FGPair fg = build_fg(p);
    std::complex<double> prod = 1.0;
    for (int j = 0; j < mesh.n_cells(); ++j) {
        const std::complex<double> z = omega * mesh.h(j);
        const std::complex<double> gz = fg.eval_g(z);
        if (std::abs(gz) < 1e-12)
            throw std::runtime_error("product_condition_residual: g(omega h_j) ~ 0");
        prod *= fg.eval_f(z, 1.0) / gz;
    }
    return prod - 1.0;
}

double damping_time(int p, double h, double a) {
    auto roots = nonphysical_roots(p);
    double mu_min = roots.front().real();
    return (2 * p + 1) * h * std::abs(std::log(h)) / (a * mu_min);
}

}  // namespace dgsc
