#include "dgsc/pade.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dgsc {

PolyCoeffs FGPair::f_at_one() const {
    std::vector<double> out(p + 1, 0.0);
    for (const auto& phi : f_legendre)
        for (std::size_t d = 0; d < phi.coeffs.size(); ++d) out[d] += phi.coeffs[d];
    return {Basis::Monomial, std::move(out)};
}

std::complex<double> FGPair::eval_g(std::complex<double> z) const {
    std::complex<double> r = 0.0;
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) r = r * z + *it;
    return r;
}

std::complex<double> FGPair::eval_f(std::complex<double> z, double xi) const {
    std::complex<double> r = 0.0;
    for (int k = 0; k <= p; ++k) {
        std::complex<double> phi = 0.0;
        for (auto it = f_legendre[k].coeffs.rbegin(); it != f_legendre[k].coeffs.rend();
             ++it)
            phi = phi * z + *it;
        r += phi * legendre_eval(k, xi);
    }
    return r;
}

FGPair build_fg(int p) {
    if (p < 1 || p > 6) throw std::invalid_argument("build_fg: p must be in 1..6");
    FGPair fg;
    fg.p = p;
    fg.f_legendre.assign(p + 1, PolyCoeffs{Basis::Monomial, std::vector<double>(p + 1, 0.0)});
    fg.g = {Basis::Monomial, std::vector<double>(p + 2, 0.0)};
    fg.g.coeffs[p + 1] = 1.0;

    const double sign = (p % 2 == 0) ? -1.0 : 1.0;  // (-1)^{p+1}
    PolyCoeffs deriv = radau_right(p);               // Legendre basis
    double two_k = 1.0;
    for (int k = 1; k <= p + 1; ++k) {
        deriv = poly_derivative(deriv);  // d^k/dxi^k R^-_{p+1}, Legendre basis
        two_k *= 2.0;
        const double c = sign * 0.5 * two_k;
        const int zpow = p + 1 - k;
        for (std::size_t m = 0; m < deriv.coeffs.size(); ++m)
            fg.f_legendre[m].coeffs[zpow] += c * deriv.coeffs[m];
        fg.g.coeffs[zpow] += c * poly_eval(deriv, -1.0);
    }
    return fg;
}

std::vector<double> pade_defect(int p, int terms) {
    if (terms < 2 * p + 4) throw std::invalid_argument("pade_defect: terms < 2p+4");
    FGPair fg = build_fg(p);
    PolyCoeffs f1 = fg.f_at_one();
    std::vector<double> out(terms, 0.0);
    // Convolve g with the exponential series. Extended precision keeps the
    // small order-(2p+2) coefficient above the cancellation floor for p >= 5.
    long double inv_fact = 1.0L;
    std::vector<long double> exp_series(terms);
    for (int j = 0; j < terms; ++j) {
        exp_series[j] = inv_fact;
        inv_fact /= (j + 1);
    }
    for (int n = 0; n < terms; ++n) {
        long double s = 0.0L;
        for (int d = 0; d <= std::min(n, fg.g.degree()); ++d)
            s += static_cast<long double>(fg.g.coeffs[d]) * exp_series[n - d];
        if (n <= f1.degree()) s -= static_cast<long double>(f1.coeffs[n]);
        out[n] = static_cast<double>(s);
    }
    return out;
}

std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs, double tol, int max_iters) {
    int deg = static_cast<int>(coeffs.size()) - 1;
    while (deg > 0 && std::abs(coeffs[deg]) == 0.0) --deg;
    if (deg < 1) throw std::invalid_argument("polynomial_roots: degree < 1");

    std::vector<std::complex<double>> c(coeffs.begin(), coeffs.begin() + deg + 1);
    const std::complex<double> lead = c[deg];
    for (auto& ci : c) ci /= lead;

    double maxc = 0.0;
    for (const auto& ci : c) maxc = std::max(maxc, std::abs(ci));
    const double radius = 1.0 + maxc;

    std::vector<std::complex<double>> roots(deg);
    const std::complex<double> rot(0.4, 0.9);
    std::complex<double> seed = radius;
    for (int i = 0; i < deg; ++i) {
        roots[i] = seed;
        seed *= rot;
    }

    auto eval = [&](std::complex<double> z) {
        std::complex<double> r = 0.0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
        return r;
    };

    for (int it = 0; it < max_iters; ++it) {
        double worst = 0.0;
        for (int i = 0; i < deg; ++i) {
            std::complex<double> denom = 1.0;
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= roots[i] - roots[j];
            std::complex<double> delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < tol) return roots;
    }
    throw std::runtime_error("polynomial_roots: Durand-Kerner did not converge");
}

std::vector<std::complex<double>> nonphysical_roots(int p) {
    FGPair fg = build_fg(p);
    PolyCoeffs f1 = fg.f_at_one();
    // d(z) = g(z) - f(z,1); z = 0 is a simple root, deflate it.
    std::vector<std::complex<double>> d(p + 1);
    for (int n = 1; n <= p + 1; ++n) {
        double v = fg.g.coeffs[n];
        if (n <= f1.degree()) v -= f1.coeffs[n];
        d[n - 1] = v;
    }
    auto roots = polynomial_roots(d);
    // Newton polish on the deflated polynomial with its exact derivative.
    std::vector<std::complex<double>> dd(p);
    for (int n = 1; n <= p; ++n) dd[n - 1] = static_cast<double>(n) * d[n];
    for (auto& z : roots) {
        for (int it = 0; it < 20; ++it) {
            std::complex<double> der = poly_eval(dd, z);
            if (std::abs(der) == 0.0) break;
            std::complex<double> step = poly_eval(d, z) / der;
            z -= step;
            if (std::abs(step) < 1e-14 * (1.0 + std::abs(z))) break;
        }
    }
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.real() < b.real(); });
    return roots;
}

}  // namespace dgsc
