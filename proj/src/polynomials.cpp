#include "dgsc/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dgsc {

double legendre_eval(int k, double x) {
    if (k < 0) throw std::invalid_argument("legendre_eval: k < 0");
    if (k == 0) return 1.0;
    double pm1 = 1.0, p = x;
    for (int m = 1; m < k; ++m) {
        double pp1 = ((2 * m + 1) * x * p - m * pm1) / (m + 1);
        pm1 = p;
        p = pp1;
    }
    return p;
}

double legendre_deriv_eval(int k, double x) {
    if (k < 0) throw std::invalid_argument("legendre_deriv_eval: k < 0");
    // d_{m+1} = (2m+1) P_m + d_{m-1}; total at the endpoints as well.
    double pm1 = 1.0, p = x;
    double dm1 = 0.0, d = (k >= 1) ? 1.0 : 0.0;
    if (k == 0) return 0.0;
    for (int m = 1; m < k; ++m) {
        double dp1 = (2 * m + 1) * p + dm1;
        double pp1 = ((2 * m + 1) * x * p - m * pm1) / (m + 1);
        dm1 = d;
        d = dp1;
        pm1 = p;
        p = pp1;
    }
    return d;
}

double poly_eval(const PolyCoeffs& p, double x) {
    if (p.coeffs.empty()) return 0.0;
    if (p.basis == Basis::Monomial) {
        double r = 0.0;
        for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) r = r * x + *it;
        return r;
    }
    double r = 0.0;
    for (std::size_t k = 0; k < p.coeffs.size(); ++k)
        r += p.coeffs[k] * legendre_eval(static_cast<int>(k), x);
    return r;
}

std::complex<double> poly_eval(const std::vector<std::complex<double>>& monomial,
                               std::complex<double> z) {
    std::complex<double> r = 0.0;
    for (auto it = monomial.rbegin(); it != monomial.rend(); ++it) r = r * z + *it;
    return r;
}

namespace {

// Column k = monomial coefficients of P_k (rows = degree).
std::vector<std::vector<double>> legendre_monomial_table(int kmax) {
    std::vector<std::vector<double>> tab(kmax + 1);
    tab[0] = {1.0};
    if (kmax >= 1) tab[1] = {0.0, 1.0};
    for (int m = 1; m < kmax; ++m) {
        std::vector<double> next(m + 2, 0.0);
        for (int d = 0; d <= m; ++d) next[d + 1] += (2 * m + 1) * tab[m][d] / (m + 1);
        for (int d = 0; d < m; ++d) next[d] -= m * tab[m - 1][d] / (m + 1.0);
        tab[m + 1] = std::move(next);
    }
    return tab;
}

}  // namespace

PolyCoeffs to_monomial(const PolyCoeffs& p) {
    if (p.basis == Basis::Monomial) return p;
    int deg = p.degree();
    if (deg < 0) return {Basis::Monomial, {}};
    auto tab = legendre_monomial_table(deg);
    std::vector<double> out(deg + 1, 0.0);
    for (int k = 0; k <= deg; ++k)
        for (int d = 0; d <= k; ++d) out[d] += p.coeffs[k] * tab[k][d];
    return {Basis::Monomial, std::move(out)};
}

PolyCoeffs to_legendre(const PolyCoeffs& p) {
    if (p.basis == Basis::Legendre) return p;
    int deg = p.degree();
    if (deg < 0) return {Basis::Legendre, {}};
    auto tab = legendre_monomial_table(deg);
    std::vector<double> rem = p.coeffs;
    std::vector<double> out(deg + 1, 0.0);
    // The change-of-basis matrix is triangular by degree; back-substitute.
    for (int k = deg; k >= 0; --k) {
        double a = rem[k] / tab[k][k];
        out[k] = a;
        for (int d = 0; d <= k; ++d) rem[d] -= a * tab[k][d];
    }
    return {Basis::Legendre, std::move(out)};
}

PolyCoeffs poly_derivative(const PolyCoeffs& p) {
    int deg = p.degree();
    if (deg <= 0) return {p.basis, {0.0}};
    if (p.basis == Basis::Monomial) {
        std::vector<double> out(deg);
        for (int d = 1; d <= deg; ++d) out[d - 1] = d * p.coeffs[d];
        return {Basis::Monomial, std::move(out)};
    }
    // dP_k/dx = sum over m = k-1, k-3, ... of (2m+1) P_m.
    std::vector<double> out(deg, 0.0);
    for (int k = 1; k <= deg; ++k)
        for (int m = k - 1; m >= 0; m -= 2) out[m] += (2 * m + 1) * p.coeffs[k];
    return {Basis::Legendre, std::move(out)};
}

PolyCoeffs poly_antiderivative_from_minus_one(const PolyCoeffs& p) {
    int deg = p.degree();
    if (deg < 0) return {p.basis, {0.0}};
    if (p.basis == Basis::Monomial) {
        std::vector<double> out(deg + 2, 0.0);
        for (int d = 0; d <= deg; ++d) out[d + 1] = p.coeffs[d] / (d + 1);
        double at_m1 = 0.0;
        {
            PolyCoeffs tmp{Basis::Monomial, out};
            at_m1 = poly_eval(tmp, -1.0);
        }
        out[0] -= at_m1;
        return {Basis::Monomial, std::move(out)};
    }
    // int P_k = (P_{k+1} - P_{k-1}) / (2k+1) for k >= 1, int P_0 = P_1.
    std::vector<double> out(deg + 2, 0.0);
    if (deg >= 0) out[1] += p.coeffs[0];
    for (int k = 1; k <= deg; ++k) {
        out[k + 1] += p.coeffs[k] / (2 * k + 1);
        out[k - 1] -= p.coeffs[k] / (2 * k + 1);
    }
    PolyCoeffs res{Basis::Legendre, std::move(out)};
    res.coeffs[0] -= poly_eval(res, -1.0);
    return res;
}

PolyCoeffs radau_right(int p) {
    if (p < 1 || p > 6) throw std::invalid_argument("radau_right: p must be in 1..6");
    std::vector<double> c(p + 2, 0.0);
    c[p] = -1.0;
    c[p + 1] = 1.0;
    return {Basis::Legendre, std::move(c)};
}

PolyCoeffs radau_antiderivative(int p, int k) {
    if (k < 0) throw std::invalid_argument("radau_antiderivative: k < 0");
    PolyCoeffs r = radau_right(p);
    for (int i = 0; i < k; ++i) r = poly_antiderivative_from_minus_one(r);
    return r;
}

std::vector<double> radau_roots(int p) {
    PolyCoeffs r = radau_right(p);
    PolyCoeffs dr = poly_derivative(r);
    auto f = [&](double x) { return poly_eval(r, x); };
    auto df = [&](double x) { return poly_eval(dr, x); };

    std::vector<double> roots;
    // The p interior roots by sign-change scan + Newton with bisection fallback.
    const int ngrid = 10000;
    double prev_x = -1.0, prev_f = f(-1.0);
    const double hi = 1.0 - 1e-9;
    for (int i = 1; i <= ngrid; ++i) {
        double x = -1.0 + (hi + 1.0) * i / ngrid;
        double fx = f(x);
        if (prev_f == 0.0) roots.push_back(prev_x);
        if (prev_f * fx < 0.0) {
            double a = prev_x, b = x, fa = prev_f;
            double root = 0.5 * (a + b);
            bool converged = false;
            for (int it = 0; it < 100; ++it) {
                double fr = f(root);
                if (std::abs(fr) <= 1e-13) {
                    converged = true;
                    break;
                }
                if (fa * fr < 0.0)
                    b = root;
                else {
                    a = root;
                    fa = fr;
                }
                double d = df(root);
                double newton = root - fr / d;
                root = (d != 0.0 && newton > a && newton < b) ? newton : 0.5 * (a + b);
            }
            if (!converged && std::abs(f(root)) > 1e-12)
                throw std::runtime_error("radau_roots: root iteration did not converge");
            roots.push_back(root);
        }
        prev_x = x;
        prev_f = fx;
    }
    roots.push_back(1.0);
    if (static_cast<int>(roots.size()) != p + 1)
        throw std::runtime_error("radau_roots: unexpected root count");
    std::sort(roots.begin(), roots.end());
    return roots;
}

QuadratureRule gauss_rule(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("gauss_rule: n must be in 1..64");
    QuadratureRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        for (int it = 0; it < 100; ++it) {
            double f = legendre_eval(n, x);
            double d = legendre_deriv_eval(n, x);
            double dx = f / d;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        double d = legendre_deriv_eval(n, x);
        rule.nodes[n - 1 - i] = x;
        rule.weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * d * d);
    }
    return rule;
}

}  // namespace dgsc
