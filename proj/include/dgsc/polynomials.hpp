#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace dgsc {

enum class Basis { Monomial, Legendre };

/// Dense univariate polynomial, coefficient index = degree (monomial basis)
/// or Legendre index (Legendre basis).
struct PolyCoeffs {
    Basis basis = Basis::Monomial;
    std::vector<double> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// P_k(x) by the three-term recurrence, normalized so P_k(1) = 1.
double legendre_eval(int k, double x);

/// dP_k/dx(x).
double legendre_deriv_eval(int k, double x);

double poly_eval(const PolyCoeffs& p, double x);
std::complex<double> poly_eval(const std::vector<std::complex<double>>& monomial,
                               std::complex<double> z);

PolyCoeffs to_monomial(const PolyCoeffs& p);
PolyCoeffs to_legendre(const PolyCoeffs& p);

/// Exact coefficient-space derivative (either basis).
PolyCoeffs poly_derivative(const PolyCoeffs& p);

/// Exact antiderivative with lower limit at -1, i.e. the result vanishes at -1.
PolyCoeffs poly_antiderivative_from_minus_one(const PolyCoeffs& p);

/// Right Radau polynomial R^-_{p+1} = P_{p+1} - P_p in the Legendre basis.
PolyCoeffs radau_right(int p);

/// k-fold repeated antiderivative of R^-_{p+1}, all lower limits at -1.
/// k = 0 returns R^-_{p+1} itself.
PolyCoeffs radau_antiderivative(int p, int k);

/// The p+1 roots of R^-_{p+1} in (-1, 1], ascending, last one exactly 1.
std::vector<double> radau_roots(int p);

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    template <class F>
    double integrate(F&& f) const {
        double s = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) s += weights[i] * f(nodes[i]);
        return s;
    }
};

/// n-node Gauss-Legendre rule on [-1,1]; exact for degree <= 2n-1.
QuadratureRule gauss_rule(int n);

}  // namespace dgsc
