#pragma once

#include <complex>
#include <vector>

#include "dgsc/polynomials.hpp"

namespace dgsc {

/// The pair (f, g) characterizing the cell-local shape of Fourier modes:
/// g(z) monic of degree p+1, f(z, xi) stored by Legendre index in xi with
/// each phi_k a monomial polynomial in z of degree <= p, so that
/// f(z, xi) = sum_k phi_k(z) P_k(xi).
struct FGPair {
    int p = 0;
    PolyCoeffs g;                        // monomial in z, degree p+1, monic
    std::vector<PolyCoeffs> f_legendre;  // phi_0 .. phi_p, monomial in z

    /// f(z, 1) as a monomial polynomial in z (degree <= p).
    PolyCoeffs f_at_one() const;

    std::complex<double> eval_g(std::complex<double> z) const;
    std::complex<double> eval_f(std::complex<double> z, double xi) const;
};

FGPair build_fg(int p);

/// Taylor coefficients of g(z) e^z - f(z,1) about z = 0, orders 0..terms-1.
/// The first 2p+2 of them vanish; coefficient 2p+2 does not.
std::vector<double> pade_defect(int p, int terms);

/// The p nonzero roots of g(z) - f(z,1), sorted by ascending real part.
/// All lie strictly in the right half-plane.
std::vector<std::complex<double>> nonphysical_roots(int p);

/// Durand-Kerner simultaneous iteration for all roots of a monomial-basis
/// polynomial with complex coefficients. Leading coefficient must be nonzero.
std::vector<std::complex<double>> polynomial_roots(
    const std::vector<std::complex<double>>& coeffs, double tol = 1e-12,
    int max_iters = 500);

}  // namespace dgsc
