#pragma once

#include <complex>
#include <vector>

#include "dgsc/dg.hpp"
#include "dgsc/pade.hpp"

namespace dgsc {

/// The p+1 numerical frequencies associated with one Fourier wavenumber.
struct FrequencySet {
    int n = 0;                    // Fourier index
    std::complex<double> kappa;   // 2 pi n i / L
    std::vector<std::complex<double>> roots;  // omega_0 .. omega_p
    int physical_index = 0;       // root closest to kappa
};

/// All p+1 roots omega of g(omega h) e^{kappa h} - f(omega h, 1) = 0.
FrequencySet frequencies(int p, double h, std::complex<double> kappa);

/// Legendre coefficients of f(omega h, .) / g(omega h): the cell-local mode
/// shape normalized so the upwind neighbor's downwind value is 1.
std::vector<std::complex<double>> mode_coefficients(int p, double h,
                                                    std::complex<double> omega);

/// ||RHS(v) + a omega v||_inf / ||v||_inf for the global mode vector built
/// from each root: an eigen-residual check of the assembled DG operator.
std::vector<double> operator_residual(int p, int n_cells, const Mesh& mesh, double a,
                                      const FrequencySet& set);

/// prod_j f(omega h_j, 1)/g(omega h_j) - 1; residual of the nonuniform-mesh
/// frequency condition (a verifier only).
std::complex<double> product_condition_residual(int p, const Mesh& mesh,
                                                std::complex<double> omega);

/// Predicted time for the non-physical modes to fall below the
/// superconvergent error floor: (2p+1) h |log h| / (a mu_min).
double damping_time(int p, double h, double a);

}  // namespace dgsc
