// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dgsc/diagnostics.hpp"
#include "dgsc/experiments.hpp"
#include "dgsc/fourier.hpp"
#include "dgsc/pade.hpp"
#include "dgsc/projections.hpp"

using namespace dgsc;
using cplx = std::complex<double>;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail = "") {
    std::printf("%s: criterion %2d - %s%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " :: ", detail.c_str());
    if (!ok) ++g_failures;
}

bool within_factor(double got, double want, double factor) {
    return got > 0.0 && got <= want * factor && got >= want / factor;
}

const SweepColumn* column(const SweepResult& res, const std::string& label) {
    for (const auto& c : res.columns)
        if (c.label == label) return &c;
    return nullptr;
}

// 1. Table 1 (p=1): L2 downwind errors and rates.
void criterion1() {
    SweepResult res = run_sweep(preset("table1"), 4);
    const SweepColumn* col = column(res, "l2_downwind");
    // reference values for ||E|| = (h/2) sum |E_j|; ours uses h sum |E_j|
    const std::vector<double> expected{2 * 7.02e-2, 2 * 8.40e-3, 2 * 1.04e-3,
                                       2 * 1.30e-4, 2 * 1.63e-5};
    bool ok = col != nullptr;
    std::string detail;
    for (std::size_t i = 0; ok && i < expected.size(); ++i) {
        if (!within_factor(col->errors[i], expected[i], 1.5)) {
            ok = false;
            detail = "error at N=" + std::to_string(res.n_values[i]) + " is " +
                     std::to_string(col->errors[i]);
        }
    }
    for (std::size_t i = 0; ok && i < col->rates.size(); ++i) {
        if (!col->rates[i] || std::abs(**(col->rates.begin() + i) - 3.0) > 0.15) {
            ok = false;
            detail = "rate " + std::to_string(col->rates[i] ? **(col->rates.begin() + i)
                                                           : -1.0);
        }
    }
    report(1, "table1 downwind errors and 2p+1 rates (p=1)", ok, detail);
}

// 2. Table 2 (p=2): downwind rate pattern for both projections.
void criterion2() {
    SweepResult res = run_sweep(preset("table2"), 4);
    const std::vector<double> pattern{5.72, 5.34, 5.10, 5.01};
    bool ok = true;
    std::string detail;
    for (const std::string label : {"l2_downwind", "left_radau_downwind"}) {
        const SweepColumn* col = column(res, label);
        if (!col) {
            ok = false;
            break;
        }
        for (std::size_t i = 0; i < pattern.size(); ++i) {
            double r = col->rates[i] ? *col->rates[i] : -1.0;
            if (std::abs(r - pattern[i]) > 0.35) {
                ok = false;
                detail = label + " rate " + std::to_string(r);
            }
        }
        double last = col->rates.back() ? *col->rates.back() : -1.0;
        if (last < 4.9) {
            ok = false;
            detail = label + " final rate " + std::to_string(last);
        }
    }
    report(2, "table2 rate pattern (p=2, both projections)", ok, detail);
}

// 3. Table 3 (p=3): rates in [7.0, 8.5] at N in {64, 128}.
void criterion3() {
    ExperimentSpec spec = preset("table3");
    spec.sweep_n = {16, 32, 64, 128};  // N=256 row excluded
    SweepResult res = run_sweep(spec, 4);
    bool ok = true;
    std::string detail;
    for (const std::string label : {"l2_downwind", "l2_cell_avg", "left_radau_downwind",
                                    "left_radau_cell_avg"}) {
        const SweepColumn* col = column(res, label);
        if (!col) {
            ok = false;
            break;
        }
        // rates indexed by the finer N of each pair: 32, 64, 128
        for (std::size_t i = 1; i < col->rates.size(); ++i) {
            double r = col->rates[i] ? *col->rates[i] : -1.0;
            if (r < 7.0 || r > 8.5) {
                ok = false;
                detail = label + " rate " + std::to_string(r);
            }
        }
    }
    report(3, "table3 rates in [7.0, 8.5] at N=64,128 (p=3)", ok, detail);
}

// 4. Tables 4-5: period-difference rates and Table 5 values at N=64.
void criterion4() {
    bool ok = true;
    std::string detail;
    for (int p : {1, 2}) {
        SweepResult res = run_sweep(preset(p == 1 ? "table4" : "table5"), 4);
        const SweepColumn* first = column(res, "first_period_diff");
        const SweepColumn* second = column(res, "second_period_diff");
        // skip the coarsest pair of the first-period column: it is preasymptotic
        for (std::size_t i = 1; i < first->rates.size(); ++i) {
            const auto& r = first->rates[i];
            if (!r || std::abs(*r - (p + 1.0)) > 0.15) {
                ok = false;
                detail = "p=" + std::to_string(p) + " first-period rate";
            }
        }
        for (const auto& r : second->rates) {
            if (!r || std::abs(*r - (2.0 * p + 1.0)) > 0.2) {
                ok = false;
                detail = "p=" + std::to_string(p) + " second-period rate";
            }
        }
        if (p == 2) {
            // N=64 is the third sweep point
            if (!within_factor(first->errors[2], 2 * 4.46e-6, 1.5) ||
                !within_factor(second->errors[2], 2 * 1.01e-8, 1.5)) {
                ok = false;
                detail = "table5 N=64 values " + std::to_string(first->errors[2]) + ", " +
                         std::to_string(second->errors[2]);
            }
        }
    }
    report(4, "tables 4-5 period-difference rates p+1 / 2p+1", ok, detail);
}

// 5. Table 6 (p=2): moment rates at N >= 64.
void criterion5() {
    SweepResult res = run_sweep(preset("table6"), 4);
    bool ok = true;
    std::string detail;
    for (const std::string proj : {"l2", "left_radau"}) {
        const SweepColumn* m1 = column(res, proj + "_moment1");
        const SweepColumn* m2 = column(res, proj + "_moment2");
        // rates indexed by finer N: 32, 64, 128, 256 -> check indices 1..3
        for (std::size_t i = 1; i < m1->rates.size(); ++i) {
            double r1 = m1->rates[i] ? *m1->rates[i] : -1.0;
            double r2 = m2->rates[i] ? *m2->rates[i] : -1.0;
            if (std::abs(r1 - 4.0) > 0.3) {
                ok = false;
                detail = proj + " moment1 rate " + std::to_string(r1);
            }
            if (std::abs(r2 - 3.0) > 0.15) {
                ok = false;
                detail = proj + " moment2 rate " + std::to_string(r2);
            }
        }
    }
    report(5, "table6 moment rates 2p+1-m (p=2)", ok, detail);
}

// 6. Pade property of g e^z - f(.,1) for p = 1..6.
void criterion6() {
    bool ok = true;
    std::string detail;
    for (int p = 1; p <= 6; ++p) {
        auto d = pade_defect(p, 2 * p + 4);
        double g0 = std::abs(build_fg(p).g.coeffs[0]);
        for (int j = 0; j <= 2 * p + 1; ++j) {
            if (std::abs(d[j]) / g0 > 1e-10) {
                ok = false;
                detail = "p=" + std::to_string(p) + " coefficient " + std::to_string(j);
            }
        }
        // nonzero: clear of the extended-precision convolution floor
        if (std::abs(d[2 * p + 2]) / g0 <= 1e-16) {
            ok = false;
            detail = "p=" + std::to_string(p) + " order-2p+2 coefficient vanished";
        }
    }
    report(6, "Pade defect vanishes through order 2p+1, not 2p+2 (p=1..6)", ok, detail);
}

// 7. Non-physical roots mu_m.
void criterion7() {
    bool ok = true;
    std::string detail;
    const std::vector<std::pair<double, double>> expected{
        {6.0, 1e-9}, {3.0, 0.05}, {0.42, 0.01}, {0.058, 0.002}};
    for (int p = 1; p <= 4; ++p) {
        auto mu = nonphysical_roots(p);
        double min_re = mu.front().real();
        if (std::abs(min_re - expected[p - 1].first) > expected[p - 1].second) {
            ok = false;
            detail = "p=" + std::to_string(p) + " mu_min " + std::to_string(min_re);
        }
        for (const auto& z : mu) {
            if (z.real() <= 0.0) {
                ok = false;
                detail = "p=" + std::to_string(p) + " root in left half-plane";
            }
        }
    }
    report(7, "mu_min = 6, 3, 0.42, 0.058 and right-half-plane roots", ok, detail);
}

// 8. |omega_0 - kappa| ~ h^{2p+1} at kappa = 2 pi i.
void criterion8() {
    bool ok = true;
    std::string detail;
    const cplx kappa(0.0, 2.0 * M_PI);
    const std::vector<int> ns{16, 32, 64, 128, 256};
    for (int p : {1, 2, 3}) {
        std::vector<double> errs;
        for (int n : ns) {
            double h = 2.0 / n;
            FrequencySet set = frequencies(p, h, kappa);
            errs.push_back(std::abs(set.roots[set.physical_index] - kappa));
        }
        double slope = loglog_slope(ns, errs, 2.0);
        if (std::abs(slope - (2.0 * p + 1.0)) > 0.2) {
            ok = false;
            detail = "p=" + std::to_string(p) + " slope " + std::to_string(slope);
        }
    }
    report(8, "physical frequency superaccuracy slope 2p+1", ok, detail);
}

// 9. Eigen-residuals for all modes, p <= 3, N = 16.
void criterion9() {
    bool ok = true;
    std::string detail;
    const int n_cells = 16;
    Mesh mesh = Mesh::uniform(-1.0, 1.0, n_cells);
    for (int p = 1; p <= 3 && ok; ++p) {
        for (int n = 0; n < n_cells && ok; ++n) {
            cplx kappa(0.0, 2.0 * M_PI * n / mesh.length());
            FrequencySet set = frequencies(p, mesh.h(0), kappa);
            set.n = n;
            for (double r : operator_residual(p, n_cells, mesh, 1.0, set)) {
                if (r > 1e-9) {
                    ok = false;
                    detail = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                             " residual " + std::to_string(r);
                }
            }
        }
    }
    report(9, "operator eigen-residuals <= 1e-9 for (p+1)N modes", ok, detail);
}

// 10. Figure 1 decay: exponential slope then plateau (p=1, N=64).
void criterion10() {
    ExperimentSpec spec = preset("figure1_p1");
    DecayResult decay = run_decay(spec);
    const std::size_t n = decay.times.size();
    bool ok = n > 100;
    std::string detail;

    // plateau = minimum of the curve (it creeps up later from phase drift);
    // must sit at the superconvergent level of the matching table entry
    double plateau = decay.errors[0];
    for (double e : decay.errors) plateau = std::min(plateau, e);
    if (!within_factor(plateau, 2 * 1.04e-3, 2.0)) {
        ok = false;
        detail = "plateau " + std::to_string(plateau);
    }

    // transient window: clear of the first step and of plateau interference
    std::size_t i0 = 1;
    std::size_t i1 = i0;
    while (i1 < n && decay.errors[i1] > 3.0 * plateau) ++i1;
    if (i1 <= i0 + 6) {
        ok = false;
        detail = "transient window too short";
    } else {
        for (std::size_t i = i0; i + 1 < i1; ++i) {
            if (decay.errors[i + 1] > decay.errors[i] * (1.0 + 1e-9)) {
                ok = false;
                detail = "non-monotone decay at step " + std::to_string(i);
                break;
            }
        }
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        double cnt = static_cast<double>(i1 - i0);
        for (std::size_t i = i0; i < i1; ++i) {
            sx += decay.times[i];
            sy += std::log(decay.errors[i]);
            sxx += decay.times[i] * decay.times[i];
            sxy += decay.times[i] * std::log(decay.errors[i]);
        }
        double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
        const double h = 2.0 / 64.0;
        double want = -6.0 / h;  // -a mu_min / h
        if (ok && std::abs(slope - want) > 0.15 * std::abs(want)) {
            ok = false;
            detail = "slope " + std::to_string(slope) + " vs " + std::to_string(want);
        }
    }
    report(10, "figure1 exponential decay slope and plateau (p=1)", ok, detail);
}

// 11. Property suites reprised at acceptance tolerances.
void criterion11() {
    bool ok = true;
    std::string detail;

    // Summed Legendre identity vs Radau derivative
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int p = 1; p <= 6; ++p) {
        PolyCoeffs dr = poly_derivative(radau_right(p));
        double sign = (p % 2 == 0) ? 1.0 : -1.0;
        for (int trial = 0; trial < 50; ++trial) {
            double xi = dist(rng);
            double lhs = 0.0;
            for (int k = 0; k <= p; ++k)
                lhs += ((k % 2 == 0) ? 1.0 : -1.0) * (2 * k + 1) * legendre_eval(k, xi);
            if (std::abs(lhs - sign * poly_eval(dr, xi)) > 1e-11) {
                ok = false;
                detail = "Legendre/Radau identity";
            }
        }
    }

    // Conservation per RK4 step
    {
        Mesh mesh = Mesh::uniform(-1.0, 1.0, 32);
        InitialCondition ic = InitialCondition::sine(4, -1.0, 1.0);
        DgState s = project_l2(ic, mesh, 2);
        for (int step = 0; step < 20; ++step) {
            DgState next = rk4_step(s, mesh, 1.0, 0.15 / 5.0 * mesh.h_min());
            double before = 0.0, after = 0.0;
            for (int j = 0; j < 32; ++j) {
                before += mesh.h(j) * s.c(j, 0);
                after += mesh.h(j) * next.c(j, 0);
            }
            if (std::abs(after - before) > 1e-13 * std::max(1.0, std::abs(before))) {
                ok = false;
                detail = "conservation";
            }
            s = next;
        }
    }

    // Reconstructed PDE residual in coefficient space
    for (int p : {1, 2, 3}) {
        Mesh mesh = Mesh::uniform(-1.0, 1.0, 16);
        InitialCondition ic = InitialCondition::sine(4, -1.0, 1.0);
        DgState s = project_l2(ic, mesh, p);
        auto rhs = semidiscrete_rhs(s, mesh, 1.0);
        PolyCoeffs dr = poly_derivative(radau_right(p));
        const double sign = (p % 2 == 0) ? -1.0 : 1.0;
        for (int j = 0; j < 16; ++j) {
            int jm = (j == 0) ? 15 : j - 1;
            double jump = s.eval(j, -1.0) - s.downwind(jm);
            PolyCoeffs uj{Basis::Legendre,
                          {s.coeffs.begin() + j * (p + 1),
                           s.coeffs.begin() + (j + 1) * (p + 1)}};
            PolyCoeffs du = poly_derivative(uj);
            for (int k = 0; k <= p; ++k) {
                double du_k = (k < static_cast<int>(du.coeffs.size())) ? du.coeffs[k] : 0.0;
                double dr_k = (k < static_cast<int>(dr.coeffs.size())) ? dr.coeffs[k] : 0.0;
                double resid = rhs[j * (p + 1) + k] + 2.0 / mesh.h(j) * du_k -
                               sign / mesh.h(j) * jump * dr_k;
                if (std::abs(resid) > 1e-11) {
                    ok = false;
                    detail = "PDE residual";
                }
            }
        }
    }

    // Quadrature exactness
    for (int nq : {1, 2, 4, 8, 16}) {
        auto q = gauss_rule(nq);
        for (int d = 0; d <= 2 * nq - 1; ++d) {
            double got = q.integrate([d](double x) { return std::pow(x, d); });
            double want = (d % 2 == 1) ? 0.0 : 2.0 / (d + 1);
            if (std::abs(got - want) > 1e-13) {
                ok = false;
                detail = "quadrature exactness";
            }
        }
    }

    // Projection invariants: imposed moments and endpoint interpolation
    {
        Mesh mesh = Mesh::uniform(-1.0, 1.0, 32);
        InitialCondition ic = InitialCondition::sine(4, -1.0, 1.0);
        for (int p : {1, 2, 3}) {
            DgState l2 = project_l2(ic, mesh, p);
            DgState lr = project_left_radau(ic, mesh, p);
            if (moment_error(l2, ic, mesh, 1.0, 0) > 1e-13) {
                ok = false;
                detail = "L2 moment defect";
            }
            for (int j = 0; j < 32; ++j) {
                if (std::abs(lr.eval(j, -1.0) - ic(mesh.left(j))) > 1e-13) {
                    ok = false;
                    detail = "left Radau endpoint";
                }
            }
        }
    }
    report(11, "property suites (identities, conservation, residuals)", ok, detail);
}

// 12. Negative control: equidistant interpolation is not superconvergent.
void criterion12() {
    ExperimentSpec spec = preset("table2");
    spec.projections = {ProjectionKind::EquidistantInterp};
    SweepResult res = run_sweep(spec, 4);
    const SweepColumn* col = column(res, "equidistant_downwind");
    bool ok = col != nullptr && !col->rates.empty();
    std::string detail;
    // asymptotic rate settles at p+2 = 4, well short of 2p+1 = 5
    if (ok) {
        double last = col->rates.back() ? *col->rates.back() : -1.0;
        if (last >= 4.5 || last <= 3.5) {
            ok = false;
            detail = "final rate " + std::to_string(last);
        }
    }
    report(12, "equidistant projection fails the 2p+1 rate (p=2)", ok, detail);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    criterion11();
    criterion12();
    if (g_failures == 0)
        std::printf("acceptance: all criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", g_failures);
    return g_failures == 0 ? 0 : 1;
}
