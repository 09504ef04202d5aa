#include <complex>
#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "dgsc/experiments.hpp"
#include "dgsc/fourier.hpp"
#include "dgsc/pade.hpp"

namespace {

int default_jobs() {
    if (const char* env = std::getenv("DGSC_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"DG advection solver and Pade/Fourier analysis toolkit"};
    app.require_subcommand(1);

    std::string preset_name, config_path, out_dir = ".";
    int jobs = default_jobs();

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--preset", preset_name, "preset experiment name");
        cmd->add_option("--config", config_path, "config file path");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--jobs", jobs, "parallel sweep workers");
    };

    auto* run_cmd = app.add_subcommand("run", "run a convergence or table experiment");
    add_common(run_cmd);

    auto* decay_cmd = app.add_subcommand("decay", "downwind-error decay curve");
    add_common(decay_cmd);

    int pade_p = 2;
    auto* pade_cmd = app.add_subcommand("pade", "print g, f(.,1), roots, defect");
    pade_cmd->add_option("--p", pade_p, "polynomial degree")->required();
    pade_cmd->add_option("--out", out_dir, "output directory");

    int spec_p = 2, spec_n = 16;
    auto* spectrum_cmd = app.add_subcommand("spectrum", "numerical frequencies per mode");
    spectrum_cmd->add_option("--p", spec_p, "polynomial degree")->required();
    spectrum_cmd->add_option("--N", spec_n, "number of cells")->required();
    spectrum_cmd->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        dgsc::ExperimentSpec spec;
        if (app.got_subcommand(pade_cmd)) {
            spec.name = "pade_p" + std::to_string(pade_p);
            spec.kind = dgsc::ExperimentKind::PadeReport;
            spec.base.p = pade_p;
            // Also echo the report to stdout.
            auto fg = dgsc::build_fg(pade_p);
            auto f1 = fg.f_at_one();
            std::cout << "g coefficients (z^0..z^" << pade_p + 1 << "):";
            for (double c : fg.g.coeffs) std::cout << " " << c;
            std::cout << "\nf(.,1) coefficients (z^0..z^" << pade_p << "):";
            for (double c : f1.coeffs) std::cout << " " << c;
            std::cout << "\nnonphysical roots mu_m:";
            for (auto mu : dgsc::nonphysical_roots(pade_p))
                std::cout << " (" << mu.real() << (mu.imag() < 0 ? "" : "+")
                          << mu.imag() << "i)";
            std::cout << "\ndefect coefficients (z^0..z^" << 2 * pade_p + 3 << "):";
            for (double c : dgsc::pade_defect(pade_p, 2 * pade_p + 4)) std::cout << " " << c;
            std::cout << "\n";
        } else if (app.got_subcommand(spectrum_cmd)) {
            spec.name = "spectrum_p" + std::to_string(spec_p) + "_N" +
                        std::to_string(spec_n);
            spec.kind = dgsc::ExperimentKind::Spectrum;
            spec.base.p = spec_p;
            spec.sweep_n = {spec_n};
        } else {
            if (!preset_name.empty())
                spec = dgsc::preset(preset_name);
            else if (!config_path.empty())
                spec = dgsc::spec_from_config(config_path);
            else {
                std::cerr << "error: need --preset or --config\n";
                return 2;
            }
            if (app.got_subcommand(decay_cmd) &&
                spec.kind != dgsc::ExperimentKind::DecayCurve) {
                std::cerr << "error: preset '" << spec.name
                          << "' is not a decay curve\n";
                return 2;
            }
        }
        for (const auto& path : dgsc::execute(spec, out_dir, jobs))
            std::cout << "wrote " << path << "\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
