// quickfv CLI: configure experiments, run grid sequences, emit CSV/SVG
// convergence studies, and run the acceptance suite.
#include <algorithm>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "quickfv/quickfv.hpp"
#include "quickfv/verification.hpp"

namespace {

using namespace quickfv;

double parse_number(const std::string& text, const char* what) {
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const double num = std::stod(text.substr(0, slash));
            const double den = std::stod(text.substr(slash + 1));
            if (den == 0.0) throw std::invalid_argument("zero denominator");
            return num / den;
        }
        return std::stod(text);
    } catch (const std::exception&) {
        throw config_error(std::string("cannot parse ") + what + ": '" + text + "'");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

ExperimentKind parse_experiment_kind(const std::string& name) {
    if (name == "steady-burgers" || name == "steady_burgers")
        return ExperimentKind::SteadyBurgers;
    if (name == "steady-viscous-burgers" || name == "steady_viscous_burgers")
        return ExperimentKind::SteadyViscBurgers;
    if (name == "unsteady-burgers" || name == "unsteady_burgers")
        return ExperimentKind::UnsteadyBurgers;
    if (name == "unsteady-linear" || name == "unsteady_linear")
        return ExperimentKind::UnsteadyLinear;
    throw config_error("unknown experiment: '" + name + "' (try `quickfv presets`)");
}

TimeTreatment parse_treatment(const std::string& s) {
    if (s == "coupled") return TimeTreatment::CoupledMass;
    if (s == "lumped") return TimeTreatment::LumpedMass;
    if (s == "quickest") return TimeTreatment::QuickestFD;
    if (s == "vanleer") return TimeTreatment::VanLeerExplicit;
    throw config_error("unknown time treatment: '" + s + "'");
}

struct RunOptions {
    std::string experiment;
    std::string kappa_list;
    std::string grids_list;
    std::string alpha = "";
    std::string recon = "";
    std::string treatment = "";
    std::string dissipation = "";
    std::string forcing = "";
    double dt = 0.0;
    long steps = 0;
    std::string out_dir;
};

ExperimentSpec build_spec(const RunOptions& opt) {
    const auto names = preset_names();
    const bool is_preset =
        std::find(names.begin(), names.end(), opt.experiment) != names.end();

    ExperimentSpec spec;
    if (is_preset) {
        spec = preset(opt.experiment, opt.out_dir);
    } else {
        spec.experiment = parse_experiment_kind(opt.experiment);
        spec.name = to_string(spec.experiment);
        spec.output_dir = opt.out_dir;
        const bool unsteady = is_unsteady(spec.experiment);
        spec.grids = unsteady ? std::vector<int>{32, 64, 128, 256, 512, 1024, 2048}
                              : std::vector<int>{15, 31, 63, 127};
        if (unsteady) spec.time = TimeMarchConfig{0.000125, 840};
        if (spec.experiment == ExperimentKind::SteadyViscBurgers) spec.steady_tol = 1e-11;
        for (double k : {0.0, 1.0 / 3.0, 0.5}) {
            SchemeConfig c;
            c.kappa = k;
            spec.schemes.push_back(c);
        }
    }

    if (!opt.grids_list.empty()) {
        spec.grids.clear();
        for (const std::string& g : split_list(opt.grids_list))
            spec.grids.push_back(static_cast<int>(parse_number(g, "grid size")));
    }
    if (!opt.kappa_list.empty()) {
        std::vector<double> kappas;
        for (const std::string& k : split_list(opt.kappa_list))
            kappas.push_back(parse_number(k, "kappa"));
        SchemeConfig base = spec.schemes.empty() ? SchemeConfig{} : spec.schemes.front();
        spec.schemes.clear();
        for (double k : kappas) {
            base.kappa = k;
            spec.schemes.push_back(base);
        }
    }
    for (SchemeConfig& c : spec.schemes) {
        if (!opt.alpha.empty())
            c.alpha = opt.alpha == "auto"
                          ? std::nullopt
                          : std::optional<double>(parse_number(opt.alpha, "alpha"));
        if (!opt.recon.empty()) {
            if (opt.recon != "solution" && opt.recon != "flux")
                throw config_error("--recon must be 'solution' or 'flux'");
            c.recon_mode =
                opt.recon == "flux" ? ReconMode::FluxInterp : ReconMode::SolutionInterp;
        }
        if (!opt.treatment.empty()) c.time_treatment = parse_treatment(opt.treatment);
        if (!opt.dissipation.empty()) {
            if (opt.dissipation != "on" && opt.dissipation != "off")
                throw config_error("--dissipation must be 'on' or 'off'");
            c.dissipation = opt.dissipation == "on";
        }
        if (!opt.forcing.empty()) {
            if (opt.forcing != "cellavg" && opt.forcing != "point")
                throw config_error("--forcing must be 'cellavg' or 'point'");
            c.forcing_mode = opt.forcing == "cellavg" ? ForcingMode::CellAveraged
                                                      : ForcingMode::PointValue;
        }
    }
    if (opt.dt > 0.0 || opt.steps > 0) {
        TimeMarchConfig tm = spec.time.value_or(TimeMarchConfig{0.000125, 840});
        if (opt.dt > 0.0) tm.dt = opt.dt;
        if (opt.steps > 0) tm.n_steps = opt.steps;
        spec.time = tm;
    }
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quickfv: 1-D finite-volume convection-diffusion solver and "
                 "order-of-accuracy harness"};
    app.require_subcommand(1);

    RunOptions opt;
    CLI::App* run = app.add_subcommand("run", "run an experiment over a grid sequence");
    run->add_option("--experiment", opt.experiment,
                    "experiment or preset name (see `quickfv presets`)")
        ->required();
    run->add_option("--kappa", opt.kappa_list, "comma list of kappa values (fractions ok)");
    run->add_option("--grids", opt.grids_list, "comma list of cell counts");
    run->add_option("--alpha", opt.alpha, "damping coefficient: auto or a value");
    run->add_option("--recon", opt.recon, "reconstruction: solution|flux");
    run->add_option("--time", opt.treatment, "treatment: coupled|lumped|quickest|vanleer");
    run->add_option("--dt", opt.dt, "time step");
    run->add_option("--steps", opt.steps, "number of time steps");
    run->add_option("--dissipation", opt.dissipation, "upwind dissipation: on|off");
    run->add_option("--forcing", opt.forcing, "forcing treatment: cellavg|point");
    run->add_option("--out", opt.out_dir, "output directory")->required();

    CLI::App* presets_cmd = app.add_subcommand("presets", "list the experiment presets");
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the acceptance suite, one line per criterion");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (run->parsed()) {
            const ExperimentSpec spec = build_spec(opt);
            const ExperimentResult result = run_experiment(spec);
            for (const std::string& f : result.written_files)
                std::cout << "wrote " << f << "\n";
            return 0;
        }
        if (presets_cmd->parsed()) {
            for (const std::string& name : preset_names())
                std::cout << name << ": " << preset_description(name) << "\n";
            return 0;
        }
        if (verify_cmd->parsed()) {
            bool all_ok = true;
            for (const CriterionResult& c : run_acceptance_criteria()) {
                std::cout << format_criterion_line(c) << "\n" << std::flush;
                all_ok = all_ok && c.passed;
            }
            std::cout << (all_ok ? "acceptance suite: PASS" : "acceptance suite: FAIL")
                      << "\n";
            return all_ok ? 0 : 1;
        }
    } catch (const quickfv::config_error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    } catch (const quickfv::numerical_error& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
