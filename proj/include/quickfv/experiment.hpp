/// @file experiment.hpp
/// @brief Experiment harness: grid sequences, CSV tables, and SVG convergence
///        plots, plus the named presets that reproduce the reference studies.
#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quickfv/core.hpp"
#include "quickfv/metrics.hpp"
#include "quickfv/problems.hpp"
#include "quickfv/steady_solver.hpp"
#include "quickfv/time_march.hpp"

namespace quickfv {

enum class ExperimentKind { SteadyBurgers, SteadyViscBurgers, UnsteadyBurgers, UnsteadyLinear };
enum class InitMode { Exact, Zero };

inline const char* to_string(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::SteadyBurgers: return "steady_burgers";
        case ExperimentKind::SteadyViscBurgers: return "steady_viscous_burgers";
        case ExperimentKind::UnsteadyBurgers: return "unsteady_burgers";
        case ExperimentKind::UnsteadyLinear: return "unsteady_linear";
    }
    return "?";
}

inline bool is_unsteady(ExperimentKind k) {
    return k == ExperimentKind::UnsteadyBurgers || k == ExperimentKind::UnsteadyLinear;
}

inline Problem make_problem(ExperimentKind k) {
    switch (k) {
        case ExperimentKind::SteadyBurgers: return steady_burgers();
        case ExperimentKind::SteadyViscBurgers: return steady_viscous_burgers();
        case ExperimentKind::UnsteadyBurgers: return unsteady_burgers();
        case ExperimentKind::UnsteadyLinear: return unsteady_linear();
    }
    throw config_error("make_problem: unknown experiment");
}

struct ExperimentSpec {
    ExperimentKind experiment = ExperimentKind::SteadyBurgers;
    std::string name;
    std::vector<SchemeConfig> schemes;
    std::vector<int> grids;
    std::optional<TimeMarchConfig> time;
    double steady_tol = 1e-12;
    long steady_max_iter = 10000;
    InitMode steady_init = InitMode::Exact;
    long snapshot_every = 0;  // 0 = off; records every k-th step on the first grid
    bool write_steady_history = false;
    std::string output_dir;
};

/// One CSV row. Optional fields print as empty strings.
struct CsvRow {
    std::string experiment;
    std::string scheme;
    double kappa = 0.0;
    double alpha = 0.0;
    std::string recon_mode;
    std::string time_treatment;
    int n_cells = 0;
    double h = 0.0;
    std::optional<double> te_point, te_cellavg, de_point, de_cellavg;
    std::optional<double> order_te_point, order_de_point, order_de_cellavg;
};

struct ExperimentResult {
    std::string name;
    ExperimentKind kind = ExperimentKind::SteadyBurgers;
    std::vector<CsvRow> rows;
    std::map<std::string, std::vector<OrderTable>> tables_by_norm;
    std::vector<std::string> written_files;
};

inline constexpr const char* kCsvHeader =
    "experiment,scheme,kappa,alpha,recon_mode,time_treatment,n_cells,h,"
    "te_point,te_cellavg,de_point,de_cellavg,"
    "order_te_point,order_de_point,order_de_cellavg";

/// Shortest round-trip decimal form.
inline std::string fmt_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

inline std::string fmt_optional(const std::optional<double>& v) {
    if (!v || !std::isfinite(*v)) return "";
    return fmt_double(*v);
}

inline std::string scheme_label(const SchemeConfig& c, bool unsteady) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "k%.4g", c.kappa);
    std::string label = buf;
    if (c.alpha) {
        std::snprintf(buf, sizeof(buf), "_a%.4g", *c.alpha);
        label += buf;
    }
    if (unsteady) {
        label += "_";
        label += to_string(c.time_treatment);
        if (c.time_treatment == TimeTreatment::QuickestFD)
            label += c.recon_mode == ReconMode::FluxInterp ? "_flux" : "_sol";
    } else if (c.recon_mode == ReconMode::FluxInterp) {
        label += "_fluxrecon";
    }
    return label;
}

/// CSV text: optional "# key=value" metadata lines, the fixed header, then
/// rows sorted by (scheme, n_cells).
inline std::string csv_string(std::vector<CsvRow> rows,
                              const std::vector<std::pair<std::string, std::string>>& metadata = {}) {
    if (rows.empty()) throw config_error("emit_csv: no reports");
    std::sort(rows.begin(), rows.end(), [](const CsvRow& a, const CsvRow& b) {
        if (a.scheme != b.scheme) return a.scheme < b.scheme;
        return a.n_cells < b.n_cells;
    });
    std::string out;
    for (const auto& [k, v] : metadata) out += "# " + k + "=" + v + "\n";
    out += kCsvHeader;
    out += "\n";
    for (const CsvRow& r : rows) {
        out += r.experiment + "," + r.scheme + "," + fmt_double(r.kappa) + "," +
               fmt_double(r.alpha) + "," + r.recon_mode + "," + r.time_treatment + "," +
               std::to_string(r.n_cells) + "," + fmt_double(r.h) + "," +
               fmt_optional(r.te_point) + "," + fmt_optional(r.te_cellavg) + "," +
               fmt_optional(r.de_point) + "," + fmt_optional(r.de_cellavg) + "," +
               fmt_optional(r.order_te_point) + "," + fmt_optional(r.order_de_point) + "," +
               fmt_optional(r.order_de_cellavg) + "\n";
    }
    return out;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline void emit_csv(const std::vector<CsvRow>& rows, const std::string& path,
                     const std::vector<std::pair<std::string, std::string>>& metadata = {}) {
    write_file(path, csv_string(rows, metadata));
}

// ---------------------------------------------------------------------------
// SVG convergence plots
// ---------------------------------------------------------------------------

/// Log-log viewport: data bounding box padded 10% per side.
struct PlotLayout {
    double x_min = 0.0, x_max = 1.0;  // log10(h)
    double y_min = 0.0, y_max = 1.0;  // log10(error)
    double width = 720.0, height = 540.0;
    double ml = 70.0, mr = 190.0, mt = 44.0, mb = 56.0;

    double px(double logx) const {
        return ml + (logx - x_min) / (x_max - x_min) * (width - ml - mr);
    }
    double py(double logy) const {
        return height - mb - (logy - y_min) / (y_max - y_min) * (height - mt - mb);
    }
};

inline PlotLayout plot_layout(const std::vector<OrderTable>& series) {
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const OrderTable& s : series) {
        for (size_t k = 0; k < s.h.size(); ++k) {
            if (!(s.h[k] > 0.0) || !(s.error[k] > 0.0)) continue;
            xlo = std::min(xlo, std::log10(s.h[k]));
            xhi = std::max(xhi, std::log10(s.h[k]));
            ylo = std::min(ylo, std::log10(s.error[k]));
            yhi = std::max(yhi, std::log10(s.error[k]));
        }
    }
    if (xlo > xhi) { xlo = -1.0; xhi = 0.0; ylo = -1.0; yhi = 0.0; }
    const double xpad = (xhi > xlo) ? 0.1 * (xhi - xlo) : 0.5;
    const double ypad = (yhi > ylo) ? 0.1 * (yhi - ylo) : 0.5;
    PlotLayout L;
    L.x_min = xlo - xpad;
    L.x_max = xhi + xpad;
    L.y_min = ylo - ypad;
    L.y_max = yhi + ypad;
    return L;
}

namespace detail {

inline std::string svg_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

inline std::string decade_label(int p) {
    return "1e" + std::to_string(p);
}

}  // namespace detail

inline constexpr const char* kPlotPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                               "#9467bd", "#ff7f0e", "#8c564b"};

/// Self-contained log-log SVG: one polyline per series, dashed reference
/// lines of slopes 1/2/3, decade grid, legend with the series labels.
inline std::string render_convergence_svg(const std::vector<OrderTable>& series,
                                          const std::string& title,
                                          const std::string& y_label) {
    const PlotLayout L = plot_layout(series);
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::svg_num(L.width) +
           "\" height=\"" + detail::svg_num(L.height) + "\" viewBox=\"0 0 " +
           detail::svg_num(L.width) + " " + detail::svg_num(L.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + detail::svg_num(L.ml) + "\" y=\"24\" font-family=\"sans-serif\" "
           "font-size=\"15\" fill=\"#222\">" + title + "</text>\n";

    const double plot_w = L.width - L.ml - L.mr;
    const double plot_h = L.height - L.mt - L.mb;
    svg += "<rect x=\"" + detail::svg_num(L.ml) + "\" y=\"" + detail::svg_num(L.mt) +
           "\" width=\"" + detail::svg_num(plot_w) + "\" height=\"" + detail::svg_num(plot_h) +
           "\" fill=\"none\" stroke=\"#444\"/>\n";

    // decade gridlines and tick labels
    for (int p = static_cast<int>(std::ceil(L.x_min)); p <= static_cast<int>(std::floor(L.x_max)); ++p) {
        const double x = L.px(p);
        svg += "<line class=\"grid\" x1=\"" + detail::svg_num(x) + "\" y1=\"" +
               detail::svg_num(L.mt) + "\" x2=\"" + detail::svg_num(x) + "\" y2=\"" +
               detail::svg_num(L.mt + plot_h) + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + detail::svg_num(x - 12) + "\" y=\"" +
               detail::svg_num(L.mt + plot_h + 18) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">" +
               detail::decade_label(p) + "</text>\n";
    }
    for (int p = static_cast<int>(std::ceil(L.y_min)); p <= static_cast<int>(std::floor(L.y_max)); ++p) {
        const double y = L.py(p);
        svg += "<line class=\"grid\" x1=\"" + detail::svg_num(L.ml) + "\" y1=\"" +
               detail::svg_num(y) + "\" x2=\"" + detail::svg_num(L.ml + plot_w) + "\" y2=\"" +
               detail::svg_num(y) + "\" stroke=\"#ddd\"/>\n";
        svg += "<text x=\"" + detail::svg_num(L.ml - 44) + "\" y=\"" + detail::svg_num(y + 4) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#222\">" +
               detail::decade_label(p) + "</text>\n";
    }
    svg += "<text x=\"" + detail::svg_num(L.ml + 0.5 * plot_w) + "\" y=\"" +
           detail::svg_num(L.height - 16) +
           "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\">h</text>\n";
    svg += "<text x=\"16\" y=\"" + detail::svg_num(L.mt - 10) +
           "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\">" + y_label +
           "</text>\n";

    // dashed reference slopes through the coarsest point of the first series
    double x0 = L.x_min + 0.1, y0 = L.y_min + 0.1;
    for (const OrderTable& s : series) {
        if (!s.h.empty() && s.h.front() > 0.0 && s.error.front() > 0.0) {
            x0 = std::log10(s.h.front());
            y0 = std::log10(s.error.front()) - 0.35;
            break;
        }
    }
    for (int slope = 1; slope <= 3; ++slope) {
        const double xa = L.x_min, xb = L.x_max;
        const double ya = y0 + slope * (xa - x0), yb = y0 + slope * (xb - x0);
        svg += "<line class=\"refline\" x1=\"" + detail::svg_num(L.px(xa)) + "\" y1=\"" +
               detail::svg_num(L.py(ya)) + "\" x2=\"" + detail::svg_num(L.px(xb)) + "\" y2=\"" +
               detail::svg_num(L.py(yb)) +
               "\" stroke=\"#999\" stroke-dasharray=\"6,4\"/>\n";
        svg += "<text x=\"" + detail::svg_num(L.px(xb) - 40) + "\" y=\"" +
               detail::svg_num(L.py(yb) + 12) +
               "\" font-family=\"sans-serif\" font-size=\"11\" fill=\"#999\">slope " +
               std::to_string(slope) + "</text>\n";
    }

    // data series + legend
    const size_t npal = sizeof(kPlotPalette) / sizeof(kPlotPalette[0]);
    for (size_t s = 0; s < series.size(); ++s) {
        const char* color = kPlotPalette[s % npal];
        std::string pts;
        for (size_t k = 0; k < series[s].h.size(); ++k) {
            if (!(series[s].h[k] > 0.0) || !(series[s].error[k] > 0.0)) continue;
            pts += detail::svg_num(L.px(std::log10(series[s].h[k]))) + "," +
                   detail::svg_num(L.py(std::log10(series[s].error[k]))) + " ";
        }
        svg += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
        for (size_t k = 0; k < series[s].h.size(); ++k) {
            if (!(series[s].h[k] > 0.0) || !(series[s].error[k] > 0.0)) continue;
            svg += "<circle cx=\"" + detail::svg_num(L.px(std::log10(series[s].h[k]))) +
                   "\" cy=\"" + detail::svg_num(L.py(std::log10(series[s].error[k]))) +
                   "\" r=\"3\" fill=\"" + color + "\"/>\n";
        }
        const double ly = L.mt + 14 + 20.0 * static_cast<double>(s);
        const double lx = L.ml + plot_w + 14;
        svg += "<line class=\"legend-entry\" x1=\"" + detail::svg_num(lx) + "\" y1=\"" +
               detail::svg_num(ly - 4) + "\" x2=\"" + detail::svg_num(lx + 24) + "\" y2=\"" +
               detail::svg_num(ly - 4) + "\" stroke=\"" + color + "\" stroke-width=\"1.8\"/>\n";
        svg += "<text x=\"" + detail::svg_num(lx + 30) + "\" y=\"" + detail::svg_num(ly) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#222\">" +
               series[s].label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

inline void emit_convergence_plot(const std::vector<OrderTable>& tables, const std::string& path,
                                  const std::string& title, const std::string& y_label) {
    if (tables.empty()) throw config_error("emit_convergence_plot: no order tables");
    write_file(path, render_convergence_svg(tables, title, y_label));
}

/// Linear-axis profile plot (solution snapshots).
inline std::string render_profile_svg(const std::vector<std::pair<std::string, State>>& profiles,
                                      const std::string& title) {
    std::string svg;
    const double W = 720, H = 480, ml = 60, mr = 170, mt = 44, mb = 50;
    double ylo = 1e300, yhi = -1e300;
    for (const auto& [label, s] : profiles)
        for (double v : s.values) {
            ylo = std::min(ylo, v);
            yhi = std::max(yhi, v);
        }
    if (ylo > yhi) { ylo = -1; yhi = 1; }
    const double pad = (yhi > ylo) ? 0.1 * (yhi - ylo) : 0.5;
    ylo -= pad;
    yhi += pad;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" height=\"480\" "
           "viewBox=\"0 0 720 480\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"60\" y=\"24\" font-family=\"sans-serif\" font-size=\"15\" fill=\"#222\">" +
           title + "</text>\n";
    svg += "<rect x=\"60\" y=\"44\" width=\"" + detail::svg_num(W - ml - mr) + "\" height=\"" +
           detail::svg_num(H - mt - mb) + "\" fill=\"none\" stroke=\"#444\"/>\n";
    const size_t npal = sizeof(kPlotPalette) / sizeof(kPlotPalette[0]);
    size_t idx = 0;
    for (const auto& [label, s] : profiles) {
        const char* color = kPlotPalette[idx % npal];
        const Grid& g = s.grid;
        const double x0 = g.x_left(), x1 = g.x_left() + g.n_cells() * g.h();
        std::string pts;
        for (int i = 1; i <= g.n_cells(); ++i) {
            const double fx = ml + (g.cell_center(i) - x0) / (x1 - x0) * (W - ml - mr);
            const double fy = H - mb - (s.u(i) - ylo) / (yhi - ylo) * (H - mt - mb);
            pts += detail::svg_num(fx) + "," + detail::svg_num(fy) + " ";
        }
        svg += "<polyline class=\"series\" fill=\"none\" stroke=\"" + std::string(color) +
               "\" stroke-width=\"1.8\" points=\"" + pts + "\"/>\n";
        const double ly = mt + 14 + 20.0 * static_cast<double>(idx);
        svg += "<text class=\"legend-entry\" x=\"" + detail::svg_num(W - mr + 12) + "\" y=\"" +
               detail::svg_num(ly) + "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" +
               color + "\">" + label + "</text>\n";
        ++idx;
    }
    svg += "</svg>\n";
    return svg;
}

// ---------------------------------------------------------------------------
// Experiment driver
// ---------------------------------------------------------------------------

namespace detail {

inline State initial_steady_state(const Grid& grid, const Problem& problem, InitMode mode) {
    State s = sample_cell_centers(grid, problem.exact_point);
    if (mode == InitMode::Zero)
        for (int i = grid.interior_begin(); i <= grid.interior_end(); ++i) s.u(i) = 0.0;
    return s;
}

}  // namespace detail

inline ExperimentResult run_experiment(const ExperimentSpec& spec) {
    if (spec.schemes.empty()) throw config_error("run_experiment: no schemes");
    if (spec.grids.empty()) throw config_error("run_experiment: no grids");
    const bool unsteady = is_unsteady(spec.experiment);
    if (unsteady && !spec.time)
        throw config_error("run_experiment: unsteady experiments require a TimeMarchConfig");

    const Problem problem = make_problem(spec.experiment);
    ExperimentResult result;
    result.name = spec.name.empty() ? to_string(spec.experiment) : spec.name;
    result.kind = spec.experiment;

    std::vector<std::pair<std::string, State>> snapshots;
    std::vector<std::pair<std::string, SteadySolveReport>> histories;

    for (const SchemeConfig& scheme_in : spec.schemes) {
        SchemeConfig scheme = scheme_in;
        scheme.nu = problem.nu;
        const std::string label = scheme_label(scheme, unsteady);
        const double alpha = resolve_alpha(scheme.kappa, scheme.alpha);

        std::vector<ErrorReport> reports;
        for (const int n : spec.grids) {
            ErrorReport rep;
            rep.n_cells = n;
            if (unsteady) {
                const Grid grid = Grid::periodic(n);
                rep.h = grid.h();
                const State u0 = sample_cell_centers(grid, problem.initial);
                std::function<void(long, const State&)> observer;
                if (spec.snapshot_every > 0 && n == spec.grids.front()) {
                    const long every = spec.snapshot_every;
                    const long last = spec.time->n_steps;
                    observer = [&snapshots, every, last, &label, n](long step, const State& s) {
                        if (step % every == 0 || step == last)
                            snapshots.emplace_back(
                                label + " n=" + std::to_string(n) + " step " +
                                    std::to_string(step),
                                s);
                    };
                }
                State uf = [&] {
                    try {
                        return march(u0, problem, scheme, *spec.time, observer);
                    } catch (const numerical_error& e) {
                        throw numerical_error("scheme " + label + ", grid " +
                                              std::to_string(n) + ": " + e.what());
                    }
                }();
                const auto [de_p, de_c] = discretization_error_norms(uf, problem);
                rep.de_point = de_p;
                rep.de_cellavg = de_c;
            } else {
                const Grid grid = Grid::dirichlet_padded(n);
                rep.h = grid.h();
                const auto [te_p, te_c] = truncation_error_norms(problem, scheme, grid);
                rep.te_point = te_p;
                rep.te_cellavg = te_c;
                const State u0 = detail::initial_steady_state(grid, problem, spec.steady_init);
                const auto [uf, report] = [&] {
                    try {
                        return solve_steady(u0, problem, scheme, spec.steady_tol,
                                            spec.steady_max_iter);
                    } catch (const numerical_error& e) {
                        throw numerical_error("scheme " + label + ", grid " +
                                              std::to_string(n) + ": " + e.what());
                    }
                }();
                if (!report.converged)
                    throw numerical_error("steady solve did not converge: scheme " + label +
                                          ", grid " + std::to_string(n) + " (L1 residual " +
                                          fmt_double(report.final_residual_l1) + ")");
                if (spec.write_steady_history)
                    histories.emplace_back(label + "_n" + std::to_string(n), report);
                const auto [de_p, de_c] = discretization_error_norms(uf, problem);
                rep.de_point = de_p;
                rep.de_cellavg = de_c;
            }
            reports.push_back(rep);
        }

        // rows + per-norm order tables for this scheme
        const auto norm_of = [](const ErrorReport& r, int which) -> std::optional<double> {
            switch (which) {
                case 0: return r.te_point;
                case 1: return r.te_cellavg;
                case 2: return r.de_point;
                default: return r.de_cellavg;
            }
        };
        static const char* norm_names[] = {"te_point", "te_cellavg", "de_point", "de_cellavg"};
        for (int w = 0; w < 4; ++w) {
            std::vector<double> hs, es;
            for (const ErrorReport& r : reports)
                if (norm_of(r, w)) {
                    hs.push_back(r.h);
                    es.push_back(*norm_of(r, w));
                }
            if (!hs.empty())
                result.tables_by_norm[norm_names[w]].push_back(
                    make_order_table(label, hs, es));
        }

        for (size_t k = 0; k < reports.size(); ++k) {
            const ErrorReport& r = reports[k];
            CsvRow row;
            row.experiment = to_string(spec.experiment);
            row.scheme = label;
            row.kappa = scheme.kappa;
            row.alpha = alpha;
            row.recon_mode = to_string(scheme.recon_mode);
            row.time_treatment = unsteady ? to_string(scheme.time_treatment) : "";
            row.n_cells = r.n_cells;
            row.h = r.h;
            row.te_point = r.te_point;
            row.te_cellavg = r.te_cellavg;
            row.de_point = r.de_point;
            row.de_cellavg = r.de_cellavg;
            if (k > 0) {
                const ErrorReport& p = reports[k - 1];
                if (p.te_point && r.te_point)
                    row.order_te_point = observed_order(*p.te_point, *r.te_point, p.h, r.h);
                if (p.de_point && r.de_point)
                    row.order_de_point = observed_order(*p.de_point, *r.de_point, p.h, r.h);
                if (p.de_cellavg && r.de_cellavg)
                    row.order_de_cellavg =
                        observed_order(*p.de_cellavg, *r.de_cellavg, p.h, r.h);
            }
            result.rows.push_back(row);
        }
    }

    if (!spec.output_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(spec.output_dir);
        const std::string base = spec.output_dir + "/" + result.name;

        std::vector<std::pair<std::string, std::string>> metadata;
        if (unsteady) {
            metadata.emplace_back("dt", fmt_double(spec.time->dt));
            metadata.emplace_back("steps", std::to_string(spec.time->n_steps));
            metadata.emplace_back("t_final",
                                  fmt_double(spec.time->dt * static_cast<double>(spec.time->n_steps)));
        }
        emit_csv(result.rows, base + ".csv", metadata);
        result.written_files.push_back(base + ".csv");

        for (const auto& [norm, tables] : result.tables_by_norm) {
            const std::string path = base + "_" + norm + ".svg";
            emit_convergence_plot(tables, path, result.name + ": " + norm, "L1 " + norm);
            result.written_files.push_back(path);
        }

        for (const auto& [tag, report] : histories) {
            std::string csv = "iteration,l1_residual\n";
            for (size_t k = 0; k < report.history.size(); ++k)
                csv += std::to_string(k) + "," + fmt_double(report.history[k]) + "\n";
            const std::string path = base + "_" + tag + "_history.csv";
            write_file(path, csv);
            result.written_files.push_back(path);
        }

        if (!snapshots.empty()) {
            // one CSV per snapshot grid plus a profile figure
            std::string csv = "x";
            const State& first = snapshots.front().second;
            for (const auto& [lab, s] : snapshots) csv += "," + lab;
            csv += "\n";
            for (int i = 1; i <= first.grid.n_cells(); ++i) {
                csv += fmt_double(first.grid.cell_center(i));
                for (const auto& [lab, s] : snapshots) csv += "," + fmt_double(s.u(i));
                csv += "\n";
            }
            write_file(base + "_solution.csv", csv);
            result.written_files.push_back(base + "_solution.csv");
            write_file(base + "_solution.svg",
                       render_profile_svg(snapshots, result.name + ": solution profiles"));
            result.written_files.push_back(base + "_solution.svg");
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Presets reproducing the reference studies
// ---------------------------------------------------------------------------

inline std::vector<std::string> preset_names() {
    return {"fig4", "fig5", "fig6", "fig7", "fig8", "fig9", "fig9_linear", "fig10"};
}

inline std::string preset_description(const std::string& name) {
    if (name == "fig4") return "steady Burgers: truncation + solution error, kappa 0, 1/3, 1/2";
    if (name == "fig5") return "steady viscous Burgers, derived alpha: kappa 0, 1/3, 1/2";
    if (name == "fig6") return "steady viscous Burgers, alpha = 4/3: kappa 0, 1/3, 1/2";
    if (name == "fig7") return "unsteady Burgers: initial/final solution profiles, n = 32";
    if (name == "fig8") return "unsteady Burgers, coupled mass (kappa 0, 1/3, 1/2) + lumped";
    if (name == "fig9") return "unsteady Burgers, QUICKEST: solution vs flux reconstruction";
    if (name == "fig9_linear") return "unsteady linear convection a = 0.75, QUICKEST, both modes";
    if (name == "fig10") return "unsteady Burgers, explicit two-sweep correction";
    throw config_error("unknown preset: " + name);
}

inline ExperimentSpec preset(const std::string& name, const std::string& out_dir) {
    const std::vector<int> steady_grids = {15, 31, 63, 127};
    const std::vector<int> unsteady_grids = {32, 64, 128, 256, 512, 1024, 2048};
    const TimeMarchConfig tm{0.000125, 840};
    const double third = 1.0 / 3.0;

    ExperimentSpec spec;
    spec.name = name;
    spec.output_dir = out_dir;

    const auto kappa_sweep = [&](std::optional<double> alpha) {
        std::vector<SchemeConfig> v;
        for (double k : {0.0, third, 0.5}) {
            SchemeConfig c;
            c.kappa = k;
            c.alpha = alpha;
            v.push_back(c);
        }
        return v;
    };
    const auto unsteady_scheme = [&](double k, TimeTreatment t, ReconMode r) {
        SchemeConfig c;
        c.kappa = k;
        c.time_treatment = t;
        c.recon_mode = r;
        return c;
    };

    if (name == "fig4") {
        spec.experiment = ExperimentKind::SteadyBurgers;
        spec.schemes = kappa_sweep(std::nullopt);
        spec.grids = steady_grids;
        return spec;
    }
    if (name == "fig5" || name == "fig6") {
        spec.experiment = ExperimentKind::SteadyViscBurgers;
        spec.schemes = kappa_sweep(name == "fig6" ? std::optional<double>(4.0 / 3.0)
                                                  : std::nullopt);
        spec.grids = steady_grids;
        // the double-precision residual floor at n = 127, nu = 1 sits near 1e-12
        spec.steady_tol = 1e-11;
        return spec;
    }
    if (name == "fig7") {
        spec.experiment = ExperimentKind::UnsteadyBurgers;
        spec.schemes = {unsteady_scheme(0.5, TimeTreatment::CoupledMass,
                                        ReconMode::SolutionInterp)};
        spec.grids = {32};
        spec.time = tm;
        spec.snapshot_every = 840;
        return spec;
    }
    if (name == "fig8") {
        spec.experiment = ExperimentKind::UnsteadyBurgers;
        for (double k : {0.0, third, 0.5})
            spec.schemes.push_back(
                unsteady_scheme(k, TimeTreatment::CoupledMass, ReconMode::SolutionInterp));
        spec.schemes.push_back(
            unsteady_scheme(0.5, TimeTreatment::LumpedMass, ReconMode::SolutionInterp));
        spec.grids = unsteady_grids;
        spec.time = tm;
        return spec;
    }
    if (name == "fig9" || name == "fig9_linear") {
        spec.experiment = name == "fig9" ? ExperimentKind::UnsteadyBurgers
                                         : ExperimentKind::UnsteadyLinear;
        spec.schemes = {
            unsteady_scheme(third, TimeTreatment::QuickestFD, ReconMode::SolutionInterp),
            unsteady_scheme(third, TimeTreatment::QuickestFD, ReconMode::FluxInterp)};
        spec.grids = unsteady_grids;
        spec.time = tm;
        return spec;
    }
    if (name == "fig10") {
        spec.experiment = ExperimentKind::UnsteadyBurgers;
        for (double k : {0.0, third, 0.5})
            spec.schemes.push_back(
                unsteady_scheme(k, TimeTreatment::VanLeerExplicit, ReconMode::SolutionInterp));
        spec.grids = unsteady_grids;
        spec.time = tm;
        return spec;
    }
    throw config_error("unknown preset: " + name);
}

}  // namespace quickfv
