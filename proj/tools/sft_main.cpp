// Command-line front end for the slice Fourier transform library:
// field sampling, forward/inverse transforms, kernel dumps, convolutions,
// benchmarking, and the acceptance selftest.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sft/convolution.hpp"
#include "sft/field_io.hpp"
#include "sft/hermite.hpp"
#include "sft/parallel.hpp"
#include "sft/selftest.hpp"
#include "sft/specfun.hpp"
#include "sft/transform.hpp"

namespace {

using nlohmann::json;

struct CommonOpts {
    int m = 2;
    double c = 0.5;
    std::string grid;
    std::string extent;
    int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--m", o.m, "algebra dimension parameter m >= 2");
    cmd->add_option("--c", o.c, "transform scale c > 0");
    cmd->add_option("--grid", o.grid, "sample counts N0xNr (default 256x256)");
    cmd->add_option("--extent", o.extent, "domain extents LxR (default 12*sqrt(2c))");
    cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
}

std::pair<double, double> parse_pair_d(const std::string& s, char sep, const char* what) {
    const auto pos = s.find(sep);
    if (pos == std::string::npos)
        throw std::invalid_argument(std::string("expected '") + sep + "'-separated pair for " +
                                    what + ": " + s);
    return {std::stod(s.substr(0, pos)), std::stod(s.substr(pos + 1))};
}

sft::GridSpec make_grid(const CommonOpts& o) {
    int n0 = 256, nr = 256;
    if (!o.grid.empty()) {
        const auto [a, b] = parse_pair_d(o.grid, 'x', "--grid");
        n0 = static_cast<int>(a);
        nr = static_cast<int>(b);
    }
    double L = 12.0 * std::sqrt(2.0 * o.c), R = L;
    if (!o.extent.empty()) std::tie(L, R) = parse_pair_d(o.extent, 'x', "--extent");
    return sft::GridSpec(L, n0, R, nr);
}

json config_json(const CommonOpts& o, const sft::GridSpec& g) {
    return json{{"m", o.m},
                {"c", o.c},
                {"grid", {{"L", g.L}, {"N0", g.N0}, {"R", g.R}, {"Nr", g.Nr}}},
                {"threads", o.threads}};
}

json multivector_json(const sft::Multivector& v) {
    json out = json::array();
    for (unsigned b = 0; b < v.size(); ++b) out.push_back({v[b].real(), v[b].imag()});
    return out;
}

int run_benchmark(const CommonOpts& o, const std::string& out_path,
                  const std::vector<int>& sizes) {
    const sft::Params par(o.m, o.c);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw std::runtime_error("cannot open " + out_path);
        os = &file;
    }
    (*os) << "grid_n0,grid_nr,path,seconds\n";
    for (int n0 : sizes) {
        const int nr = n0 / 2;
        const sft::GridSpec g(10.0, n0, 10.0, nr);
        const sft::SliceField f = sft::sample_hermite({1, 1}, g, par);
        for (const char* path : {"direct", "fast"}) {
            const bool fast = std::string(path) == "fast";
            double best = 1e300;
            for (int rep = 0; rep < 3; ++rep) {
                const auto t0 = std::chrono::steady_clock::now();
                if (fast) sft::forward_fast(f);
                else sft::forward(f);
                const auto t1 = std::chrono::steady_clock::now();
                best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
            }
            (*os) << n0 << ',' << nr << ',' << path << ',' << best << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slice Fourier transform on Clifford-valued slice functions"};
    app.require_subcommand(1);

    // hermite
    CommonOpts ho;
    int hj = 0, hk = 0;
    std::string hermite_out;
    CLI::App* hermite = app.add_subcommand("hermite", "sample psi_{j,k} to a field file");
    add_common(hermite, ho);
    hermite->add_option("--j", hj, "degree j >= 0");
    hermite->add_option("--k", hk, "order k >= 0");
    hermite->add_option("--out", hermite_out, "output field (.csv or .json)")->required();

    // transform / inverse
    CommonOpts to;
    std::string t_in, t_out;
    bool t_fast = false, t_direct = false, t_bench = false;
    std::string bench_out;
    std::vector<int> bench_sizes{16, 32, 64, 128};
    CLI::App* transform = app.add_subcommand("transform", "forward slice Fourier transform");
    add_common(transform, to);
    transform->add_option("--in", t_in, "input field file");
    transform->add_option("--out", t_out, "output field file");
    transform->add_flag("--fast", t_fast, "FFT-reduced path (default)");
    transform->add_flag("--direct", t_direct, "direct quadrature path");
    transform->add_flag("--bench", t_bench, "time direct vs fast paths, emit CSV");
    transform->add_option("--bench-sizes", bench_sizes, "grid sizes for --bench");
    transform->add_option("--bench-out", bench_out, "CSV output for --bench (default stdout)");

    CommonOpts io_;
    std::string i_in, i_out;
    bool i_fast = false, i_direct = false;
    CLI::App* inversec = app.add_subcommand("inverse", "inverse slice Fourier transform");
    add_common(inversec, io_);
    inversec->add_option("--in", i_in, "input field file")->required();
    inversec->add_option("--out", i_out, "output field file");
    inversec->add_flag("--fast", i_fast, "FFT-reduced path (default)");
    inversec->add_flag("--direct", i_direct, "direct quadrature path");

    // kernel
    CommonOpts ko;
    std::string kx = "0,0", ky = "0,0", kpoints;
    int k_omega = 1, k_eta = 1;
    CLI::App* kernel = app.add_subcommand("kernel", "evaluate the closed-form kernel");
    add_common(kernel, ko);
    kernel->add_option("--x", kx, "first point as x0,r");
    kernel->add_option("--y", ky, "second point as y0,g");
    kernel->add_option("--omega", k_omega, "axis index of omega (1..m)");
    kernel->add_option("--eta", k_eta, "axis index of eta (1..m)");
    kernel->add_option("--points", kpoints, "CSV of rows x0,r,y0,g (batch dump)");

    // mustard
    CommonOpts mo;
    std::string m_f, m_g, m_out, m_path = "spectral";
    CLI::App* mustard = app.add_subcommand("mustard", "Mustard convolution of two fields");
    add_common(mustard, mo);
    mustard->add_option("--f", m_f, "left field file")->required();
    mustard->add_option("--g", m_g, "right field file")->required();
    mustard->add_option("--path", m_path, "spectral | spatial | translate");
    mustard->add_option("--out", m_out, "output field file");

    // translate
    CommonOpts tro;
    std::string tr_in, tr_out, tr_y = "0,0", tr_path = "spectral";
    int tr_eta = 1;
    CLI::App* translate = app.add_subcommand("translate", "generalized translation T_y");
    add_common(translate, tro);
    translate->add_option("--in", tr_in, "input field file")->required();
    translate->add_option("--y", tr_y, "translation point y0,g");
    translate->add_option("--eta", tr_eta, "axis index of eta (1..m)");
    translate->add_option("--path", tr_path, "spectral | spatial");
    translate->add_option("--out", tr_out, "output field file");

    // selftest
    CommonOpts so;
    bool s_quick = false;
    unsigned long long s_seed = 20240817ULL;
    std::string s_report;
    CLI::App* selftest = app.add_subcommand("selftest", "run the full acceptance suite");
    add_common(selftest, so);
    selftest->add_flag("--quick", s_quick, "smaller grids (smoke run, same checks)");
    selftest->add_option("--seed", s_seed, "random seed");
    selftest->add_option("--report", s_report, "write JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*hermite) {
            sft::set_num_threads(ho.threads);
            const sft::Params par(ho.m, ho.c);
            const sft::GridSpec g = make_grid(ho);
            sft::save_field(sft::sample_hermite({hj, hk}, g, par), hermite_out);
            std::cout << json{{"command", "hermite"},
                              {"config", config_json(ho, g)},
                              {"j", hj},
                              {"k", hk},
                              {"out", hermite_out}}
                             .dump()
                      << std::endl;
        } else if (*transform) {
            sft::set_num_threads(to.threads);
            if (t_bench) return run_benchmark(to, bench_out, bench_sizes);
            if (t_in.empty()) throw std::invalid_argument("transform: --in required");
            const sft::SliceField f = sft::load_field(t_in);
            const sft::SliceField out = t_direct ? sft::forward(f) : sft::forward_fast(f);
            if (!t_out.empty()) sft::save_field(out, t_out);
            std::cout << json{{"command", "transform"},
                              {"config", config_json(to, f.grid())},
                              {"path", t_direct ? "direct" : "fast"},
                              {"fast_fallback", out.fast_fallback},
                              {"out", t_out}}
                             .dump()
                      << std::endl;
        } else if (*inversec) {
            sft::set_num_threads(io_.threads);
            const sft::SliceField f = sft::load_field(i_in);
            const sft::SliceField out = i_direct ? sft::inverse(f) : sft::inverse_fast(f);
            if (!i_out.empty()) sft::save_field(out, i_out);
            std::cout << json{{"command", "inverse"},
                              {"config", config_json(io_, f.grid())},
                              {"path", i_direct ? "direct" : "fast"},
                              {"fast_fallback", out.fast_fallback},
                              {"out", i_out}}
                             .dump()
                      << std::endl;
        } else if (*kernel) {
            const sft::Params par(ko.m, ko.c);
            const int dim = par.m + 1;
            const sft::Multivector omega = sft::axis_direction(dim, k_omega);
            const sft::Multivector eta = sft::axis_direction(dim, k_eta);
            json values = json::array();
            auto emit = [&](double x0, double r, double y0, double g) {
                const sft::Multivector K = sft::kernel_closed(
                    sft::SlicePoint(x0, r, omega), sft::SlicePoint(y0, g, eta), par);
                values.push_back({{"x", {x0, r}}, {"y", {y0, g}}, {"K", multivector_json(K)}});
            };
            if (!kpoints.empty()) {
                std::ifstream pts(kpoints);
                if (!pts) throw std::runtime_error("cannot open " + kpoints);
                std::string line;
                while (std::getline(pts, line)) {
                    if (line.empty() || line[0] == '#') continue;
                    std::istringstream ss(line);
                    double a, b, cc, d;
                    char comma;
                    ss >> a >> comma >> b >> comma >> cc >> comma >> d;
                    emit(a, b, cc, d);
                }
            } else {
                const auto [x0, r] = parse_pair_d(kx, ',', "--x");
                const auto [y0, g] = parse_pair_d(ky, ',', "--y");
                emit(x0, r, y0, g);
            }
            json blades = json::array();
            for (unsigned b = 0; b < (1u << dim); ++b) blades.push_back(sft::blade_label(b));
            std::cout << json{{"command", "kernel"},
                              {"m", ko.m},
                              {"c", ko.c},
                              {"blades", blades},
                              {"values", values}}
                             .dump()
                      << std::endl;
        } else if (*mustard) {
            sft::set_num_threads(mo.threads);
            const sft::SliceField f = sft::load_field(m_f);
            const sft::SliceField g = sft::load_field(m_g);
            const sft::SliceField spectral = sft::mustard_spectral(f, g);
            json out = {{"command", "mustard"},
                        {"config", config_json(mo, f.grid())},
                        {"path", m_path}};
            const sft::SliceField* result = &spectral;
            sft::SliceField other(f.grid(), f.params());
            if (m_path == "spatial") {
                const sft::cplx kappa = sft::calibrate_mustard_kappa(f.grid(), f.params());
                other = sft::mustard_spatial(f, g, kappa);
                out["kappa"] = {kappa.real(), kappa.imag()};
                result = &other;
            } else if (m_path == "translate") {
                other = sft::translate_convolve(f, g);
                result = &other;
            } else if (m_path != "spectral") {
                throw std::invalid_argument("mustard: unknown --path " + m_path);
            }
            if (m_path != "spectral")
                out["deviation"] =
                    sft::field_norm(*result - spectral) / sft::field_norm(spectral);
            if (!m_out.empty()) sft::save_field(*result, m_out);
            out["out"] = m_out;
            std::cout << out.dump() << std::endl;
        } else if (*translate) {
            sft::set_num_threads(tro.threads);
            const sft::SliceField f = sft::load_field(tr_in);
            const auto [y0, g] = parse_pair_d(tr_y, ',', "--y");
            const sft::SlicePoint y(y0, g, sft::axis_direction(f.mv_dim(), tr_eta));
            const sft::TranslatePath path = tr_path == "spatial" ? sft::TranslatePath::spatial
                                                                 : sft::TranslatePath::spectral;
            if (tr_path != "spatial" && tr_path != "spectral")
                throw std::invalid_argument("translate: unknown --path " + tr_path);
            const sft::SliceField out = sft::generalized_translate(f, y, path);
            if (!tr_out.empty()) sft::save_field(out, tr_out);
            std::cout << json{{"command", "translate"},
                              {"config", config_json(tro, f.grid())},
                              {"y", {y0, g}},
                              {"path", tr_path},
                              {"out", tr_out}}
                             .dump()
                      << std::endl;
        } else if (*selftest) {
            sft::set_num_threads(so.threads);
            sft::selftest::Options opts;
            opts.params = sft::Params(so.m, so.c);
            opts.seed = s_seed;
            opts.quick = s_quick;
            const auto results = sft::selftest::run_acceptance(opts, &std::cout);
            json rep = json::array();
            for (const auto& r : results)
                rep.push_back({{"name", r.name},
                               {"passed", r.passed},
                               {"deviation", r.deviation},
                               {"tolerance", r.tolerance},
                               {"detail", r.detail}});
            const json doc = {{"command", "selftest"},
                              {"config", {{"m", so.m}, {"c", so.c}, {"seed", s_seed},
                                          {"quick", s_quick}}},
                              {"criteria", rep},
                              {"all_passed", sft::selftest::all_passed(results)}};
            if (!s_report.empty()) {
                std::ofstream rf(s_report);
                rf << doc.dump(2) << std::endl;
            } else {
                std::cout << doc.dump() << std::endl;
            }
            return sft::selftest::all_passed(results) ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return 0;
}
