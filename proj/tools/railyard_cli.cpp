// Command-line front end: one subcommand per library capability.
// Exit codes: 0 success, 2 validation failure, 3 numerical-contract failure,
// 4 I/O failure.
#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "railyard/asymptotic_spec.hpp"
#include "railyard/ensemble.hpp"
#include "railyard/frozen_boundary.hpp"
#include "railyard/geometry.hpp"
#include "railyard/gff.hpp"
#include "railyard/io.hpp"
#include "railyard/limit_shape.hpp"
#include "railyard/moments.hpp"
#include "railyard/presets.hpp"
#include "railyard/svg.hpp"

using namespace railyard;
using nlohmann::json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

RailYardSpec load_spec(const std::string& path) { return RailYardSpec::from_json(slurp(path)); }
AsymptoticSpec load_aspec(const std::string& path) { return AsymptoticSpec::from_json(slurp(path)); }

int thread_cap() {
    if (const char* env = std::getenv("RAILYARD_THREADS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

template <class Fn>
void parallel_for(int n, Fn&& fn) {
    int workers = std::min(thread_cap(), n);
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

RunManifest manifest_for(const std::string& command, const std::string& canonical_spec,
                         uint64_t seed) {
    RunManifest man;
    man.command = command;
    man.spec_hash = content_hash(canonical_spec);
    man.seed = seed;
    man.tool_version = tool_version();
    man.rng_algorithm = SplitMix64::algorithm();
    auto now = std::chrono::system_clock::now();
    auto tt = std::chrono::system_clock::to_time_t(now);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&tt));
    man.timestamp = buf;
    return man;
}

void emit(const std::string& text, const std::string& out_path, const RunManifest& man) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    export_table(text, out_path, man.to_json());
}

std::vector<double> parse_doubles(const std::string& csl) {
    // stops at the first non-numeric field (CSV rows may carry text columns)
    std::vector<double> out;
    std::stringstream ss(csl);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t used = 0;
            double v = std::stod(tok, &used);
            if (used == 0) break;
            out.push_back(v);
        } catch (const std::exception&) {
            break;
        }
    }
    return out;
}

std::vector<int> parse_ints(const std::string& csl) {
    std::vector<int> out;
    std::stringstream ss(csl);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rail-yard dimer model: exact finite-size combinatorics and scaling limits"};
    app.require_subcommand(1);

    std::string spec_path, aspec_path, out_path, covering_path;
    uint64_t seed = 1;
    long budget = 30, steps = 100000, samples = 1;

    // validate
    auto* validate = app.add_subcommand("validate", "check a rail-yard spec");
    validate->add_option("--spec", spec_path)->required();

    // zfunction
    long z_trunc = 30;
    auto* zfun = app.add_subcommand("zfunction", "closed-form and bra-ket partition function");
    zfun->add_option("--spec", spec_path)->required();
    zfun->add_option("--truncation", z_trunc);

    // enumerate
    std::string enum_out;
    auto* enumerate = app.add_subcommand("enumerate", "exact weighted ensemble");
    enumerate->add_option("--spec", spec_path)->required();
    enumerate->add_option("--budget", budget);
    enumerate->add_option("-o,--out", enum_out);

    // sample
    bool use_exact = false, use_mcmc = false;
    std::string sample_out;
    auto* sample = app.add_subcommand("sample", "draw pure dimer coverings");
    sample->add_option("--spec", spec_path)->required();
    sample->add_flag("--exact", use_exact);
    sample->add_flag("--mcmc", use_mcmc);
    sample->add_option("--samples", samples);
    sample->add_option("--steps", steps);
    sample->add_option("--seed", seed);
    sample->add_option("--budget", budget);
    sample->add_option("-o,--out", sample_out);

    // height
    int height_column = 0;
    bool height_edges_csv = false;
    auto* height = app.add_subcommand("height", "height profile of a covering");
    height->add_option("--spec", spec_path)->required();
    height->add_option("--covering", covering_path)->required();
    height->add_option("--column", height_column);
    height->add_flag("--edges", height_edges_csv, "emit the edge-configuration CSV instead");
    height->add_option("-o,--out", out_path);

    // moments
    std::string t_list = "0.5", col_list, mom_out;
    int mom_k = 1;
    long mom_budget = 30;
    bool with_oracle = true;
    auto* moments = app.add_subcommand("moments", "contour moments vs enumeration oracle");
    moments->add_option("--spec", spec_path)->required();
    moments->add_option("--t", t_list);
    moments->add_option("--k", mom_k)->check(CLI::Range(1, 1));
    moments->add_option("--columns", col_list);
    moments->add_option("--budget", mom_budget);
    moments->add_flag("--no-oracle{false}", with_oracle);
    moments->add_option("-o,--out", mom_out);

    // limit-shape
    std::string grid = "40,40", ls_out;
    std::string chi_range, kappa_range;
    auto* limitshape = app.add_subcommand("limit-shape", "density grid of the limit shape");
    limitshape->add_option("--aspec", aspec_path)->required();
    limitshape->add_option("--grid", grid);
    limitshape->add_option("--chi-range", chi_range);
    limitshape->add_option("--kappa-range", kappa_range);
    limitshape->add_option("-o,--out", ls_out);

    // frozen-boundary
    int u_per_interval = 40;
    std::string fb_out;
    auto* frozen = app.add_subcommand("frozen-boundary", "arctic curve parametrization");
    frozen->add_option("--aspec", aspec_path)->required();
    frozen->add_option("--u-per-interval", u_per_interval);
    frozen->add_option("-o,--out", fb_out);

    // gff-cov
    double chi_d = 0.0, chi_h = 0.0;
    int k_d = 1, k_h = 1;
    std::string gff_out;
    auto* gff = app.add_subcommand("gff-cov", "limiting observable covariance");
    gff->add_option("--aspec", aspec_path)->required();
    gff->add_option("--chi-d", chi_d)->required();
    gff->add_option("--chi-h", chi_h)->required();
    gff->add_option("--k-d", k_d);
    gff->add_option("--k-h", k_h);
    gff->add_option("-o,--out", gff_out);

    // preset
    std::string preset_kind = "pyramid", preset_x, preset_signs, preset_out;
    int preset_s = 3, preset_n = 2;
    double tau1 = 1.0, tau2 = 1.0, v2 = 1.0;
    bool asymptotic = false;
    auto* preset = app.add_subcommand("preset", "built-in spec families");
    preset->add_option("kind", preset_kind)->check(CLI::IsMember({"pyramid", "steep", "aztec"}));
    preset->add_option("--s", preset_s);
    preset->add_option("--n", preset_n);
    preset->add_option("--x", preset_x, "comma-separated rational weights");
    preset->add_option("--signs", preset_signs, "sign word for steep, e.g. ++--");
    preset->add_option("--tau1", tau1);
    preset->add_option("--tau2", tau2);
    preset->add_option("--v2", v2);
    preset->add_flag("--asymptotic", asymptotic, "emit the scaling data instead of a finite spec");
    preset->add_option("-o,--out", preset_out);

    // render
    std::string render_points, render_grid, render_out = "out.svg";
    auto* render = app.add_subcommand("render", "render CSV results to SVG");
    render->add_option("--points", render_points, "curve CSV (frozen boundary)");
    render->add_option("--heatmap", render_grid, "density grid CSV (limit shape)");
    render->add_option("-o,--out", render_out);

    // check-assumptions
    auto* checka = app.add_subcommand("check-assumptions", "scaling-data hypotheses report");
    checka->add_option("--aspec", aspec_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*validate) {
            auto rep = validate_spec(load_spec(spec_path));
            std::cout << rep.to_json() << "\n";
            return rep.ok() ? 0 : kExitValidation;
        }

        if (*zfun) {
            auto s = load_spec(spec_path);
            auto rep = validate_spec(s);
            if (!rep.ok()) {
                std::cerr << rep.to_json() << "\n";
                return kExitValidation;
            }
            json j;
            j["closed_form"] = partition_function_closed(s).str();
            j["braket"] = partition_function_braket(s, z_trunc).str();
            j["truncation"] = z_trunc;
            j["tail_bound"] = braket_tail_bound(s, z_trunc).str();
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*enumerate) {
            auto s = load_spec(spec_path);
            auto ens = enumerate_coverings(s, budget);
            std::ostringstream os;
            for (const auto& [m, w] : ens.entries) {
                json j = json::parse(m.to_json());
                j["weight"] = w.str();
                os << j.dump() << "\n";
            }
            emit(os.str(), enum_out, manifest_for("enumerate", s.to_json(), 0));
            std::cerr << "coverings: " << ens.entries.size()
                      << " total weight: " << ens.total_weight.str()
                      << " Z: " << ens.closed_form_z.str() << "\n";
            return 0;
        }

        if (*sample) {
            auto s = load_spec(spec_path);
            auto rep = validate_spec(s);
            if (!rep.ok()) {
                std::cerr << rep.to_json() << "\n";
                return kExitValidation;
            }
            if (use_exact == use_mcmc)
                throw CLI::ValidationError("sample", "choose exactly one of --exact / --mcmc");
            SplitMix64 rng(seed);
            std::ostringstream os;
            if (use_exact) {
                ExactSampler sampler(s, budget);
                for (long i = 0; i < samples; ++i) {
                    json j = json::parse(sampler.sample(rng).to_json());
                    j["seed"] = seed;
                    j["index"] = i;
                    j["rng"] = SplitMix64::algorithm();
                    os << j.dump() << "\n";
                }
            } else {
                for (long i = 0; i < samples; ++i) {
                    SplitMix64 chain = rng.split();
                    auto m = sample_mcmc(s, steps, chain, DimerCovering::all_empty(s), budget);
                    json j = json::parse(m.to_json());
                    j["seed"] = seed;
                    j["index"] = i;
                    j["steps"] = steps;
                    j["rng"] = SplitMix64::algorithm();
                    os << j.dump() << "\n";
                }
            }
            emit(os.str(), sample_out, manifest_for("sample", s.to_json(), seed));
            return 0;
        }

        if (*height) {
            auto s = load_spec(spec_path);
            auto m = DimerCovering::from_json(slurp(covering_path));
            if (!covering_valid(s, m)) {
                std::cerr << "covering violates the spec's interlacing constraints\n";
                return kExitValidation;
            }
            auto cfg = to_edge_configuration(s, m, minimal_window(s, m));
            std::ostringstream os;
            if (height_edges_csv) {
                os << cfg.to_csv();
            } else {
                os << "column,y,height\n";
                for (int col = s.l; col <= s.r() + 1; ++col) {
                    for (int ry = cfg.window.ry_min + 2; ry <= cfg.window.ry_max - 2; ++ry) {
                        double y = ry + 0.25;
                        os << col << "," << y << ","
                           << height_at(s, m, col, y, ColumnSide::LeftOfColumn) << "\n";
                    }
                }
            }
            emit(os.str(), out_path, manifest_for("height", s.to_json(), 0));
            return 0;
        }

        if (*moments) {
            auto s = load_spec(spec_path);
            std::vector<int> cols =
                col_list.empty() ? std::vector<int>{} : parse_ints(col_list);
            if (cols.empty())
                for (int i = s.l + 1; i <= s.r(); ++i) cols.push_back(i);
            std::optional<WeightedEnsemble> ens;
            if (with_oracle) ens = enumerate_coverings(s, mom_budget);
            std::ostringstream os;
            os.precision(15);
            os << "column,k,t,contour_value,oracle_value,abs_err\n";
            for (double t : parse_doubles(t_list)) {
                for (int col : cols) {
                    double v = finite_moment_k1(s, col, t);
                    os << col << "," << mom_k << "," << t << "," << v << ",";
                    if (ens) {
                        double num = 0, den = 0;
                        for (const auto& [m, w] : ens->entries) {
                            double wd = w.to_double();
                            num += wd * gamma_k(m.at(col, s), 1, t, t);
                            den += wd;
                        }
                        os << num / den << "," << std::abs(v - num / den);
                    } else {
                        os << ",";
                    }
                    os << "\n";
                }
            }
            emit(os.str(), mom_out, manifest_for("moments", s.to_json(), 0));
            return 0;
        }

        if (*limitshape) {
            auto a = load_aspec(aspec_path);
            auto dims = parse_ints(grid);
            int nx = dims.at(0), ny = dims.size() > 1 ? dims.at(1) : dims.at(0);
            double c0 = a.V.front(), c1 = a.V.back();
            if (!chi_range.empty()) {
                auto r = parse_doubles(chi_range);
                c0 = r.at(0);
                c1 = r.at(1);
            }
            double k0 = -2.5, k1 = 2.5;
            if (!kappa_range.empty()) {
                auto r = parse_doubles(kappa_range);
                k0 = r.at(0);
                k1 = r.at(1);
            }
            double snap = 1e-6 * (a.V.back() - a.V.front()) / a.m;
            std::vector<std::string> rows(nx * ny);
            std::vector<double> chis(nx);
            for (int ix = 0; ix < nx; ++ix) {
                double chi = c0 + (c1 - c0) * (ix + 0.5) / nx;
                for (double v : a.V)
                    if (std::abs(chi - v) < snap) chi += 2 * snap;
                chis[ix] = chi;
            }
            std::atomic<bool> contract_failure{false};
            parallel_for(nx, [&](int ix) {
                try {
                    DensityProfile profile(a, chis[ix]);
                    for (int iy = 0; iy < ny; ++iy) {
                        double kappa = k0 + (k1 - k0) * (iy + 0.5) / ny;
                        auto rc = solve_roots(profile.g(), kappa);
                        double d = profile.density(kappa);
                        const char* region = rc.region == Region::Liquid
                                                 ? "liquid"
                                                 : (rc.region == Region::Frozen ? "frozen"
                                                                                : "boundary");
                        std::ostringstream os;
                        os.precision(12);
                        os << chis[ix] << "," << kappa << "," << d << "," << region << "\n";
                        rows[ix * ny + iy] = os.str();
                    }
                } catch (const RootCountError&) {
                    contract_failure = true;
                }
            });
            if (contract_failure) {
                std::cerr << "more than one conjugate pair on the grid; run check-assumptions\n";
                return kExitNumerical;
            }
            std::string csv = "chi,kappa,density,region\n";
            for (const auto& r : rows) csv += r;
            emit(csv, ls_out, manifest_for("limit-shape", a.to_json(), 0));
            return 0;
        }

        if (*frozen) {
            auto a = load_aspec(aspec_path);
            auto res = frozen_boundary(a, default_u_grid(a, u_per_interval));
            std::ostringstream os;
            os.precision(15);
            os << "u,chi,kappa,res1,res2\n";
            for (const auto& p : res.points)
                os << p.u << "," << p.chi << "," << p.kappa << "," << p.res_value << ","
                   << p.res_deriv << "\n";
            emit(os.str(), fb_out, manifest_for("frozen-boundary", a.to_json(), 0));
            std::cerr << "points: " << res.points.size()
                      << " skipped: " << res.diagnostics.size() << "\n";
            return 0;
        }

        if (*gff) {
            auto a = load_aspec(aspec_path);
            double cov = gff_covariance(a, chi_d, chi_h, k_d, k_h);
            json j;
            j["chi_d"] = chi_d;
            j["chi_h"] = chi_h;
            j["k_d"] = k_d;
            j["k_h"] = k_h;
            j["covariance"] = cov;
            std::string text = j.dump(2) + "\n";
            emit(text, gff_out, manifest_for("gff-cov", a.to_json(), 0));
            return 0;
        }

        if (*preset) {
            std::string text;
            if (preset_kind == "pyramid") {
                if (asymptotic) {
                    text = pyramid_asymptotic(v2, tau1, tau2).to_json();
                } else if (!preset_x.empty()) {
                    std::vector<Rational> xs;
                    std::stringstream ss(preset_x);
                    std::string tok;
                    while (std::getline(ss, tok, ',')) xs.push_back(Rational::parse(tok));
                    text = pyramid_finite(preset_s, xs).to_json();
                } else {
                    text = pyramid_finite_profile(preset_s, tau1, tau2).to_json();
                }
            } else if (preset_kind == "steep") {
                std::vector<Sign> signs;
                for (char c : preset_signs) signs.push_back(c == '+' ? Sign::Plus : Sign::Minus);
                std::vector<Rational> xs;
                std::stringstream ss(preset_x);
                std::string tok;
                while (std::getline(ss, tok, ',')) xs.push_back(Rational::parse(tok));
                text = steep_finite(preset_s, signs, xs).to_json();
            } else {
                Rational x = preset_x.empty() ? Rational(1, 2) : Rational::parse(preset_x);
                text = aztec_finite(preset_n, x).to_json();
            }
            text += "\n";
            emit(text, preset_out, manifest_for("preset " + preset_kind, text, 0));
            return 0;
        }

        if (*render) {
            std::vector<SvgCurve> curves;
            SvgHeatmap hm;
            bool have_hm = false;
            if (!render_points.empty()) {
                SvgCurve c;
                std::istringstream in(slurp(render_points));
                std::string line;
                std::getline(in, line);  // header: u,chi,kappa,...
                while (std::getline(in, line)) {
                    auto vals = parse_doubles(line);
                    if (vals.size() >= 3) c.points.emplace_back(vals[1], vals[2]);
                }
                curves.push_back(std::move(c));
            }
            if (!render_grid.empty()) {
                std::istringstream in(slurp(render_grid));
                std::string line;
                std::getline(in, line);  // header: chi,kappa,density,region
                std::map<double, std::map<double, double>> cells;
                while (std::getline(in, line)) {
                    auto vals = parse_doubles(line);
                    if (vals.size() >= 3) cells[vals[1]][vals[0]] = vals[2];
                }
                for (const auto& [kappa, row] : cells) hm.ys.push_back(kappa);
                if (!cells.empty())
                    for (const auto& [chi, v] : cells.begin()->second) hm.xs.push_back(chi);
                for (const auto& [kappa, row] : cells) {
                    std::vector<double> zr;
                    for (const auto& [chi, v] : row) zr.push_back(v);
                    hm.z.push_back(std::move(zr));
                }
                have_hm = true;
            }
            auto svg = render_curves(curves, have_hm ? &hm : nullptr);
            export_table(svg, render_out, manifest_for("render", render_points + render_grid, 0).to_json());
            return 0;
        }

        if (*checka) {
            auto a = load_aspec(aspec_path);
            auto rep = check_assumptions(a);
            std::cout << rep.to_json() << "\n";
            return rep.ok() ? 0 : kExitValidation;
        }
    } catch (const RootCountError& e) {
        std::cerr << "numerical contract failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        if (what.find("cannot open") != std::string::npos ||
            what.find("write failed") != std::string::npos)
            return kExitIo;
        return kExitNumerical;
    }
    return 0;
}
