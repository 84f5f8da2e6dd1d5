// Copyright 2026 The wernet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wernet/cli.h"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "wernet/critical.h"
#include "wernet/errors.h"
#include "wernet/monte_carlo.h"
#include "wernet/spp.h"
#include "wernet/table.h"

#ifndef WERNET_VERSION
#define WERNET_VERSION "dev"
#endif

namespace wernet {

namespace {

namespace fs = std::filesystem;

using Params = std::vector<std::pair<std::string, std::string>>;

struct CommonFlags {
    uint64_t seed = 1;
    int64_t trials = -1;
    std::string N;
    std::string p;
    std::string x;
    int L_max = -1;
    std::string out;
    std::string format = "csv";
    int threads = 1;
};

struct Output {
    std::string name;
    Table table;
};

struct Result {
    std::vector<Output> outputs;
    Params params;
    bool seeded = false;
};

void add_common(CLI::App *sub, CommonFlags &f) {
    sub->add_option("--seed", f.seed, "Base RNG seed");
    sub->add_option("--trials", f.trials, "Monte Carlo trials per grid point");
    sub->add_option("--N", f.N, "Node counts: value, list or lo:hi:step");
    sub->add_option("--p", f.p, "Edge probabilities: value, list or lo:hi:step");
    sub->add_option("--x", f.x, "Werner parameters: value, list or lo:hi:step");
    sub->add_option("--Lmax", f.L_max, "Largest shortest-path length considered");
    sub->add_option("--out", f.out, "Output directory; stdout when omitted");
    sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--threads", f.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
}

std::string fmt(double v) {
    return format_cell(Cell{v});
}

std::vector<int> parse_int_grid(const std::string &spec) {
    std::vector<int> out;
    for (double v : parse_grid(spec)) {
        if (v != std::floor(v) || v < 0 || v > std::numeric_limits<int>::max()) {
            throw std::invalid_argument("expected integer values, got '" + spec + "'");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

uint64_t point_seed(uint64_t seed, size_t k) {
    return seed + 0x9E3779B97F4A7C15ULL * k;
}

int64_t trials_or(const CommonFlags &f, int64_t fallback) {
    int64_t t = f.trials < 0 ? fallback : f.trials;
    if (t < 1) {
        throw std::invalid_argument("--trials must be >= 1");
    }
    return t;
}

Table new_table(const std::string &command, const Params &params, const std::vector<std::string> &columns) {
    Table t;
    t.metadata.emplace_back("tool", std::string("wernet ") + WERNET_VERSION);
    t.metadata.emplace_back("command", command);
    std::string joined;
    for (const auto &[k, v] : params) {
        joined += (joined.empty() ? "" : " ") + k + "=" + v;
    }
    t.metadata.emplace_back("parameters", joined);
    t.columns = columns;
    return t;
}

// analyze ----------------------------------------------------------------

struct AnalyzeFlags {
    bool extremals = false;
    bool multipur = false;
    bool noisy = false;
    std::string alpha = "1";
    std::string n = "1,3,10,30,inf";
    std::string p1 = "1";
    std::string p2 = "1";
    std::string eta = "1";
};

Result command_analyze(const AnalyzeFlags &a) {
    if (!a.extremals && !a.multipur && !a.noisy) {
        throw std::invalid_argument("analyze: pass --spp-extremals, --multipur and/or --noisy");
    }
    Result r;
    if (a.extremals) {
        Params params{{"table", "spp-extremals"}};
        Table t = new_table("analyze", params, {"quantity", "value"});
        SppExtremals e = spp_extremals();
        PurificationPeak peak = delta_p_max();
        t.add_row({std::string("y_lo_min"), e.y_lo_min});
        t.add_row({std::string("a_at_y_lo_min"), e.a_at_y_lo_min});
        t.add_row({std::string("y_hi_max"), e.y_hi_max});
        t.add_row({std::string("max_gain"), e.max_gain});
        t.add_row({std::string("a_at_max_gain"), e.a_at_max_gain});
        t.add_row({std::string("b_max"), e.b_max});
        t.add_row({std::string("purification_peak_z"), peak.z_star});
        t.add_row({std::string("purification_peak_gain"), peak.gain});
        r.outputs.push_back({"spp_extremals", std::move(t)});
    }
    if (a.multipur) {
        Params params{{"table", "multipur"}, {"alpha", a.alpha}, {"n", a.n}};
        Table t = new_table("analyze", params, {"n", "alpha", "y_lo", "y_hi"});
        std::vector<std::string> ns;
        std::stringstream ss(a.n);
        for (std::string item; std::getline(ss, item, ',');) {
            ns.push_back(item);
        }
        for (double alpha : parse_grid(a.alpha)) {
            for (const std::string &n : ns) {
                if (n == "inf") {
                    GoodInterval b = multipur_bounds_inf(alpha);
                    t.add_row({std::string("inf"), alpha, b.y_lo, b.y_hi});
                } else {
                    int count = parse_int_grid(n).at(0);
                    GoodInterval b = multipur_bounds(count, alpha);
                    t.add_row({std::to_string(count), alpha, b.y_lo, b.y_hi});
                }
            }
        }
        r.outputs.push_back({"multipur", std::move(t)});
    }
    if (a.noisy) {
        Params params{{"table", "noisy"}, {"p1", a.p1}, {"p2", a.p2}, {"eta", a.eta}};
        Table t = new_table(
            "analyze", params, {"p1", "p2", "eta", "delta", "alpha", "c", "delta_c_max", "normalized"});
        for (double p1 : parse_grid(a.p1)) {
            for (double p2 : parse_grid(a.p2)) {
                for (double eta : parse_grid(a.eta)) {
                    NoiseModel nm(p1, p2, eta);
                    double m = noisy_delta_c_max(nm);
                    t.add_row({p1, p2, eta, nm.delta(), nm.alpha(), nm.swap_attenuation(), m, m * 36.0});
                }
            }
        }
        r.outputs.push_back({"noisy", std::move(t)});
    }
    return r;
}

// simulate ---------------------------------------------------------------

struct SimulateFlags {
    std::string fig;
    bool critical = false;
    std::string estimator = "exists";
};

std::vector<SppGeometry> critical_geometries(int L_max) {
    std::vector<SppGeometry> out;
    for (int L = 3; L <= std::min(L_max, 7); L++) {
        for (int n = 2; n <= std::min(L - 1, L == 7 ? 3 : 4); n++) {
            out.push_back({L, n, n});
        }
    }
    return out;
}

Result command_simulate(const SimulateFlags &s, const CommonFlags &f) {
    Result r;
    r.seeded = true;
    bool eta_over_g = s.fig == "eta-over-g";
    bool critical = s.critical || eta_over_g;
    std::vector<int> Ns = parse_int_grid(!f.N.empty() ? f.N : (eta_over_g ? "100,200,400,800" : "200"));
    for (int N : Ns) {
        if (N < 2) {
            throw std::invalid_argument("--N must be >= 2");
        }
    }
    std::string p_spec = f.p;
    if (p_spec.empty()) {
        if (s.fig == "sigma") {
            p_spec = "0.01,0.02,0.05,0.1,0.2";
        } else if (s.fig == "eta322") {
            p_spec = "0.002,0.005,0.01,0.02,0.05,0.1,0.15,0.2";
        } else {
            p_spec = "0.005:0.05:0.005";
        }
    }
    if (critical && !f.p.empty()) {
        throw std::invalid_argument("--p conflicts with the critical point p = 1/N");
    }
    std::vector<double> ps = critical ? std::vector<double>{} : parse_grid(p_spec);

    // Grid points in (N, p) order; at the critical point p follows N.
    std::vector<std::pair<int, double>> points;
    for (int N : Ns) {
        if (critical) {
            points.emplace_back(N, 1.0 / N);
        } else {
            for (double p : ps) {
                points.emplace_back(N, p);
            }
        }
    }

    r.params = {{"fig", s.fig}, {"N", f.N.empty() ? "default" : f.N},
                {"p", critical ? "1/N" : p_spec}, {"seed", std::to_string(f.seed)}};

    if (s.fig == "sigma") {
        int L_max = f.L_max < 0 ? 3 : f.L_max;
        int64_t trials = trials_or(f, 1000);
        std::vector<int> Ls;
        for (int L = 1; L <= L_max; L++) {
            Ls.push_back(L);
        }
        r.params.emplace_back("Lmax", std::to_string(L_max));
        r.params.emplace_back("trials", std::to_string(trials));
        Table t = new_table("simulate", r.params,
                            {"N", "p", "L", "mean", "stderr", "n_trials", "seed", "analytic", "reliable"});
        for (size_t k = 0; k < points.size(); k++) {
            auto [N, p] = points[k];
            McConfig c{trials, point_seed(f.seed, k), N, p, estimators::SigmaL{Ls}};
            auto est = run(c, f.threads);
            for (size_t j = 0; j < Ls.size(); j++) {
                int L = Ls[j];
                double analytic = L <= 2 ? sigma_analytic(L, N, p, DensityRegime::kExact)
                                         : (N >= L + 1 ? sigma_analytic(L, N, p, DensityRegime::kLowP) : NAN);
                t.add_row({int64_t{N}, p, int64_t{L}, est[j].mean, est[j].std_error, est[j].n_trials,
                           std::to_string(c.seed), analytic, int64_t{est[j].reliable}});
            }
        }
        r.outputs.push_back({"sigma", std::move(t)});
    } else if (s.fig == "eta322") {
        int64_t trials = trials_or(f, 1000);
        if (s.estimator != "exists" && s.estimator != "count") {
            throw std::invalid_argument("--estimator must be exists or count");
        }
        r.params.emplace_back("estimator", s.estimator);
        r.params.emplace_back("trials", std::to_string(trials));
        Table t = new_table("simulate", r.params,
                            {"N", "p", "mean", "stderr", "n_trials", "seed", "low_p", "high_p", "reliable"});
        std::vector<SppGeometry> geom{{3, 2, 2}};
        for (size_t k = 0; k < points.size(); k++) {
            auto [N, p] = points[k];
            Estimator e = s.estimator == "exists" ? Estimator{estimators::EtaExists{geom}}
                                                  : Estimator{estimators::EtaCount{geom}};
            McConfig c{trials, point_seed(f.seed, k), N, p, e};
            auto est = run(c, f.threads);
            double lo = N >= 5 ? eta_analytic(geom[0], N, p, DensityRegime::kLowP) : NAN;
            double hi = eta_analytic(geom[0], N, p, DensityRegime::kHighP);
            t.add_row({int64_t{N}, p, est[0].mean, est[0].std_error, est[0].n_trials, std::to_string(c.seed), lo,
                       hi, int64_t{est[0].reliable}});
        }
        r.outputs.push_back({"eta322", std::move(t)});
    } else if (s.fig == "gain-surface") {
        int L_max = f.L_max < 0 ? 7 : f.L_max;
        int64_t trials = trials_or(f, 10);
        std::string x_spec = f.x.empty() ? "0.6:0.99:0.01" : f.x;
        std::vector<double> xs = parse_grid(x_spec);
        r.params.emplace_back("x", x_spec);
        r.params.emplace_back("Lmax", std::to_string(L_max));
        r.params.emplace_back("trials", std::to_string(trials));
        Table t = new_table("simulate", r.params, {"N", "p", "x", "mean", "stderr", "n_trials", "seed"});
        for (size_t k = 0; k < points.size(); k++) {
            auto [N, p] = points[k];
            McConfig c{trials, point_seed(f.seed, k), N, p, estimators::NetworkGain{xs, L_max}};
            auto est = run(c, f.threads);
            for (size_t j = 0; j < xs.size(); j++) {
                t.add_row({int64_t{N}, p, xs[j], est[j].mean, est[j].std_error, est[j].n_trials,
                           std::to_string(c.seed)});
            }
        }
        r.outputs.push_back({"gain_surface", std::move(t)});
    } else if (eta_over_g) {
        int L_max = f.L_max < 0 ? 7 : f.L_max;
        int64_t trials = trials_or(f, 2000);
        std::vector<SppGeometry> geoms = critical_geometries(L_max);
        if (geoms.empty()) {
            throw std::invalid_argument("--Lmax must be >= 3");
        }
        r.params.emplace_back("Lmax", std::to_string(L_max));
        r.params.emplace_back("trials", std::to_string(trials));
        Table t = new_table("simulate", r.params,
                            {"N", "p", "L", "n", "m_prime", "g", "mean", "stderr", "eta_over_g",
                             "eta_over_g_stderr", "N2_eta_over_g", "n_trials", "seed"});
        for (size_t k = 0; k < points.size(); k++) {
            auto [N, p] = points[k];
            McConfig c{trials, point_seed(f.seed, k), N, p, estimators::EtaCount{geoms}};
            auto est = run(c, f.threads);
            for (size_t j = 0; j < geoms.size(); j++) {
                const SppGeometry &gm = geoms[j];
                double g = g_degeneracy(gm.L, gm.n, gm.m_prime);
                double ratio = est[j].mean / g;
                t.add_row({int64_t{N}, p, int64_t{gm.L}, int64_t{gm.n}, int64_t{gm.m_prime}, g, est[j].mean,
                           est[j].std_error, ratio, est[j].std_error / g, ratio * N * N, est[j].n_trials,
                           std::to_string(c.seed)});
            }
        }
        r.outputs.push_back({"eta_over_g", std::move(t)});
    } else {
        throw std::invalid_argument("--fig must be one of sigma, eta322, gain-surface, eta-over-g");
    }
    return r;
}

// critical ---------------------------------------------------------------

struct CriticalFlags {
    bool A = false;
    bool sum = false;
    bool hfunc = false;
    bool ffunc = false;
    std::string eps = "0.01:0.05:0.005";
    int points = 200;
    double prefactor = 3.0;
};

Result command_critical(const CriticalFlags &c, const CommonFlags &f) {
    if (!c.A && !c.sum && !c.hfunc && !c.ffunc) {
        throw std::invalid_argument("critical: pass --A, --sum, --hfunc and/or --ffunc");
    }
    if (c.points < 2) {
        throw std::invalid_argument("--points must be >= 2");
    }
    Result r;
    const CriticalConstants &k = critical_constants();
    if (c.A) {
        Params params{{"table", "A"}};
        Table t = new_table("critical", params, {"quantity", "value"});
        double coarse = big_a_constant({8, 1e-12});
        double fine = big_a_constant({16, 1e-12});
        t.add_row({std::string("s_lo"), k.s_lo});
        t.add_row({std::string("s_hi"), k.s_hi});
        t.add_row({std::string("A"), k.A});
        t.add_row({std::string("A_panels_8"), coarse});
        t.add_row({std::string("A_panels_16"), fine});
        t.add_row({std::string("step_halving_relative_change"), std::abs(fine - coarse) / std::abs(fine)});
        r.outputs.push_back({"critical_A", std::move(t)});
    }
    if (c.hfunc) {
        Params params{{"table", "hfunc"}, {"points", std::to_string(c.points)}};
        Table t = new_table("critical", params, {"s", "h", "s3_h"});
        for (int i = 0; i < c.points; i++) {
            double s = k.s_lo + (k.s_hi - k.s_lo) * i / (c.points - 1);
            double h = h_of_s(s);
            t.add_row({s, h, s * s * s * h});
        }
        r.outputs.push_back({"hfunc", std::move(t)});
    }
    if (c.ffunc) {
        Params params{{"table", "ffunc"}, {"points", std::to_string(c.points)}};
        Table t = new_table("critical", params, {"y", "f"});
        double lo = 0.3;
        double hi = 0.51;
        for (int i = 0; i < c.points; i++) {
            double y = lo + (hi - lo) * i / (c.points - 1);
            t.add_row({y, f_of_y(y)});
        }
        r.outputs.push_back({"ffunc", std::move(t)});
    }
    if (c.sum) {
        int L_max = f.L_max < 0 ? 300 : f.L_max;
        std::vector<double> Ns = parse_grid(f.N.empty() ? "1e6" : f.N);
        std::vector<double> epss = parse_grid(c.eps);
        Params params{{"table", "sum"}, {"eps", c.eps}, {"N", f.N.empty() ? "1e6" : f.N},
                      {"Lmax", std::to_string(L_max)}, {"prefactor", fmt(c.prefactor)}};
        Table t = new_table("critical", params,
                            {"N", "eps", "x", "sum", "N2_sum", "asymptote", "ratio", "ceiling"});
        for (double N : Ns) {
            for (double eps : epss) {
                double x = 1.0 - eps;
                double sum = discrete_gain_sum(N, x, L_max);
                AsymptoticGain a = asymptotic_gain(N, eps, c.prefactor);
                t.add_row({N, eps, x, sum, sum * N * N, a.value * N * N, sum / a.value, a.ceiling});
            }
        }
        r.outputs.push_back({"critical_sum", std::move(t)});
    }
    return r;
}

// output -----------------------------------------------------------------

std::string render(const Table &t, const std::string &format) {
    std::ostringstream ss;
    if (format == "json") {
        write_json(ss, t);
    } else {
        write_csv(ss, t);
    }
    return ss.str();
}

std::vector<std::string> args_without_out(const std::vector<std::string> &args) {
    std::vector<std::string> kept;
    for (size_t k = 0; k < args.size(); k++) {
        if (args[k] == "--out") {
            k++;
            continue;
        }
        if (args[k].rfind("--out=", 0) == 0) {
            continue;
        }
        kept.push_back(args[k]);
    }
    return kept;
}

void emit(
    const std::string &command,
    const std::vector<std::string> &args,
    const Result &r,
    const CommonFlags &f,
    std::ostream &out) {
    std::string ext = f.format == "json" ? ".json" : ".csv";
    if (f.out.empty()) {
        for (size_t k = 0; k < r.outputs.size(); k++) {
            out << (k ? "\n" : "") << render(r.outputs[k].table, f.format);
        }
        return;
    }
    fs::create_directories(f.out);
    RunManifest m;
    m.command = command;
    m.args = args_without_out(args);
    m.parameters = r.params;
    m.seed = f.seed;
    m.version = WERNET_VERSION;
    for (const Output &o : r.outputs) {
        std::string bytes = render(o.table, f.format);
        std::string file = o.name + ext;
        std::ofstream stream(fs::path(f.out) / file, std::ios::binary);
        stream << bytes;
        if (!stream) {
            throw std::runtime_error("cannot write " + (fs::path(f.out) / file).string());
        }
        m.outputs.push_back({file, crc32_hex(bytes), bytes.size()});
        out << "wrote " << (fs::path(f.out) / file).string() << '\n';
    }
    std::ofstream manifest(fs::path(f.out) / "manifest.json", std::ios::binary);
    write_manifest(manifest, m);
    if (!manifest) {
        throw std::runtime_error("cannot write manifest");
    }
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read " + path.string());
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int command_replay(const std::string &manifest_path, const std::string &out_dir, std::ostream &out,
                   std::ostream &err) {
    std::ifstream in(manifest_path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot read manifest " + manifest_path);
    }
    RunManifest m = read_manifest(in);
    if (m.command == "replay") {
        throw std::invalid_argument("replay: manifest names replay itself");
    }
    fs::path dir = out_dir.empty() ? fs::path(manifest_path).parent_path() / "replay" : fs::path(out_dir);
    std::vector<std::string> args{m.command};
    args.insert(args.end(), m.args.begin(), m.args.end());
    args.push_back("--out");
    args.push_back(dir.string());
    std::ostringstream sink;
    int code = run_cli(args, sink, err);
    if (code != kExitOk) {
        return code;
    }
    bool all = true;
    for (const ManifestOutput &o : m.outputs) {
        std::string actual = crc32_hex(slurp(dir / o.file));
        bool same = actual == o.crc32;
        all = all && same;
        out << o.file << ' ' << o.crc32 << ' ' << actual << ' ' << (same ? "match" : "MISMATCH") << '\n';
    }
    return all ? kExitOk : kExitReplayMismatch;
}

}  // namespace

std::vector<double> parse_grid(const std::string &spec) {
    auto number = [&](const std::string &s) {
        size_t used = 0;
        double v = 0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v)) {
            throw std::invalid_argument("bad number '" + s + "' in '" + spec + "'");
        }
        return v;
    };
    std::vector<double> out;
    if (spec.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(spec);
        for (std::string item; std::getline(ss, item, ':');) {
            parts.push_back(item);
        }
        if (parts.size() != 3) {
            throw std::invalid_argument("range must be lo:hi:step, got '" + spec + "'");
        }
        double lo = number(parts[0]);
        double hi = number(parts[1]);
        double step = number(parts[2]);
        if (!(step > 0) || hi < lo) {
            throw std::invalid_argument("range needs step > 0 and hi >= lo, got '" + spec + "'");
        }
        auto count = static_cast<int64_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
        if (count > 10'000'000) {
            throw std::invalid_argument("range too long: '" + spec + "'");
        }
        for (int64_t k = 0; k < count; k++) {
            out.push_back(lo + step * k);
        }
        return out;
    }
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ',');) {
        out.push_back(number(item));
    }
    if (out.empty()) {
        throw std::invalid_argument("empty value list");
    }
    return out;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Entanglement distribution over Werner-state networks", "wernet"};
    app.set_version_flag("--version", std::string("wernet ") + WERNET_VERSION);
    app.require_subcommand(1);

    CommonFlags common;

    AnalyzeFlags af;
    CLI::App *analyze = app.add_subcommand("analyze", "Closed-form single and multiple purification analysis");
    analyze->add_flag("--spp-extremals", af.extremals, "Extremal values of the single purification gain");
    analyze->add_flag("--multipur", af.multipur, "Good intervals for n equal purified segments");
    analyze->add_flag("--noisy", af.noisy, "Maximum gain with noisy operations");
    analyze->add_option("--alpha", af.alpha, "Total purified fraction");
    analyze->add_option("--n", af.n, "Segment counts, comma separated; 'inf' for the limit");
    analyze->add_option("--p1", af.p1, "One-qubit gate reliability");
    analyze->add_option("--p2", af.p2, "Two-qubit gate reliability");
    analyze->add_option("--eta", af.eta, "Measurement reliability");
    add_common(analyze, common);

    SimulateFlags sf;
    CLI::App *simulate = app.add_subcommand("simulate", "Monte Carlo densities on Erdos-Renyi graphs");
    simulate->add_option("--fig", sf.fig, "sigma, eta322, gain-surface or eta-over-g")->required();
    simulate->add_flag("--critical", sf.critical, "Use p = 1/N");
    simulate->add_option("--estimator", sf.estimator, "eta322 statistic: exists or count");
    add_common(simulate, common);

    CriticalFlags cf;
    CLI::App *critical = app.add_subcommand("critical", "Critical-point integrals and sums");
    critical->add_flag("--A", cf.A, "The constant A and its step-halving check");
    critical->add_flag("--sum", cf.sum, "Discrete gain sum against the asymptote");
    critical->add_flag("--hfunc", cf.hfunc, "Tabulate h(s)");
    critical->add_flag("--ffunc", cf.ffunc, "Tabulate f(y)");
    critical->add_option("--eps", cf.eps, "1 - x grid for --sum");
    critical->add_option("--points", cf.points, "Points for --hfunc/--ffunc");
    critical->add_option("--prefactor", cf.prefactor, "Cluster radius prefactor for the ceiling");
    add_common(critical, common);

    std::string manifest_path;
    std::string replay_out;
    CLI::App *replay = app.add_subcommand("replay", "Re-run a manifest and compare checksums");
    replay->add_option("manifest", manifest_path, "manifest.json to replay")->required();
    replay->add_option("--out", replay_out, "Directory for regenerated outputs");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitFlagError;
    }

    try {
        if (*replay) {
            return command_replay(manifest_path, replay_out, out, err);
        }
        Result r;
        std::string command;
        if (*analyze) {
            command = "analyze";
            r = command_analyze(af);
        } else if (*simulate) {
            command = "simulate";
            r = command_simulate(sf, common);
        } else {
            command = "critical";
            r = command_critical(cf, common);
        }
        std::vector<std::string> rest(args.begin() + 1, args.end());
        emit(command, rest, r, common, out);
        return kExitOk;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << '\n';
        return kExitFlagError;
    } catch (const std::exception &e) {
        err << "numerical failure: " << e.what() << '\n';
        return kExitNumericalError;
    }
}

}  // namespace wernet
