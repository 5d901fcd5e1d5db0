#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polydit/moshinsky.hpp"
#include "polydit/shutter.hpp"
#include "polydit/spiral.hpp"
#include "polydit/transition.hpp"
#include "polydit/units.hpp"
#include "polydit/verify.hpp"
#include "polydit/wave.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

using nlohmann::json;
using namespace polydit;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

struct Output {
    std::string format = "csv";  // csv | json
    std::string path;            // empty -> stdout

    void write(const std::string& config_echo, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows, const json& extra = json()) const {
        std::ostream* os = &std::cout;
        std::ofstream file;
        if (!path.empty()) {
            file.open(path, std::ios::binary);
            if (!file) throw invalid_input("cannot open output path: " + path);
            os = &file;
        }
        if (format == "csv") {
            *os << "# " << config_echo << "\n";
            if (!extra.is_null())
                for (auto& [k, v] : extra.items()) *os << "# " << k << " = " << v.dump() << "\n";
            for (std::size_t c = 0; c < columns.size(); ++c)
                *os << (c ? "," : "") << columns[c];
            *os << "\n";
            for (const auto& row : rows) {
                for (std::size_t c = 0; c < row.size(); ++c)
                    *os << (c ? "," : "") << fmt17(row[c]);
                *os << "\n";
            }
        } else {
            json out;
            out["config"] = config_echo;
            if (!extra.is_null()) out["report"] = extra;
            json samples = json::array();
            for (const auto& row : rows) {
                json s;
                for (std::size_t c = 0; c < row.size(); ++c) s[columns[c]] = row[c];
                samples.push_back(std::move(s));
            }
            out["samples"] = std::move(samples);
            *os << out.dump(2) << "\n";
        }
    }
};

std::vector<double> make_grid(double start, double stop, double step) {
    if (!(step > 0.0) || !(stop >= start)) throw invalid_input("bad tau grid");
    std::vector<double> g;
    long n = static_cast<long>(std::floor((stop - start) / step + 1e-9));
    g.reserve(static_cast<std::size_t>(n) + 1);
    for (long i = 0; i <= n; ++i) g.push_back(start + step * static_cast<double>(i));
    return g;
}

int require_integer_site(double mu) {
    if (std::abs(mu - std::round(mu)) > 1e-9)
        throw invalid_input("lattice dynamics require an integer site index mu");
    return static_cast<int>(std::round(mu));
}

struct CommonOpts {
    std::string dynamics = "polymer";
    double mu = 10.0;
    double rho = 0.3;
    double tau_start = 0.0, tau_stop = 400.0, tau_step = 0.5;
    double mu_lo = 0.0, mu_hi = 120.0;
    double tol = 1e-6;
    std::string config_path;
    CLI::App* cmd = nullptr;
    Output out;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    o.cmd = cmd;
    cmd->add_option("--dynamics", o.dynamics, "polymer | continuum | classical | wave")
        ->check(CLI::IsMember({"polymer", "continuum", "classical", "wave"}));
    cmd->add_option("--mu", o.mu, "site index / position");
    cmd->add_option("--rho", o.rho, "dimensionless momentum in (0, pi)");
    cmd->add_option("--tau-start", o.tau_start);
    cmd->add_option("--tau-stop", o.tau_stop);
    cmd->add_option("--tau-step", o.tau_step);
    cmd->add_option("--mu-lo", o.mu_lo);
    cmd->add_option("--mu-hi", o.mu_hi);
    cmd->add_option("--tol", o.tol, "accuracy target in (0, 1e-3]");
    cmd->add_option("--format", o.out.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", o.out.path, "output path (default stdout)");
    cmd->add_option("--config", o.config_path, "key=value config file; flags override");
}

double parse_number(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double v;
    try {
        v = std::stod(value, &used);
    } catch (const std::exception&) {
        throw invalid_input("config: bad numeric value for " + key + ": '" + value + "'");
    }
    if (used != value.size())
        throw invalid_input("config: bad numeric value for " + key + ": '" + value + "'");
    return v;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// key=value config; command-line flags take precedence
void apply_config(CommonOpts& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw invalid_input("cannot open config file: " + o.config_path);
    auto given = [&](const char* flag) { return o.cmd->count(flag) > 0; };
    std::string line;
    while (std::getline(in, line)) {
        std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::size_t eq = t.find('=');
        if (eq == std::string::npos) throw invalid_input("config: expected key=value, got '" + t + "'");
        std::string key = trim(t.substr(0, eq)), value = trim(t.substr(eq + 1));
        if (key == "dynamics") {
            if (value != "polymer" && value != "continuum" && value != "classical" &&
                value != "wave")
                throw invalid_input("config: unknown dynamics '" + value + "'");
            if (!given("--dynamics")) o.dynamics = value;
        } else if (key == "mu") {
            if (!given("--mu")) o.mu = parse_number(key, value);
        } else if (key == "rho") {
            if (!given("--rho")) o.rho = parse_number(key, value);
        } else if (key == "tau-start") {
            if (!given("--tau-start")) o.tau_start = parse_number(key, value);
        } else if (key == "tau-stop") {
            if (!given("--tau-stop")) o.tau_stop = parse_number(key, value);
        } else if (key == "tau-step") {
            if (!given("--tau-step")) o.tau_step = parse_number(key, value);
        } else if (key == "mu-lo") {
            if (!given("--mu-lo")) o.mu_lo = parse_number(key, value);
        } else if (key == "mu-hi") {
            if (!given("--mu-hi")) o.mu_hi = parse_number(key, value);
        } else if (key == "tol") {
            if (!given("--tol")) o.tol = parse_number(key, value);
        } else if (key == "format") {
            if (value != "csv" && value != "json")
                throw invalid_input("config: unknown format '" + value + "'");
            if (!given("--format")) o.out.format = value;
        } else if (key == "out") {
            if (!given("--out")) o.out.path = value;
        } else {
            throw invalid_input("config: unknown key '" + key + "'");
        }
    }
}

void validate_common(const CommonOpts& o) {
    if (!(o.tol > 0.0) || o.tol > 1e-3) throw invalid_input("tol must lie in (0, 1e-3]");
    if (!(o.rho > 0.0) || o.rho >= kPi) throw invalid_input("rho must lie in (0, pi)");
}

std::string echo(const CommonOpts& o, const std::string& cmd) {
    return cmd + " dynamics=" + o.dynamics + " mu=" + fmt17(o.mu) + " rho=" + fmt17(o.rho) +
           " tau=[" + fmt17(o.tau_start) + "," + fmt17(o.tau_stop) + "," + fmt17(o.tau_step) +
           "] mu_range=[" + fmt17(o.mu_lo) + "," + fmt17(o.mu_hi) + "] tol=" + fmt17(o.tol);
}

double wave_density(int mu, const LatticeMomentum& rho, double tau) {
    return std::norm(closed_form(mu, rho, tau));
}

int cmd_time_profile(const CommonOpts& o) {
    validate_common(o);
    LatticeMomentum rho(o.rho);
    std::vector<double> grid = make_grid(o.tau_start, o.tau_stop, o.tau_step);
    std::vector<std::vector<double>> rows(grid.size());
    int site = (o.dynamics == "polymer" || o.dynamics == "wave") ? require_integer_site(o.mu) : 0;
    const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        double tau = grid[static_cast<std::size_t>(i)];
        double d;
        if (o.dynamics == "polymer")
            d = density(site, rho, tau);
        else if (o.dynamics == "continuum")
            d = tau > 0.0 ? moshinsky_density(fresnel_arg(o.mu, o.rho, tau)) : (o.mu <= 0 ? 1.0 : 0.0);
        else if (o.dynamics == "wave")
            d = wave_density(site, rho, tau);
        else
            d = classical_profile(o.mu, o.rho, tau);
        double cont =
            tau > 0.0 ? moshinsky_density(fresnel_arg(o.mu, o.rho, tau)) : (o.mu <= 0 ? 1.0 : 0.0);
        rows[static_cast<std::size_t>(i)] = {tau, d, cont, classical_profile(o.mu, o.rho, tau)};
    }
    o.out.write(echo(o, "time-profile"),
                {"tau", "density_" + o.dynamics, "density_continuum_reference", "density_classical"},
                rows);
    return 0;
}

int cmd_space_profile(const CommonOpts& o) {
    validate_common(o);
    LatticeMomentum rho(o.rho);
    double tau = o.tau_stop;
    if (!(o.mu_hi >= o.mu_lo)) throw invalid_input("empty mu range");
    std::vector<std::vector<double>> rows;
    if (o.dynamics == "polymer" || o.dynamics == "wave") {
        int lo = require_integer_site(o.mu_lo), hi = require_integer_site(o.mu_hi);
        Profile p = o.dynamics == "polymer" ? profile_space(tau, rho, lo, hi)
                                            : Profile{ProfileAxis::site_at_fixed_time, Dynamics::wave,
                                                      {}, {}};
        if (o.dynamics == "wave") {
            for (int mu = lo; mu <= hi; ++mu) {
                p.coordinate.push_back(mu);
                p.density.push_back(wave_density(mu, rho, tau));
            }
        }
        for (std::size_t i = 0; i < p.coordinate.size(); ++i) {
            double mu = p.coordinate[i];
            double cont = tau > 0.0 ? moshinsky_density(fresnel_arg(mu, o.rho, tau))
                                    : (mu <= 0 ? 1.0 : 0.0);
            rows.push_back({mu, p.density[i], cont, classical_profile(mu, o.rho, tau)});
        }
    } else {
        for (double mu = o.mu_lo; mu <= o.mu_hi + 1e-9; mu += 1.0) {
            double cont =
                tau > 0.0 ? moshinsky_density(fresnel_arg(mu, o.rho, tau)) : (mu <= 0 ? 1.0 : 0.0);
            double d = o.dynamics == "continuum" ? cont : classical_profile(mu, o.rho, tau);
            rows.push_back({mu, d, cont, classical_profile(mu, o.rho, tau)});
        }
    }
    o.out.write(echo(o, "space-profile"),
                {"mu", "density_" + o.dynamics, "density_continuum_reference", "density_classical"},
                rows);
    return 0;
}

int cmd_spiral(const CommonOpts& o, const std::string& kind) {
    validate_common(o);
    if (kind != "cornu" && kind != "like") throw invalid_input("spiral kind must be cornu or like");
    SpiralCurve c = kind == "cornu"
                        ? cornu_curve(o.tau_start, o.tau_stop, o.tau_step)
                        : like_spiral(require_integer_site(o.mu), LatticeMomentum(o.rho),
                                      o.tau_stop, o.tau_step);
    std::vector<std::vector<double>> rows;
    rows.reserve(c.points.size());
    for (const SpiralPoint& p : c.points) rows.push_back({p.x, p.y, p.param});
    o.out.write(echo(o, "spiral kind=" + kind), {"x", "y", "param"}, rows);
    return 0;
}

int cmd_widths(const CommonOpts& o) {
    validate_common(o);
    LatticeMomentum rho(o.rho);
    int site = require_integer_site(o.mu);
    double tau_stop = o.tau_stop;
    json rep;
    rep["mu"] = site;
    rep["rho"] = o.rho;
    rep["dtau_formula"] = time_width(o.mu, o.rho);
    rep["dmu_formula_at_tau_cl"] = space_width(o.mu / o.rho);
    rep["dxi_cornu"] = cornu_circle_width();
    try {
        Profile p = profile_time(site, rho, make_grid(0.0, tau_stop, 0.05));
        CrossingReport cr = crossings(smooth_profile(p, kPi), 1.0);
        rep["status"] = "ok";
        rep["tau1"] = cr.first;
        rep["tau2"] = cr.second;
        rep["dtau_measured"] = cr.width;
    } catch (const numerical_error&) {
        rep["status"] = "no_crossings";
    }
    o.out.write(echo(o, "widths"), {}, {}, rep);
    return 0;
}

int cmd_transition(const CommonOpts& o) {
    validate_common(o);
    LatticeMomentum rho(o.rho);
    int site = require_integer_site(o.mu);
    std::vector<double> grid = make_grid(std::max(o.tau_start, o.tau_step), o.tau_stop, o.tau_step);
    std::vector<std::vector<double>> rows(grid.size());
    const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i) {
        double tau = grid[static_cast<std::size_t>(i)];
        TransitionReport r = asymptotic_moshinsky(site, rho, tau);
        double first_order = std::norm(r.main_term + r.correction) - std::norm(r.main_term);
        rows[static_cast<std::size_t>(i)] = {tau, r.residual_P, first_order, std::abs(r.correction)};
    }
    ResidualPeak exact = residual_max(site, rho, grid.front(), grid.back(), o.tau_step);
    ResidualPeak first = residual_max(site, rho, grid.front(), grid.back(), o.tau_step,
                                      ResidualMode::first_order);
    json rep;
    rep["P_max_exact"] = exact.P_max;
    rep["tau_star_exact"] = exact.tau_star;
    rep["P_max_first_order"] = first.P_max;
    rep["tau_star_first_order"] = first.tau_star;
    o.out.write(echo(o, "transition"),
                {"tau", "residual_P", "residual_P_first_order", "correction_magnitude"}, rows, rep);
    return 0;
}

int cmd_wave(const CommonOpts& o) {
    validate_common(o);
    LatticeMomentum rho(o.rho);
    int site = require_integer_site(o.mu);
    std::vector<double> grid = make_grid(o.tau_start, o.tau_stop, o.tau_step);
    std::vector<std::vector<double>> rows(grid.size());
    const long n = static_cast<long>(grid.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long i = 0; i < n; ++i) {
        double tau = grid[static_cast<std::size_t>(i)];
        cplx cf = closed_form(site, rho, tau);
        cplx pv = pv_solution(site, rho, tau);
        rows[static_cast<std::size_t>(i)] = {tau,      cf.real(),      cf.imag(), pv.real(),
                                             pv.imag(), std::norm(cf)};
    }
    // required artifact: constant-offset report for the literal reference form
    OffsetReport orep = closed_form_offset_report(site, rho, std::max(1.0, grid.front()),
                                                  std::max(2.0, grid.back()), 25);
    json rep;
    rep["reference_offset_re"] = orep.offset.real();
    rep["reference_offset_im"] = orep.offset.imag();
    rep["reference_residual_after_fit"] = orep.residual_after_fit;
    rep["reference_samples"] = orep.n_samples;
    o.out.write(echo(o, "wave"),
                {"tau", "re_closed", "im_closed", "re_pv", "im_pv", "density_closed"}, rows, rep);
    return 0;
}

int cmd_verify(const std::string& suite, const Output& out) {
    std::vector<CheckResult> results = verify_suite(suite);
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!out.path.empty()) {
        file.open(out.path, std::ios::binary);
        if (!file) throw invalid_input("cannot open output path: " + out.path);
        os = &file;
    }
    bool all_ok = true;
    for (const CheckResult& r : results) {
        json line;
        line["suite"] = r.suite;
        line["check"] = r.name;
        line["value"] = r.value;
        line["bound"] = r.bound;
        line["passed"] = r.passed;
        *os << line.dump() << "\n";
        all_ok = all_ok && r.passed;
    }
    json summary;
    summary["total"] = results.size();
    summary["passed"] = all_ok;
    *os << summary.dump() << "\n";
    return all_ok ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"diffraction-in-time simulator for polymer-quantized particles"};
    app.require_subcommand(1);

    CommonOpts tp, sp, spi, wd, tr, wv;
    std::string spiral_kind = "cornu";
    std::string verify_suite_name = "all";
    Output verify_out;

    auto* c_tp = app.add_subcommand("time-profile", "density vs tau at fixed site");
    add_common(c_tp, tp);
    auto* c_sp = app.add_subcommand("space-profile", "density vs site at fixed tau (--tau-stop)");
    add_common(c_sp, sp);
    auto* c_spi = app.add_subcommand("spiral", "Cornu or polymer like-spiral samples");
    add_common(c_spi, spi);
    c_spi->add_option("--kind", spiral_kind, "cornu | like");
    auto* c_wd = app.add_subcommand("widths", "crossing widths and formula values");
    add_common(c_wd, wd);
    auto* c_tr = app.add_subcommand("transition", "polymer vs continuum residual diagnostics");
    add_common(c_tr, tr);
    auto* c_wv = app.add_subcommand("wave", "polymer wave equation solutions");
    add_common(c_wv, wv);
    auto* c_ver = app.add_subcommand("verify", "oracle cross-validation suites");
    c_ver->add_option("--suite", verify_suite_name, "specfun | shutter | transition | wave | all")
        ->check(CLI::IsMember({"specfun", "shutter", "transition", "wave", "all"}));
    c_ver->add_option("--out", verify_out.path, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        nlohmann::json err;
        err["error"] = e.what();
        err["code"] = 2;
        std::cerr << err.dump() << "\n";
        return 2;
    }

    try {
        for (CommonOpts* o : {&tp, &sp, &spi, &wd, &tr, &wv})
            if (o->cmd->parsed()) apply_config(*o);
        if (c_tp->parsed()) return cmd_time_profile(tp);
        if (c_sp->parsed()) return cmd_space_profile(sp);
        if (c_spi->parsed()) return cmd_spiral(spi, spiral_kind);
        if (c_wd->parsed()) return cmd_widths(wd);
        if (c_tr->parsed()) return cmd_transition(tr);
        if (c_wv->parsed()) return cmd_wave(wv);
        if (c_ver->parsed()) return cmd_verify(verify_suite_name, verify_out);
    } catch (const polydit::invalid_input& e) {
        nlohmann::json err;
        err["error"] = e.what();
        err["code"] = 2;
        std::cerr << err.dump() << "\n";
        return 2;
    } catch (const polydit::numerical_error& e) {
        nlohmann::json err;
        err["error"] = e.what();
        err["code"] = 3;
        std::cerr << err.dump() << "\n";
        return 3;
    }
    return 2;
}
