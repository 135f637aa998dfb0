// Command-line front end for the runup direct/inverse shoreline solvers.
//
//   runup direct    --input profile.csv --outdir out/
//   runup inverse   --input record.csv  --outdir out/
//   runup roundtrip --input profile.csv --outdir out/
//   runup selftest
//   runup waveeq-check
//
// Exit codes: 0 success, 1 selftest failure, 2 breaking/physics error,
// 3 I/O or schema error.

#include <CLI11.hpp>
#include <json.hpp>

#include "runup/abel.hpp"
#include "runup/csv_io.hpp"
#include "runup/direct.hpp"
#include "runup/errors.hpp"
#include "runup/inversion.hpp"
#include "runup/kernels.hpp"
#include "runup/scaling.hpp"
#include "runup/selftest.hpp"
#include "runup/wave_reference.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace runup;

namespace {

const double pi = std::acos(-1.0);

int log_level()
{
    const char* v = std::getenv("RUNUP_LOG");
    if (!v)
        return 0;
    const std::string s(v);
    if (s == "debug")
        return 2;
    if (s == "info" || s == "1")
        return 1;
    return 0;
}

void log_info(const std::string& msg)
{
    if (log_level() >= 1)
        std::cerr << "[runup] " << msg << "\n";
}

struct CommonOpts {
    std::string input;
    std::string outdir = ".";
    std::optional<double> h0, alpha, grav;
    int n_sigma = 1024;
    int n_tau = 1024;
    double sigma_max = 0.0;
    int smooth_window = 11;
    int smooth_degree = 2;
    double tolerance = 1e-2;

    bool dimensional() const { return h0 || alpha || grav; }

    ScalingParameters scaling() const
    {
        ScalingParameters s;
        s.H0 = h0.value_or(1.0);
        s.alpha = alpha.value_or(1.0);
        s.g = grav.value_or(9.81);
        s.validate();
        return s;
    }

    json resolved() const
    {
        json j;
        j["n_sigma"] = n_sigma;
        j["n_tau"] = n_tau;
        j["sigma_max"] = sigma_max;
        j["smooth_window"] = smooth_window;
        j["smooth_degree"] = smooth_degree;
        j["tolerance"] = tolerance;
        if (dimensional()) {
            const auto s = scaling();
            j["scaling"] = {{"H0", s.H0}, {"alpha", s.alpha}, {"g", s.g}};
        } else {
            j["scaling"] = nullptr;
        }
        return j;
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_input)
{
    if (needs_input)
        cmd->add_option("--input", o.input, "input CSV file")->required();
    cmd->add_option("--outdir", o.outdir, "output directory");
    cmd->add_option("--h0", o.h0, "reference height H0 [m] (enables SI conversion)");
    cmd->add_option("--alpha", o.alpha, "beach slope");
    cmd->add_option("--g", o.grav, "gravitational acceleration [m/s^2]");
    cmd->add_option("--n-sigma", o.n_sigma, "sigma grid size");
    cmd->add_option("--n-tau", o.n_tau, "tau grid size");
    cmd->add_option("--sigma-max", o.sigma_max, "hodograph truncation radius (0 = auto)");
    cmd->add_option("--smooth-window", o.smooth_window, "odd moving-window sample count");
    cmd->add_option("--smooth-degree", o.smooth_degree, "moving-window fit degree (<= 3)");
    cmd->add_option("--tolerance", o.tolerance, "tolerance for waveeq-check");
}

void write_json(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw io_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

json norms(const SampledFunction& f)
{
    double linf = 0.0, l2 = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        linf = std::max(linf, std::abs(f.values()[i]));
        l2 += f.values()[i] * f.values()[i];
    }
    l2 = std::sqrt(l2 / double(f.size()));
    return {{"linf", linf}, {"l2", l2}};
}

PhysicalInitialData load_profile(const CommonOpts& o)
{
    ProfileCsv p = read_profile_csv(o.input);
    if (o.dimensional()) {
        DimensionalProfile dp{p.x, p.eta0, ProfileKind::elevation};
        return {to_dimensionless(dp, o.scaling())};
    }
    return {SampledFunction(p.x, p.eta0)};
}

ShorelineRecord load_record(const CommonOpts& o)
{
    RecordCsv rc = read_record_csv(o.input);
    if (!o.dimensional())
        return rc.record;
    const auto s = o.scaling();
    ShorelineRecord r;
    auto pos = to_dimensionless({rc.record.t, rc.record.x0, ProfileKind::position_series}, s);
    r.t = pos.grid();
    r.x0 = pos.values();
    if (!rc.record.v0.empty()) {
        auto vel = to_dimensionless({rc.record.t, rc.record.v0, ProfileKind::velocity}, s);
        r.v0 = vel.values();
    }
    return r;
}

// record/trace conversion to SI for the dual-unit outputs
ShorelineRecord record_to_si(const ShorelineRecord& r, const ScalingParameters& s)
{
    ShorelineRecord out;
    auto pos = to_dimensional(SampledFunction(r.t, r.x0), s, ProfileKind::position_series);
    out.t = pos.abscissa;
    out.x0 = pos.values;
    if (r.v0.size() == r.t.size())
        out.v0 = to_dimensional(SampledFunction(r.t, r.v0), s, ProfileKind::velocity).values;
    return out;
}

struct DirectArtifacts {
    ShorelineRecord record;
    ShorelineTrace trace;
    HodographInitialData hodo;
    double sigma_max = 0.0;
    BreakingReport margin;
};

DirectArtifacts run_direct_pipeline(const PhysicalInitialData& d, const CommonOpts& o)
{
    DirectArtifacts a;
    a.margin = breaking_check(d);
    if (a.margin.breaking)
        throw breaking_error("initial profile breaks: min(1 + deta0/dx) = "
                             + std::to_string(a.margin.min_margin));
    DirectConfig cfg;
    cfg.sigma_max = o.sigma_max;
    cfg.n_sigma = o.n_sigma;
    cfg.n_tau = o.n_tau;
    a.record = direct_shoreline(d, cfg);
    ShorelineTrace tr = record_to_trace(a.record);
    a.trace = tr;
    a.sigma_max = tr.tau.back();
    a.hodo = initial_to_hodograph(d, linspace(0.0, a.sigma_max, std::size_t(o.n_sigma)));
    return a;
}

json residual_diagnostics(const HodographInitialData& h, const ShorelineTrace& tr)
{
    const auto sig = linspace(0.0, tr.tau.back(), 256);
    return norms(shoreline_equation_residual(h, tr, sig));
}

int cmd_direct(const CommonOpts& o)
{
    fs::create_directories(o.outdir);
    PhysicalInitialData d = load_profile(o);
    DirectArtifacts a = run_direct_pipeline(d, o);

    write_record_csv(o.outdir + "/shoreline_record.csv", a.record, "dimensionless");
    write_trace_csv(o.outdir + "/trace.csv", a.trace, "dimensionless");
    if (o.dimensional())
        write_record_csv(o.outdir + "/shoreline_record_si.csv",
                         record_to_si(a.record, o.scaling()), "SI");

    double x0_min = 0.0, x0_max = 0.0;
    for (double v : a.record.x0) {
        x0_min = std::min(x0_min, v);
        x0_max = std::max(x0_max, v);
    }
    json j;
    j["command"] = "direct";
    j["input"] = o.input;
    j["input_digest"] = file_digest(o.input);
    j["config"] = o.resolved();
    j["breaking_margin"] = {{"value", a.margin.min_margin},
                            {"near_breaking", a.margin.near_breaking},
                            {"quantity", a.margin.quantity}};
    j["extrema"] = {{"max_rundown_x0", x0_min}, {"max_runup_x0", x0_max}};
    j["shoreline_equation_residual"] = residual_diagnostics(a.hodo, a.trace);
    write_json(o.outdir + "/summary.json", j);
    log_info("direct problem done, record written");
    return 0;
}

int cmd_inverse(const CommonOpts& o)
{
    fs::create_directories(o.outdir);
    ShorelineRecord r = load_record(o);

    InversionConfig cfg;
    cfg.smooth_window = o.smooth_window;
    cfg.smooth_degree = o.smooth_degree;
    cfg.n_tau = std::max(64, o.n_tau);
    InversionResult res = recover_initial(r, cfg);

    write_profile_csv(o.outdir + "/eta0_recovered.csv", res.eta0.eta0.grid(),
                      res.eta0.eta0.values(), "dimensionless");
    if (o.dimensional()) {
        auto dp = to_dimensional(res.eta0.eta0, o.scaling(), ProfileKind::elevation);
        write_profile_csv(o.outdir + "/eta0_recovered_si.csv", dp.abscissa, dp.values, "SI");
    }

    // consistency of the recovered psi0 against the data trace
    HodographInitialData h =
        initial_to_hodograph(res.eta0, linspace(0.0, res.sigma_max, 256));
    std::vector<double> v0 = r.v0.size() == r.t.size()
        ? r.v0
        : differentiate_record(r.t, r.x0, o.smooth_window, o.smooth_degree);
    ShorelineTrace tr = record_to_trace({r.t, r.x0, v0});

    json j;
    j["command"] = "inverse";
    j["input"] = o.input;
    j["input_digest"] = file_digest(o.input);
    j["config"] = o.resolved();
    j["covered_x_range"] = {res.x_min, res.x_max};
    j["sigma_max"] = res.sigma_max;
    j["breaking_margin"] = {{"value", res.record_margin.min_margin},
                            {"near_breaking", res.record_margin.near_breaking},
                            {"quantity", res.record_margin.quantity}};
    j["v0_supplied"] = res.v0_supplied;
    j["v0_rms_disagreement"] = res.v0_rms_disagreement;
    if (res.v0_warning)
        std::cerr << "warning: supplied v0 disagrees with differentiated x0 by "
                  << res.v0_rms_disagreement * 100.0 << "% RMS\n";
    j["shoreline_equation_residual"] = residual_diagnostics(h, tr);
    write_json(o.outdir + "/summary.json", j);
    log_info("inverse problem done, profile written");
    return 0;
}

int cmd_roundtrip(const CommonOpts& o)
{
    fs::create_directories(o.outdir);
    PhysicalInitialData d = load_profile(o);
    DirectArtifacts a = run_direct_pipeline(d, o);

    InversionConfig cfg;
    cfg.smooth_window = o.smooth_window;
    cfg.smooth_degree = o.smooth_degree;
    cfg.n_tau = std::max(64, o.n_tau);
    InversionResult res = recover_initial(a.record, cfg);

    // compare on the intersection of the input and reconstructed domains
    const double lo = std::max(res.x_min, d.eta0.xmin());
    const double hi = std::min(res.x_max, d.eta0.xmax());
    double linf = 0.0, l2 = 0.0, ref = 0.0;
    const auto xs = linspace(lo, hi, 1001);
    for (double x : xs) {
        const double e = res.eta0.eta0(x) - d.eta0(x);
        linf = std::max(linf, std::abs(e));
        l2 += e * e;
        ref = std::max(ref, std::abs(d.eta0(x)));
    }
    l2 = std::sqrt(l2 / double(xs.size()));

    write_profile_csv(o.outdir + "/eta0_recovered.csv", res.eta0.eta0.grid(),
                      res.eta0.eta0.values(), "dimensionless");
    json j;
    j["command"] = "roundtrip";
    j["input"] = o.input;
    j["input_digest"] = file_digest(o.input);
    j["config"] = o.resolved();
    j["covered_x_range"] = {res.x_min, res.x_max};
    j["compared_x_range"] = {lo, hi};
    j["error"] = {{"linf", linf}, {"l2", l2},
                  {"relative_linf", ref > 0.0 ? linf / ref : 0.0}};
    write_json(o.outdir + "/roundtrip_report.json", j);
    std::cout << "roundtrip relative Linf error: "
              << (ref > 0.0 ? linf / ref : 0.0) << "\n";
    return 0;
}

int cmd_selftest(bool negative_control)
{
    if (negative_control)
        set_abel_weight_perturbation(1.01);
    auto results = run_selftest();
    set_abel_weight_perturbation(1.0);
    bool all_ok = true;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.name
                  << " (" << r.detail << ")\n";
        all_ok = all_ok && r.passed;
    }
    std::cout << (all_ok ? "selftest: all checks passed\n"
                         : "selftest: FAILURES detected\n");
    return all_ok ? 0 : 1;
}

int cmd_waveeq_check(const CommonOpts& o)
{
    // Bessel mode: psi0 = J0(2 sigma) evolves to J0(2 sigma) cos(2 tau);
    // boundary Psi = cos(2 tau), V = sin(2 tau)
    const double om = 2.0;
    const double tau_max = 3.0;
    const double sigma_max = 8.0; // support radius for reflections: whole grid active,
                                  // Dirichlet end far enough for tau <= 3
    HodographInitialData h;
    h.psi0 = SampledFunction::tabulate(0.0, sigma_max, 2001,
                                       [&](double s) { return std::cyl_bessel_j(0.0, om * s); });
    h.phi0 = SampledFunction::tabulate(0.0, sigma_max, 2001, [](double) { return 0.0; });

    WaveConfig wc;
    wc.sigma_max = sigma_max;
    wc.n_sigma = 1601;
    wc.tau_max = tau_max;
    auto tr_fd = extract_boundary(evolve(h, wc));

    double err_psi = 0.0, err_v = 0.0;
    for (std::size_t n = 0; n < tr_fd.tau.size(); ++n) {
        const double tau = tr_fd.tau[n];
        err_psi = std::max(err_psi, std::abs(tr_fd.Psi[n] - std::cos(om * tau)));
        err_v = std::max(err_v, std::abs(tr_fd.V[n] - 0.5 * om * std::sin(om * tau)));
    }
    std::cout << "bessel mode: |Psi_fd - cos| = " << err_psi
              << ", |V_fd - sin| = " << err_v << "\n";

    // Poisson trace vs FD boundary for the same mode
    auto tr_poisson = trace_velocity(poisson_boundary(h, linspace(0.0, tau_max, 301)));
    SampledFunction fd_psi(tr_fd.tau, tr_fd.Psi), fd_v(tr_fd.tau, tr_fd.V);
    double dpsi = 0.0, dv = 0.0;
    for (std::size_t i = 0; i < tr_poisson.tau.size(); ++i) {
        const double tau = tr_poisson.tau[i];
        dpsi = std::max(dpsi, std::abs(tr_poisson.Psi[i] - fd_psi(tau)));
        dv = std::max(dv, std::abs(tr_poisson.V[i] - fd_v(tau)));
    }
    std::cout << "poisson vs fd: |dPsi| = " << dpsi << ", |dV| = " << dv << "\n";

    const bool ok = err_psi < o.tolerance && err_v < o.tolerance
                 && dpsi < o.tolerance && dv < o.tolerance;
    std::cout << (ok ? "waveeq-check: PASS\n" : "waveeq-check: FAIL\n");
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Long-wave runup on a plane beach: direct and inverse shoreline solvers"};
    app.require_subcommand(1);

    CommonOpts o_direct, o_inverse, o_roundtrip, o_wave;
    bool negative_control = false;

    auto* c_direct = app.add_subcommand("direct", "initial profile -> shoreline record");
    add_common(c_direct, o_direct, true);
    auto* c_inverse = app.add_subcommand("inverse", "shoreline record -> initial profile");
    add_common(c_inverse, o_inverse, true);
    auto* c_round = app.add_subcommand("roundtrip", "direct then inverse, with error report");
    add_common(c_round, o_roundtrip, true);
    auto* c_self = app.add_subcommand("selftest", "run built-in analytic checks");
    c_self->add_flag("--negative-control", negative_control,
                     "perturb the Abel quadrature weights; checks must then fail");
    auto* c_wave = app.add_subcommand("waveeq-check",
                                      "compare the boundary formula against the FD solver");
    add_common(c_wave, o_wave, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_direct->parsed())
            return cmd_direct(o_direct);
        if (c_inverse->parsed())
            return cmd_inverse(o_inverse);
        if (c_round->parsed())
            return cmd_roundtrip(o_roundtrip);
        if (c_self->parsed())
            return cmd_selftest(negative_control);
        if (c_wave->parsed())
            return cmd_waveeq_check(o_wave);
    } catch (const breaking_error& e) {
        json j = {{"error", "breaking"}, {"message", e.what()}};
        std::cerr << j.dump(2) << "\n";
        return 2;
    } catch (const stability_error& e) {
        json j = {{"error", "stability"}, {"message", e.what()}};
        std::cerr << j.dump(2) << "\n";
        return 2;
    } catch (const io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
