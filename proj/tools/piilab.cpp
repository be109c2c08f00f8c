// piilab command-line front end over the C interface.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "piilab/piilab.h"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitFail = 1;

struct CString {
    char* p = nullptr;
    ~CString() { piilab_string_free(p); }
};

int report_error(piilab_status s) {
    std::cerr << "error: " << piilab_status_name(s) << ": " << piilab_last_error() << "\n";
    return s == PIILAB_ERR_INVALID_ARGUMENT || s == PIILAB_ERR_PARSE ? kExitUsage : kExitFail;
}

std::string fmt(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

int run_verify(const std::string& suite, bool json) {
    piilab_report* r = nullptr;
    if (auto s = piilab_verify(suite.c_str(), &r); s != PIILAB_OK) return report_error(s);
    std::unique_ptr<piilab_report, decltype(&piilab_report_free)> guard(r, piilab_report_free);
    CString out;
    auto s = json ? piilab_report_json(r, &out.p) : piilab_report_text(r, &out.p);
    if (s != PIILAB_OK) return report_error(s);
    std::cout << out.p;
    return piilab_report_count(r, PIILAB_CHECK_FAIL) == 0 ? 0 : kExitFail;
}

int run_curves(const std::string& regime, bool discrepancies, bool classes) {
    CString out;
    piilab_status s = discrepancies ? piilab_discrepancy_json(&out.p)
                      : classes     ? piilab_class_table(regime.c_str(), &out.p)
                                    : piilab_intersection_csv(regime.c_str(), &out.p);
    if (s != PIILAB_OK) return report_error(s);
    std::cout << out.p;
    return 0;
}

std::string vector_string(const int64_t* v) {
    std::string out = "(";
    for (int k = 0; k < 10; ++k) out += (k ? ", " : "") + std::to_string(v[k]);
    return out + ")";
}

int run_gamma(int n, bool full) {
    if (full) {
        int64_t v[10];
        if (auto s = piilab_gamma_full(n, v); s != PIILAB_OK) return report_error(s);
        std::cout << vector_string(v) << "\n";
    } else {
        int64_t a, b;
        if (auto s = piilab_gamma_mod(n, &a, &b); s != PIILAB_OK) return report_error(s);
        std::cout << "(" << a << ", " << b << ")\n";
    }
    return 0;
}

int run_orbit(int n) {
    if (n < 1) {
        std::cerr << "error: --n must be positive\n";
        return kExitUsage;
    }
    std::cout << "n,C1,C3,S,f,E1,E2,E3,E4,E5,E6,E7,E8\n";
    for (int k = 1; k <= n; ++k) {
        int64_t a, b, v[10];
        if (auto s = piilab_gamma_mod(k, &a, &b); s != PIILAB_OK) return report_error(s);
        if (auto s = piilab_gamma_full(k, v); s != PIILAB_OK) return report_error(s);
        std::cout << k << "," << a << "," << b;
        for (int i = 0; i < 10; ++i) std::cout << "," << v[i];
        std::cout << "\n";
    }
    return 0;
}

int run_periods(const std::string& c) {
    CString a, b;
    if (auto s = piilab_periods(c.c_str(), &a.p, &b.p); s != PIILAB_OK) return report_error(s);
    std::cout << "C2-C1," << a.p << "\nC4-C3," << b.p << "\n";
    return 0;
}

struct IntegrateArgs {
    std::string c = "0";
    double t0 = 0, t1 = 1, q0 = 0, p0 = 0;
    piilab_integrator_config cfg{};
    std::string events;
};

int run_integrate(const IntegrateArgs& a) {
    piilab_trajectory* tr = nullptr;
    if (auto s = piilab_integrate(a.c.c_str(), a.t0, a.t1, a.q0, a.p0, &a.cfg, &tr); s != PIILAB_OK)
        return report_error(s);
    std::unique_ptr<piilab_trajectory, decltype(&piilab_trajectory_free)> guard(tr, piilab_trajectory_free);
    std::cout << "t,chart,y,z,q_equiv,p_equiv,switch_flag\n";
    for (size_t i = 0; i < piilab_trajectory_size(tr); ++i) {
        piilab_sample s;
        piilab_trajectory_sample(tr, i, &s);
        std::cout << fmt(s.t) << "," << piilab_chart_name(s.chart) << "," << fmt(s.y) << "," << fmt(s.z) << ","
                  << (s.w1_finite ? fmt(s.q) : "inf") << "," << (s.w1_finite ? fmt(s.p) : "inf") << "," << s.switched
                  << "\n";
    }
    std::ofstream file;
    if (!a.events.empty()) {
        file.open(a.events);
        if (!file) {
            std::cerr << "error: cannot open " << a.events << "\n";
            return kExitUsage;
        }
    }
    std::ostream& ev = a.events.empty() ? std::cerr : file;
    for (size_t i = 0; i < piilab_trajectory_switch_count(tr); ++i) {
        piilab_switch e;
        piilab_trajectory_switch(tr, i, &e);
        nlohmann::ordered_json j = {{"t", e.t},
                                    {"from", piilab_chart_name(e.from)},
                                    {"to", piilab_chart_name(e.to)},
                                    {"before", {e.y_before, e.z_before}},
                                    {"after", {e.y_after, e.z_after}}};
        ev << j.dump() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Verification laboratory and integrator for the second Painleve equation"};
    app.require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    bool json = false;
    verify->add_option("suite", suite, "lattice, backlund, atlas or all")
        ->required()
        ->check(CLI::IsMember({"lattice", "backlund", "atlas", "all"}));
    verify->add_flag("--json", json, "emit the report as JSON");

    auto* curves = app.add_subcommand("curves", "intersection table of the named classes");
    std::string regime = "generic";
    bool discrepancies = false, classes = false;
    curves->add_option("--regime", regime, "generic, c0 or cm1")->check(CLI::IsMember({"generic", "c0", "cm1"}));
    curves->add_flag("--discrepancies", discrepancies, "JSON list of disagreements with the stated table");
    curves->add_flag("--classes", classes, "print each class in the (S, f, E) basis instead");

    auto* gamma = app.add_subcommand("gamma", "the -1-curve orbit");
    int n = 1;
    bool full = false;
    gamma->add_option("--n", n, "orbit index")->required()->check(CLI::Range(1, 1000000));
    gamma->add_flag("--full", full, "full class over (S, f, E1..E8)");

    auto* orbit = app.add_subcommand("orbit", "orbit table for 1..N");
    int orbit_n = 10;
    orbit->add_option("--n", orbit_n, "last index")->required()->check(CLI::Range(1, 1000000));

    auto* periods = app.add_subcommand("periods", "periods of the vanishing cycles, as multiples of 2 pi i");
    std::string period_c;
    periods->add_option("--c", period_c, "rational parameter p/q")->required();

    auto* integrate = app.add_subcommand("integrate", "integrate the flow across the chart atlas");
    IntegrateArgs ia;
    piilab_integrator_config_default(&ia.cfg);
    integrate->add_option("--c", ia.c, "rational parameter p/q");
    integrate->add_option("--t0", ia.t0, "initial time");
    integrate->add_option("--t1", ia.t1, "final time")->required();
    integrate->add_option("--q0", ia.q0, "initial q");
    integrate->add_option("--p0", ia.p0, "initial p");
    integrate->add_option("--rtol", ia.cfg.rtol, "relative tolerance")->check(CLI::PositiveNumber);
    integrate->add_option("--atol", ia.cfg.atol, "absolute tolerance")->check(CLI::PositiveNumber);
    integrate->add_option("--R", ia.cfg.R, "chart switch threshold");
    integrate->add_option("--h-max", ia.cfg.h_max, "largest step")->check(CLI::PositiveNumber);
    integrate->add_option("--events", ia.events, "write switch events here instead of stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    if (*verify) return run_verify(suite, json);
    if (*curves) return run_curves(regime, discrepancies, classes);
    if (*gamma) return run_gamma(n, full);
    if (*orbit) return run_orbit(orbit_n);
    if (*periods) return run_periods(period_c);
    if (*integrate) return run_integrate(ia);
    return kExitUsage;
}
