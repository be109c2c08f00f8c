#include "piilab/piilab.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "piilab/blowup.hpp"
#include "piilab/flow.hpp"
#include "piilab/report.hpp"
#include "piilab/weyl.hpp"

struct piilab_report {
    piilab::report::Report r;
};

struct piilab_trajectory {
    piilab::flow::Trajectory tr;
    std::vector<std::optional<std::pair<double, double>>> w1;
};

namespace {

thread_local std::string g_last_error;

piilab_status fail(piilab_status s, const std::string& msg) {
    g_last_error = msg;
    return s;
}

template <class F>
piilab_status guarded(F&& body) {
    try {
        body();
        g_last_error.clear();
        return PIILAB_OK;
    } catch (const piilab::Error& e) {
        return fail(static_cast<piilab_status>(e.code()), e.what());
    } catch (const std::exception& e) {
        return fail(PIILAB_ERR_INTERNAL, e.what());
    }
}

char* dup(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (!out) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

piilab::flow::IntegratorConfig to_config(const piilab_integrator_config* c) {
    piilab::flow::IntegratorConfig cfg;
    if (c) cfg = {c->rtol, c->atol, c->R, c->h_max, c->h0, c->max_steps};
    return cfg;
}

}  // namespace

extern "C" {

const char* piilab_last_error(void) { return g_last_error.c_str(); }

const char* piilab_status_name(piilab_status s) {
    if (s == PIILAB_OK) return "Ok";
    if (s == PIILAB_ERR_NULL) return "NullArgument";
    return piilab::error_code_name(static_cast<piilab::ErrorCode>(s));
}

void piilab_string_free(char* s) { std::free(s); }

piilab_status piilab_verify(const char* suite, piilab_report** out) {
    if (!suite || !out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] { *out = new piilab_report{piilab::report::run_suite(suite)}; });
}

void piilab_report_free(piilab_report* r) { delete r; }

size_t piilab_report_size(const piilab_report* r) { return r ? r->r.checks.size() : 0; }

size_t piilab_report_count(const piilab_report* r, piilab_check_status s) {
    if (!r) return 0;
    return r->r.count(static_cast<piilab::report::Status>(s));
}

piilab_status piilab_report_check(const piilab_report* r, size_t i, const char** id, const char** paper_ref,
                                  piilab_check_status* status, const char** computed, const char** expected) {
    if (!r) return fail(PIILAB_ERR_NULL, "null report");
    if (i >= r->r.checks.size()) return fail(PIILAB_ERR_INVALID_ARGUMENT, "check index out of range");
    const auto& c = r->r.checks[i];
    if (id) *id = c.id.c_str();
    if (paper_ref) *paper_ref = c.paper_ref.c_str();
    if (status) *status = static_cast<piilab_check_status>(c.status);
    if (computed) *computed = c.computed.c_str();
    if (expected) *expected = c.expected.c_str();
    return PIILAB_OK;
}

piilab_status piilab_report_json(const piilab_report* r, char** out) {
    if (!r || !out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] { *out = dup(r->r.to_json()); });
}

piilab_status piilab_report_text(const piilab_report* r, char** out) {
    if (!r || !out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] { *out = dup(r->r.to_text()); });
}

piilab_status piilab_intersection_csv(const char* regime, char** out) {
    if (!regime || !out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        auto reg = piilab::blowup::build_registry(piilab::blowup::parse_regime(regime));
        *out = dup(reg.intersection_csv());
    });
}

piilab_status piilab_class_table(const char* regime, char** out) {
    if (!regime || !out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        auto reg = piilab::blowup::build_registry(piilab::blowup::parse_regime(regime));
        std::ostringstream s;
        for (auto& [name, cls] : reg.entries()) s << name << "," << cls.to_string() << "\n";
        *out = dup(s.str());
    });
}

piilab_status piilab_discrepancy_json(char** out) {
    if (!out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        *out = dup(piilab::blowup::discrepancy_json(piilab::blowup::verify_intersection_table()) + "\n");
    });
}

piilab_status piilab_gamma_mod(int n, int64_t* a, int64_t* b) {
    if (!a || !b) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        auto [x, y] = piilab::weyl::gamma_mod(n);
        *a = x;
        *b = y;
    });
}

piilab_status piilab_gamma_full(int n, int64_t coeffs[10]) {
    if (!coeffs) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        auto g = piilab::weyl::gamma_full(n);
        for (std::size_t k = 0; k < piilab::lattice::kRank; ++k) coeffs[k] = g.coeffs[k];
    });
}

piilab_status piilab_periods(const char* c, char** c2_minus_c1, char** c4_minus_c3) {
    if (!c || !c2_minus_c1 || !c4_minus_c3) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        auto value = piilab::exact::parse_rational(c);
        std::string a = piilab::exact::to_string(piilab::atlas::period_c2_minus_c1(value));
        std::string b = piilab::exact::to_string(piilab::atlas::period_c4_minus_c3(value));
        *c2_minus_c1 = dup(a);
        *c4_minus_c3 = dup(b);
    });
}

void piilab_integrator_config_default(piilab_integrator_config* cfg) {
    if (!cfg) return;
    piilab::flow::IntegratorConfig d;
    *cfg = {d.rtol, d.atol, d.R, d.h_max, d.h0, d.max_steps};
}

piilab_status piilab_integrate(const char* c, double t0, double t1, double q0, double p0,
                               const piilab_integrator_config* cfg, piilab_trajectory** out) {
    if (!c || !out) return fail(PIILAB_ERR_NULL, "null argument");
    return guarded([&] {
        double cv = piilab::exact::parse_rational(c).get_d();
        auto tr = piilab::flow::integrate(cv, {piilab::atlas::ChartId::W1, q0, p0, t0}, t1, to_config(cfg));
        auto* h = new piilab_trajectory{std::move(tr), {}};
        for (auto& s : h->tr.samples) h->w1.push_back(piilab::flow::to_w1(s, cv));
        *out = h;
    });
}

void piilab_trajectory_free(piilab_trajectory* tr) { delete tr; }

size_t piilab_trajectory_size(const piilab_trajectory* tr) { return tr ? tr->tr.samples.size() : 0; }

piilab_status piilab_trajectory_sample(const piilab_trajectory* tr, size_t i, piilab_sample* out) {
    if (!tr || !out) return fail(PIILAB_ERR_NULL, "null argument");
    if (i >= tr->tr.samples.size()) return fail(PIILAB_ERR_INVALID_ARGUMENT, "sample index out of range");
    const auto& s = tr->tr.samples[i];
    const auto& w = tr->w1[i];
    *out = {s.t, static_cast<piilab_chart>(s.chart), s.y, s.z, w.has_value() ? 1 : 0, w ? w->first : 0.0,
            w ? w->second : 0.0, tr->tr.switched[i] ? 1 : 0};
    return PIILAB_OK;
}

size_t piilab_trajectory_switch_count(const piilab_trajectory* tr) { return tr ? tr->tr.switches.size() : 0; }

piilab_status piilab_trajectory_switch(const piilab_trajectory* tr, size_t i, piilab_switch* out) {
    if (!tr || !out) return fail(PIILAB_ERR_NULL, "null argument");
    if (i >= tr->tr.switches.size()) return fail(PIILAB_ERR_INVALID_ARGUMENT, "switch index out of range");
    const auto& e = tr->tr.switches[i];
    *out = {e.t, static_cast<piilab_chart>(e.from), static_cast<piilab_chart>(e.to), e.y_before, e.z_before,
            e.y_after, e.z_after};
    return PIILAB_OK;
}

const char* piilab_chart_name(piilab_chart c) {
    if (c < PIILAB_W1 || c > PIILAB_W12) return "?";
    return piilab::atlas::chart_name(static_cast<piilab::atlas::ChartId>(c));
}

}  // extern "C"
