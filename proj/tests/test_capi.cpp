// Exercises the shared library through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "piilab/piilab.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    piilab_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("verify reports") {
    piilab_report* r = nullptr;
    REQUIRE(piilab_verify("lattice", &r) == PIILAB_OK);
    CHECK(piilab_report_size(r) > 10);
    CHECK(piilab_report_count(r, PIILAB_CHECK_FAIL) == 0);
    const char *id, *ref, *computed, *expected;
    piilab_check_status st;
    REQUIRE(piilab_report_check(r, 0, &id, &ref, &st, &computed, &expected) == PIILAB_OK);
    CHECK(std::strlen(id) > 0);
    CHECK(piilab_report_check(r, 100000, &id, &ref, &st, &computed, &expected) == PIILAB_ERR_INVALID_ARGUMENT);
    char* json = nullptr;
    REQUIRE(piilab_report_json(r, &json) == PIILAB_OK);
    CHECK(take(json).find("\"suite\": \"lattice\"") != std::string::npos);
    piilab_report_free(r);

    CHECK(piilab_verify("nonsense", &r) == PIILAB_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(piilab_last_error()) > 0);
    CHECK(piilab_verify("lattice", nullptr) == PIILAB_ERR_NULL);
}

TEST_CASE("all suites: only the documented discrepancies") {
    piilab_report* r = nullptr;
    REQUIRE(piilab_verify("all", &r) == PIILAB_OK);
    CHECK(piilab_report_count(r, PIILAB_CHECK_FAIL) == 0);
    CHECK(piilab_report_count(r, PIILAB_CHECK_KNOWN_DISCREPANCY) == 4);
    piilab_report_free(r);
}

TEST_CASE("curves and orbit") {
    char* csv = nullptr;
    REQUIRE(piilab_intersection_csv("generic", &csv) == PIILAB_OK);
    std::string s = take(csv);
    CHECK(s.rfind("class,", 0) == 0);
    CHECK(piilab_intersection_csv("c7", &csv) == PIILAB_ERR_INVALID_ARGUMENT);
    char* disc = nullptr;
    REQUIRE(piilab_discrepancy_json(&disc) == PIILAB_OK);
    CHECK(take(disc).find("C5") != std::string::npos);

    int64_t a = 0, b = 0;
    REQUIRE(piilab_gamma_mod(3, &a, &b) == PIILAB_OK);
    CHECK(a == -3);
    CHECK(b == 4);
    CHECK(piilab_gamma_mod(0, &a, &b) != PIILAB_OK);
    int64_t coeffs[10];
    REQUIRE(piilab_gamma_full(1, coeffs) == PIILAB_OK);
    CHECK(coeffs[0] == 1);  // C2 = S - f - E1
    CHECK(coeffs[1] == -1);
    CHECK(coeffs[2] == -1);
}

TEST_CASE("periods") {
    char *p1 = nullptr, *p2 = nullptr;
    REQUIRE(piilab_periods("2/3", &p1, &p2) == PIILAB_OK);
    CHECK(take(p1) == "2/3");
    CHECK(take(p2) == "-5/3");
    CHECK(piilab_periods("x", &p1, &p2) == PIILAB_ERR_PARSE);
}

TEST_CASE("integration") {
    piilab_integrator_config cfg;
    piilab_integrator_config_default(&cfg);
    CHECK(cfg.rtol == 1e-10);
    piilab_trajectory* tr = nullptr;
    REQUIRE(piilab_integrate("1/3", 0, 3, 1, 0, &cfg, &tr) == PIILAB_OK);
    CHECK(piilab_trajectory_size(tr) > 10);
    REQUIRE(piilab_trajectory_switch_count(tr) >= 1);
    piilab_switch sw;
    REQUIRE(piilab_trajectory_switch(tr, 0, &sw) == PIILAB_OK);
    CHECK(sw.from == PIILAB_W1);
    piilab_sample last;
    REQUIRE(piilab_trajectory_sample(tr, piilab_trajectory_size(tr) - 1, &last) == PIILAB_OK);
    CHECK(last.t == 3);
    CHECK(piilab_trajectory_sample(tr, piilab_trajectory_size(tr), &last) == PIILAB_ERR_INVALID_ARGUMENT);
    piilab_trajectory_free(tr);
    CHECK(std::string(piilab_chart_name(PIILAB_W12)) == "W12");

    cfg.rtol = -1;
    CHECK(piilab_integrate("0", 0, 1, 0, 0, &cfg, &tr) == PIILAB_ERR_INVALID_ARGUMENT);
    CHECK(piilab_integrate("0", 0, 1, 0, 1e10, nullptr, &tr) == PIILAB_ERR_NO_CHART);
}
