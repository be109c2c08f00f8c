#include <doctest.h>

#include <chrono>
#include <map>

#include "piilab/blowup.hpp"

using namespace piilab;
using namespace piilab::blowup;
using exact::parse_poly;
using exact::Polynomial;
using exact::RationalFunction;
using exact::Var;
using lattice::DivisorClass;
using lattice::pair;

namespace {

Multiplicities ones(int k) {
    Multiplicities m{};
    for (int i = 0; i < k; ++i) m[i] = 1;
    return m;
}

// Multiplicity vectors of a smooth rational curve through infinitely near
// points: non-increasing, with the given square drop and K-degree.
std::vector<Multiplicities> admissible(int sum, int sum_sq) {
    std::vector<Multiplicities> out;
    for (int code = 0; code < 6561; ++code) {  // 3^8
        Multiplicities m{};
        int c = code, s = 0, s2 = 0;
        bool mono = true;
        for (int i = 0; i < 8; ++i) {
            m[i] = c % 3;
            c /= 3;
            s += m[i];
            s2 += m[i] * m[i];
            if (i && m[i] > m[i - 1]) mono = false;
        }
        if (mono && s == sum && s2 == sum_sq) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("chain shape") {
    const auto& steps = chain();
    REQUIRE(steps.size() == 8);
    CHECK(steps[4].z_from == Var::v8);
    CHECK(steps[4].centre_z == RationalFunction(2));
    CHECK(steps[6].centre_z == exact::V(Var::t));
    CHECK(steps[7].centre_z == exact::parse("2*c + 1"));
}

TEST_CASE("C6 in W4 takes the stated form") {
    Polynomial f = transport(curve_C6().poly, Z0Chart::W1, Z0Chart::W4, exact::V(Var::c));
    Polynomial stated = parse_poly("2*z4 - y4^4 + t*y4^2*z4 + (2*c + 1)*y4^3*z4");
    CHECK((f == stated || f == -stated));
}

TEST_CASE("multiplicities") {
    CHECK(multiplicities(curve_C6(), Regime::Generic) == ones(8));
    CHECK(multiplicities(curve_C4(), Regime::Generic) == ones(7));
    CHECK(multiplicities(curve_C1(), Regime::Generic) == ones(1));
    CHECK(multiplicities(curve_C2prime(), Regime::CZero) == Multiplicities{});
    CHECK(multiplicities(curve_C4prime(), Regime::CMinusOne) == ones(8));
}

TEST_CASE("S: multiplicities agree with the numerical constraints") {
    // Strict transform of S is D0 with D0^2 = -2 and K.D0 = 0: sum m^2 = 4 and sum m = 4.
    auto cand = admissible(4, 4);
    REQUIRE(cand.size() == 1);
    CHECK(multiplicities(curve_S(), Regime::Generic) == cand.front());
    CHECK(multiplicities(curve_S(), Regime::CZero) == cand.front());
}

TEST_CASE("C6: multiplicities agree with the numerical constraints") {
    // (S + 3f)^2 = 8 and K.(S + 3f) = -10; a smooth rational curve with C^2 = 0
    // forces sum m^2 = 8 and, by adjunction, sum m = 8.
    auto cand = admissible(8, 8);
    REQUIRE(cand.size() == 1);
    CHECK(multiplicities(curve_C6(), Regime::Generic) == cand.front());
}

TEST_CASE("base classes") {
    CHECK(base_class(curve_C2(), Regime::Generic) == std::make_pair<std::int64_t, std::int64_t>(1, -1));
    CHECK(base_class(curve_C4(), Regime::Generic) == std::make_pair<std::int64_t, std::int64_t>(1, 2));
    CHECK(base_class(curve_C6(), Regime::Generic) == std::make_pair<std::int64_t, std::int64_t>(1, 3));
    CHECK(base_class(curve_C1(), Regime::Generic) == std::make_pair<std::int64_t, std::int64_t>(0, 1));
    CHECK(base_class(curve_C5(), Regime::Generic) == std::make_pair<std::int64_t, std::int64_t>(1, -1));
    CHECK(base_class(curve_S(), Regime::Generic) == std::make_pair<std::int64_t, std::int64_t>(1, 0));
    auto [a, b] = base_class(curve_C4(), Regime::Generic);
    DivisorClass c4 = a * DivisorClass::S() + b * DivisorClass::f();
    CHECK(pair(c4, c4) == 6);
}

TEST_CASE("C6^0.S = 4 at the W4 origin plus 1 at the W2 origin") {
    Polynomial f4 = transport(curve_C6().poly, Z0Chart::W1, Z0Chart::W4, exact::V(Var::c));
    CHECK(local_intersection_at_origin(f4, parse_poly("z4"), Var::y4, Var::z4) == 4);
    Polynomial f2 = transport(curve_C6().poly, Z0Chart::W1, Z0Chart::W2, exact::V(Var::c));
    CHECK(local_intersection_at_origin(f2, parse_poly("z2"), Var::y2, Var::z2) == 1);
    auto [a, b] = base_class(curve_C6(), Regime::Generic);
    CHECK(pair(a * DivisorClass::S() + b * DivisorClass::f(), DivisorClass::S()) == 5);
}

TEST_CASE("local intersection against the order product for transverse branches") {
    Polynomial c6 = transport(curve_C6().poly, Z0Chart::W1, Z0Chart::W4, exact::V(Var::c));
    Polynomial c2 = transport(curve_C2().poly, Z0Chart::W3, Z0Chart::W4, exact::V(Var::c));
    int local = local_intersection_at_origin(c6, c2, Var::y4, Var::z4);
    CHECK(local == 1);
    CHECK(local >= origin_order(c6, Var::y4, Var::z4) * origin_order(c2, Var::y4, Var::z4));
}

TEST_CASE("total classes") {
    CHECK(total_class(curve_C2(), Regime::Generic) == DivisorClass::S() - DivisorClass::f() - DivisorClass::E(1));
    DivisorClass c6 = total_class(curve_C6(), Regime::Generic);
    CHECK(pair(c6, c6) == 0);
    CHECK(total_class(curve_C2prime(), Regime::CZero) == DivisorClass::S() - 2 * DivisorClass::f());
}

TEST_CASE("unusable specialisations are refused") {
    try {
        multiplicities(curve_C2(), Regime::CZero);
        FAIL("expected RegimeSplit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RegimeSplit);
    }
    try {
        multiplicities(curve_C6(), Regime::CMinusOne);
        FAIL("expected RegimeSplit");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::RegimeSplit);
    }
    try {
        multiplicities({"sq", Z0Chart::W1, parse_poly("(y1*z1 - c)^2")}, Regime::Generic);
        FAIL("expected NotSquarefree");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotSquarefree);
    }
    CHECK_THROWS_AS(parse_regime("c1"), Error);
}

TEST_CASE("splitting identities") {
    auto z = build_registry(Regime::CZero);
    auto m = build_registry(Regime::CMinusOne);
    auto g = build_registry(Regime::Generic);
    CHECK(z.get("C2") == z.get("C2prime") + z.get("C1"));
    CHECK(z.get("C2") == g.get("C2"));
    CHECK(m.get("C4") == m.get("C3") + m.get("C4prime"));
    CHECK(m.get("C6") == total_class(curve_fibre_y1(), Regime::CMinusOne) + m.get("C4prime"));
    CHECK(m.get("C6") == g.get("C6"));
    CHECK(z.get("C5") == g.get("C5"));
}

TEST_CASE("A1 pair and basis property") {
    auto g = build_registry(Regime::Generic);
    DivisorClass a = g.get("C2") - g.get("C1"), b = g.get("C4") - g.get("C3");
    CHECK(pair(a, b) == 2);
    CHECK(pair(a, a) == -2);
    CHECK(pair(b, b) == -2);
    std::vector<DivisorClass> basis = {g.get("C1"), g.get("C3")};
    for (auto& d : lattice::D_all()) basis.push_back(d);
    CHECK(abs(lattice::determinant(lattice::gram(basis))) == 1);
}

TEST_CASE("dual graph with the four sections") {
    auto g = build_registry(Regime::Generic);
    // C1, C2 meet D1; C3, C4 meet D7; each once.
    const std::map<std::string, int> meets = {{"C1", 1}, {"C2", 1}, {"C3", 7}, {"C4", 7}};
    for (auto& [name, idx] : meets)
        for (int i = 0; i <= 7; ++i) CHECK(pair(g.get(name), lattice::D(i)) == (i == idx ? 1 : 0));
}

TEST_CASE("stated table: only the two allowlisted entries disagree") {
    auto t0 = std::chrono::steady_clock::now();
    auto results = verify_intersection_table();
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 5.0);
    std::vector<std::string> off;
    for (auto& r : results) {
        CHECK(r.status != ClaimResult::Status::Mismatch);
        if (r.status == ClaimResult::Status::KnownDiscrepancy) {
            off.push_back(r.claim.a + "." + r.claim.b);
            CHECK(r.computed == 0);
            CHECK(r.claim.stated == 1);
        }
    }
    CHECK(off == std::vector<std::string>{"C5.D1", "C6.D7"});
    // Oracle for C6.D7 from the classes: (S + 3f - sum E).(E7 - E8) = 1 - 1.
    DivisorClass c6 = DivisorClass::S() + 3 * DivisorClass::f();
    for (int i = 1; i <= 8; ++i) c6 -= DivisorClass::E(i);
    CHECK(pair(c6, DivisorClass::E(7) - DivisorClass::E(8)) == 0);
}

TEST_CASE("discrepancy JSON") {
    std::string js = discrepancy_json(verify_intersection_table());
    CHECK(js.find("(C5.D1)") != std::string::npos);
    CHECK(js.find("(C6.D7)") != std::string::npos);
    CHECK(js.find("\"computed\": 0") != std::string::npos);
    CHECK(js.find("\"paper_value\": 1") != std::string::npos);
}

}
