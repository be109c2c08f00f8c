#include <doctest.h>

#include <cmath>
#include <random>

#include "piilab/flow.hpp"

using namespace piilab;
using namespace piilab::flow;
using exact::Var;

namespace {

CompiledRational compile(const exact::RationalFunction& f, Var y, Var z) {
    return {CompiledPolynomial(f.num(), y, z), CompiledPolynomial(f.den(), y, z)};
}

}  // namespace

TEST_SUITE("flow") {

TEST_CASE("compiled polynomial evaluation") {
    CompiledPolynomial p(exact::parse_poly("1/2*z1^2 + y1^2*z1 + t*z1/2 + c*y1"), Var::y1, Var::z1);
    CHECK(p(2, 3, 4, 5) == doctest::Approx(4.5 + 12 + 6 + 10));
    CompiledRational r = compile(exact::parse("1/y1"), Var::y1, Var::z1);
    CHECK_FALSE(r(0, 1, 0, 0).has_value());
    CHECK(*r(4, 1, 0, 0) == 0.25);
}

TEST_CASE("property: the vector fields are related by the chain rule") {
    // d/dt of the target coordinates along the W1 field, with partial derivatives taken exactly.
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> u(-2, 2);
    for (ChartId to : {ChartId::W3, ChartId::W12}) {
        auto tr = atlas::transition(ChartId::W1, to);
        auto [ty, tz] = atlas::chart_vars(to);
        (void)ty;
        (void)tz;
        CompiledRational Y = compile(tr.y, Var::y1, Var::z1), Z = compile(tr.z, Var::y1, Var::z1);
        CompiledRational Yy = compile(exact::partial(tr.y, Var::y1), Var::y1, Var::z1),
                         Yz = compile(exact::partial(tr.y, Var::z1), Var::y1, Var::z1),
                         Yt = compile(exact::partial(tr.y, Var::t), Var::y1, Var::z1),
                         Zy = compile(exact::partial(tr.z, Var::y1), Var::y1, Var::z1),
                         Zz = compile(exact::partial(tr.z, Var::z1), Var::y1, Var::z1),
                         Zt = compile(exact::partial(tr.z, Var::t), Var::y1, Var::z1);
        int tested = 0;
        while (tested < 100) {
            double y = u(rng), z = u(rng), t = u(rng), c = u(rng);
            auto Yv = Y(y, z, t, c), Zv = Z(y, z, t, c);
            if (!Yv || !Zv || std::abs(y) < 0.2 || std::abs(*Yv) > 1e3 || std::abs(*Zv) > 1e3) continue;
            auto v = vector_field(ChartId::W1, y, z, t, c);
            double dY = *Yy(y, z, t, c) * v[0] + *Yz(y, z, t, c) * v[1] + *Yt(y, z, t, c);
            double dZ = *Zy(y, z, t, c) * v[0] + *Zz(y, z, t, c) * v[1] + *Zt(y, z, t, c);
            auto w = vector_field(to, *Yv, *Zv, t, c);
            double scale = 1 + std::abs(dY) + std::abs(dZ);
            CHECK(std::abs(w[0] - dY) / scale < 1e-12);
            CHECK(std::abs(w[1] - dZ) / scale < 1e-12);
            ++tested;
        }
    }
}

TEST_CASE("best chart") {
    CHECK(best_chart({ChartId::W1, 0.1, 0.2, 0}, 0.3) == ChartId::W1);
    ChartId far = best_chart({ChartId::W1, 100, 0, 0}, 0.3);
    CHECK(far != ChartId::W1);
    auto p = map_point(ChartId::W1, far, 100, 0, 0, 0.3);
    REQUIRE(p);
    CHECK(std::max(std::abs(p->first), std::abs(p->second)) < 100);
    try {
        best_chart({ChartId::W1, 0, 1e10, 0}, 0.3);
        FAIL("expected NoChart");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoChart);
    }
    CHECK_THROWS_AS(integrate(0.3, {ChartId::W1, 0, 1e10, 0}, 1), Error);
}

TEST_CASE("invalid configuration") {
    IntegratorConfig cfg;
    cfg.rtol = 0;
    CHECK_THROWS_AS(integrate(0, {ChartId::W1, 0, 0, 0}, 1, cfg), Error);
    cfg = {};
    cfg.R = 1;
    CHECK_THROWS_AS(integrate(0, {ChartId::W1, 0, 0, 0}, 1, cfg), Error);
    CHECK_THROWS_AS(integrate(0, {ChartId::W1, NAN, 0, 0}, 1), Error);
}

TEST_CASE("invariant loci") {
    auto tr = integrate(0, {ChartId::W1, 0.4, 0, 0}, 2);
    CHECK(max_drift(tr, exact::parse_poly("p")) < 1e-8);
    auto tr2 = integrate(-1, {ChartId::W1, 0.4, -2 * 0.16, 0}, 2);
    CHECK(max_drift(tr2, exact::parse_poly("p + 2*q^2 + t")) < 1e-8);
    auto rc = riccati_compare(0, 2, -0.5);
    CHECK(rc.max_q_deviation < 1e-8);
    CHECK(rc.max_abs_p < 1e-8);
}

TEST_CASE("tolerance convergence") {
    IntegratorConfig ref;
    ref.rtol = 1e-13;
    ref.atol = 1e-15;
    FlowState s0{ChartId::W1, 0.3, -1, 0};
    auto exact_end = to_w1(integrate(1.0 / 3, s0, 2, ref).back(), 1.0 / 3);
    REQUIRE(exact_end);
    double prev = 1e300;
    for (double rtol : {1e-5, 1e-7, 1e-9}) {
        IntegratorConfig cfg;
        cfg.rtol = rtol;
        cfg.atol = rtol * 1e-2;
        auto end = to_w1(integrate(1.0 / 3, s0, 2, cfg).back(), 1.0 / 3);
        REQUIRE(end);
        double err = std::hypot(end->first - exact_end->first, end->second - exact_end->second);
        CHECK(err < prev);
        CHECK(err < 1e3 * rtol);
        prev = err;
    }
}

TEST_CASE("reversibility and Backlund maps") {
    CHECK(reversibility_error(1.0 / 3, {ChartId::W1, 0.3, -1, 0}, 2) < 1e-6);
    CHECK(backlund_numeric_check(BacklundMap::TPlus, 1.0 / 3, 0.3, -1, 0, 2) < 1e-6);
    CHECK(backlund_numeric_check(BacklundMap::J, 1.0 / 3, 0.3, -1, 0, 2) < 1e-6);
    CHECK(backlund_numeric_check(BacklundMap::I, 1.0 / 3, 0.3, -1, 0, 2) < 1e-6);
    CHECK(backlund_numeric_check(BacklundMap::I, 0, 0.3, -1, 0, 2) == 0);
    auto j = apply_backlund(BacklundMap::J, 0.5, 0.25, 0, 0.2);
    REQUIRE(j);
    CHECK((*j)[2] == doctest::Approx(-1.2));
}

TEST_CASE("pole crossing switches charts continuously") {
    const double c = 1.0 / 3;
    auto tr = integrate(c, {ChartId::W1, 1, 0, 0}, 3);
    REQUIRE(tr.switches.size() >= 2);
    CHECK(tr.switches.front().from == ChartId::W1);
    CHECK(tr.switches.front().t == doctest::Approx(0.752).epsilon(0.01));
    for (auto& ev : tr.switches) {
        auto img = map_point(ev.from, ev.to, ev.y_before, ev.z_before, ev.t, c);
        REQUIRE(img);
        CHECK(img->first == ev.y_after);
        CHECK(img->second == ev.z_after);
    }
    CHECK(tr.back().chart == ChartId::W1);
    CHECK(tr.samples.size() == tr.switched.size());
}

}
