#include <doctest.h>

#include "piilab/blowup.hpp"
#include "piilab/weyl.hpp"

using namespace piilab;
using namespace piilab::weyl;
using lattice::DivisorClass;
using lattice::pair;

TEST_SUITE("weyl") {

TEST_CASE("parameter action") {
    CHECK(param_apply({Generator::i}, exact::make_rational(3, 2)) == exact::make_rational(-3, 2));
    CHECK(param_apply({Generator::i, Generator::j}, exact::make_rational(1, 3)) == exact::make_rational(4, 3));
    CHECK(param_apply({}, exact::make_rational(5, 7)) == exact::make_rational(5, 7));
    CHECK(ParamMap::from_word(parse_word("ii")).is_identity());
    CHECK(ParamMap::from_word(parse_word("jj")).is_identity());
    // (i j)^n is c -> c + n, never the identity.
    for (int n = 1; n <= 20; ++n) {
        std::vector<Generator> w;
        for (int k = 0; k < n; ++k) {
            w.push_back(Generator::i);
            w.push_back(Generator::j);
        }
        CHECK(ParamMap::from_word(w).shift == n);
    }
    CHECK_THROWS_AS(parse_word("ik"), Error);
}

TEST_CASE("isometries") {
    auto id = LatticeIsometry::identity();
    CHECK(jstar().preserves_form());
    CHECK(istar().preserves_form());
    CHECK(jstar().compose(jstar()) == id);
    CHECK(istar().compose(istar()) == id);
    CHECK(jstar().apply(lattice::D(1)) == lattice::D(7));
    CHECK(jstar().apply(lattice::D(0)) == lattice::D(0));
    CHECK(jstar().apply(lattice::anticanonical()) == lattice::anticanonical());
    CHECK(istar().apply(lattice::anticanonical()) == lattice::anticanonical());
    for (auto& d : lattice::D_all()) CHECK(lattice::in_span(jstar().apply(d), lattice::D_all()));
}

TEST_CASE("istar twice on C1, by hand") {
    // C2 = -C1 + 2C3 + D0 - D1 + D3 + 2D4 + 2D5 + 2D6 + 2D7; istar fixes C3 and the D's,
    // so istar(C2) = -C2 + 2C3 + (D-part) = C1.
    auto reg = blowup::build_registry(blowup::Regime::Generic);
    DivisorClass dpart = lattice::combine({1, -1, 0, 1, 2, 2, 2, 2}, lattice::D_all());
    DivisorClass c2 = -reg.get("C1") + 2 * reg.get("C3") + dpart;
    CHECK(c2 == reg.get("C2"));
    DivisorClass manual = -c2 + 2 * reg.get("C3") + dpart;
    CHECK(manual == reg.get("C1"));
    CHECK(istar().apply(istar().apply(reg.get("C1"))) == reg.get("C1"));
    CHECK(istar().apply(reg.get("C1")) == reg.get("C2"));
}

TEST_CASE("Gamma orbit") {
    auto reg = blowup::build_registry(blowup::Regime::Generic);
    CHECK(gamma_full(1) == reg.get("C2"));
    CHECK(gamma_mod(1) == std::make_pair<std::int64_t, std::int64_t>(-1, 2));
    CHECK(gamma_mod(2) == std::make_pair<std::int64_t, std::int64_t>(-2, 3));
    CHECK(gamma_mod(3) == std::make_pair<std::int64_t, std::int64_t>(-3, 4));
    for (int n = 1; n <= 50; ++n) {
        DivisorClass g = gamma_full(n);
        CHECK(pair(g, g) == -1);
        CHECK(pair(g, lattice::anticanonical()) == 1);
        CHECK(gamma_mod(n) == std::make_pair<std::int64_t, std::int64_t>(-n, n + 1));
        CHECK(gamma_mod(n) == gamma_mod_recurrence(n));
    }
    CHECK(distinctness(2));
    CHECK(distinctness(50));
    CHECK_THROWS_AS(gamma_full(0), Error);
    auto stated = stated_gamma_list();
    for (int n = 3; n <= 5; ++n) CHECK(gamma_mod(n) != stated[n - 3]);
}

TEST_CASE("reversed factorisation differs but is still an isometry") {
    CHECK(tplus_star_reversed().preserves_form());
    CHECK_FALSE(tplus_star_reversed() == tplus_star());
}

TEST_CASE("non-isometric images are rejected") {
    auto basis = gamma_basis();
    auto images = basis;
    images[0] = basis[1];
    images[1] = basis[1];
    try {
        isometry_from_images(images);
        FAIL("expected NotIsometry");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotIsometry);
    }
}

}
