#include <doctest.h>

#include <random>

#include "piilab/lattice.hpp"

using namespace piilab;
using namespace piilab::lattice;

namespace {

// Hand-written pairing on (S, f, E1..E8).
std::int64_t pair_oracle(const DivisorClass& a, const DivisorClass& b) {
    std::int64_t s = 2 * a[0] * b[0] + a[0] * b[1] + a[1] * b[0];
    for (std::size_t k = 2; k < kRank; ++k) s -= a[k] * b[k];
    return s;
}

DivisorClass cls(std::initializer_list<std::int64_t> v) {
    DivisorClass d;
    std::size_t k = 0;
    for (auto x : v) d.coeffs[k++] = x;
    return d;
}

}  // namespace

TEST_SUITE("lattice") {

TEST_CASE("pair examples") {
    CHECK(pair(D(1), D(2)) == 1);
    CHECK(pair(anticanonical(), anticanonical()) == 0);
    DivisorClass C2 = cls({1, -1, -1}), C4 = cls({1, 2, -1, -1, -1, -1, -1, -1, -1, 0});
    CHECK(pair(C2, C4) == 2);
    CHECK(form_is_unimodular());
    CHECK(determinant(gram_form()) == -1);
}

TEST_CASE("Dynkin diagram of the boundary") {
    // Affine E7: chain D1 - ... - D7 with D0 attached to D4.
    IntMatrix expect(8, std::vector<std::int64_t>(8, 0));
    for (int i = 0; i < 8; ++i) expect[i][i] = -2;
    for (int i = 1; i < 7; ++i) expect[i][i + 1] = expect[i + 1][i] = 1;
    expect[0][4] = expect[4][0] = 1;
    CHECK(gram(D_all()) == expect);
    CHECK(minus_affine_e7_cartan() == expect);
    CHECK(gram({}).empty());
}

TEST_CASE("anticanonical class") {
    DivisorClass F = anticanonical();
    CHECK(F == combine({2, 1, 2, 3, 4, 3, 2, 1}, D_all()));
    CHECK(canonical() == -F);
    CHECK(canonical() == cls({-2, 0, 1, 1, 1, 1, 1, 1, 1, 1}));
    for (auto& d : D_all()) CHECK(pair(F, d) == 0);
}

TEST_CASE("orthogonal complements") {
    DivisorClass a = cls({1, -2}), b = cls({1, 2, -1, -1, -1, -1, -1, -1, -1, -1});  // C2-C1, C4-C3
    auto perp = ortho_complement(D_all());
    CHECK(perp.size() == 2);
    CHECK(sublattice_equal(perp, {a, b}));
    CHECK(gram({a, b}) == IntMatrix{{-2, 2}, {2, -2}});
    CHECK(sublattice_equal(ortho_complement({a, b}), D_all()));
    CHECK(ortho_complement(ortho_complement(D_all())).size() == 8);
    std::vector<DivisorClass> all;
    for (std::size_t k = 0; k < kRank; ++k) all.push_back(DivisorClass::basis(k));
    CHECK(ortho_complement(all).empty());
    CHECK_FALSE(sublattice_equal({2 * a}, {a}));
    CHECK(sublattice_equal({}, {}));
    // Saturation: the kernel of a non-primitive generator is still primitive.
    for (auto& v : ortho_complement({2 * DivisorClass::S()})) CHECK(pair(v, DivisorClass::S()) == 0);
}

TEST_CASE("express_in_basis") {
    std::vector<DivisorClass> basis = {cls({0, 1, -1}), cls({0, 0, 0, 0, 0, 0, 0, 0, 0, 1})};
    for (auto& d : D_all()) basis.push_back(d);
    auto co = express_in_basis(cls({1, -1, -1}), basis);
    CHECK(co == std::vector<std::int64_t>{-1, 2, 1, -1, 0, 1, 2, 2, 2, 2});
    std::vector<DivisorClass> std_basis;
    for (std::size_t k = 0; k < kRank; ++k) std_basis.push_back(DivisorClass::basis(k));
    CHECK(express_in_basis(DivisorClass::S(), std_basis) == std::vector<std::int64_t>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    try {
        std::vector<DivisorClass> doubled = std_basis;
        doubled[0] = 2 * doubled[0];
        express_in_basis(DivisorClass::S(), doubled);
        FAIL("expected NotInLattice");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInLattice);
    }
    try {
        std::vector<DivisorClass> singular = std_basis;
        singular[1] = singular[0];
        express_in_basis(DivisorClass::S(), singular);
        FAIL("expected Degenerate");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::Degenerate);
    }
}

TEST_CASE("Euler invariants") {
    auto e = euler_invariants();
    CHECK(e.K2 == pair_oracle(anticanonical(), anticanonical()));
    CHECK(e.K2 == 0);
    CHECK(e.c2 == 12);
    CHECK(e.chi_theta == -10);
    CHECK(e.h1_theta == 10);
    CHECK(e.h1_log == 2);
    CHECK(e.h1_log_plus == 1);
}

TEST_CASE("diagonal basis") {
    auto u = diagonalize_unimodular();
    auto g = transform_form(u);
    for (std::size_t i = 0; i < kRank; ++i)
        for (std::size_t j = 0; j < kRank; ++j) CHECK(g[i][j] == (i != j ? 0 : i == 0 ? 1 : -1));
    CHECK(abs(determinant(u)) == 1);
    CHECK(diagonalize_unimodular() == u);
}

TEST_CASE("Smith normal form") {
    BigMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
    Smith s = smith_normal_form(a);
    CHECK(s.rank == 3);
    CHECK(abs(s.D[0][0]) == 2);
    CHECK(abs(s.D[1][1]) == 2);
    CHECK(abs(s.D[2][2]) == 156);
    auto mul = [](const BigMatrix& x, const BigMatrix& y) {
        BigMatrix z(x.size(), std::vector<exact::Integer>(y[0].size(), 0));
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = 0; j < y[0].size(); ++j)
                for (std::size_t k = 0; k < y.size(); ++k) z[i][j] += x[i][k] * y[k][j];
        return z;
    };
    CHECK(mul(mul(s.U, a), s.V) == s.D);
}

TEST_CASE("registry and CSV") {
    NamedClassRegistry reg;
    reg.set("f", DivisorClass::f());
    reg.set("D0", D(0));
    CHECK(reg.entries().front().first == "D0");
    CHECK(reg.intersection_csv() == "class,D0,f\nD0,-2,1\nf,1,0\n");
    CHECK_THROWS_AS(reg.get("C9"), Error);
}

TEST_CASE("property: pairing against the hand-written form") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int k = 0; k < 1000; ++k) {
        DivisorClass a, b;
        for (std::size_t i = 0; i < kRank; ++i) {
            a.coeffs[i] = d(rng);
            b.coeffs[i] = d(rng);
        }
        CHECK(pair(a, b) == pair_oracle(a, b));
        CHECK(pair(a, b) == pair(b, a));
    }
}

TEST_CASE("property: express_in_basis round-trips") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<DivisorClass> basis = {cls({0, 1, -1}), cls({0, 0, 0, 0, 0, 0, 0, 0, 0, 1})};
    for (auto& x : D_all()) basis.push_back(x);
    for (int k = 0; k < 500; ++k) {
        DivisorClass a;
        for (auto& x : a.coeffs) x = d(rng);
        CHECK(combine(express_in_basis(a, basis), basis) == a);
    }
}

}
