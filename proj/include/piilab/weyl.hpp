#pragma once

// Extended affine Weyl group of type A1^(1): action on the parameter c and the
// induced isometries of the Picard lattice.

#include <string>
#include <utility>
#include <vector>

#include "piilab/exact.hpp"
#include "piilab/lattice.hpp"

namespace piilab::weyl {

enum class Generator { i, j };  // i: c -> -c, j: c -> -1 - c

// Affine map c -> sign*c + shift.
struct ParamMap {
    int sign = 1;
    exact::Integer shift = 0;

    static ParamMap from_word(const std::vector<Generator>& word);
    exact::Rational operator()(const exact::Rational& c) const;
    ParamMap then(const ParamMap& next) const;  // next after this
    bool is_identity() const { return sign == 1 && shift == 0; }
    friend bool operator==(const ParamMap&, const ParamMap&) = default;
};

// Word applied right to left: param_apply({i, j}, c) = i(j(c)).
exact::Rational param_apply(const std::vector<Generator>& word, const exact::Rational& c);
std::vector<Generator> parse_word(const std::string& s);  // e.g. "ij"

struct LatticeIsometry {
    lattice::IntMatrix m;  // columns are images of S, f, E1..E8

    lattice::DivisorClass apply(const lattice::DivisorClass& d) const;
    LatticeIsometry compose(const LatticeIsometry& inner) const;  // this after inner
    bool preserves_form() const;
    static LatticeIsometry identity();
    friend bool operator==(const LatticeIsometry&, const LatticeIsometry&) = default;
};

// Basis {C1, C3, D0..D7} of the lattice used to define the isometries.
std::vector<lattice::DivisorClass> gamma_basis();

// Linear map sending gamma_basis()[k] to images[k]; NotIsometry if the result
// does not preserve the form.
LatticeIsometry isometry_from_images(const std::vector<lattice::DivisorClass>& images);

const LatticeIsometry& jstar();
const LatticeIsometry& istar();
// istar after jstar.
const LatticeIsometry& tplus_star();
// jstar after istar; not used by the orbit.
const LatticeIsometry& tplus_star_reversed();

lattice::DivisorClass gamma_full(int n);
// Coefficients of gamma_full(n) on (C1, C3) modulo the span of D0..D7.
std::pair<std::int64_t, std::int64_t> gamma_mod(int n);
// The same by iterating (a, b) -> (-b, a + 2b) from (-1, 2).
std::pair<std::int64_t, std::int64_t> gamma_mod_recurrence(int n);
bool distinctness(int n_max);

// Stated values for n = 3, 4, 5.
std::vector<std::pair<std::int64_t, std::int64_t>> stated_gamma_list();

}  // namespace piilab::weyl
