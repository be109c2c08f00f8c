#include "piilab/weyl.hpp"

#include <set>

#include "piilab/blowup.hpp"

namespace piilab::weyl {

using lattice::DivisorClass;
using lattice::kRank;

ParamMap ParamMap::from_word(const std::vector<Generator>& word) {
    ParamMap m;
    for (auto it = word.rbegin(); it != word.rend(); ++it)
        m = m.then(*it == Generator::i ? ParamMap{-1, 0} : ParamMap{-1, -1});
    return m;
}

exact::Rational ParamMap::operator()(const exact::Rational& c) const {
    return exact::Rational(sign) * c + exact::Rational(shift);
}

ParamMap ParamMap::then(const ParamMap& next) const {
    // next(this(c)) = ns*(s*c + k) + nk
    return {next.sign * sign, exact::Integer(next.sign * shift + next.shift)};
}

exact::Rational param_apply(const std::vector<Generator>& word, const exact::Rational& c) {
    return ParamMap::from_word(word)(c);
}

std::vector<Generator> parse_word(const std::string& s) {
    std::vector<Generator> w;
    for (char ch : s) {
        if (ch == 'i') w.push_back(Generator::i);
        else if (ch == 'j') w.push_back(Generator::j);
        else if (ch != ' ' && ch != ',')
            throw Error(ErrorCode::InvalidArgument, "word letters must be i or j");
    }
    return w;
}

DivisorClass LatticeIsometry::apply(const DivisorClass& d) const {
    DivisorClass out;
    for (std::size_t r = 0; r < kRank; ++r)
        for (std::size_t k = 0; k < kRank; ++k) out.coeffs[r] += m[r][k] * d.coeffs[k];
    return out;
}

LatticeIsometry LatticeIsometry::compose(const LatticeIsometry& inner) const {
    LatticeIsometry out{lattice::IntMatrix(kRank, std::vector<std::int64_t>(kRank, 0))};
    for (std::size_t r = 0; r < kRank; ++r)
        for (std::size_t c = 0; c < kRank; ++c)
            for (std::size_t k = 0; k < kRank; ++k) out.m[r][c] += m[r][k] * inner.m[k][c];
    return out;
}

bool LatticeIsometry::preserves_form() const {
    for (std::size_t a = 0; a < kRank; ++a)
        for (std::size_t b = 0; b < kRank; ++b)
            if (lattice::pair(apply(DivisorClass::basis(a)), apply(DivisorClass::basis(b))) !=
                lattice::gram_form()[a][b])
                return false;
    return true;
}

LatticeIsometry LatticeIsometry::identity() {
    LatticeIsometry out{lattice::IntMatrix(kRank, std::vector<std::int64_t>(kRank, 0))};
    for (std::size_t k = 0; k < kRank; ++k) out.m[k][k] = 1;
    return out;
}

std::vector<DivisorClass> gamma_basis() {
    static const std::vector<DivisorClass> basis = [] {
        auto reg = blowup::build_registry(blowup::Regime::Generic);
        std::vector<DivisorClass> b = {reg.get("C1"), reg.get("C3")};
        for (auto& d : lattice::D_all()) b.push_back(d);
        return b;
    }();
    return basis;
}

LatticeIsometry isometry_from_images(const std::vector<DivisorClass>& images) {
    auto basis = gamma_basis();
    if (images.size() != basis.size()) throw Error(ErrorCode::InvalidArgument, "need one image per basis class");
    LatticeIsometry out{lattice::IntMatrix(kRank, std::vector<std::int64_t>(kRank, 0))};
    for (std::size_t k = 0; k < kRank; ++k) {
        auto coeffs = lattice::express_in_basis(DivisorClass::basis(k), basis);
        DivisorClass col = lattice::combine(coeffs, images);
        for (std::size_t r = 0; r < kRank; ++r) out.m[r][k] = col.coeffs[r];
    }
    if (!out.preserves_form()) throw Error(ErrorCode::NotIsometry, "induced map does not preserve the form");
    return out;
}

const LatticeIsometry& jstar() {
    static const LatticeIsometry j = [] {
        auto reg = blowup::build_registry(blowup::Regime::Generic);
        std::vector<DivisorClass> images = {reg.get("C3"), reg.get("C1"), lattice::D(0)};
        for (int i = 1; i <= 7; ++i) images.push_back(lattice::D(8 - i));
        return isometry_from_images(images);
    }();
    return j;
}

const LatticeIsometry& istar() {
    static const LatticeIsometry i = [] {
        auto reg = blowup::build_registry(blowup::Regime::Generic);
        std::vector<DivisorClass> images = {reg.get("C2"), reg.get("C3")};
        for (auto& d : lattice::D_all()) images.push_back(d);
        return isometry_from_images(images);
    }();
    return i;
}

const LatticeIsometry& tplus_star() {
    static const LatticeIsometry t = istar().compose(jstar());
    return t;
}

const LatticeIsometry& tplus_star_reversed() {
    static const LatticeIsometry t = jstar().compose(istar());
    return t;
}

DivisorClass gamma_full(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "orbit index must be positive");
    DivisorClass g = DivisorClass::E(8);  // C3
    for (int k = 0; k < n; ++k) g = tplus_star().apply(g);
    return g;
}

std::pair<std::int64_t, std::int64_t> gamma_mod(int n) {
    auto coeffs = lattice::express_in_basis(gamma_full(n), gamma_basis());
    return {coeffs[0], coeffs[1]};
}

std::pair<std::int64_t, std::int64_t> gamma_mod_recurrence(int n) {
    if (n < 1) throw Error(ErrorCode::InvalidArgument, "orbit index must be positive");
    std::int64_t a = -1, b = 2;
    for (int k = 1; k < n; ++k) {
        std::int64_t na = -b, nb = a + 2 * b;
        a = na;
        b = nb;
    }
    return {a, b};
}

bool distinctness(int n_max) {
    std::set<std::array<std::int64_t, kRank>> seen;
    for (int n = 1; n <= n_max; ++n)
        if (!seen.insert(gamma_full(n).coeffs).second) return false;
    return true;
}

std::vector<std::pair<std::int64_t, std::int64_t>> stated_gamma_list() {
    return {{-6, 10}, {-20, 34}, {-34, 116}};
}

}  // namespace piilab::weyl
