#include "piilab/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace piilab::lattice {

using exact::Integer;
using exact::Rational;

namespace {

const char* const kBasisNames[kRank] = {"S", "f", "E1", "E2", "E3", "E4", "E5", "E6", "E7", "E8"};

IntMatrix build_form() {
    IntMatrix g(kRank, std::vector<std::int64_t>(kRank, 0));
    g[0][0] = 2;
    g[0][1] = g[1][0] = 1;
    for (std::size_t i = 2; i < kRank; ++i) g[i][i] = -1;
    return g;
}

BigMatrix identity(std::size_t n) {
    BigMatrix m(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

BigMatrix to_big(const IntMatrix& m) {
    BigMatrix out;
    for (auto& row : m) {
        std::vector<Integer> r;
        for (auto x : row) r.emplace_back(static_cast<long>(x));
        out.push_back(std::move(r));
    }
    return out;
}

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw Error(ErrorCode::Internal, "integer overflow in lattice computation");
    return z.get_si();
}

}  // namespace

DivisorClass DivisorClass::basis(std::size_t k) {
    DivisorClass d;
    d.coeffs[k] = 1;
    return d;
}
DivisorClass DivisorClass::S() { return basis(0); }
DivisorClass DivisorClass::f() { return basis(1); }
DivisorClass DivisorClass::E(int i) {
    if (i < 1 || i > 8) throw Error(ErrorCode::InvalidArgument, "E index out of range");
    return basis(static_cast<std::size_t>(i + 1));
}

DivisorClass operator+(DivisorClass a, const DivisorClass& b) {
    for (std::size_t k = 0; k < kRank; ++k) a.coeffs[k] += b.coeffs[k];
    return a;
}
DivisorClass operator-(DivisorClass a, const DivisorClass& b) {
    for (std::size_t k = 0; k < kRank; ++k) a.coeffs[k] -= b.coeffs[k];
    return a;
}
DivisorClass operator-(DivisorClass a) {
    for (auto& x : a.coeffs) x = -x;
    return a;
}
DivisorClass operator*(std::int64_t k, DivisorClass a) {
    for (auto& x : a.coeffs) x *= k;
    return a;
}

std::string DivisorClass::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < kRank; ++k) {
        auto c = coeffs[k];
        if (!c) continue;
        if (first) {
            if (c < 0) out << "-";
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (c != 1 && c != -1) out << (c < 0 ? -c : c);
        out << kBasisNames[k];
    }
    return first ? "0" : out.str();
}

std::string DivisorClass::vector_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < kRank; ++k) out << (k ? ", " : "") << coeffs[k];
    out << ")";
    return out.str();
}

const IntMatrix& gram_form() {
    static const IntMatrix g = build_form();
    return g;
}

std::int64_t pair(const DivisorClass& a, const DivisorClass& b) {
    const auto& g = gram_form();
    std::int64_t s = 0;
    for (std::size_t i = 0; i < kRank; ++i) {
        if (!a.coeffs[i]) continue;
        for (std::size_t j = 0; j < kRank; ++j) s += a.coeffs[i] * g[i][j] * b.coeffs[j];
    }
    return s;
}

IntMatrix gram(const std::vector<DivisorClass>& classes) {
    IntMatrix m(classes.size(), std::vector<std::int64_t>(classes.size()));
    for (std::size_t i = 0; i < classes.size(); ++i)
        for (std::size_t j = 0; j < classes.size(); ++j) m[i][j] = pair(classes[i], classes[j]);
    return m;
}

Integer determinant(const IntMatrix& src) {
    std::size_t n = src.size();
    if (n == 0) return 1;
    BigMatrix m = to_big(src);
    Integer prev = 1;
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && m[s][k] == 0) ++s;
            if (s == n) return 0;
            std::swap(m[k], m[s]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return negate ? Integer(-m[n - 1][n - 1]) : m[n - 1][n - 1];
}

bool form_is_unimodular() {
    Integer d = determinant(gram_form());
    return d == 1 || d == -1;
}

DivisorClass D(int i) {
    if (i == 0)
        return DivisorClass::S() - DivisorClass::E(1) - DivisorClass::E(2) - DivisorClass::E(3) - DivisorClass::E(4);
    if (i >= 1 && i <= 7) return DivisorClass::E(i) - DivisorClass::E(i + 1);
    throw Error(ErrorCode::InvalidArgument, "D index out of range");
}

std::vector<DivisorClass> D_all() {
    std::vector<DivisorClass> out;
    for (int i = 0; i <= 7; ++i) out.push_back(D(i));
    return out;
}

DivisorClass canonical() {
    DivisorClass k = -2 * DivisorClass::S();
    for (int i = 1; i <= 8; ++i) k += DivisorClass::E(i);
    return k;
}

DivisorClass anticanonical() {
    static const std::int64_t mult[8] = {2, 1, 2, 3, 4, 3, 2, 1};
    DivisorClass f;
    for (int i = 0; i <= 7; ++i) f += mult[i] * D(i);
    return f;
}

IntMatrix minus_affine_e7_cartan() {
    IntMatrix m(8, std::vector<std::int64_t>(8, 0));
    for (int i = 0; i < 8; ++i) m[i][i] = -2;
    for (int i = 1; i < 7; ++i) m[i][i + 1] = m[i + 1][i] = 1;
    m[0][4] = m[4][0] = 1;
    return m;
}

Smith smith_normal_form(const BigMatrix& a) {
    std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    Smith s{identity(rows), a, identity(cols), 0};
    auto& d = s.D;
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {  // row dst -= q * row src
        for (std::size_t j = 0; j < cols; ++j) d[dst][j] -= q * d[src][j];
        for (std::size_t j = 0; j < rows; ++j) s.U[dst][j] -= q * s.U[src][j];
    };
    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t i = 0; i < rows; ++i) d[i][dst] -= q * d[i][src];
        for (std::size_t i = 0; i < cols; ++i) s.V[i][dst] -= q * s.V[i][src];
    };
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        std::swap(d[i], d[j]);
        std::swap(s.U[i], s.U[j]);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        for (auto& r : d) std::swap(r[i], r[j]);
        for (auto& r : s.V) std::swap(r[i], r[j]);
    };

    std::size_t k = 0;
    for (; k < std::min(rows, cols); ++k) {
        while (true) {
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = k; i < rows; ++i)
                for (std::size_t j = k; j < cols; ++j)
                    if (d[i][j] != 0 && (pi == rows || abs(d[i][j]) < abs(d[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) {
                s.rank = k;
                return s;
            }
            swap_rows(k, pi);
            swap_cols(k, pj);
            bool clean = true;
            for (std::size_t i = k + 1; i < rows; ++i) {
                if (d[i][k] == 0) continue;
                Integer q = d[i][k] / d[k][k];
                row_axpy(i, k, q);
                if (d[i][k] != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < cols; ++j) {
                if (d[k][j] == 0) continue;
                Integer q = d[k][j] / d[k][k];
                col_axpy(j, k, q);
                if (d[k][j] != 0) clean = false;
            }
            if (!clean) continue;
            // Divisibility of the remaining block by the pivot.
            bool divisible = true;
            for (std::size_t i = k + 1; i < rows && divisible; ++i)
                for (std::size_t j = k + 1; j < cols; ++j)
                    if (d[i][j] % d[k][k] != 0) {
                        row_axpy(k, i, Integer(-1));
                        divisible = false;
                        break;
                    }
            if (divisible) break;
        }
        if (d[k][k] < 0) {
            for (auto& x : d[k]) x = -x;
            for (auto& x : s.U[k]) x = -x;
        }
    }
    s.rank = k;
    return s;
}

std::vector<DivisorClass> ortho_complement(const std::vector<DivisorClass>& generators) {
    if (generators.empty()) {
        std::vector<DivisorClass> all;
        for (std::size_t k = 0; k < kRank; ++k) all.push_back(DivisorClass::basis(k));
        return all;
    }
    // Row g of A is the linear form x -> pair(g, x).
    BigMatrix a;
    const auto& g = gram_form();
    for (auto& gen : generators) {
        std::vector<Integer> row(kRank, 0);
        for (std::size_t j = 0; j < kRank; ++j) {
            std::int64_t s = 0;
            for (std::size_t i = 0; i < kRank; ++i) s += gen.coeffs[i] * g[i][j];
            row[j] = static_cast<long>(s);
        }
        a.push_back(std::move(row));
    }
    Smith snf = smith_normal_form(a);
    std::vector<DivisorClass> out;
    for (std::size_t j = snf.rank; j < kRank; ++j) {
        DivisorClass v;
        for (std::size_t i = 0; i < kRank; ++i) v.coeffs[i] = to_int64(snf.V[i][j]);
        out.push_back(v);
    }
    return out;
}

bool in_span(const DivisorClass& v, const std::vector<DivisorClass>& generators) {
    if (generators.empty()) return v == DivisorClass{};
    BigMatrix b(kRank, std::vector<Integer>(generators.size()));
    for (std::size_t j = 0; j < generators.size(); ++j)
        for (std::size_t i = 0; i < kRank; ++i) b[i][j] = static_cast<long>(generators[j].coeffs[i]);
    Smith snf = smith_normal_form(b);
    for (std::size_t i = 0; i < kRank; ++i) {
        Integer w = 0;
        for (std::size_t k = 0; k < kRank; ++k) w += snf.U[i][k] * static_cast<long>(v.coeffs[k]);
        if (i < snf.rank) {
            if (w % snf.D[i][i] != 0) return false;
        } else if (w != 0) {
            return false;
        }
    }
    return true;
}

bool sublattice_equal(const std::vector<DivisorClass>& a, const std::vector<DivisorClass>& b) {
    for (auto& v : a)
        if (!in_span(v, b)) return false;
    for (auto& v : b)
        if (!in_span(v, a)) return false;
    return true;
}

std::vector<std::int64_t> express_in_basis(const DivisorClass& target, const std::vector<DivisorClass>& basis) {
    std::size_t n = basis.size();
    // Solve gram(basis) x = (pair(b_i, target)) over Q.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(pair(basis[i], basis[j]));
        m[i][n] = static_cast<long>(pair(basis[i], target));
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0) ++piv;
        if (piv == n) throw Error(ErrorCode::Degenerate, "basis has a singular Gram matrix");
        std::swap(m[col], m[piv]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || m[i][col] == 0) continue;
            Rational q = m[i][col] / m[col][col];
            for (std::size_t j = col; j <= n; ++j) m[i][j] -= q * m[col][j];
        }
    }
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        Rational x = m[i][n] / m[i][i];
        if (x.get_den() != 1)
            throw Error(ErrorCode::NotInLattice, "non-integral coefficient " + x.get_str() + " for " + target.to_string());
        out.push_back(to_int64(x.get_num()));
    }
    if (combine(out, basis) != target)
        throw Error(ErrorCode::NotInLattice, target.to_string() + " is not in the span of the basis");
    return out;
}

DivisorClass combine(const std::vector<std::int64_t>& coeffs, const std::vector<DivisorClass>& basis) {
    if (coeffs.size() != basis.size()) throw Error(ErrorCode::InvalidArgument, "coefficient count mismatch");
    DivisorClass out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out += coeffs[i] * basis[i];
    return out;
}

EulerInvariants euler_invariants() {
    EulerInvariants e{};
    e.K2 = pair(canonical(), canonical());
    const std::int64_t chi_o = 1;
    e.c2 = 12 * chi_o - e.K2;          // Noether
    e.chi_theta = e.K2 - e.c2 + 2;     // Riemann-Roch for the tangent bundle
    e.h1_theta = -e.chi_theta;         // h0 = h2 = 0
    e.h1_log = e.h1_theta - static_cast<std::int64_t>(D_all().size());
    e.h1_log_plus = e.h1_log - 1;
    return e;
}

IntMatrix diagonalize_unimodular() {
    // Blow down to the plane: H = S - E1 is the line class, S - f - E1 and
    // f - E1 are the two exceptional curves over the first centre.
    std::vector<DivisorClass> cols = {
        DivisorClass::S() - DivisorClass::E(1),
        DivisorClass::S() - DivisorClass::f() - DivisorClass::E(1),
        DivisorClass::f() - DivisorClass::E(1),
    };
    for (int i = 2; i <= 8; ++i) cols.push_back(DivisorClass::E(i));
    IntMatrix u(kRank, std::vector<std::int64_t>(kRank));
    for (std::size_t j = 0; j < kRank; ++j)
        for (std::size_t i = 0; i < kRank; ++i) u[i][j] = cols[j].coeffs[i];
    return u;
}

IntMatrix transform_form(const IntMatrix& u) {
    std::vector<DivisorClass> cols(u[0].size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t i = 0; i < kRank; ++i) cols[j].coeffs[i] = u[i][j];
    return gram(cols);
}

void NamedClassRegistry::set(const std::string& name, const DivisorClass& cls) {
    for (auto& [n, c] : entries_)
        if (n == name) {
            c = cls;
            return;
        }
    entries_.emplace_back(name, cls);
    const auto& order = canonical_order();
    auto rank = [&](const std::string& n) {
        return std::find(order.begin(), order.end(), n) - order.begin();
    };
    std::stable_sort(entries_.begin(), entries_.end(),
                     [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
}

bool NamedClassRegistry::contains(const std::string& name) const {
    for (auto& e : entries_)
        if (e.first == name) return true;
    return false;
}

const DivisorClass& NamedClassRegistry::get(const std::string& name) const {
    for (auto& e : entries_)
        if (e.first == name) return e.second;
    throw Error(ErrorCode::InvalidArgument, "no class named " + name);
}

const std::vector<std::string>& NamedClassRegistry::canonical_order() {
    static const std::vector<std::string> order = {"D0", "D1", "D2", "D3", "D4", "D5", "D6", "D7",
                                                   "C1", "C2", "C3", "C4", "C5", "C6", "C2prime",
                                                   "C4prime", "F", "K", "S", "f"};
    return order;
}

std::string NamedClassRegistry::intersection_csv() const {
    std::ostringstream out;
    out << "class";
    for (auto& e : entries_) out << "," << e.first;
    out << "\n";
    for (auto& a : entries_) {
        out << a.first;
        for (auto& b : entries_) out << "," << pair(a.second, b.second);
        out << "\n";
    }
    return out.str();
}

}  // namespace piilab::lattice
