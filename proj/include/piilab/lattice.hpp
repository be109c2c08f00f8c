#pragma once

// Picard lattice of the blown-up surface in the basis (S, f, E1..E8).

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "piilab/exact.hpp"

namespace piilab::lattice {

inline constexpr std::size_t kRank = 10;

using IntMatrix = std::vector<std::vector<std::int64_t>>;
using BigMatrix = std::vector<std::vector<exact::Integer>>;

struct DivisorClass {
    std::array<std::int64_t, kRank> coeffs{};

    static DivisorClass S();
    static DivisorClass f();
    static DivisorClass E(int i);  // 1 <= i <= 8
    static DivisorClass basis(std::size_t k);

    std::int64_t operator[](std::size_t k) const { return coeffs[k]; }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
    friend DivisorClass operator+(DivisorClass a, const DivisorClass& b);
    friend DivisorClass operator-(DivisorClass a, const DivisorClass& b);
    friend DivisorClass operator-(DivisorClass a);
    friend DivisorClass operator*(std::int64_t k, DivisorClass a);
    DivisorClass& operator+=(const DivisorClass& b) { return *this = *this + b; }
    DivisorClass& operator-=(const DivisorClass& b) { return *this = *this - b; }

    // e.g. "S + 2f - E1 - E2"
    std::string to_string() const;
    std::string vector_string() const;  // "(1, 2, -1, ...)"
};

const IntMatrix& gram_form();
std::int64_t pair(const DivisorClass& a, const DivisorClass& b);
IntMatrix gram(const std::vector<DivisorClass>& classes);
exact::Integer determinant(const IntMatrix& m);
bool form_is_unimodular();

DivisorClass D(int i);  // 0 <= i <= 7
std::vector<DivisorClass> D_all();
DivisorClass canonical();     // K = -2S + E1 + ... + E8
DivisorClass anticanonical(); // F = 2D0 + D1 + 2D2 + 3D3 + 4D4 + 3D5 + 2D6 + D7
// Minus the affine E7 Cartan matrix, rows and columns in the order D0..D7.
IntMatrix minus_affine_e7_cartan();

// Smith normal form U*A*V = D with U, V unimodular.
struct Smith {
    BigMatrix U, D, V;
    std::size_t rank = 0;
};
Smith smith_normal_form(const BigMatrix& a);

std::vector<DivisorClass> ortho_complement(const std::vector<DivisorClass>& generators);
bool in_span(const DivisorClass& v, const std::vector<DivisorClass>& generators);
bool sublattice_equal(const std::vector<DivisorClass>& a, const std::vector<DivisorClass>& b);
std::vector<std::int64_t> express_in_basis(const DivisorClass& target, const std::vector<DivisorClass>& basis);
DivisorClass combine(const std::vector<std::int64_t>& coeffs, const std::vector<DivisorClass>& basis);

struct EulerInvariants {
    std::int64_t K2, c2, chi_theta, h1_theta, h1_log, h1_log_plus;
};
EulerInvariants euler_invariants();

// Columns give a basis in which the form is diag(1, -1, ..., -1).
IntMatrix diagonalize_unimodular();
IntMatrix transform_form(const IntMatrix& u);  // U^T G U

// Ordered name -> class table.
class NamedClassRegistry {
public:
    void set(const std::string& name, const DivisorClass& cls);
    bool contains(const std::string& name) const;
    const DivisorClass& get(const std::string& name) const;
    const std::vector<std::pair<std::string, DivisorClass>>& entries() const { return entries_; }

    // Fixed row/column order.
    static const std::vector<std::string>& canonical_order();
    std::string intersection_csv() const;

private:
    std::vector<std::pair<std::string, DivisorClass>> entries_;
};

}  // namespace piilab::lattice
