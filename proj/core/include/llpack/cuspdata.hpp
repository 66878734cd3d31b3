#ifndef LLPACK_CUSPDATA_HPP
#define LLPACK_CUSPDATA_HPP

#include <optional>
#include <string>
#include <vector>

#include "llpack/polyarith.hpp"

namespace llpack::cusp {

using poly::MonicPoly;

enum class Family { Symplectic, OddOrthogonal, EvenOrthogonal, Unitary };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& s);

// Finite classical group at a vertex of the building: Sp(2n), O(2n+1),
// O_delta(2n) or U(N) over F_{q_bullet^2}.
struct FiniteGroupKind {
    Family family;
    int n = 0;
    int delta = +1;          // even orthogonal only
    long long q_bullet = 0;  // unitary only

    static FiniteGroupKind symplectic(int n) { return {Family::Symplectic, n}; }
    static FiniteGroupKind odd_orthogonal(int n) { return {Family::OddOrthogonal, n}; }
    static FiniteGroupKind even_orthogonal(int n, int delta) {
        return {Family::EvenOrthogonal, n, delta};
    }
    static FiniteGroupKind unitary(int N, long long q_bullet) {
        return {Family::Unitary, N, +1, q_bullet};
    }
    // Matrix size of the dual group (2n+1 for Sp(2n), 2n for O(2n+1) and
    // O(2n), N for U(N)). n = 0 means "size not pinned down".
    int dual_size() const;

    bool operator==(const FiniteGroupKind& o) const;
};

// Eigenvalue class of the underlying semisimple element.
struct Eigen {
    enum Tag { PlusOne, MinusOne, Poly } tag = PlusOne;
    std::optional<MonicPoly> poly;

    static Eigen plus_one() { return {PlusOne, std::nullopt}; }
    static Eigen minus_one() { return {MinusOne, std::nullopt}; }
    static Eigen of_poly(MonicPoly p) { return {Poly, std::move(p)}; }
};

struct DeepEntry {
    MonicPoly poly;
    int m = 0;

    bool operator==(const DeepEntry& o) const { return poly == o.poly && m == o.m; }
};

// Cuspidal label rho(m_+, m_-, (m_P)) of a finite classical group, plus the
// extension sign for odd orthogonal kinds and the opaque splitting tag for
// even orthogonal all-zero labels.
struct CuspidalLabel {
    FiniteGroupKind kind{Family::Symplectic};
    int m_plus = 0;
    int m_minus = 0;
    std::vector<DeepEntry> deep;  // normalized: sorted by poly, m >= 1
    std::optional<int> eps;       // odd orthogonal: +1 or -1
    std::optional<int> split_sign;

    // Sort deep entries and drop zero multiplicities; default the odd
    // orthogonal extension sign to +1.
    void normalize();

    int deep_m(const MonicPoly& p) const;
    // Even orthogonal discriminant type (-1)^(m_+ + m_-).
    int derived_delta() const;
    // Same kind and same |m| data (the companion relation).
    bool same_abs_data(const CuspidalLabel& o) const;

    bool operator==(const CuspidalLabel& o) const;
    bool operator!=(const CuspidalLabel& o) const { return !(*this == o); }
};

// Inducing type rho_y x rho_z together with the optional GL block; the GL
// character extension is fixed to xi(varpi) = 1 throughout. inner_form
// distinguishes the two pure inner forms in the odd-orthogonal case and is
// +1 everywhere else.
struct TypeDatum {
    std::optional<MonicPoly> gl_poly;
    CuspidalLabel rho_y;
    CuspidalLabel rho_z;
    int inner_form = +1;

    bool operator==(const TypeDatum& o) const;
};

// The case table for the multiplicity N of an eigenvalue class in the dual
// datum. Throws SignDomain when m is outside the allowed domain.
long long multiplicity_N(const FiniteGroupKind& kind, const Eigen& eigen, int m);

// Total dual size determined by the label.
long long label_dual_size(const CuspidalLabel& label);

Violations validate_label(const CuspidalLabel& label, long long ambient_dim);

// Convenience: throw the first violation as an Error.
void require_valid(const CuspidalLabel& label, long long ambient_dim);

// All labels sharing (|m_+|, |m_-|, (m_P)) within the same kind; for odd
// orthogonal kinds these are the two extension signs.
std::vector<CuspidalLabel> companions(const CuspidalLabel& label);

bool is_typically_almost_symmetric(const TypeDatum& datum);

// Every typically-almost-symmetric ordered pair over the companion class of
// the given data, i.e. the square of the class computed by companions(); odd
// orthogonal kinds additionally carry both pure inner forms.
std::vector<TypeDatum> enumerate_type_data(Family family, int abs_m_plus, int abs_m_minus,
                                           const std::vector<DeepEntry>& deep);

}  // namespace llpack::cusp

#endif
