#ifndef LLPACK_POLYARITH_HPP
#define LLPACK_POLYARITH_HPP

#include <string>
#include <vector>

#include "llpack/gf.hpp"

namespace llpack::poly {

using gf::Field;
using gf::FieldElement;
using gf::FieldPtr;

// Which involution s -> c(s)^{-1} on root sets defines duality: c is the
// identity (Plain) or the q_bullet-power Frobenius (Conjugate, q = q_bullet^2).
struct DualityKind {
    enum Tag { Plain, Conjugate } tag = Plain;
    long long q_bullet = 0;

    static DualityKind plain() { return {Plain, 0}; }
    static DualityKind conjugate(long long q_bullet) { return {Conjugate, q_bullet}; }

    bool operator==(const DualityKind& o) const = default;
    // Throws FieldMismatch/Domain if the kind does not fit the field.
    void check_field(const FieldPtr& field) const;
    // Apply c to a coefficient.
    FieldElement conj(const FieldElement& x) const;
};

class MonicPoly {
public:
    // Coefficients constant-first; the leading coefficient must be 1.
    MonicPoly(FieldPtr field, std::vector<FieldElement> coeffs);

    static MonicPoly x_minus(const FieldElement& root);  // X - root
    static MonicPoly from_integers(const FieldPtr& field, const std::vector<long long>& coeffs);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return coeffs_; }
    const FieldElement& coeff(int i) const { return coeffs_.at(i); }
    FieldElement eval(const FieldElement& x) const;

    bool operator==(const MonicPoly& o) const;
    bool operator!=(const MonicPoly& o) const { return !(*this == o); }
    bool operator<(const MonicPoly& o) const;  // degree, then coefficient-lex

    // Stable sort/equality key: degree followed by flattened F_p coordinates.
    std::vector<long long> key() const;

    std::string to_string() const;
    static MonicPoly parse(const FieldPtr& field, const std::string& text);

private:
    FieldPtr field_;
    std::vector<FieldElement> coeffs_;
};

bool is_irreducible(const MonicPoly& p);

// Monic polynomial with root multiset { c(s)^{-1} : s root of P }.
MonicPoly dual_poly(const MonicPoly& p, const DualityKind& kind);
bool is_self_dual(const MonicPoly& p, const DualityKind& kind);

// Complete sorted list of monic irreducible self-dual polynomials of the
// given degree. Plain degree-1 polynomials (exactly X-1 and X+1) are
// included only when allow_degree_one is set.
std::vector<MonicPoly> enumerate_self_dual_irreducible(const FieldPtr& field, int degree,
                                                       const DualityKind& kind,
                                                       bool allow_degree_one = false);

}  // namespace llpack::poly

#endif
