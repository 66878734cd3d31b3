#ifndef LLPACK_GF_HPP
#define LLPACK_GF_HPP

#include <boost/rational.hpp>
#include <complex>
#include <map>
#include <memory>
#include <vector>

#include "llpack/error.hpp"

namespace llpack::gf {

using Rat = boost::rational<long long>;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// Element of a finite field. Prime-field elements hold a residue in [0, p);
// extension elements hold a coefficient vector over the base field
// (constant coefficient first).
class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const { return field_; }
    bool is_zero() const;
    long long residue() const;  // prime fields only
    const std::vector<FieldElement>& coords() const;  // extension fields only

    // Canonical F_p coordinate vector (flattened through the tower).
    std::vector<long long> flat() const;
    // Canonical index: flat coordinates read as base-p digits, constant first.
    long long index() const;

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement inverse() const;
    FieldElement pow(long long e) const;

    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const;  // canonical index order

    friend class Field;

private:
    FieldPtr field_;
    long long residue_ = 0;
    std::vector<FieldElement> coords_;
};

// Immutable finite field F_q, q = p^e, p an odd prime. Extensions are built
// as towers F_q[t]/(modulus) with a deterministic (lexicographically least)
// monic irreducible modulus, so two calls with equal arguments yield the same
// field object and elements mix freely.
class Field : public std::enable_shared_from_this<Field> {
public:
    static FieldPtr prime(long long p);
    // Degree-m extension of this field; m = 1 returns this field itself.
    FieldPtr extension(int m) const;

    long long characteristic() const { return p_; }
    long long cardinality() const { return q_; }
    bool is_prime_field() const { return base_ == nullptr; }
    FieldPtr base_field() const { return base_; }
    int degree_over_base() const { return deg_; }
    int degree_over_prime() const;
    // Modulus over the base field, constant coefficient first, leading 1 included.
    const std::vector<FieldElement>& modulus() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_integer(long long k) const;   // image of k under Z -> F_q
    FieldElement generator() const;                 // class of t (extensions only)
    FieldElement element(std::vector<FieldElement> coords) const;  // over base
    FieldElement element_from_index(long long idx) const;
    std::vector<FieldElement> all_elements() const;  // canonical index order

    // x -> x^(q_base), the tower Frobenius over the base field.
    FieldElement frobenius(const FieldElement& x) const;
    FieldElement norm_to_base(const FieldElement& x) const;
    FieldElement trace_to_base(const FieldElement& x) const;
    FieldElement trace_to_prime(const FieldElement& x) const;

    bool is_square(const FieldElement& x) const;  // x != 0
    // Quadratic character: +1 on squares, -1 on non-squares.
    int omega(const FieldElement& x) const { return is_square(x) ? 1 : -1; }
    // Least non-square in canonical element order.
    FieldElement nonsquare() const;
    // Throws FieldMismatch unless x belongs to this field.
    void check(const FieldElement& x) const;

private:
    Field() = default;

    long long p_ = 0;
    long long q_ = 0;
    int deg_ = 1;             // degree over base (1 for prime fields)
    FieldPtr base_;           // null for prime fields
    std::vector<FieldElement> modulus_;
    mutable std::map<int, FieldPtr> extensions_;
};

// Exact value in the ring Q[g]/(g^2 - s*q), where s = omega(-1) and g stands
// for the quadratic Gauss sum of F_q. Values are a + b*g with rational a, b.
class GaussValue {
public:
    GaussValue() = default;
    GaussValue(Rat rational, Rat gauss, long long q);

    static GaussValue of_rational(Rat a, long long q) { return {a, Rat(0), q}; }

    const Rat& rational() const { return a_; }
    const Rat& gauss() const { return b_; }
    long long q() const { return q_; }
    int sign_class() const { return sign_; }  // omega(-1), i.e. g^2 = sign*q
    bool is_zero() const { return a_.numerator() == 0 && b_.numerator() == 0; }

    GaussValue operator+(const GaussValue& o) const;
    GaussValue operator-(const GaussValue& o) const;
    GaussValue operator-() const;
    GaussValue operator*(const GaussValue& o) const;
    GaussValue operator*(const Rat& r) const;
    bool operator==(const GaussValue& o) const;
    bool operator!=(const GaussValue& o) const { return !(*this == o); }

    // Numeric image with g = sqrt(q) (q = 1 mod 4) or i*sqrt(q) (q = 3 mod 4).
    std::complex<double> numeric() const;
    std::string to_string() const;

private:
    Rat a_{0};
    Rat b_{0};
    long long q_ = 0;
    int sign_ = 1;
};

// The quadratic Gauss sum sum_u omega(u) psi(a*u) as an exact GaussValue:
// omega(a)*g, independent of the choice of additive character psi.
GaussValue gauss_sum(const FieldPtr& field, const FieldElement& a);
// Numeric companion with the standard character psi(x) = exp(2*pi*i*Tr(x)/p).
std::complex<double> gauss_sum_numeric(const FieldPtr& field, const FieldElement& a);

namespace detail {
// Dense polynomial helpers over a field; coefficient vectors are
// constant-first and normalized (no trailing zeros, zero = empty vector).
using PolyVec = std::vector<FieldElement>;

void trim(PolyVec& p);
int degree(const PolyVec& p);  // -1 for zero
PolyVec add(const PolyVec& a, const PolyVec& b);
PolyVec sub(const PolyVec& a, const PolyVec& b);
PolyVec mul(const PolyVec& a, const PolyVec& b);
// Remainder of a modulo monic m.
PolyVec mod(const PolyVec& a, const PolyVec& m);
PolyVec gcd_monic(const PolyVec& a, const PolyVec& b);
PolyVec powmod(const PolyVec& base, long long e, const PolyVec& m);
FieldElement eval(const PolyVec& p, const FieldElement& x, const FieldPtr& field);
bool is_irreducible(const PolyVec& monic, const FieldPtr& field);
}  // namespace detail

}  // namespace llpack::gf

#endif
