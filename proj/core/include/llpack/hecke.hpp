#ifndef LLPACK_HECKE_HPP
#define LLPACK_HECKE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "llpack/cuspdata.hpp"
#include "llpack/gf.hpp"

namespace llpack::hecke {

using cusp::CuspidalLabel;
using cusp::Eigen;
using cusp::FiniteGroupKind;
using cusp::TypeDatum;
using gf::GaussValue;
using gf::Rat;
using poly::MonicPoly;

// Exact Laurent polynomial in u = q^(1/4). Quarter powers make every
// exponent integral: c is an integral power of q and b has half-integral
// q-exponents when r is half-integral.
class QPowerExpr {
public:
    QPowerExpr() = default;

    // q^e as an expression; e must be a multiple of 1/4.
    static QPowerExpr q_power(const Rat& e);
    static QPowerExpr zero() { return {}; }

    bool is_zero() const { return terms_.empty(); }
    const std::map<long long, long long>& terms() const { return terms_; }

    QPowerExpr operator+(const QPowerExpr& o) const;
    QPowerExpr operator-(const QPowerExpr& o) const;
    QPowerExpr operator-() const;
    QPowerExpr operator*(const QPowerExpr& o) const;
    bool operator==(const QPowerExpr& o) const { return terms_ == o.terms_; }
    bool operator!=(const QPowerExpr& o) const { return !(*this == o); }

    // Same expression with the leading (highest-exponent) coefficient made
    // positive.
    QPowerExpr abs() const;

    double eval(double q) const;
    std::string to_string() const;

    // Exactly one term with coefficient 1 and an exponent divisible by 4
    // (i.e. an integral power of q)?
    std::optional<long long> as_integral_q_power() const;

private:
    // quarter-exponent -> coefficient, no zero coefficients stored
    std::map<long long, long long> terms_;
};

// |b| = c^(1/2) (q^(r/2) - q^(-r/2)) for a q-power c; zero when r = 0.
QPowerExpr b_from_rc(const Rat& r, const QPowerExpr& c);

// Recover r from |b| and c; 0 when b = 0.
Rat r_from_bc(const QPowerExpr& abs_b, const QPowerExpr& c);

struct NuSign {
    int value = +1;  // +1 or -1
    bool operator==(const NuSign& o) const = default;
};

// Decides nu by the exact comparison D_y = +- xi(varpi) D_z of the two
// summed intertwining traces.
NuSign nu_from_sums(const GaussValue& D_y, const GaussValue& D_z, int xi_pi,
                    const QPowerExpr& abs_b_y, const QPowerExpr& abs_b_z);

// Point of reducibility s: real part a rational, imaginary part a multiple
// of pi/(m log q). A vanishing real part keeps its sign as a flag so the
// four points always come in +- pairs.
struct ReducPoint {
    Rat real{0};
    int imag_units = 0;  // 0 or 1
    int m = 1;           // GL-block size entering the imaginary unit
    bool negative = false;  // the -0 member of a signed-zero pair

    bool operator==(const ReducPoint& o) const {
        return real == o.real && imag_units == o.imag_units && m == o.m && negative == o.negative;
    }
    std::string to_string() const;
};

// Lusztig parameter r_w of the rank-1 Hecke algebra attached to the given
// eigenvalue class, as an exact rational (half-integral only in the unitary
// case, where it is (m + 1/2) deg P).
Rat lusztig_r(const FiniteGroupKind& kind, const Eigen& eigen, const CuspidalLabel& label);

// The four points { +-(r_y + nu r_z)/2, +-(r_y - nu r_z)/2 + pi i/(m log q) }.
std::vector<ReducPoint> reducibility_points(const Rat& r_y, const Rat& r_z, NuSign nu, int m);

// GL-block selector for red sets.
struct GlBlock {
    enum Tag { One, Omega1, Poly } tag = One;
    std::optional<MonicPoly> poly;

    static GlBlock one() { return {One, std::nullopt}; }
    static GlBlock omega1() { return {Omega1, std::nullopt}; }
    static GlBlock of_poly(MonicPoly p) { return {Poly, std::move(p)}; }
};

// Red set of the datum at the given block, with nu decided by how rho_z
// differs from rho_y (equal: +1 everywhere; full sign flip: -1 on both
// quadratic blocks; single-sign flips: -1 on the matching block only; deep
// blocks always +1).
std::vector<ReducPoint> red_set(const TypeDatum& datum, const GlBlock& block);

// a with reducibility at s = (a+1)/2, read off the largest real point.
long long moeglin_multiplicity(const std::vector<ReducPoint>& points);

// True iff s is a point of reducibility for the rank-1 data (b_w, c_w),
// i.e. q^s (up to the sign carried by the imaginary part and by nu) is a
// product of one Hecke eigenvalue from each side.
bool eigenvalue_relation_check(const QPowerExpr& abs_b_y, const QPowerExpr& abs_b_z,
                               const QPowerExpr& c_y, const QPowerExpr& c_z, const ReducPoint& s,
                               NuSign nu);

}  // namespace llpack::hecke

#endif
