#include "llpack/hecke.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>

namespace llpack::hecke {

QPowerExpr QPowerExpr::q_power(const Rat& e) {
    Rat quarters = e * 4;
    if (quarters.denominator() != 1)
        throw Error(ErrorCode::Domain, "exponent must be a multiple of 1/4");
    QPowerExpr out;
    out.terms_[quarters.numerator()] = 1;
    return out;
}

QPowerExpr QPowerExpr::operator+(const QPowerExpr& o) const {
    QPowerExpr out = *this;
    for (const auto& [e, c] : o.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_[e] = c;
        } else if ((it->second += c) == 0) {
            out.terms_.erase(it);
        }
    }
    return out;
}

QPowerExpr QPowerExpr::operator-() const {
    QPowerExpr out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

QPowerExpr QPowerExpr::operator-(const QPowerExpr& o) const { return *this + (-o); }

QPowerExpr QPowerExpr::operator*(const QPowerExpr& o) const {
    QPowerExpr out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            auto it = out.terms_.find(e1 + e2);
            if (it == out.terms_.end()) {
                out.terms_[e1 + e2] = c1 * c2;
            } else if ((it->second += c1 * c2) == 0) {
                out.terms_.erase(it);
            }
        }
    return out;
}

QPowerExpr QPowerExpr::abs() const {
    if (terms_.empty()) return *this;
    return terms_.rbegin()->second > 0 ? *this : -*this;
}

double QPowerExpr::eval(double q) const {
    double total = 0;
    for (const auto& [e, c] : terms_) total += c * std::pow(q, e / 4.0);
    return total;
}

std::string QPowerExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        long long e = it->first, c = it->second;
        if (!s.empty())
            s += c > 0 ? " + " : " - ";
        else if (c < 0)
            s += "-";
        long long ac = std::llabs(c);
        std::string term;
        if (e == 0) {
            term = std::to_string(ac);
        } else {
            if (ac != 1) term = std::to_string(ac) + "*";
            term += "q";
            if (e != 4) {
                long long g = std::gcd(e < 0 ? -e : e, 4LL);
                term += "^(" + std::to_string(e / g);
                if (g != 4) term += "/" + std::to_string(4 / g);
                term += ")";
            }
        }
        s += term;
    }
    return s;
}

std::optional<long long> QPowerExpr::as_integral_q_power() const {
    if (terms_.size() != 1) return std::nullopt;
    auto [e, c] = *terms_.begin();
    if (c != 1 || e % 4 != 0) return std::nullopt;
    return e / 4;
}

QPowerExpr b_from_rc(const Rat& r, const QPowerExpr& c) {
    if (r < Rat(0)) throw Error(ErrorCode::Domain, "r must be >= 0");
    if (r.numerator() == 0) return QPowerExpr::zero();
    if (c.terms().size() != 1 || c.terms().begin()->second <= 0)
        throw Error(ErrorCode::Domain, "c must be a positive q-power");
    long long e_c = c.terms().begin()->first;
    if (e_c % 2 != 0) throw Error(ErrorCode::Domain, "c must have a square root in q^(1/4)");
    Rat half_c(e_c, 8);  // exponent of c^(1/2) in q units
    Rat half_r = r / 2;
    return QPowerExpr::q_power(half_c + half_r) - QPowerExpr::q_power(half_c - half_r);
}

Rat r_from_bc(const QPowerExpr& abs_b, const QPowerExpr& c) {
    if (abs_b.is_zero()) return Rat(0);
    const auto& t = abs_b.terms();
    if (t.size() != 2)
        throw Error(ErrorCode::Shape, "|b| must be a two-term q-power difference");
    long long e_hi = t.rbegin()->first, e_lo = t.begin()->first;
    (void)c;
    return Rat(e_hi - e_lo, 8) * 2;  // (e_hi - e_lo)/4 in q units, halved back to r
}

NuSign nu_from_sums(const GaussValue& D_y, const GaussValue& D_z, int xi_pi,
                    const QPowerExpr& abs_b_y, const QPowerExpr& abs_b_z) {
    if (xi_pi != 1 && xi_pi != -1) throw Error(ErrorCode::Domain, "xi(varpi) must be +1 or -1");
    if (abs_b_y.is_zero() || abs_b_z.is_zero())
        throw Error(ErrorCode::ZeroInput, "nu needs nonzero b on both sides");
    if (abs_b_y.abs() != abs_b_z.abs())
        throw Error(ErrorCode::Inconsistent, "|b_y| and |b_z| must agree");
    if (D_y.is_zero() || D_z.is_zero())
        throw Error(ErrorCode::ZeroInput, "nu needs nonzero trace sums");
    GaussValue target = D_z * Rat(xi_pi);
    if (D_y == target) return {+1};
    if (D_y == -target) return {-1};
    throw Error(ErrorCode::Inconsistent, "trace sums differ by something other than a sign");
}

std::string ReducPoint::to_string() const {
    std::string s;
    if (real.numerator() == 0) {
        s = negative ? "-0" : "+0";
    } else {
        s = std::to_string(real.numerator());
        if (real.denominator() != 1) s += "/" + std::to_string(real.denominator());
    }
    if (imag_units != 0) {
        s += " + pi*i/";
        if (m != 1) s += std::to_string(m) + "*";
        s += "log q";
    }
    return s;
}

Rat lusztig_r(const FiniteGroupKind& kind, const Eigen& eigen, const CuspidalLabel& label) {
    if (eigen.tag == Eigen::Poly) {
        int m = label.deep_m(*eigen.poly);
        return (Rat(m) + Rat(1, 2)) * eigen.poly->degree();
    }
    bool plus = eigen.tag == Eigen::PlusOne;
    int m = plus ? label.m_plus : label.m_minus;
    int am = std::abs(m);
    switch (kind.family) {
        case cusp::Family::OddOrthogonal:
            return Rat(2 * am + 1);
        case cusp::Family::Symplectic:
            return plus ? Rat(2 * am + 1) : Rat(2 * am);
        case cusp::Family::EvenOrthogonal:
            return Rat(2 * am);
        case cusp::Family::Unitary:
            throw Error(ErrorCode::Domain, "unitary labels have no quadratic eigenvalue classes");
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown family");
}

namespace {

void push_pair(std::vector<ReducPoint>& out, const Rat& s, int imag_units, int m) {
    if (s.numerator() == 0) {
        out.push_back({Rat(0), imag_units, m, false});
        out.push_back({Rat(0), imag_units, m, true});
    } else {
        Rat a = s.numerator() > 0 ? s : -s;
        out.push_back({a, imag_units, m, false});
        out.push_back({-a, imag_units, m, false});
    }
}

}  // namespace

std::vector<ReducPoint> reducibility_points(const Rat& r_y, const Rat& r_z, NuSign nu, int m) {
    if (r_y < Rat(0) || r_z < Rat(0)) throw Error(ErrorCode::Domain, "r must be >= 0");
    if (m < 1) throw Error(ErrorCode::Domain, "block size must be >= 1");
    std::vector<ReducPoint> out;
    push_pair(out, (r_y + Rat(nu.value) * r_z) / 2, 0, m);
    push_pair(out, (r_y - Rat(nu.value) * r_z) / 2, 1, m);
    return out;
}

namespace {

// How rho_z differs from rho_y: sign flips per quadratic block.
struct Relation {
    bool plus_flipped = false;
    bool minus_flipped = false;
};

Relation relation_of(const TypeDatum& datum) {
    const auto& y = datum.rho_y;
    const auto& z = datum.rho_z;
    Relation rel;
    switch (y.kind.family) {
        case cusp::Family::OddOrthogonal:
            // The extension-sign flip plays the role of the full det twist.
            if (y.eps.value_or(+1) != z.eps.value_or(+1)) {
                rel.plus_flipped = true;
                rel.minus_flipped = true;
            }
            break;
        case cusp::Family::Symplectic:
            rel.minus_flipped = y.m_minus != z.m_minus;
            break;
        case cusp::Family::EvenOrthogonal:
            rel.plus_flipped = y.m_plus != z.m_plus;
            rel.minus_flipped = y.m_minus != z.m_minus;
            break;
        case cusp::Family::Unitary:
            break;
    }
    return rel;
}

}  // namespace

std::vector<ReducPoint> red_set(const TypeDatum& datum, const GlBlock& block) {
    if (!cusp::is_typically_almost_symmetric(datum))
        throw Error(ErrorCode::NotTypicallySymmetric, "datum is not typically almost symmetric");

    if (block.tag == GlBlock::Poly) {
        int m_p = datum.rho_y.deep_m(*block.poly);
        if (m_p != datum.rho_z.deep_m(*block.poly))
            throw Error(ErrorCode::Inconsistent, "deep multiplicities differ between the factors");
        Rat r = Rat(m_p) + Rat(1, 2);
        return reducibility_points(r, r, {+1}, block.poly->degree());
    }

    const cusp::Family fam = datum.rho_y.kind.family;
    if (fam == cusp::Family::Unitary)
        throw Error(ErrorCode::NotSupported, "unitary data have no quadratic blocks");

    Eigen eigen = block.tag == GlBlock::One ? Eigen::plus_one() : Eigen::minus_one();
    Rat r_y = lusztig_r(datum.rho_y.kind, eigen, datum.rho_y);
    Rat r_z = lusztig_r(datum.rho_z.kind, eigen, datum.rho_z);
    Relation rel = relation_of(datum);
    bool flipped = block.tag == GlBlock::One ? rel.plus_flipped : rel.minus_flipped;
    return reducibility_points(r_y, r_z, {flipped ? -1 : +1}, 1);
}

long long moeglin_multiplicity(const std::vector<ReducPoint>& points) {
    std::optional<Rat> best;
    for (const auto& p : points) {
        if (p.imag_units != 0) continue;
        Rat v = p.real.numerator() >= 0 ? p.real : -p.real;
        if (!best || v > *best) best = v;
    }
    if (!best) throw Error(ErrorCode::Domain, "no real point of reducibility");
    Rat a = *best * 2 - 1;
    if (a.denominator() != 1)
        throw Error(ErrorCode::Domain, "largest real point is not half an integer");
    return a.numerator();
}

bool eigenvalue_relation_check(const QPowerExpr& abs_b_y, const QPowerExpr& abs_b_z,
                               const QPowerExpr& c_y, const QPowerExpr& c_z, const ReducPoint& s,
                               NuSign nu) {
    Rat r_y = r_from_bc(abs_b_y, c_y);
    Rat r_z = r_from_bc(abs_b_z, c_z);
    // The imaginary unit contributes the sign -1; combined with nu it selects
    // which eigenvalue product q^s must match.
    int sigma = s.imag_units == 0 ? +1 : -1;
    Rat two_x = s.real * 2;
    if (sigma * nu.value == +1) return two_x == r_y + r_z || two_x == -(r_y + r_z);
    return two_x == r_y - r_z || two_x == r_z - r_y;
}

}  // namespace llpack::hecke
