#include "llpack/gf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace llpack::gf {

namespace {

constexpr long long kFieldCap = 121;       // largest base-field cardinality
constexpr int kExtensionCap = 6;           // largest extension degree
constexpr long long kEnumerationCap = 10'000'000;

bool is_odd_prime(long long p) {
    if (p < 3 || p % 2 == 0) return false;
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

long long pow_ll(long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// FieldElement

bool FieldElement::is_zero() const {
    if (!field_) throw Error(ErrorCode::FieldMismatch, "uninitialized element");
    if (field_->is_prime_field()) return residue_ == 0;
    return std::all_of(coords_.begin(), coords_.end(),
                       [](const FieldElement& c) { return c.is_zero(); });
}

long long FieldElement::residue() const {
    if (!field_ || !field_->is_prime_field())
        throw Error(ErrorCode::Domain, "residue() requires a prime-field element");
    return residue_;
}

const std::vector<FieldElement>& FieldElement::coords() const {
    if (!field_ || field_->is_prime_field())
        throw Error(ErrorCode::Domain, "coords() requires an extension-field element");
    return coords_;
}

std::vector<long long> FieldElement::flat() const {
    if (!field_) throw Error(ErrorCode::FieldMismatch, "uninitialized element");
    if (field_->is_prime_field()) return {residue_};
    std::vector<long long> out;
    for (const auto& c : coords_) {
        auto sub = c.flat();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

long long FieldElement::index() const {
    auto digits = flat();
    long long p = field_->characteristic();
    long long idx = 0;
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) idx = idx * p + *it;
    return idx;
}

static void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field() || a.field().get() != b.field().get())
        throw Error(ErrorCode::FieldMismatch, "operands lie in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    require_same_field(*this, o);
    FieldElement r;
    r.field_ = field_;
    if (field_->is_prime_field()) {
        r.residue_ = (residue_ + o.residue_) % field_->characteristic();
    } else {
        r.coords_.reserve(coords_.size());
        for (size_t i = 0; i < coords_.size(); ++i) r.coords_.push_back(coords_[i] + o.coords_[i]);
    }
    return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const { return *this + (-o); }

FieldElement FieldElement::operator-() const {
    if (!field_) throw Error(ErrorCode::FieldMismatch, "uninitialized element");
    FieldElement r;
    r.field_ = field_;
    if (field_->is_prime_field()) {
        r.residue_ = (field_->characteristic() - residue_) % field_->characteristic();
    } else {
        r.coords_.reserve(coords_.size());
        for (const auto& c : coords_) r.coords_.push_back(-c);
    }
    return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
    require_same_field(*this, o);
    FieldElement r;
    r.field_ = field_;
    if (field_->is_prime_field()) {
        r.residue_ = (residue_ * o.residue_) % field_->characteristic();
        return r;
    }
    const auto& base = field_->base_field();
    const int d = field_->degree_over_base();
    std::vector<FieldElement> prod(2 * d - 1, base->zero());
    for (int i = 0; i < d; ++i) {
        if (coords_[i].is_zero()) continue;
        for (int j = 0; j < d; ++j) prod[i + j] = prod[i + j] + coords_[i] * o.coords_[j];
    }
    const auto& mod = field_->modulus();  // monic, degree d
    for (int i = 2 * d - 2; i >= d; --i) {
        if (prod[i].is_zero()) continue;
        FieldElement lead = prod[i];
        for (int j = 0; j < d; ++j) prod[i - d + j] = prod[i - d + j] - lead * mod[j];
        prod[i] = base->zero();
    }
    prod.resize(d);
    r.coords_ = std::move(prod);
    return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const { return *this * o.inverse(); }

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return pow(field_->cardinality() - 2);
}

FieldElement FieldElement::pow(long long e) const {
    if (!field_) throw Error(ErrorCode::FieldMismatch, "uninitialized element");
    if (e < 0) return inverse().pow(-e);
    FieldElement acc = field_->one();
    FieldElement base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
    require_same_field(*this, o);
    if (field_->is_prime_field()) return residue_ == o.residue_;
    return coords_ == o.coords_;
}

bool FieldElement::operator<(const FieldElement& o) const {
    require_same_field(*this, o);
    return index() < o.index();
}

// ---------------------------------------------------------------------------
// Field

static std::map<long long, FieldPtr>& prime_registry() {
    static std::map<long long, FieldPtr> reg;
    return reg;
}

FieldPtr Field::prime(long long p) {
    if (!is_odd_prime(p)) throw Error(ErrorCode::Domain, "characteristic must be an odd prime");
    if (p > kFieldCap) throw Error(ErrorCode::CapExceeded, "prime field too large");
    auto& reg = prime_registry();
    auto it = reg.find(p);
    if (it != reg.end()) return it->second;
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->q_ = p;
    f->deg_ = 1;
    reg[p] = f;
    return f;
}

FieldPtr Field::extension(int m) const {
    if (m < 1) throw Error(ErrorCode::Domain, "extension degree must be positive");
    if (m == 1) return shared_from_this();
    if (m > kExtensionCap) throw Error(ErrorCode::CapExceeded, "extension degree above cap");
    if (q_ > kFieldCap) throw Error(ErrorCode::CapExceeded, "base field above cardinality cap");
    auto it = extensions_.find(m);
    if (it != extensions_.end()) return it->second;

    auto self = shared_from_this();
    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p_;
    f->q_ = pow_ll(q_, m);
    f->deg_ = m;
    f->base_ = self;

    // Lexicographically least monic irreducible modulus, constant coefficient
    // most significant in the comparison.
    long long total = pow_ll(q_, m);
    for (long long counter = 0; counter < total; ++counter) {
        std::vector<FieldElement> coeffs(m + 1, zero());
        long long rest = counter;
        for (int j = m - 1; j >= 0; --j) {  // c_0 is the most significant digit
            coeffs[j] = element_from_index(rest % q_);
            rest /= q_;
        }
        coeffs[m] = one();
        if (detail::is_irreducible(coeffs, self)) {
            f->modulus_ = std::move(coeffs);
            extensions_[m] = f;
            return f;
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "no irreducible modulus found");
}

int Field::degree_over_prime() const {
    return is_prime_field() ? 1 : deg_ * base_->degree_over_prime();
}

const std::vector<FieldElement>& Field::modulus() const {
    if (is_prime_field()) throw Error(ErrorCode::Domain, "prime field has no modulus");
    return modulus_;
}

void Field::check(const FieldElement& x) const {
    if (!x.field() || x.field().get() != this)
        throw Error(ErrorCode::FieldMismatch, "element does not belong to this field");
}

FieldElement Field::zero() const {
    FieldElement r;
    r.field_ = shared_from_this();
    if (!is_prime_field()) r.coords_.assign(deg_, base_->zero());
    return r;
}

FieldElement Field::one() const { return from_integer(1); }

FieldElement Field::from_integer(long long k) const {
    FieldElement r = zero();
    long long v = ((k % p_) + p_) % p_;
    if (is_prime_field())
        r.residue_ = v;
    else
        r.coords_[0] = base_->from_integer(v);
    return r;
}

FieldElement Field::generator() const {
    if (is_prime_field()) throw Error(ErrorCode::Domain, "prime field has no tower generator");
    FieldElement r = zero();
    r.coords_[1] = base_->one();
    return r;
}

FieldElement Field::element(std::vector<FieldElement> coords) const {
    if (is_prime_field()) throw Error(ErrorCode::Domain, "element(coords) needs an extension field");
    if (static_cast<int>(coords.size()) > deg_)
        throw Error(ErrorCode::Shape, "too many coordinates for this extension");
    for (const auto& c : coords) base_->check(c);
    FieldElement r = zero();
    for (size_t i = 0; i < coords.size(); ++i) r.coords_[i] = coords[i];
    return r;
}

FieldElement Field::element_from_index(long long idx) const {
    if (idx < 0 || idx >= q_) throw Error(ErrorCode::Domain, "element index out of range");
    if (is_prime_field()) return from_integer(idx);
    FieldElement r = zero();
    long long b = base_->cardinality();
    for (int i = 0; i < deg_ && idx > 0; ++i) {
        r.coords_[i] = base_->element_from_index(idx % b);
        idx /= b;
    }
    return r;
}

std::vector<FieldElement> Field::all_elements() const {
    if (q_ > kEnumerationCap) throw Error(ErrorCode::CapExceeded, "field too large to enumerate");
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (long long i = 0; i < q_; ++i) out.push_back(element_from_index(i));
    return out;
}

FieldElement Field::frobenius(const FieldElement& x) const {
    check(x);
    if (is_prime_field()) return x;
    return x.pow(base_->cardinality());
}

FieldElement Field::norm_to_base(const FieldElement& x) const {
    check(x);
    if (is_prime_field()) return x;
    FieldElement acc = one();
    FieldElement cur = x;
    for (int i = 0; i < deg_; ++i) {
        acc = acc * cur;
        cur = frobenius(cur);
    }
    for (int i = 1; i < deg_; ++i)
        if (!acc.coords()[i].is_zero())
            throw Error(ErrorCode::InternalInconsistency, "norm did not land in the base field");
    return acc.coords()[0];
}

FieldElement Field::trace_to_base(const FieldElement& x) const {
    check(x);
    if (is_prime_field()) return x;
    FieldElement acc = zero();
    FieldElement cur = x;
    for (int i = 0; i < deg_; ++i) {
        acc = acc + cur;
        cur = frobenius(cur);
    }
    for (int i = 1; i < deg_; ++i)
        if (!acc.coords()[i].is_zero())
            throw Error(ErrorCode::InternalInconsistency, "trace did not land in the base field");
    return acc.coords()[0];
}

FieldElement Field::trace_to_prime(const FieldElement& x) const {
    check(x);
    FieldElement cur = trace_to_base(x);
    if (is_prime_field()) return cur;
    return cur.field()->trace_to_prime(cur);
}

bool Field::is_square(const FieldElement& x) const {
    check(x);
    if (x.is_zero()) throw Error(ErrorCode::ZeroInput, "quadratic character of zero");
    return x.pow((q_ - 1) / 2) == one();
}

FieldElement Field::nonsquare() const {
    for (long long i = 1; i < q_; ++i) {
        FieldElement x = element_from_index(i);
        if (!is_square(x)) return x;
    }
    throw Error(ErrorCode::InternalInconsistency, "no non-square found");
}

// ---------------------------------------------------------------------------
// GaussValue

GaussValue::GaussValue(Rat rational, Rat gauss, long long q)
    : a_(rational), b_(gauss), q_(q), sign_(q % 4 == 1 ? 1 : -1) {
    if (q < 3 || q % 2 == 0) throw Error(ErrorCode::Domain, "GaussValue needs an odd q >= 3");
}

static void require_same_ring(const GaussValue& x, const GaussValue& y) {
    if (x.q() != y.q()) throw Error(ErrorCode::Domain, "GaussValue operands have different q");
}

GaussValue GaussValue::operator+(const GaussValue& o) const {
    require_same_ring(*this, o);
    return {a_ + o.a_, b_ + o.b_, q_};
}

GaussValue GaussValue::operator-(const GaussValue& o) const {
    require_same_ring(*this, o);
    return {a_ - o.a_, b_ - o.b_, q_};
}

GaussValue GaussValue::operator-() const { return {-a_, -b_, q_}; }

GaussValue GaussValue::operator*(const GaussValue& o) const {
    require_same_ring(*this, o);
    Rat s(sign_);
    return {a_ * o.a_ + s * Rat(q_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, q_};
}

GaussValue GaussValue::operator*(const Rat& r) const { return {a_ * r, b_ * r, q_}; }

bool GaussValue::operator==(const GaussValue& o) const {
    require_same_ring(*this, o);
    return a_ == o.a_ && b_ == o.b_;
}

std::complex<double> GaussValue::numeric() const {
    double av = boost::rational_cast<double>(a_);
    double bv = boost::rational_cast<double>(b_);
    double root = std::sqrt(static_cast<double>(q_));
    if (sign_ == 1) return {av + bv * root, 0.0};
    return {av, bv * root};
}

std::string GaussValue::to_string() const {
    std::ostringstream os;
    os << a_.numerator();
    if (a_.denominator() != 1) os << "/" << a_.denominator();
    if (b_.numerator() != 0) {
        os << (b_.numerator() > 0 ? " + " : " - ");
        Rat ab = boost::abs(b_);
        if (ab != Rat(1)) {
            os << ab.numerator();
            if (ab.denominator() != 1) os << "/" << ab.denominator();
            os << "*";
        }
        os << "g";
    }
    return os.str();
}

GaussValue gauss_sum(const FieldPtr& field, const FieldElement& a) {
    if (!field) throw Error(ErrorCode::Domain, "null field");
    field->check(a);
    if (a.is_zero()) throw Error(ErrorCode::TrivialCharacter, "gauss_sum needs a nonzero twist");
    Rat b(field->omega(a));
    return {Rat(0), b, field->cardinality()};
}

std::complex<double> gauss_sum_numeric(const FieldPtr& field, const FieldElement& a) {
    if (!field) throw Error(ErrorCode::Domain, "null field");
    field->check(a);
    if (a.is_zero()) throw Error(ErrorCode::TrivialCharacter, "gauss_sum needs a nonzero twist");
    const double p = static_cast<double>(field->characteristic());
    std::complex<double> acc = 0.0;
    for (const auto& u : field->all_elements()) {
        if (u.is_zero()) continue;
        long long t = field->trace_to_prime(a * u).residue();
        double arg = 2.0 * std::numbers::pi * static_cast<double>(t) / p;
        acc += static_cast<double>(field->omega(u)) * std::polar(1.0, arg);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Polynomial helpers

namespace detail {

void trim(PolyVec& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const PolyVec& p) { return static_cast<int>(p.size()) - 1; }

PolyVec add(const PolyVec& a, const PolyVec& b) {
    const PolyVec& lo = a.size() < b.size() ? a : b;
    PolyVec out = a.size() < b.size() ? b : a;
    for (size_t i = 0; i < lo.size(); ++i) out[i] = out[i] + lo[i];
    trim(out);
    return out;
}

PolyVec sub(const PolyVec& a, const PolyVec& b) {
    PolyVec nb;
    nb.reserve(b.size());
    for (const auto& c : b) nb.push_back(-c);
    return add(a, nb);
}

PolyVec mul(const PolyVec& a, const PolyVec& b) {
    if (a.empty() || b.empty()) return {};
    const FieldPtr& f = a.front().field();
    PolyVec out(a.size() + b.size() - 1, f->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    trim(out);
    return out;
}

PolyVec mod(const PolyVec& a, const PolyVec& m) {
    if (m.empty()) throw Error(ErrorCode::DivisionByZero, "polynomial modulus is zero");
    PolyVec r = a;
    trim(r);
    FieldElement lead_inv = m.back().inverse();
    while (degree(r) >= degree(m)) {
        FieldElement factor = r.back() * lead_inv;
        size_t shift = r.size() - m.size();
        for (size_t j = 0; j < m.size(); ++j) r[shift + j] = r[shift + j] - factor * m[j];
        trim(r);
    }
    return r;
}

PolyVec gcd_monic(const PolyVec& a, const PolyVec& b) {
    PolyVec x = a, y = b;
    trim(x);
    trim(y);
    while (!y.empty()) {
        PolyVec r = mod(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    if (x.empty()) return x;
    FieldElement inv = x.back().inverse();
    for (auto& c : x) c = c * inv;
    return x;
}

PolyVec powmod(const PolyVec& base, long long e, const PolyVec& m) {
    if (e < 0) throw Error(ErrorCode::Domain, "negative exponent");
    const FieldPtr& f = m.back().field();
    PolyVec acc{f->one()};
    PolyVec b = mod(base, m);
    while (e > 0) {
        if (e & 1) acc = mod(mul(acc, b), m);
        b = mod(mul(b, b), m);
        e >>= 1;
    }
    return acc;
}

FieldElement eval(const PolyVec& p, const FieldElement& x, const FieldPtr& field) {
    FieldElement acc = field->zero();
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool is_irreducible(const PolyVec& monic, const FieldPtr& field) {
    PolyVec f = monic;
    trim(f);
    int m = degree(f);
    if (m <= 0) return false;
    if (m == 1) return true;
    if (f.front().is_zero()) return false;  // divisible by X

    const long long q = field->cardinality();
    PolyVec x{field->zero(), field->one()};
    // iterates[k] = X^(q^k) mod f
    std::vector<PolyVec> iterates(m + 1);
    iterates[0] = x;
    for (int k = 1; k <= m; ++k) iterates[k] = powmod(iterates[k - 1], q, f);
    if (iterates[m] != x) return false;
    for (int d = 2; d <= m; ++d) {
        if (m % d != 0) continue;
        bool d_prime = true;
        for (int t = 2; t * t <= d; ++t)
            if (d % t == 0) d_prime = false;
        if (!d_prime) continue;
        PolyVec diff = sub(iterates[m / d], x);
        if (degree(gcd_monic(diff, f)) != 0) return false;
    }
    return true;
}

}  // namespace detail

}  // namespace llpack::gf
