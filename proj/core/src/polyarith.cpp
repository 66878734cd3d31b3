#include "llpack/polyarith.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace llpack::poly {

namespace pv = gf::detail;

namespace {
constexpr long long kEnumCap = 1'000'000;  // q^degree bound for enumeration
}

// ---------------------------------------------------------------------------
// DualityKind

void DualityKind::check_field(const FieldPtr& field) const {
    if (!field) throw Error(ErrorCode::Domain, "null field");
    if (tag == Plain) return;
    if (q_bullet < 3 || q_bullet * q_bullet != field->cardinality())
        throw Error(ErrorCode::Domain, "Conjugate duality needs field cardinality q_bullet^2");
}

FieldElement DualityKind::conj(const FieldElement& x) const {
    if (tag == Plain) return x;
    return x.pow(q_bullet);
}

// ---------------------------------------------------------------------------
// MonicPoly

MonicPoly::MonicPoly(FieldPtr field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw Error(ErrorCode::Domain, "null field");
    for (const auto& c : coeffs_)
        if (!c.field() || c.field().get() != field_.get())
            throw Error(ErrorCode::FieldMismatch, "coefficient outside the base field");
    pv::trim(coeffs_);
    if (coeffs_.empty() || coeffs_.back() != field_->one())
        throw Error(ErrorCode::Domain, "polynomial is not monic");
}

MonicPoly MonicPoly::x_minus(const FieldElement& root) {
    const FieldPtr& f = root.field();
    return MonicPoly(f, {-root, f->one()});
}

MonicPoly MonicPoly::from_integers(const FieldPtr& field, const std::vector<long long>& coeffs) {
    std::vector<FieldElement> cs;
    cs.reserve(coeffs.size());
    for (long long c : coeffs) cs.push_back(field->from_integer(c));
    return MonicPoly(field, std::move(cs));
}

FieldElement MonicPoly::eval(const FieldElement& x) const {
    return pv::eval(coeffs_, x, field_);
}

bool MonicPoly::operator==(const MonicPoly& o) const {
    return field_.get() == o.field_.get() && coeffs_ == o.coeffs_;
}

std::vector<long long> MonicPoly::key() const {
    std::vector<long long> k{degree()};
    for (const auto& c : coeffs_) k.push_back(c.index());
    return k;
}

bool MonicPoly::operator<(const MonicPoly& o) const {
    if (field_.get() != o.field_.get())
        throw Error(ErrorCode::FieldMismatch, "comparing polynomials over different fields");
    return key() < o.key();
}

// ---------------------------------------------------------------------------
// String form: sum of terms c*X^k, highest degree first; nontrivial
// extension-field coefficients are parenthesized polynomials in t.

static std::string elem_to_string(const FieldElement& x) {
    if (x.field()->is_prime_field()) return std::to_string(x.residue());
    const auto& cs = x.coords();
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
        if (cs[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string c = elem_to_string(cs[i]);
        if (i == 0) {
            os << c;
        } else {
            if (c != "1") os << c << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

std::string MonicPoly::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const FieldElement& c = coeffs_[i];
        if (c.is_zero() && !(first && degree() == 0)) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = elem_to_string(c);
        bool needs_parens = cs.find('+') != std::string::npos || cs.find('t') != std::string::npos;
        if (i == 0) {
            if (needs_parens)
                os << "(" << cs << ")";
            else
                os << cs;
        } else {
            if (cs != "1") {
                if (needs_parens)
                    os << "(" << cs << ")*";
                else
                    os << cs << "*";
            }
            os << "X";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "1";
    return os.str();
}

namespace {

// Minimal recursive-descent parser for the CLI polynomial syntax:
// sum of terms; term = [coef *] X[^k] | coef; coef = INT | t-expr | "(" sum-of-t ")".
struct PolyParser {
    const FieldPtr& field;
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) {
        throw Error(ErrorCode::Domain, "polynomial parse error at position " +
                                           std::to_string(pos) + ": " + why);
    }

    long long parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stoll(s.substr(start, pos - start));
    }

    // Power of the given variable symbol ('t' or 'X'); assumes symbol consumed.
    int parse_exponent() {
        if (eat('^')) return static_cast<int>(parse_int());
        return 1;
    }

    // t-polynomial over the prime subfield, as a field element.
    FieldElement parse_t_sum() {
        FieldElement acc = field->zero();
        while (true) {
            FieldElement term = parse_t_term();
            acc = acc + term;
            skip_ws();
            if (!eat('+')) break;
        }
        return acc;
    }

    FieldElement parse_t_term() {
        skip_ws();
        FieldElement coef = field->one();
        bool have_coef = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef = field->from_integer(parse_int());
            have_coef = true;
            skip_ws();
            if (!eat('*')) return coef;
            skip_ws();
        }
        if (pos < s.size() && s[pos] == 't') {
            ++pos;
            int e = parse_exponent();
            if (field->is_prime_field()) fail("'t' used over a prime field");
            return coef * field->generator().pow(e);
        }
        if (have_coef) return coef;
        fail("expected coefficient term");
    }

    // One summand of the polynomial: coefficient element and X-power.
    std::pair<FieldElement, int> parse_term() {
        skip_ws();
        FieldElement coef = field->one();
        bool have_coef = false;
        if (eat('(')) {
            coef = parse_t_sum();
            if (!eat(')')) fail("expected ')'");
            have_coef = true;
            skip_ws();
            eat('*');
        } else if (pos < s.size() &&
                   (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == 't')) {
            coef = parse_t_term();
            have_coef = true;
            skip_ws();
            if (!eat('*')) {
                skip_ws();
                if (pos >= s.size() || s[pos] != 'X') return {coef, 0};
            }
        }
        skip_ws();
        if (pos < s.size() && s[pos] == 'X') {
            ++pos;
            return {coef, parse_exponent()};
        }
        if (have_coef) return {coef, 0};
        fail("expected term");
    }

    MonicPoly parse() {
        std::vector<std::pair<FieldElement, int>> terms;
        int maxdeg = 0;
        while (true) {
            auto t = parse_term();
            maxdeg = std::max(maxdeg, t.second);
            terms.push_back(std::move(t));
            skip_ws();
            if (pos >= s.size()) break;
            if (!eat('+')) fail("expected '+'");
        }
        std::vector<FieldElement> cs(maxdeg + 1, field->zero());
        for (auto& [c, e] : terms) cs[e] = cs[e] + c;
        return MonicPoly(field, std::move(cs));
    }
};

}  // namespace

MonicPoly MonicPoly::parse(const FieldPtr& field, const std::string& text) {
    PolyParser p{field, text};
    return p.parse();
}

// ---------------------------------------------------------------------------
// Irreducibility / duality

bool is_irreducible(const MonicPoly& p) {
    if (p.degree() < 1) throw Error(ErrorCode::Domain, "irreducibility needs degree >= 1");
    return pv::is_irreducible(p.coeffs(), p.field());
}

MonicPoly dual_poly(const MonicPoly& p, const DualityKind& kind) {
    kind.check_field(p.field());
    const int n = p.degree();
    if (n < 1) throw Error(ErrorCode::Domain, "dual needs degree >= 1");
    if (p.coeff(0).is_zero())
        throw Error(ErrorCode::ZeroConstantTerm, "0 may not be an eigenvalue");
    FieldElement c0inv = kind.conj(p.coeff(0)).inverse();
    std::vector<FieldElement> out(n + 1, p.field()->zero());
    for (int j = 0; j <= n; ++j) out[j] = kind.conj(p.coeff(n - j)) * c0inv;
    return MonicPoly(p.field(), std::move(out));
}

bool is_self_dual(const MonicPoly& p, const DualityKind& kind) {
    return dual_poly(p, kind) == p;
}

std::vector<MonicPoly> enumerate_self_dual_irreducible(const FieldPtr& field, int degree,
                                                       const DualityKind& kind,
                                                       bool allow_degree_one) {
    if (!field) throw Error(ErrorCode::Domain, "null field");
    if (degree < 1) throw Error(ErrorCode::Domain, "degree must be positive");
    kind.check_field(field);
    long long size = 1;
    for (int i = 0; i < degree; ++i) {
        size *= field->cardinality();
        if (size > kEnumCap) throw Error(ErrorCode::CapExceeded, "q^degree above enumeration cap");
    }

    std::set<std::vector<long long>> seen;
    std::vector<MonicPoly> out;
    auto consider = [&](MonicPoly p) {
        if (!seen.insert(p.key()).second) return;
        if (!is_self_dual(p, kind)) return;
        if (kind.tag == DualityKind::Plain && degree == 1 && !allow_degree_one) return;
        out.push_back(std::move(p));
    };

    if (degree == 1) {
        for (const auto& s : field->all_elements()) {
            if (s.is_zero()) continue;
            consider(MonicPoly::x_minus(s));
        }
    } else {
        // Roots live in the degree-m extension; each candidate is the minimal
        // polynomial of an element with full Frobenius orbit.
        FieldPtr ext = field->extension(degree);
        const long long q = field->cardinality();
        for (const auto& x : ext->all_elements()) {
            if (x.is_zero()) continue;
            std::vector<FieldElement> orbit{x};
            FieldElement cur = x.pow(q);
            while (cur != x) {
                orbit.push_back(cur);
                cur = cur.pow(q);
            }
            if (static_cast<int>(orbit.size()) != degree) continue;
            gf::detail::PolyVec prod{ext->one()};
            for (const auto& r : orbit) prod = gf::detail::mul(prod, {-r, ext->one()});
            std::vector<FieldElement> coeffs;
            coeffs.reserve(prod.size());
            for (const auto& c : prod) {
                // Frobenius-fixed coefficients are constant in the tower.
                const auto& cc = c.coords();
                for (size_t i = 1; i < cc.size(); ++i)
                    if (!cc[i].is_zero())
                        throw Error(ErrorCode::InternalInconsistency,
                                    "minimal-polynomial coefficient outside the base field");
                coeffs.push_back(cc[0]);
            }
            consider(MonicPoly(field, std::move(coeffs)));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace llpack::poly
