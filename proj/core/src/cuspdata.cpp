#include "llpack/cuspdata.hpp"

#include <algorithm>

namespace llpack::cusp {

const char* family_name(Family f) {
    switch (f) {
        case Family::Symplectic: return "sp";
        case Family::OddOrthogonal: return "o-odd";
        case Family::EvenOrthogonal: return "o-even";
        case Family::Unitary: return "u";
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown family");
}

std::optional<Family> family_from_name(const std::string& s) {
    if (s == "sp" || s == "symplectic") return Family::Symplectic;
    if (s == "o-odd" || s == "odd-orthogonal") return Family::OddOrthogonal;
    if (s == "o-even" || s == "even-orthogonal") return Family::EvenOrthogonal;
    if (s == "u" || s == "unitary") return Family::Unitary;
    return std::nullopt;
}

int FiniteGroupKind::dual_size() const {
    if (n == 0) return 0;
    switch (family) {
        case Family::Symplectic: return 2 * n + 1;
        case Family::OddOrthogonal: return 2 * n;
        case Family::EvenOrthogonal: return 2 * n;
        case Family::Unitary: return n;
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown family");
}

bool FiniteGroupKind::operator==(const FiniteGroupKind& o) const {
    if (family != o.family || n != o.n) return false;
    if (family == Family::EvenOrthogonal && delta != o.delta) return false;
    if (family == Family::Unitary && q_bullet != o.q_bullet) return false;
    return true;
}

void CuspidalLabel::normalize() {
    std::erase_if(deep, [](const DeepEntry& e) { return e.m == 0; });
    std::sort(deep.begin(), deep.end(),
              [](const DeepEntry& a, const DeepEntry& b) { return a.poly < b.poly; });
    if (kind.family == Family::OddOrthogonal && !eps) eps = +1;
    if (kind.family == Family::EvenOrthogonal) kind.delta = derived_delta();
}

int CuspidalLabel::deep_m(const MonicPoly& p) const {
    for (const auto& e : deep)
        if (e.poly == p) return e.m;
    return 0;
}

int CuspidalLabel::derived_delta() const { return (m_plus + m_minus) % 2 == 0 ? +1 : -1; }

bool CuspidalLabel::same_abs_data(const CuspidalLabel& o) const {
    return kind.family == o.kind.family && std::abs(m_plus) == std::abs(o.m_plus) &&
           std::abs(m_minus) == std::abs(o.m_minus) && deep == o.deep;
}

bool CuspidalLabel::operator==(const CuspidalLabel& o) const {
    return kind == o.kind && m_plus == o.m_plus && m_minus == o.m_minus && deep == o.deep &&
           eps == o.eps && split_sign == o.split_sign;
}

bool TypeDatum::operator==(const TypeDatum& o) const {
    return gl_poly == o.gl_poly && rho_y == o.rho_y && rho_z == o.rho_z &&
           inner_form == o.inner_form;
}

namespace {

long long sq(long long m) { return m * m; }

// N for the eigenvalue +1 (resp. -1), the X-1 (resp. X+1) block of the dual
// semisimple datum.
long long quadratic_N(Family family, bool plus, int m) {
    switch (family) {
        case Family::Symplectic:
            if (plus) {
                if (m < 0) throw Error(ErrorCode::SignDomain, "symplectic m_+ must be >= 0");
                return 2 * (sq(m) + m) + 1;
            }
            return 2 * sq(m);
        case Family::OddOrthogonal:
            if (m < 0) throw Error(ErrorCode::SignDomain, "odd-orthogonal m_+- must be >= 0");
            return 2 * (sq(m) + m);
        case Family::EvenOrthogonal:
            return 2 * sq(m);
        case Family::Unitary:
            throw Error(ErrorCode::SignDomain, "unitary labels have no quadratic entries");
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown family");
}

}  // namespace

long long multiplicity_N(const FiniteGroupKind& kind, const Eigen& eigen, int m) {
    if (eigen.tag == Eigen::Poly) {
        if (m < 0) throw Error(ErrorCode::SignDomain, "deep multiplicity must be >= 0");
        return static_cast<long long>(m) * (m + 1) / 2;
    }
    return quadratic_N(kind.family, eigen.tag == Eigen::PlusOne, m);
}

long long label_dual_size(const CuspidalLabel& label) {
    long long total = 0;
    if (label.kind.family != Family::Unitary) {
        total += multiplicity_N(label.kind, Eigen::plus_one(), label.m_plus);
        total += multiplicity_N(label.kind, Eigen::minus_one(), label.m_minus);
    }
    for (const auto& e : label.deep)
        total += static_cast<long long>(e.poly.degree()) *
                 multiplicity_N(label.kind, Eigen::of_poly(e.poly), e.m);
    return total;
}

namespace {

// Infer the conjugation base for the deep polynomials of a unitary label:
// prefer the kind's q_bullet, otherwise split the field degree.
std::optional<poly::DualityKind> unitary_duality(const CuspidalLabel& label,
                                                 const gf::FieldPtr& field) {
    if (label.kind.q_bullet > 0) return poly::DualityKind::conjugate(label.kind.q_bullet);
    int e = field->degree_over_prime();
    if (e % 2 != 0) return std::nullopt;
    long long qb = 1;
    for (int i = 0; i < e / 2; ++i) qb *= field->characteristic();
    return poly::DualityKind::conjugate(qb);
}

}  // namespace

Violations validate_label(const CuspidalLabel& label, long long ambient_dim) {
    Violations out;
    const Family fam = label.kind.family;

    if (ambient_dim < 1)
        out.push_back({ErrorCode::Domain, "ambient dimension must be positive"});

    // Sign domains.
    if (fam == Family::Unitary && (label.m_plus != 0 || label.m_minus != 0))
        out.push_back({ErrorCode::SignDomain, "unitary labels take no m_+ / m_- entries"});
    if (fam == Family::Symplectic && label.m_plus < 0)
        out.push_back({ErrorCode::SignDomain, "symplectic m_+ must be >= 0"});
    if (fam == Family::OddOrthogonal && (label.m_plus < 0 || label.m_minus < 0))
        out.push_back({ErrorCode::SignDomain, "odd-orthogonal m_+ and m_- must be >= 0"});

    // Tags.
    if (fam == Family::OddOrthogonal) {
        if (!label.eps)
            out.push_back({ErrorCode::Shape, "odd-orthogonal label needs an extension sign"});
        else if (*label.eps != 1 && *label.eps != -1)
            out.push_back({ErrorCode::Shape, "extension sign must be +1 or -1"});
    } else if (label.eps) {
        out.push_back({ErrorCode::Shape, "extension sign only applies to odd-orthogonal labels"});
    }
    if (label.split_sign) {
        if (fam != Family::EvenOrthogonal || label.m_plus != 0 || label.m_minus != 0)
            out.push_back(
                {ErrorCode::Shape, "splitting sign only applies to even-orthogonal (0,0) labels"});
        else if (*label.split_sign != 1 && *label.split_sign != -1)
            out.push_back({ErrorCode::Shape, "splitting sign must be +1 or -1"});
    }
    if (fam == Family::EvenOrthogonal && label.kind.delta != label.derived_delta())
        out.push_back({ErrorCode::Inconsistent,
                       "even-orthogonal discriminant type must equal (-1)^(m_+ + m_-)"});

    // Deep part.
    for (size_t i = 0; i < label.deep.size(); ++i) {
        const auto& e = label.deep[i];
        if (e.m <= 0) {
            out.push_back({ErrorCode::Shape, "deep multiplicities must be positive"});
            continue;
        }
        for (size_t j = i + 1; j < label.deep.size(); ++j)
            if (label.deep[j].poly == e.poly)
                out.push_back({ErrorCode::Shape, "duplicate deep polynomial " + e.poly.to_string()});
        if (!poly::is_irreducible(e.poly)) {
            out.push_back({ErrorCode::Shape, "deep polynomial not irreducible: " + e.poly.to_string()});
            continue;
        }
        if (fam == Family::Unitary) {
            auto duality = unitary_duality(label, e.poly.field());
            if (!duality)
                out.push_back({ErrorCode::Domain,
                               "unitary deep polynomial field has no quadratic subfield"});
            else if (!poly::is_self_dual(e.poly, *duality))
                out.push_back({ErrorCode::Shape,
                               "deep polynomial not conjugate-self-dual: " + e.poly.to_string()});
        } else {
            if (e.poly.degree() <= 1) {
                out.push_back({ErrorCode::Shape,
                               "deep polynomials must have degree > 1: " + e.poly.to_string()});
            } else if (!poly::is_self_dual(e.poly, poly::DualityKind::plain())) {
                out.push_back(
                    {ErrorCode::Shape, "deep polynomial not self-dual: " + e.poly.to_string()});
            }
        }
    }

    // Dimension accounting (only meaningful once sign domains hold).
    bool signs_ok = std::none_of(out.begin(), out.end(), [](const Violation& v) {
        return v.code == ErrorCode::SignDomain || v.code == ErrorCode::Shape;
    });
    if (signs_ok) {
        long long total = label_dual_size(label);
        if (total != ambient_dim)
            out.push_back({ErrorCode::Inconsistent,
                           "dual datum has size " + std::to_string(total) + ", expected " +
                               std::to_string(ambient_dim)});
        if (label.kind.n > 0 && label.kind.dual_size() != ambient_dim)
            out.push_back({ErrorCode::Inconsistent, "group kind does not match ambient dimension"});
    }
    return out;
}

void require_valid(const CuspidalLabel& label, long long ambient_dim) {
    auto v = validate_label(label, ambient_dim);
    if (!v.empty()) throw Error(v.front().code, v.front().message);
}

std::vector<CuspidalLabel> companions(const CuspidalLabel& label) {
    CuspidalLabel base = label;
    base.normalize();

    std::vector<CuspidalLabel> out;
    auto push = [&out](CuspidalLabel l) {
        if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(std::move(l));
    };

    switch (base.kind.family) {
        case Family::Unitary:
            push(base);
            break;
        case Family::OddOrthogonal:
            for (int e : {+1, -1}) {
                CuspidalLabel l = base;
                l.eps = e;
                push(l);
            }
            break;
        case Family::Symplectic:
            for (int s : {+1, -1}) {
                CuspidalLabel l = base;
                l.m_minus = s * std::abs(base.m_minus);
                push(l);
            }
            break;
        case Family::EvenOrthogonal:
            for (int sp : {+1, -1})
                for (int sm : {+1, -1}) {
                    CuspidalLabel l = base;
                    l.m_plus = sp * std::abs(base.m_plus);
                    l.m_minus = sm * std::abs(base.m_minus);
                    push(l);
                }
            break;
    }
    return out;
}

bool is_typically_almost_symmetric(const TypeDatum& datum) {
    return datum.rho_y.same_abs_data(datum.rho_z);
}

std::vector<TypeDatum> enumerate_type_data(Family family, int abs_m_plus, int abs_m_minus,
                                           const std::vector<DeepEntry>& deep) {
    if (abs_m_plus < 0 || abs_m_minus < 0)
        throw Error(ErrorCode::SignDomain, "absolute multiplicities must be >= 0");
    if (family == Family::Unitary && (abs_m_plus != 0 || abs_m_minus != 0))
        throw Error(ErrorCode::SignDomain, "unitary labels take no m_+ / m_- entries");

    CuspidalLabel base;
    base.kind.family = family;
    base.m_plus = abs_m_plus;
    base.m_minus = abs_m_minus;
    base.deep = deep;
    base.normalize();

    auto cls = companions(base);
    std::vector<int> forms =
        family == Family::OddOrthogonal ? std::vector<int>{+1, -1} : std::vector<int>{+1};

    std::vector<TypeDatum> out;
    for (const auto& y : cls)
        for (const auto& z : cls)
            for (int inf : forms) out.push_back({std::nullopt, y, z, inf});
    return out;
}

}  // namespace llpack::cusp
