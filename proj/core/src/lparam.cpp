#include "llpack/lparam.hpp"

#include <algorithm>

namespace llpack::par {

const char* pfamily_name(PFamily f) {
    switch (f) {
        case PFamily::Symplectic: return "sp";
        case PFamily::EvenOrthogonal: return "o-even";
        case PFamily::Unitary: return "u";
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown parameter family");
}

std::optional<PFamily> pfamily_from_name(const std::string& s) {
    if (s == "sp" || s == "symplectic") return PFamily::Symplectic;
    if (s == "o-even" || s == "even-orthogonal") return PFamily::EvenOrthogonal;
    if (s == "u" || s == "unitary") return PFamily::Unitary;
    return std::nullopt;
}

const char* disc_name(Disc d) {
    switch (d) {
        case Disc::One: return "1";
        case Disc::Zeta: return "zeta";
        case Disc::Varpi: return "varpi";
        case Disc::ZetaVarpi: return "zeta*varpi";
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown discriminant class");
}

std::optional<Disc> disc_from_name(const std::string& s) {
    if (s == "1") return Disc::One;
    if (s == "zeta") return Disc::Zeta;
    if (s == "varpi") return Disc::Varpi;
    if (s == "zeta*varpi" || s == "zeta-varpi") return Disc::ZetaVarpi;
    return std::nullopt;
}

int PGroupKind::degree() const {
    switch (family) {
        case PFamily::Symplectic: return 2 * n + 1;
        case PFamily::EvenOrthogonal: return 2 * n;
        case PFamily::Unitary: return n;
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown parameter family");
}

bool PGroupKind::operator==(const PGroupKind& o) const {
    if (family != o.family || n != o.n) return false;
    if (family == PFamily::EvenOrthogonal && disc != o.disc) return false;
    return true;
}

long long st_block_dim(int a) {
    if (a <= 0) return 0;
    long long h = a % 2 != 0 ? (a + 1) / 2 : a / 2;
    return a % 2 != 0 ? h * h : h * (h + 1);
}

int st_block_count(int a) { return a <= 0 ? 0 : (a + 1) / 2; }

void Parameter::normalize() {
    std::erase_if(deep, [](const DeepPair& p) {
        return st_block_count(p.a_phi) == 0 && st_block_count(p.b_phi) == 0;
    });
    std::sort(deep.begin(), deep.end(),
              [](const DeepPair& x, const DeepPair& y) { return x.poly < y.poly; });
}

std::string Parameter::to_string() const {
    std::string s = "[[";
    if (kind.family != PFamily::Unitary) {
        s += std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + "," +
             std::to_string(d);
        if (!deep.empty()) s += ",";
    }
    for (size_t i = 0; i < deep.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(deep[i].a_phi) + "," + std::to_string(deep[i].b_phi) + ")";
    }
    return s + "]]";
}

bool Parameter::operator==(const Parameter& o) const {
    return kind == o.kind && a == o.a && b == o.b && c == o.c && d == o.d && deep == o.deep;
}

long long parameter_degree(const Parameter& phi) {
    long long total = 0;
    if (phi.kind.family != PFamily::Unitary)
        total += st_block_dim(phi.a) + st_block_dim(phi.b) + st_block_dim(phi.c) +
                 st_block_dim(phi.d);
    for (const auto& p : phi.deep)
        total += static_cast<long long>(p.poly.degree()) *
                 (st_block_dim(p.a_phi) + st_block_dim(p.b_phi));
    return total;
}

namespace {

int mod4(int x) { return ((x % 4) + 4) % 4; }

bool odd_cutoff(int x) { return x >= -1 && x % 2 != 0; }

// det phi = omega_0^((b+d)/2+1) * omega_1^((c+d)/2+1) as a discriminant
// class; omega_0 is the unramified character (zeta), omega_1 the ramified
// one (varpi).
Disc quadratic_det(int b, int c, int d) {
    int e0 = ((b + d) / 2 + 1) % 2 != 0 ? 1 : 0;
    int e1 = ((c + d) / 2 + 1) % 2 != 0 ? 1 : 0;
    if (e0 == 0 && e1 == 0) return Disc::One;
    if (e0 == 1 && e1 == 0) return Disc::Zeta;
    if (e0 == 0 && e1 == 1) return Disc::Varpi;
    return Disc::ZetaVarpi;
}

}  // namespace

Violations validate_parameter(const Parameter& phi) {
    Violations out;
    const PFamily fam = phi.kind.family;

    if (fam == PFamily::Unitary) {
        if (phi.a != -1 || phi.b != -1 || phi.c != -1 || phi.d != -1)
            out.push_back({ErrorCode::Shape, "unitary parameters have no quadratic entries"});
    } else {
        for (int x : {phi.a, phi.b, phi.c, phi.d})
            if (!odd_cutoff(x)) {
                out.push_back({ErrorCode::Shape,
                               "quadratic multiplicities must be odd and >= -1, got " +
                                   std::to_string(x)});
            }
    }

    bool quads_ok =
        fam == PFamily::Unitary ||
        (odd_cutoff(phi.a) && odd_cutoff(phi.b) && odd_cutoff(phi.c) && odd_cutoff(phi.d));

    if (quads_ok && fam == PFamily::Symplectic) {
        // deg is odd, so three of a,b,c,d share a residue mod 4; det phi = 1
        // forces those three to be b, c, d.
        if (mod4(phi.b) != mod4(phi.c) || mod4(phi.c) != mod4(phi.d))
            out.push_back({ErrorCode::Shape, "symplectic parameters need b = c = d mod 4"});
        else if (mod4(phi.a) == mod4(phi.b))
            out.push_back({ErrorCode::Shape, "symplectic parameters need a != b mod 4"});
    }
    if (quads_ok && fam == PFamily::EvenOrthogonal) {
        Disc det = quadratic_det(phi.b, phi.c, phi.d);
        if (det != phi.kind.disc)
            out.push_back({ErrorCode::Inconsistent,
                           std::string("det phi is ") + disc_name(det) +
                               " but the kind's discriminant class is " +
                               disc_name(phi.kind.disc)});
    }

    for (size_t i = 0; i < phi.deep.size(); ++i) {
        const auto& p = phi.deep[i];
        for (size_t j = i + 1; j < phi.deep.size(); ++j)
            if (phi.deep[j].poly == p.poly)
                out.push_back({ErrorCode::Shape, "duplicate deep component " + p.poly.to_string()});
        if (p.a_phi < -1 || p.b_phi < -1) {
            out.push_back({ErrorCode::Shape, "deep multiplicities must be >= -1"});
            continue;
        }
        if ((p.a_phi % 2 + 2) % 2 == (p.b_phi % 2 + 2) % 2) {
            out.push_back({ErrorCode::Shape,
                           "a_phi and b_phi must have opposite parities, got (" +
                               std::to_string(p.a_phi) + "," + std::to_string(p.b_phi) + ")"});
            continue;
        }
        if (fam == PFamily::Unitary) {
            bool a_odd_required = (phi.kind.degree() + p.poly.degree()) % 2 == 0;
            bool a_is_odd = p.a_phi % 2 != 0;
            if (a_is_odd != a_odd_required)
                out.push_back({ErrorCode::Shape,
                               "unitary a_phi parity must match N + deg phi~"});
        } else {
            // phi~ has xi(varpi) = 1, hence symplectic image: a_phi is even.
            if (p.a_phi % 2 != 0)
                out.push_back({ErrorCode::Shape, "a_phi must be even for quadratic kinds"});
            if (p.poly.degree() < 2)
                out.push_back({ErrorCode::Shape,
                               "deep components of quadratic kinds need degree > 1"});
        }
    }

    if (out.empty()) {
        long long deg = parameter_degree(phi);
        if (deg != phi.kind.degree())
            out.push_back({ErrorCode::Inconsistent,
                           "parameter degree " + std::to_string(deg) + " does not match ambient " +
                               std::to_string(phi.kind.degree())});
    }
    return out;
}

void require_valid(const Parameter& phi) {
    auto v = validate_parameter(phi);
    if (!v.empty()) throw Error(v.front().code, v.front().message);
}

std::vector<Parameter> companions(const Parameter& phi) {
    std::vector<Parameter> out;
    auto push = [&out](Parameter p) {
        p.normalize();
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
    };
    if (phi.kind.family == PFamily::Unitary) {
        push(phi);
        return out;
    }
    for (bool swap_ab : {false, true})
        for (bool swap_cd : {false, true}) {
            Parameter q = phi;
            if (swap_ab) std::swap(q.a, q.b);
            if (swap_cd) std::swap(q.c, q.d);
            if (validate_parameter(q).empty()) push(std::move(q));
        }
    return out;
}

long long component_group_size(const Parameter& phi) {
    int r = 0;
    if (phi.kind.family != PFamily::Unitary)
        r += st_block_count(phi.a) + st_block_count(phi.b) + st_block_count(phi.c) +
             st_block_count(phi.d);
    for (const auto& p : phi.deep) r += st_block_count(p.a_phi) + st_block_count(p.b_phi);
    long long size = 1;
    int exponent = phi.kind.family == PFamily::Symplectic ? r - 1 : r;
    for (int i = 0; i < exponent; ++i) size *= 2;
    return size;
}

int k_of(const Parameter& phi, bool count_minus_one) {
    auto counts = [count_minus_one](int x) { return (x > 0 && x % 2 != 0) || (count_minus_one && x == -1); };
    int k = 0;
    if (phi.kind.family != PFamily::Unitary)
        for (int x : {phi.a, phi.b, phi.c, phi.d})
            if (counts(x)) ++k;
    for (const auto& p : phi.deep) {
        if (counts(p.a_phi)) ++k;
        if (counts(p.b_phi)) ++k;
    }
    return k;
}

long long supercuspidal_count(const Parameter& phi, CountVariant variant) {
    int k = k_of(phi);
    int exponent;
    switch (phi.kind.family) {
        case PFamily::Symplectic:
            exponent = k - 1;
            break;
        case PFamily::Unitary:
            exponent = k;
            break;
        case PFamily::EvenOrthogonal:
            if (variant == CountVariant::ConnectedEvenSO) {
                bool exceptional =
                    phi.a == -1 && phi.b == -1 && phi.c == -1 && phi.d == -1;
                exponent = exceptional ? k : k - 1;
            } else {
                exponent = k;
            }
            break;
        default:
            throw Error(ErrorCode::InternalInconsistency, "unknown parameter family");
    }
    if (exponent < 0)
        throw Error(ErrorCode::Domain, "packet count undefined: k(phi) = 0 with halving");
    long long count = 1;
    for (int i = 0; i < exponent; ++i) count *= 2;
    return count;
}

const char* parity_name(Parity p) {
    switch (p) {
        case Parity::Orthogonal: return "orthogonal";
        case Parity::Symplectic: return "symplectic";
        case Parity::ConjOrthogonal: return "conj-orthogonal";
        case Parity::ConjSymplectic: return "conj-symplectic";
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown parity");
}

Parity parity_of_induced(const MonicPoly& p, const DualityKind& kind) {
    if (kind.tag == DualityKind::Conjugate)
        return p.degree() % 2 != 0 ? Parity::ConjOrthogonal : Parity::ConjSymplectic;
    // Plain self-dual: the degree-1 characters are orthogonal; any
    // higher-degree plain self-dual irreducible has even degree and, with
    // xi(varpi) = 1, symplectic image.
    return p.degree() == 1 ? Parity::Orthogonal : Parity::Symplectic;
}

}  // namespace llpack::par
