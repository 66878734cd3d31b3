#include "llpack/classify.hpp"

#include <algorithm>
#include <tuple>

namespace llpack::cls {

using cusp::CuspidalLabel;
using cusp::Family;
using par::Disc;
using par::PFamily;

namespace {

PFamily parameter_family_of(Family fam) {
    switch (fam) {
        case Family::Symplectic: return PFamily::Symplectic;
        case Family::OddOrthogonal:
        case Family::EvenOrthogonal: return PFamily::EvenOrthogonal;
        case Family::Unitary: return PFamily::Unitary;
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown family");
}

int derived_n(PFamily fam, long long deg) {
    switch (fam) {
        case PFamily::Symplectic: return static_cast<int>((deg - 1) / 2);
        case PFamily::EvenOrthogonal: return static_cast<int>(deg / 2);
        case PFamily::Unitary: return static_cast<int>(deg);
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown parameter family");
}

void pin_size(Parameter& phi, const PGroupKind& ambient) {
    long long deg = par::parameter_degree(phi);
    int n = derived_n(ambient.family, deg);
    if (ambient.n != 0 && ambient.n != n)
        throw Error(ErrorCode::Inconsistent,
                    "parameter degree " + std::to_string(deg) + " does not fit an ambient group of size " +
                        std::to_string(ambient.n));
    phi.kind.n = n;
}

}  // namespace

Parameter type_to_parameter(const TypeDatum& datum, const PGroupKind& ambient) {
    if (!cusp::is_typically_almost_symmetric(datum))
        throw Error(ErrorCode::NotSupported, "datum is not typically almost symmetric");

    const CuspidalLabel& y = datum.rho_y;
    const CuspidalLabel& z = datum.rho_z;
    const Family fam = y.kind.family;
    if (parameter_family_of(fam) != ambient.family)
        throw Error(ErrorCode::Domain, "ambient group family does not match the datum");

    Parameter phi;
    phi.kind = ambient;
    for (const auto& e : y.deep)
        if (e.m > 0) phi.deep.push_back({e.poly, 2 * e.m, -1});

    switch (fam) {
        case Family::Symplectic: {
            if (y.m_plus < 0)
                throw Error(ErrorCode::SignDomain, "symplectic m_+ must be >= 0");
            int a = 4 * y.m_plus + 1;
            int v = 4 * std::abs(y.m_minus) - 1;
            phi.a = a;
            if (y.m_minus == z.m_minus)
                phi.c = v;
            else
                phi.d = v;
            break;
        }
        case Family::EvenOrthogonal: {
            if (ambient.disc != Disc::One)
                throw Error(ErrorCode::Inconsistent,
                            "even-even data induce to the trivial discriminant class");
            int va = 4 * std::abs(y.m_plus) - 1;
            int vc = 4 * std::abs(y.m_minus) - 1;
            (y.m_plus != z.m_plus ? phi.b : phi.a) = va;
            (y.m_minus != z.m_minus ? phi.d : phi.c) = vc;
            break;
        }
        case Family::OddOrthogonal: {
            if (y.m_plus < 0 || y.m_minus < 0)
                throw Error(ErrorCode::SignDomain, "odd-orthogonal m_+- must be >= 0");
            int va = 4 * y.m_plus + 1;
            int vc = 4 * y.m_minus + 1;
            bool flip = y.eps.value_or(+1) != z.eps.value_or(+1);
            if (ambient.disc == Disc::Varpi) {
                (flip ? phi.b : phi.a) = va;
                (flip ? phi.d : phi.c) = vc;
            } else if (ambient.disc == Disc::ZetaVarpi) {
                if (flip) {
                    phi.b = va;
                    phi.c = vc;
                } else {
                    phi.a = va;
                    phi.d = vc;
                }
            } else {
                throw Error(ErrorCode::Inconsistent,
                            "odd-odd data induce to a ramified discriminant class");
            }
            break;
        }
        case Family::Unitary:
            break;
    }

    pin_size(phi, ambient);
    phi.normalize();
    par::require_valid(phi);
    return phi;
}

namespace {

// Value and placement of a typically-almost-symmetric slot pair: exactly one
// of the two entries may exceed -1; in_second records which slot holds it.
struct SlotPair {
    int value = -1;
    bool in_second = false;
};

SlotPair read_pair(int first, int second) {
    if (first > -1 && second > -1)
        throw Error(ErrorCode::NotTypicallySymmetric,
                    "both entries of a quadratic pair are present");
    if (second > -1) return {second, true};
    return {first, false};
}

int m_from(int value, int offset) {
    // value = 4m + offset with m >= 0; -1 always means m = 0 when offset = -1.
    if ((value - offset) % 4 != 0 || value < offset)
        throw Error(ErrorCode::NotTypicallySymmetric,
                    "quadratic multiplicity " + std::to_string(value) +
                        " is not of the tabulated residue");
    return (value - offset) / 4;
}

void push_unique(std::vector<TypeDatum>& out, TypeDatum d) {
    if (std::find(out.begin(), out.end(), d) == out.end()) out.push_back(std::move(d));
}

std::vector<cusp::DeepEntry> deep_of(const Parameter& phi) {
    std::vector<cusp::DeepEntry> deep;
    for (const auto& p : phi.deep) {
        if (p.b_phi != -1 || p.a_phi < 0 || p.a_phi % 2 != 0)
            throw Error(ErrorCode::NotTypicallySymmetric,
                        "deep pair (" + std::to_string(p.a_phi) + "," + std::to_string(p.b_phi) +
                            ") is not of the form (2m,-1)");
        if (p.a_phi > 0) deep.push_back({p.poly, p.a_phi / 2});
    }
    return deep;
}

}  // namespace

std::vector<TypeDatum> parameter_to_types(const PGroupKind& ambient, const Parameter& phi) {
    if (phi.kind.family != ambient.family ||
        (ambient.family == PFamily::EvenOrthogonal && phi.kind.disc != ambient.disc))
        throw Error(ErrorCode::Domain, "ambient group does not match the parameter kind");

    Parameter pinned = phi;
    pin_size(pinned, ambient);
    par::require_valid(pinned);

    auto deep = deep_of(pinned);
    std::vector<TypeDatum> out;

    if (ambient.family == PFamily::Unitary) {
        CuspidalLabel l;
        l.kind.family = Family::Unitary;
        l.deep = deep;
        l.normalize();
        out.push_back({std::nullopt, l, l, +1});
        return out;
    }

    SlotPair ab = read_pair(pinned.a, pinned.b);
    SlotPair cd = read_pair(pinned.c, pinned.d);

    if (ambient.family == PFamily::Symplectic) {
        if (ab.in_second)
            throw Error(ErrorCode::NotTypicallySymmetric,
                        "symplectic parameters carry the unramified part on the first slot");
        int m_plus = m_from(ab.value, 1);
        int m_minus = m_from(cd.value, -1);
        auto label = [&](int mm) {
            CuspidalLabel l;
            l.kind.family = Family::Symplectic;
            l.m_plus = m_plus;
            l.m_minus = mm;
            l.deep = deep;
            l.normalize();
            return l;
        };
        for (int s : {+1, -1}) {
            CuspidalLabel ly = label(s * m_minus);
            CuspidalLabel lz = label(cd.in_second ? -s * m_minus : s * m_minus);
            push_unique(out, {std::nullopt, ly, lz, +1});
        }
        return out;
    }

    // Even orthogonal ambient: the discriminant class separates the two
    // finite-group shapes.
    if (ambient.disc == Disc::One) {
        int m_plus = m_from(ab.value, -1);
        int m_minus = m_from(cd.value, -1);
        auto label = [&](int mp, int mm) {
            CuspidalLabel l;
            l.kind.family = Family::EvenOrthogonal;
            l.m_plus = mp;
            l.m_minus = mm;
            l.deep = deep;
            l.normalize();
            return l;
        };
        for (int sp : {+1, -1})
            for (int sm : {+1, -1}) {
                CuspidalLabel ly = label(sp * m_plus, sm * m_minus);
                CuspidalLabel lz = label(ab.in_second ? -sp * m_plus : sp * m_plus,
                                         cd.in_second ? -sm * m_minus : sm * m_minus);
                push_unique(out, {std::nullopt, ly, lz, +1});
            }
        return out;
    }

    if (ambient.disc != Disc::Varpi && ambient.disc != Disc::ZetaVarpi)
        throw Error(ErrorCode::NotTypicallySymmetric,
                    "no almost-symmetric data for the unramified-twist discriminant class");

    // Odd-odd: placement consistency is forced by the discriminant class.
    bool flip = ab.in_second;
    bool expect_cd_second = ambient.disc == Disc::Varpi ? flip : !flip;
    if (cd.in_second != expect_cd_second)
        throw Error(ErrorCode::InternalInconsistency,
                    "slot placement disagrees with the discriminant class");
    int m_plus = m_from(ab.value, 1);
    int m_minus = m_from(cd.value, 1);
    auto label = [&](int e) {
        CuspidalLabel l;
        l.kind.family = Family::OddOrthogonal;
        l.m_plus = m_plus;
        l.m_minus = m_minus;
        l.deep = deep;
        l.eps = e;
        l.normalize();
        return l;
    };
    for (int e : {+1, -1})
        for (int inf : {+1, -1})
            push_unique(out, {std::nullopt, label(e), label(flip ? -e : e), inf});
    return out;
}

namespace {

TypeDatum global_flip(const TypeDatum& datum) {
    TypeDatum d = datum;
    for (CuspidalLabel* l : {&d.rho_y, &d.rho_z}) {
        if (l->kind.family == Family::OddOrthogonal) {
            l->eps = -l->eps.value_or(+1);
        } else {
            l->m_plus = -l->m_plus;
            l->m_minus = -l->m_minus;
        }
        l->normalize();
    }
    return d;
}

std::tuple<int, int, int, int, int, int, int> datum_key(const TypeDatum& d) {
    return {d.rho_y.m_plus,  d.rho_y.m_minus, d.rho_y.eps.value_or(+1), d.rho_z.m_plus,
            d.rho_z.m_minus, d.rho_z.eps.value_or(+1), d.inner_form};
}

}  // namespace

DescendResult connected_descend(const Parameter& phi, const std::vector<TypeDatum>& data) {
    if (phi.kind.family != PFamily::EvenOrthogonal)
        throw Error(ErrorCode::Domain, "connected descent applies to even orthogonal groups only");

    DescendResult res;
    res.phi0 = phi;
    res.exceptional = phi.kind.disc == Disc::One && phi.a == -1 && phi.b == -1 && phi.c == -1 &&
                      phi.d == -1;

    if (res.exceptional) {
        // The restriction of the unique datum splits into rho_+ and rho_-;
        // only the union of the two packets can be associated with them.
        for (const auto& d : data)
            for (int sign : {+1, -1}) res.entries.push_back({d, sign});
        return res;
    }

    for (const auto& d : data) {
        TypeDatum f = global_flip(d);
        res.entries.push_back({d, datum_key(d) <= datum_key(f) ? +1 : -1});
    }
    return res;
}

std::vector<TableRow> packet_table(cusp::Family family, const GridBounds& bounds) {
    std::vector<TableRow> rows;
    if (bounds.max_m < 0) return rows;

    std::vector<PGroupKind> ambients;
    switch (family) {
        case Family::Symplectic: ambients = {PGroupKind::symplectic(0)}; break;
        case Family::EvenOrthogonal: ambients = {PGroupKind::even_orthogonal(0, Disc::One)}; break;
        case Family::OddOrthogonal:
            ambients = {PGroupKind::even_orthogonal(0, Disc::Varpi),
                        PGroupKind::even_orthogonal(0, Disc::ZetaVarpi)};
            break;
        case Family::Unitary: ambients = {PGroupKind::unitary(0)}; break;
    }

    // All deep multiplicity assignments on the listed polynomials.
    std::vector<std::vector<cusp::DeepEntry>> deeps{{}};
    for (const auto& p : bounds.polys) {
        std::vector<std::vector<cusp::DeepEntry>> next;
        for (const auto& base : deeps)
            for (int m = 0; m <= bounds.max_deep_m; ++m) {
                auto d = base;
                if (m > 0) d.push_back({p, m});
                next.push_back(std::move(d));
            }
        deeps = std::move(next);
    }

    int quad_max = family == Family::Unitary ? 0 : bounds.max_m;
    for (const auto& ambient : ambients)
        for (int mp = 0; mp <= quad_max; ++mp)
            for (int mm = 0; mm <= quad_max; ++mm)
                for (const auto& deep : deeps) {
                    auto data = cusp::enumerate_type_data(family, mp, mm, deep);
                    std::vector<TableRow> local;
                    for (const auto& datum : data) {
                        Parameter phi = type_to_parameter(datum, ambient);
                        auto it = std::find_if(local.begin(), local.end(),
                                               [&](const TableRow& r) { return r.phi == phi; });
                        if (it == local.end())
                            local.push_back({std::move(phi), {datum}});
                        else
                            it->types.push_back(datum);
                    }
                    for (auto& r : local) rows.push_back(std::move(r));
                }
    return rows;
}

}  // namespace llpack::cls
