// Acceptance gate: one pass/fail line per criterion. Exits nonzero if any
// criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "llpack/classify.hpp"
#include "llpack/hecke.hpp"
#include "llpack/json_io.hpp"
#include "llpack/smallgrp.hpp"

using namespace llpack;
using gf::FieldElement;
using gf::FieldPtr;
using gf::GaussValue;
using gf::Rat;
using hecke::QPowerExpr;
using hecke::ReducPoint;
using poly::DualityKind;
using poly::MonicPoly;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what) {
    std::printf("criterion %d: %s - %s\n", n, ok ? "PASS" : "FAIL", what.c_str());
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

FieldPtr field_of(long long q) {
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    for (long long r = q; r > 1; r /= p) ++e;
    auto f = gf::Field::prime(p);
    return e > 1 ? f->extension(e) : f;
}

// ---------------------------------------------------------------------- 1

bool criterion1() {
    bool ok = true;
    for (long long q : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        auto t0 = std::chrono::steady_clock::now();
        auto space = sg::ClassicalSpace::make(sg::SpaceKind::Sp2, gf::Field::prime(q));
        Rat coeff = Rat(q - 1, 2) * Rat(q * q - 1);

        GaussValue diff = sg::difference_sum(space, sg::GlChar::Omega, +1, -1);
        ok = ok && diff == GaussValue(Rat(0), coeff * 2, q);
        ok = ok && sg::difference_sum(space, sg::GlChar::Omega, +1, +1).is_zero();

        GaussValue d_plus = sg::d_sum(space, sg::GlChar::Omega, +1, true);
        GaussValue d_minus = sg::d_sum(space, sg::GlChar::Omega, -1, true);
        QPowerExpr c = sg::c_count(space);
        QPowerExpr b = hecke::b_from_rc(Rat(2), c);
        ok = ok && hecke::nu_from_sums(d_plus, d_minus, 1, b, b).value == -1;
        ok = ok && hecke::nu_from_sums(d_plus, d_plus, 1, b, b).value == +1;

        // d / (|b| deg) = g / sqrt(q): with |b| deg = q^(1/2) (q^2-1) (q-1)/2
        // this is exactly d = g (q-1)/2 (q^2-1).
        ok = ok && d_plus == GaussValue(Rat(0), coeff, q);
        ok = ok && sg::verify_sp4(q).pass;
        ok = ok && seconds_since(t0) < 10.0;
    }
    return ok;
}

// ---------------------------------------------------------------------- 2

bool criterion2() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (long long q : {3LL, 5LL, 7LL, 11LL})
        for (auto kind : {sg::SpaceKind::Sp2, sg::SpaceKind::O2Split, sg::SpaceKind::O2NonSplit}) {
            auto report = sg::verify_similitude_lemma(
                sg::ClassicalSpace::make(kind, gf::Field::prime(q)));
            ok = ok && report.pass;
        }
    ok = ok && sg::verify_similitude_lemma(
                   sg::ClassicalSpace::make(sg::SpaceKind::Sp4, gf::Field::prime(3))).pass;
    return ok && seconds_since(t0) < 60.0;
}

// ---------------------------------------------------------------------- 3

bool criterion3() {
    bool ok = true;
    for (long long q : {3LL, 5LL, 7LL}) {
        auto space = sg::ClassicalSpace::make(sg::SpaceKind::Sp2, gf::Field::prime(q));
        QPowerExpr c = sg::c_count(space);
        ok = ok && c == QPowerExpr::q_power(Rat(3));
        ok = ok && hecke::b_from_rc(Rat(2), c) ==
                       QPowerExpr::q_power(Rat(5, 2)) - QPowerExpr::q_power(Rat(1, 2));
    }
    return ok;
}

// ---------------------------------------------------------------------- 4

std::vector<MonicPoly> brute_filter(const FieldPtr& f, int deg, const DualityKind& kind,
                                    bool allow_deg_one) {
    long long q = f->cardinality();
    long long total = 1;
    for (int i = 0; i < deg; ++i) total *= q;
    std::vector<MonicPoly> out;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<FieldElement> coeffs;
        long long t = idx;
        for (int i = 0; i < deg; ++i) {
            coeffs.push_back(f->element_from_index(t % q));
            t /= q;
        }
        coeffs.push_back(f->one());
        MonicPoly p(f, std::move(coeffs));
        if (p.coeff(0).is_zero()) continue;
        if (!poly::is_irreducible(p)) continue;
        if (!poly::is_self_dual(p, kind)) continue;
        if (kind.tag == DualityKind::Plain && deg == 1 && !allow_deg_one) continue;
        out.push_back(p);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool criterion4() {
    bool ok = true;
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL}) {
        auto f = field_of(q);
        auto got = poly::enumerate_self_dual_irreducible(f, 2, DualityKind::plain(), false);
        ok = ok && got == brute_filter(f, 2, DualityKind::plain(), false);
        ok = ok && static_cast<long long>(got.size()) == (q - 1) / 2;
    }
    for (long long qb : {3LL, 5LL}) {
        auto f = field_of(qb * qb);
        auto kind = DualityKind::conjugate(qb);
        auto got = poly::enumerate_self_dual_irreducible(f, 1, kind, false);
        ok = ok && got == brute_filter(f, 1, kind, false);
        ok = ok && static_cast<long long>(got.size()) == qb + 1;
    }
    return ok;
}

// ---------------------------------------------------------------------- 5

bool criterion5() {
    bool ok = true;
    par::Parameter sp4;
    sp4.kind = par::PGroupKind::symplectic(2);
    sp4.a = 1;
    sp4.c = 3;
    ok = ok && par::supercuspidal_count(sp4) == 2;

    auto p = MonicPoly::from_integers(field_of(9), {2, 1});
    for (int m : {1, 2, 3}) {
        par::Parameter u;
        u.kind = par::PGroupKind::unitary(static_cast<int>(par::st_block_dim(2 * m)));
        u.deep = {par::DeepPair{p, 2 * m, -1}};
        par::require_valid(u);
        ok = ok && par::supercuspidal_count(u) == 1;
    }

    par::Parameter eo;
    eo.kind = par::PGroupKind::even_orthogonal(4, par::Disc::One);
    eo.a = 3;
    eo.c = 3;
    long long total = 0;
    for (const auto& member : par::companions(eo)) total += par::supercuspidal_count(member);
    ok = ok && total == 16;
    return ok;
}

// ---------------------------------------------------------------------- 6, 7

struct GridCase {
    cusp::Family family;
    par::PGroupKind ambient;
    std::vector<MonicPoly> polys;
    int max_m = 3;
    int max_deep_m = 2;
};

std::vector<GridCase> grid_cases() {
    auto f3 = field_of(3);
    auto f9 = field_of(9);
    auto plain2 = poly::enumerate_self_dual_irreducible(f3, 2, DualityKind::plain(), false);
    auto plain4 = poly::enumerate_self_dual_irreducible(f3, 4, DualityKind::plain(), false);
    auto conj1 = poly::enumerate_self_dual_irreducible(f9, 1, DualityKind::conjugate(3), false);
    auto conj3 = poly::enumerate_self_dual_irreducible(f9, 3, DualityKind::conjugate(3), false);
    std::vector<MonicPoly> plain_polys = {plain2.front(), plain4.front()};
    std::vector<MonicPoly> conj_polys = {conj1.front(), conj3.front()};

    using par::Disc;
    using par::PGroupKind;
    return {
        {cusp::Family::Symplectic, PGroupKind::symplectic(0), plain_polys},
        {cusp::Family::EvenOrthogonal, PGroupKind::even_orthogonal(0, Disc::One), plain_polys},
        {cusp::Family::OddOrthogonal, PGroupKind::even_orthogonal(0, Disc::Varpi), plain_polys},
        {cusp::Family::OddOrthogonal, PGroupKind::even_orthogonal(0, Disc::ZetaVarpi), plain_polys},
        {cusp::Family::Unitary, PGroupKind::unitary(0), conj_polys},
    };
}

// Run fn on every companion-class grid point of the case.
template <typename Fn>
bool for_each_grid_point(const GridCase& gc, Fn&& fn) {
    bool ok = true;
    int quad_max = gc.family == cusp::Family::Unitary ? 0 : gc.max_m;
    for (int mp = 0; mp <= quad_max; ++mp)
        for (int mm = 0; mm <= quad_max; ++mm)
            for (int m0 = 0; m0 <= gc.max_deep_m; ++m0)
                for (int m1 = 0; m1 <= gc.max_deep_m; ++m1) {
                    std::vector<cusp::DeepEntry> deep;
                    if (m0 > 0) deep.push_back({gc.polys[0], m0});
                    if (m1 > 0) deep.push_back({gc.polys[1], m1});
                    if (gc.family == cusp::Family::Unitary && deep.empty()) continue;
                    ok = fn(cusp::enumerate_type_data(gc.family, mp, mm, deep)) && ok;
                }
    return ok;
}

bool criterion6() {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const auto& gc : grid_cases()) {
        ok = for_each_grid_point(gc, [&](const std::vector<cusp::TypeDatum>& data) {
            bool good = true;
            std::map<std::string, std::vector<cusp::TypeDatum>> buckets;
            for (const auto& d : data)
                buckets[cls::type_to_parameter(d, gc.ambient).to_string()].push_back(d);
            size_t covered = 0;
            for (const auto& [key, members] : buckets) {
                par::Parameter phi = cls::type_to_parameter(members.front(), gc.ambient);
                good = good && par::validate_parameter(phi).empty();
                auto types = cls::parameter_to_types(phi.kind, phi);
                good = good &&
                       types.size() == static_cast<size_t>(par::supercuspidal_count(phi));
                good = good && types.size() == members.size();
                for (const auto& m : members)
                    good = good && std::find(types.begin(), types.end(), m) != types.end();
                covered += members.size();
            }
            good = good && covered == data.size();
            return good;
        }) && ok;
    }
    return ok && seconds_since(t0) < 30.0;
}

// The pair of parameter multiplicities read off a red set: the real point
// gives 2s-1 on the untwisted line, the pi*i point gives it on the twisted
// line.
std::pair<long long, long long> red_pair(const std::vector<ReducPoint>& pts) {
    Rat real_max(-1), imag_max(-1);
    for (const auto& s : pts) {
        Rat v = s.real.numerator() >= 0 ? s.real : -s.real;
        if (s.imag_units == 0 && v > real_max) real_max = v;
        if (s.imag_units != 0 && v > imag_max) imag_max = v;
    }
    auto to_mult = [](const Rat& v) { return (v * 2 - 1).numerator(); };
    return {to_mult(real_max), to_mult(imag_max)};
}

bool pair_matches(std::pair<long long, long long> got, int x, int y) {
    return (got.first == x && got.second == y) || (got.first == y && got.second == x);
}

bool criterion7() {
    bool ok = true;
    // Moeglin's relation s = (a+1)/2 across the whole grid.
    for (const auto& gc : grid_cases()) {
        ok = for_each_grid_point(gc, [&](const std::vector<cusp::TypeDatum>& data) {
            bool good = true;
            for (const auto& d : data) {
                par::Parameter phi = cls::type_to_parameter(d, gc.ambient);
                if (gc.family != cusp::Family::Unitary) {
                    good = good && pair_matches(red_pair(hecke::red_set(d, hecke::GlBlock::one())),
                                                phi.a, phi.b);
                    good = good &&
                           pair_matches(red_pair(hecke::red_set(d, hecke::GlBlock::omega1())),
                                        phi.c, phi.d);
                }
                for (const auto& p : phi.deep)
                    good = good &&
                           pair_matches(red_pair(hecke::red_set(d, hecke::GlBlock::of_poly(p.poly))),
                                        p.a_phi, p.b_phi);
            }
            return good;
        }) && ok;
    }

    // The displayed sets, verbatim.
    auto points = [](Rat a, int imag_m) {
        std::vector<ReducPoint> out;
        if (a.numerator() == 0) {
            out.push_back({Rat(0), 0, imag_m, false});
            out.push_back({Rat(0), 0, imag_m, true});
        } else {
            out.push_back({a, 0, imag_m, false});
            out.push_back({-a, 0, imag_m, false});
        }
        return out;
    };
    auto with_imag = [](std::vector<ReducPoint> base, Rat a, int imag_m) {
        if (a.numerator() == 0) {
            base.push_back({Rat(0), 1, imag_m, false});
            base.push_back({Rat(0), 1, imag_m, true});
        } else {
            base.push_back({a, 1, imag_m, false});
            base.push_back({-a, 1, imag_m, false});
        }
        return base;
    };

    auto label = [](cusp::Family fam, int mp, int mm, std::vector<cusp::DeepEntry> deep = {}) {
        cusp::CuspidalLabel l;
        l.kind.family = fam;
        l.m_plus = mp;
        l.m_minus = mm;
        l.deep = std::move(deep);
        l.normalize();
        return l;
    };
    auto datum_of = [](const cusp::CuspidalLabel& y, const cusp::CuspidalLabel& z) {
        cusp::TypeDatum d;
        d.rho_y = y;
        d.rho_z = z;
        return d;
    };

    // (i) deep block P of degree 2, multiplicity 1:
    //     { +-(m + 1/2), +-0 + pi i/(deg P log q) }
    auto p2 = poly::enumerate_self_dual_irreducible(field_of(3), 2, DualityKind::plain(), false)
                  .front();
    auto deep_lbl = label(cusp::Family::Symplectic, 0, 0, {{p2, 1}});
    ok = ok && hecke::red_set(datum_of(deep_lbl, deep_lbl), hecke::GlBlock::of_poly(p2)) ==
                   with_imag(points(Rat(3, 2), 2), Rat(0), 2);

    // (ii) symplectic: Red(omega_1) = { +-2m_-, +-0 + pi i/log q }; even
    //      orthogonal with both labels even adds Red(1) = { +-2m_+, ... }.
    auto sp11 = label(cusp::Family::Symplectic, 1, 1);
    ok = ok && hecke::red_set(datum_of(sp11, sp11), hecke::GlBlock::omega1()) ==
                   with_imag(points(Rat(2), 1), Rat(0), 1);
    auto eo11 = label(cusp::Family::EvenOrthogonal, 1, 1);
    ok = ok && hecke::red_set(datum_of(eo11, eo11), hecke::GlBlock::omega1()) ==
                   with_imag(points(Rat(2), 1), Rat(0), 1);
    ok = ok && hecke::red_set(datum_of(eo11, eo11), hecke::GlBlock::one()) ==
                   with_imag(points(Rat(2), 1), Rat(0), 1);

    // (iii) even orthogonal, both labels odd:
    //      Red(1) = { +-(2m_+ + 1), ... }, Red(omega_1) = { +-(2m_- + 1), ... }
    auto oo12 = label(cusp::Family::OddOrthogonal, 1, 2);
    ok = ok && hecke::red_set(datum_of(oo12, oo12), hecke::GlBlock::one()) ==
                   with_imag(points(Rat(3), 1), Rat(0), 1);
    ok = ok && hecke::red_set(datum_of(oo12, oo12), hecke::GlBlock::omega1()) ==
                   with_imag(points(Rat(5), 1), Rat(0), 1);

    // final clause: rho_y = Ad(h) o rho_z (the minus-side flip):
    //      Red(1) = { +-2m_+, +-0 + pi i/log q },
    //      Red(omega_1) = { +-0, +-2m_- + pi i/log q }
    auto eo_flip = label(cusp::Family::EvenOrthogonal, 1, -1);
    ok = ok && hecke::red_set(datum_of(eo11, eo_flip), hecke::GlBlock::one()) ==
                   with_imag(points(Rat(2), 1), Rat(0), 1);
    ok = ok && hecke::red_set(datum_of(eo11, eo_flip), hecke::GlBlock::omega1()) ==
                   with_imag(points(Rat(0), 1), Rat(2), 1);
    return ok;
}

// ---------------------------------------------------------------------- 8

bool criterion8() {
    bool ok = true;
    for (long long q : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        auto space = sg::ClassicalSpace::make(sg::SpaceKind::Sp2, gf::Field::prime(q));
        for (auto chi : {sg::GlChar::Trivial, sg::GlChar::Omega})
            for (int sign : {+1, -1})
                for (bool with_zero : {true, false})
                    ok = ok && !sg::d_sum(space, chi, sign, with_zero).is_zero();
    }
    return ok;
}

// ---------------------------------------------------------------------- 9

bool criterion9() {
    constexpr int kCases = 10000;
    std::vector<FieldPtr> pool;
    for (long long q : {3LL, 5LL, 7LL, 11LL, 13LL, 9LL, 25LL, 27LL}) pool.push_back(field_of(q));

    std::mt19937_64 rng(0xacce97);
    auto rand_elem = [&rng](const FieldPtr& f) {
        return f->element_from_index(static_cast<long long>(rng() % f->cardinality()));
    };
    auto rand_unit = [&](const FieldPtr& f) {
        while (true) {
            auto x = rand_elem(f);
            if (!x.is_zero()) return x;
        }
    };

    bool ok = true;

    // field axioms
    for (int i = 0; i < kCases && ok; ++i) {
        const auto& f = pool[rng() % pool.size()];
        auto a = rand_elem(f), b = rand_elem(f), c = rand_elem(f);
        ok = ok && (a + b) * c == a * c + b * c;
        ok = ok && (a * b) * c == a * (b * c);
        ok = ok && a + (-a) == f->zero();
        if (!b.is_zero()) ok = ok && (a / b) * b == a;
        ok = ok && (a + b).pow(f->characteristic()) ==
                       a.pow(f->characteristic()) + b.pow(f->characteristic());
    }

    // gauss relation
    for (int i = 0; i < kCases && ok; ++i) {
        const auto& f = pool[rng() % pool.size()];
        long long q = f->cardinality();
        GaussValue g = gauss_sum(f, rand_unit(f));
        ok = ok && g * g == GaussValue::of_rational(Rat(f->omega(f->from_integer(-1)) * q), q);
    }

    // dual involution
    for (int i = 0; i < kCases && ok; ++i) {
        const auto& f = pool[rng() % pool.size()];
        DualityKind kind = DualityKind::plain();
        if (f->degree_over_prime() % 2 == 0 && rng() % 2 == 0) {
            long long qb = 1;
            while (qb * qb < f->cardinality()) ++qb;
            kind = DualityKind::conjugate(qb);
        }
        int deg = 1 + static_cast<int>(rng() % 4);
        std::vector<FieldElement> coeffs;
        coeffs.push_back(rand_unit(f));
        for (int k = 1; k < deg; ++k) coeffs.push_back(rand_elem(f));
        coeffs.push_back(f->one());
        MonicPoly p(f, std::move(coeffs));
        ok = ok && poly::dual_poly(poly::dual_poly(p, kind), kind) == p;
    }

    // alpha involution
    std::vector<sg::ClassicalSpace> spaces;
    for (long long q : {3LL, 5LL, 7LL, 11LL, 13LL})
        for (auto kind : {sg::SpaceKind::Sp2, sg::SpaceKind::O2Split, sg::SpaceKind::O2NonSplit,
                          sg::SpaceKind::Sp4})
            spaces.push_back(sg::ClassicalSpace::make(kind, gf::Field::prime(q)));
    for (int i = 0; i < kCases && ok; ++i) {
        const auto& sp = spaces[rng() % spaces.size()];
        auto rand_mat = [&](int rows, int cols) {
            sg::Matrix m(rows, std::vector<FieldElement>(cols));
            for (auto& row : m)
                for (auto& x : row) x = rand_elem(sp.field);
            return m;
        };
        auto X = rand_mat(sp.m, sp.dim);
        auto Y = rand_mat(sp.m, sp.m);
        ok = ok && sg::mat_eq(sg::alpha(sp, sg::Entry::Z, sg::alpha(sp, sg::Entry::X, X)), X);
        ok = ok && sg::mat_eq(sg::alpha(sp, sg::Entry::Y, sg::alpha(sp, sg::Entry::Y, Y)), Y);
    }
    return ok;
}

}  // namespace

int main() {
    report(1, criterion1(), "rank-1 symplectic worked example, q in {3,5,7,11,13}");
    report(2, criterion2(), "two-class dichotomy brute force, all spaces");
    report(3, criterion3(), "Hecke coefficients c = q^3 and |b| = q^(1/2)(q^2-1)");
    report(4, criterion4(), "self-dual polynomial enumeration vs brute force");
    report(5, criterion5(), "packet counts: 2, 1, companion sum 16");
    report(6, criterion6(), "classification round trip and partition on the grid");
    report(7, criterion7(), "Moeglin relation and the displayed red sets");
    report(8, criterion8(), "summed traces nonzero for all rank-1 configurations, q <= 13");
    report(9, criterion9(), "randomized invariant suites, 10^4 cases each");
    return failures == 0 ? 0 : 1;
}
