#include <algorithm>
#include <map>

#include "doctest.h"
#include "llpack/classify.hpp"
#include "test_util.hpp"

using namespace llpack;
using cusp::DeepEntry;
using cusp::Family;
using cusp::TypeDatum;
using par::Disc;
using par::Parameter;
using par::PGroupKind;
using poly::MonicPoly;
using testutil::field_of;
using testutil::thrown_code;

namespace {

// Round trip + partition for one companion class of data.
void check_partition(Family family, const PGroupKind& ambient, int mp, int mm,
                     const std::vector<DeepEntry>& deep) {
    auto data = cusp::enumerate_type_data(family, mp, mm, deep);
    std::map<std::string, std::vector<TypeDatum>> buckets;
    long long covered = 0;
    for (const auto& d : data) {
        Parameter phi = cls::type_to_parameter(d, ambient);
        CHECK(par::validate_parameter(phi).empty());
        buckets[phi.to_string()].push_back(d);
    }
    for (const auto& [key, members] : buckets) {
        Parameter phi = cls::type_to_parameter(members.front(), ambient);
        auto types = cls::parameter_to_types(phi.kind, phi);
        CHECK(types.size() == static_cast<size_t>(par::supercuspidal_count(phi)));
        CHECK(types.size() == members.size());
        for (const auto& m : members)
            CHECK(std::find(types.begin(), types.end(), m) != types.end());
        covered += static_cast<long long>(members.size());
    }
    CHECK(covered == static_cast<long long>(data.size()));
}

}  // namespace

TEST_CASE("symplectic classification") {
    auto amb = PGroupKind::symplectic(0);
    TypeDatum d = cusp::enumerate_type_data(Family::Symplectic, 0, 1, {}).front();
    Parameter phi = cls::type_to_parameter(d, amb);
    CHECK(phi.to_string() == "[[1,-1,3,-1]]");
    CHECK(phi.kind.n == 2);  // the SL(2) x SL(2) type sits inside Sp(4)

    check_partition(Family::Symplectic, amb, 0, 1, {});
    check_partition(Family::Symplectic, amb, 1, 0, {});
    check_partition(Family::Symplectic, amb, 2, 3, {});

    // the flipped companion lands on the parameter with c and d swapped
    auto types = cls::parameter_to_types(phi.kind, phi);
    REQUIRE(types.size() == 2);
    CHECK(types[0].rho_z.m_minus != types[1].rho_z.m_minus);
}

TEST_CASE("even orthogonal classification, both discriminants") {
    check_partition(Family::EvenOrthogonal, PGroupKind::even_orthogonal(0, Disc::One), 1, 1, {});
    check_partition(Family::EvenOrthogonal, PGroupKind::even_orthogonal(0, Disc::One), 0, 1, {});
    check_partition(Family::OddOrthogonal, PGroupKind::even_orthogonal(0, Disc::Varpi), 1, 2, {});
    check_partition(Family::OddOrthogonal, PGroupKind::even_orthogonal(0, Disc::ZetaVarpi), 1, 2, {});
    check_partition(Family::OddOrthogonal, PGroupKind::even_orthogonal(0, Disc::Varpi), 0, 0, {});

    // odd labels never produce an unramified discriminant
    TypeDatum odd = cusp::enumerate_type_data(Family::OddOrthogonal, 1, 1, {}).front();
    CHECK(thrown_code([&] {
              (void)cls::type_to_parameter(odd, PGroupKind::even_orthogonal(0, Disc::One));
          }) == ErrorCode::Inconsistent);
}

TEST_CASE("unitary classification") {
    auto p = MonicPoly::from_integers(field_of(9), {2, 1});
    TypeDatum d = cusp::enumerate_type_data(Family::Unitary, 0, 0, {DeepEntry{p, 2}}).front();
    Parameter phi = cls::type_to_parameter(d, PGroupKind::unitary(0));
    CHECK(phi.deep.size() == 1);
    CHECK(phi.deep[0].a_phi == 4);
    CHECK(phi.deep[0].b_phi == -1);
    CHECK(phi.kind.n == 6);
    auto types = cls::parameter_to_types(phi.kind, phi);
    REQUIRE(types.size() == 1);
    CHECK(types[0] == d);
}

TEST_CASE("deep entries ride along") {
    auto p = MonicPoly::from_integers(field_of(3), {1, 0, 1});
    check_partition(Family::Symplectic, PGroupKind::symplectic(0), 0, 1, {DeepEntry{p, 1}});

    TypeDatum d = cusp::enumerate_type_data(Family::Symplectic, 0, 1, {DeepEntry{p, 1}}).front();
    Parameter phi = cls::type_to_parameter(d, PGroupKind::symplectic(0));
    REQUIRE(phi.deep.size() == 1);
    CHECK(phi.deep[0].a_phi == 2);
    CHECK(phi.deep[0].b_phi == -1);
}

TEST_CASE("non-symmetric data are rejected") {
    TypeDatum bad;
    bad.rho_y.kind.family = Family::Symplectic;
    bad.rho_y.m_minus = 1;
    bad.rho_y.normalize();
    bad.rho_z = bad.rho_y;
    bad.rho_z.m_minus = 2;
    CHECK(thrown_code([&] {
              (void)cls::type_to_parameter(bad, PGroupKind::symplectic(0));
          }) == ErrorCode::NotSupported);

    Parameter shapeless;
    shapeless.kind = PGroupKind::symplectic(2);
    shapeless.a = 3;
    shapeless.b = 1;  // both entries positive: not almost symmetric
    shapeless.c = 1;
    shapeless.d = -1;
    CHECK(thrown_code([&] {
              (void)cls::parameter_to_types(shapeless.kind, shapeless);
          }).has_value());
}

TEST_CASE("descent to the connected even orthogonal group") {
    auto amb = PGroupKind::even_orthogonal(0, Disc::One);
    auto data = cusp::enumerate_type_data(Family::EvenOrthogonal, 1, 1, {});
    TypeDatum d = data.front();
    Parameter phi = cls::type_to_parameter(d, amb);
    auto types = cls::parameter_to_types(phi.kind, phi);
    auto res = cls::connected_descend(phi, types);
    CHECK_FALSE(res.exceptional);
    CHECK(res.entries.size() == types.size());
    int plus = 0, minus = 0;
    for (const auto& e : res.entries) (e.sign == +1 ? plus : minus)++;
    CHECK(plus == minus);  // restriction signs pair off

    // exceptional case: no quadratic blocks at all
    auto p = MonicPoly::from_integers(field_of(3), {1, 0, 1});
    auto exc_data = cusp::enumerate_type_data(Family::EvenOrthogonal, 0, 0, {DeepEntry{p, 1}});
    Parameter exc_phi = cls::type_to_parameter(exc_data.front(), amb);
    auto exc_types = cls::parameter_to_types(exc_phi.kind, exc_phi);
    auto exc = cls::connected_descend(exc_phi, exc_types);
    CHECK(exc.exceptional);
    CHECK(exc.entries.size() == 2);
}

TEST_CASE("packet tables cover the grid") {
    cls::GridBounds bounds;
    bounds.max_m = 1;
    auto rows = cls::packet_table(Family::Symplectic, bounds);
    CHECK(rows.size() == 6);
    long long total = 0;
    for (const auto& r : rows) {
        CHECK(par::validate_parameter(r.phi).empty());
        CHECK(r.types.size() == static_cast<size_t>(par::supercuspidal_count(r.phi)));
        total += static_cast<long long>(r.types.size());
    }
    // grid (m+, m-) in {0,1}^2 with 1, 4, 1, 4 data per point
    CHECK(total == 10);

    CHECK(cls::packet_table(Family::OddOrthogonal, bounds).size() == 16);
}
