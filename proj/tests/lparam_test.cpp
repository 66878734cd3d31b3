#include <algorithm>

#include "doctest.h"
#include "llpack/lparam.hpp"
#include "test_util.hpp"

using namespace llpack;
using par::DeepPair;
using par::Parameter;
using par::PGroupKind;
using poly::DualityKind;
using poly::MonicPoly;
using testutil::field_of;
using testutil::thrown_code;

namespace {

Parameter quad(PGroupKind kind, int a, int b, int c, int d, std::vector<DeepPair> deep = {}) {
    Parameter phi;
    phi.kind = kind;
    phi.a = a;
    phi.b = b;
    phi.c = c;
    phi.d = d;
    phi.deep = std::move(deep);
    phi.normalize();
    return phi;
}

// St[[a]] = St[a] + St[a-2] + ..., summed directly.
long long brute_block_dim(int a) {
    long long total = 0;
    for (int k = a; k > 0; k -= 2) total += k;
    return total;
}

}  // namespace

TEST_CASE("Steinberg block dimensions") {
    for (int a = -3; a <= 12; ++a) {
        CHECK(par::st_block_dim(a) == brute_block_dim(a));
        CHECK(par::st_block_count(a) == (a <= 0 ? 0 : (a + 1) / 2));
    }
}

TEST_CASE("parameter degree and shorthand") {
    auto phi = quad(PGroupKind::symplectic(2), 1, -1, 3, -1);
    CHECK(par::parameter_degree(phi) == 5);
    CHECK(phi.to_string() == "[[1,-1,3,-1]]");
    CHECK(par::component_group_size(phi) == 4);  // r = 1 + 2 components

    auto p = MonicPoly::from_integers(field_of(3), {1, 0, 1});
    auto deep = quad(PGroupKind::symplectic(3), 1, -1, -1, -1, {DeepPair{p, 2, -1}});
    CHECK(par::parameter_degree(deep) == 1 + 2 * par::st_block_dim(2));
    CHECK(deep.to_string() == "[[1,-1,-1,-1,(2,-1)]]");
}

TEST_CASE("parameter validation") {
    CHECK(par::validate_parameter(quad(PGroupKind::symplectic(2), 1, -1, 3, -1)).empty());
    // det phi = 1 pins which residues mod 4 the entries may take
    CHECK_FALSE(par::validate_parameter(quad(PGroupKind::symplectic(2), 3, -1, 1, -1)).empty());
    // even entries are not allowed in quadratic positions
    CHECK_FALSE(par::validate_parameter(quad(PGroupKind::symplectic(2), 2, -1, 3, -1)).empty());
    // degree must match the ambient kind
    CHECK_FALSE(par::validate_parameter(quad(PGroupKind::symplectic(3), 1, -1, 3, -1)).empty());

    // even orthogonal: the discriminant class is determined by det phi
    using par::Disc;
    CHECK(par::validate_parameter(
              quad(PGroupKind::even_orthogonal(4, Disc::One), 3, -1, 3, -1)).empty());
    CHECK_FALSE(par::validate_parameter(
                    quad(PGroupKind::even_orthogonal(4, Disc::Varpi), 3, -1, 3, -1)).empty());
    CHECK(par::validate_parameter(
              quad(PGroupKind::even_orthogonal(1, Disc::Varpi), 1, -1, 1, -1)).empty());

    // unitary: no quadratic entries, and a_phi parity follows N + deg
    auto p1 = MonicPoly::from_integers(field_of(9), {2, 1});
    Parameter u;
    u.kind = PGroupKind::unitary(2);
    u.deep = {DeepPair{p1, 2, -1}};
    CHECK(par::validate_parameter(u).empty());
    u.deep = {DeepPair{p1, 1, 0}};
    CHECK_FALSE(par::validate_parameter(u).empty());
    u.a = 1;
    u.deep = {DeepPair{p1, 2, -1}};
    CHECK_FALSE(par::validate_parameter(u).empty());

    // deep pairs need opposite parities
    auto p2 = MonicPoly::from_integers(field_of(3), {1, 0, 1});
    auto bad = quad(PGroupKind::symplectic(3), 1, -1, -1, -1, {DeepPair{p2, 2, 2}});
    CHECK_FALSE(par::validate_parameter(bad).empty());
}

TEST_CASE("parameter companions") {
    auto phi = quad(PGroupKind::symplectic(2), 1, -1, 3, -1);
    auto cls = par::companions(phi);
    REQUIRE(cls.size() == 2);
    CHECK(std::find(cls.begin(), cls.end(), phi) != cls.end());
    CHECK(std::find(cls.begin(), cls.end(), quad(PGroupKind::symplectic(2), 1, -1, -1, 3)) !=
          cls.end());
    for (const auto& member : cls) {
        CHECK(par::validate_parameter(member).empty());
        CHECK(par::companions(member).size() == 2);
    }

    using par::Disc;
    auto eo = quad(PGroupKind::even_orthogonal(4, Disc::One), 3, -1, 3, -1);
    CHECK(par::companions(eo).size() == 4);
    auto collapsed = quad(PGroupKind::symplectic(4), 5, -1, -1, -1);
    CHECK(par::companions(collapsed).size() == 1);
}

TEST_CASE("packet counts") {
    auto phi = quad(PGroupKind::symplectic(2), 1, -1, 3, -1);
    CHECK(par::k_of(phi) == 2);
    CHECK(par::k_of(phi, true) == 4);
    CHECK(par::supercuspidal_count(phi) == 2);
    CHECK(par::supercuspidal_count(quad(PGroupKind::symplectic(4), 5, -1, -1, -1)) == 1);

    using par::Disc;
    auto eo = quad(PGroupKind::even_orthogonal(4, Disc::One), 3, -1, 3, -1);
    CHECK(par::supercuspidal_count(eo) == 4);
    CHECK(par::supercuspidal_count(eo, par::CountVariant::ConnectedEvenSO) == 2);

    // exceptional connected case: no quadratic blocks at all
    auto p = MonicPoly::from_integers(field_of(3), {1, 0, 1});
    auto exc = quad(PGroupKind::even_orthogonal(2, Disc::One), -1, -1, -1, -1, {DeepPair{p, 2, -1}});
    REQUIRE(par::validate_parameter(exc).empty());
    CHECK(par::supercuspidal_count(exc) == 1);
    CHECK(par::supercuspidal_count(exc, par::CountVariant::ConnectedEvenSO) == 1);

    Parameter u;
    u.kind = PGroupKind::unitary(2);
    u.deep = {DeepPair{MonicPoly::from_integers(field_of(9), {2, 1}), 2, -1}};
    CHECK(par::supercuspidal_count(u) == 1);
}

TEST_CASE("parity of the induced representation") {
    auto f5 = gf::Field::prime(5);
    auto f9 = field_of(9);
    auto plain = DualityKind::plain();
    auto conj = DualityKind::conjugate(3);
    CHECK(par::parity_of_induced(MonicPoly::from_integers(f5, {-1, 1}), plain) ==
          par::Parity::Orthogonal);
    CHECK(par::parity_of_induced(MonicPoly::from_integers(f5, {1, 0, 1}), plain) ==
          par::Parity::Symplectic);
    CHECK(par::parity_of_induced(MonicPoly::from_integers(f9, {2, 1}), conj) ==
          par::Parity::ConjOrthogonal);
    CHECK(par::parity_of_induced(MonicPoly::from_integers(f9, {1, 1, 1}), conj) ==
          par::Parity::ConjSymplectic);
}
