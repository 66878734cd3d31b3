#include <cmath>
#include <complex>

#include "doctest.h"
#include "llpack/gf.hpp"
#include "test_util.hpp"

using namespace llpack;
using gf::Field;
using gf::GaussValue;
using gf::Rat;
using testutil::field_of;
using testutil::thrown_code;

TEST_CASE("prime field arithmetic") {
    auto f = Field::prime(7);
    CHECK(f->cardinality() == 7);
    CHECK(f->is_prime_field());
    CHECK(f->from_integer(10) == f->from_integer(3));
    CHECK(f->from_integer(-1) == f->from_integer(6));
    for (long long k = 1; k < 7; ++k) {
        auto x = f->from_integer(k);
        CHECK(x * x.inverse() == f->one());
        CHECK(x / x == f->one());
        CHECK(x.pow(7) == x);  // Fermat
    }
    CHECK(thrown_code([&] { (void)f->zero().inverse(); }) == ErrorCode::DivisionByZero);
    CHECK(thrown_code([] { (void)Field::prime(2); }) == ErrorCode::Domain);
    CHECK(thrown_code([] { (void)Field::prime(9); }) == ErrorCode::Domain);
}

TEST_CASE("quadratic extension tower") {
    auto f3 = Field::prime(3);
    auto f9 = f3->extension(2);
    CHECK(f9->cardinality() == 9);
    CHECK(f9->degree_over_prime() == 2);
    CHECK(f9->base_field() == f3);
    CHECK(f3->extension(1) == f3);
    CHECK(f3->extension(2) == f9);  // cached, same object

    auto elems = f9->all_elements();
    REQUIRE(elems.size() == 9);
    for (const auto& x : elems) {
        CHECK(f9->frobenius(x) == x.pow(3));
        CHECK(f9->frobenius(f9->frobenius(x)) == x);
        CHECK(f9->trace_to_base(x).field() == f3);
        if (!x.is_zero()) {
            auto n = x * x.pow(3);  // x^(q+1), lands in the base field
            CHECK(n.coords()[1].is_zero());
            CHECK(n.coords()[0] == f9->norm_to_base(x));
            CHECK(x.pow(8) == f9->one());
        }
    }
    // element indexing round trip
    for (long long i = 0; i < 9; ++i) CHECK(f9->element_from_index(i).index() == i);
}

TEST_CASE("quadratic character splits units evenly and is multiplicative") {
    for (long long q : {7LL, 9LL, 11LL, 25LL}) {
        auto f = field_of(q);
        int squares = 0;
        for (const auto& x : f->all_elements())
            if (!x.is_zero() && f->is_square(x)) ++squares;
        CHECK(squares == (q - 1) / 2);
        auto g = f->nonsquare();
        CHECK(f->omega(g) == -1);
        CHECK(f->omega(g * g) == 1);
        for (const auto& x : f->all_elements())
            for (const auto& y : {f->one(), g})
                if (!x.is_zero()) CHECK(f->omega(x * y) == f->omega(x) * f->omega(y));
    }
}

TEST_CASE("field mismatch is rejected") {
    auto a = Field::prime(5)->one();
    auto b = Field::prime(7)->one();
    CHECK(thrown_code([&] { (void)(a + b); }) == ErrorCode::FieldMismatch);
}

TEST_CASE("gauss sum: exact square identity and twist by omega") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL}) {
        auto f = field_of(q);
        GaussValue g = gauss_sum(f, f->one());
        CHECK(g == GaussValue(Rat(0), Rat(1), q));
        int s = f->omega(f->from_integer(-1));
        CHECK(g * g == GaussValue::of_rational(Rat(s * q), q));
        CHECK(g.sign_class() == s);
        for (const auto& a : f->all_elements())
            if (!a.is_zero()) CHECK(gauss_sum(f, a) == GaussValue(Rat(0), Rat(f->omega(a)), q));
    }
}

TEST_CASE("gauss sum: numeric magnitude |g|^2 = q") {
    for (long long q : {3LL, 5LL, 7LL, 9LL, 11LL, 13LL, 25LL, 27LL}) {
        auto f = field_of(q);
        std::complex<double> g = gauss_sum_numeric(f, f->one());
        CHECK(std::abs(std::norm(g) - static_cast<double>(q)) < 1e-9);
    }
    // For prime q the classical evaluation fixes the sign, so the exact
    // value's numeric image must match the summed character values.
    for (long long q : {3LL, 5LL, 7LL, 11LL, 13LL}) {
        auto f = Field::prime(q);
        std::complex<double> direct = gauss_sum_numeric(f, f->one());
        std::complex<double> exact = gauss_sum(f, f->one()).numeric();
        CHECK(std::abs(direct - exact) < 1e-9);
    }
}

TEST_CASE("gauss value ring arithmetic") {
    long long q = 7;  // omega(-1) = -1, so g^2 = -7
    GaussValue u(Rat(1), Rat(2), q);
    GaussValue v(Rat(3), Rat(-1), q);
    CHECK(u + v == GaussValue(Rat(4), Rat(1), q));
    CHECK(u - v == GaussValue(Rat(-2), Rat(3), q));
    // (1+2g)(3-g) = 3 - g + 6g - 2g^2 = 3 + 5g + 14
    CHECK(u * v == GaussValue(Rat(17), Rat(5), q));
    CHECK(-u == GaussValue(Rat(-1), Rat(-2), q));
    CHECK(u * Rat(1, 2) == GaussValue(Rat(1, 2), Rat(1), q));
    CHECK_FALSE(u.is_zero());
    CHECK(GaussValue(Rat(0), Rat(0), q).is_zero());
}
