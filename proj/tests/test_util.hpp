#ifndef LLPACK_TEST_UTIL_HPP
#define LLPACK_TEST_UTIL_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "llpack/gf.hpp"
#include "llpack/polyarith.hpp"

namespace testutil {

// F_q for a prime power q.
inline llpack::gf::FieldPtr field_of(long long q) {
    long long p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;
    int e = 0;
    for (long long r = q; r > 1; r /= p) ++e;
    auto f = llpack::gf::Field::prime(p);
    return e > 1 ? f->extension(e) : f;
}

// The error code thrown by fn, if any.
inline std::optional<llpack::ErrorCode> thrown_code(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const llpack::Error& e) {
        return e.code();
    }
    return std::nullopt;
}

// Every monic polynomial of the given degree, by coefficient index.
inline std::vector<llpack::poly::MonicPoly> all_monic(const llpack::gf::FieldPtr& field, int deg) {
    long long q = field->cardinality();
    long long total = 1;
    for (int i = 0; i < deg; ++i) total *= q;
    std::vector<llpack::poly::MonicPoly> out;
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<llpack::gf::FieldElement> coeffs;
        long long t = idx;
        for (int i = 0; i < deg; ++i) {
            coeffs.push_back(field->element_from_index(t % q));
            t /= q;
        }
        coeffs.push_back(field->one());
        out.emplace_back(field, std::move(coeffs));
    }
    return out;
}

// Trial-division irreducibility, independent of the library's Rabin test.
inline bool brute_irreducible(const llpack::poly::MonicPoly& p) {
    using namespace llpack::poly;
    int deg = p.degree();
    if (deg <= 0) return false;
    for (int d = 1; 2 * d <= deg; ++d)
        for (const auto& f : all_monic(p.field(), d)) {
            auto rem = llpack::gf::detail::mod(p.coeffs(), f.coeffs());
            if (rem.empty()) return false;
        }
    return true;
}

// Reversed-coefficient dual: conj the coefficients, reverse, renormalize.
inline llpack::poly::MonicPoly brute_dual(const llpack::poly::MonicPoly& p,
                                          const llpack::poly::DualityKind& kind) {
    std::vector<llpack::gf::FieldElement> c;
    for (const auto& x : p.coeffs()) c.push_back(kind.conj(x));
    std::reverse(c.begin(), c.end());
    auto lead = c.back();
    for (auto& x : c) x = x / lead;
    return {p.field(), std::move(c)};
}

}  // namespace testutil

#endif
