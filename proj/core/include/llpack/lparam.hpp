#ifndef LLPACK_LPARAM_HPP
#define LLPACK_LPARAM_HPP

#include <optional>
#include <string>
#include <vector>

#include "llpack/polyarith.hpp"

namespace llpack::par {

using poly::DualityKind;
using poly::MonicPoly;

enum class PFamily { Symplectic, EvenOrthogonal, Unitary };

// Discriminant class of the quadratic form, mod squares.
enum class Disc { One, Zeta, Varpi, ZetaVarpi };

const char* pfamily_name(PFamily f);
std::optional<PFamily> pfamily_from_name(const std::string& s);
const char* disc_name(Disc d);
std::optional<Disc> disc_from_name(const std::string& s);

// p-adic group the parameter belongs to: Sp(2n) (parameter degree 2n+1),
// O(2n) with a discriminant class (degree 2n), or unramified U(N) (degree N).
struct PGroupKind {
    PFamily family = PFamily::Symplectic;
    int n = 0;
    Disc disc = Disc::One;

    static PGroupKind symplectic(int n) { return {PFamily::Symplectic, n, Disc::One}; }
    static PGroupKind even_orthogonal(int n, Disc d) { return {PFamily::EvenOrthogonal, n, d}; }
    static PGroupKind unitary(int N) { return {PFamily::Unitary, N, Disc::One}; }

    int degree() const;  // ambient parameter degree
    bool operator==(const PGroupKind& o) const;
};

// One deep component phi~[[a_phi]] + phi~'[[b_phi]], where phi~ is the
// extension with xi(varpi) = 1 and phi~' its unramified self-dual twist.
struct DeepPair {
    MonicPoly poly;
    int a_phi = -1;
    int b_phi = -1;

    bool operator==(const DeepPair& o) const {
        return poly == o.poly && a_phi == o.a_phi && b_phi == o.b_phi;
    }
};

// Depth-zero parameter in shorthand form [[a,b,c,d,(a_phi,b_phi)...]]; the
// quadratic entries are absent (held at -1) for unitary kinds.
struct Parameter {
    PGroupKind kind;
    int a = -1;
    int b = -1;
    int c = -1;
    int d = -1;
    std::vector<DeepPair> deep;

    // Sort deep pairs and drop components contributing no summands.
    void normalize();
    std::string to_string() const;

    bool operator==(const Parameter& o) const;
    bool operator!=(const Parameter& o) const { return !(*this == o); }
};

// Dimension of St[[a]] = St[a] + St[a-2] + ...: ((a+1)/2)^2 for odd a,
// (a/2)(a/2+1) for even a, 0 for a <= 0.
long long st_block_dim(int a);
// Number of irreducible summands of St[[a]].
int st_block_count(int a);

long long parameter_degree(const Parameter& phi);

Violations validate_parameter(const Parameter& phi);
void require_valid(const Parameter& phi);

// All valid parameters with {a,b} and {c,d} preserved as sets and the deep
// pairs fixed; at most 4 including phi itself.
std::vector<Parameter> companions(const Parameter& phi);

// |A(phi)| = 2^(r-1) for symplectic kinds, 2^r otherwise, with r the number
// of irreducible components.
long long component_group_size(const Parameter& phi);

// Count of strictly positive odd entries among the quadratic multiplicities
// and deep pairs (deep pairs only, for unitary kinds). Setting
// count_minus_one includes the -1 entries as well (the other reading of the
// multiset bound).
int k_of(const Parameter& phi, bool count_minus_one = false);

enum class CountVariant { Full, ConnectedEvenSO };

// Number of supercuspidal members of the packet: 2^(k-1) for symplectic,
// 2^k for even orthogonal and unitary; the connected even-SO variant halves
// except in the exceptional case a = b = c = d = -1.
long long supercuspidal_count(const Parameter& phi, CountVariant variant = CountVariant::Full);

enum class Parity { Orthogonal, Symplectic, ConjOrthogonal, ConjSymplectic };

const char* parity_name(Parity p);

// Parity of the self-dual representation induced from the character with
// xi(varpi) = 1 attached to P: symplectic for plain kinds of degree > 1,
// orthogonal for the degree-1 quadratic characters, and
// conjugate-orthogonal/symplectic by degree parity for conjugate kinds.
Parity parity_of_induced(const MonicPoly& p, const DualityKind& kind);

}  // namespace llpack::par

#endif
