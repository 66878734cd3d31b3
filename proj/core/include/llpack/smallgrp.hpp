#ifndef LLPACK_SMALLGRP_HPP
#define LLPACK_SMALLGRP_HPP

#include <optional>
#include <string>
#include <vector>

#include "llpack/gf.hpp"
#include "llpack/hecke.hpp"

namespace llpack::sg {

using gf::FieldElement;
using gf::FieldPtr;
using gf::GaussValue;
using gf::Rat;

// Dense matrix over a finite field, row-major.
using Matrix = std::vector<std::vector<FieldElement>>;

Matrix mat_identity(const FieldPtr& field, int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_transpose(const Matrix& a);
Matrix mat_inverse(const Matrix& a);         // throws DivisionByZero if singular
FieldElement mat_det(const Matrix& a);
bool mat_eq(const Matrix& a, const Matrix& b);
std::string mat_to_string(const Matrix& a);  // [[..],[..]] with prime residues

enum class SpaceKind { Sp2, O2Split, O2NonSplit, Sp4, Trivial };

const char* space_kind_name(SpaceKind k);
std::optional<SpaceKind> space_kind_from_name(const std::string& s);

// A small classical space V with Gram matrix J (J = eps * tJ) together with
// the GL block of size m and pairing matrix K. Restricted to prime fields.
struct ClassicalSpace {
    SpaceKind tag = SpaceKind::Sp2;
    FieldPtr field;
    int dim = 0;
    int eps = -1;  // -1 symplectic, +1 orthogonal
    Matrix J;      // dim x dim
    int m = 1;
    Matrix K;      // m x m

    static ClassicalSpace make(SpaceKind kind, const FieldPtr& field);
    // dim V = 0 space with the given GL block, for index counting.
    static ClassicalSpace trivial(const FieldPtr& field, int m, int eps);
};

enum class Entry { X, Y, Z };

// The involutive alpha-operators: aX = -J^-1 tX K, aY = -eps tK^-1 tY K,
// aZ = -eps tK^-1 tZ J. (The coefficient conjugation c is the identity for
// the supported prime-field spaces.)
Matrix alpha(const ClassicalSpace& space, Entry which, const Matrix& M);

struct SPair {
    Matrix X;  // m x dim
    Matrix Y;  // m x m
};

// All (X, Y) with X aX = Y - aY. With exclude_zero_X the enumeration is the
// paper's solution set (X != 0, Y invertible); without it X and Y range over
// everything, which is the unipotent-radical point count entering c_w.
std::vector<SPair> enumerate_S(const ClassicalSpace& space, bool exclude_zero_X);

// I - aX Y^-1 X, checked to preserve the form.
Matrix nmap(const ClassicalSpace& space, const SPair& pair);

bool in_group(const ClassicalSpace& space, const Matrix& g);
std::vector<Matrix> group_elements(const ClassicalSpace& space);
bool are_conjugate(const ClassicalSpace& space, const Matrix& g1, const Matrix& g2);

// Similitude element h with th J h = lambda J and omega(lambda) = -1,
// a fixed deterministic choice per space kind.
Matrix similitude_h(const ClassicalSpace& space);

struct VerifyReport {
    std::string check;
    long long q = 0;
    std::string space;
    bool pass = false;
    std::vector<std::string> class_reps;
    std::vector<long long> counts;
    std::optional<std::string> counterexample;
};

// Brute-force check of the two-class dichotomy: det(nmap) = -eps, the image
// of S meets exactly two conjugacy classes, membership is decided by whether
// Y is a square, and Ad(similitude_h) swaps the two classes.
VerifyReport verify_similitude_lemma(const ClassicalSpace& space);

// Exact character data of the two cuspidal representations rho_+- of
// SL(2, F_q) = Sp(2, F_q) on the classes the computation needs.
struct SL2CharTable {
    FieldPtr field;

    static SL2CharTable make(const FieldPtr& field);

    Rat degree() const;  // (q - 1)/2
    GaussValue trace_identity(int rho_sign) const;
    // tr rho_+-([[1,u],[0,1]]) = (-1 +- omega(u) g)/2
    GaussValue trace_unipotent(int rho_sign, const FieldElement& u) const;
};

enum class GlChar { Trivial, Omega };

// d_w = sum over S of tr rho~(Y) tr rho(nmap(X,Y)), exactly. Only the
// dim-2 symplectic space carries the built-in character table.
GaussValue d_sum(const ClassicalSpace& space, GlChar gl_char, int rho_sign, bool include_zero_X);

// d_sum(rho_y) - d_sum(rho_z), the traced difference of the two sides.
GaussValue difference_sum(const ClassicalSpace& space, GlChar gl_char, int rho_sign_y,
                          int rho_sign_z);

// |enumerate_S(all X, all Y)| as an exact power of q.
hecke::QPowerExpr c_count(const ClassicalSpace& space);

// Rank-1 instance of the Ad(h) relabeling: conjugation by similitude_h swaps
// the two unipotent classes and the rho_+- character rows, and the two
// degrees agree.
bool sl2_ad_h_check(long long q);

struct Sp4Report {
    long long q = 0;
    std::string c_expr;
    std::string abs_b_expr;
    int nu_equal = 0;
    int nu_diff = 0;
    bool difference_matches = false;
    bool trace_ay_normalized = false;
    bool pass = false;
};

// The full worked example: the rank-1 data of the Sp(4) vertex, both nu
// values, the closed-form traced difference, and the normalized tr A_y.
Sp4Report verify_sp4(long long q);

}  // namespace llpack::sg

#endif
