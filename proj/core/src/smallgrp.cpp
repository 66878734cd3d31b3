#include "llpack/smallgrp.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

namespace llpack::sg {

namespace {

constexpr long long kGroupCap = 1'000'000;
constexpr long long kPairCap = 10'000'000;

void require_prime_field(const FieldPtr& field) {
    if (!field->is_prime_field())
        throw Error(ErrorCode::NotSupported, "matrix spaces are supported over prime fields only");
}

Matrix mat_zero(const FieldPtr& field, int rows, int cols) {
    return Matrix(rows, std::vector<FieldElement>(cols, field->zero()));
}

Matrix mat_sub(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][j] - b[i][j];
    return out;
}

Matrix mat_neg(const Matrix& a) {
    Matrix out = a;
    for (auto& row : out)
        for (auto& x : row) x = -x;
    return out;
}

// Multiply with an explicit result shape, so degenerate inner dimensions
// (m x 0 times 0 x n) still yield a zero matrix of the right size.
Matrix mat_mul_shaped(const FieldPtr& field, const Matrix& a, const Matrix& b, int rows,
                      int cols) {
    Matrix out = mat_zero(field, rows, cols);
    size_t inner = b.size();
    for (int i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < cols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

}  // namespace

Matrix mat_identity(const FieldPtr& field, int n) {
    Matrix out = mat_zero(field, n, n);
    for (int i = 0; i < n; ++i) out[i][i] = field->one();
    return out;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    size_t rows = a.size();
    size_t inner = b.size();
    size_t cols = inner ? b[0].size() : 0;
    if (!rows) return {};
    if (a[0].size() != inner) throw Error(ErrorCode::Shape, "matrix shapes do not match");
    const FieldPtr& field = a[0].empty() ? (inner ? b[0][0].field() : nullptr) : a[0][0].field();
    if (!field) return Matrix(rows, std::vector<FieldElement>());
    Matrix out = mat_zero(field, static_cast<int>(rows), static_cast<int>(cols));
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < cols; ++j) out[i][j] = out[i][j] + a[i][k] * b[k][j];
        }
    return out;
}

Matrix mat_transpose(const Matrix& a) {
    if (a.empty()) return {};
    size_t rows = a.size(), cols = a[0].size();
    Matrix out(cols, std::vector<FieldElement>(rows));
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) out[j][i] = a[i][j];
    return out;
}

Matrix mat_inverse(const Matrix& a) {
    size_t n = a.size();
    if (n == 0) return {};
    const FieldPtr& field = a[0][0].field();
    Matrix work = a;
    Matrix inv = mat_identity(field, static_cast<int>(n));
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
        std::swap(work[pivot], work[col]);
        std::swap(inv[pivot], inv[col]);
        FieldElement scale = work[col][col].inverse();
        for (size_t j = 0; j < n; ++j) {
            work[col][j] = work[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || work[i][col].is_zero()) continue;
            FieldElement f = work[i][col];
            for (size_t j = 0; j < n; ++j) {
                work[i][j] = work[i][j] - f * work[col][j];
                inv[i][j] = inv[i][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

FieldElement mat_det(const Matrix& a) {
    size_t n = a.size();
    if (n == 0) throw Error(ErrorCode::Shape, "determinant of an empty matrix");
    const FieldPtr& field = a[0][0].field();
    Matrix work = a;
    FieldElement det = field->one();
    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && work[pivot][col].is_zero()) ++pivot;
        if (pivot == n) return field->zero();
        if (pivot != col) {
            std::swap(work[pivot], work[col]);
            det = -det;
        }
        det = det * work[col][col];
        FieldElement scale = work[col][col].inverse();
        for (size_t i = col + 1; i < n; ++i) {
            if (work[i][col].is_zero()) continue;
            FieldElement f = work[i][col] * scale;
            for (size_t j = col; j < n; ++j) work[i][j] = work[i][j] - f * work[col][j];
        }
    }
    return det;
}

bool mat_eq(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

std::string mat_to_string(const Matrix& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += "[";
        for (size_t j = 0; j < a[i].size(); ++j) {
            if (j) s += ",";
            s += std::to_string(a[i][j].residue());
        }
        s += "]";
    }
    return s + "]";
}

const char* space_kind_name(SpaceKind k) {
    switch (k) {
        case SpaceKind::Sp2: return "sp2";
        case SpaceKind::O2Split: return "o2+";
        case SpaceKind::O2NonSplit: return "o2-";
        case SpaceKind::Sp4: return "sp4";
        case SpaceKind::Trivial: return "trivial";
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown space kind");
}

std::optional<SpaceKind> space_kind_from_name(const std::string& s) {
    if (s == "sp2") return SpaceKind::Sp2;
    if (s == "o2+") return SpaceKind::O2Split;
    if (s == "o2-") return SpaceKind::O2NonSplit;
    if (s == "sp4") return SpaceKind::Sp4;
    if (s == "trivial") return SpaceKind::Trivial;
    return std::nullopt;
}

ClassicalSpace ClassicalSpace::make(SpaceKind kind, const FieldPtr& field) {
    require_prime_field(field);
    ClassicalSpace sp;
    sp.tag = kind;
    sp.field = field;
    sp.m = 1;
    sp.K = {{field->one()}};
    auto zero = field->zero();
    auto one = field->one();
    switch (kind) {
        case SpaceKind::Sp2:
            sp.dim = 2;
            sp.eps = -1;
            // Oriented so that nmap(X, Y) lands in the class of [[1,Y],[0,1]].
            sp.J = {{zero, -one}, {one, zero}};
            break;
        case SpaceKind::O2Split:
            sp.dim = 2;
            sp.eps = +1;
            sp.J = {{zero, one}, {one, zero}};
            break;
        case SpaceKind::O2NonSplit: {
            sp.dim = 2;
            sp.eps = +1;
            // diag(1, b) is anisotropic iff -b is a non-square, which depends
            // on omega(-1); pick b accordingly so the plane never splits.
            FieldElement b = field->omega(-one) == 1 ? field->nonsquare() : one;
            sp.J = {{one, zero}, {zero, b}};
            break;
        }
        case SpaceKind::Sp4: {
            sp.dim = 4;
            sp.eps = -1;
            sp.J = mat_zero(field, 4, 4);
            sp.J[0][3] = -one;
            sp.J[1][2] = -one;
            sp.J[2][1] = one;
            sp.J[3][0] = one;
            break;
        }
        case SpaceKind::Trivial:
            throw Error(ErrorCode::Domain, "use ClassicalSpace::trivial for dim-0 spaces");
    }
    return sp;
}

ClassicalSpace ClassicalSpace::trivial(const FieldPtr& field, int m, int eps) {
    require_prime_field(field);
    if (m < 0) throw Error(ErrorCode::Domain, "GL block size must be >= 0");
    ClassicalSpace sp;
    sp.tag = SpaceKind::Trivial;
    sp.field = field;
    sp.dim = 0;
    sp.eps = eps;
    sp.J = {};
    sp.m = m;
    sp.K = mat_identity(field, m);
    return sp;
}

Matrix alpha(const ClassicalSpace& space, Entry which, const Matrix& M) {
    auto shape_is = [&M](size_t rows, size_t cols) {
        if (M.size() != rows) return false;
        return rows == 0 || M[0].size() == cols;
    };
    size_t m = static_cast<size_t>(space.m), d = static_cast<size_t>(space.dim);
    FieldElement eps = space.field->from_integer(space.eps);
    switch (which) {
        case Entry::X: {
            if (!shape_is(m, d)) throw Error(ErrorCode::Shape, "X must be m x dim");
            if (d == 0) return Matrix(0, std::vector<FieldElement>(m));
            // -J^-1 tX K
            Matrix out = mat_mul(mat_mul(mat_inverse(space.J), mat_transpose(M)), space.K);
            return mat_neg(out);
        }
        case Entry::Y: {
            if (!shape_is(m, m)) throw Error(ErrorCode::Shape, "Y must be m x m");
            if (m == 0) return M;
            // -eps tK^-1 tY K
            Matrix out = mat_mul(mat_mul(mat_transpose(mat_inverse(space.K)), mat_transpose(M)),
                                 space.K);
            for (auto& row : out)
                for (auto& x : row) x = eps * x;
            return mat_neg(out);
        }
        case Entry::Z: {
            if (!shape_is(d, m)) throw Error(ErrorCode::Shape, "Z must be dim x m");
            if (d == 0) return Matrix(m, std::vector<FieldElement>());
            // -eps tK^-1 tZ J
            Matrix out =
                mat_mul(mat_mul(mat_transpose(mat_inverse(space.K)), mat_transpose(M)), space.J);
            for (auto& row : out)
                for (auto& x : row) x = eps * x;
            return mat_neg(out);
        }
    }
    throw Error(ErrorCode::InternalInconsistency, "unknown entry");
}

std::vector<SPair> enumerate_S(const ClassicalSpace& space, bool exclude_zero_X) {
    long long q = space.field->cardinality();
    int cells = space.m * space.dim + space.m * space.m;
    double size = 1;
    for (int i = 0; i < cells; ++i) {
        size *= static_cast<double>(q);
        if (size > static_cast<double>(kPairCap))
            throw Error(ErrorCode::CapExceeded, "solution-set enumeration too large");
    }
    auto elems = space.field->all_elements();

    std::vector<SPair> out;
    std::vector<int> digits(cells, 0);
    while (true) {
        SPair pair;
        pair.X = mat_zero(space.field, space.m, space.dim);
        pair.Y = mat_zero(space.field, space.m, space.m);
        int pos = 0;
        for (int i = 0; i < space.m; ++i)
            for (int j = 0; j < space.dim; ++j) pair.X[i][j] = elems[digits[pos++]];
        for (int i = 0; i < space.m; ++i)
            for (int j = 0; j < space.m; ++j) pair.Y[i][j] = elems[digits[pos++]];

        bool keep = true;
        if (exclude_zero_X) {
            if (mat_is_zero(pair.X)) keep = false;
            if (keep && space.m > 0 && mat_det(pair.Y).is_zero()) keep = false;
        }
        if (keep) {
            Matrix lhs = mat_mul_shaped(space.field, pair.X, alpha(space, Entry::X, pair.X),
                                        space.m, space.m);
            Matrix rhs = mat_sub(pair.Y, alpha(space, Entry::Y, pair.Y));
            if (mat_eq(lhs, rhs)) out.push_back(std::move(pair));
        }

        int carry = cells - 1;
        while (carry >= 0 && ++digits[carry] == static_cast<int>(q)) digits[carry--] = 0;
        if (carry < 0) break;
    }
    return out;
}

bool in_group(const ClassicalSpace& space, const Matrix& g) {
    if (static_cast<int>(g.size()) != space.dim) return false;
    return mat_eq(mat_mul(mat_mul(mat_transpose(g), space.J), g), space.J);
}

Matrix nmap(const ClassicalSpace& space, const SPair& pair) {
    if (space.m > 0 && mat_det(pair.Y).is_zero())
        throw Error(ErrorCode::Shape, "Y must be invertible");
    Matrix a = alpha(space, Entry::X, pair.X);  // dim x m
    Matrix ay = mat_mul_shaped(space.field, a, mat_inverse(pair.Y), space.dim, space.m);
    Matrix n = mat_sub(mat_identity(space.field, space.dim),
                       mat_mul_shaped(space.field, ay, pair.X, space.dim, space.dim));
    if (!in_group(space, n))
        throw Error(ErrorCode::InternalInconsistency, "nmap image does not preserve the form");
    return n;
}

// ---------------------------------------------------------------------------
// Integer matrix engine for group-scale work over prime fields.

namespace {

struct IntMat {
    int n = 0;
    std::array<int, 16> a{};

    bool operator==(const IntMat& o) const { return n == o.n && a == o.a; }
};

uint64_t pack(const IntMat& m, int p) {
    uint64_t k = 0;
    for (int i = 0; i < m.n * m.n; ++i) k = k * static_cast<uint64_t>(p) + m.a[i];
    return k;
}

IntMat imul(const IntMat& x, const IntMat& y, int p) {
    IntMat out;
    out.n = x.n;
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) {
            int acc = 0;
            for (int k = 0; k < x.n; ++k) acc += x.a[i * x.n + k] * y.a[k * x.n + j];
            out.a[i * x.n + j] = acc % p;
        }
    return out;
}

IntMat to_int(const Matrix& m) {
    IntMat out;
    out.n = static_cast<int>(m.size());
    for (int i = 0; i < out.n; ++i)
        for (int j = 0; j < out.n; ++j) out.a[i * out.n + j] = static_cast<int>(m[i][j].residue());
    return out;
}

Matrix from_int(const IntMat& m, const FieldPtr& field) {
    Matrix out = mat_zero(field, m.n, m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) out[i][j] = field->from_integer(m.a[i * m.n + j]);
    return out;
}

IntMat iinv(const IntMat& m, int p) {
    // Gauss-Jordan mod p on an n x 2n tableau.
    int n = m.n;
    std::array<std::array<int, 8>, 4> w{};
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) w[i][j] = m.a[i * n + j];
        w[i][n + i] = 1;
    }
    auto inv_mod = [p](int x) {
        int r = 1, b = x % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        while (pivot < n && w[pivot][col] % p == 0) ++pivot;
        if (pivot == n) throw Error(ErrorCode::DivisionByZero, "matrix is singular");
        std::swap(w[pivot], w[col]);
        int s = inv_mod(w[col][col]);
        for (int j = 0; j < 2 * n; ++j) w[col][j] = w[col][j] * s % p;
        for (int i = 0; i < n; ++i) {
            if (i == col) continue;
            int f = w[i][col] % p;
            if (!f) continue;
            for (int j = 0; j < 2 * n; ++j) w[i][j] = ((w[i][j] - f * w[col][j]) % p + p) % p;
        }
    }
    IntMat out;
    out.n = n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.a[i * n + j] = w[i][n + j];
    return out;
}

struct GroupData {
    int p = 0;
    std::vector<IntMat> elems;
    std::vector<IntMat> invs;
    std::unordered_set<uint64_t> keys;
};

bool preserves_form(const IntMat& g, const IntMat& J, int p) {
    // tg J g == J
    IntMat t;
    t.n = g.n;
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.n; ++j) t.a[i * g.n + j] = g.a[j * g.n + i];
    return imul(imul(t, J, p), g, p) == J;
}

std::shared_ptr<const GroupData> build_group(const ClassicalSpace& space) {
    int p = static_cast<int>(space.field->cardinality());
    int n = space.dim;
    auto data = std::make_shared<GroupData>();
    data->p = p;
    IntMat J = to_int(space.J);

    if (n <= 2) {
        // Direct scan of all n x n matrices.
        long long total = 1;
        for (int i = 0; i < n * n; ++i) total *= p;
        for (long long idx = 0; idx < total; ++idx) {
            IntMat g;
            g.n = n;
            long long v = idx;
            for (int i = 0; i < n * n; ++i) {
                g.a[i] = static_cast<int>(v % p);
                v /= p;
            }
            if (preserves_form(g, J, p)) {
                data->keys.insert(pack(g, p));
                data->elems.push_back(g);
            }
        }
    } else {
        // Closure from symplectic transvections x -> x + lambda B(x,v) v.
        std::vector<IntMat> gens;
        long long vec_total = 1;
        for (int i = 0; i < n; ++i) vec_total *= p;
        for (long long vi = 1; vi < vec_total; ++vi) {
            std::array<int, 4> v{};
            long long t = vi;
            for (int i = 0; i < n; ++i) {
                v[i] = static_cast<int>(t % p);
                t /= p;
            }
            std::array<int, 4> jv{};
            for (int k = 0; k < n; ++k) {
                int acc = 0;
                for (int l = 0; l < n; ++l) acc += J.a[k * n + l] * v[l];
                jv[k] = ((acc % p) + p) % p;
            }
            for (int lam = 1; lam < p; ++lam) {
                IntMat g;
                g.n = n;
                for (int i = 0; i < n; ++i)
                    for (int k = 0; k < n; ++k)
                        g.a[i * n + k] = ((i == k ? 1 : 0) + lam * v[i] * jv[k]) % p;
                gens.push_back(g);
            }
        }
        IntMat id;
        id.n = n;
        for (int i = 0; i < n; ++i) id.a[i * n + i] = 1;
        data->elems.push_back(id);
        data->keys.insert(pack(id, p));
        for (size_t head = 0; head < data->elems.size(); ++head) {
            IntMat cur = data->elems[head];
            for (const auto& g : gens) {
                IntMat next = imul(cur, g, p);
                if (data->keys.insert(pack(next, p)).second) {
                    data->elems.push_back(next);
                    if (static_cast<long long>(data->elems.size()) > kGroupCap)
                        throw Error(ErrorCode::CapExceeded, "group enumeration too large");
                }
            }
        }
    }
    if (static_cast<long long>(data->elems.size()) > kGroupCap)
        throw Error(ErrorCode::CapExceeded, "group enumeration too large");
    data->invs.reserve(data->elems.size());
    for (const auto& g : data->elems) data->invs.push_back(iinv(g, p));
    return data;
}

std::shared_ptr<const GroupData> group_data(const ClassicalSpace& space) {
    static std::mutex mu;
    static std::map<std::pair<int, long long>, std::shared_ptr<const GroupData>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(static_cast<int>(space.tag), space.field->cardinality());
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    auto data = build_group(space);
    cache[key] = data;
    return data;
}

std::unordered_set<uint64_t> conjugacy_orbit_keys(const GroupData& grp, const IntMat& g) {
    std::unordered_set<uint64_t> keys;
    for (size_t i = 0; i < grp.elems.size(); ++i)
        keys.insert(pack(imul(imul(grp.elems[i], g, grp.p), grp.invs[i], grp.p), grp.p));
    return keys;
}

}  // namespace

std::vector<Matrix> group_elements(const ClassicalSpace& space) {
    auto grp = group_data(space);
    std::vector<Matrix> out;
    out.reserve(grp->elems.size());
    for (const auto& g : grp->elems) out.push_back(from_int(g, space.field));
    return out;
}

bool are_conjugate(const ClassicalSpace& space, const Matrix& g1, const Matrix& g2) {
    if (!in_group(space, g1) || !in_group(space, g2))
        throw Error(ErrorCode::Domain, "elements must preserve the form");
    auto grp = group_data(space);
    IntMat a = to_int(g1), b = to_int(g2);
    uint64_t target = pack(b, grp->p);
    for (size_t i = 0; i < grp->elems.size(); ++i)
        if (pack(imul(imul(grp->elems[i], a, grp->p), grp->invs[i], grp->p), grp->p) == target)
            return true;
    return false;
}

Matrix similitude_h(const ClassicalSpace& space) {
    const FieldPtr& field = space.field;
    FieldElement zeta = field->nonsquare();
    Matrix h;
    switch (space.tag) {
        case SpaceKind::Sp2:
            h = {{field->one(), field->zero()}, {field->zero(), zeta}};
            break;
        case SpaceKind::O2Split:
            h = {{zeta, field->zero()}, {field->zero(), field->one()}};
            break;
        case SpaceKind::O2NonSplit: {
            // first matrix (in canonical element order) scaling the
            // anisotropic form by the non-square zeta
            Matrix target = space.J;
            for (auto& row : target)
                for (auto& x : row) x = zeta * x;
            auto elems = field->all_elements();
            for (const auto& a : elems)
                for (const auto& b : elems)
                    for (const auto& c : elems)
                        for (const auto& d : elems) {
                            Matrix cand = {{a, b}, {c, d}};
                            if (mat_eq(mat_mul(mat_mul(mat_transpose(cand), space.J), cand),
                                       target)) {
                                h = cand;
                                goto found;
                            }
                        }
        found:
            break;
        }
        case SpaceKind::Sp4:
            h = mat_identity(field, 4);
            h[2][2] = zeta;
            h[3][3] = zeta;
            break;
        case SpaceKind::Trivial:
            throw Error(ErrorCode::NotSupported, "no similitude element on a trivial space");
    }
    // th J h = lambda J with lambda a non-square.
    Matrix form = mat_mul(mat_mul(mat_transpose(h), space.J), h);
    std::optional<FieldElement> lambda;
    for (int i = 0; i < space.dim && !lambda; ++i)
        for (int j = 0; j < space.dim && !lambda; ++j)
            if (!space.J[i][j].is_zero()) lambda = form[i][j] / space.J[i][j];
    if (!lambda) throw Error(ErrorCode::InternalInconsistency, "degenerate form");
    Matrix scaled = space.J;
    for (auto& row : scaled)
        for (auto& x : row) x = *lambda * x;
    if (!mat_eq(form, scaled) || space.field->omega(*lambda) != -1)
        throw Error(ErrorCode::InternalInconsistency, "similitude element check failed");
    return h;
}

VerifyReport verify_similitude_lemma(const ClassicalSpace& space) {
    VerifyReport report;
    report.check = "two-class-dichotomy";
    report.q = space.field->cardinality();
    report.space = space_kind_name(space.tag);

    auto fail = [&report](std::string msg) {
        report.pass = false;
        report.counterexample = std::move(msg);
        return report;
    };

    auto grp = group_data(space);
    auto pairs = enumerate_S(space, true);
    FieldElement expect_det = space.field->from_integer(-space.eps);

    // reps[i]: first element seen in class i, with its conjugacy orbit and
    // the Y-squareness it was seen with.
    std::vector<IntMat> reps;
    std::vector<std::unordered_set<uint64_t>> orbits;
    std::vector<bool> rep_square;
    std::vector<long long> counts;

    for (const auto& pair : pairs) {
        Matrix n = nmap(space, pair);
        if (mat_det(n) != expect_det)
            return fail("det(nmap) != -eps at X=" + mat_to_string(pair.X) +
                        ", Y=" + mat_to_string(pair.Y));
        bool y_square = space.field->is_square(pair.Y[0][0]);
        IntMat ni = to_int(n);
        uint64_t k = pack(ni, grp->p);
        size_t cls = orbits.size();
        for (size_t i = 0; i < orbits.size(); ++i)
            if (orbits[i].count(k)) {
                cls = i;
                break;
            }
        if (cls == orbits.size()) {
            reps.push_back(ni);
            orbits.push_back(conjugacy_orbit_keys(*grp, ni));
            rep_square.push_back(y_square);
            counts.push_back(0);
            if (orbits.size() > 2)
                return fail("more than two conjugacy classes met, third at Y=" +
                            mat_to_string(pair.Y));
        }
        ++counts[cls];
        if (rep_square[cls] != y_square)
            return fail("class membership does not follow Y-squareness at Y=" +
                        mat_to_string(pair.Y));
    }
    if (orbits.size() != 2) return fail("image of S meets fewer than two classes");

    for (const auto& r : reps) report.class_reps.push_back(mat_to_string(from_int(r, space.field)));
    report.counts = counts;

    // Ad(h) must swap the two classes.
    Matrix h = similitude_h(space);
    Matrix h_inv = mat_inverse(h);
    for (int i = 0; i < 2; ++i) {
        Matrix moved = mat_mul(mat_mul(h, from_int(reps[i], space.field)), h_inv);
        uint64_t k = pack(to_int(moved), grp->p);
        if (!orbits[1 - i].count(k) || orbits[i].count(k))
            return fail("Ad(h) does not exchange the two classes");
    }

    report.pass = true;
    return report;
}

SL2CharTable SL2CharTable::make(const FieldPtr& field) {
    require_prime_field(field);
    if (field->cardinality() < 3) throw Error(ErrorCode::Domain, "q must be an odd prime");
    return {field};
}

Rat SL2CharTable::degree() const { return Rat(field->cardinality() - 1, 2); }

GaussValue SL2CharTable::trace_identity(int rho_sign) const {
    (void)rho_sign;
    return GaussValue::of_rational(degree(), field->cardinality());
}

GaussValue SL2CharTable::trace_unipotent(int rho_sign, const FieldElement& u) const {
    if (rho_sign != 1 && rho_sign != -1) throw Error(ErrorCode::Domain, "rho sign must be +1/-1");
    if (u.is_zero()) throw Error(ErrorCode::ZeroInput, "unipotent entry must be nonzero");
    return {Rat(-1, 2), Rat(rho_sign * field->omega(u), 2), field->cardinality()};
}

namespace {

Rat char_value(GlChar chi, const FieldPtr& field, const FieldElement& y) {
    if (chi == GlChar::Trivial) return Rat(1);
    return Rat(field->omega(y));
}

}  // namespace

GaussValue d_sum(const ClassicalSpace& space, GlChar gl_char, int rho_sign, bool include_zero_X) {
    if (space.tag != SpaceKind::Sp2 || space.m != 1)
        throw Error(ErrorCode::NotSupported,
                    "character data is built in for the rank-1 symplectic space only");
    long long q = space.field->cardinality();
    SL2CharTable table = SL2CharTable::make(space.field);
    auto grp = group_data(space);

    FieldElement one = space.field->one();
    FieldElement zeta = space.field->nonsquare();
    SPair rep_pair;
    Matrix u1 = {{one, one}, {space.field->zero(), one}};
    Matrix uz = {{one, zeta}, {space.field->zero(), one}};
    auto orbit_sq = conjugacy_orbit_keys(*grp, to_int(u1));
    auto orbit_ns = conjugacy_orbit_keys(*grp, to_int(uz));
    Matrix id = mat_identity(space.field, 2);

    GaussValue total = GaussValue::of_rational(Rat(0), q);
    for (const auto& pair : enumerate_S(space, false)) {
        if (mat_det(pair.Y).is_zero()) continue;
        bool x_zero = mat_is_zero(pair.X);
        if (x_zero && !include_zero_X) continue;
        Matrix n = nmap(space, pair);
        GaussValue tr(Rat(0), Rat(0), q);
        if (mat_eq(n, id)) {
            tr = table.trace_identity(rho_sign);
        } else {
            uint64_t k = pack(to_int(n), grp->p);
            if (orbit_sq.count(k))
                tr = table.trace_unipotent(rho_sign, one);
            else if (orbit_ns.count(k))
                tr = table.trace_unipotent(rho_sign, zeta);
            else
                throw Error(ErrorCode::InternalInconsistency, "nmap image outside the two classes");
        }
        total = total + tr * char_value(gl_char, space.field, pair.Y[0][0]);
    }
    return total;
}

GaussValue difference_sum(const ClassicalSpace& space, GlChar gl_char, int rho_sign_y,
                          int rho_sign_z) {
    return d_sum(space, gl_char, rho_sign_y, true) - d_sum(space, gl_char, rho_sign_z, true);
}

hecke::QPowerExpr c_count(const ClassicalSpace& space) {
    long long count = static_cast<long long>(enumerate_S(space, false).size());
    long long q = space.field->cardinality();
    int k = 0;
    long long v = count;
    while (v > 1 && v % q == 0) {
        v /= q;
        ++k;
    }
    if (v != 1)
        throw Error(ErrorCode::InternalInconsistency,
                    "solution count " + std::to_string(count) + " is not a power of q");
    return hecke::QPowerExpr::q_power(Rat(k));
}

bool sl2_ad_h_check(long long q) {
    if (q > 13) throw Error(ErrorCode::CapExceeded, "q must be <= 13");
    auto field = gf::Field::prime(q);
    ClassicalSpace space = ClassicalSpace::make(SpaceKind::Sp2, field);
    SL2CharTable table = SL2CharTable::make(field);

    FieldElement one = field->one();
    FieldElement zeta = field->nonsquare();
    Matrix u1 = {{one, one}, {field->zero(), one}};
    Matrix uz = {{one, zeta}, {field->zero(), one}};
    Matrix h = similitude_h(space);
    Matrix h_inv = mat_inverse(h);

    // Ad(h) must swap the two unipotent classes...
    Matrix m1 = mat_mul(mat_mul(h, u1), h_inv);
    Matrix mz = mat_mul(mat_mul(h, uz), h_inv);
    if (!are_conjugate(space, m1, uz) || !are_conjugate(space, mz, u1)) return false;

    // ...hence precomposing rho_+- with Ad(h) swaps the two character rows.
    for (const FieldElement& u : {one, zeta}) {
        Matrix g = {{one, u}, {field->zero(), one}};
        Matrix moved = mat_mul(mat_mul(h, g), h_inv);
        FieldElement cls = are_conjugate(space, moved, u1) ? one : zeta;
        for (int sign : {+1, -1})
            if (table.trace_unipotent(sign, cls) != table.trace_unipotent(-sign, u)) return false;
    }
    return table.trace_identity(+1) == table.trace_identity(-1);
}

Sp4Report verify_sp4(long long q) {
    Sp4Report report;
    report.q = q;
    auto field = gf::Field::prime(q);
    ClassicalSpace space = ClassicalSpace::make(SpaceKind::Sp2, field);

    hecke::QPowerExpr c = c_count(space);
    hecke::QPowerExpr abs_b = b_from_rc(Rat(2), c);
    report.c_expr = c.to_string();
    report.abs_b_expr = abs_b.to_string();

    GaussValue d_plus = d_sum(space, GlChar::Omega, +1, true);
    GaussValue d_minus = d_sum(space, GlChar::Omega, -1, true);

    report.nu_equal = hecke::nu_from_sums(d_plus, d_plus, 1, abs_b, abs_b).value;
    report.nu_diff = hecke::nu_from_sums(d_plus, d_minus, 1, abs_b, abs_b).value;

    Rat coeff = Rat(q - 1, 2) * Rat(q * q - 1);
    GaussValue expected_diff(Rat(0), coeff * 2, q);
    report.difference_matches =
        difference_sum(space, GlChar::Omega, +1, -1) == expected_diff;

    // d_y = g * (q^2-1)(q-1)/2, i.e. tr A_y equals the normalized Gauss sum.
    report.trace_ay_normalized = d_plus == GaussValue(Rat(0), coeff, q);

    report.pass = report.nu_equal == +1 && report.nu_diff == -1 && report.difference_matches &&
                  report.trace_ay_normalized;
    return report;
}

}  // namespace llpack::sg
