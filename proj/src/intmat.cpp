#include "magicarr/intmat.hpp"

#include <cstdlib>
#include <stdexcept>

namespace magicarr {

IntMat IntMat::identity(size_t n) {
    IntMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::transposed() const {
    IntMat t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMat: dimension mismatch");
    IntMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int& v = at(i, k);
            if (v == 0) continue;
            for (size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
        }
    return r;
}

void IntMat::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMat::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMat::negate_row(size_t i) {
    for (size_t c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMat::negate_col(size_t j) {
    for (size_t r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMat::add_row(size_t j, size_t i, const Int& q) {
    for (size_t c = 0; c < cols_; ++c) at(j, c) += q * at(i, c);
}

void IntMat::add_col(size_t j, size_t i, const Int& q) {
    for (size_t r = 0; r < rows_; ++r) at(r, j) += q * at(r, i);
}

namespace {

// Row/column operations on S mirrored onto the transforms so that
// U*A*V = S stays an identity throughout.
struct SnfState {
    IntMat S, U, V, Uinv, Vinv;

    void swap_rows(size_t i, size_t j) {
        S.swap_rows(i, j);
        U.swap_rows(i, j);
        Uinv.swap_cols(i, j);
    }
    void swap_cols(size_t i, size_t j) {
        S.swap_cols(i, j);
        V.swap_cols(i, j);
        Vinv.swap_rows(i, j);
    }
    void negate_row(size_t i) {
        S.negate_row(i);
        U.negate_row(i);
        Uinv.negate_col(i);
    }
    // row j += q * row i
    void add_row(size_t j, size_t i, const Int& q) {
        S.add_row(j, i, q);
        U.add_row(j, i, q);
        Uinv.add_col(i, j, -q);
    }
    // col j += q * col i
    void add_col(size_t j, size_t i, const Int& q) {
        S.add_col(j, i, q);
        V.add_col(j, i, q);
        Vinv.add_row(i, j, -q);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMat& A) {
    const size_t m = A.rows(), n = A.cols();
    SnfState st;
    st.S = A;
    st.U = IntMat::identity(m);
    st.Uinv = IntMat::identity(m);
    st.V = IntMat::identity(n);
    st.Vinv = IntMat::identity(n);

    size_t t = 0;
    while (t < m && t < n) {
        // pivot: entry of minimal absolute value in the trailing block
        size_t pi = t, pj = t;
        bool found = false;
        Int best = 0;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j) {
                const Int& v = st.S.at(i, j);
                if (v == 0) continue;
                Int av = abs(v);
                if (!found || av < best) {
                    best = av;
                    pi = i;
                    pj = j;
                    found = true;
                }
            }
        if (!found) break;
        st.swap_rows(t, pi);
        st.swap_cols(t, pj);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (st.S.at(i, t) == 0) continue;
                Int q = st.S.at(i, t) / st.S.at(t, t);
                st.add_row(i, t, -q);
                if (st.S.at(i, t) != 0) {
                    // remainder strictly smaller: promote it to the pivot
                    st.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (st.S.at(t, j) == 0) continue;
                Int q = st.S.at(t, j) / st.S.at(t, t);
                st.add_col(j, t, -q);
                if (st.S.at(t, j) != 0) {
                    st.swap_cols(t, j);
                    dirty = true;
                }
            }
        }
        if (st.S.at(t, t) < 0) st.negate_row(t);

        // divisibility chain: fold in any entry the pivot does not divide
        bool fixed = true;
        for (size_t i = t + 1; i < m && fixed; ++i)
            for (size_t j = t + 1; j < n && fixed; ++j)
                if (st.S.at(i, j) % st.S.at(t, t) != 0) {
                    st.add_row(t, i, 1);
                    fixed = false;
                }
        if (fixed) ++t;
    }

    SmithForm out;
    out.S = st.S;
    out.U = st.U;
    out.V = st.V;
    out.Uinv = st.Uinv;
    out.Vinv = st.Vinv;
    out.rank = t;
    for (size_t i = 0; i < t; ++i) out.diag.push_back(st.S.at(i, i));
    return out;
}

Int det(const IntMat& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("det: square matrix required");
    size_t n = A.rows();
    if (n == 0) return 1;
    IntMat M = A;
    Int prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (M.at(k, k) == 0) {
            size_t swap = k + 1;
            while (swap < n && M.at(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            M.swap_rows(k, swap);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j)
                M.at(i, j) = (M.at(i, j) * M.at(k, k) - M.at(i, k) * M.at(k, j)) / prev;
        prev = M.at(k, k);
    }
    return sign > 0 ? M.at(n - 1, n - 1) : -M.at(n - 1, n - 1);
}

int64_t mod_norm(Int v, int64_t d) {
    Int r = v % d;
    if (r < 0) r += d;
    return static_cast<int64_t>(r);
}

int64_t gcd64(int64_t a, int64_t b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        int64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

int64_t egcd64(int64_t a, int64_t b, int64_t& x, int64_t& y) {
    if (b == 0) {
        x = a >= 0 ? 1 : -1;
        y = 0;
        return std::abs(a);
    }
    int64_t x1, y1;
    int64_t g = egcd64(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t x, y;
    int64_t g = egcd64(((a % m) + m) % m, m, x, y);
    if (g != 1) throw std::invalid_argument("mod_inverse: arguments not coprime");
    return ((x % m) + m) % m;
}

ModSolveResult solve_mod(const SmithForm& sf, const std::vector<int64_t>& b, int64_t d) {
    const size_t m = sf.S.rows(), n = sf.S.cols();
    if (b.size() != m) throw std::invalid_argument("solve_mod: rhs size mismatch");
    ModSolveResult res;

    // U b, reduced mod d
    std::vector<int64_t> ub(m, 0);
    for (size_t i = 0; i < m; ++i) {
        Int acc = 0;
        for (size_t j = 0; j < m; ++j) acc += sf.U.at(i, j) * b[j];
        ub[i] = mod_norm(acc, d);
    }

    std::vector<int64_t> z(n, 0);
    for (size_t i = 0; i < m; ++i) {
        int64_t s = i < sf.rank ? mod_norm(sf.S.at(i, i), d) : 0;
        int64_t t = ub[i];
        int64_t g = gcd64(s, d);  // gcd(0, d) = d covers the zero rows
        if (t % g != 0) {
            // witness: (d/g) * (row i of U)
            int64_t mult = d / g;
            res.feasible = false;
            res.witness.resize(m);
            for (size_t j = 0; j < m; ++j) res.witness[j] = mod_norm(Int(mult) * sf.U.at(i, j), d);
            return res;
        }
        if (i < n && s != 0) {
            // s z = t (mod d) with g = gcd(s, d) | t
            int64_t dg = d / g;
            int64_t inv = mod_inverse((s / g) % dg, dg == 1 ? 1 : dg);
            z[i] = dg == 1 ? 0 : mod_norm(Int(t / g) * inv, dg);
        }
    }
    res.feasible = true;
    res.x.resize(n);
    for (size_t i = 0; i < n; ++i) {
        Int acc = 0;
        for (size_t j = 0; j < n; ++j) acc += sf.V.at(i, j) * z[j];
        res.x[i] = mod_norm(acc, d);
    }
    return res;
}

ModSolveResult solve_mod(const IntMat& A, const std::vector<int64_t>& b, int64_t d) {
    return solve_mod(smith_normal_form(A), b, d);
}

std::optional<std::vector<int64_t>> lexmin_solve_mod(const IntMat& A, const std::vector<int64_t>& b,
                                                     int64_t d) {
    const size_t m = A.rows(), n = A.cols();
    ModSolveResult first = solve_mod(A, b, d);
    if (!first.feasible) return std::nullopt;

    // Greedy: pin coordinates one at a time to their smallest feasible value.
    std::vector<int64_t> pinned;
    for (size_t k = 0; k < n; ++k) {
        pinned.push_back(0);
        bool ok = false;
        for (int64_t v = 0; v < d && !ok; ++v) {
            pinned[k] = v;
            IntMat aug(m + k + 1, n);
            std::vector<int64_t> augb(m + k + 1, 0);
            for (size_t i = 0; i < m; ++i) {
                for (size_t j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
                augb[i] = b[i];
            }
            for (size_t i = 0; i <= k; ++i) {
                aug.at(m + i, i) = 1;
                augb[m + i] = pinned[i];
            }
            if (solve_mod(aug, augb, d).feasible) ok = true;
        }
        if (!ok) return std::nullopt;  // unreachable when the system is feasible
    }
    return pinned;
}

}  // namespace magicarr
