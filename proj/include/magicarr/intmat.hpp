#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <vector>

namespace magicarr {

using Int = boost::multiprecision::cpp_int;

/// Dense integer matrix with exact (arbitrary precision) entries.
/// Unimodular transforms can blow up entries well past 64 bits even for
/// small inputs, so everything here stays exact.
class IntMat {
  public:
    IntMat() : rows_(0), cols_(0) {}
    IntMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMat identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    IntMat transposed() const;
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void negate_row(size_t i);
    void negate_col(size_t j);
    /// row j += q * row i
    void add_row(size_t j, size_t i, const Int& q);
    /// col j += q * col i
    void add_col(size_t j, size_t i, const Int& q);

  private:
    size_t rows_, cols_;
    std::vector<Int> a_;
};

/// U * A * V = S with U, V unimodular and S diagonal with a divisibility
/// chain s1 | s2 | ... . Inverses are tracked so kernels and preimages can
/// be read off without a separate inversion step.
struct SmithForm {
    IntMat U, V, Uinv, Vinv, S;
    size_t rank = 0;
    std::vector<Int> diag;  // the nonzero invariant factors, in chain order
};

SmithForm smith_normal_form(const IntMat& A);

/// Exact determinant (Bareiss), used to spot-check unimodularity in tests.
Int det(const IntMat& A);

/// Result of solving A x = b over Z_d. When infeasible, `witness` is a row
/// vector y over Z_d with y*A = 0 (mod d) and y*b != 0 (mod d).
struct ModSolveResult {
    bool feasible = false;
    std::vector<int64_t> x;
    std::vector<int64_t> witness;
};

/// Solve A x = b mod d from a precomputed Smith form of A.
ModSolveResult solve_mod(const SmithForm& sf, const std::vector<int64_t>& b, int64_t d);
ModSolveResult solve_mod(const IntMat& A, const std::vector<int64_t>& b, int64_t d);

/// Lexicographically minimal solution of A x = b mod d (coordinates in the
/// given column order), or nullopt when infeasible.
std::optional<std::vector<int64_t>> lexmin_solve_mod(const IntMat& A, const std::vector<int64_t>& b,
                                                     int64_t d);

int64_t mod_norm(Int v, int64_t d);
int64_t gcd64(int64_t a, int64_t b);
/// Extended gcd: returns g and x, y with a x + b y = g.
int64_t egcd64(int64_t a, int64_t b, int64_t& x, int64_t& y);
/// Multiplicative inverse of a mod m (requires gcd(a, m) = 1).
int64_t mod_inverse(int64_t a, int64_t m);

}  // namespace magicarr
