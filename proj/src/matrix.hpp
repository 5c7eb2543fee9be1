// Dense exact matrices and the lattice/vector-space routines the rest of
// the library is built on: rational rank and kernel bases, Smith normal
// form with unimodular transforms, cokernel structure.
//
// Sizes here are small (tens of rows/columns), so everything is plain
// Gaussian or Euclidean elimination; no modular or block tricks.
#pragma once

#include "rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace fanlab {

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVec>& rows, std::size_t cols);
    static RatMatrix from_int_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static RatMatrix from_int_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    RatVec row(std::size_t i) const;
    RatVec col(std::size_t j) const;

    RatMatrix transposed() const;
    bool is_zero() const;

    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rat> e_;
};

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVec>& cols, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    IntMatrix transposed() const;
    RatMatrix to_rat() const;

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Int> e_;
};

RatMatrix mul(const RatMatrix& a, const RatMatrix& b);
IntMatrix mul(const IntMatrix& a, const IntMatrix& b);
RatVec mul(const RatMatrix& a, const RatVec& v);
IntVec mul(const IntMatrix& a, const IntVec& v);

// Reduced row echelon form. Pivot columns come back in increasing order;
// pivot entries are 1 and are the only nonzero entries of their columns.
RatMatrix rref(const RatMatrix& m, std::vector<std::size_t>* pivot_cols = nullptr);

std::size_t rank_q(const RatMatrix& m);

// Rank of the span of a set of integer vectors (treated as rows).
std::size_t rank_of_vectors(const std::vector<IntVec>& vecs, std::size_t dim);

// Basis of the right kernel {x : m x = 0}, returned as the columns of an
// m.cols() x nullity matrix in reduced column echelon form. That form is
// unique, so equal kernels give byte-equal bases regardless of how m was
// row-ordered or scaled.
RatMatrix kernel_basis_q(const RatMatrix& m);

// Exact determinant via fraction-free-ish Gaussian elimination.
Rat determinant(const RatMatrix& m);

// Solve a x = b for each column of b. Returns nullopt if any column of b
// is outside the column span of a. When solutions are not unique the one
// with free variables set to zero (w.r.t. rref pivots) is returned.
std::optional<RatMatrix> solve(const RatMatrix& a, const RatMatrix& b);

struct SnfResult {
    IntMatrix left;       // unimodular, rows x rows
    std::vector<Int> diag;  // min(rows, cols) entries, d1 | d2 | ..., all >= 0
    IntMatrix right;      // unimodular, cols x cols
};

// Smith normal form: left * m * right = diag(d). Deterministic: pivots are
// chosen by smallest absolute value, ties by lowest (row, col).
SnfResult smith_normal_form(const IntMatrix& m);

struct AbelianGroup {
    std::size_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors, each >= 2, t1 | t2 | ...

    bool operator==(const AbelianGroup&) const = default;
    bool trivial() const { return free_rank == 0 && torsion.empty(); }
    std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/4", "0"
};

// Z^rows / (column span of m), in invariant-factor form.
AbelianGroup cokernel_structure(const IntMatrix& m);

// Canonical form of Z^free_rank + sum of Z/orders[i]; zero orders add free
// summands, units are dropped, the rest are merged into a divisibility
// chain by prime-power parts.
AbelianGroup abelian_from_cyclic(std::vector<Int> orders, std::size_t free_rank = 0);

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

// a tensor Z/n. Free summands become Z/n, Z/m becomes Z/gcd(m, n).
AbelianGroup tensor_with_cyclic(const AbelianGroup& a, const Int& n);

}  // namespace fanlab
