#pragma once

// Dense arbitrary-precision integer matrices for substitution, boundary and
// eigen computations.

#include <cstddef>
#include <vector>

#include "pinwheel/rational.hpp"

namespace pin {

class IntMatrix {
   public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const Int& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(const IntMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    IntMatrix transpose() const;
    bool entrywise_positive() const;
    bool entrywise_nonnegative() const;
    bool is_zero() const;
    std::vector<Int> column_sums() const;
    size_t count_nonzero() const;

   private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<Int> a_;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);         // OpenMP over rows
IntMatrix mul_serial(const IntMatrix& x, const IntMatrix& y);  // reference kernel
IntMatrix add(const IntMatrix& x, const IntMatrix& y);
IntMatrix sub(const IntMatrix& x, const IntMatrix& y);
std::vector<Int> mul_vec(const IntMatrix& x, const std::vector<Int>& v);

struct PrimitivityResult {
    bool primitive = false;
    int k = -1;        // smallest power with A^k entrywise positive
    IntMatrix power;   // A^k, the certificate
};

// Smallest k <= kmax with A^k > 0 entrywise. Diagnostic result, not an
// exception, when no such power exists.
PrimitivityResult primitivity(const IntMatrix& a, int kmax = 32);

// Rank over Q by fraction-free (Bareiss) elimination.
size_t rank_bareiss(IntMatrix m);

// Determinant of a square matrix, fraction-free.
Int det_bareiss(IntMatrix m);

// Triplet-form sparse integer matrix for boundary/chain maps. Entries are
// coalesced and sorted by (row, col).
struct SparseIntMatrix {
    size_t rows = 0, cols = 0;
    struct Entry {
        int32_t row, col;
        long val;
    };
    std::vector<Entry> entries;

    void add(int32_t r, int32_t c, long v);  // accumulates; call coalesce() after
    void coalesce();
    IntMatrix to_dense() const;
    SparseIntMatrix transpose() const;
    size_t nnz() const { return entries.size(); }
};

SparseIntMatrix mul(const SparseIntMatrix& x, const SparseIntMatrix& y);
bool is_zero(const SparseIntMatrix& m);
bool equal(const SparseIntMatrix& a, const SparseIntMatrix& b);

// Rank over Q of a sparse integer matrix (exact rational elimination with
// Markowitz-style pivoting; boundary matrices stay sparse in practice).
size_t rank_sparse(const SparseIntMatrix& m);

}  // namespace pin
