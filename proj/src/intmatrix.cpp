#include "pinwheel/intmatrix.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace pin {

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

bool IntMatrix::entrywise_positive() const {
    for (const auto& v : a_)
        if (v <= 0) return false;
    return !a_.empty();
}

bool IntMatrix::entrywise_nonnegative() const {
    for (const auto& v : a_)
        if (v < 0) return false;
    return true;
}

bool IntMatrix::is_zero() const {
    for (const auto& v : a_)
        if (v != 0) return false;
    return true;
}

std::vector<Int> IntMatrix::column_sums() const {
    std::vector<Int> s(cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) s[j] += at(i, j);
    return s;
}

size_t IntMatrix::count_nonzero() const {
    size_t n = 0;
    for (const auto& v : a_)
        if (v != 0) ++n;
    return n;
}

namespace {

IntMatrix mul_impl(const IntMatrix& x, const IntMatrix& y, bool parallel) {
    if (x.cols() != y.rows()) throw std::invalid_argument("mul: shape mismatch");
    IntMatrix out(x.rows(), y.cols());
    const long rows = static_cast<long>(x.rows());
#pragma omp parallel for schedule(static) if (parallel)
    for (long i = 0; i < rows; ++i) {
        Int acc;
        for (size_t k = 0; k < x.cols(); ++k) {
            const Int& xik = x.at(i, k);
            if (xik == 0) continue;
            for (size_t j = 0; j < y.cols(); ++j) {
                const Int& ykj = y.at(k, j);
                if (ykj == 0) continue;
                mpz_addmul(out.at(i, j).get_mpz_t(), xik.get_mpz_t(), ykj.get_mpz_t());
            }
        }
    }
    return out;
}

}  // namespace

IntMatrix mul(const IntMatrix& x, const IntMatrix& y) { return mul_impl(x, y, true); }
IntMatrix mul_serial(const IntMatrix& x, const IntMatrix& y) { return mul_impl(x, y, false); }

IntMatrix add(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("add: shape mismatch");
    IntMatrix out(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) + y.at(i, j);
    return out;
}

IntMatrix sub(const IntMatrix& x, const IntMatrix& y) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("sub: shape mismatch");
    IntMatrix out(x.rows(), x.cols());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j) out.at(i, j) = x.at(i, j) - y.at(i, j);
    return out;
}

std::vector<Int> mul_vec(const IntMatrix& x, const std::vector<Int>& v) {
    if (x.cols() != v.size()) throw std::invalid_argument("mul_vec: shape mismatch");
    std::vector<Int> out(x.rows());
    for (size_t i = 0; i < x.rows(); ++i)
        for (size_t j = 0; j < x.cols(); ++j)
            if (x.at(i, j) != 0) out[i] += x.at(i, j) * v[j];
    return out;
}

PrimitivityResult primitivity(const IntMatrix& a, int kmax) {
    PrimitivityResult res;
    if (a.rows() != a.cols() || !a.entrywise_nonnegative()) return res;
    IntMatrix p = a;
    for (int k = 1; k <= kmax; ++k) {
        if (p.entrywise_positive()) {
            res.primitive = true;
            res.k = k;
            res.power = std::move(p);
            return res;
        }
        if (k < kmax) p = mul(p, a);
    }
    return res;
}

namespace {

// Fraction-free forward elimination; returns the rank, optionally the
// echelon matrix, pivot columns and the permutation sign.
size_t bareiss_echelon(IntMatrix& m, std::vector<size_t>* pivot_cols, int* perm_sign) {
    const size_t rows = m.rows(), cols = m.cols();
    size_t rank = 0;
    Int prev(1);
    int sign = 1;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && m.at(piv, col) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != rank) {
            for (size_t j = 0; j < cols; ++j) std::swap(m.at(piv, j), m.at(rank, j));
            sign = -sign;
        }
        const Int& p = m.at(rank, col);
        for (size_t i = rank + 1; i < rows; ++i) {
            Int mi = m.at(i, col);
            for (size_t j = col; j < cols; ++j) {
                Int v = m.at(i, j) * p - mi * m.at(rank, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m.at(i, j) = std::move(v);
            }
        }
        prev = p;
        if (pivot_cols) pivot_cols->push_back(col);
        ++rank;
    }
    if (perm_sign) *perm_sign = sign;
    return rank;
}

}  // namespace

size_t rank_bareiss(IntMatrix m) { return bareiss_echelon(m, nullptr, nullptr); }

Int det_bareiss(IntMatrix m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("det: not square");
    const size_t n = m.rows();
    if (n == 0) return Int(1);
    int sign = 1;
    size_t rank = bareiss_echelon(m, nullptr, &sign);
    if (rank < n) return Int(0);
    // Bareiss leaves det (up to the permutation sign) in the last pivot.
    Int d = m.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

void SparseIntMatrix::add(int32_t r, int32_t c, long v) {
    if (v != 0) entries.push_back(Entry{r, c, v});
}

void SparseIntMatrix::coalesce() {
    std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    std::vector<Entry> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col)
            out.back().val += e.val;
        else
            out.push_back(e);
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Entry& e) { return e.val == 0; }),
              out.end());
    entries = std::move(out);
}

IntMatrix SparseIntMatrix::to_dense() const {
    IntMatrix m(rows, cols);
    for (const auto& e : entries) m.at(e.row, e.col) += e.val;
    return m;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.entries.reserve(entries.size());
    for (const auto& e : entries) t.entries.push_back(Entry{e.col, e.row, e.val});
    t.coalesce();
    return t;
}

SparseIntMatrix mul(const SparseIntMatrix& x, const SparseIntMatrix& y) {
    if (x.cols != y.rows) throw std::invalid_argument("sparse mul: shape mismatch");
    // index y rows
    std::vector<std::vector<std::pair<int32_t, long>>> yrow(y.rows);
    for (const auto& e : y.entries) yrow[e.row].emplace_back(e.col, e.val);
    SparseIntMatrix out;
    out.rows = x.rows;
    out.cols = y.cols;
    for (const auto& e : x.entries)
        for (const auto& [c, v] : yrow[e.col]) out.add(e.row, c, e.val * v);
    out.coalesce();
    return out;
}

bool is_zero(const SparseIntMatrix& m) {
    for (const auto& e : m.entries)
        if (e.val != 0) return false;
    return true;
}

bool equal(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    SparseIntMatrix x = a, y = b;
    x.coalesce();
    y.coalesce();
    if (x.entries.size() != y.entries.size()) return false;
    for (size_t i = 0; i < x.entries.size(); ++i) {
        const auto& p = x.entries[i];
        const auto& q = y.entries[i];
        if (p.row != q.row || p.col != q.col || p.val != q.val) return false;
    }
    return true;
}

size_t rank_sparse(const SparseIntMatrix& m) {
    // Exact rational elimination on a row-map representation. Pivot choice:
    // unit entries first, then fewest-nonzeros row, to limit fill-in.
    std::vector<std::map<int32_t, Rat>> row(m.rows);
    for (const auto& e : m.entries) {
        Rat& v = row[e.row][e.col];
        v += e.val;
        if (v == 0) row[e.row].erase(e.col);
    }
    std::vector<bool> done(m.rows, false);
    size_t rank = 0;
    for (;;) {
        long best = -1;
        size_t best_size = 0;
        bool best_unit = false;
        for (size_t i = 0; i < m.rows; ++i) {
            if (done[i] || row[i].empty()) continue;
            bool unit = false;
            for (const auto& [c, v] : row[i])
                if (abs(num(v)) == 1 && den(v) == 1) {
                    unit = true;
                    break;
                }
            if (best < 0 || (unit && !best_unit) ||
                (unit == best_unit && row[i].size() < best_size)) {
                best = static_cast<long>(i);
                best_size = row[i].size();
                best_unit = unit;
            }
        }
        if (best < 0) break;
        done[best] = true;
        ++rank;
        // pick pivot column: unit value if available, else first
        int32_t pc = row[best].begin()->first;
        for (const auto& [c, v] : row[best])
            if (abs(num(v)) == 1 && den(v) == 1) {
                pc = c;
                break;
            }
        Rat pv = row[best][pc];
        std::vector<std::pair<int32_t, Rat>> prow(row[best].begin(), row[best].end());
        for (size_t i = 0; i < m.rows; ++i) {
            if (done[i] || row[i].empty()) continue;
            auto it = row[i].find(pc);
            if (it == row[i].end()) continue;
            Rat f = it->second / pv;
            for (const auto& [c, v] : prow) {
                Rat& t = row[i][c];
                t -= f * v;
                if (t == 0) row[i].erase(c);
            }
        }
        row[best].clear();
    }
    return rank;
}

}  // namespace pin
