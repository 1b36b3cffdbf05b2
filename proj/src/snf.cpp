#include "pinwheel/snf.hpp"

#include <utility>

namespace pin {

namespace {

struct Worker {
    IntMatrix m, u, v;
    Int det_u{1}, det_v{1};

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
        for (size_t j = 0; j < u.cols(); ++j) std::swap(u.at(a, j), u.at(b, j));
        det_u = -det_u;
    }
    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
        for (size_t i = 0; i < v.rows(); ++i) std::swap(v.at(i, a), v.at(i, b));
        det_v = -det_v;
    }
    void addmul_row(size_t dst, size_t src, const Int& q) {
        // row_dst += q * row_src
        if (q == 0) return;
        for (size_t j = 0; j < m.cols(); ++j)
            if (m.at(src, j) != 0)
                mpz_addmul(m.at(dst, j).get_mpz_t(), q.get_mpz_t(), m.at(src, j).get_mpz_t());
        for (size_t j = 0; j < u.cols(); ++j)
            if (u.at(src, j) != 0)
                mpz_addmul(u.at(dst, j).get_mpz_t(), q.get_mpz_t(), u.at(src, j).get_mpz_t());
    }
    void addmul_col(size_t dst, size_t src, const Int& q) {
        if (q == 0) return;
        for (size_t i = 0; i < m.rows(); ++i)
            if (m.at(i, src) != 0)
                mpz_addmul(m.at(i, dst).get_mpz_t(), q.get_mpz_t(), m.at(i, src).get_mpz_t());
        for (size_t i = 0; i < v.rows(); ++i)
            if (v.at(i, src) != 0)
                mpz_addmul(v.at(i, dst).get_mpz_t(), q.get_mpz_t(), v.at(i, src).get_mpz_t());
    }
    void negate_row(size_t i) {
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
        for (size_t j = 0; j < u.cols(); ++j) u.at(i, j) = -u.at(i, j);
        det_u = -det_u;
    }
};

}  // namespace

SNFResult snf(const IntMatrix& a) {
    const size_t rows = a.rows(), cols = a.cols();
    Worker w;
    w.m = a;
    w.u = IntMatrix::identity(rows);
    w.v = IntMatrix::identity(cols);

    const size_t steps = std::min(rows, cols);
    size_t t = 0;
    for (; t < steps; ++t) {
        // deterministic pivot: smallest nonzero |entry| in the submatrix,
        // row-major tie break
        size_t pi = 0, pj = 0;
        bool found = false;
        Int best;
        for (size_t i = t; i < rows && !(found && best == 1); ++i) {
            for (size_t j = t; j < cols; ++j) {
                const Int& x = w.m.at(i, j);
                if (x == 0) continue;
                Int ax = abs(x);
                if (!found || ax < best) {
                    best = ax;
                    pi = i;
                    pj = j;
                    found = true;
                    if (best == 1) break;
                }
            }
        }
        if (!found) break;
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        // clear row and column t; restart whenever a remainder shrinks the pivot
        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                const Int& x = w.m.at(i, t);
                if (x == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), w.m.at(t, t).get_mpz_t());
                w.addmul_row(i, t, Int(-q));
                if (w.m.at(i, t) != 0) {
                    // remainder is smaller than the pivot; promote it
                    w.swap_rows(t, i);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                const Int& x = w.m.at(t, j);
                if (x == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), w.m.at(t, t).get_mpz_t());
                w.addmul_col(j, t, Int(-q));
                if (w.m.at(t, j) != 0) {
                    w.swap_cols(t, j);
                    dirty = true;
                }
            }
            if (!dirty) break;
        }

        // divisibility: the pivot must divide every remaining entry
        for (;;) {
            bool fixed = true;
            for (size_t i = t + 1; i < rows && fixed; ++i)
                for (size_t j = t + 1; j < cols && fixed; ++j)
                    if (!mpz_divisible_p(w.m.at(i, j).get_mpz_t(), w.m.at(t, t).get_mpz_t())) {
                        w.addmul_row(t, i, Int(1));
                        fixed = false;
                    }
            if (fixed) break;
            // re-clear row t
            for (;;) {
                bool dirty = false;
                for (size_t j = t + 1; j < cols; ++j) {
                    const Int& x = w.m.at(t, j);
                    if (x == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), w.m.at(t, t).get_mpz_t());
                    w.addmul_col(j, t, Int(-q));
                    if (w.m.at(t, j) != 0) {
                        w.swap_cols(t, j);
                        dirty = true;
                    }
                }
                for (size_t i = t + 1; i < rows; ++i) {
                    const Int& x = w.m.at(i, t);
                    if (x == 0) continue;
                    Int q;
                    mpz_fdiv_q(q.get_mpz_t(), x.get_mpz_t(), w.m.at(t, t).get_mpz_t());
                    w.addmul_row(i, t, Int(-q));
                    if (w.m.at(i, t) != 0) {
                        w.swap_rows(t, i);
                        dirty = true;
                    }
                }
                if (!dirty) break;
            }
        }

        if (w.m.at(t, t) < 0) w.negate_row(t);
    }

    SNFResult out;
    out.rank = t;
    out.d = std::move(w.m);
    out.u = std::move(w.u);
    out.v = std::move(w.v);
    out.det_u = w.det_u;
    out.det_v = w.det_v;
    for (size_t k = 0; k < out.rank; ++k) out.invariant_factors.push_back(out.d.at(k, k));
    return out;
}

SNFVerification verify_snf(const IntMatrix& a, const SNFResult& s, size_t independent_det_limit) {
    SNFVerification res;
    res.product_ok = mul(mul(s.u, a), s.v) == s.d;

    res.diagonal_ok = true;
    for (size_t i = 0; i < s.d.rows() && res.diagonal_ok; ++i)
        for (size_t j = 0; j < s.d.cols(); ++j)
            if (i != j && s.d.at(i, j) != 0) {
                res.diagonal_ok = false;
                break;
            }
    for (size_t k = 0; k + 1 < s.rank && res.diagonal_ok; ++k)
        if (!mpz_divisible_p(s.d.at(k + 1, k + 1).get_mpz_t(), s.d.at(k, k).get_mpz_t()))
            res.diagonal_ok = false;
    for (size_t k = 0; k < s.rank && res.diagonal_ok; ++k)
        if (s.d.at(k, k) <= 0) res.diagonal_ok = false;

    res.tracked_dets_ok = (abs(s.det_u) == 1) && (abs(s.det_v) == 1);

    if (independent_det_limit > 0 && s.u.rows() <= independent_det_limit &&
        s.v.rows() <= independent_det_limit) {
        res.independent_dets_run = true;
        res.independent_dets_ok =
            det_bareiss(s.u) == s.det_u && det_bareiss(s.v) == s.det_v;
    }
    return res;
}

}  // namespace pin
