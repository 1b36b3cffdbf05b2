#include "pinwheel/perron.hpp"

#include <sstream>

#include "pinwheel/errors.hpp"

namespace pin {

std::vector<std::array<int, 5>> children_table(const Enumeration& e, const SubstitutionRule& r) {
    std::vector<std::array<int, 5>> table(e.classes.size());
    for (const auto& c : e.classes) table[c.id] = collared_children(c, e, r);
    return table;
}

IntMatrix collared_matrix(const std::vector<std::array<int, 5>>& children, size_t n_classes) {
    IntMatrix a(n_classes, n_classes);
    for (size_t j = 0; j < children.size(); ++j)
        for (int i : children[j]) a.at(i, j) += 1;
    return a;
}

IntMatrix mirror_permutation(const Enumeration& e) {
    IntMatrix p(e.classes.size(), e.classes.size());
    for (const auto& c : e.classes) p.at(c.mirror_id, c.id) = 1;
    return p;
}

PerronData perron_data(const IntMatrix& a, const Int& lambda) {
    const size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw EigenspaceError("perron_data: matrix not square");
    for (const auto& s : a.column_sums())
        if (s != lambda)
            throw EigenspaceError("perron_data: lambda is not the constant column sum");

    IntMatrix b = a;
    for (size_t i = 0; i < n; ++i) b.at(i, i) -= lambda;

    // Fraction-free elimination to echelon form, then rational back-substitution.
    std::vector<size_t> pivots;
    IntMatrix ech = b;
    {
        // local copy of bareiss elimination with pivot tracking
        size_t rank = 0;
        Int prev(1);
        for (size_t col = 0; col < n && rank < n; ++col) {
            size_t piv = rank;
            while (piv < n && ech.at(piv, col) == 0) ++piv;
            if (piv == n) continue;
            if (piv != rank)
                for (size_t j = 0; j < n; ++j) std::swap(ech.at(piv, j), ech.at(rank, j));
            const Int p = ech.at(rank, col);
            for (size_t i = rank + 1; i < n; ++i) {
                Int mi = ech.at(i, col);
                for (size_t j = col; j < n; ++j) {
                    Int v = ech.at(i, j) * p - mi * ech.at(rank, j);
                    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                    ech.at(i, j) = std::move(v);
                }
            }
            prev = p;
            pivots.push_back(col);
            ++rank;
        }
    }
    const size_t rank = pivots.size();
    if (rank != n - 1) {
        std::ostringstream os;
        os << "perron_data: eigenspace dimension " << (n - rank) << " != 1";
        throw EigenspaceError(os.str());
    }

    // one free column; x_free = 1, back-substitute over Q
    std::vector<bool> is_pivot(n, false);
    for (size_t c : pivots) is_pivot[c] = true;
    size_t free_col = 0;
    while (free_col < n && is_pivot[free_col]) ++free_col;

    std::vector<Rat> x(n, Rat(0));
    x[free_col] = 1;
    for (size_t r = rank; r-- > 0;) {
        size_t pc = pivots[r];
        Rat acc(0);
        for (size_t j = pc + 1; j < n; ++j)
            if (ech.at(r, j) != 0) acc += Rat(ech.at(r, j)) * x[j];
        x[pc] = -acc / Rat(ech.at(r, pc));
    }

    Rat total(0);
    for (const auto& v : x) total += v;
    if (total == 0) throw EigenspaceError("perron_data: eigenvector sums to zero");
    PerronData out;
    out.lambda = lambda;
    out.rank_shifted = rank;
    out.alpha.resize(n);
    for (size_t i = 0; i < n; ++i) {
        out.alpha[i] = x[i] / total;
        if (out.alpha[i] <= 0)
            throw EigenspaceError("perron_data: no entrywise positive eigenvector");
    }

    // exact residual check A alpha = lambda alpha
    for (size_t i = 0; i < n; ++i) {
        Rat acc(0);
        for (size_t j = 0; j < n; ++j)
            if (a.at(i, j) != 0) acc += Rat(a.at(i, j)) * out.alpha[j];
        if (acc != Rat(lambda) * out.alpha[i])
            throw EigenspaceError("perron_data: eigen equation fails");
    }

    out.denominator = 1;
    for (const auto& v : out.alpha)
        mpz_lcm(out.denominator.get_mpz_t(), out.denominator.get_mpz_t(),
                den(v).get_mpz_t());
    out.alpha_prime.resize(n);
    out.gcd_alpha_prime = 0;
    for (size_t i = 0; i < n; ++i) {
        Rat scaled = out.alpha[i] * Rat(out.denominator);
        out.alpha_prime[i] = num(scaled);
        mpz_gcd(out.gcd_alpha_prime.get_mpz_t(), out.gcd_alpha_prime.get_mpz_t(),
                out.alpha_prime[i].get_mpz_t());
    }
    return out;
}

}  // namespace pin
