#pragma once

// The collared substitution matrix and exact Perron eigendata over Q.

#include <array>
#include <vector>

#include "pinwheel/corona.hpp"
#include "pinwheel/intmatrix.hpp"

namespace pin {

// Child-class table: row c = the 5 collared child classes of class c.
std::vector<std::array<int, 5>> children_table(const Enumeration& e, const SubstitutionRule& r);

// A[i][j] = multiplicity of class i among the children of class j; every
// column sums to the child count.
IntMatrix collared_matrix(const std::vector<std::array<int, 5>>& children, size_t n_classes);

// Mirror permutation as a matrix P (P A P = A for the pinwheel).
IntMatrix mirror_permutation(const Enumeration& e);

struct PerronData {
    Int lambda;
    std::vector<Rat> alpha;        // A alpha = lambda alpha, alpha > 0, sum 1
    Int denominator;               // least common denominator D
    std::vector<Int> alpha_prime;  // D * alpha
    Int gcd_alpha_prime;
    size_t rank_shifted;           // rank(A - lambda I), must be n-1
};

// Exact Perron data for a constant-column-sum nonnegative matrix. lambda
// must equal the column sum (checked). Throws EigenspaceError when the
// eigenspace dimension differs from 1 or no positive eigenvector exists.
PerronData perron_data(const IntMatrix& a, const Int& lambda);

}  // namespace pin
