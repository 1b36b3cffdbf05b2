#pragma once

// The stationary dimension group lim(Z^N, A'), its unique state, frequency
// queries and the canonical gap-labelling module c * Z[1/lambda].

#include <vector>

#include "pinwheel/perron.hpp"

namespace pin {

// The class [k, n] in the direct limit.
struct LimitElement {
    std::vector<Int> vector;
    int level = 1;  // n >= 1; level 1 is the first copy
};

// p([k, n]) = (1/D) (1/lambda^{n-1}) sum k_i alpha'_i, exactly.
Rat state(const LimitElement& e, const std::vector<Int>& alpha_prime, const Int& D,
          const Int& lambda);

// Module c * Z[1/lambda^d] in canonical form: numerator and denominator of c
// coprime to lambda.
struct FreqModule {
    Rat coefficient;
    Int base;

    bool operator==(const FreqModule& o) const {
        return coefficient == o.coefficient && base == o.base;
    }
};

FreqModule gap_module(const std::vector<Int>& alpha_prime, const Int& D, const Int& lambda);

// Frequency of a collared class among level-l supertile slots: alpha_id / lambda^l.
Rat class_frequency(size_t class_id, int level, const PerronData& pd);

// Decides x in c * Z[1/lambda].
bool membership(const Rat& x, const FreqModule& m);

}  // namespace pin
