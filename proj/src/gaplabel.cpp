#include "pinwheel/gaplabel.hpp"

#include <stdexcept>

#include "pinwheel/errors.hpp"

namespace pin {

Rat state(const LimitElement& e, const std::vector<Int>& alpha_prime, const Int& D,
          const Int& lambda) {
    if (e.vector.size() != alpha_prime.size())
        throw std::invalid_argument("state: dimension mismatch");
    if (e.level < 1) throw std::invalid_argument("state: level must be >= 1");
    Int dot(0);
    for (size_t i = 0; i < e.vector.size(); ++i) dot += e.vector[i] * alpha_prime[i];
    Int pow(1);
    for (int i = 1; i < e.level; ++i) pow *= lambda;
    return rat(dot, D * pow);
}

FreqModule gap_module(const std::vector<Int>& alpha_prime, const Int& D, const Int& lambda) {
    Int g(0);
    for (const auto& v : alpha_prime) {
        if (v <= 0) throw EigenspaceError("gap_module: alpha' must be positive");
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    Rat c = rat(g, D);
    FreqModule m;
    m.base = lambda;
    m.coefficient = rat(strip_factors(num(c), lambda), strip_factors(den(c), lambda));
    return m;
}

Rat class_frequency(size_t class_id, int level, const PerronData& pd) {
    if (class_id >= pd.alpha.size()) throw std::out_of_range("class_frequency: unknown id");
    if (level < 0) throw std::invalid_argument("class_frequency: negative level");
    Int pow(1);
    for (int i = 0; i < level; ++i) pow *= pd.lambda;
    return pd.alpha[class_id] / Rat(pow);
}

bool membership(const Rat& x, const FreqModule& m) {
    Rat q = x / m.coefficient;
    return denominator_is_power_of(q, m.base);
}

}  // namespace pin
