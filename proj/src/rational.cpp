#include "pinwheel/rational.hpp"

#include <vector>

namespace pin {

Int floor_int(const Rat& q) {
    Int out;
    mpz_fdiv_q(out.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return out;
}

bool denominator_is_power_of(const Rat& q, const Int& lambda) {
    Int d = q.get_den();
    while (d > 1) {
        if (!mpz_divisible_p(d.get_mpz_t(), lambda.get_mpz_t())) return false;
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), lambda.get_mpz_t());
    }
    return true;
}

Int strip_factors(Int v, const Int& lambda) {
    while (v != 0 && mpz_divisible_p(v.get_mpz_t(), lambda.get_mpz_t()))
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), lambda.get_mpz_t());
    return v;
}

namespace {

void append_magnitude(std::string& out, const Int& z) {
    const size_t bytes = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
    out.push_back(static_cast<char>((bytes >> 24) & 0xff));
    out.push_back(static_cast<char>((bytes >> 16) & 0xff));
    out.push_back(static_cast<char>((bytes >> 8) & 0xff));
    out.push_back(static_cast<char>(bytes & 0xff));
    if (z == 0) return;
    std::vector<unsigned char> buf(bytes);
    size_t written = 0;
    mpz_export(buf.data(), &written, 1, 1, 1, 0, z.get_mpz_t());
    out.append(reinterpret_cast<const char*>(buf.data()), written);
}

}  // namespace

void append_key(std::string& out, const Int& z) {
    out.push_back(z == 0 ? '0' : (z > 0 ? '+' : '-'));
    append_magnitude(out, abs(z));
}

void append_key(std::string& out, const Rat& q) {
    append_key(out, Int(q.get_num()));
    append_magnitude(out, Int(q.get_den()));
}

std::string to_hex(const std::string& bytes) {
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

}  // namespace pin
