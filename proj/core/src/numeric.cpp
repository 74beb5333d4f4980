#include "sft/numeric.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace sft {

double to_double(const BigInt& v) { return v.get_d(); }

double log_big(const BigInt& v) {
    if (v <= 0) throw std::domain_error("log_big: nonpositive argument");
    signed long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

BigRat make_rat(BigInt num, BigInt den) {
    BigRat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", v);
    return buf;
}

std::string rat_to_string(const BigRat& q) { return q.get_str(); }

} // namespace sft
