#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace sft {

// Exact path counts routinely exceed 64-bit range (lambda^100 and beyond),
// so all counting runs over arbitrary-precision integers and exact ratios
// over arbitrary-precision rationals.
using BigInt = mpz_class;
using BigRat = mpq_class;

double to_double(const BigInt& v);

/// Natural log of a positive big integer (accurate for values far beyond
/// double range).
double log_big(const BigInt& v);

/// Canonicalized num/den.
BigRat make_rat(BigInt num, BigInt den);

/// Fixed 15-significant-digit formatting used in every report, so identical
/// inputs produce byte-identical output.
std::string format_double(double v);

std::string rat_to_string(const BigRat& q);

} // namespace sft
