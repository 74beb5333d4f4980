#include "sft/matrix.hpp"

#include <stdexcept>

namespace sft {

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (dim_ != rhs.dim_) throw std::invalid_argument("IntMatrix: dimension mismatch");
    IntMatrix out(dim_);
    BigInt acc;
    for (int i = 0; i < dim_; ++i) {
        for (int k = 0; k < dim_; ++k) {
            const BigInt& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < dim_; ++j) {
                const BigInt& bkj = rhs.at(k, j);
                if (bkj == 0) continue;
                acc = aik * bkj;
                out.at(i, j) += acc;
            }
        }
    }
    return out;
}

IntMatrix IntMatrix::pow(std::int64_t n) const {
    if (n < 0) throw std::invalid_argument("IntMatrix::pow: negative exponent");
    IntMatrix result = identity(dim_);
    IntMatrix base = *this;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

BigInt IntMatrix::trace() const {
    BigInt t = 0;
    for (int i = 0; i < dim_; ++i) t += at(i, i);
    return t;
}

} // namespace sft
