#pragma once

#include "sft/numeric.hpp"

#include <cstdint>
#include <vector>

namespace sft {

/// Square matrix of arbitrary-precision nonnegative integers, indexed by the
/// canonical vertex order of the graph it was built from.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int dim) : dim_(dim), a_(static_cast<std::size_t>(dim) * dim) {}

    static IntMatrix identity(int dim);

    int dim() const noexcept { return dim_; }

    BigInt& at(int i, int j) { return a_[idx(i, j)]; }
    const BigInt& at(int i, int j) const { return a_[idx(i, j)]; }

    IntMatrix operator*(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const { return dim_ == rhs.dim_ && a_ == rhs.a_; }

    /// n-th power by repeated squaring; power 0 is the identity.
    IntMatrix pow(std::int64_t n) const;

    BigInt trace() const;

private:
    std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * dim_ + j; }

    int dim_ = 0;
    std::vector<BigInt> a_;
};

} // namespace sft
