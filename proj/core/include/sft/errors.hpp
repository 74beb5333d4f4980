#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sft {

/// Malformed input or violated precondition (bad graph description,
/// path-inconsistent word, parameter out of the supported range, ...).
class validation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An enumeration would exceed the configured cap. The exact count (decimal
/// string, it may not fit in 64 bits) is still available.
class cap_exceeded : public std::runtime_error {
public:
    cap_exceeded(const std::string& what, std::string count)
        : std::runtime_error(what), count_(std::move(count)) {}

    const std::string& count() const noexcept { return count_; }

private:
    std::string count_;
};

/// An empirical measure was requested on an empty heteroclinic set.
class undefined_measure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sft
