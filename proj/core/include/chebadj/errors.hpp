#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chebadj {

// Precondition violation: bad dimensions, out-of-range parameters, malformed input.
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Exact elimination found no nonzero pivot; carries the offending column.
class SingularMatrixError : public std::runtime_error {
public:
    explicit SingularMatrixError(std::size_t pivot_column)
        : std::runtime_error("singular matrix: no pivot in column " + std::to_string(pivot_column)),
          pivot_column_(pivot_column) {}

    std::size_t pivot_column() const noexcept { return pivot_column_; }

private:
    std::size_t pivot_column_;
};

// An identity that must hold by construction failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// The floating-point diagnostic did not converge within its iteration cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace chebadj
