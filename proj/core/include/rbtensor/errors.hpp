#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbt {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operand shapes are not conformable.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A sequence or tensor that must be non-empty was empty.
class EmptyInputError : public Error {
public:
    using Error::Error;
};

/// A scalar argument (rank k, tolerance, index) was outside its valid range.
class RangeError : public Error {
public:
    using Error::Error;
};

/// A non-finite value was supplied where only finite values are admitted.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// An iterative SVD did not converge within its sweep cap.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, std::size_t iterations,
                     std::ptrdiff_t slice = -1)
        : Error(what), iterations_(iterations), slice_(slice) {}

    std::size_t iterations() const noexcept { return iterations_; }
    /// DFT-slice index the failure occurred in, or -1 for a bare matrix.
    std::ptrdiff_t slice() const noexcept { return slice_; }

private:
    std::size_t iterations_;
    std::ptrdiff_t slice_;
};

/// A tensor inverse was requested for a tensor with a singular DFT slice.
class SingularError : public Error {
public:
    SingularError(const std::string& what, std::size_t slice, std::size_t deficiency)
        : Error(what), slice_(slice), deficiency_(deficiency) {}

    std::size_t slice() const noexcept { return slice_; }
    std::size_t deficiency() const noexcept { return deficiency_; }

private:
    std::size_t slice_;
    std::size_t deficiency_;
};

/// Malformed on-disk data (RBT1 tensor or PPM frame).
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t offset)
        : Error(what + " (at byte offset " + std::to_string(offset) + ")"), detail_(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }
    /// Message without the offset suffix.
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
    std::size_t offset_;
};

}  // namespace rbt
