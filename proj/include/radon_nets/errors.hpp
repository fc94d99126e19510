#pragma once

#include <stdexcept>
#include <string>

namespace radon_nets {

/// Bad input: malformed files, violated preconditions, sizes over a cap.
/// The CLI maps these to exit code 2.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A result failed one of its own postconditions. Seeing one of these means
/// the library has a bug (or an input slipped past validation). Exit code 3.
class ConsistencyError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class ParseError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// An exact search was asked to run over more vertices/points than its cap.
class TooLargeError : public PreconditionError {
public:
    TooLargeError(const std::string& what, std::size_t size, std::size_t cap)
        : PreconditionError(what + " (size " + std::to_string(size) + " exceeds cap " +
                            std::to_string(cap) + ")"),
          size_(size), cap_(cap) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t cap() const noexcept { return cap_; }

private:
    std::size_t size_;
    std::size_t cap_;
};

} // namespace radon_nets
