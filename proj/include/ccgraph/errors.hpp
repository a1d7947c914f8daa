#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccgraph {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or semantically invalid ring spec. `position` is the byte
/// offset into the ring spec string where the problem was detected.
class SpecError : public Error {
public:
    SpecError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Refusing to build or sweep a ring beyond the configured size limits.
class SizeGuardError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace ccgraph
