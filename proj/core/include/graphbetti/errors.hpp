#ifndef GRAPHBETTI_ERRORS_HPP
#define GRAPHBETTI_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gb {

// Malformed textual input (edge lists, graph6, CLI graph specs).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte_offset)
        : std::runtime_error(msg + " (at byte " + std::to_string(byte_offset) + ")"),
          offset_(byte_offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Input exceeds a hard size limit (vertex cap, face cap, ...).
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A property the theory guarantees failed to hold. Must never fire on
// valid inputs; if it does, either the build is broken or the math is.
class FalsificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace gb

#endif
