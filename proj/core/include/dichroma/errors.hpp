#ifndef DICHROMA_ERRORS_HPP
#define DICHROMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dichroma {

// Out-of-range ids, mismatched dimensions, parameters outside their domain.
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The instance exceeds a configured search or enumeration bound.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input document. Carries the 1-based offending line.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, int line_number)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    int line;
};

} // namespace dichroma

#endif
