#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace evt {

// Hard failures surface as exceptions. Per-event degradations (failed plane
// fits, stationary surfaces) are modeled as empty optionals on the hot path
// instead; see plane_rht.hpp and life_tracker.hpp.

struct OutOfBounds : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BorderViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ImageTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line_no)
        : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
          line(line_no) {}
    std::size_t line;
};

struct OrderError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnsupportedImageFormat : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace evt
