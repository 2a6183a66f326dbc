#pragma once

#include <stdexcept>
#include <string>

namespace lightsout {

/// Board parameters the cylinder model does not cover (fewer than three columns).
class invalid_geometry : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A bounded scan ran past its hard limit. Indicates a bug, never a valid input.
class bound_exceeded : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Malformed grid file.
class grid_parse_error : public std::runtime_error {
public:
    grid_parse_error(std::size_t line, const std::string& what)
        : std::runtime_error("grid line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace lightsout
