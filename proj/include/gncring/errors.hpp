#pragma once

/**
 * @file errors.hpp
 * @brief Exception types shared by the library and the command-line front end.
 *
 * The CLI maps these onto its exit codes: input_error -> 2, capacity_error -> 3.
 */

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gncring {

/// Malformed request: bad index, bad argument, unparsable expression, invalid table.
class input_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the configured carrier cap.
class capacity_error : public std::runtime_error {
public:
    capacity_error(const std::string& what, unsigned long long required)
        : std::runtime_error(what), required_(required) {}

    unsigned long long required_size() const noexcept { return required_; }

private:
    unsigned long long required_;
};

/// Syntax error in a ring expression; position is a 0-based character offset.
class parse_error : public input_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : input_error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace gncring
