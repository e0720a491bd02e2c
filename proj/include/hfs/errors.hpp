#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hfs {

// Syntax error in a tree literal, type literal, Dyck code or decimal string.
// `position` is a 0-based offset into the input.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::runtime_error(what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace hfs
