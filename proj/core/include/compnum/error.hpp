#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace compnum {

/// Raised by the text-format readers. `position()` is a 0-based byte offset
/// for graph6 input and a 1-based line number for arc lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace compnum
