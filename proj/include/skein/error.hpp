#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace skein {

enum class ErrorKind {
  kInvalidArgument,
  kParse,
  kNotNormalized,
  kNoProductRule,
  kFlavorMismatch,
  kOutOfRange,
  kIo,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the textual parsers; position is a 0-based column into the input.
class ParseError : public Error {
 public:
  ParseError(std::string input, std::size_t position, const std::string& msg)
      : Error(ErrorKind::kParse, Format(input, position, msg)),
        input_(std::move(input)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& input() const noexcept { return input_; }

 private:
  static std::string Format(const std::string& input, std::size_t pos,
                            const std::string& msg) {
    std::string out = "parse error at column " + std::to_string(pos + 1) +
                      ": " + msg + "\n  " + input + "\n  ";
    out.append(pos, ' ');
    out += '^';
    return out;
  }

  std::string input_;
  std::size_t position_;
};

}  // namespace skein
