#ifndef MEETSUM_ERROR_HPP
#define MEETSUM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace meetsum {

// Exit-code mapping: UsageError -> 1, ParseError/ValidationError -> 2,
// ProtocolError -> 3.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class ProtocolError : public std::runtime_error {
 public:
  explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace meetsum

#endif
