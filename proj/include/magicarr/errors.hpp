#pragma once

#include <stdexcept>
#include <string>

namespace magicarr {

/// Raised when a document is not syntactically well formed.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

  private:
    std::string where_;
};

/// Raised when a document parses but violates a structural invariant.
class ValidationError : public std::runtime_error {
  public:
    ValidationError(const std::string& where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(where) {}
    const std::string& where() const { return where_; }

  private:
    std::string where_;
};

}  // namespace magicarr
