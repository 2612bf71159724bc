#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace icds {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Formula text or rational literal could not be parsed. `position` is the
// 0-based character offset of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnknownProposition : public Error {
 public:
  using Error::Error;
};

class LanguageMismatch : public Error {
 public:
  LanguageMismatch() : Error("formulas belong to different languages") {}
  using Error::Error;
};

class LanguageTooLarge : public Error {
 public:
  using Error::Error;
};

// Set is not a union of sigma-algebra basis blocks, so mu is undefined on it.
class NotMeasurable : public Error {
 public:
  using Error::Error;
};

// Formula lies outside the formula algebra; its incidence is undefined.
class NotInPsi : public Error {
 public:
  using Error::Error;
};

class WrongKind : public Error {
 public:
  using Error::Error;
};

class NotTotal : public Error {
 public:
  NotTotal()
      : Error("structure is not total: some measurable set is not the "
              "incidence of any formula") {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations)
      : Error(join(violations)), violations_(std::move(violations)) {}
  const std::vector<std::string>& violations() const { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& v) {
    std::string out = "validation failed";
    for (const auto& s : v) out += "\n  - " + s;
    return out;
  }
  std::vector<std::string> violations_;
};

}  // namespace icds
