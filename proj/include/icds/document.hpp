#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "icds/errors.hpp"
#include "icds/structure.hpp"

namespace icds {

// Malformed structure document. Line and column are 1-based when known.
class DocumentError : public Error {
 public:
  explicit DocumentError(const std::string& what) : Error(what) {}
  DocumentError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

// JSON structure document:
//
//   kind          "ic" | "ds"
//   propositions  [name, ...]
//   worlds        [name, ...]
//   chi_basis     [[world, ...], ...]        ds only
//   measure       {"<block index>": "p/q"}    ic blocks are the worlds
//   psi_basis     [formula, ...]             ic only
//   incidence     {formula: [world, ...]}    ic: psi blocks, ds: atoms
//
// Fields appear in that order, rationals are reduced strings, and formulas
// use format_formula() text. Parsing returns the canonical structure and
// throws DocumentError or ValidationError.
ProbabilityStructure parse_document(std::string_view text);
std::string render_document(const ProbabilityStructure& st);

ProbabilityStructure load(const std::filesystem::path& path);
void save(const ProbabilityStructure& st, const std::filesystem::path& path);

}  // namespace icds
