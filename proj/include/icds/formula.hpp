#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "icds/language.hpp"

namespace icds {

// A sentence over a Language, represented canonically by the set of atoms
// in which it holds. Logically equivalent sentences compare equal.
class Formula {
 public:
  using Bits = boost::dynamic_bitset<std::uint64_t>;

  Formula(Language lang, Bits atoms);

  static Formula contradiction(const Language& lang);
  static Formula tautology(const Language& lang);
  static Formula atom(const Language& lang, Atom a);
  static Formula from_atoms(const Language& lang,
                            const std::vector<std::size_t>& indices);
  // Bit k of `mask` selects atom k; requires at most 64 atoms.
  static Formula from_mask(const Language& lang, std::uint64_t mask);

  const Language& language() const { return lang_; }
  const Bits& bits() const { return bits_; }
  std::uint64_t mask() const;

  bool contains(Atom a) const { return bits_.test(a.index); }
  bool empty() const { return bits_.none(); }
  bool is_tautology() const { return bits_.all(); }
  std::size_t count() const { return bits_.count(); }
  // Index of the lowest atom, or atom_count() when empty.
  std::size_t first_atom() const;
  std::vector<Atom> atoms() const;

  bool subset_of(const Formula& o) const;
  bool intersects(const Formula& o) const;

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.lang_ == b.lang_ && a.bits_ == b.bits_;
  }
  // Orders by atom bitset as an unsigned number (atom 0 least significant).
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  Language lang_;
  Bits bits_;
};

// Set-level connectives. Throw LanguageMismatch across languages.
Formula complement(const Formula& f);
Formula conjoin(const Formula& a, const Formula& b);
Formula disjoin(const Formula& a, const Formula& b);
// a minus b
Formula difference(const Formula& a, const Formula& b);

inline Formula operator~(const Formula& f) { return complement(f); }
inline Formula operator&(const Formula& a, const Formula& b) {
  return conjoin(a, b);
}
inline Formula operator|(const Formula& a, const Formula& b) {
  return disjoin(a, b);
}

// Grammar:
//   expr   := term ('|' term)*
//   term   := factor ('&' factor)*
//   factor := '~' factor | '(' expr ')' | ident | 'true' | 'false'
// Throws ParseError (with character offset) or UnknownProposition.
Formula parse_formula(std::string_view text, const Language& lang);

// Disjunction of atom conjunctions in increasing atom order; "false" for the
// empty set and "true" for the full set.
std::string format_formula(const Formula& f);

}  // namespace icds
