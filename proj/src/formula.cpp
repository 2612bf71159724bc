#include "icds/formula.hpp"

#include <cctype>

#include "icds/errors.hpp"

namespace icds {

Formula::Formula(Language lang, Bits atoms)
    : lang_(std::move(lang)), bits_(std::move(atoms)) {
  if (bits_.size() != lang_.atom_count())
    throw Error("atom set width " + std::to_string(bits_.size()) +
                " does not match language with " +
                std::to_string(lang_.atom_count()) + " atoms");
}

Formula Formula::contradiction(const Language& lang) {
  return Formula(lang, Bits(lang.atom_count()));
}

Formula Formula::tautology(const Language& lang) {
  Bits b(lang.atom_count());
  b.set();
  return Formula(lang, std::move(b));
}

Formula Formula::atom(const Language& lang, Atom a) {
  Bits b(lang.atom_count());
  b.set(a.index);
  return Formula(lang, std::move(b));
}

Formula Formula::from_atoms(const Language& lang,
                            const std::vector<std::size_t>& indices) {
  Bits b(lang.atom_count());
  for (const auto i : indices) {
    if (i >= b.size()) throw Error("atom index out of range");
    b.set(i);
  }
  return Formula(lang, std::move(b));
}

Formula Formula::from_mask(const Language& lang, std::uint64_t mask) {
  const std::size_t n = lang.atom_count();
  if (n > 64) throw LanguageTooLarge("mask form needs at most 64 atoms");
  if (n < 64 && (mask >> n) != 0) throw Error("mask has bits beyond atoms");
  return Formula(lang, Bits(n, mask));
}

std::uint64_t Formula::mask() const {
  if (bits_.size() > 64) throw LanguageTooLarge("mask form needs at most 64 atoms");
  return bits_.to_ulong();
}

std::size_t Formula::first_atom() const {
  const auto pos = bits_.find_first();
  return pos == Bits::npos ? bits_.size() : pos;
}

std::vector<Atom> Formula::atoms() const {
  std::vector<Atom> out;
  for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i))
    out.push_back(Atom{i});
  return out;
}

bool Formula::subset_of(const Formula& o) const {
  if (!(lang_ == o.lang_)) throw LanguageMismatch();
  return bits_.is_subset_of(o.bits_);
}

bool Formula::intersects(const Formula& o) const {
  if (!(lang_ == o.lang_)) throw LanguageMismatch();
  return bits_.intersects(o.bits_);
}

bool operator<(const Formula& a, const Formula& b) {
  // dynamic_bitset compares from the most significant bit downward.
  return a.bits_ < b.bits_;
}

Formula complement(const Formula& f) { return Formula(f.language(), ~f.bits()); }

Formula conjoin(const Formula& a, const Formula& b) {
  if (!(a.language() == b.language())) throw LanguageMismatch();
  return Formula(a.language(), a.bits() & b.bits());
}

Formula disjoin(const Formula& a, const Formula& b) {
  if (!(a.language() == b.language())) throw LanguageMismatch();
  return Formula(a.language(), a.bits() | b.bits());
}

Formula difference(const Formula& a, const Formula& b) {
  if (!(a.language() == b.language())) throw LanguageMismatch();
  return Formula(a.language(), a.bits() - b.bits());
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Language& lang)
      : text_(text), lang_(lang) {}

  Formula parse() {
    Formula f = expr();
    skip_space();
    if (pos_ != text_.size()) unexpected();
    return f;
  }

 private:
  Formula expr() {
    Formula f = term();
    while (accept('|')) f = disjoin(f, term());
    return f;
  }

  Formula term() {
    Formula f = factor();
    while (accept('&')) f = conjoin(f, factor());
    return f;
  }

  Formula factor() {
    skip_space();
    if (accept('~')) return complement(factor());
    if (accept('(')) {
      Formula f = expr();
      if (!accept(')')) {
        skip_space();
        if (pos_ == text_.size())
          throw ParseError("expected ')' but reached end of input", pos_);
        throw ParseError(std::string("expected ')' but found '") +
                             text_[pos_] + "'",
                         pos_);
      }
      return f;
    }
    if (pos_ < text_.size() && starts_identifier(text_[pos_])) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && continues_identifier(text_[pos_])) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "true") return Formula::tautology(lang_);
      if (name == "false") return Formula::contradiction(lang_);
      const auto j = lang_.index_of(name);
      if (!j)
        throw UnknownProposition("unknown proposition '" + std::string(name) +
                                 "' at position " + std::to_string(start));
      return proposition(*j);
    }
    unexpected();
  }

  Formula proposition(std::size_t j) const {
    Formula::Bits b(lang_.atom_count());
    for (std::size_t i = 0; i < b.size(); ++i)
      if ((i >> j) & 1U) b.set(i);
    return Formula(lang_, std::move(b));
  }

  [[noreturn]] void unexpected() const {
    if (pos_ >= text_.size())
      throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + text_[pos_] + "'",
                     pos_);
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  static bool starts_identifier(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool continues_identifier(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string_view text_;
  const Language& lang_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(std::string_view text, const Language& lang) {
  return Parser(text, lang).parse();
}

std::string format_formula(const Formula& f) {
  if (f.empty()) return "false";
  if (f.is_tautology()) return "true";
  std::string out;
  for (const Atom a : f.atoms()) {
    if (!out.empty()) out += " | ";
    out += atom_text(f.language(), a);
  }
  return out;
}

}  // namespace icds
