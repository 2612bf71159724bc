#include "icds/language.hpp"

#include <cctype>
#include <unordered_set>

#include "icds/errors.hpp"

namespace icds {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto head = static_cast<unsigned char>(s.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (const char c : s) {
    const auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

Language::Language(std::vector<std::string> props) {
  if (props.empty()) throw Error("language needs at least one proposition");
  if (props.size() > kMaxPropositions)
    throw LanguageTooLarge("language has " + std::to_string(props.size()) +
                           " propositions; at most " +
                           std::to_string(kMaxPropositions) + " supported");
  std::unordered_set<std::string> seen;
  for (const auto& p : props) {
    if (!is_identifier(p))
      throw Error("proposition name '" + p + "' is not an identifier");
    if (p == "true" || p == "false")
      throw Error("proposition name '" + p + "' is reserved");
    if (!seen.insert(p).second)
      throw Error("duplicate proposition name '" + p + "'");
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(props)});
}

std::optional<std::size_t> Language::index_of(std::string_view name) const {
  for (std::size_t j = 0; j < size(); ++j)
    if (impl_->props[j] == name) return j;
  return std::nullopt;
}

std::vector<Atom> atoms_of(const Language& lang) {
  std::vector<Atom> out;
  out.reserve(lang.atom_count());
  for (std::size_t i = 0; i < lang.atom_count(); ++i) out.push_back(Atom{i});
  return out;
}

std::string atom_text(const Language& lang, Atom atom) {
  std::string out = "(";
  for (std::size_t j = 0; j < lang.size(); ++j) {
    if (j > 0) out += " & ";
    if (!atom.positive(j)) out += '~';
    out += lang.prop(j);
  }
  out += ')';
  return out;
}

}  // namespace icds
