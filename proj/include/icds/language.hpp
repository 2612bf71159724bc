#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace icds {

inline constexpr std::size_t kMaxPropositions = 16;

bool is_identifier(std::string_view s);

// Ordered finite set of primitive propositions. Cheap to copy; copies share
// the same immutable name table.
class Language {
 public:
  // Throws icds::Error on empty, oversized, duplicate or malformed names.
  explicit Language(std::vector<std::string> props);

  std::size_t size() const { return impl_->props.size(); }
  std::size_t atom_count() const { return std::size_t{1} << size(); }
  const std::vector<std::string>& props() const { return impl_->props; }
  const std::string& prop(std::size_t j) const { return impl_->props[j]; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  friend bool operator==(const Language& a, const Language& b) {
    return a.impl_ == b.impl_ || a.impl_->props == b.impl_->props;
  }

 private:
  struct Impl {
    std::vector<std::string> props;
  };
  std::shared_ptr<const Impl> impl_;
};

// Full conjunction over the language. Bit j of `index` is set iff the j-th
// proposition occurs positively.
struct Atom {
  std::size_t index = 0;

  bool positive(std::size_t prop) const { return (index >> prop) & 1U; }
  friend bool operator==(Atom, Atom) = default;
};

// All 2^n atoms in increasing index order.
std::vector<Atom> atoms_of(const Language& lang);

// "(~g & d)" style conjunction text for one atom.
std::string atom_text(const Language& lang, Atom atom);

}  // namespace icds
