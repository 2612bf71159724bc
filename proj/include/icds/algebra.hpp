#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "icds/formula.hpp"

namespace icds {

// A sigma-algebra of atom sets, held by its basis: disjoint nonempty blocks
// covering every atom. Members are exactly the unions of blocks.
class FormulaAlgebra {
 public:
  // Takes the blocks as given. Use partition_problems() to check them, or
  // build through generate_algebra()/basis_of() which always yield a valid,
  // canonically ordered basis.
  FormulaAlgebra(Language lang, std::vector<Formula> blocks);

  // {false, true}
  static FormulaAlgebra trivial(const Language& lang);
  // 2^At: one singleton block per atom.
  static FormulaAlgebra power_set(const Language& lang);

  const Language& language() const { return lang_; }
  const std::vector<Formula>& basis() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  bool contains(const Formula& f) const;
  bool is_power_set() const;

  // Every member, as the union of the blocks selected by each bit of a
  // counter. Throws LanguageTooLarge beyond 20 blocks.
  std::vector<Formula> members() const;
  // Union of the blocks whose bit is set in `selection`.
  Formula member(std::uint64_t selection) const;

  // Empty list when the blocks partition the atoms.
  std::vector<std::string> partition_problems() const;

  // Same algebra with blocks ordered by lowest atom.
  FormulaAlgebra canonical() const;

  friend bool operator==(const FormulaAlgebra& a, const FormulaAlgebra& b) {
    return a.lang_ == b.lang_ && a.blocks_ == b.blocks_;
  }

 private:
  Language lang_;
  std::vector<Formula> blocks_;
};

// Smallest sigma-algebra containing every generator. Blocks are the classes
// of atoms that belong to exactly the same generators.
FormulaAlgebra generate_algebra(const std::vector<Formula>& generators,
                                const Language& lang);

// Recovers the unique basis from an explicit listing of every member.
// Throws ValidationError naming the closure condition that fails.
FormulaAlgebra basis_of(const std::vector<Formula>& members,
                        const Language& lang);

inline bool algebra_member(const FormulaAlgebra& psi, const Formula& f) {
  return psi.contains(f);
}

}  // namespace icds
