#include "icds/algebra.hpp"

#include <algorithm>
#include <set>

#include "icds/errors.hpp"

namespace icds {

namespace {

void sort_blocks(std::vector<Formula>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Formula& a, const Formula& b) {
                     return a.first_atom() < b.first_atom();
                   });
}

struct BitsLess {
  bool operator()(const Formula::Bits& a, const Formula::Bits& b) const {
    return a < b;
  }
};

}  // namespace

FormulaAlgebra::FormulaAlgebra(Language lang, std::vector<Formula> blocks)
    : lang_(std::move(lang)), blocks_(std::move(blocks)) {
  for (const auto& b : blocks_)
    if (!(b.language() == lang_)) throw LanguageMismatch();
}

FormulaAlgebra FormulaAlgebra::trivial(const Language& lang) {
  return FormulaAlgebra(lang, {Formula::tautology(lang)});
}

FormulaAlgebra FormulaAlgebra::power_set(const Language& lang) {
  std::vector<Formula> blocks;
  blocks.reserve(lang.atom_count());
  for (const Atom a : atoms_of(lang)) blocks.push_back(Formula::atom(lang, a));
  return FormulaAlgebra(lang, std::move(blocks));
}

bool FormulaAlgebra::contains(const Formula& f) const {
  if (!(f.language() == lang_)) throw LanguageMismatch();
  for (const auto& b : blocks_) {
    if (b.bits().intersects(f.bits()) && !b.bits().is_subset_of(f.bits()))
      return false;
  }
  return true;
}

bool FormulaAlgebra::is_power_set() const {
  if (blocks_.size() != lang_.atom_count()) return false;
  for (const auto& b : blocks_)
    if (b.count() != 1) return false;
  return partition_problems().empty();
}

std::vector<Formula> FormulaAlgebra::members() const {
  if (blocks_.size() > 20)
    throw LanguageTooLarge("refusing to enumerate 2^" +
                           std::to_string(blocks_.size()) + " members");
  std::vector<Formula> out;
  const std::uint64_t n = std::uint64_t{1} << blocks_.size();
  out.reserve(n);
  for (std::uint64_t sel = 0; sel < n; ++sel) out.push_back(member(sel));
  return out;
}

Formula FormulaAlgebra::member(std::uint64_t selection) const {
  Formula::Bits bits(lang_.atom_count());
  for (std::size_t k = 0; k < blocks_.size() && k < 64; ++k)
    if ((selection >> k) & 1U) bits |= blocks_[k].bits();
  return Formula(lang_, std::move(bits));
}

std::vector<std::string> FormulaAlgebra::partition_problems() const {
  std::vector<std::string> out;
  Formula::Bits seen(lang_.atom_count());
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const auto& b = blocks_[k].bits();
    if (b.none())
      out.push_back("formula basis block " + std::to_string(k) + " is empty");
    if (b.intersects(seen))
      out.push_back("formula basis block " + std::to_string(k) +
                    " overlaps an earlier block");
    seen |= b;
  }
  if (!seen.all())
    out.push_back("formula basis blocks do not cover every atom");
  return out;
}

FormulaAlgebra FormulaAlgebra::canonical() const {
  auto blocks = blocks_;
  sort_blocks(blocks);
  return FormulaAlgebra(lang_, std::move(blocks));
}

FormulaAlgebra generate_algebra(const std::vector<Formula>& generators,
                                const Language& lang) {
  std::vector<Formula> blocks{Formula::tautology(lang)};
  for (const auto& g : generators) {
    if (!(g.language() == lang)) throw LanguageMismatch();
    std::vector<Formula> refined;
    refined.reserve(blocks.size() * 2);
    for (const auto& b : blocks) {
      Formula inside = conjoin(b, g);
      Formula outside = difference(b, g);
      if (!inside.empty()) refined.push_back(std::move(inside));
      if (!outside.empty()) refined.push_back(std::move(outside));
    }
    blocks = std::move(refined);
  }
  sort_blocks(blocks);
  return FormulaAlgebra(lang, std::move(blocks));
}

FormulaAlgebra basis_of(const std::vector<Formula>& members,
                        const Language& lang) {
  std::set<Formula::Bits, BitsLess> listed;
  for (const auto& m : members) {
    if (!(m.language() == lang)) throw LanguageMismatch();
    listed.insert(m.bits());
  }

  std::vector<std::string> violations;
  const Formula bottom = Formula::contradiction(lang);
  const Formula top = Formula::tautology(lang);
  if (!listed.count(bottom.bits()))
    violations.push_back("the empty formula (false) is not a member");
  if (!listed.count(top.bits()))
    violations.push_back("the full atom set (true) is not a member");
  for (const auto& m : listed) {
    if (!listed.count(~m)) {
      violations.push_back("not closed under negation: complement of " +
                           format_formula(Formula(lang, m)) + " is missing");
      break;
    }
  }
  bool union_ok = true;
  for (auto a = listed.begin(); union_ok && a != listed.end(); ++a) {
    for (auto b = std::next(a); b != listed.end(); ++b) {
      if (!listed.count(*a | *b)) {
        violations.push_back("not closed under disjunction: " +
                             format_formula(Formula(lang, *a)) + " or " +
                             format_formula(Formula(lang, *b)) +
                             " is missing");
        union_ok = false;
        break;
      }
    }
  }
  if (!violations.empty()) throw ValidationError(std::move(violations));

  // Minimal nonempty member containing each atom: intersect all members that
  // contain it. Closure makes the intersection itself a member.
  std::vector<Formula> blocks;
  Formula::Bits covered(lang.atom_count());
  for (std::size_t i = 0; i < lang.atom_count(); ++i) {
    if (covered.test(i)) continue;
    Formula::Bits block(lang.atom_count());
    block.set();
    for (const auto& m : listed)
      if (m.test(i)) block &= m;
    covered |= block;
    blocks.emplace_back(lang, std::move(block));
  }
  sort_blocks(blocks);
  return FormulaAlgebra(lang, std::move(blocks));
}

}  // namespace icds
