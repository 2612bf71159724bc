#include "icds/measure.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "icds/errors.hpp"
#include "icds/language.hpp"

namespace icds {

std::vector<std::size_t> WorldSet::worlds() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

SampleSpace::SampleSpace(std::vector<std::string> worlds)
    : names_(std::move(worlds)) {
  if (names_.empty()) throw Error("sample space needs at least one world");
  if (names_.size() > kMaxWorlds)
    throw Error("sample space has " + std::to_string(names_.size()) +
                " worlds; at most " + std::to_string(kMaxWorlds) +
                " supported");
  std::unordered_set<std::string> seen;
  for (const auto& w : names_) {
    if (!is_identifier(w))
      throw Error("world name '" + w + "' is not an identifier");
    if (!seen.insert(w).second)
      throw Error("duplicate world name '" + w + "'");
  }
}

SampleSpace SampleSpace::numbered(std::string_view prefix, std::size_t n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i)
    names.push_back(std::string(prefix) + std::to_string(i));
  return SampleSpace(std::move(names));
}

std::optional<std::size_t> SampleSpace::index_of(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::vector<std::string> SampleSpace::names_of(WorldSet x) const {
  std::vector<std::string> out;
  for (const auto w : x.worlds()) out.push_back(names_.at(w));
  return out;
}

SetAlgebra SetAlgebra::discrete(std::size_t n_worlds) {
  std::vector<WorldSet> blocks;
  for (std::size_t w = 0; w < n_worlds; ++w) blocks.push_back(WorldSet::single(w));
  return SetAlgebra(std::move(blocks));
}

SetAlgebra SetAlgebra::trivial(std::size_t n_worlds) {
  return SetAlgebra({WorldSet::first(n_worlds)});
}

bool SetAlgebra::contains(WorldSet x) const {
  return std::all_of(blocks_.begin(), blocks_.end(), [x](WorldSet b) {
    return !b.intersects(x) || b.subset_of(x);
  });
}

bool SetAlgebra::is_discrete(std::size_t n_worlds) const {
  if (blocks_.size() != n_worlds) return false;
  return std::all_of(blocks_.begin(), blocks_.end(),
                     [](WorldSet b) { return b.count() == 1; }) &&
         partition_problems(n_worlds).empty();
}

std::vector<std::string> SetAlgebra::partition_problems(
    std::size_t n_worlds) const {
  std::vector<std::string> out;
  const WorldSet all = WorldSet::first(n_worlds);
  WorldSet seen;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const WorldSet b = blocks_[k];
    const std::string label = "measurable basis block " + std::to_string(k);
    if (b.empty()) out.push_back(label + " is empty");
    if (!b.subset_of(all)) out.push_back(label + " names worlds outside S");
    if (b.intersects(seen)) out.push_back(label + " overlaps an earlier block");
    seen |= b;
  }
  if (!all.subset_of(seen))
    out.push_back("measurable basis blocks do not cover every world");
  return out;
}

ProbabilitySpace::ProbabilitySpace(SampleSpace space, SetAlgebra algebra,
                                   std::vector<Rational> weights)
    : space_(std::move(space)),
      algebra_(std::move(algebra)),
      weights_(std::move(weights)) {
  if (weights_.size() != algebra_.size())
    throw Error("expected " + std::to_string(algebra_.size()) +
                " measure weights, got " + std::to_string(weights_.size()));
}

ProbabilitySpace ProbabilitySpace::discrete(SampleSpace space,
                                            std::vector<Rational> weights) {
  const auto n = space.size();
  return ProbabilitySpace(std::move(space), SetAlgebra::discrete(n),
                          std::move(weights));
}

std::vector<std::string> ProbabilitySpace::problems() const {
  auto out = algebra_.partition_problems(space_.size());
  Rational total = 0;
  for (std::size_t k = 0; k < weights_.size(); ++k) {
    const auto& w = weights_[k];
    if (w < 0 || w > 1)
      out.push_back("weight " + w.str() + " of block " + std::to_string(k) +
                    " lies outside [0, 1]");
    total += w;
  }
  if (total != 1)
    out.push_back("mu(S) = 1 violated: weights sum to " + total.str());
  return out;
}

void ProbabilitySpace::check_subset(WorldSet x) const {
  if (!x.subset_of(space_.all()))
    throw Error("world set names worlds outside the sample space");
}

Rational ProbabilitySpace::measure(WorldSet x) const {
  check_subset(x);
  Rational sum = 0;
  for (std::size_t k = 0; k < algebra_.size(); ++k) {
    const WorldSet b = algebra_.basis()[k];
    if (b.subset_of(x)) {
      sum += weights_[k];
    } else if (b.intersects(x)) {
      std::string text;
      for (const auto& n : space_.names_of(x))
        text += (text.empty() ? "" : ",") + n;
      throw NotMeasurable("{" + text + "} is not measurable");
    }
  }
  return sum;
}

Rational ProbabilitySpace::inner_measure(WorldSet a) const {
  check_subset(a);
  Rational sum = 0;
  for (std::size_t k = 0; k < algebra_.size(); ++k)
    if (algebra_.basis()[k].subset_of(a)) sum += weights_[k];
  return sum;
}

Rational ProbabilitySpace::complement_measure(WorldSet x) const {
  return Rational(1) - measure(x);
}

ProbabilitySpace ProbabilitySpace::canonical() const {
  std::vector<std::size_t> order(algebra_.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& blocks = algebra_.basis();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return std::countr_zero(blocks[a].bits()) <
           std::countr_zero(blocks[b].bits());
  });
  std::vector<WorldSet> sorted_blocks;
  std::vector<Rational> sorted_weights;
  for (const auto k : order) {
    sorted_blocks.push_back(blocks[k]);
    sorted_weights.push_back(weights_[k]);
  }
  return ProbabilitySpace(space_, SetAlgebra(std::move(sorted_blocks)),
                          std::move(sorted_weights));
}

}  // namespace icds
