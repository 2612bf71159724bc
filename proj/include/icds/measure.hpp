#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "icds/rational.hpp"

namespace icds {

inline constexpr std::size_t kMaxWorlds = 64;

// Subset of a sample space, one bit per world.
class WorldSet {
 public:
  constexpr WorldSet() = default;
  constexpr explicit WorldSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr WorldSet single(std::size_t w) {
    return WorldSet(std::uint64_t{1} << w);
  }
  // The first `n` worlds.
  static constexpr WorldSet first(std::size_t n) {
    return WorldSet(n >= 64 ? ~std::uint64_t{0}
                            : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t w) const { return (bits_ >> w) & 1U; }
  constexpr std::size_t count() const { return std::popcount(bits_); }
  constexpr bool subset_of(WorldSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(WorldSet o) const { return (bits_ & o.bits_) != 0; }
  std::vector<std::size_t> worlds() const;

  constexpr WorldSet operator|(WorldSet o) const { return WorldSet(bits_ | o.bits_); }
  constexpr WorldSet operator&(WorldSet o) const { return WorldSet(bits_ & o.bits_); }
  constexpr WorldSet operator-(WorldSet o) const { return WorldSet(bits_ & ~o.bits_); }
  WorldSet& operator|=(WorldSet o) { bits_ |= o.bits_; return *this; }
  friend constexpr bool operator==(WorldSet, WorldSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// Ordered, named possible worlds.
class SampleSpace {
 public:
  // Throws icds::Error on empty, oversized, duplicate or malformed names.
  explicit SampleSpace(std::vector<std::string> worlds);
  // Worlds named prefix1..prefixN.
  static SampleSpace numbered(std::string_view prefix, std::size_t n);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t w) const { return names_[w]; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  WorldSet all() const { return WorldSet::first(size()); }
  std::vector<std::string> names_of(WorldSet x) const;

  friend bool operator==(const SampleSpace&, const SampleSpace&) = default;

 private:
  std::vector<std::string> names_;
};

// Sigma-algebra over a sample space held by its basis blocks.
class SetAlgebra {
 public:
  SetAlgebra() = default;
  explicit SetAlgebra(std::vector<WorldSet> blocks) : blocks_(std::move(blocks)) {}

  // 2^S: every world is its own block.
  static SetAlgebra discrete(std::size_t n_worlds);
  // {empty, S}
  static SetAlgebra trivial(std::size_t n_worlds);

  const std::vector<WorldSet>& basis() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool contains(WorldSet x) const;
  bool is_discrete(std::size_t n_worlds) const;

  std::vector<std::string> partition_problems(std::size_t n_worlds) const;

  friend bool operator==(const SetAlgebra&, const SetAlgebra&) = default;

 private:
  std::vector<WorldSet> blocks_;
};

// (S, chi, mu) with mu given as one weight per chi-basis block.
class ProbabilitySpace {
 public:
  // Shape is checked here (one weight per block); the probability axioms are
  // reported by problems().
  ProbabilitySpace(SampleSpace space, SetAlgebra algebra,
                   std::vector<Rational> weights);

  // chi = 2^S with one weight per world.
  static ProbabilitySpace discrete(SampleSpace space,
                                   std::vector<Rational> weights);

  const SampleSpace& space() const { return space_; }
  const SetAlgebra& algebra() const { return algebra_; }
  const std::vector<Rational>& weights() const { return weights_; }

  // Partition failures, negative weights, weights above one, total != 1.
  std::vector<std::string> problems() const;

  // Sum of block weights composing x. Throws NotMeasurable if x splits a
  // block.
  Rational measure(WorldSet x) const;
  // Measure of the largest measurable set inside a.
  Rational inner_measure(WorldSet a) const;
  // 1 - measure(x). Throws NotMeasurable.
  Rational complement_measure(WorldSet x) const;

  // Same space with chi-basis blocks (and their weights) ordered by lowest
  // world.
  ProbabilitySpace canonical() const;

  friend bool operator==(const ProbabilitySpace&,
                         const ProbabilitySpace&) = default;

 private:
  void check_subset(WorldSet x) const;

  SampleSpace space_;
  SetAlgebra algebra_;
  std::vector<Rational> weights_;
};

inline Rational measure(const ProbabilitySpace& ps, WorldSet x) {
  return ps.measure(x);
}
inline Rational inner_measure(const ProbabilitySpace& ps, WorldSet a) {
  return ps.inner_measure(a);
}
inline Rational complement_measure(const ProbabilitySpace& ps, WorldSet x) {
  return ps.complement_measure(x);
}

}  // namespace icds
