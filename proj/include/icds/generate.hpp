#pragma once

#include <cstddef>
#include <cstdint>

#include "icds/structure.hpp"

namespace icds {

// Bounds: 1 <= n_props <= 4, 1 <= n_worlds <= 8.
struct GenParams {
  std::size_t n_props = 2;
  std::size_t n_worlds = 4;
  std::uint64_t seed = 0;

  void check() const;  // throws icds::Error when out of bounds
};

// Random IC structure: a random partition of the atoms for psi, each world
// sent to one psi block (blocks may get no worlds), positive world weights.
// Propositions are p1..pn, worlds s1..sm. Deterministic in the seed.
ProbabilityStructure random_ic(const GenParams& p);

// Random total DS structure: each world assigned to one atom, chi a random
// coarsening of the nonempty atom images, non-negative block weights.
ProbabilityStructure random_total_ds(const GenParams& p);

}  // namespace icds
