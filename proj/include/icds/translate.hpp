#pragma once

#include <cstdint>
#include <optional>

#include "icds/structure.hpp"

namespace icds {

// IC structure (S, 2^S, mu, At, psi, i) to the total DS structure
// (At, psi, mu_ds, At, 2^At, identity) with mu_ds(phi) = mu(i(phi)).
// Worlds of the result are the atoms, named by identifier_for_atom().
ProbabilityStructure ic_to_ds(const ProbabilityStructure& ic);

// Total DS structure to the IC structure whose worlds are the chi-basis
// blocks (w1..wk in canonical block order), with psi_ic = {phi : i(phi) in
// chi} and i_ic(phi) = the blocks inside i(phi). Throws NotTotal.
ProbabilityStructure ds_to_ic(const ProbabilityStructure& ds);

// World name used for an atom by ic_to_ds, e.g. "not_g__d" for ~g & d.
std::string identifier_for_atom(const Language& lang, Atom a);

struct Witness {
  Formula formula;
  Interval first;
  Interval second;
};

struct EquivalenceReport {
  bool equivalent = true;
  std::uint64_t checked_count = 0;
  std::optional<Witness> witness;
};

inline constexpr std::size_t kMaxEquivalenceProps = 4;

// Compares interval() of both structures on every formula of the shared
// language in atom-bitset order. The witness is the first mismatch.
// Throws LanguageMismatch, or LanguageTooLarge above 4 propositions.
EquivalenceReport equivalent(const ProbabilityStructure& a,
                             const ProbabilityStructure& b);

// Translates to the other kind and back, then checks equivalence with the
// input. Throws NotTotal for a non-total DS input.
EquivalenceReport round_trip_check(const ProbabilityStructure& st);

}  // namespace icds
