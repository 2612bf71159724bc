#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "icds/algebra.hpp"
#include "icds/formula.hpp"
#include "icds/measure.hpp"

namespace icds {

enum class Kind {
  kIncidenceCalculus,  // chi = 2^S, psi arbitrary
  kDempsterShafer,     // psi = 2^At, chi arbitrary
};

const char* kind_name(Kind k);

// The tuple (S, chi, mu, At, psi, i). The incidence map is stored as one
// world set per psi-basis block and extended to psi by union.
class ProbabilityStructure {
 public:
  ProbabilityStructure(Kind kind, ProbabilitySpace ps, FormulaAlgebra psi,
                       std::vector<WorldSet> images);

  // chi = 2^S; `world_weights` holds mu({w}) for each world in order.
  static ProbabilityStructure incidence_calculus(
      SampleSpace space, std::vector<Rational> world_weights,
      FormulaAlgebra psi, std::vector<WorldSet> images);
  // psi = 2^At; `atom_images` holds i(delta) for each atom in index order.
  static ProbabilityStructure dempster_shafer(ProbabilitySpace ps,
                                              const Language& lang,
                                              std::vector<WorldSet> atom_images);

  Kind kind() const { return kind_; }
  bool is_ic() const { return kind_ == Kind::kIncidenceCalculus; }
  bool is_ds() const { return kind_ == Kind::kDempsterShafer; }
  const ProbabilitySpace& space() const { return ps_; }
  const Language& language() const { return psi_.language(); }
  const FormulaAlgebra& psi() const { return psi_; }
  const std::vector<WorldSet>& images() const { return images_; }

  // Blocks of psi and chi reordered by lowest atom / lowest world.
  ProbabilityStructure canonical() const;

  friend bool operator==(const ProbabilityStructure&,
                         const ProbabilityStructure&) = default;

 private:
  Kind kind_;
  ProbabilitySpace ps_;
  FormulaAlgebra psi_;
  std::vector<WorldSet> images_;
};

struct Interval {
  Rational lo;
  Rational hi;

  std::string str() const { return "[" + lo.str() + ", " + hi.str() + "]"; }
  friend bool operator==(const Interval&, const Interval&) = default;
  friend std::ostream& operator<<(std::ostream& os, const Interval& i) {
    return os << i.str();
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// i(phi) for phi in psi. Throws NotInPsi otherwise.
WorldSet incidence(const ProbabilityStructure& st, const Formula& phi);

ValidationReport validate(const ProbabilityStructure& st);

// Every measurable set is the incidence of some formula. DS kind only.
bool is_total(const ProbabilityStructure& st);

// Belief and plausibility; DS kind only.
Rational bel(const ProbabilityStructure& st, const Formula& xi);
Rational plb(const ProbabilityStructure& st, const Formula& xi);

// Lower and upper incidence; IC kind only.
WorldSet lower_incidence(const ProbabilityStructure& st, const Formula& xi);
WorldSet upper_incidence(const ProbabilityStructure& st, const Formula& xi);

// [mu(i_*(xi)), mu(i^*(xi))] for IC, [bel(xi), plb(xi)] for DS.
Interval interval(const ProbabilityStructure& st, const Formula& xi);

// Moebius inverse of bel over all formulas, in atom-bitset order. DS kind,
// at most 3 propositions.
std::vector<std::pair<Formula, Rational>> mobius_mass(
    const ProbabilityStructure& st);

}  // namespace icds
