#include "icds/translate.hpp"

#include "icds/errors.hpp"

namespace icds {

std::string identifier_for_atom(const Language& lang, Atom a) {
  std::string out;
  for (std::size_t j = 0; j < lang.size(); ++j) {
    if (j > 0) out += "__";
    if (!a.positive(j)) out += "not_";
    out += lang.prop(j);
  }
  return out;
}

ProbabilityStructure ic_to_ds(const ProbabilityStructure& ic) {
  if (!ic.is_ic()) throw WrongKind("ic_to_ds needs an incidence calculus structure");
  const Language& lang = ic.language();
  if (lang.atom_count() > kMaxWorlds)
    throw LanguageTooLarge("ic_to_ds makes one world per atom; at most " +
                           std::to_string(kMaxWorlds) + " atoms supported");

  std::vector<std::string> names;
  for (const Atom a : atoms_of(lang)) names.push_back(identifier_for_atom(lang, a));

  // Atom k is world k, so a psi block becomes the world set of its atoms.
  const auto& psi = ic.psi();
  std::vector<WorldSet> chi_blocks;
  std::vector<Rational> weights;
  for (std::size_t k = 0; k < psi.size(); ++k) {
    chi_blocks.emplace_back(psi.basis()[k].mask());
    weights.push_back(ic.space().measure(ic.images()[k]));
  }

  std::vector<WorldSet> identity;
  for (std::size_t i = 0; i < lang.atom_count(); ++i)
    identity.push_back(WorldSet::single(i));

  ProbabilitySpace ps(SampleSpace(std::move(names)),
                      SetAlgebra(std::move(chi_blocks)), std::move(weights));
  return ProbabilityStructure::dempster_shafer(std::move(ps), lang,
                                               std::move(identity))
      .canonical();
}

ProbabilityStructure ds_to_ic(const ProbabilityStructure& input) {
  if (!input.is_ds()) throw WrongKind("ds_to_ic needs a Dempster-Shafer structure");
  if (!is_total(input)) throw NotTotal();
  const ProbabilityStructure ds = input.canonical();
  const Language& lang = ds.language();
  const auto& chi = ds.space().algebra().basis();

  std::vector<Formula> psi_blocks;
  std::vector<WorldSet> images;
  // Totality makes every nonempty atom image sit inside exactly one chi block,
  // so a formula's incidence is measurable iff it takes all or none of the
  // nonempty-image atoms of each block. Atoms with empty image are free.
  for (std::size_t k = 0; k < chi.size(); ++k) {
    Formula::Bits bits(lang.atom_count());
    for (std::size_t a = 0; a < lang.atom_count(); ++a) {
      const WorldSet img = ds.images()[a];
      if (!img.empty() && img.subset_of(chi[k])) bits.set(a);
    }
    psi_blocks.emplace_back(lang, std::move(bits));
    images.push_back(WorldSet::single(k));
  }
  for (std::size_t a = 0; a < lang.atom_count(); ++a) {
    if (ds.images()[a].empty()) {
      psi_blocks.push_back(Formula::atom(lang, Atom{a}));
      images.push_back(WorldSet{});
    }
  }

  return ProbabilityStructure::incidence_calculus(
             SampleSpace::numbered("w", chi.size()), ds.space().weights(),
             FormulaAlgebra(lang, std::move(psi_blocks)), std::move(images))
      .canonical();
}

EquivalenceReport equivalent(const ProbabilityStructure& a,
                             const ProbabilityStructure& b) {
  if (!(a.language() == b.language())) throw LanguageMismatch();
  const Language& lang = a.language();
  if (lang.size() > kMaxEquivalenceProps)
    throw LanguageTooLarge("equivalence checking enumerates 2^(2^n) formulas; "
                           "at most 4 propositions supported");
  const std::uint64_t n_formulas = std::uint64_t{1} << lang.atom_count();

  EquivalenceReport report;
  for (std::uint64_t m = 0; m < n_formulas; ++m) {
    const Formula xi = Formula::from_mask(lang, m);
    Interval ia = interval(a, xi);
    Interval ib = interval(b, xi);
    ++report.checked_count;
    if (!(ia == ib) && report.equivalent) {
      report.equivalent = false;
      report.witness = Witness{xi, std::move(ia), std::move(ib)};
    }
  }
  return report;
}

EquivalenceReport round_trip_check(const ProbabilityStructure& st) {
  if (st.is_ic()) return equivalent(st, ds_to_ic(ic_to_ds(st)));
  return equivalent(st, ic_to_ds(ds_to_ic(st)));
}

}  // namespace icds
