#include "icds/structure.hpp"

#include <algorithm>
#include <numeric>

#include "icds/errors.hpp"

namespace icds {

namespace {

void require_kind(const ProbabilityStructure& st, Kind k, const char* op) {
  if (st.kind() != k)
    throw WrongKind(std::string(op) + " needs a " + kind_name(k) +
                    " structure, got " + kind_name(st.kind()));
}

void require_language(const ProbabilityStructure& st, const Formula& f) {
  if (!(f.language() == st.language())) throw LanguageMismatch();
}

// Union of the images of every psi-basis block inside xi. For DS structures
// this is i(xi); for IC structures it is the lower incidence.
WorldSet image_of_blocks_inside(const ProbabilityStructure& st,
                                const Formula& xi) {
  require_language(st, xi);
  WorldSet out;
  const auto& blocks = st.psi().basis();
  for (std::size_t k = 0; k < blocks.size(); ++k)
    if (blocks[k].bits().is_subset_of(xi.bits())) out |= st.images()[k];
  return out;
}

}  // namespace

const char* kind_name(Kind k) {
  return k == Kind::kIncidenceCalculus ? "incidence calculus"
                                       : "Dempster-Shafer";
}

ProbabilityStructure::ProbabilityStructure(Kind kind, ProbabilitySpace ps,
                                           FormulaAlgebra psi,
                                           std::vector<WorldSet> images)
    : kind_(kind),
      ps_(std::move(ps)),
      psi_(std::move(psi)),
      images_(std::move(images)) {
  if (images_.size() != psi_.size())
    throw Error("expected one incidence image per formula basis block (" +
                std::to_string(psi_.size()) + "), got " +
                std::to_string(images_.size()));
}

ProbabilityStructure ProbabilityStructure::incidence_calculus(
    SampleSpace space, std::vector<Rational> world_weights, FormulaAlgebra psi,
    std::vector<WorldSet> images) {
  return ProbabilityStructure(
      Kind::kIncidenceCalculus,
      ProbabilitySpace::discrete(std::move(space), std::move(world_weights)),
      std::move(psi), std::move(images));
}

ProbabilityStructure ProbabilityStructure::dempster_shafer(
    ProbabilitySpace ps, const Language& lang,
    std::vector<WorldSet> atom_images) {
  return ProbabilityStructure(Kind::kDempsterShafer, std::move(ps),
                              FormulaAlgebra::power_set(lang),
                              std::move(atom_images));
}

ProbabilityStructure ProbabilityStructure::canonical() const {
  std::vector<std::size_t> order(psi_.size());
  std::iota(order.begin(), order.end(), 0);
  const auto& blocks = psi_.basis();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return blocks[a].first_atom() < blocks[b].first_atom();
  });
  std::vector<Formula> sorted_blocks;
  std::vector<WorldSet> sorted_images;
  for (const auto k : order) {
    sorted_blocks.push_back(blocks[k]);
    sorted_images.push_back(images_[k]);
  }
  return ProbabilityStructure(kind_, ps_.canonical(),
                              FormulaAlgebra(language(), std::move(sorted_blocks)),
                              std::move(sorted_images));
}

WorldSet incidence(const ProbabilityStructure& st, const Formula& phi) {
  require_language(st, phi);
  if (!st.psi().contains(phi))
    throw NotInPsi("incidence of " + format_formula(phi) +
                   " is undefined: formula is outside the formula algebra");
  return image_of_blocks_inside(st, phi);
}

ValidationReport validate(const ProbabilityStructure& st) {
  ValidationReport report;
  auto& v = report.violations;
  const auto& ps = st.space();
  for (auto& p : ps.problems()) v.push_back(std::move(p));
  for (auto& p : st.psi().partition_problems()) v.push_back(std::move(p));

  const WorldSet all = ps.space().all();
  WorldSet seen;
  for (std::size_t k = 0; k < st.images().size(); ++k) {
    const WorldSet img = st.images()[k];
    const std::string block = format_formula(st.psi().basis()[k]);
    if (!img.subset_of(all))
      v.push_back("incidence of " + block + " names worlds outside S");
    if (img.intersects(seen))
      v.push_back("incidence of " + block +
                  " overlaps another block's incidence: disjoint formulas "
                  "must have disjoint incidences (i(a & b) = i(a) & i(b))");
    seen |= img;
  }
  if (!all.subset_of(seen))
    v.push_back("incidence images do not cover S: i(true) = S violated");

  if (st.is_ic() && !ps.algebra().is_discrete(ps.space().size()))
    v.push_back(
        "incidence calculus structure needs chi = 2^S "
        "(one singleton block per world)");
  if (st.is_ds() && !st.psi().is_power_set())
    v.push_back(
        "Dempster-Shafer structure needs psi = 2^At "
        "(one singleton block per atom)");
  return report;
}

bool is_total(const ProbabilityStructure& st) {
  require_kind(st, Kind::kDempsterShafer, "is_total");
  for (const WorldSet block : st.space().algebra().basis()) {
    WorldSet covered;
    for (const WorldSet img : st.images())
      if (img.subset_of(block)) covered |= img;
    if (!(covered == block)) return false;
  }
  return true;
}

Rational bel(const ProbabilityStructure& st, const Formula& xi) {
  require_kind(st, Kind::kDempsterShafer, "bel");
  return st.space().inner_measure(image_of_blocks_inside(st, xi));
}

Rational plb(const ProbabilityStructure& st, const Formula& xi) {
  return Rational(1) - bel(st, complement(xi));
}

WorldSet lower_incidence(const ProbabilityStructure& st, const Formula& xi) {
  require_kind(st, Kind::kIncidenceCalculus, "lower_incidence");
  return image_of_blocks_inside(st, xi);
}

WorldSet upper_incidence(const ProbabilityStructure& st, const Formula& xi) {
  require_kind(st, Kind::kIncidenceCalculus, "upper_incidence");
  return st.space().space().all() - image_of_blocks_inside(st, complement(xi));
}

Interval interval(const ProbabilityStructure& st, const Formula& xi) {
  if (st.is_ds()) return {bel(st, xi), plb(st, xi)};
  const auto& ps = st.space();
  return {ps.measure(lower_incidence(st, xi)),
          ps.measure(upper_incidence(st, xi))};
}

std::vector<std::pair<Formula, Rational>> mobius_mass(
    const ProbabilityStructure& st) {
  require_kind(st, Kind::kDempsterShafer, "mobius_mass");
  const Language& lang = st.language();
  if (lang.size() > 3)
    throw LanguageTooLarge("mobius_mass enumerates 2^(2^n) formulas; n <= 3");
  const std::uint64_t n_formulas = std::uint64_t{1} << lang.atom_count();

  std::vector<Rational> belief(n_formulas);
  for (std::uint64_t m = 0; m < n_formulas; ++m)
    belief[m] = bel(st, Formula::from_mask(lang, m));

  std::vector<std::pair<Formula, Rational>> out;
  out.reserve(n_formulas);
  for (std::uint64_t a = 0; a < n_formulas; ++a) {
    Rational mass = 0;
    // Every submask b of a, including a itself and 0.
    for (std::uint64_t b = a;; b = (b - 1) & a) {
      const int gap = std::popcount(a & ~b);
      if (gap % 2 == 0) {
        mass += belief[b];
      } else {
        mass -= belief[b];
      }
      if (b == 0) break;
    }
    out.emplace_back(Formula::from_mask(lang, a), std::move(mass));
  }
  return out;
}

}  // namespace icds
