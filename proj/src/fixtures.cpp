#include "icds/fixtures.hpp"

#include "icds/errors.hpp"

namespace icds::fixtures {

namespace {

Language coats_language() { return Language({"g", "d"}); }

}  // namespace

ProbabilityStructure coats_ds() {
  const Language lang = coats_language();
  SampleSpace space({"s1", "s2", "s3", "s4"});
  const auto at = [&](const char* name) { return *space.index_of(name); };
  const auto set = [&](std::initializer_list<const char*> names) {
    WorldSet out;
    for (const char* n : names) out |= WorldSet::single(at(n));
    return out;
  };
  ProbabilitySpace ps(space, SetAlgebra({set({"s1", "s2"}), set({"s3", "s4"})}),
                      {Rational(1, 2), Rational(1, 2)});
  // Atom order: ~g&~d, g&~d, ~g&d, g&d.
  return ProbabilityStructure::dempster_shafer(
      std::move(ps), lang,
      {set({"s1", "s2"}), set({"s3"}), WorldSet{}, set({"s4"})});
}

ProbabilityStructure coats_ic() {
  const Language lang = coats_language();
  FormulaAlgebra psi(lang, {parse_formula("~g & ~d", lang),
                            parse_formula("g", lang),
                            parse_formula("~g & d", lang)});
  return ProbabilityStructure::incidence_calculus(
             SampleSpace({"w1", "w2"}), {Rational(1, 2), Rational(1, 2)},
             std::move(psi),
             {WorldSet::single(0), WorldSet::single(1), WorldSet{}})
      .canonical();
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = {"coats-ds", "coats-ic"};
  return names;
}

ProbabilityStructure example_by_name(std::string_view name) {
  if (name == "coats-ds") return coats_ds();
  if (name == "coats-ic") return coats_ic();
  std::string valid;
  for (const auto& n : example_names()) valid += (valid.empty() ? "" : ", ") + n;
  throw Error("unknown example '" + std::string(name) + "'; valid names: " + valid);
}

}  // namespace icds::fixtures
