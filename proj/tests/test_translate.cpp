#include "doctest.h"
#include "icds/errors.hpp"
#include "icds/fixtures.hpp"
#include "icds/generate.hpp"
#include "icds/translate.hpp"

using namespace icds;

namespace {

Formula f(const ProbabilityStructure& st, const char* text) {
  return parse_formula(text, st.language());
}

ProbabilityStructure nontotal_ds() {
  ProbabilitySpace ps(SampleSpace::numbered("s", 4),
                      SetAlgebra({WorldSet(0b0001), WorldSet(0b1110)}),
                      {Rational(1, 2), Rational(1, 2)});
  return ProbabilityStructure::dempster_shafer(
      ps, Language({"g", "d"}),
      {WorldSet(0b0011), WorldSet(0b0100), WorldSet(0b1000), WorldSet{}});
}

ProbabilityStructure with_weights(const ProbabilityStructure& st,
                                  std::vector<Rational> weights) {
  return ProbabilityStructure(
      st.kind(),
      ProbabilitySpace(st.space().space(), st.space().algebra(), std::move(weights)),
      st.psi(), st.images());
}

}  // namespace

TEST_CASE("ic_to_ds on the IC coat fixture") {
  const auto ds = ic_to_ds(fixtures::coats_ic());
  CHECK(ds.is_ds());
  CHECK(validate(ds).ok());
  CHECK(is_total(ds));
  CHECK(ds.space().space().names() ==
        std::vector<std::string>{"not_g__not_d", "g__not_d", "not_g__d", "g__d"});
  // Blocks in canonical order: {~g&~d}, {g&~d, g&d}, {~g&d}.
  CHECK(ds.space().algebra().basis() ==
        std::vector<WorldSet>{WorldSet(0b0001), WorldSet(0b1010), WorldSet(0b0100)});
  CHECK(ds.space().weights() ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(0)});
  for (std::size_t a = 0; a < 4; ++a) CHECK(ds.images()[a] == WorldSet::single(a));
  CHECK(interval(ds, f(ds, "~d")) == Interval{Rational(1, 2), Rational(1)});
}

TEST_CASE("ic_to_ds of a trivial formula algebra is vacuous") {
  const Language lang({"a", "b"});
  const auto ic = ProbabilityStructure::incidence_calculus(
      SampleSpace::numbered("s", 3), {Rational(1, 5), Rational(3, 5), Rational(1, 5)},
      FormulaAlgebra::trivial(lang), {WorldSet(0b111)});
  REQUIRE(validate(ic).ok());
  const auto ds = ic_to_ds(ic);
  CHECK(ds.space().algebra().size() == 1);
  CHECK(ds.space().weights() == std::vector<Rational>{Rational(1)});
  for (std::uint64_t m = 1; m + 1 < 16; ++m)
    CHECK(interval(ds, Formula::from_mask(lang, m)) == Interval{Rational(0), Rational(1)});
  CHECK(equivalent(ic, ds).equivalent);
}

TEST_CASE("ic_to_ds preserves intervals on random IC structures") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto ic = random_ic({n, 1 + seed % 8, seed});
      const auto ds = ic_to_ds(ic);
      CHECK(validate(ds).ok());
      CHECK(is_total(ds));
      const auto rep = equivalent(ic, ds);
      CHECK(rep.equivalent);
      CHECK(rep.checked_count == (std::uint64_t{1} << (std::uint64_t{1} << n)));
    }
  }
  CHECK_THROWS_AS(ic_to_ds(fixtures::coats_ds()), WrongKind);
}

TEST_CASE("ds_to_ic on the DS coat fixture reproduces the IC fixture") {
  const auto ic = ds_to_ic(fixtures::coats_ds());
  CHECK(ic == fixtures::coats_ic());
  CHECK(validate(ic).ok());
  CHECK(ic.space().space().names() == std::vector<std::string>{"w1", "w2"});
  CHECK(ic.space().weights() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  std::vector<std::string> members;
  for (const auto& m : ic.psi().members()) members.push_back(format_formula(m));
  std::sort(members.begin(), members.end());
  std::vector<std::string> expected;
  for (const char* s :
       {"false", "~g & d", "~g & ~d", "(g & ~d) | (g & d)", "(~g & ~d) | (~g & d)",
        "(~g & d) | (g & ~d) | (g & d)", "(~g & ~d) | (g & ~d) | (g & d)", "true"})
    expected.push_back(format_formula(f(ic, s)));
  std::sort(expected.begin(), expected.end());
  CHECK(members == expected);
  CHECK(interval(ic, f(ic, "~d")) == Interval{Rational(1, 2), Rational(1)});
}

TEST_CASE("ds_to_ic of a vacuous DS structure has one world") {
  const Language lang({"g", "d"});
  ProbabilitySpace ps(SampleSpace::numbered("s", 3), SetAlgebra::trivial(3), {Rational(1)});
  const auto ds = ProbabilityStructure::dempster_shafer(
      ps, lang, {WorldSet(0b001), WorldSet{}, WorldSet(0b110), WorldSet{}});
  REQUIRE(is_total(ds));
  const auto ic = ds_to_ic(ds);
  CHECK(validate(ic).ok());
  CHECK(ic.space().space().size() == 1);
  for (std::uint64_t m = 0; m < 16; ++m) {
    const Formula phi = Formula::from_mask(lang, m);
    const WorldSet img = incidence(ds, phi);
    CHECK(ic.psi().contains(phi) == (img.empty() || img == WorldSet(0b111)));
  }
  CHECK(equivalent(ds, ic).equivalent);
}

TEST_CASE("ds_to_ic builds psi = {phi : i(phi) measurable} on random structures") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const auto ds = random_total_ds({n, 1 + seed % 8, seed});
      const auto ic = ds_to_ic(ds);
      REQUIRE(validate(ic).ok());
      const Language& lang = ds.language();
      for (std::uint64_t m = 0; m < (std::uint64_t{1} << lang.atom_count()); ++m) {
        const Formula phi = Formula::from_mask(lang, m);
        CHECK(ic.psi().contains(phi) ==
              ds.space().algebra().contains(incidence(ds, phi)));
      }
      if (ic.psi().size() <= 8) CHECK(basis_of(ic.psi().members(), lang) == ic.psi());
      CHECK(equivalent(ds, ic).equivalent);
    }
  }
}

TEST_CASE("ds_to_ic refuses non-total and IC input") {
  CHECK_THROWS_AS(ds_to_ic(nontotal_ds()), NotTotal);
  CHECK_THROWS_AS(round_trip_check(nontotal_ds()), NotTotal);
  CHECK_THROWS_AS(ds_to_ic(fixtures::coats_ic()), WrongKind);
}

TEST_CASE("equivalent") {
  const auto ds = fixtures::coats_ds();
  const auto ic = fixtures::coats_ic();
  auto rep = equivalent(ds, ic);
  CHECK(rep.equivalent);
  CHECK(rep.checked_count == 16);
  CHECK_FALSE(rep.witness);
  CHECK(equivalent(ds, ds).equivalent);

  // Blue block at 1/4: the first formula to differ is the single blue atom,
  // where the original gives [1/2, 1/2] (bel from {s1,s2}; plb = 1 - bel of
  // the other three atoms, whose image {s3,s4} is the grey block).
  const auto skewed = with_weights(ds, {Rational(1, 4), Rational(3, 4)});
  rep = equivalent(ds, skewed);
  CHECK_FALSE(rep.equivalent);
  CHECK(rep.checked_count == 16);
  REQUIRE(rep.witness);
  CHECK(format_formula(rep.witness->formula) == "(~g & ~d)");
  CHECK(rep.witness->first == Interval{Rational(1, 2), Rational(1, 2)});
  CHECK(rep.witness->second == Interval{Rational(1, 4), Rational(1, 4)});
  CHECK(rep.witness->formula.mask() < f(ds, "~g").mask());

  CHECK_THROWS_AS(equivalent(ds, random_ic({2, 2, 1})), LanguageMismatch);

  const Language five({"a", "b", "c", "d", "e"});
  const auto big = ProbabilityStructure::incidence_calculus(
      SampleSpace({"w"}), {Rational(1)}, FormulaAlgebra::trivial(five), {WorldSet(1)});
  CHECK_THROWS_AS(equivalent(big, big), LanguageTooLarge);
}

TEST_CASE("equivalent is reflexive and symmetric") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto a = random_ic({2, 3, seed});
    const auto b = random_total_ds({2, 3, seed + 1000});
    CHECK(equivalent(a, a).equivalent);
    CHECK(equivalent(b, b).equivalent);
    const auto ab = equivalent(a, b);
    const auto ba = equivalent(b, a);
    CHECK(ab.equivalent == ba.equivalent);
    if (!ab.equivalent) {
      CHECK(ab.witness->formula == ba.witness->formula);
      CHECK(ab.witness->first == ba.witness->second);
    }
  }
}

TEST_CASE("generators are deterministic and valid") {
  CHECK(random_ic({3, 5, 42}) == random_ic({3, 5, 42}));
  CHECK(random_total_ds({3, 5, 42}) == random_total_ds({3, 5, 42}));
  CHECK_FALSE(random_ic({3, 5, 42}) == random_ic({3, 5, 43}));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const GenParams p{2 + seed % 2, 1 + seed % 8, seed};
    REQUIRE(validate(random_ic(p)).ok());
    const auto ds = random_total_ds(p);
    REQUIRE(validate(ds).ok());
    REQUIRE(is_total(ds));
  }
  CHECK_THROWS(random_ic({0, 3, 1}));
  CHECK_THROWS(random_ic({5, 3, 1}));
  CHECK_THROWS(random_total_ds({2, 0, 1}));
  CHECK_THROWS(random_total_ds({2, 9, 1}));
  CHECK_NOTHROW(random_total_ds({4, 8, 1}));
}

TEST_CASE("round trips") {
  CHECK(round_trip_check(fixtures::coats_ic()).equivalent);
  CHECK(round_trip_check(fixtures::coats_ds()).equivalent);
  // Equivalent but not identical: the zero-weight block becomes a third world.
  const auto back = ds_to_ic(ic_to_ds(fixtures::coats_ic()));
  CHECK(back.space().space().size() == 3);
  CHECK_FALSE(back == fixtures::coats_ic());
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(round_trip_check(random_ic({3, 1 + seed % 8, seed})).equivalent);
    CHECK(round_trip_check(random_total_ds({3, 1 + seed % 8, seed})).equivalent);
  }
}

TEST_CASE("four propositions") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const auto ic = random_ic({4, 8, seed});
    CHECK(equivalent(ic, ic_to_ds(ic)).equivalent);
    const auto ds = random_total_ds({4, 8, seed});
    CHECK(equivalent(ds, ds_to_ic(ds)).equivalent);
  }
}
