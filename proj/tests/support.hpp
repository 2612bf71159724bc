#pragma once

// Test-only oracles. Nothing here calls into the code paths it is used to
// check: sentences are evaluated per truth assignment by a separate
// recursive evaluator, and measures are taken from the sup over every
// enumerated measurable subset.

#include <cctype>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "icds/structure.hpp"

namespace icds::testing {

// Evaluates a sentence under one truth assignment (bit j of `assignment`
// is the value of props[j]).
class TruthEvaluator {
 public:
  TruthEvaluator(std::string_view text, const std::vector<std::string>& props,
                 std::uint64_t assignment)
      : text_(text), props_(props), assignment_(assignment) {}

  bool value() {
    const bool v = disjunction();
    skip();
    if (pos_ != text_.size()) throw std::logic_error("trailing input");
    return v;
  }

 private:
  bool disjunction() {
    bool v = conjunction();
    while (peek('|')) {
      ++pos_;
      const bool rhs = conjunction();
      v = v || rhs;
    }
    return v;
  }
  bool conjunction() {
    bool v = negation();
    while (peek('&')) {
      ++pos_;
      const bool rhs = negation();
      v = v && rhs;
    }
    return v;
  }
  bool negation() {
    if (peek('~')) {
      ++pos_;
      return !negation();
    }
    if (peek('(')) {
      ++pos_;
      const bool v = disjunction();
      if (!peek(')')) throw std::logic_error("missing )");
      ++pos_;
      return v;
    }
    skip();
    std::string name;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      name += text_[pos_++];
    if (name == "true") return true;
    if (name == "false") return false;
    for (std::size_t j = 0; j < props_.size(); ++j)
      if (props_[j] == name) return (assignment_ >> j) & 1U;
    throw std::logic_error("unknown name " + name);
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void skip() {
    while (pos_ < text_.size() && text_[pos_] == ' ') ++pos_;
  }

  std::string_view text_;
  const std::vector<std::string>& props_;
  std::uint64_t assignment_;
  std::size_t pos_ = 0;
};

// Atom mask of a sentence by evaluating it under each of the 2^n
// assignments.
inline std::uint64_t truth_table(std::string_view text,
                                 const std::vector<std::string>& props) {
  std::uint64_t mask = 0;
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << props.size()); ++a)
    if (TruthEvaluator(text, props, a).value()) mask |= std::uint64_t{1} << a;
  return mask;
}

// Random sentence text over the given propositions.
inline std::string random_sentence(std::mt19937_64& rng,
                                   const std::vector<std::string>& props,
                                   int depth) {
  const auto pick = [&](std::uint64_t n) { return rng() % n; };
  if (depth == 0 || pick(4) == 0) {
    const auto k = pick(props.size() + 2);
    if (k == props.size()) return "true";
    if (k == props.size() + 1) return "false";
    return props[k];
  }
  switch (pick(4)) {
    case 0:
      return "~" + random_sentence(rng, props, depth - 1);
    case 1:
      return "(" + random_sentence(rng, props, depth - 1) + " & " +
             random_sentence(rng, props, depth - 1) + ")";
    case 2:
      return random_sentence(rng, props, depth - 1) + " | " +
             random_sentence(rng, props, depth - 1);
    default:
      return "(" + random_sentence(rng, props, depth - 1) + ")";
  }
}

// sup { mu(X) : X in chi, X subset of a } by enumerating every union of
// chi-basis blocks.
inline Rational brute_inner_measure(const ProbabilitySpace& ps, WorldSet a) {
  const auto& blocks = ps.algebra().basis();
  Rational best = 0;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << blocks.size()); ++sel) {
    WorldSet x;
    Rational mu = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if ((sel >> k) & 1U) {
        x |= blocks[k];
        mu += ps.weights()[k];
      }
    }
    if (x.subset_of(a) && mu > best) best = mu;
  }
  return best;
}

// Union of i(phi) over every member phi of psi with phi inside xi, with
// i(phi) taken as the union of its blocks' images.
inline WorldSet brute_lower_incidence(const ProbabilityStructure& st,
                                      std::uint64_t xi_mask) {
  const auto& blocks = st.psi().basis();
  WorldSet out;
  for (std::uint64_t sel = 0; sel < (std::uint64_t{1} << blocks.size()); ++sel) {
    std::uint64_t phi = 0;
    WorldSet img;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if ((sel >> k) & 1U) {
        phi |= blocks[k].mask();
        img |= st.images()[k];
      }
    }
    if ((phi & ~xi_mask) == 0) out |= img;
  }
  return out;
}

// Interval from the definitions alone: the DS side via the sup form of the
// inner measure on i(xi), the IC side via enumerated lower incidences and a
// per-world sum for mu.
inline Interval brute_interval(const ProbabilityStructure& st,
                               std::uint64_t xi_mask) {
  const std::uint64_t full =
      st.language().atom_count() == 64
          ? ~std::uint64_t{0}
          : (std::uint64_t{1} << st.language().atom_count()) - 1;
  const WorldSet all = st.space().space().all();
  if (st.is_ds()) {
    const auto image = [&](std::uint64_t m) {
      WorldSet out;
      for (std::size_t a = 0; a < st.images().size(); ++a)
        if ((m >> a) & 1U) out |= st.images()[a];
      return out;
    };
    const Rational lo = brute_inner_measure(st.space(), image(xi_mask));
    const Rational hi =
        Rational(1) - brute_inner_measure(st.space(), image(full & ~xi_mask));
    return {lo, hi};
  }
  const auto mu = [&](WorldSet x) {
    Rational sum = 0;
    for (const auto w : x.worlds()) sum += st.space().weights()[w];
    return sum;
  };
  const WorldSet lower = brute_lower_incidence(st, xi_mask);
  const WorldSet upper = all - brute_lower_incidence(st, full & ~xi_mask);
  return {mu(lower), mu(upper)};
}

}  // namespace icds::testing
