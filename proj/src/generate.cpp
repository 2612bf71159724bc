#include "icds/generate.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "icds/errors.hpp"

namespace icds {

namespace {

// mt19937_64's output sequence is fixed by the standard; the distribution
// classes are not, so bounded draws are done by hand for portable seeds.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % n;
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
  }

 private:
  std::mt19937_64 engine_;
};

Language numbered_language(std::size_t n) {
  std::vector<std::string> props;
  for (std::size_t j = 1; j <= n; ++j) props.push_back("p" + std::to_string(j));
  return Language(std::move(props));
}

// Labels 0..k-1 for `n` items with no gaps; the result maps item -> label.
std::vector<std::size_t> random_labels(Rng& rng, std::size_t n,
                                       std::size_t max_labels) {
  const std::size_t k = rng.between(1, max_labels);
  std::vector<std::size_t> raw(n);
  for (auto& r : raw) r = rng.below(k);
  // Compact in order of first appearance.
  std::vector<std::size_t> remap(k, SIZE_MAX);
  std::size_t next = 0;
  for (auto& r : raw) {
    if (remap[r] == SIZE_MAX) remap[r] = next++;
    r = remap[r];
  }
  return raw;
}

std::vector<Rational> normalize(const std::vector<std::uint64_t>& raw) {
  std::uint64_t total = 0;
  for (const auto r : raw) total += r;
  std::vector<Rational> out;
  for (const auto r : raw)
    out.emplace_back(static_cast<std::int64_t>(r),
                     static_cast<std::int64_t>(total));
  return out;
}

}  // namespace

void GenParams::check() const {
  if (n_props < 1 || n_props > 4)
    throw Error("n_props must be in 1..4, got " + std::to_string(n_props));
  if (n_worlds < 1 || n_worlds > 8)
    throw Error("n_worlds must be in 1..8, got " + std::to_string(n_worlds));
}

ProbabilityStructure random_ic(const GenParams& p) {
  p.check();
  Rng rng(p.seed);
  const Language lang = numbered_language(p.n_props);
  const std::size_t n_atoms = lang.atom_count();

  const auto atom_label = random_labels(rng, n_atoms, n_atoms);
  const std::size_t n_blocks =
      *std::max_element(atom_label.begin(), atom_label.end()) + 1;
  std::vector<Formula::Bits> block_bits(n_blocks, Formula::Bits(n_atoms));
  for (std::size_t a = 0; a < n_atoms; ++a) block_bits[atom_label[a]].set(a);

  std::vector<WorldSet> images(n_blocks);
  for (std::size_t w = 0; w < p.n_worlds; ++w)
    images[rng.below(n_blocks)] |= WorldSet::single(w);

  std::vector<std::uint64_t> raw(p.n_worlds);
  for (auto& r : raw) r = rng.between(1, 10);

  std::vector<Formula> blocks;
  for (auto& b : block_bits) blocks.emplace_back(lang, std::move(b));
  return ProbabilityStructure::incidence_calculus(
             SampleSpace::numbered("s", p.n_worlds), normalize(raw),
             FormulaAlgebra(lang, std::move(blocks)), std::move(images))
      .canonical();
}

ProbabilityStructure random_total_ds(const GenParams& p) {
  p.check();
  Rng rng(p.seed);
  const Language lang = numbered_language(p.n_props);
  const std::size_t n_atoms = lang.atom_count();

  std::vector<WorldSet> atom_images(n_atoms);
  for (std::size_t w = 0; w < p.n_worlds; ++w)
    atom_images[rng.below(n_atoms)] |= WorldSet::single(w);

  std::vector<WorldSet> nonempty;
  for (const auto img : atom_images)
    if (!img.empty()) nonempty.push_back(img);
  const auto group = random_labels(rng, nonempty.size(), nonempty.size());
  const std::size_t n_blocks = *std::max_element(group.begin(), group.end()) + 1;
  std::vector<WorldSet> chi(n_blocks);
  for (std::size_t k = 0; k < nonempty.size(); ++k) chi[group[k]] |= nonempty[k];

  std::vector<std::uint64_t> raw(n_blocks);
  std::uint64_t total = 0;
  for (auto& r : raw) total += (r = rng.between(0, 9));
  if (total == 0) raw[rng.below(n_blocks)] = 1;

  ProbabilitySpace ps(SampleSpace::numbered("s", p.n_worlds),
                      SetAlgebra(std::move(chi)), normalize(raw));
  return ProbabilityStructure::dempster_shafer(std::move(ps), lang,
                                               std::move(atom_images))
      .canonical();
}

}  // namespace icds
