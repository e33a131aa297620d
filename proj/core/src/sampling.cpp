#include "lspace/sampling.hpp"

#include "lspace/errors.hpp"

namespace lspace {

SemigroupElement random_triple(const LabelledSpace& space, std::mt19937& rng,
                               std::size_t max_len) {
  std::vector<SemigroupElement> all = enumerate_elements(space, max_len);
  if (all.empty()) throw InputError("the semigroup has no nonzero elements to sample");
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

AlgebraElement random_algebra_element(const LabelledSpace& space, std::mt19937& rng,
                                      std::size_t max_len, std::size_t max_terms) {
  std::vector<SemigroupElement> all = enumerate_elements(space, max_len);
  if (all.empty()) return AlgebraElement::zero();
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::uniform_int_distribution<std::size_t> nterms(1, max_terms);
  std::uniform_int_distribution<long long> num(-3, 3);
  std::uniform_int_distribution<long long> den(1, 3);
  AlgebraElement out;
  std::size_t n = nterms(rng);
  for (std::size_t i = 0; i < n; ++i) {
    long long p = num(rng);
    if (p == 0) p = 1;
    out.add_term(all[pick(rng)], Rational(p, den(rng)));
  }
  return out;
}

}  // namespace lspace
