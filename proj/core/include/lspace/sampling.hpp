#ifndef LSPACE_SAMPLING_HPP
#define LSPACE_SAMPLING_HPP

#include <random>

#include "lspace/algebra.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/space.hpp"

namespace lspace {

// Uniform choice among the nonzero triples with bounded word lengths.
SemigroupElement random_triple(const LabelledSpace& space, std::mt19937& rng,
                               std::size_t max_len);

// Short random combination of cylinder indicators with small nonzero
// rational coefficients.
AlgebraElement random_algebra_element(const LabelledSpace& space, std::mt19937& rng,
                                      std::size_t max_len, std::size_t max_terms);

}  // namespace lspace

#endif  // LSPACE_SAMPLING_HPP
