#ifndef LSPACE_SEMIGROUP_HPP
#define LSPACE_SEMIGROUP_HPP

#include <compare>
#include <vector>

#include "lspace/space.hpp"
#include "lspace/word.hpp"

namespace lspace {

// Element of the inverse semigroup of a labelled space: zero or a triple
// (left word, vertex set, right word) with the set a nonempty member of
// both restricted algebras.
class SemigroupElement {
 public:
  static SemigroupElement zero() { return SemigroupElement(); }
  // Validates the triple; throws InputError when the set is empty or not
  // in B_left n B_right.
  static SemigroupElement triple(const LabelledSpace& space, Word left, VertexSet mid,
                                 Word right);

  bool is_zero() const { return zero_; }
  bool is_idempotent() const { return zero_ || left_ == right_; }

  const Word& left() const { return left_; }
  VertexSet mid() const { return mid_; }
  const Word& right() const { return right_; }

  friend bool operator==(const SemigroupElement&, const SemigroupElement&) = default;
  friend auto operator<=>(const SemigroupElement&, const SemigroupElement&) = default;

 private:
  SemigroupElement() : zero_(true) {}
  SemigroupElement(Word l, VertexSet m, Word r)
      : zero_(false), left_(std::move(l)), mid_(m), right_(std::move(r)) {}

  bool zero_;
  Word left_;
  VertexSet mid_;
  Word right_;

  friend SemigroupElement multiply(const LabelledSpace&, const SemigroupElement&,
                                   const SemigroupElement&);
  friend SemigroupElement star(const SemigroupElement&);
};

// Three-case product: the right word of s and the left word of t must be
// comparable, and the transported set nonempty; otherwise zero.
SemigroupElement multiply(const LabelledSpace& space, const SemigroupElement& s,
                          const SemigroupElement& t);

// Involution (left and right words swapped).
SemigroupElement star(const SemigroupElement& s);

// Natural order on idempotents: p <= q iff p's word extends q's and p's
// set is inside the relative range of q's set along the extension.
// Agrees with p*q == p.  Throws InputError on non-idempotent input.
bool natural_leq(const LabelledSpace& space, const SemigroupElement& p,
                 const SemigroupElement& q);

// All nonzero triples with both word lengths bounded by max_len.
std::vector<SemigroupElement> enumerate_elements(const LabelledSpace& space,
                                                 std::size_t max_len);

// All nonzero idempotents with word length bounded by max_len.
std::vector<SemigroupElement> enumerate_idempotents(const LabelledSpace& space,
                                                    std::size_t max_len);

}  // namespace lspace

#endif  // LSPACE_SEMIGROUP_HPP
