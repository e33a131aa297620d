#include "lspace/semigroup.hpp"

#include "lspace/errors.hpp"

namespace lspace {

SemigroupElement SemigroupElement::triple(const LabelledSpace& space, Word left,
                                          VertexSet mid, Word right) {
  if (mid.empty()) throw InputError("triple needs a nonempty vertex set");
  if (!space.algebra_at(left).contains(mid))
    throw InputError("vertex set is not in the restricted algebra of the left word");
  if (!space.algebra_at(right).contains(mid))
    throw InputError("vertex set is not in the restricted algebra of the right word");
  return SemigroupElement(std::move(left), mid, std::move(right));
}

SemigroupElement multiply(const LabelledSpace& space, const SemigroupElement& s,
                          const SemigroupElement& t) {
  if (s.is_zero() || t.is_zero()) return SemigroupElement::zero();
  if (s.right_.is_prefix_of(t.left_)) {
    Word ext = t.left_.suffix_from(s.right_.size());
    VertexSet mid = relative_range(space.graph(), s.mid_, ext) & t.mid_;
    if (mid.empty()) return SemigroupElement::zero();
    return SemigroupElement(s.left_ + ext, mid, t.right_);
  }
  if (t.left_.is_prefix_of(s.right_)) {
    Word ext = s.right_.suffix_from(t.left_.size());
    VertexSet mid = s.mid_ & relative_range(space.graph(), t.mid_, ext);
    if (mid.empty()) return SemigroupElement::zero();
    return SemigroupElement(s.left_, mid, t.right_ + ext);
  }
  return SemigroupElement::zero();
}

SemigroupElement star(const SemigroupElement& s) {
  if (s.is_zero()) return s;
  return SemigroupElement(s.right_, s.mid_, s.left_);
}

bool natural_leq(const LabelledSpace& space, const SemigroupElement& p,
                 const SemigroupElement& q) {
  if (!p.is_idempotent() || !q.is_idempotent())
    throw InputError("natural order is defined on idempotents only");
  if (p.is_zero()) return true;
  if (q.is_zero()) return false;
  if (!q.left().is_prefix_of(p.left())) return false;
  Word ext = p.left().suffix_from(q.left().size());
  return p.mid().subset_of(relative_range(space.graph(), q.mid(), ext));
}

std::vector<SemigroupElement> enumerate_elements(const LabelledSpace& space,
                                                 std::size_t max_len) {
  std::vector<Word> words = labelled_paths_up_to(space.graph(), max_len);
  std::vector<VertexSet> ranges;
  ranges.reserve(words.size());
  for (const Word& w : words)
    ranges.push_back(w.is_empty() ? space.graph().full_set() : space.range(w));

  std::vector<SemigroupElement> out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (std::size_t j = 0; j < words.size(); ++j) {
      VertexSet top = ranges[i] & ranges[j];
      for (VertexSet A : space.family().sets()) {
        if (A.empty() || !A.subset_of(top)) continue;
        out.push_back(SemigroupElement::triple(space, words[i], A, words[j]));
      }
    }
  }
  return out;
}

std::vector<SemigroupElement> enumerate_idempotents(const LabelledSpace& space,
                                                    std::size_t max_len) {
  std::vector<SemigroupElement> out;
  for (const Word& w : labelled_paths_up_to(space.graph(), max_len)) {
    for (VertexSet A : space.algebra_at(w).carrier()) {
      if (A.empty()) continue;
      out.push_back(SemigroupElement::triple(space, w, A, w));
    }
  }
  return out;
}

}  // namespace lspace
