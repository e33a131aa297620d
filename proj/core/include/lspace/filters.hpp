#ifndef LSPACE_FILTERS_HPP
#define LSPACE_FILTERS_HPP

#include <optional>
#include <span>
#include <vector>

#include "lspace/semigroup.hpp"
#include "lspace/space.hpp"
#include "lspace/word.hpp"

namespace lspace {

// Minima of the level filters attached to a word.  Level n lives in the
// algebra restricted to r(first n letters); level 0 lives in the whole
// family and may be absent (no member qualifies).
struct CompleteFamily {
  Word word;
  std::vector<std::optional<VertexSet>> minima;  // size word.size() + 1
};

// Chain of minima computed downward from a nonempty member X of the
// algebra at `word`; throws InputError when X is not such a member.
CompleteFamily complete_from_atom(const LabelledSpace& space, const Word& word, VertexSet X);

// A tight filter, represented by its word (finite, or an eventually
// periodic lasso) and the atom at every level.  Lassos are kept in joint
// canonical form: shortest letter+atom period, then shortest prefix.
class TightFilter {
 public:
  // Finite type: word plus the ultrafilter atom at the top level.  The
  // lower levels are the (determined) chain of minima.  Requires the
  // sink/infinite-letter condition at the atom.
  static TightFilter finite(const LabelledSpace& space, Word word, VertexSet top_atom);

  // Infinite type: letters prefix.cycle.cycle... with atoms at levels
  // 0..|prefix|+|cycle|-1 (the tail of the atom sequence repeats with the
  // cycle).  Level 0 may be an empty set, standing for the absent level.
  static TightFilter lasso(const LabelledSpace& space, Word prefix, Word cycle,
                           std::vector<VertexSet> atoms);

  const LabelledSpace& space() const { return *space_; }
  bool is_finite() const { return finite_; }

  // Finite type only.
  const Word& word() const;
  std::size_t finite_length() const;

  // Infinite type only.
  const Word& prefix() const;
  const Word& cycle() const;
  std::size_t stored_levels() const { return atoms_.size(); }

  // Letter of step i (zero-based; the letter between levels i and i+1).
  Letter letter_at(std::size_t i) const;
  // Atom at a level; the empty set marks an absent level 0.
  VertexSet atom_at(std::size_t n) const;
  bool level_defined(std::size_t n) const { return !atom_at(n).empty(); }

  bool has_word_prefix(const Word& w) const;
  Word word_prefix(std::size_t n) const;

  // Drop the first k letters and levels.
  TightFilter cut_front(std::size_t k) const;
  // Prepend a word; requires level 0 present with atom inside the range
  // of the glued word.
  TightFilter glue_front(const Word& alpha) const;

  // Membership of a nonzero idempotent (w, A, w): w begins the filter's
  // word and A contains the atom at level |w|.
  bool contains(const SemigroupElement& e) const;

  friend bool operator==(const TightFilter& a, const TightFilter& b);
  friend bool operator<(const TightFilter& a, const TightFilter& b);

 private:
  TightFilter(const LabelledSpace& space, bool finite, Word prefix, Word cycle,
              std::vector<VertexSet> atoms);

  void canonicalize_lasso();
  void validate() const;

  const LabelledSpace* space_;
  bool finite_;
  Word prefix_;  // the whole word for finite type
  Word cycle_;   // empty for finite type
  // Finite: levels 0..|word|; lasso: levels 0..p+c-1, then periodic.
  std::vector<VertexSet> atoms_;
};

// All tight filters of finite type with word length <= depth together
// with all infinite-type ones whose canonical lasso fits in depth
// letters.  Sorted, finite type first.
std::vector<TightFilter> enumerate_tight(const LabelledSpace& space, std::size_t depth);

// xi lies in the basic open set of e minus the listed idempotents.
bool in_basic_open(const TightFilter& xi, const SemigroupElement& e,
                   std::span<const SemigroupElement> negatives);

// Whether a finite-type filter at this atom would be tight: the letters
// leaving the atom are infinite (never, here) or some family member sits
// inside atom n sinks.
bool finite_type_tight_at(const LabelledSpace& space, VertexSet atom);

}  // namespace lspace

#endif  // LSPACE_FILTERS_HPP
