#ifndef LSPACE_GROUPOID_HPP
#define LSPACE_GROUPOID_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lspace/filters.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/space.hpp"

namespace lspace {

// A pair of words (cut from the range side, cut from the source side)
// exhibiting two filters as sharing a tail.
struct Witness {
  Word range_word;
  Word source_word;
};

// An arrow of the groupoid: two tight filters with a common tail after
// cutting, and the degree (length cut on the range side minus length cut
// on the source side).  Witnesses are proof artifacts; equality is on
// the triple.
class GroupoidElement {
 public:
  static GroupoidElement arrow(TightFilter range_side, int degree, TightFilter source_side);

  const TightFilter& range_side() const { return range_side_; }
  int degree() const { return degree_; }
  const TightFilter& source_side() const { return source_side_; }

  // Shortest witness, recomputed on demand.
  Witness witness() const;

  bool is_unit() const { return degree_ == 0 && range_side_ == source_side_; }

  friend bool operator==(const GroupoidElement& a, const GroupoidElement& b);
  friend bool operator<(const GroupoidElement& a, const GroupoidElement& b);

 private:
  GroupoidElement(TightFilter r, int d, TightFilter s);

  TightFilter range_side_;
  int degree_;
  TightFilter source_side_;
};

// Shortest witness for the triple, if it is an arrow at all.
std::optional<Witness> find_witness(const TightFilter& range_side, int degree,
                                    const TightFilter& source_side);

// (x y) glues at x's source: requires x.source_side == y.range_side.
GroupoidElement compose(const GroupoidElement& x, const GroupoidElement& y);
GroupoidElement inverse(const GroupoidElement& x);

// All arrows between the given filters witnessed by words of length at
// most max_witness_len.
std::vector<GroupoidElement> enumerate_groupoid(const LabelledSpace& space,
                                                const std::vector<TightFilter>& filters,
                                                std::size_t max_witness_len);

// The action of a nonzero triple t = (left, A, right) on a filter whose
// word begins with `right` and whose level-|right| atom sits inside A:
// cut `right`, glue `left`.
TightFilter act(const LabelledSpace& space, const SemigroupElement& t, const TightFilter& xi);

// A semigroup element paired with a filter containing its source
// idempotent; the raw datum underneath a germ class.
struct Germ {
  SemigroupElement elem;
  TightFilter filter;
};

Germ make_germ(const LabelledSpace& space, SemigroupElement t, TightFilter xi);

// Local agreement of two germs over the same filter: the shorter source
// word extends to the longer one, matched on the range side.
bool germ_equivalent(const LabelledSpace& space, const Germ& a, const Germ& b);

// The groupoid arrow of a germ (acted filter, length difference, filter).
GroupoidElement arrow_of_germ(const LabelledSpace& space, const Germ& g);

// A germ mapping onto the arrow, built from its shortest witness.
Germ germ_of_arrow(const LabelledSpace& space, const GroupoidElement& x);

// Compact-open slice of the groupoid named by a nonzero triple, minus
// basic open sets of the listed idempotents on the source side.
struct Cylinder {
  SemigroupElement base;
  std::vector<SemigroupElement> negatives;
};

Cylinder make_cylinder(const LabelledSpace& space, SemigroupElement base,
                       std::vector<SemigroupElement> negatives = {});

bool cylinder_member(const LabelledSpace& space, const Cylinder& Z, const GroupoidElement& x);

// Intersection of negatives-free cylinders: a cylinder again, or empty.
std::optional<Cylinder> intersect_cylinders(const LabelledSpace& space, const Cylinder& a,
                                            const Cylinder& b);

// Shrinks the sets of negatives-free cylinders until they are pairwise
// disjoint without changing the union.
std::vector<Cylinder> disjointify(const LabelledSpace& space, std::vector<Cylinder> zs);

}  // namespace lspace

#endif  // LSPACE_GROUPOID_HPP
