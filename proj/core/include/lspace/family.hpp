#ifndef LSPACE_FAMILY_HPP
#define LSPACE_FAMILY_HPP

#include <optional>
#include <vector>

#include "lspace/graph.hpp"
#include "lspace/word.hpp"

namespace lspace {

class RestrictedAlgebra;

// A normal accommodating family of vertex sets: contains the empty set
// and every r(a), and is closed under finite unions, intersections,
// relative complements and relative ranges.  Members are kept sorted by
// mask value.
class AccommodatingFamily {
 public:
  // Least family generated by the letter ranges.
  static AccommodatingFamily minimal(const LabelledGraph& g);
  // The full power set, for cross-checks.
  static AccommodatingFamily powerset(const LabelledGraph& g);
  // User-supplied carrier; throws InputError naming the first closure
  // violation.  The empty set is added if missing.
  static AccommodatingFamily from_sets(const LabelledGraph& g, std::vector<VertexSet> sets);
  // Caller guarantees the sets are already closed (rebinding a validated
  // family to another graph instance, or carriers closed by construction).
  static AccommodatingFamily from_closed_sets(const LabelledGraph& g,
                                              std::vector<VertexSet> sets);

  const LabelledGraph& graph() const { return *graph_; }
  const std::vector<VertexSet>& sets() const { return sets_; }
  bool contains(VertexSet A) const;

  // Atoms of the whole family (minimal nonempty members).  Atoms of a
  // restriction to P(R) are exactly the atoms contained in R.
  const std::vector<VertexSet>& atoms() const { return atoms_; }
  bool is_atom(VertexSet A) const;

  // B_alpha = B intersected with P(r(alpha)); for the empty word this is
  // the whole family.
  RestrictedAlgebra restrict_to(const Word& alpha) const;
  RestrictedAlgebra restrict_to_range(VertexSet top, Word context) const;

 private:
  AccommodatingFamily(const LabelledGraph& g, std::vector<VertexSet> sets);

  const LabelledGraph* graph_;
  std::vector<VertexSet> sets_;
  std::vector<VertexSet> atoms_;
};

// The members of a family contained in r(alpha): a finite Boolean
// algebra with top r(alpha) (the whole, generalized-Boolean, family when
// alpha is the empty word).
class RestrictedAlgebra {
 public:
  RestrictedAlgebra(const AccommodatingFamily& fam, Word context, VertexSet top,
                    bool whole_family);

  const AccommodatingFamily& family() const { return *fam_; }
  const Word& context() const { return context_; }
  VertexSet top() const { return top_; }
  // r(alpha) empty: the carrier degenerates to the empty set alone.
  bool degenerate() const;

  std::vector<VertexSet> carrier() const;
  bool contains(VertexSet A) const;
  std::vector<VertexSet> atoms() const;
  // Minimal nonempty members below A; throws InputError when A is not in
  // the carrier.  They are pairwise disjoint with union A.
  std::vector<VertexSet> atoms_below(VertexSet A) const;

 private:
  const AccommodatingFamily* fam_;
  Word context_;
  VertexSet top_;
  bool whole_family_;
};

// r(A n B, a) = r(A, a) n r(B, a) for all members and single letters;
// the word case follows by composition of ranges.
bool check_weakly_left_resolving(const AccommodatingFamily& fam);

// First weak-left-resolving violation, if any: (A, B, letter).
std::optional<std::tuple<VertexSet, VertexSet, Letter>> weakly_left_resolving_violation(
    const AccommodatingFamily& fam);

}  // namespace lspace

#endif  // LSPACE_FAMILY_HPP
