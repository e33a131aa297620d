#ifndef LSPACE_SPACE_HPP
#define LSPACE_SPACE_HPP

#include <memory>
#include <optional>

#include "lspace/family.hpp"
#include "lspace/graph.hpp"

namespace lspace {

// A labelled graph together with a normal accommodating family, checked
// to be weakly left-resolving at construction (everything downstream
// assumes it).
class LabelledSpace {
 public:
  LabelledSpace(LabelledGraph graph, AccommodatingFamily family);

  static LabelledSpace with_minimal_family(LabelledGraph graph);

  const LabelledGraph& graph() const { return *graph_; }
  const AccommodatingFamily& family() const { return *family_; }

  VertexSet range(const Word& alpha) const { return lspace::range(*graph_, alpha); }
  VertexSet step(VertexSet A, Letter a) const { return graph_->step(A, a); }

  RestrictedAlgebra algebra_at(const Word& alpha) const { return family_->restrict_to(alpha); }

  // Minimum of {A in the level algebra | r(A, a) contains target}, where
  // the level algebra is the family restricted to P(level_top) (the
  // whole family when at the empty-word level).  Empty optional when no
  // member qualifies.
  std::optional<VertexSet> backward_min(VertexSet level_top, Letter a, VertexSet target) const;

 private:
  // Held by shared_ptr so that values carrying a space pointer (filters,
  // groupoid elements) stay cheap to copy while the space outlives them.
  std::shared_ptr<const LabelledGraph> graph_;
  std::shared_ptr<const AccommodatingFamily> family_;
};

}  // namespace lspace

#endif  // LSPACE_SPACE_HPP
