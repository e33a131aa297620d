#include "lspace/space.hpp"

#include <string>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

std::string set_to_string(const LabelledGraph& g, VertexSet A) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : A.members()) {
    if (!first) out += ",";
    out += g.vertex_names()[v];
    first = false;
  }
  return out + "}";
}

}  // namespace

LabelledSpace::LabelledSpace(LabelledGraph graph, AccommodatingFamily family)
    : graph_(std::make_shared<const LabelledGraph>(std::move(graph))) {
  if (family.graph().vertex_count() != graph_->vertex_count() ||
      family.graph().letter_count() != graph_->letter_count())
    throw InputError("family was built for a different graph");
  family_ = std::make_shared<const AccommodatingFamily>(
      AccommodatingFamily::from_closed_sets(*graph_, family.sets()));
  if (auto v = weakly_left_resolving_violation(*family_)) {
    auto [A, B, a] = *v;
    throw InputError("labelled space is not weakly left-resolving: sets " +
                     set_to_string(*graph_, A) + " and " + set_to_string(*graph_, B) +
                     ", letter " + graph_->letter_names()[a]);
  }
}

LabelledSpace LabelledSpace::with_minimal_family(LabelledGraph graph) {
  AccommodatingFamily fam = AccommodatingFamily::minimal(graph);
  return LabelledSpace(std::move(graph), std::move(fam));
}

std::optional<VertexSet> LabelledSpace::backward_min(VertexSet level_top, Letter a,
                                                     VertexSet target) const {
  bool any = false;
  VertexSet acc = graph_->full_set();
  for (VertexSet A : family_->sets()) {
    if (!A.subset_of(level_top)) continue;
    if (target.subset_of(graph_->step(A, a))) {
      acc = acc & A;
      any = true;
    }
  }
  if (!any) return std::nullopt;
  return acc;
}

}  // namespace lspace
