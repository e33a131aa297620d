#include "lspace/family.hpp"

#include <algorithm>
#include <set>
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

AccommodatingFamily::AccommodatingFamily(const LabelledGraph& g, std::vector<VertexSet> sets)
    : graph_(&g), sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end());
  sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  for (VertexSet A : sets_) {
    if (A.empty()) continue;
    bool minimal = true;
    for (VertexSet B : sets_) {
      if (!B.empty() && B != A && B.subset_of(A)) {
        minimal = false;
        break;
      }
    }
    if (minimal) atoms_.push_back(A);
  }
}

AccommodatingFamily AccommodatingFamily::minimal(const LabelledGraph& g) {
  std::set<VertexSet> work;
  work.insert(VertexSet());
  for (Letter a = 0; a < g.letter_count(); ++a) work.insert(g.step(g.full_set(), a));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<VertexSet> cur(work.begin(), work.end());
    for (VertexSet A : cur) {
      for (Letter a = 0; a < g.letter_count(); ++a)
        grew |= work.insert(g.step(A, a)).second;
      for (VertexSet B : cur) {
        grew |= work.insert(A & B).second;
        grew |= work.insert(A | B).second;
        grew |= work.insert(A.minus(B)).second;
      }
    }
  }
  return AccommodatingFamily(g, std::vector<VertexSet>(work.begin(), work.end()));
}

AccommodatingFamily AccommodatingFamily::powerset(const LabelledGraph& g) {
  if (g.vertex_count() > 12)
    throw InputError("power-set family is limited to 12 vertices");
  std::vector<VertexSet> sets;
  std::uint64_t n = std::uint64_t{1} << g.vertex_count();
  sets.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) sets.push_back(VertexSet(m));
  return AccommodatingFamily(g, std::move(sets));
}

AccommodatingFamily AccommodatingFamily::from_closed_sets(const LabelledGraph& g,
                                                          std::vector<VertexSet> sets) {
  sets.push_back(VertexSet());
  return AccommodatingFamily(g, std::move(sets));
}

AccommodatingFamily AccommodatingFamily::from_sets(const LabelledGraph& g,
                                                   std::vector<VertexSet> sets) {
  sets.push_back(VertexSet());
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::set<VertexSet> have(sets.begin(), sets.end());
  for (VertexSet A : sets)
    if (!A.subset_of(g.full_set())) throw InputError("family set outside the vertex set");
  for (Letter a = 0; a < g.letter_count(); ++a) {
    VertexSet ra = g.step(g.full_set(), a);
    if (!have.count(ra))
      throw InputError("family is missing r(" + g.letter_names()[a] + ") = " +
                       set_to_string(g, ra));
  }
  for (VertexSet A : sets) {
    for (Letter a = 0; a < g.letter_count(); ++a) {
      VertexSet r = g.step(A, a);
      if (!have.count(r))
        throw InputError("family not closed under relative ranges: set " +
                         set_to_string(g, A) + ", letter " + g.letter_names()[a]);
    }
    for (VertexSet B : sets) {
      if (!have.count(A & B))
        throw InputError("family not closed under intersection: " + set_to_string(g, A) +
                         ", " + set_to_string(g, B));
      if (!have.count(A | B))
        throw InputError("family not closed under union: " + set_to_string(g, A) + ", " +
                         set_to_string(g, B));
      if (!have.count(A.minus(B)))
        throw InputError("family not closed under relative complement: " +
                         set_to_string(g, A) + " \\ " + set_to_string(g, B));
    }
  }
  return AccommodatingFamily(g, std::move(sets));
}

bool AccommodatingFamily::contains(VertexSet A) const {
  return std::binary_search(sets_.begin(), sets_.end(), A);
}

bool AccommodatingFamily::is_atom(VertexSet A) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), A);
}

RestrictedAlgebra AccommodatingFamily::restrict_to(const Word& alpha) const {
  if (alpha.is_empty())
    return RestrictedAlgebra(*this, alpha, graph_->full_set(), true);
  return RestrictedAlgebra(*this, alpha, range(*graph_, alpha), false);
}

RestrictedAlgebra AccommodatingFamily::restrict_to_range(VertexSet top, Word context) const {
  return RestrictedAlgebra(*this, std::move(context), top, false);
}

RestrictedAlgebra::RestrictedAlgebra(const AccommodatingFamily& fam, Word context,
                                     VertexSet top, bool whole_family)
    : fam_(&fam), context_(std::move(context)), top_(top), whole_family_(whole_family) {}

bool RestrictedAlgebra::degenerate() const { return !whole_family_ && top_.empty(); }

std::vector<VertexSet> RestrictedAlgebra::carrier() const {
  std::vector<VertexSet> out;
  for (VertexSet A : fam_->sets())
    if (A.subset_of(top_)) out.push_back(A);
  return out;
}

bool RestrictedAlgebra::contains(VertexSet A) const {
  return A.subset_of(top_) && fam_->contains(A);
}

std::vector<VertexSet> RestrictedAlgebra::atoms() const {
  std::vector<VertexSet> out;
  for (VertexSet C : fam_->atoms())
    if (C.subset_of(top_)) out.push_back(C);
  return out;
}

std::vector<VertexSet> RestrictedAlgebra::atoms_below(VertexSet A) const {
  if (!contains(A))
    throw InputError("set " + set_to_string(fam_->graph(), A) + " is not in the algebra");
  std::vector<VertexSet> out;
  for (VertexSet C : fam_->atoms())
    if (C.subset_of(A)) out.push_back(C);
  return out;
}

std::optional<std::tuple<VertexSet, VertexSet, Letter>> weakly_left_resolving_violation(
    const AccommodatingFamily& fam) {
  const LabelledGraph& g = fam.graph();
  for (VertexSet A : fam.sets())
    for (VertexSet B : fam.sets())
      for (Letter a = 0; a < g.letter_count(); ++a)
        if (g.step(A & B, a) != (g.step(A, a) & g.step(B, a)))
          return std::tuple{A, B, a};
  return std::nullopt;
}

bool check_weakly_left_resolving(const AccommodatingFamily& fam) {
  return !weakly_left_resolving_violation(fam).has_value();
}

}  // namespace lspace
