#include "lspace/surgery.hpp"

#include "lspace/errors.hpp"

namespace lspace {

UltrafilterRef make_ultrafilter(const LabelledSpace& space, Word context, VertexSet atom) {
  RestrictedAlgebra alg = space.algebra_at(context);
  if (atom.empty() || !alg.contains(atom) || !space.family().is_atom(atom))
    throw InputError("expected an atom of the algebra at the context word");
  return UltrafilterRef{std::move(context), atom};
}

std::optional<UltrafilterRef> cut_word_tail(const LabelledSpace& space,
                                            const UltrafilterRef& F, std::size_t split) {
  if (split > F.context.size()) throw InputError("split beyond the context word");
  Word head = F.context.prefix(split);
  Word tail = F.context.suffix_from(split);
  if (tail.is_empty()) return F;
  // Minimum of {A in the head algebra | r(A, tail) contains the atom},
  // one letter at a time.
  VertexSet target = F.atom;
  for (std::size_t i = tail.size(); i-- > 0;) {
    Word upto = head + tail.prefix(i);
    VertexSet top = upto.is_empty() ? space.graph().full_set() : space.range(upto);
    auto m = space.backward_min(top, tail.at(i), target);
    if (!m) {
      if (i == 0 && split == 0) return std::nullopt;
      throw DomainError("tail cut has no minimum above the base level");  // unreachable
    }
    target = *m;
  }
  return UltrafilterRef{std::move(head), target};
}

UltrafilterRef glue_word_front(const LabelledSpace& space, const Word& alpha,
                               const UltrafilterRef& F) {
  Word glued = alpha + F.context;
  if (!F.atom.subset_of(space.range(glued)))
    throw DomainError("ultrafilter does not contain the range of the glued word");
  return UltrafilterRef{std::move(glued), F.atom};
}

UltrafilterRef cut_word_front(const LabelledSpace& space, const Word& alpha,
                              const UltrafilterRef& F) {
  if (!alpha.is_prefix_of(F.context))
    throw InputError("word to cut is not a beginning of the context");
  (void)space;
  return UltrafilterRef{F.context.suffix_from(alpha.size()), F.atom};
}

TightFilter glue_filter_front(const Word& alpha, const TightFilter& xi) {
  return xi.glue_front(alpha);
}

TightFilter cut_filter_front(const Word& alpha, const TightFilter& xi) {
  if (!xi.has_word_prefix(alpha))
    throw DomainError("word to cut is not a beginning of the filter's word");
  return xi.cut_front(alpha.size());
}

TightFilter shift(const TightFilter& xi) {
  if (xi.is_finite() && xi.finite_length() == 0)
    throw DomainError("the shift needs a nonempty word");
  return xi.cut_front(1);
}

}  // namespace lspace
