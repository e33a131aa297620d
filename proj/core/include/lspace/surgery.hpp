#ifndef LSPACE_SURGERY_HPP
#define LSPACE_SURGERY_HPP

#include <optional>

#include "lspace/filters.hpp"
#include "lspace/space.hpp"

namespace lspace {

// An ultrafilter of the algebra at `context`, named by its atom.
struct UltrafilterRef {
  Word context;
  VertexSet atom;

  friend bool operator==(const UltrafilterRef&, const UltrafilterRef&) = default;
};

// Validates that atom is an atom of the algebra at context.
UltrafilterRef make_ultrafilter(const LabelledSpace& space, Word context, VertexSet atom);

// Dual of the relative-range map: cut the tail after `split` letters.
// Lands in the algebra at the shorter word; the empty optional is the
// absent-filter value, possible only when the shorter word is empty.
std::optional<UltrafilterRef> cut_word_tail(const LabelledSpace& space,
                                            const UltrafilterRef& F, std::size_t split);

// Glue alpha in front of F's context; requires the atom inside
// r(alpha + context).
UltrafilterRef glue_word_front(const LabelledSpace& space, const Word& alpha,
                               const UltrafilterRef& F);

// Upward closure in the algebra of the context with alpha cut off the
// front; alpha must be a beginning of the context.
UltrafilterRef cut_word_front(const LabelledSpace& space, const Word& alpha,
                              const UltrafilterRef& F);

// Filter-level gluing; inverse to cut_filter_front on its image.
TightFilter glue_filter_front(const Word& alpha, const TightFilter& xi);

// Filter-level cutting: alpha must begin xi's word.
TightFilter cut_filter_front(const Word& alpha, const TightFilter& xi);

// One-letter cut: the shift on filters with nonempty word.
TightFilter shift(const TightFilter& xi);

}  // namespace lspace

#endif  // LSPACE_SURGERY_HPP
