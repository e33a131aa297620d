#ifndef LSPACE_IO_HPP
#define LSPACE_IO_HPP

#include <optional>
#include <string>

#include "lspace/algebra.hpp"
#include "lspace/family.hpp"
#include "lspace/filters.hpp"
#include "lspace/graph.hpp"
#include "lspace/groupoid.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/space.hpp"

namespace lspace {

// A parsed input document: the graph and, when supplied, a user family.
struct GraphDocument {
  LabelledGraph graph;
  std::optional<std::vector<VertexSet>> family_sets;
};

// JSON with fields `vertices` (names), `edges` (src/dst/label records)
// and optionally `family` (lists of vertex names).  Throws InputError
// with a description of the first problem.
GraphDocument parse_document(const std::string& json_text);
GraphDocument parse_document_file(const std::string& path);

// Text forms.  The empty word prints as `e`; vertex sets print sorted in
// braces; words print as concatenated letters (dot-separated when some
// letter name is longer than one character).
std::string format_set(const LabelledGraph& g, VertexSet A);
std::string format_word(const LabelledGraph& g, const Word& w);
std::string format_element(const LabelledGraph& g, const SemigroupElement& s);
std::string format_filter(const TightFilter& xi);
std::string format_arrow(const GroupoidElement& x);
std::string format_rational(const Rational& q);
// One `coefficient triple` line per term; `0` for the zero element.
std::string format_algebra(const LabelledGraph& g, const AlgebraElement& x);

VertexSet parse_set(const LabelledGraph& g, const std::string& text);
Word parse_word(const LabelledGraph& g, const std::string& text);
SemigroupElement parse_element(const LabelledSpace& space, const std::string& text);
TightFilter parse_filter(const LabelledSpace& space, const std::string& text);
GroupoidElement parse_arrow(const LabelledSpace& space, const std::string& text);
// Product of whitespace-separated generator tokens P{...}, S{a}, S{a}*.
AlgebraElement parse_generator_expr(const LabelledSpace& space, const std::string& text);

}  // namespace lspace

#endif  // LSPACE_IO_HPP
