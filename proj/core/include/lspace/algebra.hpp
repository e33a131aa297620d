#ifndef LSPACE_ALGEBRA_HPP
#define LSPACE_ALGEBRA_HPP

#include <boost/rational.hpp>
#include <map>
#include <string>
#include <vector>

#include "lspace/groupoid.hpp"
#include "lspace/semigroup.hpp"
#include "lspace/space.hpp"

namespace lspace {

using Rational = boost::rational<long long>;

// Finite rational combination of cylinder indicators, indexed by their
// nonzero triples.  Zero coefficients are never stored.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return AlgebraElement(); }
  static AlgebraElement term(const SemigroupElement& t, Rational coeff);

  bool empty() const { return terms_.empty(); }
  const std::map<SemigroupElement, Rational>& terms() const { return terms_; }

  AlgebraElement& add_term(const SemigroupElement& t, Rational coeff);

  AlgebraElement operator+(const AlgebraElement& o) const;
  AlgebraElement operator-(const AlgebraElement& o) const;
  AlgebraElement scaled(Rational c) const;

 private:
  std::map<SemigroupElement, Rational> terms_;
};

// Indicator of the unit-space cylinder of a family member (zero element
// for the empty set).
AlgebraElement proj(const LabelledSpace& space, VertexSet A);
// Indicator of the one-letter cylinder (a, r(a), empty).
AlgebraElement gen(const LabelledSpace& space, Letter a);
// Product gen(a1)...gen(ak) for a word.
AlgebraElement gen_word(const LabelledSpace& space, const Word& alpha);
// S_alpha P_A S_beta^* with empty-word factors omitted.
AlgebraElement monomial(const LabelledSpace& space, const Word& alpha, VertexSet A,
                        const Word& beta);

// Convolution, extended bilinearly from the semigroup product on
// indicator triples.
AlgebraElement multiply(const LabelledSpace& space, const AlgebraElement& x,
                        const AlgebraElement& y);

// Involution: triples starred, rational coefficients fixed.
AlgebraElement star(const AlgebraElement& x);

// One refinement step of a cylinder: the points whose source filter ends
// right here (one per sink-supporting atom below the set), and the
// one-letter-deeper cylinders.  Together they partition the cylinder.
struct Expansion {
  std::vector<SemigroupElement> leaves;
  std::vector<SemigroupElement> children;
};
Expansion expand_one_step(const LabelledSpace& space, const SemigroupElement& t);

// The arrow singled out by a leaf triple (both sides are the finite-type
// filter at the leaf's atom).
GroupoidElement leaf_arrow(const LabelledSpace& space, const SemigroupElement& leaf);

// Per-degree normal form: leaf singletons shed while expanding, plus
// atomic cylinders at the common word length.  An element is zero as a
// function iff every coefficient vanishes.
struct NormalForm {
  std::map<int, std::map<SemigroupElement, Rational>> cylinders;
  std::map<int, std::map<SemigroupElement, Rational>> leaves;
};
NormalForm normal_form(const LabelledSpace& space, const AlgebraElement& x);

bool is_zero_element(const LabelledSpace& space, const AlgebraElement& x);
bool equals(const LabelledSpace& space, const AlgebraElement& x, const AlgebraElement& y);

// Value of the element at an arrow.
Rational evaluate(const LabelledSpace& space, const AlgebraElement& x,
                  const GroupoidElement& pt);

// Convolution sum evaluated at an arrow straight from the definition;
// independent oracle for multiply().
Rational convolve_pointwise(const LabelledSpace& space, const AlgebraElement& x,
                            const AlgebraElement& y, const GroupoidElement& pt);

struct RelationReport {
  bool projections_ok = false;     // meets, joins and the empty set
  bool commutation_ok = false;     // projections past generators
  bool isometry_ok = false;        // adjoint products of generators
  bool reconstruction_ok = false;  // sum over outgoing letters
  std::string detail;              // first failing instance, if any
  bool all_ok() const {
    return projections_ok && commutation_ok && isometry_ok && reconstruction_ok;
  }
};

RelationReport check_relations(const LabelledSpace& space);

}  // namespace lspace

#endif  // LSPACE_ALGEBRA_HPP
