#include "lspace/algebra.hpp"

#include <algorithm>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

int degree_of(const SemigroupElement& t) {
  return static_cast<int>(t.left().size()) - static_cast<int>(t.right().size());
}

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

AlgebraElement AlgebraElement::term(const SemigroupElement& t, Rational coeff) {
  AlgebraElement out;
  out.add_term(t, coeff);
  return out;
}

AlgebraElement& AlgebraElement::add_term(const SemigroupElement& t, Rational coeff) {
  if (t.is_zero() || coeff.numerator() == 0) return *this;
  auto [it, inserted] = terms_.try_emplace(t, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.numerator() == 0) terms_.erase(it);
  }
  return *this;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [t, c] : o.terms_) out.add_term(t, c);
  return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
  AlgebraElement out = *this;
  for (const auto& [t, c] : o.terms_) out.add_term(t, -c);
  return out;
}

AlgebraElement AlgebraElement::scaled(Rational c) const {
  AlgebraElement out;
  for (const auto& [t, coeff] : terms_) out.add_term(t, coeff * c);
  return out;
}

AlgebraElement proj(const LabelledSpace& space, VertexSet A) {
  if (A.empty()) return AlgebraElement::zero();
  return AlgebraElement::term(SemigroupElement::triple(space, Word(), A, Word()), 1);
}

AlgebraElement gen(const LabelledSpace& space, Letter a) {
  Word w{a};
  VertexSet r = space.range(w);
  return AlgebraElement::term(SemigroupElement::triple(space, w, r, Word()), 1);
}

AlgebraElement gen_word(const LabelledSpace& space, const Word& alpha) {
  if (alpha.is_empty()) throw InputError("the empty word names no generator");
  AlgebraElement out = gen(space, alpha.at(0));
  for (std::size_t i = 1; i < alpha.size(); ++i)
    out = multiply(space, out, gen(space, alpha.at(i)));
  return out;
}

AlgebraElement monomial(const LabelledSpace& space, const Word& alpha, VertexSet A,
                        const Word& beta) {
  AlgebraElement mid = proj(space, A);
  AlgebraElement out = alpha.is_empty() ? mid : multiply(space, gen_word(space, alpha), mid);
  if (!beta.is_empty()) out = multiply(space, out, star(gen_word(space, beta)));
  return out;
}

AlgebraElement multiply(const LabelledSpace& space, const AlgebraElement& x,
                        const AlgebraElement& y) {
  AlgebraElement out;
  for (const auto& [s, cs] : x.terms()) {
    for (const auto& [t, ct] : y.terms()) {
      SemigroupElement st = multiply(space, s, t);
      if (!st.is_zero()) out.add_term(st, cs * ct);
    }
  }
  return out;
}

AlgebraElement star(const AlgebraElement& x) {
  AlgebraElement out;
  for (const auto& [t, c] : x.terms()) out.add_term(star(t), c);
  return out;
}

Expansion expand_one_step(const LabelledSpace& space, const SemigroupElement& t) {
  if (t.is_zero()) throw InputError("cannot expand the zero element");
  Expansion out;
  RestrictedAlgebra alg = space.algebra_at(t.right());
  for (VertexSet C : alg.atoms_below(t.mid()))
    if (finite_type_tight_at(space, C))
      out.leaves.push_back(SemigroupElement::triple(space, t.left(), C, t.right()));
  for (Letter a : letters_from(space.graph(), t.mid())) {
    VertexSet r = space.step(t.mid(), a);
    out.children.push_back(
        SemigroupElement::triple(space, t.left() + a, r, t.right() + a));
  }
  return out;
}

GroupoidElement leaf_arrow(const LabelledSpace& space, const SemigroupElement& leaf) {
  TightFilter eta = TightFilter::finite(space, leaf.left(), leaf.mid());
  TightFilter xi = TightFilter::finite(space, leaf.right(), leaf.mid());
  return GroupoidElement::arrow(std::move(eta), degree_of(leaf), std::move(xi));
}

NormalForm normal_form(const LabelledSpace& space, const AlgebraElement& x) {
  NormalForm out;
  std::map<int, std::map<SemigroupElement, Rational>> groups;
  for (const auto& [t, c] : x.terms()) groups[degree_of(t)][t] += c;

  for (auto& [m, terms] : groups) {
    std::size_t target = 0;
    for (const auto& [t, c] : terms) target = std::max(target, t.right().size());

    std::map<SemigroupElement, Rational>& leaves = out.leaves[m];
    std::map<SemigroupElement, Rational> work = std::move(terms);
    while (true) {
      bool all_at_target = true;
      for (const auto& [t, c] : work)
        if (c.numerator() != 0 && t.right().size() < target) all_at_target = false;
      if (all_at_target) break;
      std::map<SemigroupElement, Rational> next;
      for (const auto& [t, c] : work) {
        if (c.numerator() == 0) continue;
        if (t.right().size() == target) {
          next[t] += c;
          continue;
        }
        Expansion ex = expand_one_step(space, t);
        for (const SemigroupElement& leaf : ex.leaves) leaves[leaf] += c;
        for (const SemigroupElement& child : ex.children) next[child] += c;
      }
      work = std::move(next);
    }

    std::map<SemigroupElement, Rational>& atomized = out.cylinders[m];
    for (const auto& [t, c] : work) {
      if (c.numerator() == 0) continue;
      for (VertexSet C : space.algebra_at(t.right()).atoms_below(t.mid()))
        atomized[SemigroupElement::triple(space, t.left(), C, t.right())] += c;
    }
  }
  return out;
}

bool is_zero_element(const LabelledSpace& space, const AlgebraElement& x) {
  NormalForm nf = normal_form(space, x);
  for (const auto& [m, terms] : nf.cylinders)
    for (const auto& [t, c] : terms)
      if (c.numerator() != 0) return false;
  for (const auto& [m, terms] : nf.leaves)
    for (const auto& [t, c] : terms)
      if (c.numerator() != 0) return false;
  return true;
}

bool equals(const LabelledSpace& space, const AlgebraElement& x, const AlgebraElement& y) {
  return is_zero_element(space, x - y);
}

namespace {

// Membership of a raw (filter, degree, filter) triple in a cylinder;
// false whenever the triple is not an arrow at all.
bool member_raw(const LabelledSpace& space, const Cylinder& Z, const TightFilter& eta,
                int degree, const TightFilter& xi) {
  const Word& mu = Z.base.left();
  const Word& nu = Z.base.right();
  if (degree != static_cast<int>(mu.size()) - static_cast<int>(nu.size())) return false;
  if (!eta.has_word_prefix(mu) || !xi.has_word_prefix(nu)) return false;
  if (!(eta.cut_front(mu.size()) == xi.cut_front(nu.size()))) return false;
  SemigroupElement e = SemigroupElement::triple(space, nu, Z.base.mid(), nu);
  if (!xi.contains(e)) return false;
  for (const SemigroupElement& neg : Z.negatives)
    if (xi.contains(neg)) return false;
  return true;
}

Rational evaluate_raw(const LabelledSpace& space, const AlgebraElement& x,
                      const TightFilter& eta, int degree, const TightFilter& xi) {
  Rational total = 0;
  for (const auto& [t, c] : x.terms())
    if (member_raw(space, Cylinder{t, {}}, eta, degree, xi)) total += c;
  return total;
}

}  // namespace

Rational evaluate(const LabelledSpace& space, const AlgebraElement& x,
                  const GroupoidElement& pt) {
  return evaluate_raw(space, x, pt.range_side(), pt.degree(), pt.source_side());
}

Rational convolve_pointwise(const LabelledSpace& space, const AlgebraElement& x,
                            const AlgebraElement& y, const GroupoidElement& pt) {
  Rational total = 0;
  for (const auto& [t, c] : x.terms()) {
    const Word& a = t.left();
    const Word& b = t.right();
    if (!pt.range_side().has_word_prefix(a)) continue;
    VertexSet atom = pt.range_side().atom_at(a.size());
    if (atom.empty() || !atom.subset_of(t.mid())) continue;
    TightFilter zeta = pt.range_side().cut_front(a.size()).glue_front(b);
    int m = degree_of(t);
    total += c * evaluate_raw(space, y, zeta, pt.degree() - m, pt.source_side());
  }
  return total;
}

RelationReport check_relations(const LabelledSpace& space) {
  RelationReport rep;
  const LabelledGraph& g = space.graph();
  const auto& sets = space.family().sets();

  rep.projections_ok = true;
  if (!is_zero_element(space, proj(space, VertexSet()))) {
    rep.projections_ok = false;
    rep.detail = "projection of the empty set is nonzero";
  }
  for (VertexSet A : sets) {
    if (!rep.projections_ok) break;
    for (VertexSet B : sets) {
      bool meet = equals(space, proj(space, A & B),
                         multiply(space, proj(space, A), proj(space, B)));
      bool join = equals(space, proj(space, A | B),
                         proj(space, A) + proj(space, B) - proj(space, A & B));
      if (!meet || !join) {
        rep.projections_ok = false;
        rep.detail = "projection relation fails at A=" + set_to_string(g, A) +
                     ", B=" + set_to_string(g, B);
        break;
      }
    }
  }

  rep.commutation_ok = true;
  for (VertexSet A : sets) {
    if (!rep.commutation_ok) break;
    if (A.empty()) continue;
    for (Letter a = 0; a < g.letter_count(); ++a) {
      AlgebraElement lhs = multiply(space, proj(space, A), gen(space, a));
      AlgebraElement rhs = multiply(space, gen(space, a), proj(space, g.step(A, a)));
      if (!equals(space, lhs, rhs)) {
        rep.commutation_ok = false;
        rep.detail = "commutation fails at A=" + set_to_string(g, A) + ", letter " +
                     g.letter_names()[a];
        break;
      }
    }
  }

  rep.isometry_ok = true;
  for (Letter a = 0; a < g.letter_count() && rep.isometry_ok; ++a) {
    for (Letter b = 0; b < g.letter_count(); ++b) {
      AlgebraElement prod = multiply(space, star(gen(space, b)), gen(space, a));
      bool ok = (a == b)
                    ? equals(space, prod, proj(space, space.range(Word{a})))
                    : is_zero_element(space, prod);
      if (!ok) {
        rep.isometry_ok = false;
        rep.detail = std::string("adjoint product fails at letters ") +
                     g.letter_names()[a] + ", " + g.letter_names()[b];
        break;
      }
    }
  }

  rep.reconstruction_ok = true;
  for (VertexSet A : sets) {
    if (A.empty()) continue;
    std::vector<Letter> out = letters_from(g, A);
    bool applies = !out.empty() && !has_infinitely_many_letters_from(g, A);
    if (applies) {
      // No family member inside A n sinks.
      VertexSet target = A & g.sinks();
      for (VertexSet B : sets)
        if (!B.empty() && B.subset_of(target)) {
          applies = false;
          break;
        }
    }
    if (!applies) continue;
    AlgebraElement sum;
    for (Letter a : out)
      sum = sum + multiply(space,
                           multiply(space, gen(space, a), proj(space, g.step(A, a))),
                           star(gen(space, a)));
    if (!equals(space, proj(space, A), sum)) {
      rep.reconstruction_ok = false;
      rep.detail = "reconstruction fails at A=" + set_to_string(g, A);
      break;
    }
  }

  return rep;
}

}  // namespace lspace
