#include "lspace/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lspace/errors.hpp"

namespace lspace {

GroupoidElement::GroupoidElement(TightFilter r, int d, TightFilter s)
    : range_side_(std::move(r)), degree_(d), source_side_(std::move(s)) {}

GroupoidElement GroupoidElement::arrow(TightFilter range_side, int degree,
                                       TightFilter source_side) {
  if (!find_witness(range_side, degree, source_side))
    throw DomainError("the filters do not share a tail at this degree");
  return GroupoidElement(std::move(range_side), degree, std::move(source_side));
}

Witness GroupoidElement::witness() const {
  return *find_witness(range_side_, degree_, source_side_);
}

bool operator==(const GroupoidElement& a, const GroupoidElement& b) {
  return a.degree_ == b.degree_ && a.range_side_ == b.range_side_ &&
         a.source_side_ == b.source_side_;
}

bool operator<(const GroupoidElement& a, const GroupoidElement& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  if (a.range_side_ < b.range_side_) return true;
  if (b.range_side_ < a.range_side_) return false;
  return a.source_side_ < b.source_side_;
}

std::optional<Witness> find_witness(const TightFilter& eta, int m, const TightFilter& xi) {
  if (eta.is_finite() != xi.is_finite()) return std::nullopt;
  if (eta.is_finite()) {
    int le = static_cast<int>(eta.finite_length());
    int lx = static_cast<int>(xi.finite_length());
    if (le - lx != m) return std::nullopt;
    for (int tail = std::min(le, lx); tail >= 0; --tail) {
      std::size_t a = static_cast<std::size_t>(le - tail);
      std::size_t b = static_cast<std::size_t>(lx - tail);
      if (eta.cut_front(a) == xi.cut_front(b))
        return Witness{eta.word_prefix(a), xi.word_prefix(b)};
    }
    return std::nullopt;
  }
  int pe = static_cast<int>(eta.prefix().size());
  int px = static_cast<int>(xi.prefix().size());
  int L = static_cast<int>(std::lcm(eta.cycle().size(), xi.cycle().size()));
  int b0 = std::max(0, -m);
  int bound = std::max({b0, px, pe - m}) + L;
  for (int b = b0; b <= bound; ++b) {
    std::size_t a = static_cast<std::size_t>(m + b);
    if (eta.cut_front(a) == xi.cut_front(static_cast<std::size_t>(b)))
      return Witness{eta.word_prefix(a), xi.word_prefix(static_cast<std::size_t>(b))};
  }
  return std::nullopt;
}

GroupoidElement compose(const GroupoidElement& x, const GroupoidElement& y) {
  if (!(x.source_side() == y.range_side()))
    throw DomainError("arrows are not composable");
  return GroupoidElement::arrow(x.range_side(), x.degree() + y.degree(), y.source_side());
}

GroupoidElement inverse(const GroupoidElement& x) {
  return GroupoidElement::arrow(x.source_side(), -x.degree(), x.range_side());
}

std::vector<GroupoidElement> enumerate_groupoid(const LabelledSpace& space,
                                                const std::vector<TightFilter>& filters,
                                                std::size_t max_witness_len) {
  (void)space;
  std::set<GroupoidElement> out;
  for (const TightFilter& eta : filters) {
    for (const TightFilter& xi : filters) {
      for (std::size_t a = 0; a <= max_witness_len; ++a) {
        if (eta.is_finite() && a > eta.finite_length()) break;
        TightFilter ecut = eta.cut_front(a);
        for (std::size_t b = 0; b <= max_witness_len; ++b) {
          if (xi.is_finite() && b > xi.finite_length()) break;
          if (ecut == xi.cut_front(b))
            out.insert(GroupoidElement::arrow(eta, static_cast<int>(a) - static_cast<int>(b), xi));
        }
      }
    }
  }
  return std::vector<GroupoidElement>(out.begin(), out.end());
}

TightFilter act(const LabelledSpace& space, const SemigroupElement& t, const TightFilter& xi) {
  if (t.is_zero()) throw DomainError("zero does not act");
  SemigroupElement source = SemigroupElement::triple(space, t.right(), t.mid(), t.right());
  if (!xi.contains(source))
    throw DomainError("filter does not contain the source idempotent");
  return xi.cut_front(t.right().size()).glue_front(t.left());
}

Germ make_germ(const LabelledSpace& space, SemigroupElement t, TightFilter xi) {
  if (t.is_zero()) throw InputError("germs are formed over nonzero elements");
  SemigroupElement source = SemigroupElement::triple(space, t.right(), t.mid(), t.right());
  if (!xi.contains(source))
    throw InputError("filter does not contain the source idempotent of the element");
  return Germ{std::move(t), std::move(xi)};
}

bool germ_equivalent(const LabelledSpace& space, const Germ& a, const Germ& b) {
  (void)space;
  if (!(a.filter == b.filter)) return false;
  const Word& nu = a.elem.right();
  const Word& gamma = b.elem.right();
  if (nu.size() <= gamma.size()) {
    if (!nu.is_prefix_of(gamma)) return false;
    Word ext = gamma.suffix_from(nu.size());
    return b.elem.left() == a.elem.left() + ext;
  }
  if (!gamma.is_prefix_of(nu)) return false;
  Word ext = nu.suffix_from(gamma.size());
  return a.elem.left() == b.elem.left() + ext;
}

GroupoidElement arrow_of_germ(const LabelledSpace& space, const Germ& g) {
  TightFilter eta = act(space, g.elem, g.filter);
  int degree = static_cast<int>(g.elem.left().size()) - static_cast<int>(g.elem.right().size());
  return GroupoidElement::arrow(std::move(eta), degree, g.filter);
}

Germ germ_of_arrow(const LabelledSpace& space, const GroupoidElement& x) {
  Witness w = x.witness();
  Word beta = w.range_word;
  Word gamma = w.source_word;
  if (gamma.is_empty()) {
    bool word_empty = x.source_side().is_finite() && x.source_side().finite_length() == 0;
    if (word_empty) {
      VertexSet A = x.source_side().atom_at(0);
      return make_germ(space, SemigroupElement::triple(space, beta, A, Word()),
                       x.source_side());
    }
    // Extend the witness by one letter so the source word is nonempty.
    Letter a = x.source_side().letter_at(0);
    beta = beta + a;
    gamma = gamma + a;
  }
  VertexSet mid = space.range(gamma);
  if (!beta.is_empty()) mid = mid & space.range(beta);
  return make_germ(space, SemigroupElement::triple(space, beta, mid, gamma), x.source_side());
}

Cylinder make_cylinder(const LabelledSpace& space, SemigroupElement base,
                       std::vector<SemigroupElement> negatives) {
  (void)space;
  if (base.is_zero()) throw InputError("cylinders are named by nonzero triples");
  for (const SemigroupElement& e : negatives)
    if (e.is_zero() || !e.is_idempotent())
      throw InputError("cylinder negatives must be nonzero idempotents");
  return Cylinder{std::move(base), std::move(negatives)};
}

bool cylinder_member(const LabelledSpace& space, const Cylinder& Z, const GroupoidElement& x) {
  const Word& mu = Z.base.left();
  const Word& nu = Z.base.right();
  if (x.degree() != static_cast<int>(mu.size()) - static_cast<int>(nu.size())) return false;
  if (!x.range_side().has_word_prefix(mu)) return false;
  if (!x.source_side().has_word_prefix(nu)) return false;
  if (!(x.range_side().cut_front(mu.size()) == x.source_side().cut_front(nu.size())))
    return false;
  SemigroupElement e = SemigroupElement::triple(space, nu, Z.base.mid(), nu);
  if (!x.source_side().contains(e)) return false;
  for (const SemigroupElement& neg : Z.negatives)
    if (x.source_side().contains(neg)) return false;
  return true;
}

std::optional<Cylinder> intersect_cylinders(const LabelledSpace& space, const Cylinder& a,
                                            const Cylinder& b) {
  if (!a.negatives.empty() || !b.negatives.empty())
    throw InputError("intersection is defined for negatives-free cylinders");
  const Word &al = a.base.left(), &ar = a.base.right();
  const Word &bl = b.base.left(), &br = b.base.right();
  if (al.is_prefix_of(bl) && ar.is_prefix_of(br)) {
    Word delta = bl.suffix_from(al.size());
    if (delta == br.suffix_from(ar.size())) {
      VertexSet mid = relative_range(space.graph(), a.base.mid(), delta) & b.base.mid();
      if (mid.empty()) return std::nullopt;
      return make_cylinder(space, SemigroupElement::triple(space, bl, mid, br));
    }
  }
  if (bl.is_prefix_of(al) && br.is_prefix_of(ar)) {
    Word delta = al.suffix_from(bl.size());
    if (delta == ar.suffix_from(br.size())) {
      VertexSet mid = a.base.mid() & relative_range(space.graph(), b.base.mid(), delta);
      if (mid.empty()) return std::nullopt;
      return make_cylinder(space, SemigroupElement::triple(space, al, mid, ar));
    }
  }
  return std::nullopt;
}

std::vector<Cylinder> disjointify(const LabelledSpace& space, std::vector<Cylinder> zs) {
  std::vector<Cylinder> out;
  for (Cylinder& cur : zs) {
    if (!cur.negatives.empty())
      throw InputError("disjointification is defined for negatives-free cylinders");
    Word cl = cur.base.left(), cr = cur.base.right();
    VertexSet cmid = cur.base.mid();
    bool alive = true;
    for (std::size_t i = 0; i < out.size();) {
      const Word &dl = out[i].base.left(), &dr = out[i].base.right();
      VertexSet dmid = out[i].base.mid();
      bool d_extends_c = cl.is_prefix_of(dl) && cr.is_prefix_of(dr) &&
                         dl.suffix_from(cl.size()) == dr.suffix_from(cr.size());
      bool c_extends_d = dl.is_prefix_of(cl) && dr.is_prefix_of(cr) &&
                         cl.suffix_from(dl.size()) == cr.suffix_from(dr.size());
      if (d_extends_c) {
        Word delta = dl.suffix_from(cl.size());
        VertexSet shrunk = dmid.minus(relative_range(space.graph(), cmid, delta));
        if (shrunk.empty()) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
          continue;
        }
        out[i] = make_cylinder(space, SemigroupElement::triple(space, dl, shrunk, dr));
      } else if (c_extends_d) {
        Word delta = cl.suffix_from(dl.size());
        cmid = cmid.minus(relative_range(space.graph(), dmid, delta));
        if (cmid.empty()) {
          alive = false;
          break;
        }
      }
      ++i;
    }
    if (alive) out.push_back(make_cylinder(space, SemigroupElement::triple(space, cl, cmid, cr)));
  }
  return out;
}

}  // namespace lspace
