#include "lspace/filters.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "lspace/errors.hpp"

namespace lspace {

CompleteFamily complete_from_atom(const LabelledSpace& space, const Word& word, VertexSet X) {
  if (X.empty() || !space.algebra_at(word).contains(X))
    throw InputError("expected a nonempty member of the algebra at the word");
  CompleteFamily out;
  out.word = word;
  out.minima.assign(word.size() + 1, std::nullopt);
  out.minima[word.size()] = X;
  for (std::size_t i = word.size(); i-- > 0;) {
    VertexSet top = (i == 0) ? space.graph().full_set() : space.range(word.prefix(i));
    auto m = space.backward_min(top, word.at(i), *out.minima[i + 1]);
    if (i > 0 && !m)
      throw DomainError("level minimum vanished above the base level");  // unreachable
    out.minima[i] = m;
    if (!m) break;
  }
  return out;
}

TightFilter::TightFilter(const LabelledSpace& space, bool finite, Word prefix, Word cycle,
                         std::vector<VertexSet> atoms)
    : space_(&space),
      finite_(finite),
      prefix_(std::move(prefix)),
      cycle_(std::move(cycle)),
      atoms_(std::move(atoms)) {}

TightFilter TightFilter::finite(const LabelledSpace& space, Word word, VertexSet top_atom) {
  RestrictedAlgebra alg = space.algebra_at(word);
  if (top_atom.empty() || !alg.contains(top_atom) || !space.family().is_atom(top_atom))
    throw InputError("top level must be an atom of the algebra at the word");
  if (!finite_type_tight_at(space, top_atom))
    throw InputError("atom fails the finite-type tightness condition");
  CompleteFamily chain = complete_from_atom(space, word, top_atom);
  std::vector<VertexSet> atoms(word.size() + 1);
  for (std::size_t n = 0; n <= word.size(); ++n)
    atoms[n] = chain.minima[n].value_or(VertexSet());
  return TightFilter(space, true, std::move(word), Word(), std::move(atoms));
}

TightFilter TightFilter::lasso(const LabelledSpace& space, Word prefix, Word cycle,
                               std::vector<VertexSet> atoms) {
  if (cycle.is_empty()) throw InputError("lasso cycle must be nonempty");
  if (atoms.size() != prefix.size() + cycle.size())
    throw InputError("lasso needs one atom per stored level");
  TightFilter out(space, false, std::move(prefix), std::move(cycle), std::move(atoms));
  out.canonicalize_lasso();
  out.validate();
  return out;
}

const Word& TightFilter::word() const {
  if (!finite_) throw InputError("infinite-type filter has no finite word");
  return prefix_;
}

std::size_t TightFilter::finite_length() const { return word().size(); }

const Word& TightFilter::prefix() const {
  if (finite_) throw InputError("finite-type filter has no lasso");
  return prefix_;
}

const Word& TightFilter::cycle() const {
  if (finite_) throw InputError("finite-type filter has no lasso");
  return cycle_;
}

Letter TightFilter::letter_at(std::size_t i) const {
  if (finite_) {
    if (i >= prefix_.size()) throw InputError("letter index beyond the word");
    return prefix_.at(i);
  }
  if (i < prefix_.size()) return prefix_.at(i);
  return cycle_.at((i - prefix_.size()) % cycle_.size());
}

VertexSet TightFilter::atom_at(std::size_t n) const {
  if (finite_) {
    if (n >= atoms_.size()) throw InputError("level beyond the word");
    return atoms_[n];
  }
  if (n < atoms_.size()) return atoms_[n];
  std::size_t p = prefix_.size();
  return atoms_[p + (n - p) % cycle_.size()];
}

bool TightFilter::has_word_prefix(const Word& w) const {
  if (finite_ && w.size() > prefix_.size()) return false;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w.at(i) != letter_at(i)) return false;
  return true;
}

Word TightFilter::word_prefix(std::size_t n) const {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter_at(i));
  return out;
}

TightFilter TightFilter::cut_front(std::size_t k) const {
  if (k == 0) return *this;
  if (finite_) {
    if (k > prefix_.size()) throw DomainError("cut beyond the filter's word");
    Word rest = prefix_.suffix_from(k);
    VertexSet top = atoms_.back();
    return TightFilter::finite(*space_, std::move(rest), top);
  }
  std::size_t p = prefix_.size();
  std::size_t c = cycle_.size();
  if (k <= p) {
    Word rest = prefix_.suffix_from(k);
    std::vector<VertexSet> atoms(atoms_.begin() + k, atoms_.end());
    return TightFilter::lasso(*space_, std::move(rest), cycle_, std::move(atoms));
  }
  Word cyc;
  std::vector<VertexSet> atoms;
  for (std::size_t i = 0; i < c; ++i) {
    cyc.push_back(letter_at(k + i));
    atoms.push_back(atom_at(k + i));
  }
  return TightFilter::lasso(*space_, Word(), std::move(cyc), std::move(atoms));
}

TightFilter TightFilter::glue_front(const Word& alpha) const {
  if (alpha.is_empty()) return *this;
  if (!level_defined(0)) throw DomainError("cannot glue onto an absent base level");
  if (!atom_at(0).subset_of(space_->range(alpha)))
    throw DomainError("base atom is not inside the range of the glued word");
  if (finite_) return TightFilter::finite(*space_, alpha + prefix_, atoms_.back());

  std::vector<VertexSet> atoms(alpha.size() + atoms_.size());
  std::copy(atoms_.begin(), atoms_.end(), atoms.begin() + alpha.size());
  for (std::size_t i = alpha.size(); i-- > 0;) {
    VertexSet top = (i == 0) ? space_->graph().full_set() : space_->range(alpha.prefix(i));
    auto m = space_->backward_min(top, alpha.at(i), atoms[i + 1]);
    if (i > 0 && !m) throw DomainError("level minimum vanished while gluing");  // unreachable
    atoms[i] = m.value_or(VertexSet());
    if (!m) break;
  }
  return TightFilter::lasso(*space_, alpha + prefix_, cycle_, std::move(atoms));
}

bool TightFilter::contains(const SemigroupElement& e) const {
  if (e.is_zero() || !e.is_idempotent())
    throw InputError("filter membership is asked of nonzero idempotents");
  if (!has_word_prefix(e.left())) return false;
  VertexSet atom = atom_at(e.left().size());
  if (atom.empty()) return false;
  return atom.subset_of(e.mid());
}

void TightFilter::canonicalize_lasso() {
  std::size_t p0 = prefix_.size();
  std::size_t c0 = cycle_.size();
  // Materialized letters (steps 0..p0+2c0-1) and atoms (levels 0..p0+2c0).
  std::size_t span = p0 + 2 * c0;
  std::vector<Letter> L(span);
  std::vector<VertexSet> X(span + 1);
  for (std::size_t i = 0; i < span; ++i) L[i] = letter_at(i);
  for (std::size_t n = 0; n <= span; ++n) X[n] = atom_at(n);

  // Shortest joint period of the tail (letters and atoms together).
  std::size_t c = c0;
  for (std::size_t d = 1; d < c0; ++d) {
    if (c0 % d != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; i < c0 && ok; ++i) {
      ok = L[p0 + i] == L[p0 + (i + d) % c0] && X[p0 + i] == X[p0 + (i + d) % c0];
    }
    if (ok) {
      c = d;
      break;
    }
  }
  // Shortest prefix given the period.
  std::size_t p = p0;
  while (p > 0 && L[p - 1] == L[p - 1 + c] && X[p - 1] == X[p - 1 + c]) --p;

  Word pre, cyc;
  for (std::size_t i = 0; i < p; ++i) pre.push_back(L[i]);
  for (std::size_t i = 0; i < c; ++i) cyc.push_back(L[p + i]);
  std::vector<VertexSet> atoms(X.begin(), X.begin() + p + c);
  prefix_ = std::move(pre);
  cycle_ = std::move(cyc);
  atoms_ = std::move(atoms);
}

void TightFilter::validate() const {
  const AccommodatingFamily& fam = space_->family();
  std::size_t p = prefix_.size();
  std::size_t c = cycle_.size();
  for (std::size_t n = 1; n < atoms_.size(); ++n)
    if (atoms_[n].empty()) throw InputError("levels above 0 cannot be absent");
  if (p == 0 && atoms_[0].empty())
    throw InputError("a purely periodic filter cannot have an absent level");

  VertexSet R = space_->graph().full_set();
  std::set<std::pair<std::size_t, std::uint64_t>> seen;
  for (std::size_t k = 0;; ++k) {
    if (k >= p && !seen.insert({(k - p) % c, R.bits()}).second) break;
    Letter a = letter_at(k);
    VertexSet Rnext = space_->step(R, a);
    VertexSet x = atom_at(k);
    VertexSet y = atom_at(k + 1);
    if (y.empty() || !fam.is_atom(y) || !y.subset_of(Rnext))
      throw InputError("level atom is not an ultrafilter of its algebra");
    if (k == 0) {
      if (x.empty()) {
        if (space_->backward_min(space_->graph().full_set(), a, y))
          throw InputError("level 0 marked absent but a minimum exists");
      } else {
        if (!fam.is_atom(x) || !x.subset_of(R))
          throw InputError("level 0 is not an ultrafilter of the family");
        if (!y.subset_of(space_->step(x, a)))
          throw InputError("levels are not linked by relative ranges");
      }
    } else {
      if (!y.subset_of(space_->step(x, a)))
        throw InputError("levels are not linked by relative ranges");
    }
    R = Rnext;
  }
}

bool operator==(const TightFilter& a, const TightFilter& b) {
  return a.finite_ == b.finite_ && a.prefix_ == b.prefix_ && a.cycle_ == b.cycle_ &&
         a.atoms_ == b.atoms_;
}

bool operator<(const TightFilter& a, const TightFilter& b) {
  auto key = [](const TightFilter& f) {
    return std::tie(f.finite_, f.prefix_, f.cycle_, f.atoms_);
  };
  // Finite type (finite_ == true) sorts first.
  if (a.finite_ != b.finite_) return a.finite_ > b.finite_;
  return key(a) < key(b);
}

bool finite_type_tight_at(const LabelledSpace& space, VertexSet atom) {
  if (has_infinitely_many_letters_from(space.graph(), atom)) return true;
  VertexSet target = atom & space.graph().sinks();
  for (VertexSet B : space.family().sets())
    if (!B.empty() && B.subset_of(target)) return true;
  return false;
}

std::vector<TightFilter> enumerate_tight(const LabelledSpace& space, std::size_t depth) {
  std::set<TightFilter> out;
  for (const Word& w : labelled_paths_up_to(space.graph(), depth)) {
    for (VertexSet C : space.algebra_at(w).atoms())
      if (finite_type_tight_at(space, C)) out.insert(TightFilter::finite(space, w, C));
  }

  // Infinite type: eventually periodic atom chains over eventually
  // periodic words, found by forward search over the stored block.
  std::size_t nletters = space.graph().letter_count();
  if (nletters == 0) return std::vector<TightFilter>(out.begin(), out.end());
  for (std::size_t p = 0; p + 1 <= depth; ++p) {
    for (std::size_t c = 1; p + c <= depth; ++c) {
      std::vector<Letter> letters(p + c, 0);
      // Odometer over all letter choices for prefix and cycle.
      while (true) {
        Word pre, cyc;
        for (std::size_t i = 0; i < p; ++i) pre.push_back(letters[i]);
        for (std::size_t i = 0; i < c; ++i) cyc.push_back(letters[p + i]);

        // Contexts along prefix then the stored cycle block.
        std::vector<VertexSet> R(p + c + 1);
        R[0] = space.graph().full_set();
        bool realizable = true;
        for (std::size_t k = 0; k < p + c; ++k) {
          R[k + 1] = space.step(R[k], letters[k]);
          if (R[k + 1].empty()) {
            realizable = false;
            break;
          }
        }
        if (realizable) {
          // Choose atoms at levels p..p+c-1 forward, derive the rest.
          std::vector<VertexSet> block(c);
          auto emit = [&](auto&& self, std::size_t idx) -> void {
            if (idx == c) {
              std::vector<VertexSet> atoms(p + c);
              for (std::size_t i = 0; i < c; ++i) atoms[p + i] = block[i];
              bool ok = true;
              for (std::size_t n = p; n-- > 0;) {
                VertexSet top = (n == 0) ? space.graph().full_set() : R[n];
                auto m = space.backward_min(top, letters[n], atoms[n + 1]);
                if (!m && n > 0) {
                  ok = false;
                  break;
                }
                atoms[n] = m.value_or(VertexSet());
              }
              if (!ok) return;
              try {
                out.insert(TightFilter::lasso(space, pre, cyc, std::move(atoms)));
              } catch (const InputError&) {
                // Candidate block fails the wrap-around or horizon checks.
              }
              return;
            }
            std::size_t lvl = p + idx;  // choosing the atom at level lvl
            for (VertexSet C : space.family().atoms()) {
              if (!C.subset_of(R[lvl])) continue;
              if (idx > 0 && !C.subset_of(space.step(block[idx - 1], letters[lvl - 1])))
                continue;
              block[idx] = C;
              self(self, idx + 1);
            }
          };
          emit(emit, 0);
        }

        // Advance the odometer.
        std::size_t pos = 0;
        while (pos < letters.size() && ++letters[pos] == nletters) {
          letters[pos] = 0;
          ++pos;
        }
        if (pos == letters.size()) break;
      }
    }
  }
  return std::vector<TightFilter>(out.begin(), out.end());
}

bool in_basic_open(const TightFilter& xi, const SemigroupElement& e,
                   std::span<const SemigroupElement> negatives) {
  if (!xi.contains(e)) return false;
  for (const SemigroupElement& n : negatives)
    if (xi.contains(n)) return false;
  return true;
}

}  // namespace lspace
