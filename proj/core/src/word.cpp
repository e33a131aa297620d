#include "lspace/word.hpp"

#include <algorithm>

#include "lspace/errors.hpp"

namespace lspace {

Word Word::prefix(std::size_t n) const {
  if (n > size()) throw InputError("word prefix length out of range");
  return Word(std::vector<Letter>(letters_.begin(), letters_.begin() + n));
}

Word Word::suffix_from(std::size_t n) const {
  if (n > size()) throw InputError("word suffix index out of range");
  return Word(std::vector<Letter>(letters_.begin() + n, letters_.end()));
}

Word Word::subword(std::size_t i, std::size_t j) const {
  if (j < i) return Word();
  if (i < 1 || j > size()) throw InputError("subword indices out of range");
  return Word(std::vector<Letter>(letters_.begin() + (i - 1), letters_.begin() + j));
}

bool Word::is_prefix_of(const Word& other) const {
  if (size() > other.size()) return false;
  return std::equal(letters_.begin(), letters_.end(), other.letters_.begin());
}

Word Word::operator+(const Word& other) const {
  std::vector<Letter> out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return Word(std::move(out));
}

Word Word::operator+(Letter a) const {
  std::vector<Letter> out = letters_;
  out.push_back(a);
  return Word(std::move(out));
}

LassoWord::LassoWord(Word prefix, Word cycle)
    : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {
  if (cycle_.is_empty()) throw InputError("lasso cycle must be nonempty");
}

Letter LassoWord::letter_at(std::size_t i) const {
  if (i < prefix_.size()) return prefix_.at(i);
  return cycle_.at((i - prefix_.size()) % cycle_.size());
}

Word LassoWord::unroll(std::size_t n) const {
  Word out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter_at(i));
  return out;
}

LassoWord LassoWord::canonical() const {
  std::size_t p = prefix_.size();
  std::size_t c = cycle_.size();
  // Shortest period of the tail divides the current one.
  for (std::size_t d = 1; d < c; ++d) {
    if (c % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = 0; i < c; ++i) {
      if (cycle_.at(i) != cycle_.at((i + d) % c)) {
        periodic = false;
        break;
      }
    }
    if (periodic) {
      c = d;
      break;
    }
  }
  Word cyc;
  for (std::size_t i = 0; i < c; ++i) cyc.push_back(letter_at(p + i));
  // Fold prefix letters that already agree with the periodic tail.
  Word pre = prefix_;
  while (p > 0 && letter_at(p - 1) == letter_at(p - 1 + c)) {
    --p;
    Word shorter;
    for (std::size_t i = 0; i < p; ++i) shorter.push_back(letter_at(i));
    pre = shorter;
    Word rot;
    for (std::size_t i = 0; i < c; ++i) rot.push_back(letter_at(p + i));
    cyc = rot;
  }
  return LassoWord(pre, cyc);
}

bool operator==(const LassoWord& a, const LassoWord& b) {
  LassoWord ca = a.canonical();
  LassoWord cb = b.canonical();
  return ca.prefix_ == cb.prefix_ && ca.cycle_ == cb.cycle_;
}

}  // namespace lspace
