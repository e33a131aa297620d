#ifndef LSPACE_WORD_HPP
#define LSPACE_WORD_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace lspace {

using Letter = std::uint32_t;

// A finite word over the (interned) alphabet of a labelled graph.  The
// empty word stands for the path of length zero.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}

  static Word empty() { return Word(); }

  std::size_t size() const { return letters_.size(); }
  bool is_empty() const { return letters_.empty(); }
  Letter at(std::size_t i) const { return letters_[i]; }

  void push_back(Letter a) { letters_.push_back(a); }

  // First n letters.
  Word prefix(std::size_t n) const;
  // Everything after the first n letters.
  Word suffix_from(std::size_t n) const;
  // One-based inclusive slice; empty when j < i.
  Word subword(std::size_t i, std::size_t j) const;

  bool is_prefix_of(const Word& other) const;

  Word operator+(const Word& other) const;
  Word operator+(Letter a) const;

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }
  const std::vector<Letter>& letters() const { return letters_; }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

// Finitary stand-in for an eventually periodic infinite word
// prefix.cycle.cycle....  Equality is equality of the generated infinite
// words; canonical() has the shortest cycle and, given that, the
// shortest prefix (which pins down the cycle rotation).
class LassoWord {
 public:
  LassoWord(Word prefix, Word cycle);

  const Word& prefix() const { return prefix_; }
  const Word& cycle() const { return cycle_; }

  // Zero-based letter of the infinite word.
  Letter letter_at(std::size_t i) const;
  Word unroll(std::size_t n) const;

  LassoWord canonical() const;

  friend bool operator==(const LassoWord& a, const LassoWord& b);

 private:
  Word prefix_;
  Word cycle_;
};

}  // namespace lspace

#endif  // LSPACE_WORD_HPP
