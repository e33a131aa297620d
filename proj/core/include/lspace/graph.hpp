#ifndef LSPACE_GRAPH_HPP
#define LSPACE_GRAPH_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "lspace/word.hpp"

namespace lspace {

using VertexId = std::uint32_t;

// Subset of the vertex set as a bit mask.  All Boolean operations are
// exact; graphs are capped at 64 vertices.
class VertexSet {
 public:
  VertexSet() : bits_(0) {}
  explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static VertexSet singleton(VertexId v) { return VertexSet(std::uint64_t{1} << v); }

  bool empty() const { return bits_ == 0; }
  std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool test(VertexId v) const { return (bits_ >> v) & 1; }
  std::uint64_t bits() const { return bits_; }

  VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  // Relative complement.
  VertexSet minus(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<VertexId> members() const;

  friend bool operator==(VertexSet, VertexSet) = default;
  friend auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_;
};

struct Edge {
  VertexId src;
  VertexId dst;
  Letter label;
};

struct GraphReport {
  VertexSet sinks;
  bool left_resolving = false;
  bool alphabet_surjective = false;
  // A witness (vertex, letter) when left-resolving fails.
  VertexId offending_vertex = 0;
  Letter offending_letter = 0;
};

// A finite directed graph with a surjective edge labelling.  Vertices
// and letters are interned to small ids; the per-letter one-step target
// masks make relative ranges cheap mask folds.
class LabelledGraph {
 public:
  LabelledGraph(std::vector<std::string> vertex_names,
                std::vector<std::string> letter_names,
                std::vector<Edge> edges);

  // Interns names (sorted) and resolves edges given as (src, dst, label).
  static LabelledGraph from_named(
      std::vector<std::string> vertices,
      std::vector<std::tuple<std::string, std::string, std::string>> edges);

  std::size_t vertex_count() const { return vertex_names_.size(); }
  std::size_t letter_count() const { return letter_names_.size(); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }
  const std::vector<std::string>& letter_names() const { return letter_names_; }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet full_set() const { return full_; }
  VertexSet sinks() const { return sinks_; }

  // Targets of a-labelled edges with source in A.
  VertexSet step(VertexSet A, Letter a) const;

  bool has_vertex(const std::string& name) const;
  VertexId vertex_id(const std::string& name) const;
  bool has_letter(const std::string& name) const;
  Letter letter_id(const std::string& name) const;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<std::string> letter_names_;
  std::vector<Edge> edges_;
  VertexSet full_;
  VertexSet sinks_;
  // step_[a][v] = targets of a-labelled edges out of v.
  std::vector<std::vector<std::uint64_t>> step_;
};

// r(A, alpha): targets of paths labelled alpha with source in A;
// r(A, empty word) = A.
VertexSet relative_range(const LabelledGraph& g, VertexSet A, const Word& alpha);

// Range of a word from the whole vertex set.
VertexSet range(const LabelledGraph& g, const Word& alpha);

// Letters a with r(A, a) nonempty.
std::vector<Letter> letters_from(const LabelledGraph& g, VertexSet A);

// Whether the set of letters leaving A is infinite.  A finite graph has
// a finite alphabet, so this is identically false; it exists because the
// finite-type tightness test is stated as a disjunction with it.
bool has_infinitely_many_letters_from(const LabelledGraph& g, VertexSet A);

// All words alpha with |alpha| <= n realized by some path (nonempty
// range), including the empty word.  Sorted lexicographically.
std::vector<Word> labelled_paths_up_to(const LabelledGraph& g, std::size_t n);

GraphReport validate_graph(const LabelledGraph& g);

}  // namespace lspace

#endif  // LSPACE_GRAPH_HPP
