#include "lspace/graph.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "lspace/errors.hpp"

namespace lspace {

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < 64; ++v)
    if (test(v)) out.push_back(v);
  return out;
}

LabelledGraph::LabelledGraph(std::vector<std::string> vertex_names,
                             std::vector<std::string> letter_names,
                             std::vector<Edge> edges)
    : vertex_names_(std::move(vertex_names)),
      letter_names_(std::move(letter_names)),
      edges_(std::move(edges)) {
  if (vertex_names_.empty()) throw InputError("graph needs at least one vertex");
  if (vertex_names_.size() > 64) throw InputError("at most 64 vertices are supported");
  full_ = VertexSet((vertex_names_.size() == 64)
                        ? ~std::uint64_t{0}
                        : ((std::uint64_t{1} << vertex_names_.size()) - 1));

  step_.assign(letter_names_.size(), std::vector<std::uint64_t>(vertex_names_.size(), 0));
  std::vector<bool> letter_used(letter_names_.size(), false);
  std::uint64_t non_sinks = 0;
  for (const Edge& e : edges_) {
    if (e.src >= vertex_names_.size() || e.dst >= vertex_names_.size())
      throw InputError("edge endpoint out of range");
    if (e.label >= letter_names_.size()) throw InputError("edge label out of range");
    step_[e.label][e.src] |= std::uint64_t{1} << e.dst;
    letter_used[e.label] = true;
    non_sinks |= std::uint64_t{1} << e.src;
  }
  for (std::size_t a = 0; a < letter_used.size(); ++a)
    if (!letter_used[a])
      throw InputError("letter '" + letter_names_[a] + "' labels no edge");
  sinks_ = full_.minus(VertexSet(non_sinks));
}

LabelledGraph LabelledGraph::from_named(
    std::vector<std::string> vertices,
    std::vector<std::tuple<std::string, std::string, std::string>> edges) {
  std::vector<std::string> vnames = vertices;
  std::sort(vnames.begin(), vnames.end());
  if (std::adjacent_find(vnames.begin(), vnames.end()) != vnames.end()) {
    auto it = std::adjacent_find(vnames.begin(), vnames.end());
    throw InputError("duplicate vertex '" + *it + "'");
  }
  std::set<std::string> lset;
  for (const auto& [src, dst, label] : edges) lset.insert(label);
  std::vector<std::string> lnames(lset.begin(), lset.end());

  std::map<std::string, VertexId> vid;
  for (VertexId i = 0; i < vnames.size(); ++i) vid[vnames[i]] = i;
  std::map<std::string, Letter> lid;
  for (Letter i = 0; i < lnames.size(); ++i) lid[lnames[i]] = i;

  std::vector<Edge> es;
  for (const auto& [src, dst, label] : edges) {
    auto s = vid.find(src);
    if (s == vid.end()) throw InputError("unknown vertex '" + src + "'");
    auto d = vid.find(dst);
    if (d == vid.end()) throw InputError("unknown vertex '" + dst + "'");
    es.push_back(Edge{s->second, d->second, lid[label]});
  }
  return LabelledGraph(std::move(vnames), std::move(lnames), std::move(es));
}

VertexSet LabelledGraph::step(VertexSet A, Letter a) const {
  std::uint64_t out = 0;
  std::uint64_t bits = A.bits();
  while (bits) {
    int v = std::countr_zero(bits);
    bits &= bits - 1;
    out |= step_[a][v];
  }
  return VertexSet(out);
}

bool LabelledGraph::has_vertex(const std::string& name) const {
  return std::find(vertex_names_.begin(), vertex_names_.end(), name) != vertex_names_.end();
}

VertexId LabelledGraph::vertex_id(const std::string& name) const {
  auto it = std::find(vertex_names_.begin(), vertex_names_.end(), name);
  if (it == vertex_names_.end()) throw InputError("unknown vertex '" + name + "'");
  return static_cast<VertexId>(it - vertex_names_.begin());
}

bool LabelledGraph::has_letter(const std::string& name) const {
  return std::find(letter_names_.begin(), letter_names_.end(), name) != letter_names_.end();
}

Letter LabelledGraph::letter_id(const std::string& name) const {
  auto it = std::find(letter_names_.begin(), letter_names_.end(), name);
  if (it == letter_names_.end()) throw InputError("unknown letter '" + name + "'");
  return static_cast<Letter>(it - letter_names_.begin());
}

VertexSet relative_range(const LabelledGraph& g, VertexSet A, const Word& alpha) {
  for (Letter a : alpha) {
    if (a >= g.letter_count()) throw InputError("unknown letter in word");
    A = g.step(A, a);
  }
  return A;
}

VertexSet range(const LabelledGraph& g, const Word& alpha) {
  return relative_range(g, g.full_set(), alpha);
}

std::vector<Letter> letters_from(const LabelledGraph& g, VertexSet A) {
  std::vector<Letter> out;
  for (Letter a = 0; a < g.letter_count(); ++a)
    if (!g.step(A, a).empty()) out.push_back(a);
  return out;
}

bool has_infinitely_many_letters_from(const LabelledGraph& g, VertexSet A) {
  // The letters leaving A form a subset of the finite alphabet.
  (void)g;
  (void)A;
  return false;
}

std::vector<Word> labelled_paths_up_to(const LabelledGraph& g, std::size_t n) {
  std::vector<Word> out;
  out.push_back(Word::empty());
  std::vector<Word> frontier{Word::empty()};
  for (std::size_t len = 1; len <= n; ++len) {
    std::vector<Word> next;
    for (const Word& w : frontier) {
      for (Letter a = 0; a < g.letter_count(); ++a) {
        Word wa = w + a;
        if (!range(g, wa).empty()) next.push_back(wa);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

GraphReport validate_graph(const LabelledGraph& g) {
  GraphReport rep;
  rep.sinks = g.sinks();
  rep.alphabet_surjective = true;  // enforced at construction
  rep.left_resolving = true;
  // Count a-labelled edges into each vertex; two of them break injectivity
  // of the labelling restricted to incoming edges.
  std::vector<std::vector<int>> incoming(g.vertex_count(),
                                         std::vector<int>(g.letter_count(), 0));
  for (const Edge& e : g.edges()) {
    if (++incoming[e.dst][e.label] > 1 && rep.left_resolving) {
      rep.left_resolving = false;
      rep.offending_vertex = e.dst;
      rep.offending_letter = e.label;
    }
  }
  return rep;
}

}  // namespace lspace
