#include "lspace/io.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lspace/errors.hpp"

namespace lspace {

namespace {

using nlohmann::json;

void check_name(const std::string& name, const char* what) {
  if (name.empty()) throw InputError(std::string(what) + " name is empty");
  for (char ch : name)
    if (std::isspace(static_cast<unsigned char>(ch)) || std::strchr("{}[](),*", ch))
      throw InputError(std::string(what) + " name '" + name + "' contains a reserved character");
}

bool dotted(const LabelledGraph& g) {
  for (const std::string& n : g.letter_names())
    if (n.size() != 1) return true;
  return false;
}

// Split on top-level commas, respecting (), {} and [].
std::vector<std::string> split_top_level(const std::string& text) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(' || ch == '{' || ch == '[') ++depth;
    if (ch == ')' || ch == '}' || ch == ']') --depth;
    if (ch == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

GraphDocument parse_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed document: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges"))
    throw InputError("document needs 'vertices' and 'edges' fields");

  std::vector<std::string> vertices;
  for (const auto& v : doc["vertices"]) {
    if (!v.is_string()) throw InputError("vertex names must be strings");
    check_name(v.get<std::string>(), "vertex");
    vertices.push_back(v.get<std::string>());
  }
  std::vector<std::tuple<std::string, std::string, std::string>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_object() || !e.contains("src") || !e.contains("dst") || !e.contains("label"))
      throw InputError("each edge needs 'src', 'dst' and 'label'");
    std::string label = e["label"].get<std::string>();
    check_name(label, "label");
    if (label == "e") throw InputError("label name 'e' is reserved for the empty word");
    edges.emplace_back(e["src"].get<std::string>(), e["dst"].get<std::string>(), label);
  }
  LabelledGraph graph = LabelledGraph::from_named(std::move(vertices), std::move(edges));

  GraphDocument out{std::move(graph), std::nullopt};
  if (doc.contains("family")) {
    std::vector<VertexSet> sets;
    for (const auto& entry : doc["family"]) {
      VertexSet A;
      for (const auto& name : entry)
        A = A | VertexSet::singleton(out.graph.vertex_id(name.get<std::string>()));
      sets.push_back(A);
    }
    out.family_sets = std::move(sets);
  }
  return out;
}

GraphDocument parse_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string format_set(const LabelledGraph& g, VertexSet A) {
  std::string out = "{";
  bool first = true;
  for (VertexId v : A.members()) {
    if (!first) out += ",";
    out += g.vertex_names()[v];
    first = false;
  }
  return out + "}";
}

std::string format_word(const LabelledGraph& g, const Word& w) {
  if (w.is_empty()) return "e";
  std::string out;
  bool dot = dotted(g);
  bool first = true;
  for (Letter a : w) {
    if (dot && !first) out += ".";
    out += g.letter_names()[a];
    first = false;
  }
  return out;
}

std::string format_element(const LabelledGraph& g, const SemigroupElement& s) {
  if (s.is_zero()) return "0";
  return "(" + format_word(g, s.left()) + "," + format_set(g, s.mid()) + "," +
         format_word(g, s.right()) + ")";
}

std::string format_filter(const TightFilter& xi) {
  const LabelledGraph& g = xi.space().graph();
  if (xi.is_finite())
    return format_word(g, xi.word()) + "[" + format_set(g, xi.atom_at(xi.finite_length())) +
           "]";
  std::string out;
  if (!xi.prefix().is_empty()) out += format_word(g, xi.prefix());
  out += "(" + format_word(g, xi.cycle()) + ")^∞[";
  for (std::size_t n = 0; n < xi.stored_levels(); ++n) {
    if (n) out += ",";
    out += format_set(g, xi.atom_at(n));
  }
  return out + "]";
}

std::string format_arrow(const GroupoidElement& x) {
  return "(" + format_filter(x.range_side()) + "," + std::to_string(x.degree()) + "," +
         format_filter(x.source_side()) + ")";
}

std::string format_rational(const Rational& q) {
  std::string out = std::to_string(q.numerator());
  if (q.denominator() != 1) out += "/" + std::to_string(q.denominator());
  return out;
}

std::string format_algebra(const LabelledGraph& g, const AlgebraElement& x) {
  if (x.empty()) return "0\n";
  std::string out;
  for (const auto& [t, c] : x.terms())
    out += format_rational(c) + " " + format_element(g, t) + "\n";
  return out;
}

VertexSet parse_set(const LabelledGraph& g, const std::string& raw) {
  std::string text = strip(raw);
  if (text.size() < 2 || text.front() != '{' || text.back() != '}')
    throw InputError("expected a vertex set in braces: '" + raw + "'");
  std::string inner = text.substr(1, text.size() - 2);
  VertexSet out;
  if (strip(inner).empty()) return out;
  for (const std::string& part : split_top_level(inner))
    out = out | VertexSet::singleton(g.vertex_id(strip(part)));
  return out;
}

Word parse_word(const LabelledGraph& g, const std::string& raw) {
  std::string text = strip(raw);
  if (text.empty()) throw InputError("empty word must be written 'e'");
  if (text == "e") return Word();
  Word out;
  if (dotted(g)) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find('.', pos);
      std::string piece = text.substr(pos, next == std::string::npos ? next : next - pos);
      out.push_back(g.letter_id(piece));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    return out;
  }
  for (char ch : text) out.push_back(g.letter_id(std::string(1, ch)));
  return out;
}

SemigroupElement parse_element(const LabelledSpace& space, const std::string& raw) {
  std::string text = strip(raw);
  if (text == "0") return SemigroupElement::zero();
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InputError("expected a triple '(word,{set},word)': '" + raw + "'");
  std::vector<std::string> parts = split_top_level(text.substr(1, text.size() - 2));
  if (parts.size() != 3) throw InputError("a triple has three components: '" + raw + "'");
  const LabelledGraph& g = space.graph();
  return SemigroupElement::triple(space, parse_word(g, parts[0]), parse_set(g, parts[1]),
                                  parse_word(g, parts[2]));
}

TightFilter parse_filter(const LabelledSpace& space, const std::string& raw) {
  std::string text = strip(raw);
  const LabelledGraph& g = space.graph();
  std::size_t inf = text.find(")^∞[");
  std::size_t marklen = std::string(")^∞[").size();
  if (inf == std::string::npos) {
    inf = text.find(")^oo[");
    marklen = 5;
  }
  if (inf != std::string::npos) {
    std::size_t open = text.find('(');
    if (open == std::string::npos || text.back() != ']')
      throw InputError("malformed lasso filter: '" + raw + "'");
    Word prefix =
        (open == 0) ? Word() : parse_word(g, text.substr(0, open));
    Word cycle = parse_word(g, text.substr(open + 1, inf - open - 1));
    std::string atoms_text = text.substr(inf + marklen, text.size() - (inf + marklen) - 1);
    std::vector<VertexSet> atoms;
    for (const std::string& part : split_top_level(atoms_text))
      atoms.push_back(parse_set(g, part));
    return TightFilter::lasso(space, std::move(prefix), std::move(cycle), std::move(atoms));
  }
  std::size_t open = text.find('[');
  if (open == std::string::npos || text.back() != ']')
    throw InputError("expected a filter 'word[{set}]': '" + raw + "'");
  Word word = parse_word(g, text.substr(0, open));
  VertexSet atom = parse_set(g, text.substr(open + 1, text.size() - open - 2));
  return TightFilter::finite(space, std::move(word), atom);
}

GroupoidElement parse_arrow(const LabelledSpace& space, const std::string& raw) {
  std::string text = strip(raw);
  if (text.size() < 2 || text.front() != '(' || text.back() != ')')
    throw InputError("expected an arrow '(filter,m,filter)': '" + raw + "'");
  std::vector<std::string> parts = split_top_level(text.substr(1, text.size() - 2));
  if (parts.size() != 3) throw InputError("an arrow has three components: '" + raw + "'");
  TightFilter eta = parse_filter(space, parts[0]);
  int m = 0;
  try {
    m = std::stoi(strip(parts[1]));
  } catch (const std::exception&) {
    throw InputError("arrow degree must be an integer: '" + parts[1] + "'");
  }
  TightFilter xi = parse_filter(space, parts[2]);
  return GroupoidElement::arrow(std::move(eta), m, std::move(xi));
}

AlgebraElement parse_generator_expr(const LabelledSpace& space, const std::string& raw) {
  std::istringstream ss(raw);
  std::string token;
  AlgebraElement out;
  bool first = true;
  const LabelledGraph& g = space.graph();
  while (ss >> token) {
    AlgebraElement factor;
    bool starred = false;
    if (token.size() > 1 && token.back() == '*') {
      starred = true;
      token.pop_back();
    }
    if (token.size() > 2 && token.front() == 'P' && token[1] == '{') {
      VertexSet A = parse_set(g, token.substr(1));
      if (!space.family().contains(A))
        throw InputError("set " + format_set(g, A) + " is not in the family");
      factor = proj(space, A);
    } else if (token.size() > 2 && token.front() == 'S' && token[1] == '{') {
      std::string inner = token.substr(2, token.size() - 3);
      if (token.back() != '}') throw InputError("malformed generator token '" + token + "'");
      factor = gen(space, g.letter_id(strip(inner)));
    } else {
      throw InputError("unknown generator token '" + token + "'");
    }
    if (starred) factor = star(factor);
    out = first ? factor : multiply(space, out, factor);
    first = false;
  }
  if (first) throw InputError("empty generator expression");
  return out;
}

}  // namespace lspace
