#include "subdue/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

namespace subdue {

namespace {

std::string with_line(const std::string& what, std::size_t line) {
  if (line == 0) return what;
  return "line " + std::to_string(line) + ": " + what;
}

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  // nullopt at end of line or at a comment.
  std::optional<std::string> next() {
    skip_space();
    if (pos >= text.size() || text[pos] == '#') return std::nullopt;
    std::string out;
    if (text[pos] == '"') {
      ++pos;
      bool closed = false;
      while (pos < text.size()) {
        char c = text[pos++];
        if (c == '\\') {
          if (pos >= text.size()) break;
          out.push_back(text[pos++]);
        } else if (c == '"') {
          closed = true;
          break;
        } else {
          out.push_back(c);
        }
      }
      if (!closed) throw GraphError("unterminated quoted label", line);
      if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
          text[pos] != '#') {
        throw GraphError("unexpected character after quoted label", line);
      }
      return out;
    }
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '#') {
      out.push_back(text[pos++]);
    }
    return out;
  }
};

VertexId parse_id(const std::optional<std::string>& tok, std::size_t line) {
  if (!tok) throw GraphError("missing vertex id", line);
  VertexId value = 0;
  const char* first = tok->data();
  const char* last = first + tok->size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw GraphError("invalid vertex id '" + *tok + "'", line);
  }
  return value;
}

Label require_label(const std::optional<std::string>& tok, std::size_t line) {
  if (!tok) throw GraphError("missing label", line);
  if (tok->empty()) throw GraphError("empty label", line);
  return *tok;
}

void check_label(std::string_view label) {
  if (label.empty()) throw GraphError("empty label");
}

}  // namespace

GraphError::GraphError(const std::string& what, std::size_t line)
    : std::runtime_error(with_line(what, line)), line_(line) {}

bool LabeledGraph::has_label(std::string_view label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::size_t LabeledGraph::index_of(VertexId id) const {
  auto it = id_index_.find(id);
  if (it == id_index_.end()) throw GraphError("undefined vertex " + std::to_string(id));
  return it->second;
}

std::size_t LabeledGraph::other_end(std::size_t edge_index, std::size_t from) const {
  const Edge& e = edges_.at(edge_index);
  return e.src == from ? e.dst : e.src;
}

std::size_t GraphBuilder::add_vertex(VertexId id, Label label) {
  check_label(label);
  if (graph_.id_index_.contains(id)) {
    throw GraphError("duplicate vertex id " + std::to_string(id));
  }
  std::size_t index = graph_.vertices_.size();
  graph_.id_index_.emplace(id, index);
  graph_.vertices_.push_back(Vertex{id, std::move(label)});
  graph_.incidence_.emplace_back();
  return index;
}

std::size_t GraphBuilder::add_edge(VertexId src, VertexId dst, Label label, bool directed) {
  auto find = [&](VertexId id) {
    auto it = graph_.id_index_.find(id);
    if (it == graph_.id_index_.end()) {
      throw GraphError("undefined vertex " + std::to_string(id));
    }
    return it->second;
  };
  std::size_t s = find(src);
  std::size_t d = find(dst);
  return add_edge_by_index(s, d, std::move(label), directed);
}

std::size_t GraphBuilder::add_edge_by_index(std::size_t src, std::size_t dst, Label label,
                                            bool directed) {
  check_label(label);
  const std::size_t n = graph_.vertices_.size();
  if (src >= n || dst >= n) throw GraphError("edge endpoint out of range");
  if (!directed && src > dst) std::swap(src, dst);
  std::size_t index = graph_.edges_.size();
  graph_.edges_.push_back(Edge{src, dst, std::move(label), directed});
  graph_.incidence_[src].push_back(index);
  if (dst != src) graph_.incidence_[dst].push_back(index);
  return index;
}

LabeledGraph GraphBuilder::build() && {
  std::set<Label> labels;
  for (const auto& v : graph_.vertices_) labels.insert(v.label);
  for (const auto& e : graph_.edges_) labels.insert(e.label);
  graph_.labels_.assign(labels.begin(), labels.end());
  return std::move(graph_);
}

LabeledGraph parse_graph(std::string_view text) {
  GraphBuilder builder;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;

    Tokenizer tok{line, 0, line_no};
    auto kind = tok.next();
    if (!kind) {
      if (end == text.size()) break;
      continue;
    }
    try {
      if (*kind == "v") {
        VertexId id = parse_id(tok.next(), line_no);
        Label label = require_label(tok.next(), line_no);
        if (tok.next()) throw GraphError("trailing tokens", line_no);
        builder.add_vertex(id, std::move(label));
      } else if (*kind == "d" || *kind == "u") {
        VertexId src = parse_id(tok.next(), line_no);
        VertexId dst = parse_id(tok.next(), line_no);
        Label label = require_label(tok.next(), line_no);
        if (tok.next()) throw GraphError("trailing tokens", line_no);
        builder.add_edge(src, dst, std::move(label), *kind == "d");
      } else {
        throw GraphError("unknown record type '" + *kind + "'", line_no);
      }
    } catch (const GraphError& err) {
      if (err.line() != 0) throw;
      throw GraphError(err.what(), line_no);
    }
    if (end == text.size()) break;
  }
  return std::move(builder).build();
}

LabeledGraph parse_graph(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(std::string_view(buffer.str()));
}

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return parse_graph(in);
}

std::string quote_label(std::string_view label) {
  bool needs_quotes = label.empty() || label.front() == '"';
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '#' || c == '"' || c == '\\') {
      needs_quotes = true;
    }
  }
  if (!needs_quotes) return std::string(label);
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void serialize_graph(const LabeledGraph& g, std::ostream& out) {
  for (const auto& v : g.vertices()) {
    out << "v " << v.id << ' ' << quote_label(v.label) << '\n';
  }
  for (const auto& e : g.edges()) {
    out << (e.directed ? "d " : "u ") << g.vertex(e.src).id << ' ' << g.vertex(e.dst).id << ' '
        << quote_label(e.label) << '\n';
  }
}

std::string serialize_graph(const LabeledGraph& g) {
  std::ostringstream out;
  serialize_graph(g, out);
  return out.str();
}

LabeledGraph induced_subgraph(const LabeledGraph& g, std::span<const std::size_t> vertex_indices,
                              std::span<const std::size_t> edge_indices) {
  GraphBuilder builder;
  std::unordered_map<std::size_t, std::size_t> local;
  for (std::size_t v : vertex_indices) {
    const Vertex& vx = g.vertex(v);
    local.emplace(v, builder.add_vertex(vx.id, vx.label));
  }
  for (std::size_t ei : edge_indices) {
    const Edge& e = g.edge(ei);
    auto s = local.find(e.src);
    auto d = local.find(e.dst);
    if (s == local.end() || d == local.end()) {
      throw GraphError("subgraph edge leaves the vertex set");
    }
    builder.add_edge_by_index(s->second, d->second, e.label, e.directed);
  }
  return std::move(builder).build();
}

bool is_connected(const LabeledGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return false;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : g.incident(v)) {
      std::size_t w = g.other_end(e, v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace subdue
