#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace subdue {

using Label = std::string;
using VertexId = std::int64_t;

struct Vertex {
  VertexId id = 0;
  Label label;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Undirected edges are stored with src <= dst.
struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  Label label;
  bool directed = false;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what, std::size_t line = 0);

  /// 1-based input line, or 0 when the error is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Immutable labeled multigraph. Vertices keep their insertion order as the
/// dense index; the label table holds every distinct vertex and edge label,
/// sorted lexicographically.
class LabeledGraph {
 public:
  LabeledGraph() = default;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// #vertices + #edges.
  std::size_t size() const noexcept { return vertices_.size() + edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  std::span<const Vertex> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  const Vertex& vertex(std::size_t index) const { return vertices_.at(index); }
  const Edge& edge(std::size_t index) const { return edges_.at(index); }

  /// Indices of edges touching `index`; a self-loop is listed once.
  std::span<const std::size_t> incident(std::size_t index) const {
    return incidence_.at(index);
  }
  std::size_t degree(std::size_t index) const { return incidence_.at(index).size(); }

  const std::vector<Label>& label_table() const noexcept { return labels_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  bool has_label(std::string_view label) const;

  /// Dense index of an external id; throws GraphError when absent.
  std::size_t index_of(VertexId id) const;
  bool contains_id(VertexId id) const { return id_index_.contains(id); }

  /// Endpoint of `edge_index` opposite to `from`.
  std::size_t other_end(std::size_t edge_index, std::size_t from) const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  friend class GraphBuilder;

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incidence_;
  std::vector<Label> labels_;
  std::unordered_map<VertexId, std::size_t> id_index_;
};

class GraphBuilder {
 public:
  /// Returns the dense index of the new vertex.
  std::size_t add_vertex(VertexId id, Label label);
  /// Endpoints are external ids.
  std::size_t add_edge(VertexId src, VertexId dst, Label label, bool directed);
  /// Endpoints are dense indices of vertices already added.
  std::size_t add_edge_by_index(std::size_t src, std::size_t dst, Label label,
                                bool directed);

  std::size_t vertex_count() const noexcept { return graph_.vertices_.size(); }
  bool contains_id(VertexId id) const { return graph_.contains_id(id); }

  LabeledGraph build() &&;

 private:
  LabeledGraph graph_;
};

/// Reads the line-oriented graph format (`v`, `d`, `u` records).
LabeledGraph parse_graph(std::istream& in);
LabeledGraph parse_graph(std::string_view text);
LabeledGraph load_graph(const std::string& path);

void serialize_graph(const LabeledGraph& g, std::ostream& out);
std::string serialize_graph(const LabeledGraph& g);

/// Label token as written by the serializer (quoted when needed).
std::string quote_label(std::string_view label);

/// Subgraph on `vertex_indices` (in the given order) with exactly the edges in
/// `edge_indices`; vertex ids are carried over from `g`.
LabeledGraph induced_subgraph(const LabeledGraph& g,
                              std::span<const std::size_t> vertex_indices,
                              std::span<const std::size_t> edge_indices);

bool is_connected(const LabeledGraph& g);

}  // namespace subdue
