#pragma once

#include <string>

#include "subdue/graph.hpp"

namespace test_graphs {

// Two backbone chains joined by base-pair rungs. Unit k: backbone vertices
// s(k) on each strand, bases A and T paired between them.
inline subdue::LabeledGraph ladder(int units) {
  subdue::GraphBuilder b;
  auto id = [](int unit, int part) { return static_cast<subdue::VertexId>(unit * 4 + part + 1); };
  for (int k = 0; k < units; ++k) {
    b.add_vertex(id(k, 0), "S");
    b.add_vertex(id(k, 1), "A");
    b.add_vertex(id(k, 2), "T");
    b.add_vertex(id(k, 3), "S");
    b.add_edge(id(k, 0), id(k, 1), "base", true);
    b.add_edge(id(k, 1), id(k, 2), "pair", false);
    b.add_edge(id(k, 3), id(k, 2), "base", true);
    if (k > 0) {
      b.add_edge(id(k - 1, 0), id(k, 0), "bb", true);
      b.add_edge(id(k - 1, 3), id(k, 3), "bb", true);
    }
  }
  return std::move(b).build();
}

// Two a-b-c triangles joined by one "link" edge.
inline subdue::LabeledGraph linked_triangles() {
  return subdue::parse_graph(
      "v 1 a\nv 2 b\nv 3 c\nv 4 a\nv 5 b\nv 6 c\n"
      "u 1 2 e\nu 2 3 e\nu 1 3 e\nu 4 5 e\nu 5 6 e\nu 4 6 e\nu 3 4 link\n");
}

}  // namespace test_graphs
