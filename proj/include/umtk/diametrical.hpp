#pragma once

#include "umtk/space.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umtk {

/// Simple undirected graph on named vertices, stored as an adjacency matrix.
class DiametricalGraph {
 public:
  explicit DiametricalGraph(std::vector<std::string> vertices);

  std::size_t size() const { return vertices_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }

  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * size() + v]; }
  void add_edge(std::size_t u, std::size_t v);

  /// Edges as index pairs (u < v), lexicographically ordered.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const DiametricalGraph&, const DiametricalGraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<bool> adj_;
};

/// Graph joining exactly the pairs at distance diam X. Throws SpaceTooSmall
/// when |X| < 2.
DiametricalGraph diametrical_graph(const Space& space);

/// Parts of a complete multipartite graph, as vertex indices. Each part is
/// sorted ascending by index; parts are ordered by (size, smallest name).
struct MultipartitePartition {
  std::vector<std::vector<std::size_t>> parts;
};

/// Decomposes `graph` into the parts of a complete multipartite structure,
/// or returns nullopt when the graph is not complete multipartite (k >= 2).
/// Throws SpaceTooSmall for graphs with fewer than two vertices.
std::optional<MultipartitePartition> multipartite_parts(const DiametricalGraph& graph);

/// Complete multipartite graph on `vertices` induced by `partition`.
DiametricalGraph rebuild_from_parts(std::vector<std::string> vertices, const MultipartitePartition& partition);

}  // namespace umtk
