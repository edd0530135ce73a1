#include "umtk/diametrical.hpp"

#include <algorithm>
#include <numeric>

namespace umtk {

DiametricalGraph::DiametricalGraph(std::vector<std::string> vertices)
    : vertices_(std::move(vertices)), adj_(vertices_.size() * vertices_.size(), false) {}

void DiametricalGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) return;
  adj_[u * size() + v] = true;
  adj_[v * size() + u] = true;
}

std::vector<std::pair<std::size_t, std::size_t>> DiametricalGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (std::size_t v = u + 1; v < size(); ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

DiametricalGraph diametrical_graph(const Space& space) {
  if (space.size() < 2) throw Error(ErrorKind::SpaceTooSmall, "diametrical graph needs at least two points");
  const Rational diam = diameter(space);
  DiametricalGraph g(space.points());
  for (std::size_t u = 0; u < space.size(); ++u)
    for (std::size_t v = u + 1; v < space.size(); ++v)
      if (space.d(u, v) == diam) g.add_edge(u, v);
  return g;
}

std::optional<MultipartitePartition> multipartite_parts(const DiametricalGraph& graph) {
  const std::size_t n = graph.size();
  if (n < 2) throw Error(ErrorKind::SpaceTooSmall, "multipartite decomposition needs at least two vertices");

  // Connected components of the complement graph.
  std::vector<std::size_t> component(n, n);
  std::size_t count = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (component[start] != n) continue;
    std::vector<std::size_t> stack{start};
    component[start] = count;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < n; ++v)
        if (v != u && component[v] == n && !graph.adjacent(u, v)) {
          component[v] = count;
          stack.push_back(v);
        }
    }
    ++count;
  }
  if (count < 2) return std::nullopt;

  // Verification pass: no edge inside a component, every cross pair an edge.
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (graph.adjacent(u, v) == (component[u] == component[v])) return std::nullopt;

  MultipartitePartition out;
  out.parts.resize(count);
  for (std::size_t v = 0; v < n; ++v) out.parts[component[v]].push_back(v);

  const auto& names = graph.vertices();
  auto smallest_name = [&](const std::vector<std::size_t>& part) {
    return *std::min_element(part.begin(), part.end(),
                             [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
  };
  std::sort(out.parts.begin(), out.parts.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return names[smallest_name(a)] < names[smallest_name(b)];
  });
  return out;
}

DiametricalGraph rebuild_from_parts(std::vector<std::string> vertices, const MultipartitePartition& partition) {
  DiametricalGraph g(std::move(vertices));
  for (std::size_t a = 0; a < partition.parts.size(); ++a)
    for (std::size_t b = a + 1; b < partition.parts.size(); ++b)
      for (auto u : partition.parts[a])
        for (auto v : partition.parts[b]) g.add_edge(u, v);
  return g;
}

}  // namespace umtk
