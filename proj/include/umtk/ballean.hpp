#pragma once

#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/space.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace umtk {

/// Closed ball B_r(t). Identity is the member set; center and radius are kept
/// for diagnostics only.
struct Ball {
  std::vector<std::size_t> members;  // ascending point indices
  std::size_t center = 0;
  Rational radius;
};

/// All balls of a space, one per member set, ordered by (size, members).
struct Ballean {
  std::vector<Ball> balls;

  std::size_t size() const { return balls.size(); }
  std::optional<std::size_t> find(const std::vector<std::size_t>& members) const;
};

/// Radii range over Sp(X): B_r(t) only changes when r crosses a distance
/// value, so this covers every ball.
Ballean enumerate_balls(const Space& space);

/// Cover relation of inclusion on a ballean. Arc (a, b) means ball a is a
/// maximal proper subset of ball b.
class HasseDiagram {
 public:
  explicit HasseDiagram(Ballean ballean);

  std::size_t size() const { return ballean_.size(); }
  const Ballean& ballean() const { return ballean_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& arcs() const { return arcs_; }

  bool has_arc(std::size_t a, std::size_t b) const { return adj_[a * size() + b]; }
  const std::vector<std::size_t>& out(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in(std::size_t v) const { return in_[v]; }
  std::size_t indegree(std::size_t v) const { return in_[v].size(); }
  std::size_t outdegree(std::size_t v) const { return out_[v].size(); }

  /// Longest path length from a zero-indegree vertex.
  std::vector<std::size_t> levels() const;

 private:
  Ballean ballean_;
  std::vector<std::pair<std::size_t, std::size_t>> arcs_;
  std::vector<bool> adj_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
};

HasseDiagram hasse_diagram(const Ballean& ballean);

/// Vertex bijection between diagrams: map[v] is the image of vertex v.
using VertexMap = std::vector<std::size_t>;

bool verify_digraph_iso(const HasseDiagram& a, const HasseDiagram& b, const VertexMap& map);

/// Arc-reversed diagram as a rooted tree (root = the whole space) when every
/// vertex but one has exactly one outgoing arc. Vertex v becomes the node
/// with preorder index tree_index[v].
struct HasseTree {
  FlatTree tree;
  std::vector<std::size_t> tree_index;
};
std::optional<HasseTree> as_rooted_tree(const HasseDiagram& h);

/// Digraph isomorphism. Rooted-tree diagrams go through tree canonization;
/// anything else uses colour refinement on (indegree, outdegree, level) and
/// neighbour colours, then backtracking inside the refined classes.
std::optional<VertexMap> hasse_digraph_iso(const HasseDiagram& a, const HasseDiagram& b);

/// Same search without the tree shortcut (exposed for cross-checking).
std::optional<VertexMap> hasse_digraph_iso_search(const HasseDiagram& a, const HasseDiagram& b);

struct BallCheck {
  bool ok = true;
  std::string violation;
};

/// Images of all balls of X are balls of Y and preimages of all balls of Y
/// are balls of X. Throws NotABijection.
BallCheck verify_ball_preserving(const Space& x, const Space& y, const PointMap& f);
BallCheck verify_ball_preserving(const Space& x, const Space& y, const Ballean& bx, const Ballean& by, const PointMap& f);

/// Point bijection read off a Hasse-diagram isomorphism through its action
/// on the zero-indegree (one-point) balls. Throws VerificationFailed if the
/// extracted map is not ball-preserving.
std::optional<PointMap> ball_preserving_bijection(const Space& x, const Space& y);

/// Names of the members of a ball, e.g. "{q,r}".
std::string ball_text(const Space& space, const std::vector<std::size_t>& members);

}  // namespace umtk
