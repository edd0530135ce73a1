#include "umtk/ballean.hpp"

#include "umtk/tree_canon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace umtk {

std::optional<std::size_t> Ballean::find(const std::vector<std::size_t>& members) const {
  auto it = std::lower_bound(balls.begin(), balls.end(), members, [](const Ball& b, const std::vector<std::size_t>& m) {
    if (b.members.size() != m.size()) return b.members.size() < m.size();
    return b.members < m;
  });
  if (it == balls.end() || it->members != members) return std::nullopt;
  return static_cast<std::size_t>(it - balls.begin());
}

Ballean enumerate_balls(const Space& space) {
  const Spectrum sp = spectrum(space);
  Ballean out;
  for (std::size_t t = 0; t < space.size(); ++t)
    for (const auto& r : sp.values) {
      Ball b{{}, t, r};
      for (std::size_t x = 0; x < space.size(); ++x)
        if (space.d(x, t) <= r) b.members.push_back(x);
      out.balls.push_back(std::move(b));
    }
  // Stable sort keeps the first (center, radius) seen for each member set.
  std::stable_sort(out.balls.begin(), out.balls.end(), [](const Ball& a, const Ball& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  out.balls.erase(std::unique(out.balls.begin(), out.balls.end(),
                              [](const Ball& a, const Ball& b) { return a.members == b.members; }),
                  out.balls.end());
  return out;
}

HasseDiagram::HasseDiagram(Ballean ballean)
    : ballean_(std::move(ballean)), adj_(ballean_.size() * ballean_.size(), false), out_(ballean_.size()), in_(ballean_.size()) {
  const std::size_t m = size();
  std::vector<bool> proper(m * m, false);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      const auto& ma = ballean_.balls[a].members;
      const auto& mb = ballean_.balls[b].members;
      proper[a * m + b] = ma.size() < mb.size() && std::includes(mb.begin(), mb.end(), ma.begin(), ma.end());
    }
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (!proper[a * m + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < m && cover; ++c) cover = !(proper[a * m + c] && proper[c * m + b]);
      if (!cover) continue;
      arcs_.emplace_back(a, b);
      adj_[a * m + b] = true;
      out_[a].push_back(b);
      in_[b].push_back(a);
    }
}

std::vector<std::size_t> HasseDiagram::levels() const {
  // Arcs always go to strictly larger balls and the ballean is sorted by
  // size, so index order is a topological order.
  std::vector<std::size_t> level(size(), 0);
  for (std::size_t v = 0; v < size(); ++v)
    for (auto w : out_[v]) level[w] = std::max(level[w], level[v] + 1);
  return level;
}

HasseDiagram hasse_diagram(const Ballean& ballean) { return HasseDiagram(ballean); }

bool verify_digraph_iso(const HasseDiagram& a, const HasseDiagram& b, const VertexMap& map) {
  if (a.size() != b.size() || map.size() != a.size() || a.arcs().size() != b.arcs().size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto v : map) {
    if (v >= b.size() || hit[v]) return false;
    hit[v] = true;
  }
  // Equal arc counts plus an injective arc image give the reverse direction.
  for (const auto& [u, v] : a.arcs())
    if (!b.has_arc(map[u], map[v])) return false;
  return true;
}

std::optional<HasseTree> as_rooted_tree(const HasseDiagram& h) {
  std::optional<std::size_t> top;
  for (std::size_t v = 0; v < h.size(); ++v) {
    if (h.outdegree(v) == 0) {
      if (top) return std::nullopt;
      top = v;
    } else if (h.outdegree(v) != 1) {
      return std::nullopt;
    }
  }
  if (!top) return std::nullopt;

  HasseTree out;
  out.tree.labeled = false;
  out.tree_index.assign(h.size(), 0);
  std::function<void(std::size_t, std::optional<std::size_t>, std::size_t)> visit =
      [&](std::size_t v, std::optional<std::size_t> parent, std::size_t depth) {
        const std::size_t self = out.tree.nodes.size();
        out.tree_index[v] = self;
        out.tree.nodes.push_back(FlatNode{parent, {}, Rational(0), std::nullopt, depth});
        if (parent) out.tree.nodes[*parent].children.push_back(self);
        for (auto c : h.in(v)) visit(c, self, depth + 1);
      };
  visit(*top, std::nullopt, 0);
  if (out.tree.size() != h.size()) return std::nullopt;
  return out;
}

namespace {

// Joint colour refinement over both diagrams so colours are comparable.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const HasseDiagram& a, const HasseDiagram& b) {
  using Signature = std::vector<std::size_t>;
  const auto la = a.levels();
  const auto lb = b.levels();

  auto initial = [](const HasseDiagram& h, const std::vector<std::size_t>& lv, std::size_t v) {
    return Signature{h.indegree(v), h.outdegree(v), lv[v]};
  };
  auto recolour = [](std::map<Signature, std::size_t>& ids, const Signature& sig) {
    return ids.emplace(sig, ids.size()).first->second;
  };

  std::map<Signature, std::size_t> ids;
  std::vector<std::size_t> ca(a.size()), cb(b.size());
  for (std::size_t v = 0; v < a.size(); ++v) ca[v] = recolour(ids, initial(a, la, v));
  for (std::size_t v = 0; v < b.size(); ++v) cb[v] = recolour(ids, initial(b, lb, v));
  std::size_t classes = ids.size();

  auto signature = [](const HasseDiagram& h, const std::vector<std::size_t>& c, std::size_t v) {
    Signature sig{c[v]};
    Signature up, down;
    for (auto w : h.out(v)) up.push_back(c[w]);
    for (auto w : h.in(v)) down.push_back(c[w]);
    std::sort(up.begin(), up.end());
    std::sort(down.begin(), down.end());
    sig.push_back(up.size());
    sig.insert(sig.end(), up.begin(), up.end());
    sig.insert(sig.end(), down.begin(), down.end());
    return sig;
  };

  while (true) {
    std::map<Signature, std::size_t> next_ids;
    std::vector<std::size_t> na(a.size()), nb(b.size());
    for (std::size_t v = 0; v < a.size(); ++v) na[v] = recolour(next_ids, signature(a, ca, v));
    for (std::size_t v = 0; v < b.size(); ++v) nb[v] = recolour(next_ids, signature(b, cb, v));
    ca = std::move(na);
    cb = std::move(nb);
    if (next_ids.size() == classes) break;
    classes = next_ids.size();
  }
  return {ca, cb};
}

}  // namespace

std::optional<VertexMap> hasse_digraph_iso_search(const HasseDiagram& a, const HasseDiagram& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.arcs().size() != b.arcs().size()) return std::nullopt;

  auto [ca, cb] = refine(a, b);
  std::map<std::size_t, std::vector<std::size_t>> class_a, class_b;
  for (std::size_t v = 0; v < n; ++v) class_a[ca[v]].push_back(v);
  for (std::size_t v = 0; v < n; ++v) class_b[cb[v]].push_back(v);
  if (class_a.size() != class_b.size()) return std::nullopt;
  for (const auto& [c, members] : class_a) {
    auto it = class_b.find(c);
    if (it == class_b.end() || it->second.size() != members.size()) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t u, std::size_t v) { return class_a[ca[u]].size() < class_a[ca[v]].size(); });

  VertexMap map(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t u = order[k];
    for (auto v : class_b[ca[u]]) {
      if (used[v]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const std::size_t w = order[j];
        ok = a.has_arc(u, w) == b.has_arc(v, map[w]) && a.has_arc(w, u) == b.has_arc(map[w], v);
      }
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (extend(k + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

std::optional<VertexMap> hasse_digraph_iso(const HasseDiagram& a, const HasseDiagram& b) {
  if (a.size() != b.size() || a.arcs().size() != b.arcs().size()) return std::nullopt;
  auto ta = as_rooted_tree(a);
  auto tb = as_rooted_tree(b);
  if (ta && tb) {
    auto nodes = rooted_tree_iso_map(ta->tree, tb->tree, false);
    if (!nodes) return std::nullopt;
    std::vector<std::size_t> vertex_of_b(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) vertex_of_b[tb->tree_index[v]] = v;
    VertexMap map(a.size());
    for (std::size_t v = 0; v < a.size(); ++v) map[v] = vertex_of_b[(*nodes)[ta->tree_index[v]]];
    if (!verify_digraph_iso(a, b, map)) throw Error(ErrorKind::VerificationFailed, "tree route produced a non-isomorphism");
    return map;
  }
  if (ta.has_value() != tb.has_value()) return std::nullopt;
  auto map = hasse_digraph_iso_search(a, b);
  if (map && !verify_digraph_iso(a, b, *map)) throw Error(ErrorKind::VerificationFailed, "search produced a non-isomorphism");
  return map;
}

std::string ball_text(const Space& space, const std::vector<std::size_t>& members) {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ",";
    s += space.point(members[i]);
  }
  return s + "}";
}

BallCheck verify_ball_preserving(const Space& x, const Space& y, const Ballean& bx, const Ballean& by, const PointMap& f) {
  if (x.size() != y.size() || !is_bijection(f, x.size()))
    throw Error(ErrorKind::NotABijection, "map is not a bijection between the point sets");
  PointMap inv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) inv[f[i]] = i;

  auto mapped = [](const std::vector<std::size_t>& members, const PointMap& g) {
    std::vector<std::size_t> out;
    out.reserve(members.size());
    for (auto m : members) out.push_back(g[m]);
    std::sort(out.begin(), out.end());
    return out;
  };
  for (const auto& ball : bx.balls) {
    auto img = mapped(ball.members, f);
    if (!by.find(img))
      return {false, "image of " + ball_text(x, ball.members) + " is " + ball_text(y, img) + ", not a ball of Y"};
  }
  for (const auto& ball : by.balls) {
    auto pre = mapped(ball.members, inv);
    if (!bx.find(pre))
      return {false, "preimage of " + ball_text(y, ball.members) + " is " + ball_text(x, pre) + ", not a ball of X"};
  }
  return {};
}

BallCheck verify_ball_preserving(const Space& x, const Space& y, const PointMap& f) {
  return verify_ball_preserving(x, y, enumerate_balls(x), enumerate_balls(y), f);
}

std::optional<PointMap> ball_preserving_bijection(const Space& x, const Space& y) {
  const HasseDiagram hx(enumerate_balls(x));
  const HasseDiagram hy(enumerate_balls(y));
  auto map = hasse_digraph_iso(hx, hy);
  if (!map) return std::nullopt;

  PointMap f(x.size(), 0);
  for (std::size_t v = 0; v < hx.size(); ++v) {
    if (hx.indegree(v) != 0) continue;
    const auto& from = hx.ballean().balls[v].members;
    const auto& to = hy.ballean().balls[(*map)[v]].members;
    if (from.size() != 1 || to.size() != 1)
      throw Error(ErrorKind::VerificationFailed, "zero-indegree vertex is not a one-point ball");
    f[from.front()] = to.front();
  }
  auto check = verify_ball_preserving(x, y, hx.ballean(), hy.ballean(), f);
  if (!check.ok) throw Error(ErrorKind::VerificationFailed, "extracted map is not ball-preserving: " + check.violation);
  return f;
}

}  // namespace umtk
