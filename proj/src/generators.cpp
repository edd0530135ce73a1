#include "umtk/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>

namespace umtk {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

RepNode leaf(std::string name) { return RepNode{Rational(0), {}, std::move(name)}; }

RepNode random_partition(Rng& rng, std::vector<std::string> names) {
  if (names.size() == 1) return leaf(std::move(names.front()));
  const std::size_t k = uniform(rng, 2, std::min<std::size_t>(names.size(), 4));
  std::shuffle(names.begin(), names.end(), rng);
  std::vector<std::vector<std::string>> groups(k);
  for (std::size_t i = 0; i < names.size(); ++i) groups[i < k ? i : uniform(rng, 0, k - 1)].push_back(std::move(names[i]));
  RepNode node;
  for (auto& g : groups) node.children.push_back(random_partition(rng, std::move(g)));
  return node;
}

// Chain of inner nodes; each non-final link keeps `leaves` leaf children.
RepNode chain(Rng& rng, std::vector<std::string>& names, std::size_t from, bool binary) {
  const std::size_t left = names.size() - from;
  RepNode node;
  const bool last = left == 2 || (!binary && (left <= 3 || uniform(rng, 0, 3) == 0));
  if (last) {
    for (std::size_t i = from; i < names.size(); ++i) node.children.push_back(leaf(names[i]));
    return node;
  }
  const std::size_t leaves = binary ? 1 : uniform(rng, 1, left - 2);
  for (std::size_t i = 0; i < leaves; ++i) node.children.push_back(leaf(names[from + i]));
  node.children.push_back(chain(rng, names, from + leaves, binary));
  return node;
}

RepNode fan_shape(Rng& rng, std::vector<std::string>& names) {
  const std::size_t n = names.size();
  const std::size_t fanout = uniform(rng, 2, std::max<std::size_t>(2, std::min<std::size_t>(n, 4)));
  const std::size_t fans = uniform(rng, 1, n / fanout);
  std::size_t rest = n - fans * fanout;
  std::size_t next = 0;

  RepNode bottom;
  for (std::size_t f = 0; f < fans; ++f) {
    RepNode inner;
    for (std::size_t c = 0; c < fanout; ++c) inner.children.push_back(leaf(names[next++]));
    bottom.children.push_back(std::move(inner));
  }
  // Split the remaining leaves between the fan node and the chain above it;
  // every chain link needs at least one leaf of its own.
  const std::size_t on_fan = rest == 0 ? 0 : uniform(rng, 0, rest);
  for (std::size_t i = 0; i < on_fan; ++i) bottom.children.push_back(leaf(names[next++]));
  rest -= on_fan;
  if (bottom.children.size() == 1) bottom = std::move(bottom.children.front());

  RepNode current = std::move(bottom);
  while (rest > 0) {
    const std::size_t here = uniform(rng, 1, rest);
    RepNode link;
    for (std::size_t i = 0; i < here; ++i) link.children.push_back(leaf(names[next++]));
    link.children.push_back(std::move(current));
    current = std::move(link);
    rest -= here;
  }
  return current;
}

void inner_postorder(RepNode& node, std::vector<RepNode*>& out) {
  for (auto& c : node.children) inner_postorder(c, out);
  if (!node.is_leaf()) out.push_back(&node);
}

Rational max_inner_child(const RepNode& node) {
  Rational m(0);
  for (const auto& c : node.children) m = std::max(m, c.label);
  return m;
}

}  // namespace

void apply_class_name(GenConfig& config, std::string_view name) {
  if (name == "any") {
    config.shape = ShapeClass::Any;
  } else if (name == "R") {
    config.shape = ShapeClass::R;
  } else if (name == "Rtilde") {
    config.shape = ShapeClass::RTilde;
  } else if (name == "D") {
    config.shape = ShapeClass::Any;
    config.injective = true;
  } else if (name == "T") {
    config.shape = ShapeClass::T;
  } else {
    throw Error(ErrorKind::Parse, "unknown class '" + std::string(name) + "' (expected R, Rtilde, D, T or any)");
  }
}

RepTree random_shape(Rng& rng, std::size_t n, ShapeClass shape, const std::string& prefix) {
  if (n == 0) throw Error(ErrorKind::EmptySpace, "cannot generate an empty space");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(prefix + std::to_string(i));
  std::shuffle(names.begin(), names.end(), rng);
  if (n == 1) return RepTree{leaf(names.front()), false};

  RepNode root;
  switch (shape) {
    case ShapeClass::Any: root = random_partition(rng, names); break;
    case ShapeClass::R: root = chain(rng, names, 0, true); break;
    case ShapeClass::RTilde: root = chain(rng, names, 0, false); break;
    case ShapeClass::T: root = fan_shape(rng, names); break;
  }
  return RepTree{std::move(root), false};
}

RepTree random_labeling(Rng& rng, const RepTree& shape, const std::vector<Rational>& pool, bool injective) {
  RepTree out = shape;
  out.labeled = true;
  std::vector<RepNode*> inner;
  inner_postorder(out.root, inner);

  std::vector<Rational> sorted_pool = pool;
  std::sort(sorted_pool.begin(), sorted_pool.end());
  sorted_pool.erase(std::unique(sorted_pool.begin(), sorted_pool.end()), sorted_pool.end());
  sorted_pool.erase(std::remove_if(sorted_pool.begin(), sorted_pool.end(), [](const Rational& r) { return !(r > Rational(0)); }),
                    sorted_pool.end());

  if (!injective) {
    // Inner ancestors of each inner node; each one needs its own larger value.
    std::map<const RepNode*, std::size_t> above;
    std::function<void(const RepNode&, std::size_t)> walk = [&](const RepNode& node, std::size_t k) {
      if (node.is_leaf()) return;
      above[&node] = k;
      for (const auto& c : node.children) walk(c, k + 1);
    };
    walk(out.root, 0);
    for (RepNode* node : inner) {
      const Rational floor = max_inner_child(*node);
      if (sorted_pool.empty()) {
        node->label = floor + Rational(static_cast<std::int64_t>(uniform(rng, 1, 2)));
        continue;
      }
      const auto lo = static_cast<std::size_t>(std::upper_bound(sorted_pool.begin(), sorted_pool.end(), floor) -
                                               sorted_pool.begin());
      const std::size_t need = above[node];
      if (lo + need >= sorted_pool.size())
        throw Error(ErrorKind::InfeasibleConstraints, "pool has " + std::to_string(sorted_pool.size()) +
                                                          " values, tree needs a chain of " +
                                                          std::to_string(lo + need + 1));
      const std::size_t hi = std::min(sorted_pool.size() - 1 - need, lo + 1);
      node->label = sorted_pool[uniform(rng, lo, hi)];
    }
    return out;
  }

  // Random linear extension of "child before parent", then increasing values.
  if (!sorted_pool.empty() && sorted_pool.size() < inner.size())
    throw Error(ErrorKind::InfeasibleConstraints, "pool has " + std::to_string(sorted_pool.size()) + " values for " +
                                                      std::to_string(inner.size()) + " distinct labels");
  std::vector<RepNode*> ready, order;
  std::map<RepNode*, std::size_t> waiting;
  std::map<RepNode*, RepNode*> parent;
  for (RepNode* node : inner) {
    std::size_t inner_kids = 0;
    for (auto& c : node->children)
      if (!c.is_leaf()) {
        ++inner_kids;
        parent[&c] = node;
      }
    waiting[node] = inner_kids;
    if (inner_kids == 0) ready.push_back(node);
  }
  while (!ready.empty()) {
    const std::size_t pick = uniform(rng, 0, ready.size() - 1);
    RepNode* node = ready[pick];
    ready.erase(ready.begin() + static_cast<std::ptrdiff_t>(pick));
    order.push_back(node);
    if (auto p = parent.find(node); p != parent.end() && --waiting[p->second] == 0) ready.push_back(p->second);
  }
  Rational value(0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (sorted_pool.empty()) {
      value = value + Rational(static_cast<std::int64_t>(uniform(rng, 1, 3)));
      order[i]->label = value;
    } else {
      order[i]->label = sorted_pool[i];
    }
  }
  return out;
}

Space random_ultrametric(const GenConfig& config) {
  Rng rng(config.seed);
  // A finite pool cannot label every shape; redraw a bounded number of times.
  std::optional<RepTree> tree;
  for (int attempt = 0; !tree; ++attempt) {
    RepTree shape = random_shape(rng, config.n, config.shape, config.prefix);
    try {
      tree = random_labeling(rng, shape, config.pool, config.injective);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::InfeasibleConstraints || attempt >= 200) throw;
    }
  }
  // Point order prefix1..prefixN regardless of leaf positions.
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= config.n; ++i) names.push_back(config.prefix + std::to_string(i));
  return space_from_tree(*tree).reordered(names);
}

Space random_semimetric(const GenConfig& config) {
  if (config.n == 0) throw Error(ErrorKind::EmptySpace, "cannot generate an empty space");
  Rng rng(config.seed);
  std::vector<Rational> pool = config.pool;
  if (pool.empty()) pool = {Rational(1), Rational(2), Rational(3)};
  const std::size_t n = config.n;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(config.prefix + std::to_string(i));
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = m[j][i] = pool[uniform(rng, 0, pool.size() - 1)];
  return validate_semimetric(std::move(names), std::move(m));
}

Space generate(const GenConfig& config) {
  return config.semimetric ? random_semimetric(config) : random_ultrametric(config);
}

Space shuffled_copy(Rng& rng, const Space& space, const std::string& prefix) {
  std::vector<std::string> order = space.points();
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= space.size(); ++i) names.push_back(prefix + std::to_string(i));
  return space.reordered(order).renamed(std::move(names));
}

Spectrum random_spectrum(Rng& rng, std::size_t size) {
  static const Rational gaps[] = {Rational(1), Rational(2), Rational(3), Rational(1, 2), Rational(7, 3)};
  Spectrum sp;
  Rational value(0);
  for (std::size_t k = 0; k < size; ++k) {
    if (k > 0) value = value + gaps[uniform(rng, 0, std::size(gaps) - 1)];
    sp.values.push_back(value);
  }
  return sp;
}

std::optional<IsometryWitness> oracle_isometry(const Space& x, const Space& y) {
  if (x.size() > kOracleIsometryLimit || y.size() > kOracleIsometryLimit)
    throw Error(ErrorKind::TooLarge, "isometry oracle is limited to " + std::to_string(kOracleIsometryLimit) + " points");
  if (x.size() != y.size()) return std::nullopt;
  const std::size_t n = x.size();
  PointMap perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = a + 1; b < n && ok; ++b) ok = x.d(a, b) == y.d(perm[a], perm[b]);
    if (ok) return IsometryWitness{perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::optional<WeakSimWitness> oracle_weak_similarity(const Space& x, const Space& y) {
  if (x.size() > kOracleIsometryLimit || y.size() > kOracleIsometryLimit)
    throw Error(ErrorKind::TooLarge, "weak similarity oracle is limited to " + std::to_string(kOracleIsometryLimit) + " points");
  if (x.size() != y.size()) return std::nullopt;
  const Spectrum sx = spectrum(x);
  const Spectrum sy = spectrum(y);
  if (sx.size() != sy.size()) return std::nullopt;

  auto m = x.matrix();
  for (auto& row : m)
    for (auto& v : row) {
      const auto k = static_cast<std::size_t>(std::find(sx.values.begin(), sx.values.end(), v) - sx.values.begin());
      v = sy.values[k];
    }
  auto iso = oracle_isometry(validate_semimetric(x.points(), std::move(m)), y);
  if (!iso) return std::nullopt;
  WeakSimWitness w;
  for (std::size_t k = 0; k < sx.size(); ++k) w.scaling.emplace_back(sx.values[k], sy.values[k]);
  w.phi = std::move(iso->phi);
  return w;
}

std::optional<PointMap> oracle_ball_preserving(const Space& x, const Space& y) {
  if (x.size() > kOracleBallLimit || y.size() > kOracleBallLimit)
    throw Error(ErrorKind::TooLarge, "ball-preserving oracle is limited to " + std::to_string(kOracleBallLimit) + " points");
  if (x.size() != y.size()) return std::nullopt;
  const Ballean bx = enumerate_balls(x);
  const Ballean by = enumerate_balls(y);
  PointMap perm(x.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (verify_ball_preserving(x, y, bx, by, perm).ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace umtk
