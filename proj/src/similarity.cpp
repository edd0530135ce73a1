#include "umtk/similarity.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace umtk {

std::optional<Scaling> forced_scaling(const Space& x, const Space& y) {
  const Spectrum sx = spectrum(x);
  const Spectrum sy = spectrum(y);
  if (sx.size() != sy.size()) return std::nullopt;
  Scaling f;
  f.reserve(sx.size());
  for (std::size_t k = 0; k < sx.size(); ++k) f.emplace_back(sx.values[k], sy.values[k]);
  return f;
}

bool is_bijection(const PointMap& phi, std::size_t n) {
  if (phi.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (auto v : phi) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

bool verify_isometry(const Space& x, const Space& y, const PointMap& phi) {
  if (x.size() != y.size() || !is_bijection(phi, x.size())) return false;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (x.d(a, b) != y.d(phi[a], phi[b])) return false;
  return true;
}

bool verify_weak_similarity(const Space& x, const Space& y, const WeakSimWitness& w) {
  if (x.size() != y.size() || !is_bijection(w.phi, x.size())) return false;
  const Spectrum sx = spectrum(x);
  const Spectrum sy = spectrum(y);
  if (w.scaling.size() != sx.size() || sx.size() != sy.size()) return false;
  for (std::size_t k = 0; k < w.scaling.size(); ++k) {
    if (w.scaling[k].first != sx.values[k] || w.scaling[k].second != sy.values[k]) return false;
    if (k > 0 && !(w.scaling[k - 1].second < w.scaling[k].second)) return false;
  }
  if (!w.scaling.front().second.is_zero()) return false;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (w.scaling[*sx.rank_of(x.d(a, b))].second != y.d(w.phi[a], w.phi[b])) return false;
  return true;
}

PointMap leaf_point_map(const FlatTree& tx, const FlatTree& ty, const NodeMap& map, const Space& x, const Space& y) {
  PointMap phi(x.size(), 0);
  for (std::size_t u = 0; u < tx.size(); ++u) {
    if (!tx.nodes[u].is_leaf()) continue;
    const auto& img = ty.nodes[map[u]];
    auto i = x.index_of(*tx.nodes[u].point);
    auto j = y.index_of(*img.point);
    if (!i || !j) throw Error(ErrorKind::UnknownPoint, "tree leaf does not belong to its space");
    phi[*i] = *j;
  }
  return phi;
}

std::optional<IsometryWitness> isometry_by_trees(const Space& x, const Space& y) {
  if (x.size() != y.size()) return std::nullopt;
  const FlatTree tx = flatten(build_tree(x));
  const FlatTree ty = flatten(build_tree(y));
  if (canon_code_labeled(tx) != canon_code_labeled(ty)) return std::nullopt;
  auto map = rooted_tree_iso_map(tx, ty, true);
  if (!map) return std::nullopt;
  return IsometryWitness{leaf_point_map(tx, ty, *map, x, y)};
}

std::optional<IsometryWitness> isometry_by_search(const Space& x, const Space& y) {
  const std::size_t n = x.size();
  if (n != y.size()) return std::nullopt;
  if (spectrum(x) != spectrum(y)) return std::nullopt;

  auto sorted_row = [](const Space& s, std::size_t i) {
    std::vector<Rational> row;
    row.reserve(s.size());
    for (std::size_t j = 0; j < s.size(); ++j) row.push_back(s.d(i, j));
    std::sort(row.begin(), row.end());
    return row;
  };
  std::vector<std::vector<Rational>> rx(n), ry(n);
  for (std::size_t i = 0; i < n; ++i) {
    rx[i] = sorted_row(x, i);
    ry[i] = sorted_row(y, i);
  }

  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      if (rx[i] == ry[j]) candidates[i].push_back(j);
    if (candidates[i].empty()) return std::nullopt;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return candidates[a].size() < candidates[b].size(); });

  PointMap phi(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) return true;
    const std::size_t a = order[k];
    for (auto c : candidates[a]) {
      if (used[c]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) ok = x.d(a, order[j]) == y.d(c, phi[order[j]]);
      if (!ok) continue;
      phi[a] = c;
      used[c] = true;
      if (extend(k + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return IsometryWitness{phi};
}

std::optional<IsometryWitness> decide_isometry(const Space& x, const Space& y) {
  if (x.size() != y.size()) return std::nullopt;
  auto w = (is_ultrametric(x) && is_ultrametric(y)) ? isometry_by_trees(x, y) : isometry_by_search(x, y);
  if (w && !verify_isometry(x, y, w->phi))
    throw Error(ErrorKind::VerificationFailed, "isometry witness does not preserve distances");
  return w;
}

std::optional<WeakSimWitness> decide_weak_similarity(const Space& x, const Space& y) {
  auto f = forced_scaling(x, y);
  if (!f || x.size() != y.size()) return std::nullopt;
  auto iso = decide_isometry(rank_relabel(x, spectrum(y)), y);
  if (!iso) return std::nullopt;
  WeakSimWitness w{std::move(*f), std::move(iso->phi)};
  if (!verify_weak_similarity(x, y, w))
    throw Error(ErrorKind::VerificationFailed, "weak similarity witness fails f(d(x,y)) = rho(phi(x), phi(y))");
  return w;
}

RepTree apply_scaling(const RepTree& tree, const Scaling& scaling) {
  std::map<Rational, Rational> f(scaling.begin(), scaling.end());
  RepTree out = tree;
  std::function<void(RepNode&)> visit = [&](RepNode& node) {
    auto it = f.find(node.label);
    if (it == f.end()) throw Error(ErrorKind::SpectrumSizeMismatch, "label " + node.label.str() + " outside the scaling domain");
    node.label = it->second;
    for (auto& c : node.children) visit(c);
  };
  visit(out.root);
  return out;
}

std::optional<WeakSimWitness> weak_sim_ultrametric_fast(const Space& x, const Space& y) {
  for (const Space* s : {&x, &y})
    if (!is_ultrametric(*s)) throw Error(ErrorKind::NotUltrametric, "fast weak-similarity test needs ultrametric inputs");
  if (x.size() != y.size()) return std::nullopt;
  auto f = forced_scaling(x, y);
  if (!f) return std::nullopt;

  const FlatTree tx = flatten(apply_scaling(build_tree(x), *f));
  const FlatTree ty = flatten(build_tree(y));
  auto map = rooted_tree_iso_map(tx, ty, true);
  if (!map) return std::nullopt;
  WeakSimWitness w{std::move(*f), leaf_point_map(tx, ty, *map, x, y)};
  if (!verify_weak_similarity(x, y, w))
    throw Error(ErrorKind::VerificationFailed, "tree-derived weak similarity witness fails verification");
  return w;
}

WeakSimWitness identity_witness(const Space& x) {
  WeakSimWitness w;
  for (const auto& v : spectrum(x).values) w.scaling.emplace_back(v, v);
  w.phi.resize(x.size());
  std::iota(w.phi.begin(), w.phi.end(), 0);
  return w;
}

WeakSimWitness inverse(const WeakSimWitness& w) {
  WeakSimWitness out;
  for (const auto& [a, b] : w.scaling) out.scaling.emplace_back(b, a);
  out.phi.resize(w.phi.size());
  for (std::size_t i = 0; i < w.phi.size(); ++i) out.phi[w.phi[i]] = i;
  return out;
}

WeakSimWitness compose(const WeakSimWitness& xy, const WeakSimWitness& yz) {
  if (xy.scaling.size() != yz.scaling.size() || xy.phi.size() != yz.phi.size())
    throw Error(ErrorKind::SpectrumSizeMismatch, "witnesses do not compose");
  WeakSimWitness out;
  for (std::size_t k = 0; k < xy.scaling.size(); ++k) out.scaling.emplace_back(xy.scaling[k].first, yz.scaling[k].second);
  out.phi.resize(xy.phi.size());
  for (std::size_t i = 0; i < xy.phi.size(); ++i) out.phi[i] = yz.phi[xy.phi[i]];
  return out;
}

}  // namespace umtk
