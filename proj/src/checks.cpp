#include "umtk/checks.hpp"

#include "umtk/ballean.hpp"
#include "umtk/classification.hpp"
#include "umtk/diametrical.hpp"
#include "umtk/generators.hpp"
#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/tree_canon.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

namespace umtk {

namespace {

struct Pair {
  Space x;
  Space y;
  bool ultrametric;
};

std::uint64_t derive(std::uint64_t seed, std::uint64_t suite, std::uint64_t trial) {
  // splitmix64 finaliser over the combined key
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (suite * 1000003ULL + trial + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t count_for(const CheckOptions& o, std::size_t fallback) { return o.trials.value_or(fallback); }
std::size_t cap_n(const CheckOptions& o, std::size_t fallback) {
  return std::max<std::size_t>(1, std::min(fallback, o.max_n.value_or(fallback)));
}
std::size_t pick_n(Rng& rng, std::size_t lo, std::size_t hi) {
  if (hi < lo) hi = lo;
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

const std::vector<Rational> kPool12{Rational(1), Rational(2)};
const std::vector<Rational> kPool123{Rational(1), Rational(2), Rational(3)};

Space ultra(std::uint64_t seed, std::size_t n, const std::string& prefix, std::vector<Rational> pool = {},
            ShapeClass shape = ShapeClass::Any, bool injective = false) {
  GenConfig c;
  c.seed = seed;
  c.n = n;
  c.pool = std::move(pool);
  c.shape = shape;
  c.injective = injective;
  c.prefix = prefix;
  return random_ultrametric(c);
}

Space semi(std::uint64_t seed, std::size_t n, const std::string& prefix, std::vector<Rational> pool) {
  GenConfig c;
  c.seed = seed;
  c.n = n;
  c.pool = std::move(pool);
  c.semimetric = true;
  c.prefix = prefix;
  return random_semimetric(c);
}

Space weakly_similar_image(Rng& rng, const Space& x) {
  return shuffled_copy(rng, rank_relabel(x, random_spectrum(rng, spectrum(x).size())), "y");
}

// Shuffled copy with one off-diagonal entry moved to another pool value.
Space perturbed_copy(Rng& rng, const Space& x, const std::vector<Rational>& pool) {
  Space y = shuffled_copy(rng, x, "y");
  if (y.size() < 2) return y;
  auto m = y.matrix();
  const std::size_t i = pick_n(rng, 0, y.size() - 1);
  std::size_t j = pick_n(rng, 0, y.size() - 2);
  if (j >= i) ++j;
  std::vector<Rational> others;
  for (const auto& v : pool)
    if (v != m[i][j]) others.push_back(v);
  m[i][j] = m[j][i] = others[pick_n(rng, 0, others.size() - 1)];
  return validate_semimetric(y.points(), std::move(m));
}

std::vector<Space> ultrametric_corpus(const CheckOptions& o) {
  std::vector<Space> out;
  const std::size_t count = count_for(o, 500);
  const std::size_t hi = cap_n(o, 12);
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(derive(o.seed, 1, t));
    const std::size_t n = pick_n(rng, 1, hi);
    static const ShapeClass shapes[] = {ShapeClass::Any, ShapeClass::Any, ShapeClass::RTilde, ShapeClass::R, ShapeClass::T};
    const ShapeClass shape = shapes[t % 5];
    const bool injective = t % 7 == 0;
    const bool small_pool = t % 3 == 0 && shape == ShapeClass::Any && !injective;
    out.push_back(ultra(rng(), n, "x", small_pool ? kPool123 : std::vector<Rational>{}, shape, injective));
  }
  return out;
}

std::vector<Pair> isometry_pairs(const CheckOptions& o) {
  std::vector<Pair> out;
  const std::size_t count = count_for(o, 200);
  const std::size_t hi = cap_n(o, 7);
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(derive(o.seed, 3, t));
    const std::size_t n = pick_n(rng, 1, hi);
    switch (t % 4) {
      case 0: {
        Space x = ultra(rng(), n, "x");
        out.push_back({x, shuffled_copy(rng, x, "y"), true});
        break;
      }
      case 1:
        out.push_back({ultra(rng(), n, "x", kPool123), ultra(rng(), n, "y", kPool123), true});
        break;
      case 2: {
        Space x = ultra(rng(), n, "x", kPool123);
        RepTree relabeled = random_labeling(rng, strip_labels(build_tree(x)), kPool123, false);
        out.push_back({x, shuffled_copy(rng, space_from_tree(relabeled), "y"), true});
        break;
      }
      default: {
        Space x = ultra(rng(), n, "x", kPool123);
        out.push_back({x, weakly_similar_image(rng, x), true});
        break;
      }
    }
  }
  return out;
}

std::vector<Pair> weak_sim_pairs(const CheckOptions& o) {
  std::vector<Pair> out;
  const std::size_t count = count_for(o, 200);
  const std::size_t hi = cap_n(o, 6);
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(derive(o.seed, 4, t));
    const std::size_t n = pick_n(rng, 1, hi);
    switch (t % 5) {
      case 0: {
        Space x = ultra(rng(), n, "x");
        out.push_back({x, weakly_similar_image(rng, x), true});
        break;
      }
      case 1: {
        Space x = semi(rng(), n, "x", kPool123);
        Space y = weakly_similar_image(rng, x);
        out.push_back({x, y, is_ultrametric(x)});
        break;
      }
      case 2:
        out.push_back({ultra(rng(), n, "x", kPool12), ultra(rng(), n, "y", kPool12), true});
        break;
      case 3: {
        Space x = semi(rng(), n, "x", kPool12);
        Space y = semi(rng(), n, "y", kPool12);
        out.push_back({x, y, is_ultrametric(x) && is_ultrametric(y)});
        break;
      }
      default: {
        Space x = semi(rng(), n, "x", kPool123);
        Space y = perturbed_copy(rng, x, kPool123);
        out.push_back({x, y, is_ultrametric(x) && is_ultrametric(y)});
        break;
      }
    }
  }
  return out;
}

std::vector<Pair> ball_pairs(const CheckOptions& o) {
  std::vector<Pair> out;
  const std::size_t count = count_for(o, 150);
  const std::size_t hi = cap_n(o, 6);
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng(derive(o.seed, 8, t));
    const std::size_t n = pick_n(rng, 1, hi);
    switch (t % 4) {
      case 0: {
        Space x = semi(rng(), n, "x", kPool123);
        out.push_back({x, weakly_similar_image(rng, x), false});
        break;
      }
      case 1:
        out.push_back({semi(rng(), n, "x", kPool12), semi(rng(), n, "y", kPool12), false});
        break;
      case 2: {
        Space x = semi(rng(), n, "x", kPool123);
        out.push_back({x, perturbed_copy(rng, x, kPool123), false});
        break;
      }
      default:
        out.push_back({ultra(rng(), n, "x", kPool123), ultra(rng(), n, "y", kPool123), true});
        break;
    }
  }
  return out;
}

// Direct pairwise re-check of f(d(a,b)) = rho(phi(a), phi(b)).
bool realizes(const Space& x, const Space& y, const WeakSimWitness& w) {
  if (w.phi.size() != x.size()) return false;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) {
      const Rational& dxy = x.d(a, b);
      auto it = std::find_if(w.scaling.begin(), w.scaling.end(), [&](const auto& p) { return p.first == dxy; });
      if (it == w.scaling.end() || it->second != y.d(w.phi[a], w.phi[b])) return false;
    }
  return true;
}

class Recorder {
 public:
  Recorder(SuiteResult& r) : r_(r) {}
  void trial() { ++r_.trials; }
  void positive() { ++r_.positives; }
  void fail(const std::string& what) {
    if (r_.failures++ == 0) r_.detail = what;
  }

 private:
  SuiteResult& r_;
};

std::string describe(const Space& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ";";
    for (std::size_t j = 0; j < s.size(); ++j) out += (j ? "," : "") + s.d(i, j).str();
  }
  return out + "]";
}

void suite_round_trip(const CheckOptions& o, Recorder& rec) {
  for (const auto& x : ultrametric_corpus(o)) {
    rec.trial();
    const Space back = space_from_tree(build_tree(x)).reordered(x.points());
    if (back != x) rec.fail("round trip changed " + describe(x));
  }
}

void suite_multipartite(const CheckOptions& o, Recorder& rec) {
  for (const auto& x : ultrametric_corpus(o)) {
    if (x.size() < 2) continue;
    rec.trial();
    const auto g = diametrical_graph(x);
    auto parts = multipartite_parts(g);
    if (!parts) {
      rec.fail("not multipartite: " + describe(x));
      continue;
    }
    if (rebuild_from_parts(g.vertices(), *parts) != g) rec.fail("rebuilt edges differ: " + describe(x));
  }
}

void suite_isometry(const CheckOptions& o, Recorder& rec) {
  for (const auto& p : isometry_pairs(o)) {
    rec.trial();
    auto fast = decide_isometry(p.x, p.y);
    auto oracle = oracle_isometry(p.x, p.y);
    const bool codes = canon_code_labeled(build_tree(p.x)) == canon_code_labeled(build_tree(p.y));
    if (fast.has_value() != oracle.has_value() || codes != oracle.has_value()) {
      rec.fail("disagreement on " + describe(p.x) + " vs " + describe(p.y));
      continue;
    }
    if (fast && !verify_isometry(p.x, p.y, fast->phi)) rec.fail("bad isometry witness");
    if (fast) rec.positive();
  }
}

void suite_weak_similarity(const CheckOptions& o, Recorder& rec) {
  for (const auto& p : weak_sim_pairs(o)) {
    rec.trial();
    auto fast = decide_weak_similarity(p.x, p.y);
    auto oracle = oracle_weak_similarity(p.x, p.y);
    if (fast.has_value() != oracle.has_value()) {
      rec.fail("disagreement on " + describe(p.x) + " vs " + describe(p.y));
      continue;
    }
    if (fast && !realizes(p.x, p.y, *fast)) rec.fail("witness fails f(d(x,y)) = rho(phi(x),phi(y))");
    if (oracle && !realizes(p.x, p.y, *oracle)) rec.fail("oracle witness fails re-check");
    if (p.ultrametric && is_ultrametric(p.y)) {
      auto tree_route = weak_sim_ultrametric_fast(p.x, p.y);
      if (tree_route.has_value() != fast.has_value()) rec.fail("tree route disagrees on " + describe(p.x));
    }
    if (fast) rec.positive();
  }
}

void suite_chain_class(const CheckOptions& o, Recorder& rec) {
  const std::size_t count = count_for(o, 100);
  const std::size_t hi = cap_n(o, 10);
  for (std::size_t t = 0; t < count; ++t) {
    rec.trial();
    Rng rng(derive(o.seed, 5, t));
    const std::size_t n = pick_n(rng, 1, hi);
    const Space x = ultra(rng(), n, "x", {}, t % 2 ? ShapeClass::R : ShapeClass::RTilde);
    if (!classify_space(x).in_R_tilde) {
      rec.fail("generator produced a space outside R~");
      continue;
    }
    const RepTree labeled = random_labeling(rng, strip_labels(build_tree(x)), {}, false);
    const Space y = shuffled_copy(rng, space_from_tree(labeled), "y");
    auto r = witness_from_unlabeled_iso(x, y);
    if (r.status != ShapeWitnessStatus::Witness || !r.witness || !realizes(x, y, *r.witness))
      rec.fail("forward direction failed on " + describe(x));
    else
      rec.positive();
  }

  std::size_t made = 0;
  if (cap_n(o, 10) < 4) return;  // every tree on at most 3 leaves is in R~
  for (std::size_t t = 0; made < count; ++t) {
    Rng rng(derive(o.seed, 50, t));
    const std::size_t n = pick_n(rng, 4, hi);
    const Space x = ultra(rng(), n, "x", t % 2 ? kPool123 : std::vector<Rational>{});
    if (classify_space(x).in_R_tilde) continue;
    ++made;
    rec.trial();
    auto y = adversarial_relabeling(x);
    if (!y) {
      rec.fail("adversarial relabeling inapplicable outside R~");
      continue;
    }
    const bool same_shape = canon_code_unlabeled(build_tree(x)) == canon_code_unlabeled(build_tree(*y));
    const bool sp_differs = spectrum(x).size() != spectrum(*y).size();
    if (!same_shape || !sp_differs || decide_weak_similarity(x, *y))
      rec.fail("converse direction failed on " + describe(x));
  }
}

void suite_injective_fan(const CheckOptions& o, Recorder& rec) {
  const std::size_t count = count_for(o, 100);
  const std::size_t hi = cap_n(o, 10);
  for (std::size_t t = 0; t < count; ++t) {
    rec.trial();
    Rng rng(derive(o.seed, 6, t));
    const std::size_t n = pick_n(rng, 1, hi);
    const RepTree shape = random_shape(rng, n, ShapeClass::T, "x");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
    const Space x = space_from_tree(random_labeling(rng, shape, {}, true)).reordered(names);
    const Space y = shuffled_copy(rng, space_from_tree(random_labeling(rng, shape, {}, true)), "y");
    const auto cx = classify_space(x);
    const auto cy = classify_space(y);
    if (!(cx.in_D && cx.in_T && cy.in_D && cy.in_T)) {
      rec.fail("generated pair is not in D∩T");
      continue;
    }
    auto r = witness_from_unlabeled_iso(x, y);
    auto cross = decide_weak_similarity(x, y);
    if (r.status != ShapeWitnessStatus::Witness || !r.witness || !realizes(x, y, *r.witness) || !cross ||
        cross->scaling != r.witness->scaling)
      rec.fail("D∩T construction failed on " + describe(x) + " vs " + describe(y));
    else
      rec.positive();
  }
}

void suite_hasse_from_similarity(const CheckOptions& o, Recorder& rec) {
  for (const auto& p : weak_sim_pairs(o)) {
    auto w = decide_weak_similarity(p.x, p.y);
    if (!w) continue;
    rec.trial();
    rec.positive();
    if (!hasse_digraph_iso(hasse_diagram(enumerate_balls(p.x)), hasse_diagram(enumerate_balls(p.y))))
      rec.fail("weakly similar spaces with non-isomorphic Hasse diagrams: " + describe(p.x));
  }
}

void suite_ball_preserving(const CheckOptions& o, Recorder& rec) {
  for (const auto& p : ball_pairs(o)) {
    rec.trial();
    auto fast = ball_preserving_bijection(p.x, p.y);
    auto oracle = oracle_ball_preserving(p.x, p.y);
    auto diagram = hasse_digraph_iso(hasse_diagram(enumerate_balls(p.x)), hasse_diagram(enumerate_balls(p.y)));
    if (fast.has_value() != oracle.has_value() || diagram.has_value() != fast.has_value()) {
      rec.fail("disagreement on " + describe(p.x) + " vs " + describe(p.y));
      continue;
    }
    if (fast && !verify_ball_preserving(p.x, p.y, *fast).ok) rec.fail("extracted bijection is not ball-preserving");
    if (fast) rec.positive();
  }
}

void suite_ball_consequences(const CheckOptions& o, Recorder& rec) {
  for (const auto& p : weak_sim_pairs(o)) {
    auto w = decide_weak_similarity(p.x, p.y);
    if (!w) continue;
    rec.trial();
    if (!verify_ball_preserving(p.x, p.y, w->phi).ok) rec.fail("weak similarity is not ball-preserving: " + describe(p.x));
  }
  for (const auto& p : isometry_pairs(o)) {
    rec.trial();
    const bool shapes = canon_code_unlabeled(build_tree(p.x)) == canon_code_unlabeled(build_tree(p.y));
    const bool bp = ball_preserving_bijection(p.x, p.y).has_value();
    if (shapes != bp) rec.fail("shape equality and ball-preserving existence disagree on " + describe(p.x));
    if (bp) rec.positive();
  }
}

void suite_hasse_tree(const CheckOptions& o, Recorder& rec) {
  for (const auto& x : ultrametric_corpus(o)) {
    rec.trial();
    const HasseDiagram h = hasse_diagram(enumerate_balls(x));
    auto t = as_rooted_tree(h);
    if (!t) {
      rec.fail("Hasse diagram of an ultrametric space is not a tree: " + describe(x));
      continue;
    }
    std::size_t root = 0;
    while (t->tree_index[root] != 0) ++root;
    if (h.ballean().balls[root].members.size() != x.size()) rec.fail("tree root is not the whole space");
  }

  rec.trial();
  const Space s3 = validate_semimetric({"a", "b", "c"}, {{0, 1, 3}, {1, 0, 1}, {3, 1, 0}});
  const HasseDiagram h = hasse_diagram(enumerate_balls(s3));
  auto b = h.ballean().find({1});
  if (as_rooted_tree(h) || !b || h.outdegree(*b) != 2) rec.fail("S3 was not certified as a non-tree");
}

struct SuiteDef {
  const char* name;
  double limit;
  void (*run)(const CheckOptions&, Recorder&);
};

const SuiteDef kSuites[kSuiteCount] = {
    {"round trip space -> tree -> space", 5.0, suite_round_trip},
    {"diametrical graph is complete multipartite", 0.0, suite_multipartite},
    {"isometry iff labeled tree isomorphism", 30.0, suite_isometry},
    {"weak similarity vs exhaustive oracle", 30.0, suite_weak_similarity},
    {"R~ characterisation (both directions)", 10.0, suite_chain_class},
    {"D∩T shape isomorphism gives weak similarity", 10.0, suite_injective_fan},
    {"weak similarity preserves Hasse diagram", 0.0, suite_hasse_from_similarity},
    {"Hasse isomorphism iff ball-preserving bijection", 60.0, suite_ball_preserving},
    {"weak similarities preserve balls; ultrametric shapes", 0.0, suite_ball_consequences},
    {"ultrametric Hasse diagrams are rooted trees", 0.0, suite_hasse_tree},
};

}  // namespace

SuiteResult run_suite(int id, const CheckOptions& options) {
  if (id < 1 || id > kSuiteCount) throw Error(ErrorKind::Parse, "no suite " + std::to_string(id));
  const SuiteDef& def = kSuites[id - 1];
  SuiteResult r;
  r.id = id;
  r.name = def.name;
  r.time_limit = def.limit;
  Recorder rec(r);
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(options, rec);
  } catch (const std::exception& e) {
    rec.fail(std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<SuiteResult> run_all_suites(const CheckOptions& options) {
  std::vector<SuiteResult> out;
  for (int id = 1; id <= kSuiteCount; ++id) out.push_back(run_suite(id, options));
  return out;
}

std::string format_result(const SuiteResult& r) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%zu trials, %zu positive, %zu failures, %.2f s", r.trials, r.positives, r.failures, r.seconds);
  std::string line = std::string(r.passed() ? "[PASS] " : "[FAIL] ") + std::to_string(r.id) + " " + r.name + ": " + buf;
  if (r.time_limit > 0) {
    std::snprintf(buf, sizeof buf, " (limit %.0f s)", r.time_limit);
    line += buf;
  }
  if (!r.correct()) line += " -- " + r.detail;
  else if (!r.in_time()) line += " -- over time budget";
  return line;
}

}  // namespace umtk
