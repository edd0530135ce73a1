#include "support.hpp"

#include "oracles.hpp"
#include "umtk/rep_tree.hpp"
#include "umtk/similarity.hpp"
#include "umtk/tree_canon.hpp"

using namespace umtk;

namespace {

std::map<std::string, std::string> named(const Space& x, const Space& y, const PointMap& phi) {
  std::map<std::string, std::string> out;
  for (std::size_t i = 0; i < phi.size(); ++i) out[x.point(i)] = y.point(phi[i]);
  return out;
}

Scaling scaling_of(std::initializer_list<std::pair<int, int>> pairs) {
  Scaling s;
  for (auto [a, b] : pairs) s.emplace_back(Rational(a), Rational(b));
  return s;
}

// A pair that is weakly similar about half of the time.
std::pair<Space, Space> random_pair(std::uint64_t seed, std::size_t n, bool ultra) {
  Rng rng(seed * 7919 + 1);
  auto make = [&](std::uint64_t s) {
    return ultra ? fx::random_ultra(s, n, ShapeClass::Any, fx::pool123()) : fx::random_semi(s, n, {Rational(1), Rational(2)});
  };
  const Space x = make(seed);
  switch (seed % 3) {
    case 0: return {x, shuffled_copy(rng, x, "y")};
    case 1: return {x, shuffled_copy(rng, rank_relabel(x, random_spectrum(rng, spectrum(x).size())), "y")};
    default: return {x, make(seed + 100000).renamed([&] {
                       std::vector<std::string> v;
                       for (std::size_t i = 1; i <= n; ++i) v.push_back("y" + std::to_string(i));
                       return v;
                     }())};
  }
}

}  // namespace

TEST_CASE("forced scaling") {
  CHECK(forced_scaling(fx::X3(), fx::Y3()) == scaling_of({{0, 0}, {1, 10}, {2, 20}}));
  CHECK_FALSE(forced_scaling(fx::X3(), fx::X4()).has_value());
  CHECK(forced_scaling(fx::X3(), fx::X3()) == scaling_of({{0, 0}, {1, 1}, {2, 2}}));
}

TEST_CASE("isometry examples") {
  const Space renamed = fx::X3().renamed({"p1", "q1", "r1"});
  auto w = decide_isometry(fx::X3(), renamed);
  REQUIRE(w.has_value());
  CHECK(named(fx::X3(), renamed, w->phi) ==
        std::map<std::string, std::string>{{"p", "p1"}, {"q", "q1"}, {"r", "r1"}});
  CHECK_FALSE(decide_isometry(fx::X3(), fx::Y3()).has_value());
  CHECK_FALSE(decide_isometry(fx::X3(), fx::X4()).has_value());

  auto s = decide_isometry(fx::S3(), fx::S3b());
  REQUIRE(s.has_value());
  CHECK(named(fx::S3(), fx::S3b(), s->phi).at("b") == "w");
  CHECK(verify_isometry(fx::S3(), fx::S3b(), s->phi));
}

TEST_CASE("both isometry routes agree on ultrametric pairs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    auto [x, y] = random_pair(seed, 1 + seed % 7, true);
    CHECK(isometry_by_trees(x, y).has_value() == isometry_by_search(x, y).has_value());
  }
}

TEST_CASE("weak similarity examples") {
  auto w = decide_weak_similarity(fx::X3(), fx::Y3());
  REQUIRE(w.has_value());
  CHECK(w->scaling == scaling_of({{0, 0}, {1, 10}, {2, 20}}));
  CHECK(named(fx::X3(), fx::Y3(), w->phi) == std::map<std::string, std::string>{{"p", "p"}, {"q", "q"}, {"r", "r"}});
  CHECK_FALSE(decide_weak_similarity(fx::X3(), fx::X4()).has_value());
  for (const Space& x : {fx::one(), fx::X3(), fx::S3(), fx::X4()}) {
    auto self = decide_weak_similarity(x, x);
    REQUIRE(self.has_value());
    CHECK(verify_weak_similarity(x, x, *self));
  }
  // Not an isometry, yet weakly similar.
  CHECK(decide_weak_similarity(fx::S3(), rank_relabel(fx::S3b(), Spectrum{{0, Rational(1, 2), 9}})).has_value());
}

TEST_CASE("fast ultrametric route") {
  auto w = weak_sim_ultrametric_fast(fx::X3(), fx::Y3());
  REQUIRE(w.has_value());
  CHECK(verify_weak_similarity(fx::X3(), fx::Y3(), *w));
  CHECK(w->scaling == decide_weak_similarity(fx::X3(), fx::Y3())->scaling);

  auto s = weak_sim_ultrametric_fast(fx::X4(), fx::X4swap());
  REQUIRE(s.has_value());
  const auto m = named(fx::X4(), fx::X4swap(), s->phi);
  CHECK(std::set<std::string>{m.at("a"), m.at("b")} == std::set<std::string>{"c", "d"});
  CHECK(oracle_weak_similarity(fx::X4(), fx::X4swap()).has_value());

  CHECK_FALSE(weak_sim_ultrametric_fast(fx::X3(), fx::X4()).has_value());
  CHECK_KIND(weak_sim_ultrametric_fast(fx::S3(), fx::S3()), ErrorKind::NotUltrametric);
}

TEST_CASE("verification rejects broken witnesses") {
  const Space x = fx::X3();
  const Space y = fx::Y3();
  WeakSimWitness good = *decide_weak_similarity(x, y);
  CHECK(verify_weak_similarity(x, y, good));

  WeakSimWitness bad_phi = good;
  std::swap(bad_phi.phi[0], bad_phi.phi[1]);
  CHECK_FALSE(verify_weak_similarity(x, y, bad_phi));

  WeakSimWitness not_bijective = good;
  not_bijective.phi[0] = not_bijective.phi[1];
  CHECK_FALSE(verify_weak_similarity(x, y, not_bijective));

  WeakSimWitness decreasing = good;
  decreasing.scaling = scaling_of({{0, 0}, {1, 20}, {2, 10}});
  CHECK_FALSE(verify_weak_similarity(x, y, decreasing));

  WeakSimWitness short_scaling = good;
  short_scaling.scaling.pop_back();
  CHECK_FALSE(verify_weak_similarity(x, y, short_scaling));

  CHECK_FALSE(verify_isometry(x, x, PointMap{1, 0, 2}));
  CHECK(verify_isometry(x, x, PointMap{0, 2, 1}));
  CHECK_FALSE(is_bijection(PointMap{0, 0, 1}, 3));
  CHECK_FALSE(is_bijection(PointMap{0, 1, 3}, 3));
  CHECK(is_bijection(PointMap{2, 0, 1}, 3));
}

TEST_CASE("decisions agree with brute force") {
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    CAPTURE(seed);
    const bool ultra = seed % 2 == 0;
    auto [x, y] = random_pair(seed, 1 + seed % 6, ultra);
    const bool iso = ref::isometry(x, y).has_value();
    const bool ws = ref::weak_similarity(x, y).has_value();
    auto wi = decide_isometry(x, y);
    auto ww = decide_weak_similarity(x, y);
    CHECK(wi.has_value() == iso);
    CHECK(ww.has_value() == ws);
    if (wi) CHECK(ref::isometric_under(x, y, wi->phi));
    if (ww) {
      CHECK(ref::weakly_similar_under(x, y, ww->phi));
      CHECK(verify_weak_similarity(x, y, *ww));
    }
    if (ultra) {
      CHECK(weak_sim_ultrametric_fast(x, y).has_value() == ws);
      CHECK(iso == (canon_code_labeled(build_tree(x)) == canon_code_labeled(build_tree(y))));
      if (ws) CHECK(canon_code_unlabeled(build_tree(x)) == canon_code_unlabeled(build_tree(y)));
    }
  }
}

TEST_CASE("weak similarity behaves as an equivalence") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CAPTURE(seed);
    Rng rng(seed);
    const Space x = seed % 2 ? fx::random_ultra(seed, 2 + seed % 7) : fx::random_semi(seed, 2 + seed % 5);
    const Space y = shuffled_copy(rng, rank_relabel(x, random_spectrum(rng, spectrum(x).size())), "y");
    const Space z = shuffled_copy(rng, rank_relabel(y, random_spectrum(rng, spectrum(y).size())), "z");
    CHECK(verify_weak_similarity(x, x, identity_witness(x)));
    auto xy = decide_weak_similarity(x, y);
    auto yz = decide_weak_similarity(y, z);
    REQUIRE((xy && yz));
    CHECK(verify_weak_similarity(y, x, inverse(*xy)));
    CHECK(verify_weak_similarity(x, z, compose(*xy, *yz)));
  }
}

TEST_CASE("scaling a tree relabels it") {
  const RepTree t = apply_scaling(build_tree(fx::X3()), *forced_scaling(fx::X3(), fx::Y3()));
  CHECK(t == build_tree(fx::Y3()));
}
