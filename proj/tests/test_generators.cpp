#include "support.hpp"

#include "oracles.hpp"
#include "umtk/classification.hpp"
#include "umtk/io.hpp"
#include "umtk/rep_tree.hpp"

using namespace umtk;

TEST_CASE("same config, same space") {
  GenConfig c;
  c.seed = 99;
  c.n = 9;
  CHECK(io::space_to_json(generate(c)) == io::space_to_json(generate(c)));
  c.semimetric = true;
  CHECK(io::space_to_json(generate(c)) == io::space_to_json(generate(c)));
  GenConfig d = c;
  d.seed = 100;
  CHECK_FALSE(generate(c) == generate(d));
}

TEST_CASE("small and named outputs") {
  GenConfig c;
  c.n = 1;
  const Space one = generate(c);
  CHECK(one.size() == 1);
  CHECK(one.points() == std::vector<std::string>{"x1"});
  c.n = 4;
  c.prefix = "pt";
  CHECK(generate(c).points() == std::vector<std::string>{"pt1", "pt2", "pt3", "pt4"});
  c.n = 0;
  CHECK_KIND(generate(c), ErrorKind::EmptySpace);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GenConfig s;
    s.seed = seed;
    s.n = 2;
    s.semimetric = true;
    CHECK(is_ultrametric(generate(s)));
  }
}

TEST_CASE("class names") {
  GenConfig c;
  apply_class_name(c, "D");
  CHECK(c.injective);
  CHECK(c.shape == ShapeClass::Any);
  apply_class_name(c, "Rtilde");
  CHECK(c.shape == ShapeClass::RTilde);
  CHECK_KIND(apply_class_name(c, "Q"), ErrorKind::Parse);
}

TEST_CASE("generated spaces land in the requested class") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    CAPTURE(seed);
    GenConfig c;
    c.seed = seed;
    c.n = 1 + seed % 12;
    const char* names[] = {"any", "R", "Rtilde", "D", "T"};
    const std::string name = names[seed % 5];
    apply_class_name(c, name);
    const Space x = generate(c);
    CHECK(x.size() == c.n);
    CHECK(is_ultrametric(x));
    const ClassReport r = classify_space(x);
    if (name == "R") CHECK(r.in_R);
    if (name == "Rtilde") CHECK(r.in_R_tilde);
    if (name == "D") CHECK(r.in_D);
    if (name == "T") CHECK(r.in_T);
    CHECK(build_tree(space_from_tree(build_tree(x))) == build_tree(x));
  }
}

TEST_CASE("pool values are respected") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Space x = fx::random_ultra(seed, 2 + seed % 8, ShapeClass::Any, fx::pool123());
    for (const auto& v : spectrum(x).values) CHECK((v == Rational(0) || v == 1 || v == 2 || v == 3));
    const Space s = fx::random_semi(seed, 2 + seed % 8, {Rational(5, 2), Rational(4)});
    for (const auto& v : spectrum(s).values) CHECK((v == Rational(0) || v == Rational(5, 2) || v == 4));
  }
}

TEST_CASE("impossible constraints are reported") {
  GenConfig c;
  c.n = 4;
  c.shape = ShapeClass::R;
  c.pool = {Rational(1)};
  CHECK_KIND(generate(c), ErrorKind::InfeasibleConstraints);
  GenConfig d;
  d.n = 6;
  d.injective = true;
  d.pool = {Rational(1)};
  CHECK_KIND(generate(d), ErrorKind::InfeasibleConstraints);
  Rng rng(1);
  const RepTree chain = random_shape(rng, 5, ShapeClass::R, "x");
  CHECK_KIND(random_labeling(rng, chain, {Rational(1), Rational(2)}, false), ErrorKind::InfeasibleConstraints);
  CHECK_NOTHROW(random_labeling(rng, chain, {Rational(1), Rational(2), Rational(3), Rational(4)}, false));
}

TEST_CASE("random spectra") {
  Rng rng(3);
  for (std::size_t k = 1; k < 8; ++k) {
    const Spectrum s = random_spectrum(rng, k);
    REQUIRE(s.size() == k);
    CHECK(s.values.front() == Rational(0));
    for (std::size_t i = 1; i < k; ++i) CHECK(s.values[i - 1] < s.values[i]);
  }
}

TEST_CASE("oracle examples") {
  CHECK(oracle_isometry(fx::X3(), fx::X3().renamed({"a", "b", "c"})).has_value());
  CHECK_FALSE(oracle_isometry(fx::X3(), fx::Y3()).has_value());
  CHECK(oracle_weak_similarity(fx::X3(), fx::Y3()).has_value());
  CHECK(oracle_weak_similarity(fx::X4(), fx::X4()).has_value());
  CHECK_FALSE(oracle_weak_similarity(fx::X3(), fx::X4()).has_value());
  CHECK_FALSE(oracle_ball_preserving(fx::X3(), fx::S3()).has_value());
  CHECK(oracle_ball_preserving(fx::X4(), fx::X4()).has_value());

  const Space big = fx::random_ultra(1, kOracleIsometryLimit + 1);
  CHECK_KIND(oracle_isometry(big, big), ErrorKind::TooLarge);
  CHECK_KIND(oracle_weak_similarity(big, big), ErrorKind::TooLarge);
  const Space mid = fx::random_ultra(1, kOracleBallLimit + 1);
  CHECK_KIND(oracle_ball_preserving(mid, mid), ErrorKind::TooLarge);
}

TEST_CASE("library oracles agree with the test oracles") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    CAPTURE(seed);
    const std::size_t n = 1 + seed % 6;
    Rng rng(seed);
    const Space x = fx::random_semi(seed, n, {Rational(1), Rational(2)});
    const Space y = seed % 2 ? shuffled_copy(rng, rank_relabel(x, random_spectrum(rng, spectrum(x).size())), "y")
                             : fx::random_semi(seed + 999, n, {Rational(1), Rational(3)});
    CHECK(oracle_isometry(x, y).has_value() == ref::isometry(x, y).has_value());
    CHECK(oracle_weak_similarity(x, y).has_value() == ref::weak_similarity(x, y).has_value());
    CHECK(oracle_ball_preserving(x, y).has_value() == ref::ball_preserving(x, y).has_value());
  }
}
