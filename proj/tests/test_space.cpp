#include "support.hpp"

#include "oracles.hpp"

using namespace umtk;
using fx::space;

TEST_CASE("rational parsing and printing") {
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational::parse("4/6").str() == "2/3");
  CHECK(Rational::parse("-1/2").str() == "-1/2");
  CHECK(Rational::parse("10/5") == Rational(2));
  CHECK(Rational::parse("0/3").is_zero());
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "a", "1/0", " 1", "1/-2", "+1"})
    CHECK_KIND(Rational::parse(bad), ErrorKind::Parse);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third(1, 3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(7, 3) - Rational(1, 3) == Rational(2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(midpoint(Rational(1), Rational(2)) == Rational(3, 2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1) < Rational(0));
  CHECK(Rational(2, 4).numerator() == "1");
  CHECK(Rational(2, 4).denominator() == "2");
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}

TEST_CASE("validate accepts the small fixtures") {
  const Space p = fx::one();
  CHECK(p.size() == 1);
  CHECK(p.point(0) == "x");
  const Space x = fx::X3();
  CHECK(x.size() == 3);
  CHECK(x.d(0, 1) == Rational(2));
  CHECK(x.d(2, 1) == Rational(1));
  CHECK(x.index_of("r") == 2u);
  CHECK_FALSE(x.index_of("z").has_value());
  CHECK(space({"a", "b"}, {{"0", "1/3"}, {"1/3", "0"}}).d(0, 1) == Rational(1, 3));
}

TEST_CASE("validate rejects broken inputs") {
  CHECK_KIND(space({"p", "q"}, {{"0", "2"}, {"3", "0"}}), ErrorKind::NonSymmetric);
  CHECK_KIND(space({"p", "q"}, {{"1", "2"}, {"2", "0"}}), ErrorKind::NonZeroDiagonal);
  CHECK_KIND(space({"p", "q"}, {{"0", "0"}, {"0", "0"}}), ErrorKind::ZeroOffDiagonal);
  CHECK_KIND(space({"p", "q"}, {{"0", "-1"}, {"-1", "0"}}), ErrorKind::NegativeDistance);
  CHECK_KIND(space({"p", "p"}, {{"0", "1"}, {"1", "0"}}), ErrorKind::DuplicatePointName);
  CHECK_KIND(space({}, {}), ErrorKind::EmptySpace);
  CHECK_KIND(space({"p", "q"}, {{"0", "1"}}), ErrorKind::Parse);
  CHECK_KIND(space({"p", "q"}, {{"0", "1"}, {"1"}}), ErrorKind::Parse);
}

TEST_CASE("validate does not ask for the triangle inequality") {
  const Space s = fx::S3();
  CHECK(s.d(0, 2) == Rational(3));
}

TEST_CASE("spectrum and diameter") {
  auto vals = [](const Space& s) {
    std::vector<std::string> out;
    for (const auto& v : spectrum(s).values) out.push_back(v.str());
    return out;
  };
  CHECK(vals(fx::one()) == std::vector<std::string>{"0"});
  CHECK(vals(fx::X3()) == std::vector<std::string>{"0", "1", "2"});
  CHECK(vals(fx::S3()) == std::vector<std::string>{"0", "1", "3"});
  CHECK(diameter(fx::one()) == Rational(0));
  CHECK(diameter(fx::X3()) == Rational(2));
  CHECK(diameter(fx::S3()) == Rational(3));
  CHECK(spectrum(fx::X3()).rank_of(Rational(2)) == 2u);
  CHECK_FALSE(spectrum(fx::X3()).rank_of(Rational(3)).has_value());
}

TEST_CASE("ultrametric check and violating triple") {
  CHECK(is_ultrametric(fx::one()));
  CHECK(is_ultrametric(fx::two()));
  CHECK(is_ultrametric(fx::X3()));
  CHECK(is_ultrametric(fx::X4()));
  const Space s = fx::S3();
  auto t = ultrametric_violation(s);
  REQUIRE(t.has_value());
  CHECK(s.point(t->x) == "a");
  CHECK(s.point(t->y) == "c");
  CHECK(s.point(t->z) == "b");
}

TEST_CASE("rank relabel") {
  const Space y = fx::Y3();
  CHECK(y.points() == fx::X3().points());
  CHECK(y.d(0, 1) == Rational(20));
  CHECK(y.d(0, 2) == Rational(20));
  CHECK(y.d(1, 2) == Rational(10));
  CHECK(rank_relabel(fx::X3(), spectrum(fx::X3())) == fx::X3());
  CHECK_KIND(rank_relabel(fx::X3(), Spectrum{{Rational(0), Rational(1)}}), ErrorKind::SpectrumSizeMismatch);
  CHECK_KIND(rank_relabel(fx::X3(), Spectrum{{Rational(1), Rational(2), Rational(3)}}),
             ErrorKind::TargetNotStartingAtZero);
  CHECK_KIND(rank_relabel(fx::X3(), Spectrum{{Rational(0), Rational(3), Rational(2)}}), ErrorKind::Parse);
}

TEST_CASE("subspace, reorder and rename") {
  const Space x = fx::X4();
  const std::vector<std::size_t> idx{2, 3};
  const Space sub = x.subspace(idx);
  CHECK(sub.points() == std::vector<std::string>{"c", "d"});
  CHECK(sub.d(0, 1) == Rational(2));
  const std::vector<std::string> order{"d", "c", "b", "a"};
  const Space r = x.reordered(order);
  CHECK(r.d(0, 1) == Rational(2));
  CHECK(r.d(2, 3) == Rational(1));
  const std::vector<std::string> dup{"a", "a", "b", "c"};
  CHECK_KIND(x.reordered(dup), ErrorKind::DuplicatePointName);
  const std::vector<std::string> unknown{"a", "b", "c", "z"};
  CHECK_KIND(x.reordered(unknown), ErrorKind::UnknownPoint);
  const Space named = x.renamed({"w", "x", "y", "z"});
  CHECK(named.point(3) == "z");
  CHECK(named.d(2, 3) == Rational(2));
}

TEST_CASE("space properties on random inputs") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    CAPTURE(seed);
    const Space x = seed % 2 ? fx::random_ultra(seed, 1 + seed % 9) : fx::random_semi(seed, 1 + seed % 7);
    const Spectrum sp = spectrum(x);
    CHECK(sp.values.front() == Rational(0));
    CHECK(diameter(x) == sp.values.back());
    CHECK(sp.values == ref::values(x));

    CHECK(is_ultrametric(x) == ref::ultrametric(x));
    if (auto t = ultrametric_violation(x)) CHECK(x.d(t->x, t->y) > std::max(x.d(t->x, t->z), x.d(t->z, t->y)));

    Rng rng(seed);
    const Spectrum target = random_spectrum(rng, sp.size());
    const Space y = rank_relabel(x, target);
    CHECK(spectrum(y) == target);
    CHECK(is_ultrametric(y) == is_ultrametric(x));
    // Order of distances is kept pair by pair.
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j)
        for (std::size_t k = 0; k < x.size(); ++k) CHECK((x.d(i, j) < x.d(j, k)) == (y.d(i, j) < y.d(j, k)));
  }
}
