#include "support.hpp"

#include "umtk/diametrical.hpp"

using namespace umtk;

namespace {

using Edge = std::pair<std::string, std::string>;

std::vector<Edge> named_edges(const DiametricalGraph& g) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) out.emplace_back(g.vertices()[u], g.vertices()[v]);
  return out;
}

std::vector<std::vector<std::string>> named_parts(const DiametricalGraph& g, const MultipartitePartition& p) {
  std::vector<std::vector<std::string>> out;
  for (const auto& part : p.parts) {
    out.emplace_back();
    for (auto i : part) out.back().push_back(g.vertices()[i]);
  }
  return out;
}

}  // namespace

TEST_CASE("diametrical graph edges") {
  CHECK(named_edges(diametrical_graph(fx::X3())) == std::vector<Edge>{{"p", "q"}, {"p", "r"}});
  CHECK(named_edges(diametrical_graph(fx::two())) == std::vector<Edge>{{"u", "v"}});
  CHECK(named_edges(diametrical_graph(fx::X4())) ==
        std::vector<Edge>{{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}});
  CHECK(named_edges(diametrical_graph(fx::S3())) == std::vector<Edge>{{"a", "c"}});
  CHECK_KIND(diametrical_graph(fx::one()), ErrorKind::SpaceTooSmall);
}

TEST_CASE("multipartite parts") {
  const auto g3 = diametrical_graph(fx::X3());
  auto p3 = multipartite_parts(g3);
  REQUIRE(p3.has_value());
  CHECK(named_parts(g3, *p3) == std::vector<std::vector<std::string>>{{"p"}, {"q", "r"}});

  const auto g4 = diametrical_graph(fx::X4());
  auto p4 = multipartite_parts(g4);
  REQUIRE(p4.has_value());
  CHECK(named_parts(g4, *p4) == std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d"}});

  const auto g5 = diametrical_graph(fx::X5());
  auto p5 = multipartite_parts(g5);
  REQUIRE(p5.has_value());
  CHECK(named_parts(g5, *p5) == std::vector<std::vector<std::string>>{{"a", "b"}, {"c", "d", "e"}});

  CHECK_FALSE(multipartite_parts(diametrical_graph(fx::S3())).has_value());
}

TEST_CASE("multipartite parts on hand-made graphs") {
  DiametricalGraph empty({"a", "b", "c"});
  CHECK_FALSE(multipartite_parts(empty).has_value());

  // Path a-b-c-d: complement is connected, so not multipartite.
  DiametricalGraph path({"a", "b", "c", "d"});
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  CHECK_FALSE(multipartite_parts(path).has_value());

  // Triangle: three singleton parts.
  DiametricalGraph k3({"c", "b", "a"});
  k3.add_edge(0, 1);
  k3.add_edge(1, 2);
  k3.add_edge(0, 2);
  auto p = multipartite_parts(k3);
  REQUIRE(p.has_value());
  CHECK(named_parts(k3, *p) == std::vector<std::vector<std::string>>{{"a"}, {"b"}, {"c"}});

  // Would be {a,b} vs {c,d} except that a-d is missing.
  DiametricalGraph broken({"a", "b", "c", "d"});
  broken.add_edge(0, 2);
  broken.add_edge(1, 2);
  broken.add_edge(1, 3);
  CHECK_FALSE(multipartite_parts(broken).has_value());

  CHECK_KIND(multipartite_parts(DiametricalGraph({"a"})), ErrorKind::SpaceTooSmall);
}

TEST_CASE("every ultrametric diametrical graph is complete multipartite") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    CAPTURE(seed);
    const std::size_t n = 2 + seed % 11;
    const Space x = fx::random_ultra(seed, n, static_cast<ShapeClass>(seed % 4));
    const auto g = diametrical_graph(x);
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) CHECK(g.adjacent(u, v) == (x.d(u, v) == diameter(x)));
    auto p = multipartite_parts(g);
    REQUIRE(p.has_value());
    CHECK(p->parts.size() >= 2);
    std::vector<int> seen(n, 0);
    for (const auto& part : p->parts) {
      CHECK_FALSE(part.empty());
      for (auto i : part) ++seen[i];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
    CHECK(rebuild_from_parts(g.vertices(), *p) == g);
  }
}

TEST_CASE("multipartite answer is always checked on semimetric inputs") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Space x = fx::random_semi(seed, 2 + seed % 6);
    const auto g = diametrical_graph(x);
    if (auto p = multipartite_parts(g)) CHECK(rebuild_from_parts(g.vertices(), *p) == g);
  }
}
