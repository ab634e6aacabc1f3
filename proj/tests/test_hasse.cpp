#include "doctest.h"

#include "modorder/hasse.hpp"
#include "oracle.hpp"

using namespace modorder;

namespace {
  ModuleContext ctx_of(unsigned m, unsigned n) {
    return ModuleContext(
        std::make_shared<FiniteModule const>(FiniteModule::zm_over_zn(m, n)));
  }

  // covers recomputed from the CRT description, independently of the library
  std::vector<Edge> crt_covers(unsigned m) {
    std::vector<Edge> out;
    for (Index a = 0; a < m; ++a) {
      for (Index b = 0; b < m; ++b) {
        if (a == b || !oracle::minus_crt(m, a, b)) {
          continue;
        }
        bool cover = true;
        for (Index c = 0; c < m; ++c) {
          if (c != a && c != b && oracle::minus_crt(m, a, c)
              && oracle::minus_crt(m, c, b)) {
            cover = false;
          }
        }
        if (cover) {
          out.emplace_back(a, b);
        }
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("Hasse diagram of Z6") {
  Poset const p = build_poset(ctx_of(6, 6), Relation::MinusDual);
  std::vector<Edge> const expect
      = {{0, 2}, {0, 3}, {0, 4}, {2, 5}, {3, 1}, {3, 5}, {4, 1}};
  CHECK(p.covers == expect);
  CHECK(p.covers == crt_covers(6));
  std::string const dot = to_dot(p);
  std::size_t       edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos;
       at = dot.find("->", at + 1)) {
    ++edges;
  }
  CHECK(edges == 7);
  CHECK(dot.find("\"2\" -> \"5\";") != std::string::npos);
}

TEST_CASE("small posets") {
  Poset const z2 = build_poset(ctx_of(2, 2), Relation::MinusDual);
  CHECK(z2.covers == std::vector<Edge>{{0, 1}});
  CHECK(to_dot(z2).find("\"0\" -> \"1\"") != std::string::npos);

  Poset const one = build_poset(ctx_of(1, 2), Relation::MinusDual);
  CHECK(one.covers.empty());
  CHECK(to_dot(one) == "digraph \"minus-dual\" {\n  \"0\";\n}\n");
  CHECK(to_json(one)
        == R"({"covers":[],"dashed":[],"elements":[0],"relation":"minus-dual"})");
}

TEST_CASE("non-regular elements are dashed and left out") {
  Poset const p = build_poset(ctx_of(4, 4), Relation::MinusDual);
  CHECK(p.domain.to_string() == "{0,1,3}");
  CHECK(p.covers == std::vector<Edge>{{0, 1}, {0, 3}});
  CHECK(to_dot(p).find("\"2\" [style=dashed];") != std::string::npos);
  CHECK(to_json(p).find(R"("dashed":[2])") != std::string::npos);
}

TEST_CASE("reduction is minimal and closes back to the order") {
  for (unsigned m : {6u, 10u, 30u}) {
    Poset const p = build_poset(ctx_of(m, 30 % m == 0 ? 30 : m),
                                Relation::MinusDual);
    CHECK(p.covers == crt_covers(m));
    CHECK(transitive_closure(p.covers, p.size) == p.leq);
    for (std::size_t drop = 0; drop < p.covers.size(); ++drop) {
      auto fewer = p.covers;
      fewer.erase(fewer.begin() + static_cast<std::ptrdiff_t>(drop));
      CHECK(transitive_closure(fewer, p.size) != p.leq);
    }
  }
}

TEST_CASE("relations that are not partial orders are rejected") {
  try {
    build_poset(ctx_of(6, 6), Relation::SubsetCyclic);
    FAIL("expected StructureError");
  } catch (StructureError const& e) {
    std::string const what = e.what();
    CHECK(what.find("antisymmetry") != std::string::npos);
    CHECK(what.find("(1,5)") != std::string::npos);
  }
  auto m = std::make_shared<FiniteRing const>(FiniteRing::matrix2(2));
  ModuleContext const ctx(
      std::make_shared<FiniteModule const>(FiniteModule::ring_as_module(m)));
  CHECK_THROWS_AS(build_poset(ctx, Relation::LeftStar), ConfigError);
}
