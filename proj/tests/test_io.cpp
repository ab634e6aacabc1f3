#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "modorder/io.hpp"

using namespace modorder;

namespace {
  std::string parse_error_of(std::string const& text) {
    try {
      load_ring(text);
    } catch (ParseError const& e) {
      return e.what();
    }
    return "";
  }
}  // namespace

TEST_CASE("ring definitions") {
  CHECK(load_ring(R"({"kind":"Zn","n":10})")->size() == 10);
  auto p = load_ring(
      R"({"kind":"product","factors":[{"kind":"Zn","n":2},{"kind":"Zn","n":3}]})");
  CHECK(*p == FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)));
  CHECK(load_ring(R"({"kind":"matrix2","p":2})")->size() == 16);
  auto t = load_ring(
      R"({"kind":"tables","size":2,"add":[[0,1],[1,0]],"mul":[[0,0],[0,1]]})");
  CHECK(*t == FiniteRing::zn(2));
}

TEST_CASE("builtin ring names") {
  CHECK(*load_ring("Z10") == FiniteRing::zn(10));
  CHECK(load_ring("Z2xZ3")->name() == "Z2xZ3");
  CHECK(load_ring("Z2xZ3xZ5")->size() == 30);
  CHECK(*load_ring("M2(Z2)") == FiniteRing::matrix2(2));
  CHECK(*load_ring("M2Z2") == FiniteRing::matrix2(2));
  CHECK_THROWS_AS(load_ring("Q"), ConfigError);
  CHECK_THROWS_AS(load_ring("Z0"), ConfigError);
}

TEST_CASE("malformed ring definitions name the location") {
  CHECK(parse_error_of(R"({"kind":"Zn"})").find("missing key 'n'")
        != std::string::npos);
  CHECK(parse_error_of(R"({"kind":"Zn","n":-3})").find("/n")
        != std::string::npos);
  std::string const nested = parse_error_of(
      R"({"kind":"product","factors":[{"kind":"Zn","n":2},{"kind":"Zx"}]})");
  CHECK(nested.find("/factors/1/kind") != std::string::npos);
  CHECK(parse_error_of(R"({"kind":"tables","size":2,"add":[[0,"a"]],"mul":[]})")
            .find("/add/0/1")
        != std::string::npos);
  CHECK(parse_error_of("{\"kind\":").find("byte") != std::string::npos);
}

TEST_CASE("module definitions and builtins") {
  CHECK(load_module(R"({"kind":"ZmOverZn","m":6,"n":30})")->name() == "Z6/Z30");
  CHECK(load_module(R"({"kind":"ringAsModule","ring":{"kind":"Zn","n":6}})")
            ->is_ring_module());
  CHECK(load_module("Z10/Z10")->size() == 10);
  CHECK(load_module("RR:M2(Z2)")->size() == 16);
  CHECK(load_module("trivial")->size() == 1);
  CHECK_THROWS_AS(load_module("Z4/Z6"), StructureError);
  CHECK_THROWS_AS(load_module("Z6"), ConfigError);
}

TEST_CASE("tables round trip") {
  FiniteModule const M = FiniteModule::zm_over_zn(6, 30);
  auto const         back = module_from_json(module_to_json(M));
  CHECK(back->tables().add == M.tables().add);
  CHECK(back->tables().action == M.tables().action);
  CHECK(back->ring() == M.ring());
  FiniteRing const m = FiniteRing::matrix2(2);
  CHECK(*ring_from_json(ring_to_json(m)) == m);
}

TEST_CASE("corpus files") {
  auto const path = std::filesystem::temp_directory_path() / "modorder_corpus.json";
  {
    std::ofstream out(path);
    out << R"({"members":[
      {"id":"z6","module":{"kind":"ZmOverZn","m":6,"n":6}},
      {"id":"bad","module":{"kind":"ZmOverZn","m":4,"n":6}}]})";
  }
  auto const corpus = load_corpus(path.string());
  std::filesystem::remove(path);
  REQUIRE(corpus.size() == 2);
  CHECK(corpus[0].module);
  CHECK_FALSE(corpus[1].module);
  CHECK(corpus[1].load_error.find("does not divide") != std::string::npos);
  CHECK(load_corpus("paper").size() == 3);
  CHECK_THROWS_AS(load_corpus(R"({"members":[{"module":{}}]})"), ParseError);
}

TEST_CASE("verdict and report serialization") {
  ModuleContext const ctx(load_module("Z6/Z30"));
  json const d = verdict_to_json(&ctx, direct_sum_le(ctx, 2, 5));
  CHECK(d["status"] == "holds");
  CHECK(d["witness"]["first"] == json::array({0, 2, 4}));
  CHECK(d["witness"]["second"] == json::array({0, 3}));
  json const idem = verdict_to_json(&ctx, minus_le_idem(ctx, 2, 5));
  CHECK(idem["witness"]["f_map"].size() == 6);
  json const no = verdict_to_json(&ctx, minus_le_dual(ctx, 1, 2));
  CHECK(no["status"] == "does-not-hold");
  CHECK_FALSE(no.contains("witness"));

  LawReport r;
  r.law            = "x";
  r.corpus         = "y";
  r.outcome        = Outcome::Fail;
  r.counterexample = Counterexample{{1, 2}, "clause", {}};
  json const j     = report_to_json(r);
  CHECK(j["outcome"] == "fail");
  CHECK(j["counterexample"]["operands"] == json::array({1, 2}));
  CHECK_FALSE(j.contains("elapsed"));
}
