#include "doctest.h"

#include "modorder/orders.hpp"
#include "oracle.hpp"

using namespace modorder;

namespace {
  std::shared_ptr<FiniteModule const> zm(unsigned m, unsigned n) {
    return std::make_shared<FiniteModule const>(FiniteModule::zm_over_zn(m, n));
  }

  std::vector<Relation> const kMinusFamily = {Relation::MinusDual,
                                              Relation::MinusIdem,
                                              Relation::MinusRelaxed,
                                              Relation::MinusImage,
                                              Relation::Jones,
                                              Relation::Mitsch,
                                              Relation::MitschSym,
                                              Relation::Gb,
                                              Relation::DirectSum};
}  // namespace

TEST_CASE("relation tags round trip") {
  for (Relation r : module_relations()) {
    CHECK(parse_relation(tag(r)) == r);
  }
  CHECK(parse_relation("minus") == Relation::MinusDual);
  CHECK(parse_relation("hartwig") == Relation::Hartwig);
  CHECK_FALSE(parse_relation("nope"));
  CHECK(is_ring_relation(Relation::RingAnnih));
  CHECK_FALSE(is_ring_relation(Relation::Star));
  CHECK(minus_characterizations().size() == 9);
  CHECK(minus_characterizations().front() == Relation::MinusDual);
}

TEST_CASE("regularity of Z_m over Z_n") {
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{
           {6, 30}, {10, 10}, {6, 6}, {4, 4}, {9, 18}, {2, 8}, {3, 9}, {6, 12}, {5, 10}}) {
    ModuleContext const ctx(zm(m, n));
    INFO(m << "/" << n);
    CHECK(ctx.module_regular() == oracle::regular_zm_over_zn(m, n));
    auto rep = is_regular_module(ctx);
    CHECK(rep.regular == ctx.module_regular());
    for (ModElem x = 0; x < m; ++x) {
      auto v = is_regular_element(ctx, x);
      CHECK(v.holds() == ctx.is_regular(x));
      if (v.holds()) {
        CHECK(replay(ctx, v));
      }
    }
  }
  ModuleContext const z4(zm(4, 4));
  CHECK(is_regular_module(z4).first_failure == 2);
  CHECK(z4.regular_elements().to_string() == "{0,1,3}");
}

TEST_CASE("every characterization matches the CRT description") {
  for (auto [m, n] : std::vector<std::pair<unsigned, unsigned>>{
           {6, 30}, {10, 10}, {6, 6}, {15, 30}, {2, 2}}) {
    ModuleContext const ctx(zm(m, n));
    for (Relation rel : kMinusFamily) {
      for (ModElem a = 0; a < m; ++a) {
        for (ModElem b = 0; b < m; ++b) {
          OrderVerdict const v = decide(ctx, rel, a, b);
          INFO(tag(rel) << " " << m << "/" << n << " (" << a << "," << b << ")");
          CHECK(v.holds() == oracle::minus_crt(m, a, b));
          CHECK_FALSE(v.hypothesis_violated);
          if (v.holds()) {
            CHECK(replay(ctx, v));
          }
        }
      }
    }
  }
}

TEST_CASE("Z6 over Z30: 2 <= 5 under every characterization") {
  ModuleContext const ctx(zm(6, 30));
  for (Relation rel : kMinusFamily) {
    CHECK(decide(ctx, rel, 2, 5).holds());
  }
  OrderVerdict const d = direct_sum_le(ctx, 2, 5);
  auto const&        w = std::get<DirectSumWitness>(*d.witness);
  CHECK(w.first.to_string() == "{0,2,4}");
  CHECK(w.second.to_string() == "{0,3}");
  OrderVerdict const dual = minus_le_dual(ctx, 2, 5);
  Index const        phi  = std::get<DualWitness>(*dual.witness).functional;
  CHECK(ctx.module().act(2, ctx.dual().eval(phi, 2)) == 2);
}

TEST_CASE("Z10: 2 and 6 share annihilators but are unrelated") {
  ModuleContext const ctx(zm(10, 10));
  CHECK(ctx.r_ann(2).to_string() == "{0,5}");
  CHECK(ctx.r_ann(6).to_string() == "{0,5}");
  CHECK(ctx.l_ann(2) == ctx.l_ann(6));
  CHECK(ctx.l_ann(2).size() == 2);
  CHECK(ctx.ring_idempotents().to_string() == "{0,1,5,6}");
  for (Relation rel : kMinusFamily) {
    CHECK_FALSE(decide(ctx, rel, 2, 6).holds());
  }
  for (Relation rel : {Relation::RightStar, Relation::LeftStar, Relation::Star}) {
    OrderVerdict const v = decide(ctx, rel, 2, 6);
    CHECK(v.applicable());
    CHECK_FALSE(v.holds());
  }
}

TEST_CASE("witnesses are lexicographically first") {
  ModuleContext const ctx(zm(6, 6));
  // 3 <= 5: the only idempotent a of Z6 with 5a = 3 is 3
  OrderVerdict const v = minus_le_idem(ctx, 3, 5);
  REQUIRE(v.holds());
  auto const& w = std::get<IdemPair>(*v.witness);
  CHECK(w.a == 3);
  for (Index f : ctx.endo_idempotents()) {
    if (f >= w.f) {
      break;
    }
    CHECK_FALSE((ctx.endo().apply(f, 3) == ctx.endo().apply(f, 5)
                 && ctx.endo_l_ann(f) == ctx.l_ann(3)));
  }
}

TEST_CASE("hypotheses are flagged outside their scope") {
  ModuleContext const ctx(zm(4, 4));
  OrderVerdict const idem = minus_le_idem(ctx, 2, 2);
  CHECK(idem.hypothesis_violated);
  CHECK_FALSE(idem.holds());
  CHECK(minus_le_relaxed(ctx, 0, 1).hypothesis_violated);
  CHECK(direct_sum_le(ctx, 2, 3).hypothesis_violated);
  CHECK_FALSE(minus_le_dual(ctx, 2, 2).holds());
  CHECK(minus_le_dual(ctx, 1, 1).holds());
}

TEST_CASE("star relations need involutions") {
  auto m = std::make_shared<FiniteRing const>(FiniteRing::matrix2(2));
  ModuleContext const ctx(
      std::make_shared<FiniteModule const>(FiniteModule::ring_as_module(m)));
  CHECK_FALSE(ctx.endo_ring().is_commutative());
  CHECK_FALSE(ctx.endo_projections());
  OrderVerdict const l = left_star_le(ctx, 0, 1);
  CHECK(l.status == Status::NotApplicable);
  CHECK(l.note.find("no involution") != std::string::npos);
  CHECK(right_star_le(ctx, 0, 1).applicable());

  auto t = m->tables();
  t.involution.reset();
  auto bare = std::make_shared<FiniteRing const>(FiniteRing::from_tables(t));
  ModuleContext const bare_ctx(
      std::make_shared<FiniteModule const>(FiniteModule::ring_as_module(bare)));
  OrderVerdict const r = right_star_le(bare_ctx, 0, 1);
  CHECK(r.status == Status::NotApplicable);
  CHECK(r.note.find("has no involution") != std::string::npos);
}

TEST_CASE("subset relation is weaker than the order") {
  ModuleContext const ctx(zm(6, 6));
  CHECK(subset_cyclic(ctx, 1, 5));
  CHECK(subset_cyclic(ctx, 5, 1));
  CHECK_FALSE(minus_le_dual(ctx, 1, 5).holds());
  OrderVerdict const v = subset_cyclic_le(ctx, 2, 1);
  CHECK(v.holds());
  CHECK(replay(ctx, v));
}

TEST_CASE("tampered witnesses fail replay") {
  ModuleContext const ctx(zm(6, 30));
  OrderVerdict v = minus_le_idem(ctx, 2, 5);
  REQUIRE(replay(ctx, v));
  auto w = std::get<IdemPair>(*v.witness);
  w.a    = ctx.ring().one();
  v.witness = w;
  CHECK_FALSE(replay(ctx, v));
  OrderVerdict no = minus_le_dual(ctx, 1, 2);
  CHECK_FALSE(replay(ctx, no));
}

TEST_CASE("regular decomposition") {
  ModuleContext const ctx(zm(6, 30));
  auto phi = ctx.regular_witness(2);
  REQUIRE(phi);
  RegularDecomposition const d = regular_decomposition(ctx, 2, *phi);
  FiniteRing const&          R = ctx.ring();
  CHECK(R.mul(d.idempotent, d.idempotent) == d.idempotent);
  Submodule const mR{&ctx.module(), ctx.cyclic(2)};
  Submodule const all{&ctx.module(), IndexSet::full(6)};
  CHECK(is_internal_direct_sum(mR, d.complement, all));
  CHECK(d.complement.members.to_string() == "{0,3}");
  // phi = 0 does not witness regularity of 2
  CHECK_THROWS_AS(regular_decomposition(ctx, 2, 0), StructureError);
}

TEST_CASE("argument errors") {
  ModuleContext const ctx(zm(6, 6));
  CHECK_THROWS_AS(minus_le_dual(ctx, 6, 0), StructureError);
  CHECK_THROWS_AS(decide(ctx, Relation::Hartwig, 0, 0), ConfigError);
  CHECK_THROWS_AS(decide_ring(ctx.ring(), Relation::Jones, 0, 0), ConfigError);
  CHECK_THROWS_AS(decide_ring(ctx.ring(), Relation::Hartwig, 0, 9), StructureError);
}
