#include "doctest.h"

#include "modorder/ring.hpp"
#include "oracle.hpp"

using namespace modorder;

namespace {
  std::set<unsigned> as_set(IndexSet const& s) {
    return {s.begin(), s.end()};
  }
}  // namespace

TEST_CASE("Z_n tables are arithmetic mod n") {
  FiniteRing const z = FiniteRing::zn(12);
  CHECK(z.size() == 12);
  CHECK(z.zero() == 0);
  CHECK(z.one() == 1);
  CHECK(z.name() == "Z12");
  for (Index a = 0; a < 12; ++a) {
    for (Index b = 0; b < 12; ++b) {
      CHECK(z.add(a, b) == (a + b) % 12);
      CHECK(z.mul(a, b) == (a * b) % 12);
    }
    CHECK(z.add(a, z.neg(a)) == 0);
  }
  CHECK(z.is_commutative());
  CHECK(z.has_involution());
  CHECK(z.star(7) == 7);
  CHECK_FALSE(z.check_axioms(true).has_value());
}

TEST_CASE("idempotents and units agree with direct search") {
  for (unsigned n = 1; n <= 40; ++n) {
    FiniteRing const z = FiniteRing::zn(n);
    CHECK(as_set(idempotents(z)) == oracle::idempotents_mod(n));
    CHECK(as_set(units(z)) == oracle::units_mod(n));
  }
  CHECK(idempotents(FiniteRing::zn(10)).to_string() == "{0,1,5,6}");
}

TEST_CASE("Z_n is von Neumann regular exactly when n is squarefree") {
  for (unsigned n = 1; n <= 60; ++n) {
    INFO("n = " << n);
    CHECK(is_von_neumann_regular(FiniteRing::zn(n)) == oracle::squarefree(n));
  }
  auto w = vn_regular_witness(FiniteRing::zn(10), 2);
  REQUIRE(w);
  CHECK(2 * *w * 2 % 10 == 2);
  CHECK_FALSE(vn_regular_witness(FiniteRing::zn(4), 2));
}

TEST_CASE("Rickart and Rickart-* properties") {
  CHECK_FALSE(is_rickart(FiniteRing::zn(4)).holds);
  CHECK(is_rickart(FiniteRing::zn(4)).first_failure == 2);
  CHECK(is_rickart(FiniteRing::zn(30)).holds);
  CHECK(is_rickart_star(FiniteRing::zn(10)).holds);
  CHECK(is_proper_star(FiniteRing::zn(6)));
  // transpose on M2(Z2) is not proper: [[1,1],[0,0]] times its transpose
  FiniteRing const m = FiniteRing::matrix2(2);
  CHECK_FALSE(is_proper_star(m));
  CHECK(is_rickart(m).holds);
  CHECK_FALSE(is_rickart_star(m).holds);
}

TEST_CASE("annihilators and principal ideals") {
  FiniteRing const z = FiniteRing::zn(10);
  CHECK(right_ann_ring(z, 2).to_string() == "{0,5}");
  CHECK(left_ann_ring(z, 6).to_string() == "{0,5}");
  CHECK(principal_right_ideal(z, 4).to_string() == "{0,2,4,6,8}");
  CHECK(principal_left_ideal(z, 5).to_string() == "{0,5}");
  CHECK(idempotent_annih_identity(z, 6));
  CHECK_THROWS_AS(idempotent_annih_identity(z, 2), StructureError);
  CHECK(inverse(z, 3) == 7);
  CHECK_FALSE(inverse(z, 5));
}

TEST_CASE("product ring indexing") {
  FiniteRing const p = FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3));
  CHECK(p.size() == 6);
  CHECK(p.name() == "Z2xZ3");
  // (1,2) + (1,2) = (0,1); (1,2) * (1,2) = (1,1)
  CHECK(p.add(1 * 3 + 2, 1 * 3 + 2) == 0 * 3 + 1);
  CHECK(p.mul(5, 5) == 4);
  CHECK(p.one() == 4);
  CHECK(as_set(idempotents(p)) == std::set<unsigned>{0, 1, 3, 4});
}

TEST_CASE("2x2 matrices over Z_2") {
  FiniteRing const m = FiniteRing::matrix2(2);
  CHECK(m.size() == 16);
  CHECK(m.name() == "M2(Z2)");
  CHECK_FALSE(m.is_commutative());
  auto idx = [](int a, int b, int c, int d) {
    return static_cast<Index>(((a * 2 + b) * 2 + c) * 2 + d);
  };
  CHECK(m.one() == idx(1, 0, 0, 1));
  CHECK(m.mul(idx(0, 1, 0, 0), idx(0, 0, 1, 0)) == idx(1, 0, 0, 0));
  CHECK(m.mul(idx(0, 0, 1, 0), idx(0, 1, 0, 0)) == idx(0, 0, 0, 1));
  CHECK(m.star(idx(0, 1, 0, 0)) == idx(0, 0, 1, 0));
  // 8 idempotents: 0, 1 and the six rank-one ones
  CHECK(idempotents(m).size() == 8);
  CHECK(units(m).size() == 6);
  // symmetric idempotents: 0, I, E11, E22
  CHECK(as_set(projections(m))
        == std::set<unsigned>{idx(0, 0, 0, 0), idx(1, 0, 0, 1), idx(1, 0, 0, 0),
                              idx(0, 0, 0, 1)});
  CHECK(is_von_neumann_regular(m));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(FiniteRing::zn(0), StructureError);
  CHECK_THROWS_AS(FiniteRing::zn(257), CapacityError);
  CHECK_THROWS_AS(FiniteRing::matrix2(4), StructureError);
  CHECK_THROWS_AS(FiniteRing::matrix2(5), CapacityError);
}

TEST_CASE("tables with a broken law are rejected with the violated law") {
  FiniteRing::Tables t = FiniteRing::zn(6).tables();
  t.mul[2][3]          = 1;  // 2 * 3 should be 0
  try {
    FiniteRing::from_tables(t);
    FAIL("expected AxiomError");
  } catch (AxiomError const& e) {
    CHECK_FALSE(e.violation().law.empty());
    CHECK_FALSE(e.violation().operands.empty());
  }
  FiniteRing::Tables shape = FiniteRing::zn(3).tables();
  shape.add.pop_back();
  CHECK_THROWS_AS(FiniteRing::from_tables(shape), StructureError);
  FiniteRing::Tables range = FiniteRing::zn(3).tables();
  range.add[0][0]          = 9;
  CHECK_THROWS_AS(FiniteRing::from_tables(range), StructureError);
}

TEST_CASE("involutions are validated") {
  FiniteRing const z = FiniteRing::zn(5);
  CHECK_THROWS_AS(z.with_involution({0, 2, 1, 3, 4}), AxiomError);
  CHECK_THROWS_AS(z.with_involution({0, 1}), StructureError);
  FiniteRing const m = FiniteRing::matrix2(2);
  auto t             = m.tables();
  t.involution.reset();
  FiniteRing const bare = FiniteRing::from_tables(t);
  CHECK_FALSE(bare.has_involution());
  CHECK_THROWS_AS(bare.star(1), ConfigError);
  CHECK_THROWS_AS(projections(bare), ConfigError);
  CHECK(bare.with_involution(*m.tables().involution) == m);
}

TEST_CASE("ring-level orders agree with the CRT description") {
  for (unsigned n : {2u, 6u, 10u, 30u}) {
    FiniteRing const z = FiniteRing::zn(n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        bool const expect = oracle::minus_crt(n, a, b);
        OrderVerdict const h = hartwig_minus_le(z, a, b);
        OrderVerdict const q = ring_minus_le_annih(z, a, b);
        CHECK(h.holds() == expect);
        CHECK(q.holds() == expect);
        if (h.holds()) {
          CHECK(replay_ring(z, h));
        }
        if (q.holds()) {
          CHECK(replay_ring(z, q));
        }
      }
    }
  }
  OrderVerdict const v = hartwig_minus_le(FiniteRing::zn(4), 2, 2);
  CHECK_FALSE(v.holds());
  CHECK(v.note == "left operand has no inner inverse");
}
