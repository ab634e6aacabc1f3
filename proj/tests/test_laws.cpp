#include "doctest.h"

#include <algorithm>

#include "modorder/laws.hpp"
#include "oracle.hpp"

using namespace modorder;

namespace {
  std::shared_ptr<FiniteModule const> zm(unsigned m, unsigned n) {
    return std::make_shared<FiniteModule const>(FiniteModule::zm_over_zn(m, n));
  }

  LawReport const* find(std::vector<LawReport> const& rs,
                        std::string const&            law,
                        std::string const&            corpus) {
    for (auto const& r : rs) {
      if (r.law == law && r.corpus == corpus) {
        return &r;
      }
    }
    return nullptr;
  }
}  // namespace

TEST_CASE("relation matrix layout") {
  ModuleContext const  ctx(zm(6, 6));
  RelationMatrix const m = compute_matrix(ctx, Relation::MinusDual);
  CHECK(m.size == 6);
  CHECK(m.verdicts.size() == 36);
  CHECK(m.applicable());
  for (Index i = 0; i < 6; ++i) {
    for (Index j = 0; j < 6; ++j) {
      CHECK(m.verdict(i, j).lhs == i);
      CHECK(m.verdict(i, j).rhs == j);
      CHECK(m.at(i, j) == oracle::minus_crt(6, i, j));
    }
  }
  RelationMatrix const r = compute_ring_matrix(FiniteRing::zn(6), Relation::Hartwig);
  CHECK(r.size == 6);
}

TEST_CASE("partial-order check finds each broken axiom") {
  ModuleContext const ctx(zm(6, 6));
  IndexSet const      all = IndexSet::full(6);
  RelationMatrix      m   = compute_matrix(ctx, Relation::MinusDual);
  CHECK(check_partial_order(m, all).outcome == Outcome::Pass);

  RelationMatrix refl = m;
  refl.verdicts[4 * 6 + 4].status = Status::DoesNotHold;
  auto r = check_partial_order(refl, all);
  CHECK(r.outcome == Outcome::Fail);
  CHECK(r.counterexample->clause == "reflexivity");
  CHECK(r.counterexample->operands == std::vector<Index>{4});

  RelationMatrix anti = m;
  anti.verdicts[5 * 6 + 3].status = Status::Holds;  // 3 <= 5 already
  r = check_partial_order(anti, all);
  CHECK(r.counterexample->clause == "antisymmetry");
  CHECK(r.counterexample->operands == std::vector<Index>{3, 5});

  RelationMatrix trans = m;
  trans.verdicts[0 * 6 + 5].status = Status::DoesNotHold;  // 0 <= 2 <= 5
  r = check_partial_order(trans, all);
  CHECK(r.counterexample->clause == "transitivity");
  CHECK(r.counterexample->operands.front() == 0);
  CHECK(r.counterexample->operands.back() == 5);
}

TEST_CASE("equivalence check counts mismatches") {
  ModuleContext const ctx(zm(10, 10));
  RelationMatrix      a = compute_matrix(ctx, Relation::MinusDual);
  RelationMatrix      b = compute_matrix(ctx, Relation::Jones);
  CHECK(check_equivalence(a, b).outcome == Outcome::Pass);
  b.verdicts[2 * 10 + 6].status = Status::Holds;
  auto r = check_equivalence(a, b);
  CHECK(r.outcome == Outcome::Fail);
  CHECK(r.counterexample->operands == std::vector<Index>{2, 6});
  CHECK(r.detail == "99/100 agree");
}

TEST_CASE("subset property: the converse is an expected failure") {
  ModuleContext const  ctx(zm(6, 6));
  RelationMatrix const minus  = compute_matrix(ctx, Relation::MinusDual);
  RelationMatrix const subset = compute_matrix(ctx, Relation::SubsetCyclic);
  CHECK(check_subset_property(ctx, minus).outcome == Outcome::Pass);
  auto r = check_equivalence(minus, subset);
  CHECK(r.outcome == Outcome::Fail);
  CHECK_FALSE(minus.at(1, 5));
  CHECK(subset.at(1, 5));
}

TEST_CASE("converse gaps of annihilator monotonicity on Z10") {
  ModuleContext const  ctx(zm(10, 10));
  RelationMatrix const minus = compute_matrix(ctx, Relation::MinusDual);
  CHECK(check_annihilator_monotone(ctx, minus).outcome == Outcome::Pass);
  auto gaps = converse_gaps(ctx, minus);
  CHECK(std::find(gaps.begin(), gaps.end(), std::pair<ModElem, ModElem>{2, 6})
        != gaps.end());
  CHECK(std::is_sorted(gaps.begin(), gaps.end()));
  CHECK(find_converse_gap(ctx, minus) == gaps.front());
  // every gap really is one
  for (auto [a, b] : gaps) {
    CHECK_FALSE(minus.at(a, b));
    CHECK(ctx.r_ann(b).is_subset_of(ctx.r_ann(a)));
  }
}

TEST_CASE("individual laws on a regular module") {
  ModuleContext const  ctx(zm(6, 30));
  RelationMatrix const minus = compute_matrix(ctx, Relation::MinusDual);
  CHECK(check_unit_invariance(ctx, minus).outcome == Outcome::Pass);
  CHECK(check_witness_constructions(ctx, minus).outcome == Outcome::Pass);
  CHECK(check_star_implications(ctx).outcome == Outcome::Pass);
  CHECK(check_ring_bridge(ctx, minus).outcome == Outcome::NotApplicable);

  ModuleContext const  rr(zm(30, 30));
  RelationMatrix const rm = compute_matrix(rr, Relation::MinusDual);
  auto bridge             = check_ring_bridge(rr, rm);
  CHECK(bridge.outcome == Outcome::Pass);
  CHECK(bridge.checks == 2 * 900);
}

TEST_CASE("unit invariance detects a tampered matrix") {
  ModuleContext const ctx(zm(10, 10));
  RelationMatrix      m = compute_matrix(ctx, Relation::MinusDual);
  m.verdicts[0 * 10 + 3].status = Status::DoesNotHold;
  CHECK(check_unit_invariance(ctx, m).outcome == Outcome::Fail);
}

TEST_CASE("laws on a non-regular module") {
  ModuleContext const  ctx(zm(4, 4));
  RelationMatrix const minus = compute_matrix(ctx, Relation::MinusDual);
  CHECK(check_unit_invariance(ctx, minus).outcome == Outcome::NotApplicable);
  CHECK(check_annihilator_monotone(ctx, minus).outcome == Outcome::Pass);
  CHECK(check_partial_order(minus, ctx.regular_elements()).outcome
        == Outcome::Pass);
  // 2 is not regular, so reflexivity fails on the full carrier
  CHECK(check_partial_order(minus, IndexSet::full(4)).outcome == Outcome::Fail);
}

TEST_CASE("suite on the builtin corpora") {
  auto const reports = run_suite(builtin_corpus("default"), {});
  CHECK(reports.size() == 5 * law_ids().size());
  for (auto const& r : reports) {
    INFO(r.law << " on " << r.corpus << ": " << r.detail);
    CHECK(r.outcome != Outcome::Fail);
  }
  auto const* po = find(reports, "partial-order/star", "Z10/Z10");
  REQUIRE(po);
  CHECK(po->outcome == Outcome::Pass);
  auto const* m22 = find(reports, "partial-order/lstar", "RR(M2(Z2))");
  REQUIRE(m22);
  CHECK(m22->outcome == Outcome::NotApplicable);

  auto const paper = builtin_corpus("paper");
  REQUIRE(paper.size() == 3);
  CHECK(paper[0].id == "Z10/Z10");
  CHECK_THROWS_AS(builtin_corpus("nope"), ConfigError);
}

TEST_CASE("suite order does not depend on parallelism") {
  auto const corpus = builtin_corpus("paper");
  auto const a      = run_suite(corpus, {"", true});
  auto const b      = run_suite(corpus, {"", false});
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].law == b[i].law);
    CHECK(a[i].corpus == b[i].corpus);
    CHECK(a[i].outcome == b[i].outcome);
    CHECK(a[i].checks == b[i].checks);
  }
}

TEST_CASE("law filter and setup failures") {
  auto corpus   = builtin_corpus("paper");
  auto filtered = run_suite(corpus, {"equivalence", true});
  for (auto const& r : filtered) {
    CHECK(r.law.find("equivalence") != std::string::npos);
  }
  CHECK(filtered.size() == 3 * 10);

  CorpusMember broken;
  broken.id         = "broken";
  broken.load_error = "table entry out of range";
  corpus.insert(corpus.begin() + 1, broken);
  auto const rs = run_suite(corpus, {"partial-order/minus", true});
  REQUIRE(rs.size() == 4);
  CHECK(rs[1].law == "setup");
  CHECK(rs[1].outcome == Outcome::Fail);
  CHECK(rs[1].detail == "table entry out of range");
  CHECK(rs[2].outcome == Outcome::Pass);
}

TEST_CASE("recorded claims that are wrong are reported") {
  auto corpus = builtin_corpus("paper");
  corpus[0].expected.push_back({Relation::MinusDual, 2, 6, true});
  auto const rs = run_suite(corpus, {"recorded-claims", false});
  CHECK(rs[0].outcome == Outcome::Fail);
  CHECK(rs[0].counterexample->operands == std::vector<Index>{2, 6});
  CHECK(rs[1].outcome == Outcome::Pass);
}
