#ifndef MODORDER_LAWS_HPP_
#define MODORDER_LAWS_HPP_

#include <chrono>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "modorder/orders.hpp"

namespace modorder {

  //! Verdicts of one relation on every ordered pair of a module (or ring).
  struct RelationMatrix {
    Relation                  relation;
    std::size_t               size = 0;
    std::vector<OrderVerdict> verdicts;  // row-major, verdicts[i * size + j]

    bool at(Index i, Index j) const {
      return verdicts[i * size + j].holds();
    }
    OrderVerdict const& verdict(Index i, Index j) const {
      return verdicts[i * size + j];
    }
    //! False when any entry is not applicable.
    bool applicable() const;
  };

  RelationMatrix compute_matrix(ModuleContext const& ctx, Relation rel);
  RelationMatrix compute_ring_matrix(FiniteRing const& R, Relation rel);

  enum class Outcome { Pass, Fail, NotApplicable };
  std::string_view to_string(Outcome o) noexcept;

  struct Counterexample {
    std::vector<Index>        operands;
    std::string               clause;
    std::vector<OrderVerdict> verdicts;
  };

  struct LawReport {
    std::string                   law;
    std::string                   corpus;
    Outcome                       outcome = Outcome::Pass;
    std::optional<Counterexample> counterexample;
    std::string                   detail;
    std::size_t                   checks = 0;
    std::chrono::nanoseconds      elapsed{0};
  };

  //! Reflexivity on domain, antisymmetry and transitivity over all pairs and
  //! triples drawn from domain. The first violation is reported.
  LawReport check_partial_order(RelationMatrix const& rel,
                                IndexSet const&       domain);

  //! Elementwise equality, optionally only over pairs with both operands in
  //! domain.
  LawReport check_equivalence(RelationMatrix const& a,
                              RelationMatrix const& b,
                              IndexSet const*       domain = nullptr);

  //! minus(m1, m2) iff minus(g m1, g m2) for every unit g of S, and iff
  //! minus(m1 b, m2 b) for every unit b of R.
  LawReport check_unit_invariance(ModuleContext const&  ctx,
                                  RelationMatrix const& minus);

  //! minus(m1, m2) implies l_S(m2) in l_S(m1) and r_R(m2) in r_R(m1).
  LawReport check_annihilator_monotone(ModuleContext const&  ctx,
                                       RelationMatrix const& minus);

  //! minus(m1, m2) implies m1 R in m2 R.
  LawReport check_subset_property(ModuleContext const&  ctx,
                                  RelationMatrix const& minus);

  //! Pairs satisfying both annihilator inclusions without being related, in
  //! ascending (m1, m2) order.
  std::vector<std::pair<ModElem, ModElem>> converse_gaps(
      ModuleContext const&  ctx,
      RelationMatrix const& minus);
  std::optional<std::pair<ModElem, ModElem>> find_converse_gap(
      ModuleContext const&  ctx,
      RelationMatrix const& minus);

  //! For each regular m and each phi with m = m phi(m): phi(m) is idempotent,
  //! x |-> m phi(x) is idempotent in S, and M = mR (+) N. For each related
  //! pair, the idempotent witness satisfies m1 = f m1 = f m2 = m1 a = m2 a.
  LawReport check_witness_constructions(ModuleContext const&  ctx,
                                        RelationMatrix const& minus);

  //! star implies left-star and right-star; each of those implies the
  //! idempotent characterization.
  LawReport check_star_implications(ModuleContext const& ctx);

  //! On R_R over a von Neumann regular ring, the module order agrees with
  //! both ring-level orders.
  LawReport check_ring_bridge(ModuleContext const&  ctx,
                              RelationMatrix const& minus);

  ////////////////////////////////////////////////////////////////////////
  // Suite
  ////////////////////////////////////////////////////////////////////////

  struct ExpectedRelation {
    Relation relation;
    ModElem  lhs;
    ModElem  rhs;
    bool     holds;
  };

  struct CorpusMember {
    std::string                                id;
    std::shared_ptr<FiniteModule const>        module;
    std::optional<std::vector<Index>>          endo_involution;
    std::vector<ExpectedRelation>              expected;
    std::optional<std::pair<ModElem, ModElem>> expected_gap;
    //! Set when the module could not be built; reported as a setup failure.
    std::string load_error;
  };

  struct SuiteConfig {
    //! Only laws whose id contains this string run; empty runs all.
    std::string law_filter;
    bool        parallel = true;
  };

  //! Law ids in the order run_suite emits them.
  std::vector<std::string> law_ids();

  //! Runs every selected law on every member. Reports are ordered by member
  //! then law id order; a member that fails to build yields a single
  //! "setup" report and the suite continues.
  std::vector<LawReport> run_suite(std::vector<CorpusMember> const& corpus,
                                   SuiteConfig const&               config);

  //! "paper" or "default"; throws ConfigError otherwise.
  std::vector<CorpusMember> builtin_corpus(std::string_view name);

}  // namespace modorder

#endif  // MODORDER_LAWS_HPP_
