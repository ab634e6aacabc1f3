#ifndef MODORDER_ORDERS_HPP_
#define MODORDER_ORDERS_HPP_

#include <memory>
#include <optional>
#include <vector>

#include "modorder/hom.hpp"
#include "modorder/module.hpp"
#include "modorder/ring.hpp"
#include "modorder/verdict.hpp"

namespace modorder {

  //! Everything the relation deciders quantify over, computed once for a
  //! module: the dual M*, S = End(M), idempotents and projections of R and S,
  //! and the per-element annihilators. Immutable after construction, so a
  //! context may be shared across threads.
  class ModuleContext {
   public:
    explicit ModuleContext(std::shared_ptr<FiniteModule const> M,
                           std::optional<std::vector<Index>> endo_involution
                           = {});

    FiniteModule const& module() const noexcept {
      return *module_;
    }
    std::shared_ptr<FiniteModule const> const& module_ptr() const noexcept {
      return module_;
    }
    FiniteRing const& ring() const noexcept {
      return module_->ring();
    }
    DualSpace const& dual() const noexcept {
      return dual_;
    }
    EndoRing const& endo() const noexcept {
      return endo_;
    }
    FiniteRing const& endo_ring() const noexcept {
      return endo_.ring();
    }

    IndexSet const& ring_idempotents() const noexcept {
      return ring_idem_;
    }
    IndexSet const& endo_idempotents() const noexcept {
      return endo_idem_;
    }
    //! Empty optional when the ring carries no involution.
    std::optional<IndexSet> const& ring_projections() const noexcept {
      return ring_proj_;
    }
    std::optional<IndexSet> const& endo_projections() const noexcept {
      return endo_proj_;
    }

    //! r_R(m), m in M
    IndexSet const& r_ann(ModElem m) const {
      return r_ann_m_[m];
    }
    //! l_S(m), m in M
    IndexSet const& l_ann(ModElem m) const {
      return l_ann_m_[m];
    }
    //! r_R(a), a in R
    IndexSet const& ring_r_ann(RingElem a) const {
      return r_ann_ring_[a];
    }
    //! l_S(f), f in S (annihilator inside the ring S)
    IndexSet const& endo_l_ann(Index f) const {
      return l_ann_endo_[f];
    }
    //! mR
    IndexSet const& cyclic(ModElem m) const {
      return cyclic_[m];
    }

    //! First phi (by dual index) with m = m phi(m).
    std::optional<Index> regular_witness(ModElem m) const {
      return regular_witness_[m];
    }
    bool is_regular(ModElem m) const {
      return regular_witness_[m].has_value();
    }
    bool module_regular() const noexcept {
      return module_regular_;
    }
    IndexSet regular_elements() const;

    //! Throws StructureError when m is out of range.
    void check_element(ModElem m) const;

   private:
    std::shared_ptr<FiniteModule const> module_;
    DualSpace                           dual_;
    EndoRing                            endo_;
    IndexSet                            ring_idem_;
    IndexSet                            endo_idem_;
    std::optional<IndexSet>             ring_proj_;
    std::optional<IndexSet>             endo_proj_;
    std::vector<IndexSet>               r_ann_m_;
    std::vector<IndexSet>               l_ann_m_;
    std::vector<IndexSet>               r_ann_ring_;
    std::vector<IndexSet>               l_ann_endo_;
    std::vector<IndexSet>               cyclic_;
    std::vector<std::optional<Index>>   regular_witness_;
    bool                                module_regular_ = true;
  };

  ////////////////////////////////////////////////////////////////////////
  // Regularity
  ////////////////////////////////////////////////////////////////////////

  //! m = m phi(m) for some phi in M*; relation tag Regular, lhs = rhs = m.
  OrderVerdict is_regular_element(ModuleContext const& ctx, ModElem m);

  struct RegularityReport {
    bool                   regular = true;
    std::optional<ModElem> first_failure;
  };
  RegularityReport is_regular_module(ModuleContext const& ctx);

  //! e = phi(m) and N = {n : m phi(n) = 0} with M = mR (+) N.
  struct RegularDecomposition {
    RingElem  idempotent;
    Submodule complement;
  };
  //! Throws StructureError when phi does not witness regularity of m.
  RegularDecomposition regular_decomposition(ModuleContext const& ctx,
                                             ModElem              m,
                                             Index                phi);

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  OrderVerdict minus_le_dual(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict minus_le_idem(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict minus_le_relaxed(ModuleContext const& ctx,
                                ModElem              m1,
                                ModElem              m2);
  OrderVerdict minus_le_image(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict jones_le(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict mitsch_le(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict mitsch_le_sym(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict corollary_gb_le(ModuleContext const& ctx,
                               ModElem              m1,
                               ModElem              m2);
  OrderVerdict direct_sum_le(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict right_star_le(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict left_star_le(ModuleContext const& ctx, ModElem m1, ModElem m2);
  OrderVerdict star_le(ModuleContext const& ctx, ModElem m1, ModElem m2);
  //! m1 R subset of m2 R, packaged as a verdict without witness data beyond
  //! the two cyclic submodules.
  OrderVerdict subset_cyclic_le(ModuleContext const& ctx,
                                ModElem              m1,
                                ModElem              m2);
  bool subset_cyclic(ModuleContext const& ctx, ModElem m1, ModElem m2);

  //! Dispatch on a module relation tag (ring relations go through
  //! decide_ring).
  OrderVerdict decide(ModuleContext const& ctx,
                      Relation             rel,
                      ModElem              m1,
                      ModElem              m2);

  //! Ring relations on a ring.
  OrderVerdict decide_ring(FiniteRing const& R,
                           Relation          rel,
                           RingElem          a,
                           RingElem          b);

  //! Replays the defining equations of the verdict's relation against its
  //! witness. False for verdicts that do not hold.
  bool replay(ModuleContext const& ctx, OrderVerdict const& v);

}  // namespace modorder

#endif  // MODORDER_ORDERS_HPP_
