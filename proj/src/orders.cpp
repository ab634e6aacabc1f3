#include "modorder/orders.hpp"

#include <functional>
#include <string>

namespace modorder {

  ////////////////////////////////////////////////////////////////////////
  // ModuleContext
  ////////////////////////////////////////////////////////////////////////

  ModuleContext::ModuleContext(std::shared_ptr<FiniteModule const> M,
                               std::optional<std::vector<Index>> endo_involution)
      : module_(M), dual_(M), endo_(M, std::move(endo_involution)) {
    FiniteRing const& R = ring();
    FiniteRing const& S = endo_ring();
    ring_idem_          = idempotents(R);
    endo_idem_          = idempotents(S);
    if (R.has_involution()) {
      ring_proj_ = projections(R);
    }
    if (S.has_involution()) {
      endo_proj_ = projections(S);
    }
    for (ModElem m = 0; m < module_->size(); ++m) {
      r_ann_m_.push_back(right_ann_R(*module_, m));
      l_ann_m_.push_back(left_ann_S(endo_, m));
      cyclic_.push_back(cyclic_submodule(*module_, m).members);

      std::optional<Index> w;
      for (Index phi = 0; phi < dual_.size() && !w; ++phi) {
        if (module_->act(m, dual_.eval(phi, m)) == m) {
          w = phi;
        }
      }
      regular_witness_.push_back(w);
      module_regular_ = module_regular_ && w.has_value();
    }
    for (RingElem a = 0; a < R.size(); ++a) {
      r_ann_ring_.push_back(right_ann_ring(R, a));
    }
    for (Index f = 0; f < S.size(); ++f) {
      l_ann_endo_.push_back(left_ann_ring(S, f));
    }
  }

  IndexSet ModuleContext::regular_elements() const {
    std::vector<bool> mask(module_->size());
    for (ModElem m = 0; m < module_->size(); ++m) {
      mask[m] = is_regular(m);
    }
    return IndexSet::from_mask(mask);
  }

  void ModuleContext::check_element(ModElem m) const {
    if (m >= module_->size()) {
      throw StructureError("element " + std::to_string(m)
                           + " is out of range for " + module_->name()
                           + " of size " + std::to_string(module_->size()));
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Regularity
  ////////////////////////////////////////////////////////////////////////

  OrderVerdict is_regular_element(ModuleContext const& ctx, ModElem m) {
    ctx.check_element(m);
    if (auto phi = ctx.regular_witness(m)) {
      return OrderVerdict::yes(Relation::Regular, m, m, DualWitness{*phi});
    }
    return OrderVerdict::no(Relation::Regular, m, m);
  }

  RegularityReport is_regular_module(ModuleContext const& ctx) {
    for (ModElem m = 0; m < ctx.module().size(); ++m) {
      if (!ctx.is_regular(m)) {
        return {false, m};
      }
    }
    return {};
  }

  RegularDecomposition regular_decomposition(ModuleContext const& ctx,
                                             ModElem              m,
                                             Index                phi) {
    ctx.check_element(m);
    FiniteModule const& M = ctx.module();
    if (phi >= ctx.dual().size()) {
      throw StructureError("functional index out of range");
    }
    RingElem const e = ctx.dual().eval(phi, m);
    if (M.act(m, e) != m) {
      throw StructureError("functional " + std::to_string(phi)
                           + " does not witness regularity of "
                           + std::to_string(m));
    }
    std::vector<Index> complement;
    for (ModElem n = 0; n < M.size(); ++n) {
      if (M.act(m, ctx.dual().eval(phi, n)) == M.zero()) {
        complement.push_back(n);
      }
    }
    return {e, Submodule{&M, IndexSet(M.size(), std::move(complement))}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Clause checks. Each relation splits into a condition on the S-side
  // witness and one on the R-side witness, so the two are searched
  // independently; the first f and the first a found give the
  // lexicographically least pair.
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool dual_clauses(ModuleContext const& ctx,
                      ModElem              m1,
                      ModElem              m2,
                      Index                phi) {
      FiniteModule const& M = ctx.module();
      DualSpace const&    D = ctx.dual();
      if (M.act(m1, D.eval(phi, m1)) != m1
          || D.eval(phi, m1) != D.eval(phi, m2)) {
        return false;
      }
      for (ModElem x = 0; x < M.size(); ++x) {
        if (M.act(m1, D.eval(phi, x)) != M.act(m2, D.eval(phi, x))) {
          return false;
        }
      }
      return true;
    }

    enum class AnnMode { Equal, Relaxed, Image };

    // l_S(m1) vs l_S(f) and f m1 = f m2.
    bool f_clauses(ModuleContext const& ctx,
                   AnnMode              mode,
                   ModElem              m1,
                   ModElem              m2,
                   Index                f) {
      EndoRing const& S = ctx.endo();
      if (S.apply(f, m1) != S.apply(f, m2)) {
        return false;
      }
      switch (mode) {
        case AnnMode::Equal:
          return ctx.endo_l_ann(f) == ctx.l_ann(m1);
        case AnnMode::Relaxed:
          return ctx.endo_l_ann(f).is_subset_of(ctx.l_ann(m1));
        case AnnMode::Image:
          return ctx.cyclic(m1).is_subset_of(image_set(S, f).members);
      }
      return false;
    }

    // r_R(m1) vs r_R(a) and m1 a = m2 a.
    bool a_clauses(ModuleContext const& ctx,
                   AnnMode              mode,
                   ModElem              m1,
                   ModElem              m2,
                   RingElem             a) {
      FiniteModule const& M = ctx.module();
      if (M.act(m1, a) != M.act(m2, a)) {
        return false;
      }
      switch (mode) {
        case AnnMode::Equal:
          return ctx.ring_r_ann(a) == ctx.r_ann(m1);
        case AnnMode::Relaxed:
          return ctx.ring_r_ann(a).is_subset_of(ctx.r_ann(m1));
        case AnnMode::Image:
          return s_orbit(ctx.endo(), m1)
              .members.is_subset_of(m_times(M, a).members);
      }
      return false;
    }

    std::optional<Index> first_of(IndexSet const&                   candidates,
                                  std::function<bool(Index)> const& pred) {
      for (auto c : candidates) {
        if (pred(c)) {
          return c;
        }
      }
      return std::nullopt;
    }

    std::optional<Index> first_below(std::size_t                       n,
                                     std::function<bool(Index)> const& pred) {
      for (Index c = 0; c < n; ++c) {
        if (pred(c)) {
          return c;
        }
      }
      return std::nullopt;
    }

    OrderVerdict idempotent_pair(ModuleContext const& ctx,
                                 Relation             rel,
                                 AnnMode              mode,
                                 IndexSet const&      f_candidates,
                                 IndexSet const&      a_candidates,
                                 bool                 f_proj,
                                 bool                 a_proj,
                                 ModElem              m1,
                                 ModElem              m2) {
      auto f = first_of(f_candidates,
                        [&](Index g) { return f_clauses(ctx, mode, m1, m2, g); });
      std::optional<Index> a;
      if (f) {
        a = first_of(a_candidates, [&](Index b) {
          return a_clauses(ctx, mode, m1, m2, b);
        });
      }
      if (f && a) {
        return OrderVerdict::yes(rel, m1, m2, IdemPair{*f, *a, f_proj, a_proj});
      }
      return OrderVerdict::no(rel, m1, m2);
    }

    void check_pair(ModuleContext const& ctx, ModElem m1, ModElem m2) {
      ctx.check_element(m1);
      ctx.check_element(m2);
    }

    OrderVerdict flag_if(OrderVerdict v, bool violated, char const* why) {
      if (violated) {
        v.hypothesis_violated = true;
        v.note                = why;
      }
      return v;
    }

    constexpr char const* kOperandNotRegular
        = "hypothesis violated: left operand is not regular";
    constexpr char const* kModuleNotRegular
        = "hypothesis violated: module is not regular";

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Relations
  ////////////////////////////////////////////////////////////////////////

  OrderVerdict minus_le_dual(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    check_pair(ctx, m1, m2);
    for (Index phi = 0; phi < ctx.dual().size(); ++phi) {
      if (dual_clauses(ctx, m1, m2, phi)) {
        return OrderVerdict::yes(Relation::MinusDual, m1, m2, DualWitness{phi});
      }
    }
    return OrderVerdict::no(Relation::MinusDual, m1, m2);
  }

  OrderVerdict minus_le_idem(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    check_pair(ctx, m1, m2);
    return flag_if(idempotent_pair(ctx,
                                   Relation::MinusIdem,
                                   AnnMode::Equal,
                                   ctx.endo_idempotents(),
                                   ctx.ring_idempotents(),
                                   false,
                                   false,
                                   m1,
                                   m2),
                   !ctx.is_regular(m1),
                   kOperandNotRegular);
  }

  OrderVerdict minus_le_relaxed(ModuleContext const& ctx,
                                ModElem              m1,
                                ModElem              m2) {
    check_pair(ctx, m1, m2);
    return flag_if(idempotent_pair(ctx,
                                   Relation::MinusRelaxed,
                                   AnnMode::Relaxed,
                                   ctx.endo_idempotents(),
                                   ctx.ring_idempotents(),
                                   false,
                                   false,
                                   m1,
                                   m2),
                   !ctx.module_regular(),
                   kModuleNotRegular);
  }

  OrderVerdict minus_le_image(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    check_pair(ctx, m1, m2);
    return flag_if(idempotent_pair(ctx,
                                   Relation::MinusImage,
                                   AnnMode::Image,
                                   ctx.endo_idempotents(),
                                   ctx.ring_idempotents(),
                                   false,
                                   false,
                                   m1,
                                   m2),
                   !ctx.module_regular(),
                   kModuleNotRegular);
  }

  OrderVerdict jones_le(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    check_pair(ctx, m1, m2);
    EndoRing const&     S = ctx.endo();
    FiniteModule const& M = ctx.module();
    auto f = first_of(ctx.endo_idempotents(),
                      [&](Index g) { return S.apply(g, m2) == m1; });
    auto a = first_of(ctx.ring_idempotents(),
                      [&](Index b) { return M.act(m2, b) == m1; });
    if (f && a) {
      return OrderVerdict::yes(Relation::Jones, m1, m2, IdemPair{*f, *a});
    }
    return OrderVerdict::no(Relation::Jones, m1, m2);
  }

  namespace {
    OrderVerdict map_pair(ModuleContext const&              ctx,
                          Relation                          rel,
                          ModElem                           m1,
                          ModElem                           m2,
                          std::function<bool(Index)> const& f_ok,
                          std::function<bool(Index)> const& a_ok) {
      check_pair(ctx, m1, m2);
      auto f = first_below(ctx.endo().size(), f_ok);
      auto a = f ? first_below(ctx.ring().size(), a_ok) : std::nullopt;
      if (f && a) {
        return OrderVerdict::yes(rel, m1, m2, MapPair{*f, *a});
      }
      return OrderVerdict::no(rel, m1, m2);
    }
  }  // namespace

  OrderVerdict mitsch_le(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    EndoRing const&     S = ctx.endo();
    FiniteModule const& M = ctx.module();
    return map_pair(
        ctx,
        Relation::Mitsch,
        m1,
        m2,
        [&](Index f) { return S.apply(f, m2) == m1 && S.apply(f, m1) == m1; },
        [&](Index a) { return M.act(m2, a) == m1; });
  }

  OrderVerdict mitsch_le_sym(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    EndoRing const&     S = ctx.endo();
    FiniteModule const& M = ctx.module();
    return map_pair(
        ctx,
        Relation::MitschSym,
        m1,
        m2,
        [&](Index f) { return S.apply(f, m2) == m1 && S.apply(f, m1) == m1; },
        [&](Index a) { return M.act(m2, a) == m1 && M.act(m1, a) == m1; });
  }

  OrderVerdict corollary_gb_le(ModuleContext const& ctx,
                               ModElem              m1,
                               ModElem              m2) {
    EndoRing const&     S = ctx.endo();
    FiniteModule const& M = ctx.module();
    return flag_if(
        map_pair(
            ctx,
            Relation::Gb,
            m1,
            m2,
            [&](Index g) { return S.apply(g, m2) == m1; },
            [&](Index b) { return M.act(m2, b) == m1 && M.act(m1, b) == m1; }),
        !ctx.module_regular(),
        kModuleNotRegular);
  }

  OrderVerdict direct_sum_le(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    check_pair(ctx, m1, m2);
    FiniteModule const& M = ctx.module();
    Submodule const     A{&M, ctx.cyclic(m1)};
    Submodule const     B{&M, ctx.cyclic(M.sub(m2, m1))};
    Submodule const     T{&M, ctx.cyclic(m2)};
    OrderVerdict        v
        = is_internal_direct_sum(A, B, T)
              ? OrderVerdict::yes(Relation::DirectSum,
                                  m1,
                                  m2,
                                  DirectSumWitness{A.members, B.members})
              : OrderVerdict::no(Relation::DirectSum, m1, m2);
    return flag_if(std::move(v),
                   !(ctx.is_regular(m1) && ctx.is_regular(m2)),
                   "hypothesis violated: an operand is not regular");
  }

  namespace {
    OrderVerdict star_family(ModuleContext const& ctx,
                             Relation             rel,
                             bool                 f_proj,
                             bool                 a_proj,
                             ModElem              m1,
                             ModElem              m2) {
      check_pair(ctx, m1, m2);
      if (a_proj && !ctx.ring_projections()) {
        return OrderVerdict::not_applicable(
            rel, m1, m2, "base ring " + ctx.ring().name() + " has no involution");
      }
      if (f_proj && !ctx.endo_projections()) {
        return OrderVerdict::not_applicable(
            rel,
            m1,
            m2,
            "endomorphism ring is noncommutative and no involution was "
            "supplied");
      }
      IndexSet const& fs = f_proj ? *ctx.endo_projections() : ctx.endo_idempotents();
      IndexSet const& as = a_proj ? *ctx.ring_projections() : ctx.ring_idempotents();
      return flag_if(
          idempotent_pair(
              ctx, rel, AnnMode::Equal, fs, as, f_proj, a_proj, m1, m2),
          !ctx.module_regular(),
          kModuleNotRegular);
    }
  }  // namespace

  OrderVerdict right_star_le(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    return star_family(ctx, Relation::RightStar, false, true, m1, m2);
  }

  OrderVerdict left_star_le(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    return star_family(ctx, Relation::LeftStar, true, false, m1, m2);
  }

  OrderVerdict star_le(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    return star_family(ctx, Relation::Star, true, true, m1, m2);
  }

  bool subset_cyclic(ModuleContext const& ctx, ModElem m1, ModElem m2) {
    check_pair(ctx, m1, m2);
    return ctx.cyclic(m1).is_subset_of(ctx.cyclic(m2));
  }

  OrderVerdict subset_cyclic_le(ModuleContext const& ctx,
                                ModElem              m1,
                                ModElem              m2) {
    if (subset_cyclic(ctx, m1, m2)) {
      return OrderVerdict::yes(Relation::SubsetCyclic,
                               m1,
                               m2,
                               CyclicInclusion{ctx.cyclic(m1), ctx.cyclic(m2)});
    }
    return OrderVerdict::no(Relation::SubsetCyclic, m1, m2);
  }

  OrderVerdict decide(ModuleContext const& ctx,
                      Relation             rel,
                      ModElem              m1,
                      ModElem              m2) {
    switch (rel) {
      case Relation::Regular:
        return is_regular_element(ctx, m1);
      case Relation::MinusDual:
        return minus_le_dual(ctx, m1, m2);
      case Relation::MinusIdem:
        return minus_le_idem(ctx, m1, m2);
      case Relation::MinusRelaxed:
        return minus_le_relaxed(ctx, m1, m2);
      case Relation::MinusImage:
        return minus_le_image(ctx, m1, m2);
      case Relation::Jones:
        return jones_le(ctx, m1, m2);
      case Relation::Mitsch:
        return mitsch_le(ctx, m1, m2);
      case Relation::MitschSym:
        return mitsch_le_sym(ctx, m1, m2);
      case Relation::Gb:
        return corollary_gb_le(ctx, m1, m2);
      case Relation::DirectSum:
        return direct_sum_le(ctx, m1, m2);
      case Relation::RightStar:
        return right_star_le(ctx, m1, m2);
      case Relation::LeftStar:
        return left_star_le(ctx, m1, m2);
      case Relation::Star:
        return star_le(ctx, m1, m2);
      case Relation::SubsetCyclic:
        return subset_cyclic_le(ctx, m1, m2);
      case Relation::Hartwig:
      case Relation::RingAnnih:
        break;
    }
    throw ConfigError(std::string("relation ") + std::string(tag(rel))
                      + " is a ring relation; use ring mode");
  }

  OrderVerdict decide_ring(FiniteRing const& R,
                           Relation          rel,
                           RingElem          a,
                           RingElem          b) {
    if (a >= R.size() || b >= R.size()) {
      throw StructureError("ring element out of range for " + R.name()
                           + " of size " + std::to_string(R.size()));
    }
    switch (rel) {
      case Relation::Hartwig:
        return hartwig_minus_le(R, a, b);
      case Relation::RingAnnih:
        return ring_minus_le_annih(R, a, b);
      default:
        break;
    }
    throw ConfigError(std::string("relation ") + std::string(tag(rel))
                      + " is a module relation; use module mode");
  }

  ////////////////////////////////////////////////////////////////////////
  // Replay. Recomputes annihilators and orbits from the raw tables rather
  // than from the context caches.
  ////////////////////////////////////////////////////////////////////////

  namespace {

    bool replay_idem(ModuleContext const& ctx,
                     OrderVerdict const&  v,
                     IdemPair const&      w) {
      FiniteModule const& M  = ctx.module();
      EndoRing const&     S  = ctx.endo();
      FiniteRing const&   SR = S.ring();
      FiniteRing const&   R  = M.ring();
      ModElem const       m1 = v.lhs, m2 = v.rhs;
      if (w.f >= S.size() || w.a >= R.size()) {
        return false;
      }
      bool const needs_idempotent = v.relation != Relation::Mitsch
                                    && v.relation != Relation::MitschSym
                                    && v.relation != Relation::Gb;
      if (needs_idempotent
          && (SR.mul(w.f, w.f) != w.f || R.mul(w.a, w.a) != w.a)) {
        return false;
      }
      bool const f_proj
          = v.relation == Relation::LeftStar || v.relation == Relation::Star;
      bool const a_proj
          = v.relation == Relation::RightStar || v.relation == Relation::Star;
      if (f_proj && (!SR.has_involution() || SR.star(w.f) != w.f)) {
        return false;
      }
      if (a_proj && (!R.has_involution() || R.star(w.a) != w.a)) {
        return false;
      }

      if (v.relation == Relation::Jones) {
        return S.apply(w.f, m2) == m1 && M.act(m2, w.a) == m1;
      }
      if (S.apply(w.f, m1) != S.apply(w.f, m2)
          || M.act(m1, w.a) != M.act(m2, w.a)) {
        return false;
      }
      IndexSet const ls_m1 = left_ann_S(S, m1);
      IndexSet const rr_m1 = right_ann_R(M, m1);
      IndexSet const ls_f  = left_ann_ring(SR, w.f);
      IndexSet const rr_a  = right_ann_ring(R, w.a);
      switch (v.relation) {
        case Relation::MinusRelaxed:
          return ls_f.is_subset_of(ls_m1) && rr_a.is_subset_of(rr_m1);
        case Relation::MinusImage:
          return cyclic_submodule(M, m1).members.is_subset_of(
                     image_set(S, w.f).members)
                 && s_orbit(S, m1).members.is_subset_of(
                     m_times(M, w.a).members);
        default:
          return ls_f == ls_m1 && rr_a == rr_m1;
      }
    }

    bool replay_maps(ModuleContext const& ctx,
                     OrderVerdict const&  v,
                     MapPair const&       w) {
      FiniteModule const& M  = ctx.module();
      EndoRing const&     S  = ctx.endo();
      ModElem const       m1 = v.lhs, m2 = v.rhs;
      if (w.f >= S.size() || w.a >= M.ring().size()) {
        return false;
      }
      bool const base = S.apply(w.f, m2) == m1 && M.act(m2, w.a) == m1;
      switch (v.relation) {
        case Relation::Mitsch:
          return base && S.apply(w.f, m1) == m1;
        case Relation::MitschSym:
          return base && S.apply(w.f, m1) == m1 && M.act(m1, w.a) == m1;
        case Relation::Gb:
          return base && M.act(m1, w.a) == m1;
        default:
          return false;
      }
    }

  }  // namespace

  bool replay(ModuleContext const& ctx, OrderVerdict const& v) {
    if (!v.holds() || !v.witness) {
      return false;
    }
    if (is_ring_relation(v.relation)) {
      return replay_ring(ctx.ring(), v);
    }
    FiniteModule const& M  = ctx.module();
    ModElem const       m1 = v.lhs, m2 = v.rhs;
    if (m1 >= M.size() || m2 >= M.size()) {
      return false;
    }
    Witness const& w = *v.witness;

    if (auto const* d = std::get_if<DualWitness>(&w)) {
      if (d->functional >= ctx.dual().size()) {
        return false;
      }
      if (v.relation == Relation::Regular) {
        return M.act(m1, ctx.dual().eval(d->functional, m1)) == m1;
      }
      return v.relation == Relation::MinusDual
             && dual_clauses(ctx, m1, m2, d->functional);
    }
    if (auto const* p = std::get_if<IdemPair>(&w)) {
      return replay_idem(ctx, v, *p);
    }
    if (auto const* p = std::get_if<MapPair>(&w)) {
      return replay_maps(ctx, v, *p);
    }
    if (auto const* d = std::get_if<DirectSumWitness>(&w)) {
      Submodule const A = cyclic_submodule(M, m1);
      Submodule const B = cyclic_submodule(M, M.sub(m2, m1));
      return v.relation == Relation::DirectSum && A.members == d->first
             && B.members == d->second
             && is_internal_direct_sum(A, B, cyclic_submodule(M, m2));
    }
    if (auto const* c = std::get_if<CyclicInclusion>(&w)) {
      IndexSet const a = cyclic_submodule(M, m1).members;
      IndexSet const b = cyclic_submodule(M, m2).members;
      return v.relation == Relation::SubsetCyclic && a == c->lhs
             && b == c->rhs && a.is_subset_of(b);
    }
    return false;
  }

}  // namespace modorder
