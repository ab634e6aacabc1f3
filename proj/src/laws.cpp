#include "modorder/laws.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <string>

namespace modorder {

  bool RelationMatrix::applicable() const {
    for (auto const& v : verdicts) {
      if (!v.applicable()) {
        return false;
      }
    }
    return true;
  }

  RelationMatrix compute_matrix(ModuleContext const& ctx, Relation rel) {
    std::size_t const n = ctx.module().size();
    RelationMatrix    out{rel, n, {}};
    out.verdicts.reserve(n * n);
    for (ModElem i = 0; i < n; ++i) {
      for (ModElem j = 0; j < n; ++j) {
        out.verdicts.push_back(decide(ctx, rel, i, j));
      }
    }
    return out;
  }

  RelationMatrix compute_ring_matrix(FiniteRing const& R, Relation rel) {
    std::size_t const n = R.size();
    RelationMatrix    out{rel, n, {}};
    out.verdicts.reserve(n * n);
    for (RingElem i = 0; i < n; ++i) {
      for (RingElem j = 0; j < n; ++j) {
        out.verdicts.push_back(decide_ring(R, rel, i, j));
      }
    }
    return out;
  }

  std::string_view to_string(Outcome o) noexcept {
    switch (o) {
      case Outcome::Pass:
        return "pass";
      case Outcome::Fail:
        return "fail";
      case Outcome::NotApplicable:
        return "not-applicable";
    }
    return "unknown";
  }

  namespace {

    LawReport not_applicable(std::string law, std::string why) {
      LawReport r;
      r.law     = std::move(law);
      r.outcome = Outcome::NotApplicable;
      r.detail  = std::move(why);
      return r;
    }

    LawReport fail(LawReport                 r,
                   std::vector<Index>        operands,
                   std::string               clause,
                   std::vector<OrderVerdict> verdicts = {}) {
      r.outcome        = Outcome::Fail;
      r.counterexample = Counterexample{
          std::move(operands), std::move(clause), std::move(verdicts)};
      return r;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Individual laws
  ////////////////////////////////////////////////////////////////////////

  LawReport check_partial_order(RelationMatrix const& rel,
                                IndexSet const&       domain) {
    LawReport r;
    r.law = "partial-order/" + std::string(tag(rel.relation));
    if (!rel.applicable()) {
      return not_applicable(r.law, "relation is not applicable");
    }
    for (auto m : domain) {
      ++r.checks;
      if (!rel.at(m, m)) {
        return fail(r, {m}, "reflexivity", {rel.verdict(m, m)});
      }
    }
    for (auto i : domain) {
      for (auto j : domain) {
        ++r.checks;
        if (i != j && rel.at(i, j) && rel.at(j, i)) {
          return fail(r,
                      {i, j},
                      "antisymmetry",
                      {rel.verdict(i, j), rel.verdict(j, i)});
        }
      }
    }
    for (auto i : domain) {
      for (auto j : domain) {
        if (!rel.at(i, j)) {
          continue;
        }
        for (auto k : domain) {
          ++r.checks;
          if (rel.at(j, k) && !rel.at(i, k)) {
            return fail(r,
                        {i, j, k},
                        "transitivity",
                        {rel.verdict(i, j), rel.verdict(j, k), rel.verdict(i, k)});
          }
        }
      }
    }
    return r;
  }

  LawReport check_equivalence(RelationMatrix const& a,
                              RelationMatrix const& b,
                              IndexSet const*       domain) {
    LawReport r;
    r.law = "equivalence/" + std::string(tag(a.relation)) + "="
            + std::string(tag(b.relation));
    if (a.size != b.size) {
      throw StructureError("relation matrices have different sizes");
    }
    if (!a.applicable() || !b.applicable()) {
      return not_applicable(r.law, "relation is not applicable");
    }
    std::size_t mismatches = 0;
    for (Index i = 0; i < a.size; ++i) {
      for (Index j = 0; j < a.size; ++j) {
        if (domain && !(domain->contains(i) && domain->contains(j))) {
          continue;
        }
        ++r.checks;
        if (a.at(i, j) != b.at(i, j)) {
          if (mismatches++ == 0) {
            r = fail(r, {i, j}, "mismatch", {a.verdict(i, j), b.verdict(i, j)});
          }
        }
      }
    }
    r.detail = std::to_string(r.checks - mismatches) + "/"
               + std::to_string(r.checks) + " agree";
    return r;
  }

  LawReport check_unit_invariance(ModuleContext const&  ctx,
                                  RelationMatrix const& minus) {
    LawReport r;
    r.law = "unit-invariance";
    if (!ctx.module_regular()) {
      return not_applicable(r.law, "module is not regular");
    }
    FiniteModule const& M = ctx.module();
    EndoRing const&     S = ctx.endo();
    std::size_t const   n = M.size();
    for (auto g : units(S.ring())) {
      for (ModElem i = 0; i < n; ++i) {
        for (ModElem j = 0; j < n; ++j) {
          ++r.checks;
          if (minus.at(i, j) != minus.at(S.apply(g, i), S.apply(g, j))) {
            return fail(r, {g, i, j}, "S-unit g: m1 <= m2 iff g m1 <= g m2");
          }
        }
      }
    }
    for (auto b : units(ctx.ring())) {
      for (ModElem i = 0; i < n; ++i) {
        for (ModElem j = 0; j < n; ++j) {
          ++r.checks;
          if (minus.at(i, j) != minus.at(M.act(i, b), M.act(j, b))) {
            return fail(r, {b, i, j}, "R-unit b: m1 <= m2 iff m1 b <= m2 b");
          }
        }
      }
    }
    return r;
  }

  LawReport check_annihilator_monotone(ModuleContext const&  ctx,
                                       RelationMatrix const& minus) {
    LawReport r;
    r.law = "annihilator-monotone";
    for (ModElem i = 0; i < minus.size; ++i) {
      for (ModElem j = 0; j < minus.size; ++j) {
        if (!minus.at(i, j)) {
          continue;
        }
        ++r.checks;
        if (!ctx.l_ann(j).is_subset_of(ctx.l_ann(i))) {
          return fail(r, {i, j}, "l_S(m2) in l_S(m1)", {minus.verdict(i, j)});
        }
        if (!ctx.r_ann(j).is_subset_of(ctx.r_ann(i))) {
          return fail(r, {i, j}, "r_R(m2) in r_R(m1)", {minus.verdict(i, j)});
        }
      }
    }
    return r;
  }

  LawReport check_subset_property(ModuleContext const&  ctx,
                                  RelationMatrix const& minus) {
    LawReport r;
    r.law = "subset-cyclic";
    for (ModElem i = 0; i < minus.size; ++i) {
      for (ModElem j = 0; j < minus.size; ++j) {
        if (!minus.at(i, j)) {
          continue;
        }
        ++r.checks;
        if (!subset_cyclic(ctx, i, j)) {
          return fail(r, {i, j}, "m1 R in m2 R", {minus.verdict(i, j)});
        }
      }
    }
    return r;
  }

  std::vector<std::pair<ModElem, ModElem>> converse_gaps(
      ModuleContext const&  ctx,
      RelationMatrix const& minus) {
    std::vector<std::pair<ModElem, ModElem>> out;
    for (ModElem i = 0; i < minus.size; ++i) {
      for (ModElem j = 0; j < minus.size; ++j) {
        if (!minus.at(i, j) && ctx.l_ann(j).is_subset_of(ctx.l_ann(i))
            && ctx.r_ann(j).is_subset_of(ctx.r_ann(i))) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  std::optional<std::pair<ModElem, ModElem>> find_converse_gap(
      ModuleContext const&  ctx,
      RelationMatrix const& minus) {
    auto gaps = converse_gaps(ctx, minus);
    if (gaps.empty()) {
      return std::nullopt;
    }
    return gaps.front();
  }

  LawReport check_witness_constructions(ModuleContext const&  ctx,
                                        RelationMatrix const& minus) {
    LawReport           r;
    r.law                 = "witness-constructions";
    FiniteModule const& M = ctx.module();
    FiniteRing const&   R = ctx.ring();
    FiniteRing const&   S = ctx.endo_ring();
    DualSpace const&    D = ctx.dual();
    Submodule const     whole{&M, IndexSet::full(M.size())};

    for (ModElem m = 0; m < M.size(); ++m) {
      for (Index phi = 0; phi < D.size(); ++phi) {
        Index const f  = smash(ctx.endo(), D, m, phi);
        Index const f2 = smash(ctx.endo(), D, M.act(m, D.eval(phi, m)), phi);
        ++r.checks;
        if (S.mul(f, f) != f2) {
          return fail(r, {m, phi}, "(m phi)^2 = (m phi(m)) phi");
        }
        if (M.act(m, D.eval(phi, m)) != m) {
          continue;
        }
        RingElem const e = D.eval(phi, m);
        if (R.mul(e, e) != e) {
          return fail(r, {m, phi}, "phi(m) idempotent in R");
        }
        if (S.mul(f, f) != f) {
          return fail(r, {m, phi}, "m phi idempotent in S");
        }
        auto dec = regular_decomposition(ctx, m, phi);
        if (!is_submodule(M, dec.complement.members)
            || !is_internal_direct_sum(
                Submodule{&M, ctx.cyclic(m)}, dec.complement, whole)) {
          return fail(r, {m, phi}, "M = mR (+) N");
        }
      }
    }
    for (ModElem i = 0; i < minus.size; ++i) {
      for (ModElem j = 0; j < minus.size; ++j) {
        if (!minus.at(i, j)) {
          continue;
        }
        ++r.checks;
        OrderVerdict const v = minus_le_idem(ctx, i, j);
        if (!v.holds()) {
          return fail(r,
                      {i, j},
                      "idempotent witness exists for a related pair",
                      {minus.verdict(i, j), v});
        }
        auto const& w = std::get<IdemPair>(*v.witness);
        ModElem const fm1 = ctx.endo().apply(w.f, i);
        ModElem const fm2 = ctx.endo().apply(w.f, j);
        if (!(fm1 == i && fm2 == i && M.act(i, w.a) == i
              && M.act(j, w.a) == i)) {
          return fail(r, {i, j}, "m1 = f m1 = f m2 = m1 a = m2 a", {v});
        }
      }
    }
    return r;
  }

  LawReport check_star_implications(ModuleContext const& ctx) {
    LawReport r;
    r.law               = "star-implications";
    std::size_t const n = ctx.module().size();
    bool              any = false;
    for (ModElem i = 0; i < n; ++i) {
      if (!ctx.is_regular(i)) {
        continue;
      }
      for (ModElem j = 0; j < n; ++j) {
        OrderVerdict const st = star_le(ctx, i, j);
        OrderVerdict const ls = left_star_le(ctx, i, j);
        OrderVerdict const rs = right_star_le(ctx, i, j);
        OrderVerdict const mi = minus_le_idem(ctx, i, j);
        auto implies = [&](OrderVerdict const& a,
                           OrderVerdict const& b,
                           char const*         clause) -> bool {
          if (!a.applicable() || !b.applicable()) {
            return true;
          }
          any = true;
          ++r.checks;
          if (a.holds() && !b.holds()) {
            r = fail(r, {i, j}, clause, {a, b});
            return false;
          }
          return true;
        };
        if (!implies(st, ls, "star implies left-star")
            || !implies(st, rs, "star implies right-star")
            || !implies(ls, mi, "left-star implies minus")
            || !implies(rs, mi, "right-star implies minus")) {
          return r;
        }
      }
    }
    if (!any) {
      return not_applicable(r.law, "no involution on R or S");
    }
    return r;
  }

  LawReport check_ring_bridge(ModuleContext const&  ctx,
                              RelationMatrix const& minus) {
    LawReport r;
    r.law = "ring-bridge";
    if (!ctx.module().is_ring_module()) {
      return not_applicable(r.law, "module is not R_R");
    }
    if (!is_von_neumann_regular(ctx.ring())) {
      return not_applicable(r.law, "ring is not von Neumann regular");
    }
    for (Relation rel : {Relation::Hartwig, Relation::RingAnnih}) {
      RelationMatrix const ring = compute_ring_matrix(ctx.ring(), rel);
      LawReport            eq   = check_equivalence(minus, ring);
      r.checks += eq.checks;
      if (eq.outcome != Outcome::Pass) {
        eq.law = r.law;
        return eq;
      }
    }
    return r;
  }

  ////////////////////////////////////////////////////////////////////////
  // Suite
  ////////////////////////////////////////////////////////////////////////

  namespace {

    using Matrices = std::map<Relation, RelationMatrix>;

    struct LawSpec {
      std::string                                                  id;
      std::function<LawReport(CorpusMember const&, ModuleContext const&,
                              std::function<RelationMatrix const&(Relation)>)>
          run;
    };

    LawReport partial_order_law(ModuleContext const&                          ctx,
                                std::function<RelationMatrix const&(Relation)> m,
                                Relation rel,
                                bool     needs_r,
                                bool     needs_s) {
      std::string const id = "partial-order/" + std::string(tag(rel));
      if (!ctx.module_regular()) {
        return not_applicable(id, "module is not regular");
      }
      if (needs_r) {
        if (!ctx.ring().has_involution()) {
          return not_applicable(id, "R has no involution");
        }
        if (!is_rickart_star(ctx.ring()).holds) {
          return not_applicable(id, "R is not a Rickart *-ring");
        }
      }
      if (needs_s) {
        if (!ctx.endo_ring().has_involution()) {
          return not_applicable(id, "S has no involution");
        }
        if (!is_rickart_star(ctx.endo_ring()).holds) {
          return not_applicable(id, "S is not a Rickart *-ring");
        }
      }
      return check_partial_order(m(rel), ctx.regular_elements());
    }

    std::vector<LawSpec> const& laws() {
      static std::vector<LawSpec> const all = [] {
        std::vector<LawSpec> v;
        v.push_back({"partial-order/minus", [](auto const&, auto const& ctx, auto m) {
                       auto r = partial_order_law(ctx, m, Relation::MinusDual, false, false);
                       r.law  = "partial-order/minus";
                       return r;
                     }});
        v.push_back({"partial-order/rstar", [](auto const&, auto const& ctx, auto m) {
                       return partial_order_law(ctx, m, Relation::RightStar, true, false);
                     }});
        v.push_back({"partial-order/lstar", [](auto const&, auto const& ctx, auto m) {
                       return partial_order_law(ctx, m, Relation::LeftStar, false, true);
                     }});
        v.push_back({"partial-order/star", [](auto const&, auto const& ctx, auto m) {
                       return partial_order_law(ctx, m, Relation::Star, true, true);
                     }});
        for (Relation rel : minus_characterizations()) {
          if (rel == Relation::MinusDual) {
            continue;
          }
          std::string id = "equivalence/" + std::string(tag(rel));
          v.push_back({id, [rel, id](auto const&, auto const& ctx, auto m) {
                         if (!ctx.module_regular()) {
                           return not_applicable(id, "module is not regular");
                         }
                         auto r = check_equivalence(m(Relation::MinusDual), m(rel));
                         r.law  = id;
                         return r;
                       }});
        }
        v.push_back({"equivalence/mitsch-sym-agreement", [](auto const&, auto const&, auto m) {
                       auto r = check_equivalence(m(Relation::Mitsch), m(Relation::MitschSym));
                       r.law  = "equivalence/mitsch-sym-agreement";
                       return r;
                     }});
        v.push_back({"equivalence/dsum-regular-operands",
                     [](auto const&, auto const& ctx, auto m) {
                       IndexSet const dom = ctx.regular_elements();
                       auto r = check_equivalence(m(Relation::MinusDual), m(Relation::DirectSum), &dom);
                       r.law = "equivalence/dsum-regular-operands";
                       return r;
                     }});
        v.push_back({"subset-cyclic", [](auto const&, auto const& ctx, auto m) {
                       return check_subset_property(ctx, m(Relation::MinusDual));
                     }});
        v.push_back({"unit-invariance", [](auto const&, auto const& ctx, auto m) {
                       return check_unit_invariance(ctx, m(Relation::MinusDual));
                     }});
        v.push_back({"annihilator-monotone", [](auto const&, auto const& ctx, auto m) {
                       return check_annihilator_monotone(ctx, m(Relation::MinusDual));
                     }});
        v.push_back({"witness-constructions", [](auto const&, auto const& ctx, auto m) {
                       return check_witness_constructions(ctx, m(Relation::MinusDual));
                     }});
        v.push_back({"star-implications", [](auto const&, auto const& ctx, auto) {
                       return check_star_implications(ctx);
                     }});
        v.push_back({"ring-bridge", [](auto const&, auto const& ctx, auto m) {
                       return check_ring_bridge(ctx, m(Relation::MinusDual));
                     }});
        v.push_back({"recorded-claims", [](CorpusMember const& member,
                                        ModuleContext const& ctx,
                                        auto                 m) {
                       LawReport r;
                       r.law = "recorded-claims";
                       if (member.expected.empty() && !member.expected_gap) {
                         return not_applicable(r.law, "no recorded claims");
                       }
                       for (auto const& e : member.expected) {
                         ++r.checks;
                         OrderVerdict const v = decide(ctx, e.relation, e.lhs, e.rhs);
                         if (v.holds() != e.holds) {
                           return fail(r,
                                       {e.lhs, e.rhs},
                                       std::string(tag(e.relation))
                                           + (e.holds ? " expected to hold"
                                                      : " expected not to hold"),
                                       {v});
                         }
                       }
                       if (member.expected_gap) {
                         ++r.checks;
                         auto gaps = converse_gaps(ctx, m(Relation::MinusDual));
                         auto [a, b] = *member.expected_gap;
                         if (std::find(gaps.begin(), gaps.end(), *member.expected_gap)
                             == gaps.end()) {
                           return fail(r, {a, b}, "expected converse gap not found");
                         }
                       }
                       return r;
                     }});
        return v;
      }();
      return all;
    }

    std::vector<LawReport> run_member(CorpusMember const& member,
                                      SuiteConfig const&  config) {
      std::vector<LawReport> out;
      std::unique_ptr<ModuleContext> ctx;
      try {
        if (!member.module) {
          throw StructureError(member.load_error.empty()
                                   ? "corpus member has no module"
                                   : member.load_error);
        }
        ctx = std::make_unique<ModuleContext>(member.module, member.endo_involution);
      } catch (std::exception const& e) {
        LawReport r;
        r.law     = "setup";
        r.corpus  = member.id;
        r.outcome = Outcome::Fail;
        r.detail  = e.what();
        out.push_back(std::move(r));
        return out;
      }

      Matrices cache;
      auto     matrix = [&](Relation rel) -> RelationMatrix const& {
        auto it = cache.find(rel);
        if (it == cache.end()) {
          it = cache.emplace(rel, compute_matrix(*ctx, rel)).first;
        }
        return it->second;
      };

      for (auto const& law : laws()) {
        if (!config.law_filter.empty()
            && law.id.find(config.law_filter) == std::string::npos) {
          continue;
        }
        auto const start = std::chrono::steady_clock::now();
        LawReport  r;
        try {
          r = law.run(member, *ctx, matrix);
        } catch (std::exception const& e) {
          r.outcome = Outcome::Fail;
          r.detail  = e.what();
        }
        r.law     = law.id;
        r.corpus  = member.id;
        r.elapsed = std::chrono::steady_clock::now() - start;
        out.push_back(std::move(r));
      }
      return out;
    }

  }  // namespace

  std::vector<std::string> law_ids() {
    std::vector<std::string> out;
    for (auto const& l : laws()) {
      out.push_back(l.id);
    }
    return out;
  }

  std::vector<LawReport> run_suite(std::vector<CorpusMember> const& corpus,
                                   SuiteConfig const&               config) {
    std::vector<std::vector<LawReport>> per_member(corpus.size());
    if (config.parallel && corpus.size() > 1) {
      std::vector<std::future<std::vector<LawReport>>> jobs;
      for (auto const& member : corpus) {
        jobs.push_back(std::async(std::launch::async, [&member, &config] {
          return run_member(member, config);
        }));
      }
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        per_member[i] = jobs[i].get();
      }
    } else {
      for (std::size_t i = 0; i < corpus.size(); ++i) {
        per_member[i] = run_member(corpus[i], config);
      }
    }
    std::vector<LawReport> out;
    for (auto& reports : per_member) {
      for (auto& r : reports) {
        out.push_back(std::move(r));
      }
    }
    return out;
  }

  std::vector<CorpusMember> builtin_corpus(std::string_view name) {
    auto member = [](std::string id, FiniteModule M) {
      CorpusMember c;
      c.id     = std::move(id);
      c.module = std::make_shared<FiniteModule const>(std::move(M));
      return c;
    };
    CorpusMember z10 = member("Z10/Z10", FiniteModule::zm_over_zn(10, 10));
    z10.expected     = {{Relation::MinusDual, 2, 6, false},
                        {Relation::Jones, 2, 6, false}};
    z10.expected_gap = std::pair<ModElem, ModElem>{2, 6};
    CorpusMember z6_30 = member("Z6/Z30", FiniteModule::zm_over_zn(6, 30));
    z6_30.expected     = {{Relation::DirectSum, 2, 5, true},
                          {Relation::MinusDual, 2, 5, true}};
    CorpusMember z6 = member("Z6/Z6", FiniteModule::zm_over_zn(6, 6));

    if (name == "paper") {
      return {z10, z6_30, z6};
    }
    if (name == "default") {
      auto z2x3 = std::make_shared<FiniteRing const>(
          FiniteRing::product(FiniteRing::zn(2), FiniteRing::zn(3)));
      auto m22 = std::make_shared<FiniteRing const>(FiniteRing::matrix2(2));
      return {z6,
              z10,
              z6_30,
              member("RR(Z2xZ3)", FiniteModule::ring_as_module(z2x3)),
              member("RR(M2(Z2))", FiniteModule::ring_as_module(m22))};
    }
    throw ConfigError("unknown corpus '" + std::string(name)
                      + "' (known: paper, default)");
  }

}  // namespace modorder
