#include "modorder/hom.hpp"

#include <limits>
#include <string>
#include <utility>

namespace modorder {

  namespace {

    constexpr Index kUnset = std::numeric_limits<Index>::max();

    // Codomain as seen by the enumerator; lets the dual use R_R without
    // materializing it as a (size-capped) FiniteModule.
    template <typename Add, typename Act>
    struct Codomain {
      std::size_t size;
      Index       zero;
      Add         add;
      Act         act;
    };

    template <typename Add, typename Act>
    bool linear_on(FiniteModule const&             dom,
                   Codomain<Add, Act> const&       cod,
                   std::vector<Index> const&       h) {
      std::size_t const k = dom.ring().size();
      for (Index x = 0; x < dom.size(); ++x) {
        for (Index y = 0; y < dom.size(); ++y) {
          if (h[dom.add(x, y)] != cod.add(h[x], h[y])) {
            return false;
          }
        }
        for (Index r = 0; r < k; ++r) {
          if (h[dom.act(x, r)] != cod.act(h[x], r)) {
            return false;
          }
        }
      }
      return true;
    }

    template <typename Add, typename Act>
    std::vector<ModHom> enumerate(FiniteModule const&       dom,
                                  Codomain<Add, Act> const& cod) {
      std::vector<ModElem> const gens = generating_set(dom);
      std::size_t const          k    = dom.ring().size();

      std::size_t total = 1;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (total > kMaxHomCandidates / cod.size) {
          throw CapacityError("hom enumeration needs more than "
                              + std::to_string(kMaxHomCandidates)
                              + " candidate assignments");
        }
        total *= cod.size;
      }

      std::vector<ModHom>  out;
      std::vector<Index>   table(dom.size());
      std::vector<ModElem> assigned;
      std::vector<Index>   choice(gens.size(), 0);

      for (std::size_t c = 0; c < total; ++c) {
        // choice[0] is the most significant digit.
        std::size_t rest = c;
        for (std::size_t i = gens.size(); i-- > 0;) {
          choice[i] = static_cast<Index>(rest % cod.size);
          rest /= cod.size;
        }

        std::fill(table.begin(), table.end(), kUnset);
        assigned.clear();
        bool consistent = true;
        auto assign     = [&](ModElem x, Index v) {
          if (table[x] == kUnset) {
            table[x] = v;
            assigned.push_back(x);
          } else if (table[x] != v) {
            consistent = false;
          }
        };
        assign(dom.zero(), cod.zero);
        for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
          assign(gens[i], choice[i]);
        }
        // assigned doubles as the BFS queue.
        for (std::size_t head = 0; head < assigned.size() && consistent;
             ++head) {
          ModElem const x = assigned[head];
          for (Index r = 0; r < k && consistent; ++r) {
            assign(dom.act(x, r), cod.act(table[x], r));
          }
          for (std::size_t j = 0; j <= head && consistent; ++j) {
            ModElem const y = assigned[j];
            assign(dom.add(x, y), cod.add(table[x], table[y]));
          }
        }
        if (!consistent || assigned.size() != dom.size()) {
          continue;
        }
        if (linear_on(dom, cod, table)) {
          out.push_back(ModHom{table});
        }
      }
      return out;
    }

    auto module_codomain(FiniteModule const& N) {
      auto add = [&N](Index x, Index y) { return N.add(x, y); };
      auto act = [&N](Index x, Index r) { return N.act(x, r); };
      return Codomain<decltype(add), decltype(act)>{N.size(), N.zero(), add, act};
    }

    auto ring_codomain(FiniteRing const& R) {
      auto add = [&R](Index x, Index y) { return R.add(x, y); };
      auto act = [&R](Index x, Index r) { return R.mul(x, r); };
      return Codomain<decltype(add), decltype(act)>{R.size(), R.zero(), add, act};
    }

  }  // namespace

  std::vector<ModElem> generating_set(FiniteModule const& M) {
    std::vector<ModElem> gens;
    IndexSet             current = span(M, gens).members;
    while (current.size() < M.size()) {
      ModElem     best      = 0;
      std::size_t best_size = 0;
      IndexSet    best_span;
      for (Index x = 0; x < M.size(); ++x) {
        if (current.contains(x)) {
          continue;
        }
        auto trial = gens;
        trial.push_back(x);
        IndexSet s = span(M, trial).members;
        if (s.size() > best_size) {
          best      = x;
          best_size = s.size();
          best_span = std::move(s);
        }
      }
      gens.push_back(best);
      current = std::move(best_span);
    }
    return gens;
  }

  std::vector<ModHom> hom_group(FiniteModule const& dom, FiniteModule const& cod) {
    if (dom.ring_ptr() != cod.ring_ptr() && !(dom.ring() == cod.ring())) {
      throw StructureError("hom_group requires modules over the same ring");
    }
    return enumerate(dom, module_codomain(cod));
  }

  bool is_homomorphism(FiniteModule const&       dom,
                       FiniteModule const&       cod,
                       std::vector<Index> const& table) {
    if (table.size() != dom.size()) {
      return false;
    }
    for (auto v : table) {
      if (v >= cod.size()) {
        return false;
      }
    }
    return linear_on(dom, module_codomain(cod), table);
  }

  ////////////////////////////////////////////////////////////////////////
  // DualSpace
  ////////////////////////////////////////////////////////////////////////

  DualSpace::DualSpace(std::shared_ptr<FiniteModule const> M)
      : module_(std::move(M)),
        functionals_(enumerate(*module_, ring_codomain(module_->ring()))) {}

  ////////////////////////////////////////////////////////////////////////
  // EndoRing
  ////////////////////////////////////////////////////////////////////////

  EndoRing::EndoRing(std::shared_ptr<FiniteModule const> M,
                     std::optional<std::vector<Index>>   involution)
      : module_(std::move(M)), maps_(hom_group(*module_, *module_)) {
    std::size_t const n = maps_.size();
    if (n > FiniteRing::kMaxSize) {
      throw CapacityError("End(" + module_->name() + ") has "
                          + std::to_string(n) + " elements, cap is "
                          + std::to_string(FiniteRing::kMaxSize));
    }
    for (Index i = 0; i < n; ++i) {
      lookup_.emplace(maps_[i].images, i);
    }
    FiniteRing::Tables t;
    t.size = n;
    t.add.assign(n, std::vector<Index>(n));
    t.mul.assign(n, std::vector<Index>(n));
    std::vector<Index> img(module_->size());
    for (Index f = 0; f < n; ++f) {
      for (Index g = 0; g < n; ++g) {
        for (Index x = 0; x < module_->size(); ++x) {
          img[x] = module_->add(maps_[f](x), maps_[g](x));
        }
        t.add[f][g] = lookup_.at(img);
        for (Index x = 0; x < module_->size(); ++x) {
          img[x] = maps_[f](maps_[g](x));
        }
        t.mul[f][g] = lookup_.at(img);
      }
    }
    t.involution = std::move(involution);
    ring_        = std::make_shared<FiniteRing const>(
        FiniteRing::from_tables(t, "End(" + module_->name() + ")"));
  }

  std::optional<Index> EndoRing::find(std::vector<Index> const& table) const {
    auto it = lookup_.find(table);
    if (it == lookup_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elementwise helpers
  ////////////////////////////////////////////////////////////////////////

  Index smash(EndoRing const& S, DualSpace const& dual, ModElem m, Index phi) {
    FiniteModule const& M = S.module();
    std::vector<Index>  table(M.size());
    for (Index x = 0; x < M.size(); ++x) {
      table[x] = M.act(m, dual.eval(phi, x));
    }
    auto f = S.find(table);
    if (!f) {
      throw Error("map x -> m phi(x) missing from End(M); enumeration is "
                  "incomplete");
    }
    return *f;
  }

  RingElem eval_pair(DualSpace const& dual, Index phi, ModElem m) {
    return dual.eval(phi, m);
  }

  IndexSet left_ann_S(EndoRing const& S, ModElem m) {
    std::vector<Index> out;
    for (Index f = 0; f < S.size(); ++f) {
      if (S.apply(f, m) == S.module().zero()) {
        out.push_back(f);
      }
    }
    return IndexSet(S.size(), std::move(out));
  }

  Submodule image_set(EndoRing const& S, Index f) {
    FiniteModule const& M = S.module();
    std::vector<Index>  out;
    for (Index x = 0; x < M.size(); ++x) {
      out.push_back(S.apply(f, x));
    }
    return {&M, IndexSet(M.size(), std::move(out))};
  }

  Submodule s_orbit(EndoRing const& S, ModElem m) {
    FiniteModule const& M = S.module();
    std::vector<Index>  out;
    for (Index f = 0; f < S.size(); ++f) {
      out.push_back(S.apply(f, m));
    }
    return {&M, IndexSet(M.size(), std::move(out))};
  }

  Submodule m_times(FiniteModule const& M, RingElem a) {
    std::vector<Index> out;
    for (Index x = 0; x < M.size(); ++x) {
      out.push_back(M.act(x, a));
    }
    return {&M, IndexSet(M.size(), std::move(out))};
  }

}  // namespace modorder
