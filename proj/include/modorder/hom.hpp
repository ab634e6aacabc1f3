#ifndef MODORDER_HOM_HPP_
#define MODORDER_HOM_HPP_

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "modorder/module.hpp"
#include "modorder/ring.hpp"

namespace modorder {

  //! Right-linear map given by its value table on the domain carrier.
  struct ModHom {
    std::vector<Index> images;

    Index operator()(ModElem x) const {
      return images[x];
    }
    friend bool operator==(ModHom const&, ModHom const&) = default;
  };

  //! Upper bound on |codomain|^|generators| candidate assignments.
  inline constexpr std::size_t kMaxHomCandidates = std::size_t{1} << 24;

  //! Greedy generating set: repeatedly adds the element (lowest index on
  //! ties) whose inclusion enlarges the span the most.
  std::vector<ModElem> generating_set(FiniteModule const& M);

  //! All right R-linear maps dom -> cod, ordered lexicographically by the
  //! images of generating_set(dom).
  std::vector<ModHom> hom_group(FiniteModule const& dom, FiniteModule const& cod);

  //! Checks additivity and right-linearity of a value table dom -> cod.
  bool is_homomorphism(FiniteModule const&       dom,
                       FiniteModule const&       cod,
                       std::vector<Index> const& table);

  //! M* = Hom_R(M, R_R).
  class DualSpace {
   public:
    explicit DualSpace(std::shared_ptr<FiniteModule const> M);

    FiniteModule const& module() const noexcept {
      return *module_;
    }
    std::vector<ModHom> const& functionals() const noexcept {
      return functionals_;
    }
    std::size_t size() const noexcept {
      return functionals_.size();
    }
    //! phi(m)
    RingElem eval(Index phi, ModElem m) const {
      return functionals_[phi](m);
    }

   private:
    std::shared_ptr<FiniteModule const> module_;
    std::vector<ModHom>                 functionals_;
  };

  //! S = End_R(M), presented as a FiniteRing whose element i is maps()[i].
  //!
  //! Addition is pointwise and multiplication is composition,
  //! (f g)(x) = f(g(x)). A commutative S receives the identity involution;
  //! otherwise S carries the supplied involution or none.
  class EndoRing {
   public:
    explicit EndoRing(std::shared_ptr<FiniteModule const> M,
                      std::optional<std::vector<Index>>   involution = {});

    FiniteModule const& module() const noexcept {
      return *module_;
    }
    FiniteRing const& ring() const noexcept {
      return *ring_;
    }
    std::shared_ptr<FiniteRing const> const& ring_ptr() const noexcept {
      return ring_;
    }
    std::vector<ModHom> const& maps() const noexcept {
      return maps_;
    }
    std::size_t size() const noexcept {
      return maps_.size();
    }

    //! f(x)
    ModElem apply(Index f, ModElem x) const {
      return maps_[f](x);
    }

    std::optional<Index> find(std::vector<Index> const& table) const;

   private:
    std::shared_ptr<FiniteModule const>   module_;
    std::vector<ModHom>                   maps_;
    std::map<std::vector<Index>, Index>   lookup_;
    std::shared_ptr<FiniteRing const>     ring_;
  };

  //! Index in S of x |-> m phi(x). Throws Error if the map is missing.
  Index smash(EndoRing const& S, DualSpace const& dual, ModElem m, Index phi);

  //! phi(m)
  RingElem eval_pair(DualSpace const& dual, Index phi, ModElem m);

  //! l_S(m) = {f in S : f(m) = 0}
  IndexSet left_ann_S(EndoRing const& S, ModElem m);

  //! f(M)
  Submodule image_set(EndoRing const& S, Index f);
  //! S m = {f(m) : f in S}
  Submodule s_orbit(EndoRing const& S, ModElem m);
  //! M a = {x a : x in M}
  Submodule m_times(FiniteModule const& M, RingElem a);

}  // namespace modorder

#endif  // MODORDER_HOM_HPP_
