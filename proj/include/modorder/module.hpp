#ifndef MODORDER_MODULE_HPP_
#define MODORDER_MODULE_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "modorder/errors.hpp"
#include "modorder/index_set.hpp"
#include "modorder/ring.hpp"

namespace modorder {

  using ModElem = Index;

  //! Finite unitary right module over a FiniteRing.
  //!
  //! The carrier is 0, ..., size() - 1 with an addition table and an action
  //! table indexed by (module element, ring element). The ring is shared, so
  //! modules over the same ring can be compared and combined.
  class FiniteModule {
   public:
    static constexpr std::size_t kMaxSize = 64;

    struct Tables {
      std::size_t                     size = 0;
      std::vector<std::vector<Index>> add;     // size x size
      std::vector<std::vector<Index>> action;  // size x |R|
    };

    //! Z_m over Z_n with x . r = x (r mod m); requires m | n.
    static FiniteModule zm_over_zn(std::size_t m, std::size_t n);

    //! R_R: carrier R, action by right multiplication.
    static FiniteModule ring_as_module(std::shared_ptr<FiniteRing const> r);

    static FiniteModule from_tables(std::shared_ptr<FiniteRing const> r,
                                    Tables const&                     t,
                                    std::string name = "tables");

    FiniteRing const& ring() const noexcept {
      return *ring_;
    }
    std::shared_ptr<FiniteRing const> const& ring_ptr() const noexcept {
      return ring_;
    }
    std::size_t size() const noexcept {
      return size_;
    }
    ModElem zero() const noexcept {
      return zero_;
    }
    std::string const& name() const noexcept {
      return name_;
    }

    ModElem add(ModElem x, ModElem y) const {
      return add_[x * size_ + y];
    }
    ModElem neg(ModElem x) const {
      return neg_[x];
    }
    ModElem sub(ModElem x, ModElem y) const {
      return add(x, neg(y));
    }
    ModElem act(ModElem x, RingElem r) const {
      return action_[x * ring_->size() + r];
    }

    //! True when the tables coincide with R_R for the base ring.
    bool is_ring_module() const;

    std::optional<AxiomViolation> check_axioms() const;

    Tables tables() const;

   private:
    FiniteModule() = default;
    static FiniteModule assemble(std::shared_ptr<FiniteRing const> r,
                                 std::size_t                       n,
                                 std::vector<Index>                add,
                                 std::vector<Index>                action,
                                 std::string                       name);

    std::shared_ptr<FiniteRing const> ring_;
    std::size_t                       size_ = 0;
    ModElem                           zero_ = 0;
    std::vector<Index>                add_;
    std::vector<Index>                action_;
    std::vector<Index>                neg_;
    std::string                       name_;
  };

  //! Subset of a module's carrier tagged with its parent.
  struct Submodule {
    FiniteModule const* parent = nullptr;
    IndexSet            members;

    friend bool operator==(Submodule const& a, Submodule const& b) {
      return a.parent == b.parent && a.members == b.members;
    }
  };

  //! Closure of gens under addition and the action.
  Submodule span(FiniteModule const& M, std::vector<ModElem> const& gens);

  //! mR
  Submodule cyclic_submodule(FiniteModule const& M, ModElem m);

  //! r_R(m) = {r : m r = 0}, a subset of the ring.
  IndexSet right_ann_R(FiniteModule const& M, ModElem m);

  //! Contains zero, closed under addition and the action.
  bool is_submodule(FiniteModule const& M, IndexSet const& s);

  //! {a + b}; throws StructureError on parent mismatch.
  Submodule sum_of_sets(Submodule const& A, Submodule const& B);
  Submodule intersect(Submodule const& A, Submodule const& B);

  //! A + B = target and A /\ B = {0}.
  bool is_internal_direct_sum(Submodule const& A,
                              Submodule const& B,
                              Submodule const& target);

}  // namespace modorder

#endif  // MODORDER_MODULE_HPP_
