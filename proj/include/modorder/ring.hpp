#ifndef MODORDER_RING_HPP_
#define MODORDER_RING_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "modorder/errors.hpp"
#include "modorder/index_set.hpp"
#include "modorder/verdict.hpp"

namespace modorder {

  using RingElem = Index;

  //! Finite ring with identity, stored as dense Cayley tables.
  //!
  //! Elements are the indices 0, ..., size() - 1. Values are immutable once
  //! constructed; every constructor validates the ring axioms (exhaustively up
  //! to kVerifyLimit elements, or always when forced).
  //!
  //! A commutative ring without an explicit involution gets the identity
  //! involution. A noncommutative ring has an involution only when one is
  //! supplied.
  class FiniteRing {
   public:
    static constexpr std::size_t kMaxSize     = 256;
    static constexpr std::size_t kVerifyLimit = 64;

    //! Raw table description, rows indexed by the left operand.
    struct Tables {
      std::size_t                             size = 0;
      std::vector<std::vector<Index>>         add;
      std::vector<std::vector<Index>>         mul;
      std::optional<std::vector<Index>>       involution;
    };

    //! Z/nZ with the identity involution.
    static FiniteRing zn(std::size_t n);

    //! Componentwise product; element (x, y) has index x * |r2| + y.
    static FiniteRing product(FiniteRing const& r1, FiniteRing const& r2);

    //! 2x2 matrices over Z/pZ with transpose as involution. Matrix
    //! [[a, b], [c, d]] has index ((a * p + b) * p + c) * p + d.
    static FiniteRing matrix2(std::size_t p, std::size_t dimension = 2);

    //! Validated ring from explicit tables; throws StructureError or
    //! AxiomError.
    static FiniteRing from_tables(Tables const& t,
                                  std::string   name         = "tables",
                                  bool          force_verify = false);

    std::size_t size() const noexcept {
      return size_;
    }
    RingElem zero() const noexcept {
      return zero_;
    }
    RingElem one() const noexcept {
      return one_;
    }
    std::string const& name() const noexcept {
      return name_;
    }

    RingElem add(RingElem a, RingElem b) const {
      return add_[a * size_ + b];
    }
    RingElem mul(RingElem a, RingElem b) const {
      return mul_[a * size_ + b];
    }
    RingElem neg(RingElem a) const {
      return neg_[a];
    }
    RingElem sub(RingElem a, RingElem b) const {
      return add(a, neg(b));
    }

    bool has_involution() const noexcept {
      return !involution_.empty();
    }
    //! a*; throws ConfigError without an involution.
    RingElem star(RingElem a) const;

    bool is_commutative() const noexcept {
      return commutative_;
    }

    //! Copy of this ring carrying the given involution (validated).
    FiniteRing with_involution(std::vector<Index> involution) const;

    //! First violated axiom, if any. The size^3 loops run only when
    //! size() <= kVerifyLimit or force is set.
    std::optional<AxiomViolation> check_axioms(bool force = false) const;

    Tables tables() const;

    bool operator==(FiniteRing const& other) const {
      return size_ == other.size_ && add_ == other.add_
             && mul_ == other.mul_ && involution_ == other.involution_;
    }

   private:
    FiniteRing() = default;
    static FiniteRing assemble(std::size_t        n,
                               std::vector<Index> add,
                               std::vector<Index> mul,
                               std::vector<Index> involution,
                               std::string        name,
                               bool               force_verify);

    std::size_t        size_ = 0;
    RingElem           zero_ = 0;
    RingElem           one_  = 0;
    std::vector<Index> add_;
    std::vector<Index> mul_;
    std::vector<Index> neg_;
    std::vector<Index> involution_;
    bool               commutative_ = false;
    std::string        name_;
  };

  ////////////////////////////////////////////////////////////////////////
  // Element predicates and subsets
  ////////////////////////////////////////////////////////////////////////

  IndexSet idempotents(FiniteRing const& r);
  IndexSet units(FiniteRing const& r);
  //! Self-adjoint idempotents; throws ConfigError without an involution.
  IndexSet projections(FiniteRing const& r);

  //! l_R(a) = {x : x a = 0}
  IndexSet left_ann_ring(FiniteRing const& r, RingElem a);
  //! r_R(a) = {x : a x = 0}
  IndexSet right_ann_ring(FiniteRing const& r, RingElem a);
  //! aR
  IndexSet principal_right_ideal(FiniteRing const& r, RingElem a);
  //! Ra
  IndexSet principal_left_ideal(FiniteRing const& r, RingElem a);

  //! Two-sided inverse of a unit.
  std::optional<RingElem> inverse(FiniteRing const& r, RingElem u);

  //! First x (ascending) with a x a = a.
  std::optional<RingElem> vn_regular_witness(FiniteRing const& r, RingElem a);

  bool is_von_neumann_regular(FiniteRing const& r);

  ////////////////////////////////////////////////////////////////////////
  // Rickart predicates
  ////////////////////////////////////////////////////////////////////////

  //! Per element: p with r_R(a) = pR and q with l_R(a) = Rq.
  struct AnnihilatorGenerators {
    RingElem p;
    RingElem q;
  };

  struct RickartReport {
    bool                                 holds = true;
    std::optional<RingElem>              first_failure;
    std::map<RingElem, AnnihilatorGenerators> witnesses;
  };

  RickartReport is_rickart(FiniteRing const& r);
  //! As is_rickart with generators drawn from the projections; throws
  //! ConfigError without an involution.
  RickartReport is_rickart_star(FiniteRing const& r);
  //! a a* = 0 implies a = 0; throws ConfigError without an involution.
  bool is_proper_star(FiniteRing const& r);

  //! R(1 - p) = l_R(p) and (1 - p)R = r_R(p). Throws StructureError when p
  //! is not idempotent.
  bool idempotent_annih_identity(FiniteRing const& r, RingElem p);

  ////////////////////////////////////////////////////////////////////////
  // Ring-level minus orders
  ////////////////////////////////////////////////////////////////////////

  //! a <= b iff some inner inverse x of a has x a = x b and a x = b x.
  OrderVerdict hartwig_minus_le(FiniteRing const& r, RingElem a, RingElem b);

  //! a <= b iff idempotents p, q exist with l(a) = R(1-p), r(a) = (1-q)R,
  //! pa = pb and aq = bq.
  OrderVerdict ring_minus_le_annih(FiniteRing const& r,
                                   RingElem          a,
                                   RingElem          b);

  //! Re-evaluates a ring verdict's defining equations against its witness.
  bool replay_ring(FiniteRing const& r, OrderVerdict const& v);

}  // namespace modorder

#endif  // MODORDER_RING_HPP_
