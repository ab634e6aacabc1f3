#ifndef MODORDER_VERDICT_HPP_
#define MODORDER_VERDICT_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "modorder/index_set.hpp"

namespace modorder {

  //! Every relation the library can decide. Module relations take module
  //! elements as operands, the two ring relations take ring elements.
  enum class Relation {
    Regular,
    MinusDual,
    MinusIdem,
    MinusRelaxed,
    MinusImage,
    Jones,
    Mitsch,
    MitschSym,
    Gb,
    DirectSum,
    RightStar,
    LeftStar,
    Star,
    SubsetCyclic,
    Hartwig,
    RingAnnih,
  };

  std::string_view          tag(Relation r) noexcept;
  std::optional<Relation>   parse_relation(std::string_view tag) noexcept;
  std::vector<Relation>     module_relations();
  bool                      is_ring_relation(Relation r) noexcept;

  //! The nine relations that coincide with the minus order on regular
  //! modules (minus-dual first).
  std::vector<Relation> minus_characterizations();

  //! phi in the dual, given by its index in DualSpace::functionals().
  struct DualWitness {
    Index functional;
    friend bool operator==(DualWitness const&, DualWitness const&) = default;
  };

  //! Idempotent f in S and idempotent a in R; the flags record whether the
  //! witness was drawn from the projections.
  struct IdemPair {
    Index f;
    Index a;
    bool  f_projection = false;
    bool  a_projection = false;
    friend bool operator==(IdemPair const&, IdemPair const&) = default;
  };

  //! Arbitrary f in S and a in R (Mitsch-type relations).
  struct MapPair {
    Index f;
    Index a;
    friend bool operator==(MapPair const&, MapPair const&) = default;
  };

  //! Internal direct sum decomposition m2 R = A (+) B.
  struct DirectSumWitness {
    IndexSet first;
    IndexSet second;
    friend bool operator==(DirectSumWitness const&, DirectSumWitness const&)
        = default;
  };

  //! m1 R and m2 R with the first contained in the second.
  struct CyclicInclusion {
    IndexSet lhs;
    IndexSet rhs;
    friend bool operator==(CyclicInclusion const&, CyclicInclusion const&)
        = default;
  };

  //! Inner generalized inverse x with a x a = a.
  struct InnerInverse {
    Index inverse;
    friend bool operator==(InnerInverse const&, InnerInverse const&) = default;
  };

  //! Idempotents p, q of a ring-level annihilator characterization.
  struct RingIdemPair {
    Index p;
    Index q;
    friend bool operator==(RingIdemPair const&, RingIdemPair const&) = default;
  };

  using Witness = std::variant<DualWitness,
                               IdemPair,
                               MapPair,
                               DirectSumWitness,
                               CyclicInclusion,
                               InnerInverse,
                               RingIdemPair>;

  enum class Status { Holds, DoesNotHold, NotApplicable };

  //! Outcome of one relation query.
  //!
  //! A verdict holds exactly when it carries a witness. Verdicts computed
  //! outside a characterization's hypotheses are still decided; hypothesis_violated
  //! marks them.
  struct OrderVerdict {
    Relation               relation;
    Index                  lhs;
    Index                  rhs;
    Status                 status = Status::DoesNotHold;
    std::optional<Witness> witness;
    bool                   hypothesis_violated = false;
    std::string            note;

    bool holds() const noexcept {
      return status == Status::Holds;
    }
    bool applicable() const noexcept {
      return status != Status::NotApplicable;
    }

    static OrderVerdict yes(Relation r, Index m1, Index m2, Witness w) {
      return {r, m1, m2, Status::Holds, std::move(w), false, {}};
    }
    static OrderVerdict no(Relation r, Index m1, Index m2) {
      return {r, m1, m2, Status::DoesNotHold, std::nullopt, false, {}};
    }
    static OrderVerdict not_applicable(Relation r,
                                       Index    m1,
                                       Index    m2,
                                       std::string why) {
      return {r, m1, m2, Status::NotApplicable, std::nullopt, false,
              std::move(why)};
    }
  };

  std::string_view to_string(Status s) noexcept;

}  // namespace modorder

#endif  // MODORDER_VERDICT_HPP_
