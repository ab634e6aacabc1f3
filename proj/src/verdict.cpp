#include "modorder/verdict.hpp"

#include <array>
#include <utility>

namespace modorder {

  namespace {
    constexpr std::array<std::pair<Relation, std::string_view>, 16> kTags = {{
        {Relation::Regular, "regular"},
        {Relation::MinusDual, "minus-dual"},
        {Relation::MinusIdem, "minus-idem"},
        {Relation::MinusRelaxed, "minus-relaxed"},
        {Relation::MinusImage, "minus-image"},
        {Relation::Jones, "jones"},
        {Relation::Mitsch, "mitsch"},
        {Relation::MitschSym, "mitsch-sym"},
        {Relation::Gb, "gb"},
        {Relation::DirectSum, "dsum"},
        {Relation::RightStar, "rstar"},
        {Relation::LeftStar, "lstar"},
        {Relation::Star, "star"},
        {Relation::SubsetCyclic, "subset"},
        {Relation::Hartwig, "hartwig"},
        {Relation::RingAnnih, "ring-annih"},
    }};
  }  // namespace

  std::string_view tag(Relation r) noexcept {
    for (auto const& [rel, name] : kTags) {
      if (rel == r) {
        return name;
      }
    }
    return "unknown";
  }

  std::optional<Relation> parse_relation(std::string_view name) noexcept {
    // "minus" is accepted as shorthand for the defining relation.
    if (name == "minus") {
      return Relation::MinusDual;
    }
    for (auto const& [rel, n] : kTags) {
      if (n == name) {
        return rel;
      }
    }
    return std::nullopt;
  }

  bool is_ring_relation(Relation r) noexcept {
    return r == Relation::Hartwig || r == Relation::RingAnnih;
  }

  std::vector<Relation> module_relations() {
    std::vector<Relation> out;
    for (auto const& [rel, name] : kTags) {
      if (!is_ring_relation(rel) && rel != Relation::Regular) {
        out.push_back(rel);
      }
    }
    return out;
  }

  std::vector<Relation> minus_characterizations() {
    return {Relation::MinusDual,
            Relation::MinusIdem,
            Relation::MinusRelaxed,
            Relation::MinusImage,
            Relation::Jones,
            Relation::Mitsch,
            Relation::MitschSym,
            Relation::Gb,
            Relation::DirectSum};
  }

  std::string_view to_string(Status s) noexcept {
    switch (s) {
      case Status::Holds:
        return "holds";
      case Status::DoesNotHold:
        return "does-not-hold";
      case Status::NotApplicable:
        return "not-applicable";
    }
    return "unknown";
  }

}  // namespace modorder
