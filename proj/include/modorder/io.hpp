#ifndef MODORDER_IO_HPP_
#define MODORDER_IO_HPP_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "modorder/laws.hpp"

namespace modorder {

  using json = nlohmann::json;

  //! Ring from a parsed definition; where is the JSON pointer used in error
  //! messages.
  std::shared_ptr<FiniteRing const> ring_from_json(json const&        j,
                                                   std::string const& where
                                                   = "");
  std::shared_ptr<FiniteModule const> module_from_json(json const&        j,
                                                       std::string const& where
                                                       = "");

  //! Accepts inline JSON (text starting with '{'), a path to a JSON file, or
  //! a builtin name: "Z<n>", products such as "Z2xZ3", "M2(Z2)" / "M2Z2".
  std::shared_ptr<FiniteRing const> load_ring(std::string_view spec);

  //! As load_ring; builtin names are "Z<m>/Z<n>", "RR:<ring>" and
  //! "trivial".
  std::shared_ptr<FiniteModule const> load_module(std::string_view spec);

  //! A builtin corpus name or a file {"members":[{"id":..,"module":..}]}.
  std::vector<CorpusMember> load_corpus(std::string_view spec);

  json ring_to_json(FiniteRing const& R);
  json module_to_json(FiniteModule const& M);

  //! Size, idempotents, units, regularity and (with an involution)
  //! projections and the Rickart-* properties.
  json ring_summary(FiniteRing const& R);
  //! Sizes of M, M* and S, regularity and the regular elements.
  json module_summary(ModuleContext const& ctx);

  json witness_to_json(ModuleContext const* ctx, Witness const& w);
  json verdict_to_json(ModuleContext const* ctx, OrderVerdict const& v);
  json report_to_json(LawReport const& r);

}  // namespace modorder

#endif  // MODORDER_IO_HPP_
