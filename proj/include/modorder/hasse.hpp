#ifndef MODORDER_HASSE_HPP_
#define MODORDER_HASSE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "modorder/laws.hpp"

namespace modorder {

  using Edge = std::pair<Index, Index>;

  //! A relation restricted to its domain, with its covering edges.
  struct Poset {
    Relation          relation;
    std::size_t       size = 0;
    IndexSet          domain;
    std::vector<char> leq;     // row-major, zero outside domain x domain
    std::vector<Edge> covers;  // ascending

    bool le(Index i, Index j) const {
      return leq[i * size + j] != 0;
    }
  };

  //! Covering pairs (i, j), i != j, of a reflexive-transitive relation given
  //! as a row-major n x n matrix, in ascending order.
  std::vector<Edge> transitive_reduction(std::vector<char> const& leq,
                                         std::size_t              n);

  //! Reflexive-transitive closure of an edge list on n nodes.
  std::vector<char> transitive_closure(std::vector<Edge> const& edges,
                                       std::size_t              n);

  //! Partial order of rel on the regular elements of the module. Throws
  //! StructureError naming the violated axiom and operands when rel is not
  //! a partial order there, and ConfigError when rel is not applicable.
  Poset build_poset(ModuleContext const& ctx, Relation rel);

  //! Deterministic DOT text; elements outside the domain are dashed.
  std::string to_dot(Poset const& p);

  //! {"elements":[...],"covers":[[i,j],...]} plus the dashed elements.
  std::string to_json(Poset const& p);

}  // namespace modorder

#endif  // MODORDER_HASSE_HPP_
