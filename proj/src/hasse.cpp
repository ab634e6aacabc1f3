#include "modorder/hasse.hpp"

#include <sstream>

#include "json.hpp"

namespace modorder {

  std::vector<Edge> transitive_reduction(std::vector<char> const& leq,
                                         std::size_t              n) {
    std::vector<Edge> out;
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        if (i == j || !leq[i * n + j]) {
          continue;
        }
        bool covered = true;
        for (Index k = 0; k < n && covered; ++k) {
          if (k != i && k != j && leq[i * n + k] && leq[k * n + j]) {
            covered = false;
          }
        }
        if (covered) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  std::vector<char> transitive_closure(std::vector<Edge> const& edges,
                                       std::size_t              n) {
    std::vector<char> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      c[i * n + i] = 1;
    }
    for (auto [i, j] : edges) {
      c[i * n + j] = 1;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!c[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (c[k * n + j]) {
            c[i * n + j] = 1;
          }
        }
      }
    }
    return c;
  }

  Poset build_poset(ModuleContext const& ctx, Relation rel) {
    RelationMatrix const m = compute_matrix(ctx, rel);
    if (!m.applicable()) {
      for (auto const& v : m.verdicts) {
        if (!v.applicable()) {
          throw ConfigError(std::string(tag(rel)) + " is not applicable: "
                            + v.note);
        }
      }
    }
    Poset p{rel, m.size, ctx.regular_elements(), {}, {}};
    LawReport const r = check_partial_order(m, p.domain);
    if (r.outcome == Outcome::Fail) {
      std::ostringstream os;
      os << tag(rel) << " is not a partial order: " << r.counterexample->clause
         << " fails at (";
      auto const& ops = r.counterexample->operands;
      for (std::size_t i = 0; i < ops.size(); ++i) {
        os << (i ? "," : "") << ops[i];
      }
      os << ")";
      throw StructureError(os.str());
    }
    p.leq.assign(p.size * p.size, 0);
    for (auto i : p.domain) {
      for (auto j : p.domain) {
        p.leq[i * p.size + j] = m.at(i, j) ? 1 : 0;
      }
    }
    p.covers = transitive_reduction(p.leq, p.size);
    return p;
  }

  std::string to_dot(Poset const& p) {
    std::ostringstream os;
    os << "digraph \"" << tag(p.relation) << "\" {\n";
    for (Index i = 0; i < p.size; ++i) {
      os << "  \"" << i << "\"";
      if (!p.domain.contains(i)) {
        os << " [style=dashed]";
      }
      os << ";\n";
    }
    for (auto [i, j] : p.covers) {
      os << "  \"" << i << "\" -> \"" << j << "\";\n";
    }
    os << "}\n";
    return os.str();
  }

  std::string to_json(Poset const& p) {
    nlohmann::json j;
    j["relation"] = std::string(tag(p.relation));
    auto& els     = j["elements"] = nlohmann::json::array();
    auto& dashed  = j["dashed"] = nlohmann::json::array();
    for (Index i = 0; i < p.size; ++i) {
      els.push_back(i);
      if (!p.domain.contains(i)) {
        dashed.push_back(i);
      }
    }
    auto& covers = j["covers"] = nlohmann::json::array();
    for (auto [a, b] : p.covers) {
      covers.push_back({a, b});
    }
    return j.dump();
  }

}  // namespace modorder
