#include "modorder/module.hpp"

#include <deque>
#include <string>
#include <utility>

namespace modorder {

  namespace {
    AxiomError violation(std::string law, std::vector<Index> operands) {
      return AxiomError(AxiomViolation{std::move(law), std::move(operands)});
    }
  }  // namespace

  FiniteModule FiniteModule::assemble(std::shared_ptr<FiniteRing const> r,
                                      std::size_t                       n,
                                      std::vector<Index>                add,
                                      std::vector<Index>                action,
                                      std::string                       name) {
    FiniteModule M;
    M.ring_   = std::move(r);
    M.size_   = n;
    M.add_    = std::move(add);
    M.action_ = std::move(action);
    M.name_   = std::move(name);

    std::optional<Index> zero;
    for (Index z = 0; z < n && !zero; ++z) {
      bool ok = true;
      for (Index x = 0; x < n && ok; ++x) {
        ok = M.add(z, x) == x && M.add(x, z) == x;
      }
      if (ok) {
        zero = z;
      }
    }
    if (!zero) {
      throw violation("additive identity", {});
    }
    M.zero_ = *zero;

    M.neg_.assign(n, 0);
    for (Index x = 0; x < n; ++x) {
      bool found = false;
      for (Index y = 0; y < n && !found; ++y) {
        if (M.add(x, y) == M.zero_) {
          M.neg_[x] = y;
          found     = true;
        }
      }
      if (!found) {
        throw violation("additive inverse", {x});
      }
    }
    if (auto v = M.check_axioms()) {
      throw AxiomError(*v);
    }
    return M;
  }

  std::optional<AxiomViolation> FiniteModule::check_axioms() const {
    FiniteRing const& R = *ring_;
    std::size_t const n = size_, k = R.size();
    for (Index x = 0; x < n; ++x) {
      if (add(zero_, x) != x) {
        return AxiomViolation{"additive identity", {x}};
      }
      if (add(x, neg(x)) != zero_) {
        return AxiomViolation{"additive inverse", {x}};
      }
      if (act(x, R.one()) != x) {
        return AxiomViolation{"unitality m.1 = m", {x}};
      }
      for (Index y = 0; y < n; ++y) {
        if (add(x, y) != add(y, x)) {
          return AxiomViolation{"additive commutativity", {x, y}};
        }
        for (Index z = 0; z < n; ++z) {
          if (add(add(x, y), z) != add(x, add(y, z))) {
            return AxiomViolation{"additive associativity", {x, y, z}};
          }
        }
        for (Index r = 0; r < k; ++r) {
          if (act(add(x, y), r) != add(act(x, r), act(y, r))) {
            return AxiomViolation{"(m+n).r = m.r + n.r", {x, y, r}};
          }
        }
      }
      for (Index r = 0; r < k; ++r) {
        for (Index s = 0; s < k; ++s) {
          if (act(x, R.add(r, s)) != add(act(x, r), act(x, s))) {
            return AxiomViolation{"m.(r+s) = m.r + m.s", {x, r, s}};
          }
          if (act(x, R.mul(r, s)) != act(act(x, r), s)) {
            return AxiomViolation{"m.(rs) = (m.r).s", {x, r, s}};
          }
        }
      }
    }
    return std::nullopt;
  }

  FiniteModule FiniteModule::from_tables(std::shared_ptr<FiniteRing const> r,
                                         Tables const&                     t,
                                         std::string name) {
    if (!r) {
      throw StructureError("module requires a base ring");
    }
    std::size_t const n = t.size, k = r->size();
    if (n == 0) {
      throw StructureError("module size must be positive");
    }
    if (n > kMaxSize) {
      throw CapacityError("module size " + std::to_string(n)
                          + " exceeds the cap of " + std::to_string(kMaxSize));
    }
    auto check = [n](std::vector<std::vector<Index>> const& tab,
                     std::size_t                            cols,
                     char const*                            what) {
      if (tab.size() != n) {
        throw StructureError(std::string(what) + " table has "
                             + std::to_string(tab.size())
                             + " rows, expected " + std::to_string(n));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (tab[i].size() != cols) {
          throw StructureError(std::string(what) + " table row "
                               + std::to_string(i) + " has "
                               + std::to_string(tab[i].size())
                               + " entries, expected " + std::to_string(cols));
        }
        for (std::size_t j = 0; j < cols; ++j) {
          if (tab[i][j] >= n) {
            throw StructureError(std::string(what) + " table entry ("
                                 + std::to_string(i) + ","
                                 + std::to_string(j) + ") is out of range");
          }
        }
      }
    };
    check(t.add, n, "add");
    check(t.action, k, "action");

    std::vector<Index> add, action;
    for (auto const& row : t.add) {
      add.insert(add.end(), row.begin(), row.end());
    }
    for (auto const& row : t.action) {
      action.insert(action.end(), row.begin(), row.end());
    }
    return assemble(
        std::move(r), n, std::move(add), std::move(action), std::move(name));
  }

  FiniteModule FiniteModule::zm_over_zn(std::size_t m, std::size_t n) {
    if (m == 0 || n == 0) {
      throw StructureError("Z_m over Z_n requires m, n >= 1");
    }
    if (n % m != 0) {
      throw StructureError(std::to_string(m) + " does not divide "
                           + std::to_string(n)
                           + "; the action of Z_n on Z_m is ill-defined");
    }
    if (m > kMaxSize) {
      throw CapacityError("module size " + std::to_string(m)
                          + " exceeds the cap of " + std::to_string(kMaxSize));
    }
    auto               R = std::make_shared<FiniteRing const>(FiniteRing::zn(n));
    std::vector<Index> add(m * m), action(m * n);
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = 0; y < m; ++y) {
        add[x * m + y] = static_cast<Index>((x + y) % m);
      }
      for (std::size_t r = 0; r < n; ++r) {
        action[x * n + r] = static_cast<Index>((x * (r % m)) % m);
      }
    }
    return assemble(std::move(R),
                    m,
                    std::move(add),
                    std::move(action),
                    "Z" + std::to_string(m) + "/Z" + std::to_string(n));
  }

  FiniteModule FiniteModule::ring_as_module(std::shared_ptr<FiniteRing const> r) {
    if (!r) {
      throw StructureError("module requires a base ring");
    }
    std::size_t const n = r->size();
    if (n > kMaxSize) {
      throw CapacityError("R_R for " + r->name() + " has " + std::to_string(n)
                          + " elements, module cap is "
                          + std::to_string(kMaxSize));
    }
    std::vector<Index> add(n * n), action(n * n);
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        add[x * n + y]    = r->add(x, y);
        action[x * n + y] = r->mul(x, y);
      }
    }
    std::string name = "RR(" + r->name() + ")";
    return assemble(
        std::move(r), n, std::move(add), std::move(action), std::move(name));
  }

  bool FiniteModule::is_ring_module() const {
    FiniteRing const& R = *ring_;
    if (R.size() != size_) {
      return false;
    }
    for (Index x = 0; x < size_; ++x) {
      for (Index y = 0; y < size_; ++y) {
        if (add(x, y) != R.add(x, y) || act(x, y) != R.mul(x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  FiniteModule::Tables FiniteModule::tables() const {
    Tables t;
    t.size = size_;
    t.add.assign(size_, std::vector<Index>(size_));
    t.action.assign(size_, std::vector<Index>(ring_->size()));
    for (Index x = 0; x < size_; ++x) {
      for (Index y = 0; y < size_; ++y) {
        t.add[x][y] = add(x, y);
      }
      for (Index r = 0; r < ring_->size(); ++r) {
        t.action[x][r] = act(x, r);
      }
    }
    return t;
  }

  ////////////////////////////////////////////////////////////////////////
  // Submodules
  ////////////////////////////////////////////////////////////////////////

  Submodule span(FiniteModule const& M, std::vector<ModElem> const& gens) {
    std::vector<bool>   seen(M.size(), false);
    std::vector<Index>  members;
    std::deque<ModElem> queue;
    auto                visit = [&](ModElem x) {
      if (!seen[x]) {
        seen[x] = true;
        members.push_back(x);
        queue.push_back(x);
      }
    };
    visit(M.zero());
    for (auto g : gens) {
      visit(g);
    }
    while (!queue.empty()) {
      ModElem const x = queue.front();
      queue.pop_front();
      for (Index r = 0; r < M.ring().size(); ++r) {
        visit(M.act(x, r));
      }
      // members grows while we iterate; index-based loop is intentional.
      for (std::size_t i = 0; i < members.size(); ++i) {
        visit(M.add(x, members[i]));
      }
    }
    return {&M, IndexSet(M.size(), std::move(members))};
  }

  Submodule cyclic_submodule(FiniteModule const& M, ModElem m) {
    std::vector<Index> out;
    for (Index r = 0; r < M.ring().size(); ++r) {
      out.push_back(M.act(m, r));
    }
    return {&M, IndexSet(M.size(), std::move(out))};
  }

  IndexSet right_ann_R(FiniteModule const& M, ModElem m) {
    std::vector<Index> out;
    for (Index r = 0; r < M.ring().size(); ++r) {
      if (M.act(m, r) == M.zero()) {
        out.push_back(r);
      }
    }
    return IndexSet(M.ring().size(), std::move(out));
  }

  bool is_submodule(FiniteModule const& M, IndexSet const& s) {
    if (!s.contains(M.zero())) {
      return false;
    }
    for (auto x : s) {
      for (auto y : s) {
        if (!s.contains(M.add(x, y))) {
          return false;
        }
      }
      for (Index r = 0; r < M.ring().size(); ++r) {
        if (!s.contains(M.act(x, r))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    FiniteModule const& common_parent(Submodule const& A, Submodule const& B) {
      if (A.parent == nullptr || A.parent != B.parent) {
        throw StructureError("submodules belong to different modules");
      }
      return *A.parent;
    }
  }  // namespace

  Submodule sum_of_sets(Submodule const& A, Submodule const& B) {
    FiniteModule const& M = common_parent(A, B);
    std::vector<Index>  out;
    for (auto a : A.members) {
      for (auto b : B.members) {
        out.push_back(M.add(a, b));
      }
    }
    return {&M, IndexSet(M.size(), std::move(out))};
  }

  Submodule intersect(Submodule const& A, Submodule const& B) {
    FiniteModule const& M = common_parent(A, B);
    return {&M, A.members.intersect(B.members)};
  }

  bool is_internal_direct_sum(Submodule const& A,
                              Submodule const& B,
                              Submodule const& target) {
    FiniteModule const& M = common_parent(A, B);
    common_parent(A, target);
    return sum_of_sets(A, B) == target
           && intersect(A, B).members == IndexSet(M.size(), {M.zero()});
  }

}  // namespace modorder
