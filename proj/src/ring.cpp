#include "modorder/ring.hpp"

#include <string>
#include <utility>

namespace modorder {

  namespace {

    bool is_prime(std::size_t p) {
      if (p < 2) {
        return false;
      }
      for (std::size_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
          return false;
        }
      }
      return true;
    }

    AxiomError violation(std::string law, std::vector<Index> operands) {
      return AxiomError(AxiomViolation{std::move(law), std::move(operands)});
    }

    void check_square(std::vector<std::vector<Index>> const& t,
                      std::size_t                            n,
                      char const*                            what) {
      if (t.size() != n) {
        throw StructureError(std::string(what) + " table has "
                             + std::to_string(t.size()) + " rows, expected "
                             + std::to_string(n));
      }
      for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) {
          throw StructureError(std::string(what) + " table row "
                               + std::to_string(i) + " has "
                               + std::to_string(t[i].size())
                               + " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (t[i][j] >= n) {
            throw StructureError(std::string(what) + " table entry ("
                                 + std::to_string(i) + ","
                                 + std::to_string(j) + ") = "
                                 + std::to_string(t[i][j])
                                 + " is out of range");
          }
        }
      }
    }

    std::vector<Index> flatten(std::vector<std::vector<Index>> const& t) {
      std::vector<Index> out;
      for (auto const& row : t) {
        out.insert(out.end(), row.begin(), row.end());
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // FiniteRing
  ////////////////////////////////////////////////////////////////////////

  FiniteRing FiniteRing::assemble(std::size_t        n,
                                  std::vector<Index> add,
                                  std::vector<Index> mul,
                                  std::vector<Index> involution,
                                  std::string        name,
                                  bool               force_verify) {
    FiniteRing r;
    r.size_ = n;
    r.add_  = std::move(add);
    r.mul_  = std::move(mul);
    r.name_ = std::move(name);

    auto find_identity = [n](auto&& op) -> std::optional<Index> {
      for (Index e = 0; e < n; ++e) {
        bool ok = true;
        for (Index x = 0; x < n && ok; ++x) {
          ok = op(e, x) == x && op(x, e) == x;
        }
        if (ok) {
          return e;
        }
      }
      return std::nullopt;
    };

    auto zero = find_identity([&r](Index a, Index b) { return r.add(a, b); });
    if (!zero) {
      throw violation("additive identity", {});
    }
    r.zero_ = *zero;

    r.neg_.assign(n, 0);
    for (Index a = 0; a < n; ++a) {
      bool found = false;
      for (Index b = 0; b < n && !found; ++b) {
        if (r.add(a, b) == r.zero_) {
          r.neg_[a] = b;
          found     = true;
        }
      }
      if (!found) {
        throw violation("additive inverse", {a});
      }
    }

    auto one = find_identity([&r](Index a, Index b) { return r.mul(a, b); });
    if (!one) {
      throw violation("multiplicative identity", {});
    }
    r.one_ = *one;

    r.commutative_ = true;
    for (Index a = 0; a < n && r.commutative_; ++a) {
      for (Index b = a + 1; b < n; ++b) {
        if (r.mul(a, b) != r.mul(b, a)) {
          r.commutative_ = false;
          break;
        }
      }
    }

    if (involution.empty() && r.commutative_) {
      involution.resize(n);
      for (Index a = 0; a < n; ++a) {
        involution[a] = a;
      }
    }
    r.involution_ = std::move(involution);

    if (auto v = r.check_axioms(force_verify)) {
      throw AxiomError(*v);
    }
    return r;
  }

  std::optional<AxiomViolation> FiniteRing::check_axioms(bool force) const {
    std::size_t const n = size_;
    for (Index a = 0; a < n; ++a) {
      if (add(zero_, a) != a || add(a, zero_) != a) {
        return AxiomViolation{"additive identity", {a}};
      }
      if (add(a, neg(a)) != zero_) {
        return AxiomViolation{"additive inverse", {a}};
      }
      if (mul(one_, a) != a || mul(a, one_) != a) {
        return AxiomViolation{"multiplicative identity", {a}};
      }
      for (Index b = 0; b < n; ++b) {
        if (add(a, b) != add(b, a)) {
          return AxiomViolation{"additive commutativity", {a, b}};
        }
      }
    }
    if (n <= kVerifyLimit || force) {
      for (Index a = 0; a < n; ++a) {
        for (Index b = 0; b < n; ++b) {
          for (Index c = 0; c < n; ++c) {
            if (add(add(a, b), c) != add(a, add(b, c))) {
              return AxiomViolation{"additive associativity", {a, b, c}};
            }
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
              return AxiomViolation{"multiplicative associativity",
                                    {a, b, c}};
            }
            if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) {
              return AxiomViolation{"left distributivity", {a, b, c}};
            }
            if (mul(add(a, b), c) != add(mul(a, c), mul(b, c))) {
              return AxiomViolation{"right distributivity", {a, b, c}};
            }
          }
        }
      }
    }
    if (!involution_.empty()) {
      for (Index a = 0; a < n; ++a) {
        if (star(star(a)) != a) {
          return AxiomViolation{"involution (a*)* = a", {a}};
        }
        for (Index b = 0; b < n; ++b) {
          if (star(add(a, b)) != add(star(a), star(b))) {
            return AxiomViolation{"involution (a+b)* = a* + b*", {a, b}};
          }
          if (star(mul(a, b)) != mul(star(b), star(a))) {
            return AxiomViolation{"involution (ab)* = b* a*", {a, b}};
          }
        }
      }
    }
    return std::nullopt;
  }

  RingElem FiniteRing::star(RingElem a) const {
    if (involution_.empty()) {
      throw ConfigError("ring " + name_ + " has no involution");
    }
    return involution_[a];
  }

  FiniteRing FiniteRing::with_involution(std::vector<Index> involution) const {
    if (involution.size() != size_) {
      throw StructureError("involution has " + std::to_string(involution.size())
                           + " entries, expected " + std::to_string(size_));
    }
    for (auto x : involution) {
      if (x >= size_) {
        throw StructureError("involution entry " + std::to_string(x)
                             + " is out of range");
      }
    }
    FiniteRing r  = *this;
    r.involution_ = std::move(involution);
    if (auto v = r.check_axioms()) {
      throw AxiomError(*v);
    }
    return r;
  }

  FiniteRing::Tables FiniteRing::tables() const {
    Tables t;
    t.size = size_;
    t.add.assign(size_, std::vector<Index>(size_));
    t.mul.assign(size_, std::vector<Index>(size_));
    for (Index a = 0; a < size_; ++a) {
      for (Index b = 0; b < size_; ++b) {
        t.add[a][b] = add(a, b);
        t.mul[a][b] = mul(a, b);
      }
    }
    if (!involution_.empty()) {
      t.involution = involution_;
    }
    return t;
  }

  FiniteRing FiniteRing::from_tables(Tables const& t,
                                     std::string   name,
                                     bool          force_verify) {
    if (t.size == 0) {
      throw StructureError("ring size must be positive");
    }
    if (t.size > kMaxSize) {
      throw CapacityError("ring size " + std::to_string(t.size)
                          + " exceeds the cap of " + std::to_string(kMaxSize));
    }
    check_square(t.add, t.size, "add");
    check_square(t.mul, t.size, "mul");
    std::vector<Index> inv;
    if (t.involution) {
      if (t.involution->size() != t.size) {
        throw StructureError("involution has "
                             + std::to_string(t.involution->size())
                             + " entries, expected " + std::to_string(t.size));
      }
      for (auto x : *t.involution) {
        if (x >= t.size) {
          throw StructureError("involution entry " + std::to_string(x)
                               + " is out of range");
        }
      }
      inv = *t.involution;
    }
    return assemble(t.size,
                    flatten(t.add),
                    flatten(t.mul),
                    std::move(inv),
                    std::move(name),
                    force_verify);
  }

  FiniteRing FiniteRing::zn(std::size_t n) {
    if (n == 0) {
      throw StructureError("Z_n requires n >= 1");
    }
    if (n > kMaxSize) {
      throw CapacityError("Z_" + std::to_string(n) + " exceeds the cap of "
                          + std::to_string(kMaxSize) + " elements");
    }
    std::vector<Index> add(n * n), mul(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        add[a * n + b] = static_cast<Index>((a + b) % n);
        mul[a * n + b] = static_cast<Index>((a * b) % n);
      }
    }
    return assemble(
        n, std::move(add), std::move(mul), {}, "Z" + std::to_string(n), false);
  }

  FiniteRing FiniteRing::product(FiniteRing const& r1, FiniteRing const& r2) {
    std::size_t const n1 = r1.size(), n2 = r2.size(), n = n1 * n2;
    if (n > kMaxSize) {
      throw CapacityError("product ring of size " + std::to_string(n)
                          + " exceeds the cap of " + std::to_string(kMaxSize));
    }
    auto idx = [n2](Index x, Index y) { return static_cast<Index>(x * n2 + y); };
    std::vector<Index> add(n * n), mul(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        Index const a1 = a / n2, a2 = a % n2, b1 = b / n2, b2 = b % n2;
        add[a * n + b] = idx(r1.add(a1, b1), r2.add(a2, b2));
        mul[a * n + b] = idx(r1.mul(a1, b1), r2.mul(a2, b2));
      }
    }
    std::vector<Index> inv;
    if (r1.has_involution() && r2.has_involution()) {
      inv.resize(n);
      for (Index a = 0; a < n; ++a) {
        inv[a] = idx(r1.star(a / n2), r2.star(a % n2));
      }
    }
    return assemble(n,
                    std::move(add),
                    std::move(mul),
                    std::move(inv),
                    r1.name() + "x" + r2.name(),
                    false);
  }

  FiniteRing FiniteRing::matrix2(std::size_t p, std::size_t dimension) {
    if (dimension != 2) {
      throw StructureError("only 2x2 matrix rings are supported");
    }
    if (!is_prime(p)) {
      throw StructureError("matrix ring modulus " + std::to_string(p)
                           + " is not prime");
    }
    std::size_t const n = p * p * p * p;
    if (n > kMaxSize) {
      throw CapacityError("M2(Z" + std::to_string(p) + ") has "
                          + std::to_string(n) + " elements, cap is "
                          + std::to_string(kMaxSize));
    }
    struct M {
      std::size_t a, b, c, d;
    };
    auto decode = [p](std::size_t i) {
      return M{i / (p * p * p), (i / (p * p)) % p, (i / p) % p, i % p};
    };
    auto encode = [p](M const& m) {
      return static_cast<Index>(((m.a * p + m.b) * p + m.c) * p + m.d);
    };
    std::vector<Index> add(n * n), mul(n * n), inv(n);
    for (std::size_t i = 0; i < n; ++i) {
      M const x = decode(i);
      inv[i]    = encode({x.a, x.c, x.b, x.d});
      for (std::size_t j = 0; j < n; ++j) {
        M const y      = decode(j);
        add[i * n + j] = encode({(x.a + y.a) % p,
                                 (x.b + y.b) % p,
                                 (x.c + y.c) % p,
                                 (x.d + y.d) % p});
        mul[i * n + j] = encode({(x.a * y.a + x.b * y.c) % p,
                                 (x.a * y.b + x.b * y.d) % p,
                                 (x.c * y.a + x.d * y.c) % p,
                                 (x.c * y.b + x.d * y.d) % p});
      }
    }
    return assemble(n,
                    std::move(add),
                    std::move(mul),
                    std::move(inv),
                    "M2(Z" + std::to_string(p) + ")",
                    false);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subsets
  ////////////////////////////////////////////////////////////////////////

  IndexSet idempotents(FiniteRing const& r) {
    std::vector<Index> out;
    for (Index e = 0; e < r.size(); ++e) {
      if (r.mul(e, e) == e) {
        out.push_back(e);
      }
    }
    return IndexSet(r.size(), std::move(out));
  }

  IndexSet units(FiniteRing const& r) {
    std::vector<Index> out;
    for (Index u = 0; u < r.size(); ++u) {
      if (inverse(r, u)) {
        out.push_back(u);
      }
    }
    return IndexSet(r.size(), std::move(out));
  }

  IndexSet projections(FiniteRing const& r) {
    if (!r.has_involution()) {
      throw ConfigError("projections require an involution on " + r.name());
    }
    std::vector<Index> out;
    for (Index e = 0; e < r.size(); ++e) {
      if (r.mul(e, e) == e && r.star(e) == e) {
        out.push_back(e);
      }
    }
    return IndexSet(r.size(), std::move(out));
  }

  IndexSet left_ann_ring(FiniteRing const& r, RingElem a) {
    std::vector<Index> out;
    for (Index x = 0; x < r.size(); ++x) {
      if (r.mul(x, a) == r.zero()) {
        out.push_back(x);
      }
    }
    return IndexSet(r.size(), std::move(out));
  }

  IndexSet right_ann_ring(FiniteRing const& r, RingElem a) {
    std::vector<Index> out;
    for (Index x = 0; x < r.size(); ++x) {
      if (r.mul(a, x) == r.zero()) {
        out.push_back(x);
      }
    }
    return IndexSet(r.size(), std::move(out));
  }

  IndexSet principal_right_ideal(FiniteRing const& r, RingElem a) {
    std::vector<Index> out;
    for (Index x = 0; x < r.size(); ++x) {
      out.push_back(r.mul(a, x));
    }
    return IndexSet(r.size(), std::move(out));
  }

  IndexSet principal_left_ideal(FiniteRing const& r, RingElem a) {
    std::vector<Index> out;
    for (Index x = 0; x < r.size(); ++x) {
      out.push_back(r.mul(x, a));
    }
    return IndexSet(r.size(), std::move(out));
  }

  std::optional<RingElem> inverse(FiniteRing const& r, RingElem u) {
    for (Index v = 0; v < r.size(); ++v) {
      if (r.mul(u, v) == r.one() && r.mul(v, u) == r.one()) {
        return v;
      }
    }
    return std::nullopt;
  }

  std::optional<RingElem> vn_regular_witness(FiniteRing const& r, RingElem a) {
    for (Index x = 0; x < r.size(); ++x) {
      if (r.mul(r.mul(a, x), a) == a) {
        return x;
      }
    }
    return std::nullopt;
  }

  bool is_von_neumann_regular(FiniteRing const& r) {
    for (Index a = 0; a < r.size(); ++a) {
      if (!vn_regular_witness(r, a)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rickart
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RickartReport rickart_with(FiniteRing const& r, IndexSet const& gens) {
      std::vector<IndexSet> right_ideals, left_ideals;
      for (auto e : gens) {
        right_ideals.push_back(principal_right_ideal(r, e));
        left_ideals.push_back(principal_left_ideal(r, e));
      }
      auto const& g = gens.members();

      RickartReport report;
      for (Index a = 0; a < r.size(); ++a) {
        IndexSet const          ra = right_ann_ring(r, a);
        IndexSet const          la = left_ann_ring(r, a);
        std::optional<RingElem> p, q;
        for (std::size_t i = 0; i < g.size() && !p; ++i) {
          if (right_ideals[i] == ra) {
            p = g[i];
          }
        }
        for (std::size_t i = 0; i < g.size() && !q; ++i) {
          if (left_ideals[i] == la) {
            q = g[i];
          }
        }
        if (!p || !q) {
          report.holds         = false;
          report.first_failure = a;
          return report;
        }
        report.witnesses[a] = {*p, *q};
      }
      return report;
    }
  }  // namespace

  RickartReport is_rickart(FiniteRing const& r) {
    return rickart_with(r, idempotents(r));
  }

  RickartReport is_rickart_star(FiniteRing const& r) {
    return rickart_with(r, projections(r));
  }

  bool is_proper_star(FiniteRing const& r) {
    if (!r.has_involution()) {
      throw ConfigError("properness requires an involution on " + r.name());
    }
    for (Index a = 0; a < r.size(); ++a) {
      if (a != r.zero() && r.mul(a, r.star(a)) == r.zero()) {
        return false;
      }
    }
    return true;
  }

  bool idempotent_annih_identity(FiniteRing const& r, RingElem p) {
    if (r.mul(p, p) != p) {
      throw StructureError("element " + std::to_string(p)
                           + " is not idempotent");
    }
    RingElem const c = r.sub(r.one(), p);
    return principal_left_ideal(r, c) == left_ann_ring(r, p)
           && principal_right_ideal(r, c) == right_ann_ring(r, p);
  }

  ////////////////////////////////////////////////////////////////////////
  // Ring-level orders
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool hartwig_holds_with(FiniteRing const& r,
                            RingElem          a,
                            RingElem          b,
                            RingElem          x) {
      return r.mul(r.mul(a, x), a) == a && r.mul(x, a) == r.mul(x, b)
             && r.mul(a, x) == r.mul(b, x);
    }

    bool annih_p_holds(FiniteRing const& r,
                       RingElem          a,
                       RingElem          b,
                       RingElem          p,
                       IndexSet const&   la) {
      return r.mul(p, p) == p
             && principal_left_ideal(r, r.sub(r.one(), p)) == la
             && r.mul(p, a) == r.mul(p, b);
    }

    bool annih_q_holds(FiniteRing const& r,
                       RingElem          a,
                       RingElem          b,
                       RingElem          q,
                       IndexSet const&   ra) {
      return r.mul(q, q) == q
             && principal_right_ideal(r, r.sub(r.one(), q)) == ra
             && r.mul(a, q) == r.mul(b, q);
    }
  }  // namespace

  OrderVerdict hartwig_minus_le(FiniteRing const& r, RingElem a, RingElem b) {
    for (Index x = 0; x < r.size(); ++x) {
      if (hartwig_holds_with(r, a, b, x)) {
        return OrderVerdict::yes(Relation::Hartwig, a, b, InnerInverse{x});
      }
    }
    auto v = OrderVerdict::no(Relation::Hartwig, a, b);
    if (!vn_regular_witness(r, a)) {
      v.note = "left operand has no inner inverse";
    }
    return v;
  }

  OrderVerdict ring_minus_le_annih(FiniteRing const& r,
                                   RingElem          a,
                                   RingElem          b) {
    IndexSet const la = left_ann_ring(r, a);
    IndexSet const ra = right_ann_ring(r, a);
    IndexSet const idem = idempotents(r);
    std::optional<RingElem> p, q;
    for (auto e : idem) {
      if (annih_p_holds(r, a, b, e, la)) {
        p = e;
        break;
      }
    }
    if (p) {
      for (auto e : idem) {
        if (annih_q_holds(r, a, b, e, ra)) {
          q = e;
          break;
        }
      }
    }
    if (p && q) {
      return OrderVerdict::yes(Relation::RingAnnih, a, b, RingIdemPair{*p, *q});
    }
    return OrderVerdict::no(Relation::RingAnnih, a, b);
  }

  bool replay_ring(FiniteRing const& r, OrderVerdict const& v) {
    if (!v.holds() || !v.witness) {
      return false;
    }
    if (auto const* w = std::get_if<InnerInverse>(&*v.witness)) {
      return v.relation == Relation::Hartwig
             && hartwig_holds_with(r, v.lhs, v.rhs, w->inverse);
    }
    if (auto const* w = std::get_if<RingIdemPair>(&*v.witness)) {
      return v.relation == Relation::RingAnnih
             && annih_p_holds(r, v.lhs, v.rhs, w->p, left_ann_ring(r, v.lhs))
             && annih_q_holds(r, v.lhs, v.rhs, w->q, right_ann_ring(r, v.lhs));
    }
    return false;
  }

}  // namespace modorder
