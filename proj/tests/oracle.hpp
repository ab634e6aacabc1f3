// Brute-force reference computations used by the tests. Nothing here calls
// into the library's algorithms; only raw tables are read.
#ifndef MODORDER_TESTS_ORACLE_HPP_
#define MODORDER_TESTS_ORACLE_HPP_

#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "modorder/module.hpp"

namespace oracle {

  inline std::vector<unsigned> primes_of(unsigned n) {
    std::vector<unsigned> ps;
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        ps.push_back(p);
        while (n % p == 0) {
          n /= p;
        }
      }
    }
    if (n > 1) {
      ps.push_back(n);
    }
    return ps;
  }

  inline bool squarefree(unsigned n) {
    for (unsigned p = 2; p * p <= n; ++p) {
      if (n % (p * p) == 0) {
        return false;
      }
    }
    return true;
  }

  // Z_m over Z_n: phi(1) = t needs m t = 0 mod n, so t is a multiple of n/m,
  // and 1 = 1 phi(1) mod p for each prime p | m needs p not dividing n/m.
  inline bool regular_zm_over_zn(unsigned m, unsigned n) {
    return squarefree(m) && std::gcd(m, n / m) == 1;
  }

  // Minus order on Z_m (m squarefree, any base ring Z_n with m | n): by CRT
  // Z_m is a product of fields, where x <= y iff x = 0 or x = y.
  inline bool minus_crt(unsigned m, unsigned x, unsigned y) {
    for (unsigned p : primes_of(m)) {
      if (x % p != 0 && x % p != y % p) {
        return false;
      }
    }
    return true;
  }

  inline std::set<unsigned> idempotents_mod(unsigned n) {
    std::set<unsigned> out;
    for (unsigned e = 0; e < n; ++e) {
      if (e * e % n == e) {
        out.insert(e);
      }
    }
    return out;
  }

  inline std::set<unsigned> units_mod(unsigned n) {
    std::set<unsigned> out;
    for (unsigned u = 0; u < n; ++u) {
      if (std::gcd(u, n) == 1 && n > 1) {
        out.insert(u);
      }
    }
    if (n == 1) {
      out.insert(0);
    }
    return out;
  }

  // r(x) = {r in Z_n : x r = 0 in Z_m}
  inline std::set<unsigned> right_ann_mod(unsigned m, unsigned n, unsigned x) {
    std::set<unsigned> out;
    for (unsigned r = 0; r < n; ++r) {
      if (x * (r % m) % m == 0) {
        out.insert(r);
      }
    }
    return out;
  }

  // Every homomorphism of right modules, by enumerating all |N|^|M|
  // functions and keeping the linear ones. Each map is its image table.
  inline std::set<std::vector<unsigned>> brute_homs(
      modorder::FiniteModule const& M,
      modorder::FiniteModule const& N) {
    auto const tm = M.tables();
    auto const tn = N.tables();
    std::size_t const r = M.ring().size();
    std::set<std::vector<unsigned>> out;
    std::vector<unsigned> f(tm.size, 0);
    while (true) {
      bool ok = true;
      for (std::size_t x = 0; x < tm.size && ok; ++x) {
        for (std::size_t y = 0; y < tm.size && ok; ++y) {
          ok = f[tm.add[x][y]] == tn.add[f[x]][f[y]];
        }
        for (std::size_t a = 0; a < r && ok; ++a) {
          ok = f[tm.action[x][a]] == tn.action[f[x]][a];
        }
      }
      if (ok) {
        out.insert(f);
      }
      std::size_t i = tm.size;
      while (i > 0 && ++f[i - 1] == tn.size) {
        f[--i] = 0;
      }
      if (i == 0) {
        break;
      }
    }
    return out;
  }

}  // namespace oracle

#endif  // MODORDER_TESTS_ORACLE_HPP_
