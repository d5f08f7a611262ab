// Shared test helpers: seeded generators and brute-force oracles written
// independently of the library's search code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "mvalg/corpus.hpp"
#include "mvalg/morphism.hpp"
#include "mvalg/multiring.hpp"
#include "mvalg/oracle.hpp"

namespace testsupport {

using namespace mvalg;

using Rng = std::mt19937_64;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

inline std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline ElementSet random_nonempty(Rng& rng, std::size_t n) {
  return ElementSet::from_bits(std::uniform_int_distribution<std::uint64_t>(1, (std::uint64_t{1} << n) - 1)(rng));
}

inline ElementSet image_of(ElementSet s, const std::vector<std::size_t>& p) {
  ElementSet out;
  for (std::size_t x : s) out.insert(p[x]);
  return out;
}

/// Moves element i to position p[i], keeping its label.
inline FiniteMultiring permute(const FiniteMultiring& r, const std::vector<std::size_t>& p) {
  const std::size_t n = r.size();
  std::vector<std::string> names(n);
  std::vector<ElementSet> add(n * n);
  std::vector<std::size_t> mul(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[p[a]] = r.name(a);
    neg[p[a]] = p[r.neg(a)];
    for (std::size_t b = 0; b < n; ++b) {
      add[p[a] * n + p[b]] = image_of(r.add(a, b), p);
      mul[p[a] * n + p[b]] = p[r.mul(a, b)];
    }
  }
  return FiniteMultiring(Carrier(names), add, mul, neg, p[r.zero()], p[r.one()]);
}

/// Every corpus member of kind multiring.
inline std::vector<std::pair<std::string, FiniteMultiring>> corpus_rings() {
  return corpus::of_type<FiniteMultiring>();
}

inline std::vector<std::pair<std::string, FiniteMultiring>> corpus_fields() {
  std::vector<std::pair<std::string, FiniteMultiring>> out;
  for (auto& [n, r] : corpus_rings()) {
    if (classify(r).multifield) out.push_back({n, r});
  }
  return out;
}

// ---- brute-force oracles ---------------------------------------------------

/// Axioms i–iii straight from the definition, on raw tables.
inline bool naive_multigroup(std::size_t n, const std::function<ElementSet(std::size_t, std::size_t)>& op,
                             const std::function<std::size_t(std::size_t)>& r, std::size_t e) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (op(x, y).empty()) return false;
      if (op(e, x).contains(y) != (x == y)) return false;
      for (std::size_t z = 0; z < n; ++z) {
        if (op(x, y).contains(z) && (!op(z, r(y)).contains(x) || !op(r(x), z).contains(y))) return false;
        ElementSet left, right;
        for (std::size_t t = 0; t < n; ++t) {
          if (op(x, y).contains(t)) left = left | op(t, z);
          if (op(y, z).contains(t)) right = right | op(x, t);
        }
        if (left != right) return false;
      }
    }
  }
  return true;
}

/// All maps a → b passing the five morphism conditions, by scanning every
/// function on indices.
inline std::vector<StructureMap> naive_morphisms(const FiniteMultiring& a, const FiniteMultiring& b) {
  std::vector<StructureMap> out;
  const std::size_t n = a.size(), m = b.size();
  std::vector<std::size_t> f(n, 0);
  while (true) {
    bool ok = f[a.zero()] == b.zero() && f[a.one()] == b.one();
    for (std::size_t x = 0; x < n && ok; ++x) {
      ok = f[a.neg(x)] == b.neg(f[x]);
      for (std::size_t y = 0; y < n && ok; ++y) {
        ok = f[a.mul(x, y)] == b.mul(f[x], f[y]);
        for (std::size_t z : a.add(x, y)) ok = ok && b.add(f[x], f[y]).contains(f[z]);
      }
    }
    if (ok) out.push_back(StructureMap{f});
    std::size_t i = 0;
    while (i < n && ++f[i] == m) f[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool naive_isomorphic(const FiniteMultiring& a, const FiniteMultiring& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> p(a.size());
  std::iota(p.begin(), p.end(), std::size_t{0});
  do {
    bool ok = p[a.zero()] == b.zero() && p[a.one()] == b.one();
    for (std::size_t x = 0; x < a.size() && ok; ++x) {
      ok = p[a.neg(x)] == b.neg(p[x]);
      for (std::size_t y = 0; y < a.size() && ok; ++y) {
        ok = p[a.mul(x, y)] == b.mul(p[x], p[y]) && image_of(a.add(x, y), p) == b.add(p[x], p[y]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Every subset of the carrier satisfying `pred`, by scanning all 2^n.
inline std::vector<ElementSet> subsets_where(std::size_t n, const std::function<bool(ElementSet)>& pred) {
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    if (pred(ElementSet::from_bits(bits))) out.push_back(ElementSet::from_bits(bits));
  }
  return out;
}

inline bool naive_ideal(const FiniteMultiring& a, ElementSet i) {
  if (!i.contains(a.zero())) return false;
  for (std::size_t x : i) {
    for (std::size_t y : i) {
      if (!a.add(x, y).subset_of(i)) return false;
    }
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (!i.contains(a.mul(r, x))) return false;
    }
  }
  return true;
}

inline bool naive_prime(const FiniteMultiring& a, ElementSet p) {
  if (!naive_ideal(a, p) || p == a.all()) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (p.contains(a.mul(x, y)) && !p.contains(x) && !p.contains(y)) return false;
    }
  }
  return true;
}

/// P+P ⊆ P, PP ⊆ P, P ∪ −P = A, P ∩ −P prime.
inline bool naive_ordering(const FiniteMultiring& a, ElementSet p) {
  ElementSet negp;
  for (std::size_t x : p) negp.insert(a.neg(x));
  if ((p | negp) != a.all()) return false;
  for (std::size_t x : p) {
    for (std::size_t y : p) {
      if (!a.add(x, y).subset_of(p) || !p.contains(a.mul(x, y))) return false;
    }
  }
  return naive_prime(a, p & negp);
}

/// The triangle multifield with the lower endpoint of a + b off by one
/// whenever one summand exceeds twice the other: a bug sampling must catch.
class BrokenTriangle : public TriangleOracle {
 public:
  std::string name() const override { return "broken-triangle"; }

 protected:
  Rational lower(const Rational& a, const Rational& b) const override {
    Rational d = a > b ? Rational(a - b) : Rational(b - a);
    return a > 2 * b || b > 2 * a ? Rational(d + 1) : d;
  }
};

}  // namespace testsupport
