#include "mvalg/constructions.hpp"

#include <functional>

#include "mvalg/error.hpp"

namespace mvalg {

FiniteMultiring product(const std::vector<FiniteMultiring>& factors) {
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    if (n > kMaxElements) throw InputError("product exceeds the 64-element carrier cap");
  }
  // Mixed-radix digits, first factor most significant.
  auto digits = [&](std::size_t x) {
    std::vector<std::size_t> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = x % factors[i].size();
      x /= factors[i].size();
    }
    return d;
  };
  auto encode = [&](const std::vector<std::size_t>& d) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) x = x * factors[i].size() + d[i];
    return x;
  };

  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto d = digits(x);
    std::string label = "(";
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) label += ",";
      label += factors[i].name(d[i]);
    }
    names[x] = label + ")";
  }

  std::vector<ElementSet> add(n * n);
  std::vector<std::size_t> mul(n * n), neg(n);
  std::vector<std::size_t> zero_d, one_d;
  for (const auto& f : factors) {
    zero_d.push_back(f.zero());
    one_d.push_back(f.one());
  }
  for (std::size_t x = 0; x < n; ++x) {
    auto dx = digits(x);
    std::vector<std::size_t> dn(dx.size());
    for (std::size_t i = 0; i < dx.size(); ++i) dn[i] = factors[i].neg(dx[i]);
    neg[x] = encode(dn);
    for (std::size_t y = 0; y < n; ++y) {
      auto dy = digits(y);
      std::vector<std::size_t> dm(dx.size());
      for (std::size_t i = 0; i < dx.size(); ++i) dm[i] = factors[i].mul(dx[i], dy[i]);
      mul[x * n + y] = encode(dm);
      ElementSet cell;
      for (std::size_t z = 0; z < n; ++z) {
        auto dz = digits(z);
        bool in = true;
        for (std::size_t i = 0; i < dx.size() && in; ++i) in = factors[i].add(dx[i], dy[i]).contains(dz[i]);
        if (in) cell.insert(z);
      }
      add[x * n + y] = cell;
    }
  }
  return FiniteMultiring(Carrier(std::move(names)), std::move(add), std::move(mul), std::move(neg), encode(zero_d),
                         encode(one_d));
}

StructureMap product_projection(const std::vector<FiniteMultiring>& factors, std::size_t i) {
  std::size_t n = 1;
  for (const auto& f : factors) n *= f.size();
  std::size_t stride = 1;
  for (std::size_t j = i + 1; j < factors.size(); ++j) stride *= factors[j].size();
  StructureMap p;
  for (std::size_t x = 0; x < n; ++x) p.images.push_back((x / stride) % factors.at(i).size());
  return p;
}

bool is_ideal(const FiniteMultiring& a, ElementSet i) {
  if (!i.contains(a.zero())) return false;
  if (!a.add_sets(i, i).subset_of(i)) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (!a.scale(i, r).subset_of(i)) return false;
  }
  return true;
}

bool is_multiplicative(const FiniteMultiring& a, ElementSet s) {
  if (!s.contains(a.one())) return false;
  for (std::size_t x : s) {
    if (!a.scale(s, x).subset_of(s)) return false;
  }
  return true;
}

ElementSet ideal_generated(const FiniteMultiring& a, ElementSet s) {
  ElementSet x = s | ElementSet::singleton(a.zero());
  while (true) {
    ElementSet next = x | a.add_sets(x, x);
    for (std::size_t r = 0; r < a.size(); ++r) next |= a.scale(x, r);
    if (next == x) return x;
    x = next;
  }
}

std::string class_label(const Carrier& c, ElementSet cls) {
  const std::string& rep = c.name(cls.first());
  return cls.size() == 1 ? rep : "[" + rep + "]";
}

namespace {

// Builds A/~ from a partition given as class index per element (classes
// numbered by least member). `rep_sum(a, b)` is the set of class indices the
// quotient's sum rule gives for representatives a, b; it must not depend on the
// representatives.
Construction quotient_from_partition(const FiniteMultiring& a, const std::vector<std::size_t>& cls,
                                     const std::function<ElementSet(std::size_t, std::size_t)>& rep_sum,
                                     const char* what) {
  const std::size_t n = a.size();
  std::size_t k = 0;
  for (std::size_t c : cls) k = std::max(k, c + 1);
  std::vector<ElementSet> members(k);
  for (std::size_t x = 0; x < n; ++x) members[cls[x]].insert(x);
  std::vector<std::size_t> rep(k);
  std::vector<std::string> names(k);
  for (std::size_t i = 0; i < k; ++i) {
    rep[i] = members[i].first();
    names[i] = class_label(a.carrier(), members[i]);
  }

  auto anomaly = [&](const std::string& op, std::size_t x, std::size_t y, std::size_t x2, std::size_t y2) {
    throw StructuralAnomaly(std::string(what) + ": " + op + " depends on representatives: (" + a.name(x) + "," +
                            a.name(y) + ") vs (" + a.name(x2) + "," + a.name(y2) + ")");
  };

  std::vector<ElementSet> add(k * k);
  std::vector<std::size_t> mul(k * k), neg(k);
  for (std::size_t i = 0; i < k; ++i) {
    neg[i] = cls[a.neg(rep[i])];
    for (std::size_t x : members[i]) {
      if (cls[a.neg(x)] != neg[i]) anomaly("negation", rep[i], rep[i], x, x);
    }
    for (std::size_t j = 0; j < k; ++j) {
      const ElementSet sum = rep_sum(rep[i], rep[j]);
      const std::size_t prod = cls[a.mul(rep[i], rep[j])];
      for (std::size_t x : members[i]) {
        for (std::size_t y : members[j]) {
          if (rep_sum(x, y) != sum) anomaly("sum", rep[i], rep[j], x, y);
          if (cls[a.mul(x, y)] != prod) anomaly("product", rep[i], rep[j], x, y);
        }
      }
      add[i * k + j] = sum;
      mul[i * k + j] = prod;
    }
  }
  StructureMap proj{cls};
  return {FiniteMultiring(Carrier(std::move(names)), std::move(add), std::move(mul), std::move(neg),
                          cls[a.zero()], cls[a.one()]),
          std::move(proj)};
}

// Class index per element from an equivalence given as a predicate; classes
// numbered in order of least member. Transitivity is verified.
std::vector<std::size_t> partition_by(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& eq,
                                      const Carrier& carrier, const char* what) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!eq(x, y)) continue;
      if (!eq(y, x)) {
        throw StructuralAnomaly(std::string(what) + ": relation not symmetric at (" + carrier.name(x) + "," +
                                carrier.name(y) + ")");
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (eq(y, z) && !eq(x, z)) {
          throw StructuralAnomaly(std::string(what) + ": relation not transitive at (" + carrier.name(x) + "," +
                                  carrier.name(y) + "," + carrier.name(z) + ")");
        }
      }
    }
  }
  std::vector<std::size_t> cls(n, n);
  std::size_t k = 0;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != n) continue;
    for (std::size_t y = x; y < n; ++y) {
      if (eq(x, y)) cls[y] = k;
    }
    ++k;
  }
  return cls;
}

}  // namespace

Construction quotient_by_ideal(const FiniteMultiring& a, ElementSet ideal) {
  if (!is_ideal(a, ideal)) throw PreconditionError("quotient: the given set is not an ideal");
  const std::size_t n = a.size();
  std::vector<ElementSet> coset(n);
  for (std::size_t x = 0; x < n; ++x) coset[x] = a.add_sets(ElementSet::singleton(x), ideal);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (coset[x] != coset[y] && coset[x].intersects(coset[y])) {
        throw StructuralAnomaly("quotient: cosets of " + a.name(x) + " and " + a.name(y) +
                                " overlap without being equal");
      }
    }
  }
  auto cls = partition_by(
      n, [&](std::size_t x, std::size_t y) { return coset[x] == coset[y]; }, a.carrier(), "quotient");
  auto rep_sum = [&](std::size_t x, std::size_t y) {
    ElementSet out;
    for (std::size_t z : a.add(x, y)) out.insert(cls[z]);
    return out;
  };
  return quotient_from_partition(a, cls, rep_sum, "quotient");
}

Construction marshall_quotient(const FiniteMultiring& a, ElementSet s) {
  if (!is_multiplicative(a, s)) throw PreconditionError("marshall quotient: S is not multiplicative");
  const std::size_t n = a.size();
  std::vector<ElementSet> orbit(n);  // {x·s : s ∈ S}
  for (std::size_t x = 0; x < n; ++x) orbit[x] = a.scale(s, x);
  auto cls = partition_by(
      n, [&](std::size_t x, std::size_t y) { return orbit[x].intersects(orbit[y]); }, a.carrier(),
      "marshall quotient");
  auto rep_sum = [&](std::size_t x, std::size_t y) {
    ElementSet sums;
    for (std::size_t xs : orbit[x]) {
      for (std::size_t yt : orbit[y]) sums |= a.add(xs, yt);
    }
    ElementSet out;
    for (std::size_t c = 0; c < n; ++c) {
      if (orbit[c].intersects(sums)) out.insert(cls[c]);
    }
    return out;
  };
  return quotient_from_partition(a, cls, rep_sum, "marshall quotient");
}

Construction localization(const FiniteMultiring& a, ElementSet s) {
  if (!is_multiplicative(a, s)) throw PreconditionError("localization: S is not multiplicative");
  // Pairs (num, den), dens ordered with 1 first so that a/1 represents
  // its class whenever possible.
  std::vector<std::size_t> dens{a.one()};
  for (std::size_t t : s) {
    if (t != a.one()) dens.push_back(t);
  }
  struct Pair {
    std::size_t num, den;
  };
  std::vector<Pair> pairs;
  for (std::size_t t : dens) {
    for (std::size_t x = 0; x < a.size(); ++x) pairs.push_back({x, t});
  }
  const std::size_t p = pairs.size();
  // x/s = y/t iff x t u = y s u for some u.
  auto eq = [&](std::size_t i, std::size_t j) {
    const auto [x, sx] = pairs[i];
    const auto [y, ty] = pairs[j];
    for (std::size_t u : s) {
      if (a.mul(a.mul(x, ty), u) == a.mul(a.mul(y, sx), u)) return true;
    }
    return false;
  };
  std::vector<std::size_t> cls(p, p);
  std::size_t k = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t j = 0; j < p; ++j) {
      if (!eq(i, j)) continue;
      for (std::size_t l = 0; l < p; ++l) {
        if (eq(j, l) && !eq(i, l)) {
          throw StructuralAnomaly("localization: pair relation not transitive");
        }
      }
    }
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (cls[i] != p) continue;
    for (std::size_t j = i; j < p; ++j) {
      if (eq(i, j)) cls[j] = k;
    }
    ++k;
  }
  if (k > kMaxElements) throw InputError("localization exceeds the 64-element carrier cap");
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t i = 0; i < p; ++i) members[cls[i]].push_back(i);

  std::vector<std::string> names(k);
  for (std::size_t c = 0; c < k; ++c) {
    const Pair& r = pairs[members[c].front()];
    names[c] = r.den == a.one() ? a.name(r.num) : a.name(r.num) + "/" + a.name(r.den);
  }
  auto class_of = [&](std::size_t num, std::size_t den) {
    for (std::size_t i = 0; i < p; ++i) {
      if (pairs[i].num == num && pairs[i].den == den) return cls[i];
    }
    throw StructuralAnomaly("localization: missing pair");
  };

  std::vector<ElementSet> add(k * k);
  std::vector<std::size_t> mul(k * k), neg(k);
  for (std::size_t c = 0; c < k; ++c) {
    const Pair& r = pairs[members[c].front()];
    neg[c] = class_of(a.neg(r.num), r.den);
    for (std::size_t i : members[c]) {
      if (class_of(a.neg(pairs[i].num), pairs[i].den) != neg[c]) {
        throw StructuralAnomaly("localization: negation depends on representatives");
      }
    }
  }
  for (std::size_t c1 = 0; c1 < k; ++c1) {
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      const Pair& r1 = pairs[members[c1].front()];
      const Pair& r2 = pairs[members[c2].front()];
      const std::size_t prod = class_of(a.mul(r1.num, r2.num), a.mul(r1.den, r2.den));
      for (std::size_t i : members[c1]) {
        for (std::size_t j : members[c2]) {
          if (class_of(a.mul(pairs[i].num, pairs[j].num), a.mul(pairs[i].den, pairs[j].den)) != prod) {
            throw StructuralAnomaly("localization: product depends on representatives");
          }
        }
      }
      mul[c1 * k + c2] = prod;
    }
  }
  // c/u ∈ x/s + y/t iff c s t v ∈ x t u v + y s u v for some v, over all
  // representatives of the three classes.
  for (std::size_t c1 = 0; c1 < k; ++c1) {
    for (std::size_t c2 = 0; c2 < k; ++c2) {
      ElementSet cell;
      for (std::size_t c3 = 0; c3 < k; ++c3) {
        bool in = false;
        for (std::size_t i : members[c1]) {
          for (std::size_t j : members[c2]) {
            for (std::size_t l : members[c3]) {
              const auto [x, sx] = pairs[i];
              const auto [y, ty] = pairs[j];
              const auto [z, uz] = pairs[l];
              for (std::size_t v : s) {
                const std::size_t lhs = a.mul(a.mul(a.mul(z, sx), ty), v);
                const std::size_t left = a.mul(a.mul(a.mul(x, ty), uz), v);
                const std::size_t right = a.mul(a.mul(a.mul(y, sx), uz), v);
                if (a.add(left, right).contains(lhs)) {
                  in = true;
                  break;
                }
              }
              if (in) break;
            }
            if (in) break;
          }
          if (in) break;
        }
        if (in) cell.insert(c3);
      }
      add[c1 * k + c2] = cell;
    }
  }
  StructureMap canon;
  for (std::size_t x = 0; x < a.size(); ++x) canon.images.push_back(class_of(x, a.one()));
  return {FiniteMultiring(Carrier(std::move(names)), std::move(add), std::move(mul), std::move(neg),
                          class_of(a.zero(), a.one()), class_of(a.one(), a.one())),
          std::move(canon)};
}

Construction fraction_multifield(const FiniteMultiring& d) {
  if (!classify(d).multidomain) throw PreconditionError("fraction multifield: domain required");
  return localization(d, d.nonzero());
}

SquareClosure sum_of_squares_closure(const FiniteMultiring& a) {
  ElementSet x;
  for (std::size_t u : a.units()) x.insert(a.mul(u, u));
  while (true) {
    ElementSet next = x | a.add_sets(x, x);
    for (std::size_t s : x) next |= a.scale(x, s);
    if (next == x) break;
    x = next;
  }
  SquareClosure out;
  out.members = x;
  out.proper = !x.contains(a.zero()) && !x.contains(a.minus_one());
  return out;
}

Construction q_red(const FiniteMultiring& a) {
  SquareClosure sq = sum_of_squares_closure(a);
  if (!sq.proper) throw PreconditionError("Q_red: not real (0 or -1 is a sum of squares)");
  return marshall_quotient(a, sq.members);
}

}  // namespace mvalg
