#include "mvalg/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "mvalg/error.hpp"

namespace mvalg {

namespace {

std::string entry(std::size_t v, std::size_t n) {
  std::string s = std::to_string(v);
  const std::size_t width = std::to_string(n > 0 ? n - 1 : 0).size();
  return std::string(width - s.size(), '0') + s;
}

std::string cell(ElementSet c, std::size_t n) {
  static constexpr char hex[] = "0123456789abcdef";
  const std::size_t width = std::max<std::size_t>(1, (n + 3) / 4);
  std::string s(width, '0');
  std::uint64_t b = c.bits();
  for (std::size_t i = width; i-- > 0; b >>= 4) s[i] = hex[b & 15];
  return s;
}

Carrier e_labels(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return Carrier(std::move(names));
}

ElementSet image(ElementSet s, const std::vector<std::size_t>& p) {
  ElementSet out;
  for (std::size_t x : s) out.insert(p[x]);
  return out;
}

// p[old] = new.
FiniteMultiring permuted(const FiniteMultiring& r, const std::vector<std::size_t>& p) {
  const std::size_t n = r.size();
  std::vector<ElementSet> add(n * n);
  std::vector<std::size_t> mul(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[p[a]] = p[r.neg(a)];
    for (std::size_t b = 0; b < n; ++b) {
      add[p[a] * n + p[b]] = image(r.add(a, b), p);
      mul[p[a] * n + p[b]] = p[r.mul(a, b)];
    }
  }
  return FiniteMultiring(e_labels(n), std::move(add), std::move(mul), std::move(neg), p[r.zero()], p[r.one()]);
}

FiniteMultigroup permuted(const FiniteMultigroup& g, const std::vector<std::size_t>& p) {
  const std::size_t n = g.size();
  std::vector<ElementSet> op(n * n);
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv[p[a]] = p[g.inv(a)];
    for (std::size_t b = 0; b < n; ++b) op[p[a] * n + p[b]] = image(g.op(a, b), p);
  }
  return FiniteMultigroup(e_labels(n), std::move(op), std::move(inv), p[g.identity()]);
}

template <class T>
std::pair<std::string, T> least_relabeling(const T& s) {
  const std::size_t n = s.size();
  if (n > 8) throw InputError("canonical form needs at most 8 elements");
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::optional<std::pair<std::string, T>> best;
  do {
    T t = permuted(s, p);
    std::string code = structure_code(t);
    if (!best || code < best->first) best.emplace(std::move(code), std::move(t));
  } while (std::next_permutation(p.begin(), p.end()));
  return std::move(*best);
}

// Odometer over `count` digits in [0, radix).
bool advance(std::vector<std::size_t>& digits, std::size_t radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

// Negation read off the sum table: the unique b with zero ∈ a + b.
std::optional<std::vector<std::size_t>> derived_neg(std::size_t n, const std::vector<ElementSet>& add,
                                                    std::size_t zero) {
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t found = n, count = 0;
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a * n + b].contains(zero)) found = b, ++count;
    }
    if (count != 1) return std::nullopt;
    neg[a] = found;
  }
  return neg;
}

void enumerate_multirings(std::size_t n, bool fields, std::vector<Enumerated>& out) {
  for (std::size_t zero = 0; zero < n; ++zero) {
    for (std::size_t one = 0; one < n; ++one) {
      // 1 = 0 forces a = a·1 = a·0 = 0 for every a.
      if ((one == zero) != (n == 1)) continue;
      std::vector<std::pair<std::size_t, std::size_t>> free_mul, free_add;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          if (a != zero && b != zero && a != one && b != one) free_mul.push_back({a, b});
          if (a != zero && b != zero) free_add.push_back({a, b});
        }
      }
      std::vector<std::size_t> mul_digits(free_mul.size(), 0);
      do {
        std::vector<std::size_t> mul(n * n);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) {
            mul[a * n + b] = a == zero || b == zero ? zero : a == one ? b : b == one ? a : 0;
          }
        }
        for (std::size_t i = 0; i < free_mul.size(); ++i) {
          const auto [a, b] = free_mul[i];
          mul[a * n + b] = mul[b * n + a] = mul_digits[i];
        }
        std::vector<std::size_t> add_digits(free_add.size(), 0);
        const std::size_t cells = (std::size_t{1} << n) - 1;
        do {
          std::vector<ElementSet> add(n * n);
          for (std::size_t x = 0; x < n; ++x) {
            add[zero * n + x] = add[x * n + zero] = ElementSet::singleton(x);
          }
          for (std::size_t i = 0; i < free_add.size(); ++i) {
            const auto [a, b] = free_add[i];
            add[a * n + b] = add[b * n + a] = ElementSet::from_bits(add_digits[i] + 1);
          }
          auto neg = derived_neg(n, add, zero);
          if (!neg) continue;
          FiniteMultiring r(e_labels(n), std::move(add), mul, std::move(*neg), zero, one);
          const Classification c = classify(r);
          if (!c.multiring || (fields && !c.multifield)) continue;
          out.push_back({structure_code(r), std::move(r)});
        } while (advance(add_digits, cells));
      } while (advance(mul_digits, n));
    }
  }
}

// Axiom i on bitmask tables; a cheap filter before the full audit.
bool reversible(std::size_t n, const std::vector<ElementSet>& op, const std::vector<std::size_t>& inv) {
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z : op[x * n + y]) {
        if (!op[z * n + inv[y]].contains(x) || !op[inv[x] * n + z].contains(y)) return false;
      }
    }
  }
  return true;
}

void enumerate_multigroups(std::size_t n, std::vector<Enumerated>& out) {
  const std::size_t cells = (std::size_t{1} << n) - 1;
  for (std::size_t id = 0; id < n; ++id) {
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != id) free.push_back({a, b});
      }
    }
    std::vector<std::size_t> digits(free.size(), 0);
    do {
      std::vector<ElementSet> op(n * n);
      for (std::size_t x = 0; x < n; ++x) op[id * n + x] = ElementSet::singleton(x);
      for (std::size_t i = 0; i < free.size(); ++i) {
        op[free[i].first * n + free[i].second] = ElementSet::from_bits(digits[i] + 1);
      }
      // With z = y ∈ 1∗y, axiom i gives 1 ∈ y∗r(y); conversely 1 ∈ x∗y
      // gives x ∈ 1∗r(y) = {r(y)}. So r(y) is the unique x with 1 ∈ x∗y.
      std::vector<std::size_t> inv(n);
      bool ok = true;
      for (std::size_t y = 0; y < n && ok; ++y) {
        std::size_t count = 0;
        for (std::size_t x = 0; x < n; ++x) {
          if (op[x * n + y].contains(id)) inv[y] = x, ++count;
        }
        ok = count == 1;
      }
      if (!ok || !reversible(n, op, inv)) continue;
      FiniteMultigroup g(e_labels(n), std::move(op), std::move(inv), id);
      if (!check_multigroup(g).overall()) continue;
      out.push_back({structure_code(g), std::move(g)});
    } while (advance(digits, cells));
  }
}

}  // namespace

std::optional<EnumKind> parse_enum_kind(std::string_view s) {
  if (s == "multigroup") return EnumKind::multigroup;
  if (s == "multiring") return EnumKind::multiring;
  if (s == "multifield") return EnumKind::multifield;
  return std::nullopt;
}

std::string structure_code(const FiniteMultiring& r) {
  const std::size_t n = r.size();
  std::string s = "z" + entry(r.zero(), n) + "o" + entry(r.one(), n) + "|n";
  for (std::size_t a = 0; a < n; ++a) s += entry(r.neg(a), n);
  s += "|m";
  for (std::size_t v : r.mul_table()) s += entry(v, n);
  s += "|a";
  for (ElementSet c : r.add_table()) s += cell(c, n);
  return s;
}

std::string structure_code(const FiniteMultigroup& g) {
  const std::size_t n = g.size();
  std::string s = "i" + entry(g.identity(), n) + "|r";
  for (std::size_t a = 0; a < n; ++a) s += entry(g.inv(a), n);
  s += "|o";
  for (ElementSet c : g.table()) s += cell(c, n);
  return s;
}

std::pair<std::string, FiniteMultiring> canonical_form(const FiniteMultiring& r) { return least_relabeling(r); }
std::pair<std::string, FiniteMultigroup> canonical_form(const FiniteMultigroup& g) { return least_relabeling(g); }

EnumerationResult enumerate_structures(EnumKind kind, std::size_t order, bool up_to_iso) {
  if (order == 0 || order > kMaxEnumOrder) {
    throw InputError("enumeration order must be between 1 and " + std::to_string(kMaxEnumOrder));
  }
  EnumerationResult res;
  if (kind == EnumKind::multigroup) {
    enumerate_multigroups(order, res.items);
  } else {
    enumerate_multirings(order, kind == EnumKind::multifield, res.items);
  }
  res.labelled = res.items.size();
  if (up_to_iso) {
    std::map<std::string, Structure> classes;
    for (const auto& item : res.items) {
      std::visit(
          [&](const auto& s) {
            if constexpr (std::is_same_v<std::decay_t<decltype(s)>, FiniteMultiring> ||
                          std::is_same_v<std::decay_t<decltype(s)>, FiniteMultigroup>) {
              auto [code, rep] = canonical_form(s);
              classes.try_emplace(std::move(code), std::move(rep));
            }
          },
          item.value);
    }
    res.items.clear();
    for (auto& [code, rep] : classes) res.items.push_back({code, std::move(rep)});
  } else {
    std::sort(res.items.begin(), res.items.end(),
              [](const Enumerated& a, const Enumerated& b) { return a.code < b.code; });
  }
  return res;
}

}  // namespace mvalg
