#include "mvalg/morphism.hpp"

#include <algorithm>
#include <map>

#include "mvalg/error.hpp"
#include "mvalg/search.hpp"

namespace mvalg {

ElementSet StructureMap::image() const {
  ElementSet out;
  for (std::size_t v : images) out.insert(v);
  return out;
}

ElementSet StructureMap::apply(ElementSet s) const {
  ElementSet out;
  for (std::size_t a : s) out.insert(images[a]);
  return out;
}

bool StructureMap::injective() const { return image().size() == images.size(); }

bool StructureMap::surjective_onto(std::size_t target_size) const {
  return image() == ElementSet::full(target_size);
}

StructureMap identity_map(std::size_t n) {
  StructureMap f;
  f.images.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.images[i] = i;
  return f;
}

StructureMap compose(const StructureMap& g, const StructureMap& f) {
  StructureMap h;
  h.images.reserve(f.size());
  for (std::size_t v : f.images) h.images.push_back(g.images.at(v));
  return h;
}

StructureMap inverse_map(const StructureMap& f) {
  StructureMap g;
  g.images.assign(f.size(), 0);
  for (std::size_t i = 0; i < f.size(); ++i) g.images.at(f.images[i]) = i;
  return g;
}

namespace {

void require_total(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f) {
  if (f.size() != a.size()) throw InputError("map is not total on the source carrier");
  for (std::size_t v : f.images) {
    if (v >= b.size()) throw InputError("map sends an element outside the target carrier");
  }
}

}  // namespace

CheckReport check_morphism(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f) {
  require_total(a, b, f);
  CheckReport report;
  const std::size_t n = a.size();
  const Carrier& c = a.carrier();
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n && w.empty(); ++y) {
        for (std::size_t z : a.add(x, y)) {
          if (!b.add(f(x), f(y)).contains(f(z))) {
            w = {x, y, z};
            break;
          }
        }
      }
    }
    report.verdict("i.sum", w.empty(), c, w, "c in a+b implies f(c) in f(a)+f(b)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n; ++x) {
      if (f(a.neg(x)) != b.neg(f(x))) {
        w = {x};
        break;
      }
    }
    report.verdict("ii.negation", w.empty(), c, w, "f(-a) = -f(a)");
  }
  report.verdict("iii.zero", f(a.zero()) == b.zero(), c, {a.zero()}, "f(0) = 0");
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (f(a.mul(x, y)) != b.mul(f(x), f(y))) {
          w = {x, y};
          break;
        }
      }
    }
    report.verdict("iv.product", w.empty(), c, w, "f(ab) = f(a)f(b)");
  }
  report.verdict("v.one", f(a.one()) == b.one(), c, {a.one()}, "f(1) = 1");
  return report;
}

bool is_morphism(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f) {
  return check_morphism(a, b, f).overall();
}

std::string_view to_string(EmbeddingKind k) {
  switch (k) {
    case EmbeddingKind::not_injective:
      return "not_injective";
    case EmbeddingKind::embedded:
      return "embedded";
    case EmbeddingKind::strongly_embedded:
      return "strongly_embedded";
    case EmbeddingKind::submultiring:
      return "submultiring";
  }
  return "?";
}

EmbeddingKind embedding_kind(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f) {
  require_total(a, b, f);
  if (!f.injective()) return EmbeddingKind::not_injective;
  const std::size_t n = a.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (b.add(f(x), f(y)).contains(f(z)) && !a.add(x, y).contains(z)) return EmbeddingKind::embedded;
      }
    }
  }
  const ElementSet img = f.image();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!b.add(f(x), f(y)).subset_of(img)) return EmbeddingKind::strongly_embedded;
    }
  }
  return EmbeddingKind::submultiring;
}

namespace {

// Checks every morphism constraint among indices ≤ k that mentions k.
// With `reflect`, sums must also be reflected (used for isomorphisms).
bool consistent_at(const FiniteMultiring& a, const FiniteMultiring& b, const std::vector<std::size_t>& f,
                   std::size_t k, bool reflect) {
  const std::size_t nk = a.neg(k);
  if (nk <= k && f[nk] != b.neg(f[k])) return false;
  for (std::size_t j = 0; j < k; ++j) {
    if (a.neg(j) == k && f[k] != b.neg(f[j])) return false;
  }
  for (std::size_t x = 0; x <= k; ++x) {
    for (std::size_t y = 0; y <= k; ++y) {
      const std::size_t p = a.mul(x, y);
      if (std::max({x, y, p}) == k && f[p] != b.mul(f[x], f[y])) return false;
      const ElementSet target = b.add(f[x], f[y]);
      if (reflect) {
        const std::size_t lo = (x == k || y == k) ? 0 : k;
        for (std::size_t z = lo; z <= k; ++z) {
          if (a.add(x, y).contains(z) != target.contains(f[z])) return false;
        }
      } else {
        for (std::size_t z : a.add(x, y)) {
          if (z <= k && std::max({x, y, z}) == k && !target.contains(f[z])) return false;
        }
      }
    }
  }
  return true;
}

std::vector<ElementSet> pinned_domains(const FiniteMultiring& a, const FiniteMultiring& b) {
  std::vector<ElementSet> allowed(a.size(), b.all());
  allowed[a.zero()] &= ElementSet::singleton(b.zero());
  allowed[a.one()] &= ElementSet::singleton(b.one());
  return allowed;
}

// Isomorphism-invariant fingerprint of an element.
std::vector<std::size_t> signature(const FiniteMultiring& r, std::size_t x) {
  std::vector<std::size_t> sig;
  sig.push_back(x == r.zero());
  sig.push_back(x == r.one());
  sig.push_back(x == r.minus_one());
  sig.push_back(r.neg(x) == x);
  sig.push_back(r.add(x, x).size());
  sig.push_back(r.add(x, r.neg(x)).size());
  std::size_t annihilates = 0;
  for (std::size_t y = 0; y < r.size(); ++y) annihilates += r.mul(x, y) == r.zero();
  sig.push_back(annihilates);
  ElementSet powers;
  std::size_t p = x;
  while (!powers.contains(p)) {
    powers.insert(p);
    p = r.mul(p, x);
  }
  sig.push_back(powers.size());
  std::vector<std::size_t> sums;
  for (std::size_t y = 0; y < r.size(); ++y) sums.push_back(r.add(x, y).size());
  std::sort(sums.begin(), sums.end());
  sig.insert(sig.end(), sums.begin(), sums.end());
  return sig;
}

}  // namespace

std::vector<StructureMap> enumerate_morphisms(const FiniteMultiring& a, const FiniteMultiring& b, std::size_t limit) {
  std::vector<StructureMap> out;
  if (limit == 0) return out;
  detail::backtrack_maps(
      a.size(), pinned_domains(a, b), false,
      [&](const std::vector<std::size_t>& f, std::size_t k) { return consistent_at(a, b, f, k, false); },
      [&](const std::vector<std::size_t>& f) {
        out.push_back(StructureMap{f});
        return out.size() < limit;
      });
  return out;
}

std::optional<StructureMap> find_isomorphism(const FiniteMultiring& a, const FiniteMultiring& b) {
  if (a.size() != b.size()) return std::nullopt;
  std::map<std::vector<std::size_t>, ElementSet> classes;
  for (std::size_t y = 0; y < b.size(); ++y) classes[signature(b, y)].insert(y);
  std::vector<ElementSet> allowed = pinned_domains(a, b);
  for (std::size_t x = 0; x < a.size(); ++x) {
    auto it = classes.find(signature(a, x));
    allowed[x] &= it == classes.end() ? ElementSet{} : it->second;
    if (allowed[x].empty()) return std::nullopt;
  }
  std::optional<StructureMap> found;
  detail::backtrack_maps(
      a.size(), allowed, true,
      [&](const std::vector<std::size_t>& f, std::size_t k) { return consistent_at(a, b, f, k, true); },
      [&](const std::vector<std::size_t>& f) {
        found = StructureMap{f};
        return false;
      });
  return found;
}

bool isomorphic(const FiniteMultiring& a, const FiniteMultiring& b) { return find_isomorphism(a, b).has_value(); }

bool is_isomorphism(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f) {
  if (a.size() != b.size() || f.size() != a.size() || !f.surjective_onto(b.size())) return false;
  return is_morphism(a, b, f) && is_morphism(b, a, inverse_map(f));
}

}  // namespace mvalg
