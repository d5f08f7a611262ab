#include "mvalg/special_group.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mvalg/error.hpp"
#include "mvalg/search.hpp"

namespace mvalg {

namespace {

// Union-find over pair indices a·n + b.
struct PairClasses {
  std::vector<std::size_t> parent;
  explicit PairClasses(std::size_t count) : parent(count) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

std::vector<ElementSet> cells_from_classes(std::size_t n, PairClasses& uf) {
  std::vector<ElementSet> iso(n * n * n);
  std::vector<ElementSet> members(n * n);  // class root -> pairs, as (c,d) masks per c
  std::vector<std::vector<std::size_t>> by_root(n * n);
  for (std::size_t p = 0; p < n * n; ++p) by_root[uf.find(p)].push_back(p);
  for (std::size_t p = 0; p < n * n; ++p) {
    for (std::size_t q : by_root[uf.find(p)]) iso[p * n + q / n].insert(q % n);
  }
  return iso;
}

std::string form(const Carrier& c, std::initializer_list<std::size_t> xs) {
  std::string out = "<";
  bool first = true;
  for (std::size_t x : xs) {
    if (!first) out += ",";
    first = false;
    out += c.name(x);
  }
  return out + ">";
}

}  // namespace

void SpecialGroup::validate_group() {
  const std::size_t n = carrier_.size();
  if (mul_.size() != n * n) throw InputError("group table has the wrong number of cells");
  for (std::size_t v : mul_) {
    if (v >= n) throw InputError("group table has an out-of-range entry");
  }
  if (minus_one_ >= n) throw InputError("-1 index out of range");
  std::optional<std::size_t> e;
  for (std::size_t x = 0; x < n && !e; ++x) {
    bool unit = true;
    for (std::size_t y = 0; y < n && unit; ++y) unit = mul(x, y) == y;
    if (unit) e = x;
  }
  if (!e) throw InputError("group table has no identity");
  one_ = *e;
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(x, x) != one_) throw InputError("group is not of exponent 2 at '" + carrier_.name(x) + "'");
    for (std::size_t y = 0; y < n; ++y) {
      if (mul(x, y) != mul(y, x)) throw InputError("group table is not commutative");
      for (std::size_t z = 0; z < n; ++z) {
        if (mul(mul(x, y), z) != mul(x, mul(y, z))) throw InputError("group table is not associative");
      }
    }
  }
}

SpecialGroup SpecialGroup::raw(Carrier carrier, std::vector<std::size_t> mul, std::size_t minus_one,
                               const std::vector<Quad>& iso) {
  SpecialGroup g;
  g.carrier_ = std::move(carrier);
  g.mul_ = std::move(mul);
  g.minus_one_ = minus_one;
  g.validate_group();
  const std::size_t n = g.size();
  g.iso_.assign(n * n * n, ElementSet{});
  for (const Quad& q : iso) {
    for (std::size_t v : q) {
      if (v >= n) throw InputError("isometry quadruple has an out-of-range entry");
    }
    g.iso_[(q[0] * n + q[1]) * n + q[2]].insert(q[3]);
  }
  return g;
}

SpecialGroup::SpecialGroup(Carrier carrier, std::vector<std::size_t> mul, std::size_t minus_one,
                           const std::vector<Quad>& iso) {
  *this = raw(std::move(carrier), std::move(mul), minus_one, iso);
  const std::size_t n = size();
  std::size_t before = 0;
  for (ElementSet c : iso_) before += c.size();
  PairClasses uf(n * n);
  for (const Quad& q : iso) uf.unite(q[0] * n + q[1], q[2] * n + q[3]);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) uf.unite(a * n + b, b * n + a);
  }
  iso_ = cells_from_classes(n, uf);
  std::size_t after = 0;
  for (ElementSet c : iso_) after += c.size();
  added_ = after - before;
}

std::vector<Quad> SpecialGroup::quadruples() const {
  std::vector<Quad> out;
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d : iso_cell(a, b, c)) out.push_back({a, b, c, d});
      }
    }
  }
  return out;
}

ElementSet SpecialGroup::represented(std::size_t a, std::size_t b) const {
  ElementSet out;
  for (std::size_t c = 0; c < size(); ++c) {
    for (std::size_t d = 0; d < size(); ++d) {
      if (iso(c, d, a, b)) {
        out.insert(c);
        break;
      }
    }
  }
  return out;
}

SpecialGroup SpecialGroup::with_quad(const Quad& q, bool present) const {
  SpecialGroup g = *this;
  ElementSet& cell = g.iso_.at((q[0] * size() + q[1]) * size() + q[2]);
  if (present) {
    cell.insert(q[3]);
  } else {
    cell.erase(q[3]);
  }
  g.added_ = 0;
  return g;
}

namespace {

// First quadruple (lexicographic) in the relation for which `bad` holds.
template <class Bad>
std::optional<Quad> first_quad(const SpecialGroup& g, Bad&& bad) {
  const std::size_t n = g.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d : g.iso_cell(a, b, c)) {
          if (bad(a, b, c, d)) return Quad{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

void quad_verdict(CheckReport& r, const SpecialGroup& g, const char* id, const std::optional<Quad>& w,
                  const std::string& detail) {
  if (w) {
    r.fail(id, g.carrier(), {(*w)[0], (*w)[1], (*w)[2], (*w)[3]}, detail);
  } else {
    r.pass(id, detail);
  }
}

void psg_axioms(const SpecialGroup& g, CheckReport& report) {
  const std::size_t n = g.size();
  const Carrier& c = g.carrier();
  {
    std::vector<std::size_t> w;
    std::string detail = "equivalence relation on pairs";
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!g.iso(a, b, a, b)) {
          w = {a, b, a, b};
          detail = "reflexivity fails";
          break;
        }
      }
    }
    if (w.empty()) {
      if (auto q = first_quad(g, [&](auto a, auto b, auto x, auto y) { return !g.iso(x, y, a, b); })) {
        w = {(*q)[0], (*q)[1], (*q)[2], (*q)[3]};
        detail = "symmetry fails";
      }
    }
    if (w.empty()) {
      // Rows of the pair relation as bitsets: ⟨a,b⟩ ≡ ⟨c,d⟩ and ⟨c,d⟩ ≡ ⟨e,f⟩
      // must give ⟨a,b⟩ ≡ ⟨e,f⟩.
      std::vector<boost::dynamic_bitset<>> row(n * n, boost::dynamic_bitset<>(n * n));
      for (const Quad& q : g.quadruples()) row[q[0] * n + q[1]].set(q[2] * n + q[3]);
      for (std::size_t p = 0; p < n * n && w.empty(); ++p) {
        for (std::size_t q = row[p].find_first(); q != boost::dynamic_bitset<>::npos; q = row[p].find_next(q)) {
          if (!row[q].is_subset_of(row[p])) {
            boost::dynamic_bitset<> missing = row[q] - row[p];
            std::size_t r = missing.find_first();
            w = {p / n, p % n, q / n, q % n, r / n, r % n};
            detail = "transitivity fails";
            break;
          }
        }
      }
    }
    report.verdict("SG0", w.empty(), c, w, detail);
  }
  quad_verdict(report, g, "SG1", [&]() -> std::optional<Quad> {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!g.iso(a, b, b, a)) return Quad{a, b, b, a};
      }
    }
    return std::nullopt;
  }(), "<a,b> = <b,a>");
  quad_verdict(report, g, "SG2", [&]() -> std::optional<Quad> {
    for (std::size_t a = 0; a < n; ++a) {
      if (!g.iso(a, g.neg(a), g.one(), g.minus_one())) return Quad{a, g.neg(a), g.one(), g.minus_one()};
    }
    return std::nullopt;
  }(), "<a,-a> = <1,-1>");
  quad_verdict(report, g, "SG3",
               first_quad(g, [&](auto a, auto b, auto x, auto y) { return g.mul(a, b) != g.mul(x, y); }),
               "<a,b> = <c,d> implies ab = cd");
  quad_verdict(report, g, "SG4", first_quad(g, [&](auto a, auto b, auto x, auto y) {
                 return !g.iso(a, g.neg(x), g.neg(b), y);
               }),
               "<a,b> = <c,d> implies <a,-c> = <-b,d>");
  quad_verdict(report, g, "SG5", first_quad(g, [&](auto a, auto b, auto x, auto y) {
                 for (std::size_t h = 0; h < n; ++h) {
                   if (!g.iso(g.mul(h, a), g.mul(h, b), g.mul(h, x), g.mul(h, y))) return true;
                 }
                 return false;
               }),
               "<a,b> = <c,d> implies <ga,gb> = <gc,gd>");
}

using Rows = std::vector<boost::dynamic_bitset<>>;

std::string triple_label(const SpecialGroup& g, std::size_t t) {
  const std::size_t n = g.size();
  return form(g.carrier(), {t / (n * n), (t / n) % n, t % n});
}

// First (s,t,u) with s R t, t R u, not s R u.
std::optional<std::array<std::size_t, 3>> first_intransitive(const Rows& r) {
  for (std::size_t s = 0; s < r.size(); ++s) {
    for (std::size_t t = r[s].find_first(); t != boost::dynamic_bitset<>::npos; t = r[s].find_next(t)) {
      if (!r[t].is_subset_of(r[s])) return std::array<std::size_t, 3>{s, t, (r[t] - r[s]).find_first()};
    }
  }
  return std::nullopt;
}

Rows transitive_closure(Rows r) {
  const std::size_t m = r.size();
  for (std::size_t k = 0; k < m; ++k) {
    for (std::size_t i = 0; i < m; ++i) {
      if (r[i].test(k)) r[i] |= r[k];
    }
  }
  return r;
}

}  // namespace

std::vector<boost::dynamic_bitset<>> triple_isometry(const SpecialGroup& g) {
  const std::size_t n = g.size();
  const std::size_t m = n * n * n;
  // partners[a2·n+a3] = all (x,z) with ⟨a2,a3⟩ ≡ ⟨x,z⟩.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> partners(n * n);
  // ys[(b2·n+b3)·n + z] = {y : ⟨b2,b3⟩ ≡ ⟨y,z⟩}.
  std::vector<ElementSet> ys(n * n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z : g.iso_cell(a, b, x)) {
          partners[a * n + b].push_back({x, z});
          ys[(a * n + b) * n + z].insert(x);
        }
      }
    }
  }
  Rows r(m, boost::dynamic_bitset<>(m));
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t a1 = s / (n * n), a23 = s % (n * n);
    for (std::size_t t = 0; t < m; ++t) {
      const std::size_t b1 = t / (n * n), b23 = t % (n * n);
      for (const auto& [x, z] : partners[a23]) {
        if (ys[b23 * n + z].intersects(g.iso_cell(a1, x, b1))) {
          r[s].set(t);
          break;
        }
      }
    }
  }
  return r;
}

CheckReport check_psg(const SpecialGroup& g) {
  CheckReport report;
  psg_axioms(g, report);
  return report;
}

namespace {

void sg6_verdict(const SpecialGroup& g, const Rows& r, CheckReport& report) {
  if (auto w = first_intransitive(r)) {
    report.fail_text("SG6", {triple_label(g, (*w)[0]), triple_label(g, (*w)[1]), triple_label(g, (*w)[2])},
                     "isometry of 3-forms is transitive");
  } else {
    report.pass("SG6", "isometry of 3-forms is transitive");
  }
}

}  // namespace

CheckReport check_sg(const SpecialGroup& g) {
  CheckReport report;
  psg_axioms(g, report);
  sg6_verdict(g, triple_isometry(g), report);
  return report;
}

CheckReport check_reduced(const SpecialGroup& g) {
  CheckReport report = check_sg(g);
  report.verdict("reduced.one_ne_minus_one", g.one() != g.minus_one(), g.carrier(), {g.one()}, "1 != -1");
  std::vector<std::size_t> w;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if (a != g.one() && g.iso(a, a, g.one(), g.one())) {
      w = {a};
      break;
    }
  }
  report.verdict("reduced.rigidity", w.empty(), g.carrier(), w, "<a,a> = <1,1> implies a = 1");
  return report;
}

CheckReport check_sg_extended(const SpecialGroup& g) {
  CheckReport report;
  if (!check_psg(g).overall()) {
    for (const char* id : {"SG7", "SG8", "SG9", "equivalence"}) report.skip(id, "SG0-SG5 do not hold");
    return report;
  }
  const std::size_t n = g.size();
  const Carrier& c = g.carrier();
  const Rows r = triple_isometry(g);
  auto T = [n](std::size_t a, std::size_t b, std::size_t d) { return (a * n + b) * n + d; };

  const bool sg6 = !first_intransitive(r).has_value();
  bool sg7 = true, sg8 = true, sg9 = true;
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        ElementSet left, right;
        for (std::size_t t : g.represented(g.one(), y)) left |= g.represented(x, t);
        for (std::size_t s : g.represented(g.one(), x)) right |= g.represented(y, s);
        if (left != right) {
          w = {x, y};
          break;
        }
      }
    }
    sg7 = w.empty();
    report.verdict("SG7", sg7, c, w, "union of D(x,t), t in D(1,y) = union of D(y,s), s in D(1,x)");
  }
  {
    const Rows closure = transitive_closure(r);
    std::vector<std::string> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t a2 = 0; a2 < n && w.empty(); ++a2) {
        for (std::size_t a3 = 0; a3 < n && w.empty(); ++a3) {
          for (std::size_t b2 = 0; b2 < n && w.empty(); ++b2) {
            for (std::size_t b3 = 0; b3 < n; ++b3) {
              if (closure[T(a, a2, a3)].test(T(a, b2, b3)) && !g.iso(a2, a3, b2, b3)) {
                w = {form(c, {a, a2, a3}), form(c, {a, b2, b3})};
                break;
              }
            }
          }
        }
      }
    }
    sg8 = w.empty();
    if (sg8) {
      report.pass("SG8", "chains <a,a2,a3> = ... = <a,b2,b3> give <a2,a3> = <b2,b3>");
    } else {
      report.fail_text("SG8", w, "chains <a,a2,a3> = ... = <a,b2,b3> give <a2,a3> = <b2,b3>");
    }
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        for (std::size_t x = 0; x < n && w.empty(); ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            const std::size_t rhs = T(x, y, g.mul(x, y));
            if (r[T(a, b, g.mul(a, b))].test(rhs) && !r[T(b, a, g.mul(a, b))].test(rhs)) {
              w = {a, b, x, y};
              break;
            }
          }
        }
      }
    }
    sg9 = w.empty();
    report.verdict("SG9", sg9, c, w, "<a,b,ab> = <c,d,cd> implies <b,a,ab> = <c,d,cd>");
  }
  const bool agree = sg6 == (sg7 && sg8) && sg6 == sg9;
  std::string detail = std::string("SG6=") + (sg6 ? "1" : "0") + " SG7&SG8=" + (sg7 && sg8 ? "1" : "0") +
                       " SG9=" + (sg9 ? "1" : "0");
  if (agree) {
    report.pass("equivalence", detail);
  } else {
    report.fail_text("equivalence", {detail}, "SG6 iff SG7&SG8 iff SG9");
  }
  return report;
}

FiniteMultiring sg_to_mf(const SpecialGroup& g, const std::string& zero_label) {
  if (!check_sg(g).overall()) throw PreconditionError("M(G): input is not a special group");
  const std::size_t n = g.size();
  if (n + 1 > kMaxElements) throw InputError("M(G) would exceed the 64-element carrier cap");
  std::vector<std::string> names = g.carrier().names();
  names.push_back(zero_label);
  const std::size_t z = n, m = n + 1;
  std::vector<ElementSet> add(m * m);
  std::vector<std::size_t> mul(m * m), neg(m);
  for (std::size_t a = 0; a < m; ++a) {
    neg[a] = a == z ? z : g.neg(a);
    for (std::size_t b = 0; b < m; ++b) {
      mul[a * m + b] = (a == z || b == z) ? z : g.mul(a, b);
      ElementSet cell;
      if (a == z) {
        cell = ElementSet::singleton(b);
      } else if (b == z) {
        cell = ElementSet::singleton(a);
      } else if (a == g.neg(b)) {
        cell = ElementSet::full(m);
      } else {
        cell = g.represented(a, b);
      }
      add[a * m + b] = cell;
    }
  }
  return FiniteMultiring(Carrier(std::move(names)), std::move(add), std::move(mul), std::move(neg), z, g.one());
}

CheckReport check_smf(const FiniteMultiring& f) {
  if (!classify(f).multifield) throw PreconditionError("SMF check: multifield required");
  CheckReport report;
  const Carrier& c = f.carrier();
  const std::vector<std::size_t> u(f.nonzero().begin(), f.nonzero().end());
  auto inv = [&](std::size_t a) { return f.inverse(a); };
  auto in = [&](std::size_t x, std::size_t a, std::size_t b) { return f.add(a, b).contains(x); };
  {
    std::vector<std::size_t> w;
    for (std::size_t a : u) {
      if (f.mul(a, a) != f.one()) {
        w = {a};
        break;
      }
    }
    report.verdict("i.exponent_two", w.empty(), c, w, "a^2 = 1 for a != 0");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a : u) {
      if (f.add(a, f.neg(a)) != f.all()) {
        w = {a};
        break;
      }
    }
    report.verdict("ii.opposites", w.empty(), c, w, "a + (-a) = F for a != 0");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a : u) {
      for (std::size_t b : u) {
        for (std::size_t x : u) {
          for (std::size_t y : u) {
            if (w.empty() && f.mul(a, b) == f.mul(x, y) && in(a, x, y) && !in(x, a, b)) w = {a, b, x, y};
          }
        }
      }
    }
    report.verdict("iii.symmetry", w.empty(), c, w, "ab = cd and a in c+d imply c in a+b");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a : u) {
      for (std::size_t b : u) {
        const std::size_t p = f.mul(a, b);
        for (std::size_t x : u) {
          for (std::size_t y : u) {
            if (!w.empty() || f.mul(x, y) != p || !in(a, x, y)) continue;
            for (std::size_t e : u) {
              for (std::size_t g : u) {
                if (w.empty() && f.mul(e, g) == p && in(x, e, g) && !in(a, e, g)) w = {a, b, x, y, e, g};
              }
            }
          }
        }
      }
    }
    report.verdict("iv.transitivity", w.empty(), c, w, "ab = cd = ef, a in c+d, c in e+f imply a in e+f");
  }
  {
    // With inverses, a = xz and c = yz pin z and y once x is chosen, and
    // b = tw, c = vw pin t and v once w is chosen.
    std::vector<std::size_t> w;
    for (std::size_t a : u) {
      for (std::size_t b : u) {
        for (std::size_t x0 : u) {
          for (std::size_t d : u) {
            if (!w.empty()) continue;
            const std::size_t cc = x0;
            bool hyp = false;
            for (std::size_t x : u) {
              const std::size_t z = f.mul(inv(x), a);
              const std::size_t y = f.mul(cc, inv(z));
              if (f.mul(a, x) == f.mul(cc, y) && in(a, cc, y) && in(b, x, z) && in(d, y, z)) {
                hyp = true;
                break;
              }
            }
            if (!hyp) continue;
            bool concl = false;
            for (std::size_t ww : u) {
              const std::size_t t = f.mul(b, inv(ww));
              const std::size_t v = f.mul(cc, inv(ww));
              if (f.mul(b, t) == f.mul(cc, v) && in(b, cc, v) && in(a, t, ww) && in(d, v, ww)) {
                concl = true;
                break;
              }
            }
            if (!concl) w = {a, b, cc, d};
          }
        }
      }
    }
    report.verdict("v.three_transitivity", w.empty(), c, w,
                   "the paired triple-form condition on (a,b,c,d) carries over from (x,y,z) to some (t,v,w)");
  }
  return report;
}

SpecialGroup mf_to_sg(const FiniteMultiring& f) {
  if (!check_smf(f).overall()) throw PreconditionError("S(F): input is not a special multifield");
  std::vector<std::size_t> idx(f.size(), f.size());
  std::vector<std::string> names;
  for (std::size_t a : f.nonzero()) {
    idx[a] = names.size();
    names.push_back(f.name(a));
  }
  const std::size_t n = names.size();
  std::vector<std::size_t> mul(n * n);
  std::vector<Quad> iso;
  for (std::size_t a : f.nonzero()) {
    for (std::size_t b : f.nonzero()) {
      mul[idx[a] * n + idx[b]] = idx[f.mul(a, b)];
      for (std::size_t c : f.nonzero()) {
        for (std::size_t d : f.nonzero()) {
          if (f.mul(a, b) == f.mul(c, d) && f.add(c, d).contains(a)) iso.push_back({idx[a], idx[b], idx[c], idx[d]});
        }
      }
    }
  }
  return SpecialGroup::raw(Carrier(std::move(names)), std::move(mul), idx[f.minus_one()], iso);
}

namespace {

void require_total(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f) {
  if (f.size() != g.size()) throw InputError("map is not total on the source group");
  for (std::size_t v : f.images) {
    if (v >= h.size()) throw InputError("map sends an element outside the target group");
  }
}

}  // namespace

CheckReport check_sg_morphism(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f) {
  require_total(g, h, f);
  CheckReport report;
  const std::size_t n = g.size();
  const Carrier& c = g.carrier();
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (f(g.mul(a, b)) != h.mul(f(a), f(b))) {
          w = {a, b};
          break;
        }
      }
    }
    report.verdict("group_hom", w.empty(), c, w, "f(ab) = f(a)f(b)");
  }
  report.verdict("minus_one", f(g.minus_one()) == h.minus_one(), c, {g.minus_one()}, "f(-1) = -1");
  quad_verdict(report, g, "iso_forward", first_quad(g, [&](auto a, auto b, auto x, auto y) {
                 return !h.iso(f(a), f(b), f(x), f(y));
               }),
               "<a,b> = <c,d> implies <fa,fb> = <fc,fd>");
  std::optional<Quad> back;
  for (std::size_t a = 0; a < n && !back; ++a) {
    for (std::size_t b = 0; b < n && !back; ++b) {
      for (std::size_t x = 0; x < n && !back; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (h.iso(f(a), f(b), f(x), f(y)) && !g.iso(a, b, x, y)) {
            back = Quad{a, b, x, y};
            break;
          }
        }
      }
    }
  }
  Verdict v;
  v.id = "iso_reverse";
  v.detail = "<fa,fb> = <fc,fd> implies <a,b> = <c,d>";
  if (back) {
    v.status = Status::fail;
    v.witness = {(*back)[0], (*back)[1], (*back)[2], (*back)[3]};
    for (std::size_t i : v.witness) v.witness_labels.push_back(c.name(i));
  }
  report.inform(v);
  return report;
}

bool is_sg_morphism(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f) {
  return check_sg_morphism(g, h, f).overall();
}

std::vector<StructureMap> enumerate_sg_morphisms(const SpecialGroup& g, const SpecialGroup& h, std::size_t limit) {
  std::vector<StructureMap> out;
  if (limit == 0) return out;
  const std::size_t n = g.size();
  std::vector<ElementSet> allowed(n, ElementSet::full(h.size()));
  allowed[g.one()] &= ElementSet::singleton(h.one());
  allowed[g.minus_one()] &= ElementSet::singleton(h.minus_one());
  auto consistent = [&](const std::vector<std::size_t>& f, std::size_t k) {
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = 0; b <= k; ++b) {
        const std::size_t p = g.mul(a, b);
        if (std::max({a, b, p}) == k && f[p] != h.mul(f[a], f[b])) return false;
        for (std::size_t x = 0; x <= k; ++x) {
          for (std::size_t y : g.iso_cell(a, b, x)) {
            if (y <= k && std::max({a, b, x, y}) == k && !h.iso(f[a], f[b], f[x], f[y])) return false;
          }
        }
      }
    }
    return true;
  };
  detail::backtrack_maps(n, allowed, false, consistent, [&](const std::vector<std::size_t>& f) {
    out.push_back(StructureMap{f});
    return out.size() < limit;
  });
  return out;
}

StructureMap sg_functor_map(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f) {
  require_total(g, h, f);
  StructureMap m = f;
  m.images.push_back(h.size());
  return m;
}

StructureMap smf_functor_map(const FiniteMultiring& f, const FiniteMultiring& k, const StructureMap& sigma) {
  std::vector<std::size_t> kidx(k.size(), k.size());
  std::size_t i = 0;
  for (std::size_t a : k.nonzero()) kidx[a] = i++;
  StructureMap s;
  for (std::size_t a : f.nonzero()) {
    const std::size_t img = sigma.images.at(a);
    if (img == k.zero()) throw PreconditionError("S(sigma): a nonzero element maps to 0");
    s.images.push_back(kidx[img]);
  }
  return s;
}

CheckReport sg_roundtrip(const SpecialGroup& g) {
  CheckReport report;
  const FiniteMultiring m = sg_to_mf(g);
  const Classification cl = classify(m);
  report.verdict("M(G).multiring", cl.multiring, m.carrier(), {m.zero()}, "M(G) passes the multiring audit");
  report.verdict("M(G).multifield", cl.multifield, m.carrier(), {m.zero()}, "M(G) is a multifield");
  const CheckReport smf = check_smf(m);
  report.verdict("M(G).smf", smf.overall(), m.carrier(), {m.zero()}, "M(G) is a special multifield");
  if (!smf.overall()) return report;
  const SpecialGroup back = mf_to_sg(m);
  report.verdict("S(M(G))=G", back == g, g.carrier(), {g.one()}, "carrier, product, -1 and isometry agree exactly");
  return report;
}

CheckReport smf_roundtrip(const FiniteMultiring& f) {
  CheckReport report;
  const SpecialGroup s = mf_to_sg(f);
  report.verdict("S(F).sg", check_sg(s).overall(), s.carrier(), {s.one()}, "S(F) passes the SG audit");
  const FiniteMultiring back = sg_to_mf(s, f.name(f.zero()));
  report.verdict("M(S(F))=F", same_tables_up_to_order(back, f), f.carrier(), {f.zero()},
                 "sum, product, negation, 0 and 1 agree label for label");
  return report;
}

CheckReport sg_functor_audit(const SpecialGroup& g, const SpecialGroup& h) {
  CheckReport report;
  const FiniteMultiring mg = sg_to_mf(g), mh = sg_to_mf(h);
  const auto homs = enumerate_sg_morphisms(g, h);
  std::set<StructureMap> images;
  std::vector<std::string> bad_morphism, bad_back;
  for (const auto& f : homs) {
    const StructureMap mf = sg_functor_map(g, h, f);
    if (bad_morphism.empty() && !is_morphism(mg, mh, mf)) bad_morphism = {"f=" + std::to_string(images.size())};
    if (bad_back.empty() && smf_functor_map(mg, mh, mf) != f) bad_back = {"f=" + std::to_string(images.size())};
    images.insert(mf);
  }
  auto put = [&](const char* id, const std::vector<std::string>& w, const char* detail) {
    if (w.empty()) {
      report.pass(id, detail);
    } else {
      report.fail_text(id, w, detail);
    }
  };
  put("M(f).morphism", bad_morphism, "M(f) is a multifield morphism");
  put("S(M(f))=f", bad_back, "restricting M(f) recovers f");
  put("faithful", images.size() == homs.size() ? std::vector<std::string>{} : std::vector<std::string>{"collision"},
      "distinct f give distinct M(f)");
  const auto mf_homs = enumerate_morphisms(mg, mh);
  std::vector<std::string> missing;
  for (const auto& sigma : mf_homs) {
    if (!images.count(sigma)) {
      missing = {"sigma not of the form M(f)"};
      break;
    }
  }
  put("full", missing, "every morphism M(G) -> M(H) is some M(f)");
  const std::string counts = std::to_string(homs.size()) + " SG maps, " + std::to_string(mf_homs.size()) + " MF maps";
  put("hom_counts", homs.size() == mf_homs.size() ? std::vector<std::string>{} : std::vector<std::string>{counts},
      counts.c_str());
  return report;
}

SpecialGroup sg_of_prime_field(std::size_t p) {
  if (p < 3 || p > 61 || p % 2 == 0) throw InputError("finite-field SG: odd primes p <= 61 only");
  for (std::size_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) throw InputError("finite-field SG: p must be prime (prime fields only)");
  }
  std::vector<bool> square(p, false);
  for (std::size_t x = 1; x < p; ++x) square[x * x % p] = true;
  auto cls = [&](std::size_t x) -> std::size_t { return square[x] ? 0 : 1; };
  std::size_t nonsquare = 2;
  while (square[nonsquare]) ++nonsquare;
  const std::size_t rep[2] = {1, nonsquare};
  const std::size_t minus_one = cls(p - 1);
  Carrier carrier({"1", minus_one == 1 ? "-1" : "s"});
  std::vector<std::size_t> mul = {0, 1, 1, 0};
  // D(a,b): square classes of nonzero values of a x² + b y².
  auto represented = [&](std::size_t a, std::size_t b) {
    ElementSet out;
    for (std::size_t x = 0; x < p; ++x) {
      for (std::size_t y = 0; y < p; ++y) {
        const std::size_t v = (rep[a] * x * x + rep[b] * y * y) % p;
        if (v != 0) out.insert(cls(v));
      }
    }
    return out;
  };
  std::vector<Quad> iso;
  for (std::size_t a = 0; a < 2; ++a) {
    for (std::size_t b = 0; b < 2; ++b) {
      const ElementSet d = represented(a, b);
      for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t dd = a ^ b ^ c;
        if (d.contains(c)) iso.push_back({a, b, c, dd});
      }
    }
  }
  return SpecialGroup(std::move(carrier), std::move(mul), minus_one, iso);
}

namespace {

Carrier z2_power_carrier(std::size_t k) {
  if (k == 0 || k > 6) throw InputError("Z2^k: 1 <= k <= 6");
  std::vector<std::string> names;
  for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
    std::string letters;
    for (std::size_t i = 1; i < k; ++i) {
      if ((m >> i) & 1U) letters += static_cast<char>('a' + i - 1);
    }
    if (m & 1U) {
      names.push_back(letters.empty() ? "-1" : "-" + letters);
    } else {
      names.push_back(letters.empty() ? "1" : letters);
    }
  }
  return Carrier(std::move(names));
}

std::vector<std::size_t> xor_table(std::size_t n) {
  std::vector<std::size_t> mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) mul[a * n + b] = a ^ b;
  }
  return mul;
}

}  // namespace

SpecialGroup sg_trivial(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  Carrier carrier = z2_power_carrier(k);
  std::vector<Quad> iso;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) iso.push_back({a, b, c, a ^ b ^ c});
    }
  }
  return SpecialGroup(std::move(carrier), xor_table(n), 1, iso);
}

SpecialGroup sg_fan(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  Carrier carrier = z2_power_carrier(k);
  std::vector<Quad> iso;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b || b == (a ^ 1U)) iso.push_back({a, b, c, a ^ b ^ c});
      }
    }
  }
  return SpecialGroup(std::move(carrier), xor_table(n), 1, iso);
}

SpecialGroup psg_closure(const Carrier& carrier, const std::vector<std::size_t>& mul, std::size_t minus_one,
                         const std::vector<Quad>& seeds) {
  SpecialGroup base = SpecialGroup::raw(carrier, mul, minus_one, {});
  const std::size_t n = base.size();
  PairClasses uf(n * n);
  for (const Quad& q : seeds) uf.unite(q[0] * n + q[1], q[2] * n + q[3]);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) uf.unite(a * n + b, b * n + a);
    uf.unite(a * n + base.neg(a), base.one() * n + base.minus_one());
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < n * n; ++p) {
      for (std::size_t q = 0; q < n * n; ++q) {
        if (uf.find(p) != uf.find(q)) continue;
        const std::size_t a = p / n, b = p % n, c = q / n, d = q % n;
        changed |= uf.unite(a * n + base.neg(c), base.neg(b) * n + d);
        for (std::size_t g = 0; g < n; ++g) {
          changed |= uf.unite(base.mul(g, a) * n + base.mul(g, b), base.mul(g, c) * n + base.mul(g, d));
        }
      }
    }
  }
  std::vector<Quad> quads;
  for (std::size_t p = 0; p < n * n; ++p) {
    for (std::size_t q = 0; q < n * n; ++q) {
      if (uf.find(p) == uf.find(q)) quads.push_back({p / n, p % n, q / n, q % n});
    }
  }
  return SpecialGroup::raw(carrier, mul, minus_one, quads);
}

std::vector<SpecialGroup> enumerate_psgs(const Carrier& carrier, const std::vector<std::size_t>& mul,
                                         std::size_t minus_one, std::size_t limit) {
  std::vector<SpecialGroup> out;
  std::set<std::vector<Quad>> seen;
  std::vector<std::vector<Quad>> frontier;
  {
    SpecialGroup least = psg_closure(carrier, mul, minus_one, {});
    seen.insert(least.quadruples());
    frontier.push_back(least.quadruples());
    out.push_back(least);
  }
  while (!frontier.empty() && out.size() < limit) {
    std::vector<Quad> cur = frontier.back();
    frontier.pop_back();
    const SpecialGroup g = SpecialGroup::raw(carrier, mul, minus_one, cur);
    const std::size_t n = g.size();
    for (std::size_t a = 0; a < n && out.size() < limit; ++a) {
      for (std::size_t b = 0; b < n && out.size() < limit; ++b) {
        for (std::size_t c = 0; c < n && out.size() < limit; ++c) {
          const std::size_t d = g.mul(g.mul(a, b), c);  // keeps SG3
          if (g.iso(a, b, c, d)) continue;
          std::vector<Quad> seeds = cur;
          seeds.push_back({a, b, c, d});
          SpecialGroup next = psg_closure(carrier, mul, minus_one, seeds);
          auto key = next.quadruples();
          if (seen.insert(key).second) {
            frontier.push_back(key);
            out.push_back(std::move(next));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace mvalg
