#include "mvalg/real_semigroup.hpp"

#include <functional>

#include "mvalg/error.hpp"
#include "mvalg/search.hpp"
#include "mvalg/spectra.hpp"

namespace mvalg {

RealSemigroup::RealSemigroup(Carrier carrier, std::vector<std::size_t> mul, std::size_t one, std::size_t zero,
                             std::size_t minus_one, std::vector<ElementSet> d)
    : carrier_(std::move(carrier)), mul_(std::move(mul)), one_(one), zero_(zero), minus_one_(minus_one),
      d_(std::move(d)) {
  const std::size_t n = size();
  if (mul_.size() != n * n) throw InputError("product table has the wrong number of cells");
  if (d_.size() != n * n) throw InputError("D table has the wrong number of cells");
  for (std::size_t v : mul_) {
    if (v >= n) throw InputError("product table has an out-of-range entry");
  }
  for (ElementSet c : d_) {
    if (!c.subset_of(ElementSet::full(n))) throw InputError("D table has an out-of-range entry");
  }
  if (one_ >= n || zero_ >= n || minus_one_ >= n) throw InputError("constant index out of range");
}

bool RealSemigroup::in_dt(std::size_t a, std::size_t b, std::size_t c) const {
  return in_d(a, b, c) && in_d(neg(b), neg(a), c) && in_d(neg(c), b, neg(a));
}

ElementSet RealSemigroup::dt_cell(std::size_t b, std::size_t c) const {
  ElementSet out;
  for (std::size_t a : d_cell(b, c)) {
    if (in_dt(a, b, c)) out.insert(a);
  }
  return out;
}

RealSemigroup RealSemigroup::with_d(std::size_t a, std::size_t b, std::size_t c, bool present) const {
  RealSemigroup s = *this;
  ElementSet& cell = s.d_.at(b * size() + c);
  if (present) {
    cell.insert(a);
  } else {
    cell.erase(a);
  }
  return s;
}

namespace {

using Witness = std::vector<std::size_t>;

struct Axiom {
  const char* id;
  const char* detail;
  std::function<Witness(const RealSemigroup&)> scan;
};

const std::vector<Axiom>& ts_axioms() {
  static const std::vector<Axiom> axioms = {
      {"TS1.associativity", "(xy)z = x(yz)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t x = 0; x < s.size(); ++x)
           for (std::size_t y = 0; y < s.size(); ++y)
             for (std::size_t z = 0; z < s.size(); ++z)
               if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) return {x, y, z};
         return {};
       }},
      {"TS1.commutativity", "xy = yx",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t x = 0; x < s.size(); ++x)
           for (std::size_t y = 0; y < s.size(); ++y)
             if (s.mul(x, y) != s.mul(y, x)) return {x, y};
         return {};
       }},
      {"TS1.unit", "1x = x",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t x = 0; x < s.size(); ++x)
           if (s.mul(s.one(), x) != x) return {x};
         return {};
       }},
      {"TS2.cube", "x^3 = x",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t x = 0; x < s.size(); ++x)
           if (s.mul(s.sq(x), x) != x) return {x};
         return {};
       }},
      {"TS3.minus_one", "-1 != 1 and (-1)(-1) = 1",
       [](const RealSemigroup& s) -> Witness {
         if (s.minus_one() == s.one() || s.sq(s.minus_one()) != s.one()) return {s.minus_one()};
         return {};
       }},
      {"TS4.zero", "x0 = 0",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t x = 0; x < s.size(); ++x)
           if (s.mul(x, s.zero()) != s.zero()) return {x};
         return {};
       }},
      {"TS5.self_negative", "x = -x implies x = 0",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t x = 0; x < s.size(); ++x)
           if (x == s.neg(x) && x != s.zero()) return {x};
         return {};
       }},
  };
  return axioms;
}

const std::vector<Axiom>& rs_axioms() {
  static const std::vector<Axiom> axioms = {
      {"RS0", "D(a,b) = D(b,a)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t a = 0; a < s.size(); ++a)
           for (std::size_t b = 0; b < s.size(); ++b)
             if (s.d_cell(a, b) != s.d_cell(b, a)) {
               const std::size_t c = ((s.d_cell(a, b) - s.d_cell(b, a)) | (s.d_cell(b, a) - s.d_cell(a, b))).first();
               return {c, a, b};
             }
         return {};
       }},
      {"RS1", "a in D(a,b)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t a = 0; a < s.size(); ++a)
           for (std::size_t b = 0; b < s.size(); ++b)
             if (!s.in_d(a, a, b)) return {a, b};
         return {};
       }},
      {"RS2", "a in D(b,c) implies ad in D(bd,cd)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t b = 0; b < s.size(); ++b)
           for (std::size_t c = 0; c < s.size(); ++c)
             for (std::size_t a : s.d_cell(b, c))
               for (std::size_t d = 0; d < s.size(); ++d)
                 if (!s.in_d(s.mul(a, d), s.mul(b, d), s.mul(c, d))) return {a, b, c, d};
         return {};
       }},
      {"RS3", "a in Dt(b,c), c in Dt(d,e) imply a in Dt(x,e) for some x in Dt(b,d)",
       [](const RealSemigroup& s) -> Witness {
         const std::size_t n = s.size();
         std::vector<ElementSet> dt(n * n), back(n * n);  // back[a·n+e] = {x : a ∈ Dt(x,e)}
         for (std::size_t b = 0; b < n; ++b)
           for (std::size_t c = 0; c < n; ++c) {
             dt[b * n + c] = s.dt_cell(b, c);
             for (std::size_t a : dt[b * n + c]) back[a * n + c].insert(b);
           }
         // Scan in (a,b,c,d,e) order.
         for (std::size_t a = 0; a < n; ++a)
           for (std::size_t b = 0; b < n; ++b)
             for (std::size_t c = 0; c < n; ++c) {
               if (!dt[b * n + c].contains(a)) continue;
               for (std::size_t d = 0; d < n; ++d)
                 for (std::size_t e = 0; e < n; ++e)
                   if (dt[d * n + e].contains(c) && !dt[b * n + d].intersects(back[a * n + e])) return {a, b, c, d, e};
             }
         return {};
       }},
      {"RS4", "e in D(c^2 a, d^2 b) implies e in D(a,b)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t a = 0; a < s.size(); ++a)
           for (std::size_t b = 0; b < s.size(); ++b)
             for (std::size_t c = 0; c < s.size(); ++c)
               for (std::size_t d = 0; d < s.size(); ++d) {
                 const ElementSet extra = s.d_cell(s.mul(s.sq(c), a), s.mul(s.sq(d), b)) - s.d_cell(a, b);
                 if (!extra.empty()) return {a, b, c, d, extra.first()};
               }
         return {};
       }},
      {"RS5", "ad = bd, ae = be, c in D(d,e) imply ac = bc",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t a = 0; a < s.size(); ++a)
           for (std::size_t b = 0; b < s.size(); ++b)
             for (std::size_t d = 0; d < s.size(); ++d) {
               if (s.mul(a, d) != s.mul(b, d)) continue;
               for (std::size_t e = 0; e < s.size(); ++e) {
                 if (s.mul(a, e) != s.mul(b, e)) continue;
                 for (std::size_t c : s.d_cell(d, e))
                   if (s.mul(a, c) != s.mul(b, c)) return {a, b, c, d, e};
               }
             }
         return {};
       }},
      {"RS6", "c in D(a,b) implies c in Dt(c^2 a, c^2 b)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t a = 0; a < s.size(); ++a)
           for (std::size_t b = 0; b < s.size(); ++b)
             for (std::size_t c : s.d_cell(a, b))
               if (!s.in_dt(c, s.mul(s.sq(c), a), s.mul(s.sq(c), b))) return {c, a, b};
         return {};
       }},
      {"RS7", "Dt(a,-b) and Dt(b,-a) meet only when a = b",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t a = 0; a < s.size(); ++a)
           for (std::size_t b = 0; b < s.size(); ++b)
             if (a != b && s.dt_cell(a, s.neg(b)).intersects(s.dt_cell(b, s.neg(a)))) return {a, b};
         return {};
       }},
      {"RS8", "a in D(b,c) implies a^2 in D(b^2,c^2)",
       [](const RealSemigroup& s) -> Witness {
         for (std::size_t b = 0; b < s.size(); ++b)
           for (std::size_t c = 0; c < s.size(); ++c)
             for (std::size_t a : s.d_cell(b, c))
               if (!s.in_d(s.sq(a), s.sq(b), s.sq(c))) return {a, b, c};
         return {};
       }},
  };
  return axioms;
}

void run(const std::vector<Axiom>& axioms, const RealSemigroup& s, CheckReport& r) {
  for (const Axiom& ax : axioms) {
    const Witness w = ax.scan(s);
    r.verdict(ax.id, w.empty(), s.carrier(), w, ax.detail);
  }
}

}  // namespace

CheckReport check_ts(const RealSemigroup& s) {
  CheckReport r;
  run(ts_axioms(), s, r);
  return r;
}

CheckReport check_rs(const RealSemigroup& s) {
  CheckReport r;
  run(ts_axioms(), s, r);
  run(rs_axioms(), s, r);
  return r;
}

bool is_rs(const RealSemigroup& s) {
  for (const auto* list : {&ts_axioms(), &rs_axioms()}) {
    for (const Axiom& ax : *list) {
      if (!ax.scan(s).empty()) return false;
    }
  }
  return true;
}

CheckReport check_rs_derived(const RealSemigroup& s) {
  CheckReport r;
  static const char* ids[] = {"i",   "ii",  "iii", "iv",    "v",  "vi",  "vii", "viii", "ix",
                              "x",   "xi",  "xii", "xiii",  "xiv", "xv", "xvi", "xvii"};
  if (!check_rs(s).overall()) {
    r.fail_text("precondition.rs", {"check_rs"}, "TS1-TS5 and RS0-RS8 must hold");
    for (const char* id : ids) r.skip(id, "precondition failed");
    return r;
  }
  const std::size_t n = s.size();
  const std::size_t one = s.one(), zero = s.zero();
  auto N = [&](std::size_t x) { return s.neg(x); };
  auto M = [&](std::size_t x, std::size_t y) { return s.mul(x, y); };
  auto Q = [&](std::size_t x) { return s.sq(x); };
  auto put = [&](const char* id, const Witness& w, const char* detail) {
    r.verdict(id, w.empty(), s.carrier(), w, detail);
  };
  auto scan3 = [&](auto&& bad) -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (bad(a, b, c)) return {a, b, c};
    return {};
  };
  auto scan4 = [&](auto&& bad) -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          for (std::size_t d = 0; d < n; ++d)
            if (bad(a, b, c, d)) return {a, b, c, d};
    return {};
  };
  auto scan2 = [&](auto&& bad) -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (bad(a, b)) return {a, b};
    return {};
  };
  auto scan1 = [&](auto&& bad) -> Witness {
    for (std::size_t a = 0; a < n; ++a)
      if (bad(a)) return {a};
    return {};
  };

  put("i", scan3([&](auto a, auto b, auto c) { return s.in_dt(a, b, c) && !s.in_dt(N(b), N(a), c); }),
      "a in Dt(b,c) implies -b in Dt(-a,c)");
  put("ii", scan2([&](auto a, auto b) { return !s.in_d(zero, a, b); }), "0 in D(a,b)");
  put("iii",
      scan4([&](auto a, auto b, auto c, auto d) { return s.in_dt(a, b, c) && !s.in_dt(M(a, d), M(b, d), M(c, d)); }),
      "a in Dt(b,c) implies ad in Dt(bd,cd)");
  put("iv", scan1([&](auto a) { return (s.in_d(a, zero, one) || s.in_d(a, one, one)) && a != Q(a); }),
      "a in D(0,1) or D(1,1) implies a = a^2");
  put("v", scan4([&](auto a, auto b, auto c, auto d) { return s.in_d(d, M(c, a), M(c, b)) && d != M(Q(c), d); }),
      "d in D(ca,cb) implies d = c^2 d");
  {
    Witness w = scan2([&](auto a, auto b) { return !s.in_d(Q(a), one, b); });
    if (w.empty()) w = scan1([&](auto a) { return s.in_d(a, one, one) != (a == Q(a)); });
    put("vi", w, "a^2 in D(1,b), and D(1,1) is the set of idempotents");
  }
  put("vii", scan2([&](auto a, auto b) { return s.in_dt(a, b, b) != (a == b); }), "a in Dt(b,b) iff a = b");
  put("viii", scan1([&](auto a) { return s.in_d(a, zero, zero) != (a == zero); }), "a in D(0,0) iff a = 0");
  put("ix", scan1([&](auto a) { return !s.in_dt(one, one, a); }), "1 in Dt(1,a)");
  put("x", scan1([&](auto a) { return !s.in_dt(a, one, s.minus_one()); }), "Dt(1,-1) = G");
  put("xi", scan2([&](auto a, auto b) { return !s.in_d(M(a, b), one, N(Q(a))); }), "ab in D(1,-a^2)");
  put("xii", scan2([&](auto a, auto b) { return s.in_dt(zero, a, b) != (a == N(b)); }), "0 in Dt(a,b) iff a = -b");
  {
    Witness w;
    for (std::size_t x = 0; x < n && w.empty(); ++x)
      for (std::size_t y = 0; y < n && w.empty(); ++y) {
        const ElementSet dxy = s.d_cell(x, y);
        for (std::size_t b : dxy) {
          for (std::size_t c : dxy) {
            const ElementSet extra = s.d_cell(b, c) - dxy;
            if (w.empty() && !extra.empty()) w = {extra.first(), b, c, x, y};
          }
        }
      }
    put("xiii", w, "a in D(b,c) and b,c in D(x,y) imply a in D(x,y)");
  }
  put("xiv", scan3([&](auto a, auto b, auto c) {
        const bool rhs = s.in_d(M(a, b), one, M(b, c)) && s.in_d(M(a, c), one, M(b, c)) && s.in_d(Q(a), Q(b), Q(c));
        return s.in_d(a, b, c) != rhs;
      }),
      "a in D(b,c) iff ab, ac in D(1,bc) and a^2 in D(b^2,c^2)");
  put("xv", scan2([&](auto a, auto b) { return s.dt_cell(a, b).empty(); }), "Dt(a,b) nonempty");
  {
    Witness w;
    for (std::size_t b = 0; b < n && w.empty(); ++b)
      for (std::size_t c = 0; c < n && w.empty(); ++c)
        for (std::size_t a : s.d_cell(b, c)) {
          if (!w.empty()) break;
          for (std::size_t d = 0; d < n && w.empty(); ++d)
            for (std::size_t e = 0; e < n; ++e) {
              if (!s.in_d(c, d, e)) continue;
              bool found = false;
              for (std::size_t x : s.d_cell(b, d)) found = found || s.in_d(a, x, e);
              if (!found) {
                w = {a, b, c, d, e};
                break;
              }
            }
        }
    put("xvi", w, "a in D(b,c), c in D(d,e) imply a in D(x,e) for some x in D(b,d)");
  }
  put("xvii", scan3([&](auto a, auto b, auto c) { return s.in_d(a, b, c) != s.in_dt(a, M(Q(a), b), M(Q(a), c)); }),
      "a in D(b,c) iff a in Dt(a^2 b, a^2 c)");
  return r;
}

RealSemigroup three_with(std::vector<ElementSet> d) {
  // 0, 1, -1 in Q2's order.
  std::vector<std::size_t> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  return RealSemigroup(Carrier({"0", "1", "-1"}), std::move(mul), 1, 0, 2, std::move(d));
}

RealSemigroup canonical_3() {
  const ElementSet z = ElementSet::singleton(0);
  const ElementSet zp = ElementSet::from_bits(0b011), zm = ElementSet::from_bits(0b101), all = ElementSet::full(3);
  // Rows b = 0, 1, -1; columns c = 0, 1, -1.
  return three_with({z, zp, zm, zp, zp, all, zm, all, zm});
}

UniquenessResult rs_on_three() {
  UniquenessResult out;
  // Unordered cells {b,c}; each must contain b and c, so only the remaining
  // elements are free.
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = b; c < 3; ++c) cells.push_back({b, c});
  std::vector<ElementSet> forced, free_bits;
  for (auto [b, c] : cells) {
    ElementSet f = ElementSet::singleton(b) | ElementSet::singleton(c);
    forced.push_back(f);
    free_bits.push_back(ElementSet::full(3) - f);
  }
  std::vector<ElementSet> choice(cells.size());
  auto go = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      std::vector<ElementSet> d(9);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        d[cells[i].first * 3 + cells[i].second] = choice[i];
        d[cells[i].second * 3 + cells[i].first] = choice[i];
      }
      ++out.candidates;
      RealSemigroup s = three_with(std::move(d));
      if (is_rs(s)) out.survivors.push_back(std::move(s));
      return;
    }
    const std::uint64_t fb = free_bits[k].bits();
    // Every subset of the free bits, in increasing order.
    for (std::uint64_t sub = 0;; sub = (sub - fb) & fb) {
      choice[k] = forced[k] | ElementSet::from_bits(sub);
      self(self, k + 1);
      if (sub == fb) break;
    }
  };
  go(go, 0);
  return out;
}

RealSemigroup rs_product(const std::vector<RealSemigroup>& factors) {
  if (factors.empty()) throw InputError("RS product needs at least one factor");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f.size();
    if (n > kMaxElements) throw InputError("product exceeds the 64-element carrier cap");
  }
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
  std::vector<std::vector<std::size_t>> dig(n);
  for (std::size_t x = 0; x < n; ++x) {
    dig[x] = digits(x);
    std::string label = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) label += ",";
      label += factors[i].name(dig[x][i]);
    }
    names[x] = label + ")";
  }
  std::vector<std::size_t> mul(n * n);
  std::vector<ElementSet> d(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::vector<std::size_t> m(factors.size());
      for (std::size_t i = 0; i < factors.size(); ++i) m[i] = factors[i].mul(dig[x][i], dig[y][i]);
      mul[x * n + y] = encode(m);
      for (std::size_t z = 0; z < n; ++z) {
        bool in = true;
        for (std::size_t i = 0; i < factors.size() && in; ++i) in = factors[i].in_d(dig[z][i], dig[x][i], dig[y][i]);
        if (in) d[x * n + y].insert(z);
      }
    }
  }
  std::vector<std::size_t> one, zero, m1;
  for (const auto& f : factors) {
    one.push_back(f.one());
    zero.push_back(f.zero());
    m1.push_back(f.minus_one());
  }
  return RealSemigroup(Carrier(std::move(names)), std::move(mul), encode(one), encode(zero), encode(m1),
                       std::move(d));
}

namespace {

void require_total(const RealSemigroup& s, const RealSemigroup& t, const StructureMap& f) {
  if (f.size() != s.size()) throw InputError("map is not total on the source");
  for (std::size_t v : f.images) {
    if (v >= t.size()) throw InputError("map sends an element outside the target");
  }
}

}  // namespace

CheckReport check_rs_morphism(const RealSemigroup& s, const RealSemigroup& t, const StructureMap& f) {
  require_total(s, t, f);
  CheckReport r;
  const Carrier& c = s.carrier();
  Witness w;
  for (std::size_t a = 0; a < s.size() && w.empty(); ++a)
    for (std::size_t b = 0; b < s.size(); ++b)
      if (f(s.mul(a, b)) != t.mul(f(a), f(b))) {
        w = {a, b};
        break;
      }
  r.verdict("product", w.empty(), c, w, "f(ab) = f(a)f(b)");
  r.verdict("one", f(s.one()) == t.one(), c, {s.one()}, "f(1) = 1");
  r.verdict("zero", f(s.zero()) == t.zero(), c, {s.zero()}, "f(0) = 0");
  r.verdict("minus_one", f(s.minus_one()) == t.minus_one(), c, {s.minus_one()}, "f(-1) = -1");
  w.clear();
  for (std::size_t b = 0; b < s.size() && w.empty(); ++b)
    for (std::size_t cc = 0; cc < s.size() && w.empty(); ++cc)
      for (std::size_t a : s.d_cell(b, cc))
        if (!t.in_d(f(a), f(b), f(cc))) {
          w = {a, b, cc};
          break;
        }
  r.verdict("representation", w.empty(), c, w, "a in D(b,c) implies f(a) in D(f(b),f(c))");
  return r;
}

bool is_rs_morphism(const RealSemigroup& s, const RealSemigroup& t, const StructureMap& f) {
  return check_rs_morphism(s, t, f).overall();
}

std::vector<StructureMap> enumerate_rs_morphisms(const RealSemigroup& s, const RealSemigroup& t, std::size_t limit) {
  std::vector<StructureMap> out;
  if (limit == 0) return out;
  const std::size_t n = s.size();
  std::vector<ElementSet> allowed(n, ElementSet::full(t.size()));
  allowed[s.one()] &= ElementSet::singleton(t.one());
  allowed[s.zero()] &= ElementSet::singleton(t.zero());
  allowed[s.minus_one()] &= ElementSet::singleton(t.minus_one());
  auto consistent = [&](const std::vector<std::size_t>& f, std::size_t k) {
    for (std::size_t a = 0; a <= k; ++a) {
      for (std::size_t b = 0; b <= k; ++b) {
        const std::size_t p = s.mul(a, b);
        if (p <= k && std::max({a, b, p}) == k && f[p] != t.mul(f[a], f[b])) return false;
        for (std::size_t x : s.d_cell(a, b)) {
          if (x <= k && std::max({a, b, x}) == k && !t.in_d(f[x], f[a], f[b])) return false;
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

std::vector<StructureMap> hom_to_3(const RealSemigroup& s) { return enumerate_rs_morphisms(s, canonical_3()); }

CheckReport separation_audit(const RealSemigroup& s) {
  CheckReport r;
  const RealSemigroup three = canonical_3();
  const auto homs = hom_to_3(s);
  const std::size_t n = s.size();
  Witness wd, wt;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        bool all_d = true, all_t = true;
        for (const auto& h : homs) {
          all_d = all_d && three.in_d(h(a), h(b), h(c));
          all_t = all_t && three.in_dt(h(a), h(b), h(c));
        }
        if (wd.empty() && s.in_d(a, b, c) != all_d) wd = {a, b, c};
        if (wt.empty() && s.in_dt(a, b, c) != all_t) wt = {a, b, c};
      }
  const std::string count = std::to_string(homs.size()) + " morphisms to 3";
  r.verdict("i.representation", wd.empty(), s.carrier(), wd, "a in D(b,c) iff h(a) in D3(h(b),h(c)) for all h; " + count);
  r.verdict("ii.transversal", wt.empty(), s.carrier(), wt, "a in Dt(b,c) iff h(a) in Dt3(h(b),h(c)) for all h");
  Witness ws;
  for (std::size_t a = 0; a < n && ws.empty(); ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      bool sep = false;
      for (const auto& h : homs) sep = sep || h(a) != h(b);
      if (!sep) {
        ws = {a, b};
        break;
      }
    }
  r.verdict("iii.separation", ws.empty(), s.carrier(), ws, "distinct elements are separated by some h");
  return r;
}

FiniteMultiring rs_to_mrred(const RealSemigroup& s) {
  if (!is_rs(s)) throw PreconditionError("M(S): input is not a real semigroup");
  const std::size_t n = s.size();
  std::vector<ElementSet> add(n * n);
  std::vector<std::size_t> mul(s.mul_table().begin(), s.mul_table().end()), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = s.neg(a);
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = s.dt_cell(a, b);
      if (add[a * n + b].empty()) {
        throw StructuralAnomaly("M(S): Dt(" + s.name(a) + "," + s.name(b) + ") is empty in a real semigroup");
      }
    }
  }
  return FiniteMultiring(s.carrier(), std::move(add), std::move(mul), std::move(neg), s.zero(), s.one());
}

RealSemigroup mrred_to_rs(const FiniteMultiring& a) {
  if (!is_real_reduced_mr(a).overall()) throw PreconditionError("S(A): input is not a real reduced multiring");
  const std::size_t n = a.size();
  std::vector<ElementSet> d(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t e = 0; e < n; ++e) {
        const std::size_t e2 = a.mul(e, e);
        if (a.add(a.mul(e2, x), a.mul(e2, y)).contains(e)) d[x * n + y].insert(e);
      }
    }
  }
  std::vector<std::size_t> mul(a.mul_table().begin(), a.mul_table().end());
  return RealSemigroup(a.carrier(), std::move(mul), a.one(), a.zero(), a.minus_one(), std::move(d));
}

CheckReport rs_roundtrip(const RealSemigroup& s) {
  CheckReport r;
  const FiniteMultiring m = rs_to_mrred(s);
  r.verdict("M(S).multiring", check_multiring(m).overall(), m.carrier(), {m.zero()}, "M(S) passes the multiring audit");
  const bool red = is_real_reduced_mr(m).overall();
  r.verdict("M(S).real_reduced", red, m.carrier(), {m.zero()}, "M(S) is real reduced");
  if (!red) return r;
  const RealSemigroup back = mrred_to_rs(m);
  r.verdict("S(M(S))=S", back == s, s.carrier(), {s.zero()}, "product, constants and D agree exactly");
  return r;
}

CheckReport mr_rs_roundtrip(const FiniteMultiring& a) {
  CheckReport r;
  const RealSemigroup s = mrred_to_rs(a);
  const bool rs = is_rs(s);
  r.verdict("S(A).rs", rs, s.carrier(), {s.zero()}, "S(A) passes TS1-TS5 and RS0-RS8");
  Witness w;
  for (std::size_t x = 0; x < a.size() && w.empty(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (s.dt_cell(x, y) != a.add(x, y)) {
        w = {x, y};
        break;
      }
  r.verdict("Dt=+", w.empty(), a.carrier(), w, "the transversal relation of S(A) is the addition of A");
  if (!rs) return r;
  r.verdict("M(S(A))=A", rs_to_mrred(s) == a, a.carrier(), {a.zero()}, "all tables agree exactly");
  return r;
}

CheckReport rs_functor_audit(const RealSemigroup& s, const RealSemigroup& t) {
  CheckReport r;
  const FiniteMultiring ms = rs_to_mrred(s), mt = rs_to_mrred(t);
  const auto rs_homs = enumerate_rs_morphisms(s, t);
  const auto mr_homs = enumerate_morphisms(ms, mt);
  Witness bad;
  for (std::size_t i = 0; i < rs_homs.size() && bad.empty(); ++i) {
    if (!is_morphism(ms, mt, rs_homs[i])) bad = {i};
  }
  if (bad.empty()) {
    r.pass("M(f).morphism", "every RS morphism is a multiring morphism of the images");
  } else {
    r.fail_text("M(f).morphism", {"f=" + std::to_string(bad[0])}, "RS morphism fails as a multiring morphism");
  }
  const std::string counts = std::to_string(rs_homs.size()) + " RS maps, " + std::to_string(mr_homs.size()) + " MR maps";
  if (rs_homs == mr_homs) {
    r.pass("hom_sets_equal", counts);
  } else {
    r.fail_text("hom_sets_equal", {counts}, "Hom_RS(S,T) = Hom_MR(M S, M T)");
  }
  return r;
}

}  // namespace mvalg
