#include "mvalg/spectra.hpp"

#include <algorithm>
#include <set>

#include "mvalg/constructions.hpp"
#include "mvalg/corpus.hpp"
#include "mvalg/error.hpp"

namespace mvalg {

std::vector<ElementSet> enumerate_ideals(const FiniteMultiring& a) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> frontier{ideal_generated(a, ElementSet{})};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    ElementSet j = frontier.back();
    frontier.pop_back();
    for (std::size_t x : a.all() - j) {
      ElementSet k = ideal_generated(a, j | ElementSet::singleton(x));
      if (seen.insert(k).second) frontier.push_back(k);
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_prime_ideal(const FiniteMultiring& a, ElementSet p) {
  if (!is_ideal(a, p) || p.contains(a.one())) return false;
  for (std::size_t x : a.all() - p) {
    for (std::size_t y : a.all() - p) {
      if (p.contains(a.mul(x, y))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> enumerate_primes(const FiniteMultiring& a) {
  std::vector<ElementSet> out;
  for (ElementSet i : enumerate_ideals(a)) {
    if (is_prime_ideal(a, i)) out.push_back(i);
  }
  return out;
}

std::vector<ElementSet> enumerate_maximals(const FiniteMultiring& a) {
  std::vector<ElementSet> proper;
  for (ElementSet i : enumerate_ideals(a)) {
    if (!i.contains(a.one())) proper.push_back(i);
  }
  std::vector<ElementSet> out;
  for (ElementSet m : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(), [&](ElementSet j) { return m != j && m.subset_of(j); });
    if (maximal) out.push_back(m);
  }
  return out;
}

CheckReport check_quotient_characterizations(const FiniteMultiring& a) {
  CheckReport report;
  const auto maximals = enumerate_maximals(a);
  std::vector<std::string> bad_prime, bad_max, bad_imp;
  std::string prime_detail, max_detail;
  for (ElementSet i : enumerate_ideals(a)) {
    const bool prime = is_prime_ideal(a, i);
    const bool maximal = std::find(maximals.begin(), maximals.end(), i) != maximals.end();
    Classification q;
    try {
      q = classify(quotient_by_ideal(a, i).result);
    } catch (const StructuralAnomaly& e) {
      report.fail_text("quotient_well_defined", {a.carrier().render(i)}, e.what());
      continue;
    }
    if (bad_prime.empty() && prime != q.multidomain) {
      bad_prime = {a.carrier().render(i)};
      prime_detail = prime ? "prime but quotient is not a multidomain" : "quotient is a multidomain but not prime";
    }
    if (bad_max.empty() && maximal != q.multifield) {
      bad_max = {a.carrier().render(i)};
      max_detail = maximal ? "maximal but quotient is not a multifield" : "quotient is a multifield but not maximal";
    }
    if (bad_imp.empty() && maximal && !prime) bad_imp = {a.carrier().render(i)};
  }
  auto put = [&](const char* id, const std::vector<std::string>& w, const std::string& ok, const std::string& why) {
    if (w.empty()) {
      report.pass(id, ok);
    } else {
      report.fail_text(id, w, why);
    }
  };
  put("prime_iff_multidomain", bad_prime, "p prime iff A/p multidomain", prime_detail);
  put("maximal_iff_multifield", bad_max, "m maximal iff A/m multifield", max_detail);
  put("maximal_implies_prime", bad_imp, "every maximal ideal is prime", "maximal but not prime");
  return report;
}

SpectrumReport spec_topology(const FiniteMultiring& a) {
  SpectrumReport out;
  out.primes = enumerate_primes(a);
  const std::size_t n = a.size();
  out.basic_opens.assign(n, ElementSet{});
  for (std::size_t k = 0; k < out.primes.size(); ++k) {
    for (std::size_t x : a.all() - out.primes[k]) out.basic_opens[x].insert(k);
  }
  // x_a = 0 iff a ∈ Z. Returns the first violated relation's witness.
  auto violates = [&](ElementSet z) -> std::vector<std::size_t> {
    if (!z.contains(a.zero())) return {a.zero()};
    if (z.contains(a.one())) return {a.one()};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        const bool zx = z.contains(x), zy = z.contains(y);
        if (!zx && !zy && z.contains(a.mul(x, y))) return {x, y};
        if (zx && zy && !a.add(x, y).subset_of(z)) return {x, y};
        if (zx && !z.contains(a.mul(x, y))) return {x, y};
      }
    }
    return {};
  };
  {
    std::vector<std::string> w;
    std::string detail = "each prime's vector satisfies x0=0, x1=1, product, sum and absorption relations";
    for (ElementSet p : out.primes) {
      auto v = violates(p);
      if (!v.empty()) {
        w.push_back(a.carrier().render(p));
        for (std::size_t i : v) w.push_back(a.name(i));
        break;
      }
    }
    if (w.empty()) {
      out.report.pass("relations", detail);
    } else {
      out.report.fail_text("relations", w, detail);
    }
  }
  {
    std::vector<std::string> w;
    for (std::size_t i = 0; i < out.primes.size() && w.empty(); ++i) {
      for (std::size_t j = i + 1; j < out.primes.size(); ++j) {
        bool separated = std::any_of(out.basic_opens.begin(), out.basic_opens.end(), [&](ElementSet d) {
          return d.contains(i) != d.contains(j);
        });
        if (!separated) {
          w = {a.carrier().render(out.primes[i]), a.carrier().render(out.primes[j])};
          break;
        }
      }
    }
    if (w.empty()) {
      out.report.pass("t0_separation", "distinct primes are separated by some D(a)");
    } else {
      out.report.fail_text("t0_separation", w, "distinct primes are separated by some D(a)");
    }
  }
  if (n <= 20) {
    std::vector<std::string> w;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      ElementSet z = ElementSet::from_bits(bits);
      const bool sat = violates(z).empty();
      const bool is_point = std::binary_search(out.primes.begin(), out.primes.end(), z);
      if (sat != is_point) {
        w = {a.carrier().render(z)};
        break;
      }
    }
    if (w.empty()) {
      out.report.pass("closed_image", "vectors satisfying the relations are exactly the primes");
    } else {
      out.report.fail_text("closed_image", w, "vectors satisfying the relations are exactly the primes");
    }
  } else {
    out.report.skip("closed_image", "carrier larger than 20 elements");
  }
  return out;
}

bool is_ordering(const FiniteMultiring& a, ElementSet p) {
  if (!a.add_sets(p, p).subset_of(p)) return false;
  for (std::size_t x : p) {
    if (!a.scale(p, x).subset_of(p)) return false;
  }
  ElementSet negp;
  for (std::size_t x : p) negp.insert(a.neg(x));
  if ((p | negp) != a.all()) return false;
  return is_prime_ideal(a, p & negp);
}

std::vector<ElementSet> enumerate_orderings(const FiniteMultiring& a) {
  const std::size_t n = a.size();
  std::vector<std::size_t> reps;
  {
    ElementSet covered;
    for (std::size_t x = 0; x < n; ++x) {
      if (covered.contains(x)) continue;
      covered.insert(x);
      covered.insert(a.neg(x));
      reps.push_back(x);
    }
  }
  std::vector<ElementSet> out;
  // Partial consistency: closure conditions among decided elements.
  auto consistent = [&](ElementSet p, ElementSet decided) {
    for (std::size_t x : p) {
      for (std::size_t y : p) {
        if (!(a.add(x, y) & decided).subset_of(p)) return false;
        const std::size_t xy = a.mul(x, y);
        if (decided.contains(xy) && !p.contains(xy)) return false;
      }
    }
    return true;
  };
  auto go = [&](auto&& self, std::size_t k, ElementSet p, ElementSet decided) -> void {
    if (!consistent(p, decided)) return;
    if (k == reps.size()) {
      if (is_ordering(a, p)) out.push_back(p);
      return;
    }
    const std::size_t x = reps[k], nx = a.neg(x);
    ElementSet orbit = ElementSet::singleton(x) | ElementSet::singleton(nx);
    self(self, k + 1, p | ElementSet::singleton(x), decided | orbit);
    if (nx != x) {
      self(self, k + 1, p | ElementSet::singleton(nx), decided | orbit);
      self(self, k + 1, p | orbit, decided | orbit);
    }
  };
  go(go, 0, ElementSet{}, ElementSet{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StructureMap> hom_to_q2(const FiniteMultiring& a) { return enumerate_morphisms(a, corpus::q2()); }

ElementSet ordering_of(const FiniteMultiring& a, const StructureMap& sigma) {
  const FiniteMultiring q = corpus::q2();
  ElementSet p;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (sigma(x) == q.zero() || sigma(x) == q.one()) p.insert(x);
  }
  return p;
}

StructureMap sign_map_of(const FiniteMultiring& a, ElementSet p) {
  const FiniteMultiring q = corpus::q2();
  ElementSet negp;
  for (std::size_t x : p) negp.insert(a.neg(x));
  StructureMap s;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (p.contains(x) && negp.contains(x)) {
      s.images.push_back(q.zero());
    } else if (p.contains(x)) {
      s.images.push_back(q.one());
    } else {
      s.images.push_back(q.minus_one());
    }
  }
  return s;
}

CheckReport ordering_hom_bijection(const FiniteMultiring& a) {
  CheckReport report;
  const FiniteMultiring q = corpus::q2();
  const auto homs = hom_to_q2(a);
  const auto ords = enumerate_orderings(a);
  const std::string counts = std::to_string(ords.size()) + " orderings, " + std::to_string(homs.size()) + " morphisms";
  if (ords.size() == homs.size()) {
    report.pass("counts_equal", counts);
  } else {
    report.fail_text("counts_equal", {std::to_string(ords.size()), std::to_string(homs.size())}, counts);
  }
  {
    std::vector<std::string> w;
    for (const auto& s : homs) {
      ElementSet p = ordering_of(a, s);
      if (!std::binary_search(ords.begin(), ords.end(), p) || sign_map_of(a, p) != s) {
        w = {a.carrier().render(p)};
        break;
      }
    }
    if (w.empty()) {
      report.pass("hom_to_ordering", "sigma^-1({0,1}) is an ordering whose sign map is sigma");
    } else {
      report.fail_text("hom_to_ordering", w, "sigma^-1({0,1}) is an ordering whose sign map is sigma");
    }
  }
  {
    std::vector<std::string> w;
    for (ElementSet p : ords) {
      StructureMap s = sign_map_of(a, p);
      if (!is_morphism(a, q, s) || ordering_of(a, s) != p) {
        w = {a.carrier().render(p)};
        break;
      }
    }
    if (w.empty()) {
      report.pass("ordering_to_hom", "the sign map of P is a morphism with preimage P");
    } else {
      report.fail_text("ordering_to_hom", w, "the sign map of P is a morphism with preimage P");
    }
  }
  return report;
}

bool is_preordering(const FiniteMultiring& f, ElementSet t) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (!t.contains(f.mul(x, x))) return false;
  }
  if (!f.add_sets(t, t).subset_of(t)) return false;
  for (std::size_t x : t) {
    if (!f.scale(t, x).subset_of(t)) return false;
  }
  return true;
}

std::vector<ElementSet> enumerate_preorderings(const FiniteMultiring& f) {
  ElementSet squares;
  for (std::size_t x = 0; x < f.size(); ++x) squares.insert(f.mul(x, x));
  const ElementSet free = f.all() - squares;
  std::vector<std::size_t> free_idx(free.begin(), free.end());
  if (free_idx.size() > 24) throw InputError("preordering scan: too many non-square elements");
  std::vector<ElementSet> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << free_idx.size()); ++m) {
    ElementSet t = squares;
    for (std::size_t i = 0; i < free_idx.size(); ++i) {
      if ((m >> i) & 1U) t.insert(free_idx[i]);
    }
    if (is_preordering(f, t)) out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

CheckReport preordering_intersection_check(const FiniteMultiring& f, ElementSet t) {
  CheckReport report;
  if (t.contains(f.minus_one())) {
    report.skip("intersection_of_orderings", "improper preordering (-1 in T)");
    return report;
  }
  if (!is_preordering(f, t)) throw PreconditionError("preordering check: T is not a preordering");
  ElementSet meet = f.all();
  std::size_t count = 0;
  for (ElementSet p : enumerate_orderings(f)) {
    if (t.subset_of(p)) {
      meet &= p;
      ++count;
    }
  }
  const std::string detail = "T = intersection of the " + std::to_string(count) + " orderings containing it";
  if (meet == t) {
    report.pass("intersection_of_orderings", detail);
  } else {
    report.fail_text("intersection_of_orderings", {f.carrier().render(t), f.carrier().render(meet)}, detail);
  }
  return report;
}

ElementSet sums_of_squares(const FiniteMultiring& a) {
  ElementSet x;
  for (std::size_t y = 0; y < a.size(); ++y) x.insert(a.mul(y, y));
  while (true) {
    ElementSet next = x | a.add_sets(x, x);
    for (std::size_t s : x) next |= a.scale(x, s);
    if (next == x) return x;
    x = next;
  }
}

bool is_real(const FiniteMultiring& a) { return !sums_of_squares(a).contains(a.minus_one()); }

namespace {

std::vector<std::size_t> first_non_cube(const FiniteMultiring& a) {
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (a.mul(a.mul(x, x), x) != x) return {x};
  }
  return {};
}

}  // namespace

CheckReport is_real_reduced_mf(const FiniteMultiring& f) {
  CheckReport report;
  const Carrier& c = f.carrier();
  report.verdict("multifield", classify(f).multifield, c, {f.one()}, "F is a multifield");
  auto w = first_non_cube(f);
  report.verdict("cube", w.empty(), c, w, "a^3 = a");
  w.clear();
  for (std::size_t x : f.add(f.one(), f.one())) {
    if (x != f.one()) {
      w = {x};
      break;
    }
  }
  report.verdict("one_plus_one", w.empty(), c, w, "a in 1+1 implies a = 1");
  return report;
}

CheckReport is_real_reduced_mr(const FiniteMultiring& a) {
  CheckReport report;
  const Carrier& c = a.carrier();
  const std::size_t n = a.size();
  report.verdict("i.one_ne_zero", a.one() != a.zero(), c, {a.one()}, "1 != 0");
  auto w = first_non_cube(a);
  report.verdict("ii.cube", w.empty(), c, w, "a^3 = a");
  w.clear();
  for (std::size_t x = 0; x < n && w.empty(); ++x) {
    for (std::size_t y = 0; y < n && w.empty(); ++y) {
      for (std::size_t z : a.add(x, a.mul(x, a.mul(y, y)))) {
        if (z != x) {
          w = {x, y, z};
          break;
        }
      }
    }
  }
  report.verdict("iii.rigidity", w.empty(), c, w, "c in a+ab^2 implies c = a");
  w.clear();
  for (std::size_t x = 0; x < n && w.empty(); ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      ElementSet s = a.add(a.mul(x, x), a.mul(y, y));
      if (s.size() > 1) {
        auto it = s.begin();
        std::size_t first = *it++;
        w = {x, y, first, *it};
        break;
      }
    }
  }
  report.verdict("iv.sum_of_two_squares", w.empty(), c, w, "c,d in a^2+b^2 implies c = d");
  return report;
}

CheckReport check_reduced_characterizations(const FiniteMultiring& f) {
  if (!classify(f).multifield) throw PreconditionError("reduced characterizations: multifield required");
  CheckReport report;
  const bool real = is_real(f);
  bool qa = false;
  try {
    Construction q = q_red(f);
    qa = is_isomorphism(f, q.result, q.map);
  } catch (const PreconditionError&) {
    qa = false;
  }
  const bool qb = sums_of_squares(f) == (ElementSet::singleton(f.zero()) | ElementSet::singleton(f.one()));
  const bool qc = is_real_reduced_mf(f).overall();
  auto info = [&](const char* id, bool value, const char* detail) {
    Verdict v;
    v.id = id;
    v.status = Status::pass;
    v.detail = std::string(detail) + (value ? ": true" : ": false");
    report.inform(v);
  };
  info("a.qred_projection_iso", qa, "F -> Q_red(F) is an isomorphism");
  info("b.sums_of_squares", qb, "sum of squares is {0,1}");
  info("c.element_conditions", qc, "a^3 = a and (a in 1+1 implies a = 1)");
  const bool agree = qa == qb && qb == qc;
  Verdict v;
  v.id = "agreement";
  v.status = agree ? Status::pass : Status::fail;
  v.detail = std::string("(a), (b), (c) agree") + (real ? "" : "; F is not real, so this is informational");
  if (!agree) {
    v.witness_labels = {qa ? "a=true" : "a=false", qb ? "b=true" : "b=false", qc ? "c=true" : "c=false"};
  }
  if (real) {
    report.add(v);
  } else {
    report.inform(v);
  }
  return report;
}

CheckReport sper_embedding_check(const FiniteMultiring& a) {
  const bool reduced = is_real_reduced_mr(a).overall() || is_real_reduced_mf(a).overall();
  if (!reduced) throw PreconditionError("Sper embedding: real reduced input required");
  CheckReport report;
  const FiniteMultiring q = corpus::q2();
  const auto sigmas = hom_to_q2(a);
  const std::size_t n = a.size();
  const Carrier& c = a.carrier();
  if (sigmas.empty()) {
    report.fail_text("sper_nonempty", {"-"}, "a real reduced structure must have orderings");
    return report;
  }
  report.pass("sper_nonempty", std::to_string(sigmas.size()) + " orderings");
  // ĉ ∈ â + b̂ in Q₂^Sper, evaluated pointwise.
  auto in_hat_sum = [&](std::size_t z, std::size_t x, std::size_t y) {
    return std::all_of(sigmas.begin(), sigmas.end(),
                       [&](const StructureMap& s) { return q.add(s(x), s(y)).contains(s(z)); });
  };
  auto same_hat = [&](std::size_t x, std::size_t y) {
    return std::all_of(sigmas.begin(), sigmas.end(), [&](const StructureMap& s) { return s(x) == s(y); });
  };
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (same_hat(x, y)) {
          w = {x, y};
          break;
        }
      }
    }
    report.verdict("injective", w.empty(), c, w, "distinct elements have distinct sign vectors");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n && w.empty(); ++y) {
        for (std::size_t z : a.add(x, y)) {
          if (!in_hat_sum(z, x, y)) {
            w = {x, y, z};
            break;
          }
        }
      }
    }
    // Products, negation and constants hold pointwise because each σ is a
    // morphism; re-check them anyway.
    for (const auto& s : sigmas) {
      if (!w.empty()) break;
      if (!is_morphism(a, q, s)) w = {a.one()};
    }
    report.verdict("morphism", w.empty(), c, w, "the evaluation map is a morphism");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n && w.empty(); ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (in_hat_sum(z, x, y) && !a.add(x, y).contains(z)) {
            w = {x, y, z};
            break;
          }
        }
      }
    }
    report.verdict("strong", w.empty(), c, w, "c-hat in a-hat + b-hat implies c in a+b");
  }
  return report;
}

Construction q_t(const FiniteMultiring& a, ElementSet t) {
  const ElementSet s = t - ElementSet::singleton(a.zero());
  if (!is_multiplicative(a, s)) throw PreconditionError("Q_T: T without 0 is not multiplicative");
  return marshall_quotient(a, s);
}

CheckReport qt_embedding_check(const FiniteMultiring& f, ElementSet t) {
  CheckReport report;
  if (!classify(f).multifield) throw PreconditionError("Q_T embedding: multifield required");
  if (!is_preordering(f, t)) throw PreconditionError("Q_T embedding: T is not a preordering");
  if (t.contains(f.minus_one())) {
    report.skip("qt_embedding", "improper preordering (-1 in T)");
    return report;
  }
  const FiniteMultiring q = corpus::q2();
  std::vector<StructureMap> xt;
  for (const auto& s : hom_to_q2(f)) {
    if (std::all_of(t.begin(), t.end(), [&](std::size_t x) { return s(x) != q.minus_one(); })) xt.push_back(s);
  }
  const Construction qt = q_t(f, t);
  const FiniteMultiring& r = qt.result;
  const Carrier& c = r.carrier();
  const std::size_t n = r.size();
  report.verdict("X_T_nonempty", !xt.empty(), c, {r.one()}, std::to_string(xt.size()) + " orderings contain T");
  // Sign vector of each class, read off any representative; a second
  // representative with a different vector makes the map ill-defined.
  std::vector<std::vector<std::size_t>> hat(n);
  std::vector<std::size_t> w;
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::vector<std::size_t> v;
    for (const auto& s : xt) v.push_back(s(x));
    auto& slot = hat[qt.map(x)];
    if (slot.empty()) {
      slot = std::move(v);
    } else if (slot != v && w.empty()) {
      w = {qt.map(x)};
    }
  }
  report.verdict("well_defined", w.empty(), c, w, "members of one class have the same signs on X_T");
  w.clear();
  for (std::size_t x = 0; x < n && w.empty(); ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (hat[x] == hat[y]) {
        w = {x, y};
        break;
      }
    }
  }
  report.verdict("injective", w.empty(), c, w, "distinct classes have distinct sign vectors");
  auto in_hat_sum = [&](std::size_t z, std::size_t x, std::size_t y) {
    for (std::size_t i = 0; i < xt.size(); ++i) {
      if (!q.add(hat[x][i], hat[y][i]).contains(hat[z][i])) return false;
    }
    return true;
  };
  std::vector<std::size_t> wm, ws;
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const bool in_r = r.add(x, y).contains(z), in_hat = in_hat_sum(z, x, y);
        if (in_r && !in_hat && wm.empty()) wm = {x, y, z};
        if (in_hat && !in_r && ws.empty()) ws = {x, y, z};
      }
    }
  }
  report.verdict("morphism", wm.empty(), c, wm, "c in a+b implies c-hat in a-hat + b-hat");
  report.verdict("strong", ws.empty(), c, ws, "c-hat in a-hat + b-hat implies c in a+b");
  return report;
}

}  // namespace mvalg
