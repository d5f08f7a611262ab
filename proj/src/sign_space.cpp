#include "mvalg/sign_space.hpp"

#include <set>

#include "mvalg/error.hpp"
#include "mvalg/search.hpp"
#include "mvalg/spectra.hpp"

namespace mvalg {

std::string_view to_string(SpaceMode m) { return m == SpaceMode::aos ? "aos" : "ars"; }

SignSpace::SignSpace(SpaceMode mode, Carrier points, Carrier functions, std::vector<SignVector> values)
    : mode_(mode), points_(std::move(points)), functions_(std::move(functions)), values_(std::move(values)) {
  if (values_.size() != functions_.size()) throw InputError("one value row per function is required");
  std::set<SignVector> seen;
  for (std::size_t f = 0; f < values_.size(); ++f) {
    const SignVector& row = values_[f];
    if (row.size() != points_.size()) {
      throw InputError("function '" + functions_.name(f) + "' has " + std::to_string(row.size()) + " values for " +
                       std::to_string(points_.size()) + " points");
    }
    for (int v : row) {
      const bool ok = v == 1 || v == -1 || (v == 0 && mode_ == SpaceMode::ars);
      if (!ok) throw InputError("function '" + functions_.name(f) + "' takes a value outside the sign set");
    }
    if (!seen.insert(row).second) throw InputError("function '" + functions_.name(f) + "' duplicates another");
  }
}

std::optional<std::size_t> SignSpace::find(const SignVector& v) const {
  for (std::size_t f = 0; f < values_.size(); ++f) {
    if (values_[f] == v) return f;
  }
  return std::nullopt;
}

std::optional<std::size_t> SignSpace::product(std::size_t f, std::size_t g) const {
  SignVector v(point_count());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = value(f, x) * value(g, x);
  return find(v);
}

std::optional<std::size_t> SignSpace::constant(int c) const { return find(SignVector(point_count(), c)); }

ElementSet SignSpace::value_set(std::size_t a, std::size_t b) const {
  ElementSet out;
  for (std::size_t c = 0; c < size(); ++c) {
    bool in = true;
    for (std::size_t x = 0; x < point_count() && in; ++x) {
      const int cx = value(c, x);
      if (mode_ == SpaceMode::aos) {
        in = cx == value(a, x) || cx == value(b, x);
      } else {
        in = value(a, x) * cx > 0 || value(b, x) * cx > 0 || cx == 0;
      }
    }
    if (in) out.insert(c);
  }
  return out;
}

ElementSet SignSpace::transversal_value_set(std::size_t a, std::size_t b) const {
  ElementSet out;
  for (std::size_t c = 0; c < size(); ++c) {
    bool in = true;
    for (std::size_t x = 0; x < point_count() && in; ++x) {
      const int cx = value(c, x), ax = value(a, x), bx = value(b, x);
      in = ax * cx > 0 || bx * cx > 0 || (cx == 0 && bx == -ax);
    }
    if (in) out.insert(c);
  }
  return out;
}

namespace {

std::string sign_label(const SignVector& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

std::vector<std::string> numbered(const char* prefix, std::size_t k) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= k; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::string render_map(const Carrier& from, const Carrier& to, const StructureMap& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ", ";
    out += from.name(i) + "->" + to.name(m(i));
  }
  return out;
}

}  // namespace

SignSpace full_space(SpaceMode mode, std::size_t points) {
  if (points == 0 || points > 5) throw InputError("full sign space: 1 to 5 points");
  const std::vector<int> signs = mode == SpaceMode::aos ? std::vector<int>{1, -1} : std::vector<int>{1, 0, -1};
  std::vector<SignVector> rows = {{}};
  for (std::size_t x = 0; x < points; ++x) {
    std::vector<SignVector> next;
    for (const auto& r : rows) {
      for (int v : signs) {
        SignVector e = r;
        e.push_back(v);
        next.push_back(e);
      }
    }
    rows = std::move(next);
  }
  if (rows.size() > kMaxElements) throw InputError("full sign space exceeds the 64-element cap");
  std::vector<std::string> labels;
  for (const auto& r : rows) labels.push_back(sign_label(r));
  return SignSpace(mode, Carrier(numbered("x", points)), Carrier(std::move(labels)), std::move(rows));
}

namespace {

// AX1 in either mode; returns false if G is not closed or lacks −1, so that
// AX2 (which needs negation) must be skipped.
bool check_ax1(const SignSpace& s, CheckReport& r) {
  const bool ars = s.mode() == SpaceMode::ars;
  r.verdict("AX1.nonempty", s.point_count() > 0, s.points(), {}, "X is nonempty");
  std::vector<std::size_t> w;
  for (std::size_t f = 0; f < s.size() && w.empty(); ++f) {
    for (std::size_t g = 0; g < s.size(); ++g) {
      if (!s.product(f, g)) {
        w = {f, g};
        break;
      }
    }
  }
  const bool closed = w.empty() && s.constant(1).has_value();
  if (!w.empty()) {
    r.fail(ars ? "AX1.submonoid" : "AX1.subgroup", s.functions(), w, "G is closed under pointwise products");
  } else if (!s.constant(1)) {
    r.fail_text(ars ? "AX1.submonoid" : "AX1.subgroup", {"1"}, "G contains the constant 1");
  } else {
    r.pass(ars ? "AX1.submonoid" : "AX1.subgroup", "closed under products, contains 1");
  }
  r.verdict("AX1.minus_one", s.constant(-1).has_value(), s.functions(), {}, "G contains the constant -1");
  if (ars) r.verdict("AX1.zero", s.constant(0).has_value(), s.functions(), {}, "G contains the constant 0");
  w.clear();
  for (std::size_t x = 0; x < s.point_count() && w.empty(); ++x) {
    for (std::size_t y = x + 1; y < s.point_count(); ++y) {
      bool sep = false;
      for (std::size_t f = 0; f < s.size() && !sep; ++f) sep = s.value(f, x) != s.value(f, y);
      if (!sep) {
        w = {x, y};
        break;
      }
    }
  }
  if (w.empty()) {
    r.pass("AX1.separation", "G separates points");
  } else {
    r.fail("AX1.separation", s.points(), w, "G separates points");
  }
  return closed && s.constant(-1).has_value() && (!ars || s.constant(0).has_value()) && s.point_count() > 0;
}

std::string render_subset(const SignSpace& s, ElementSet p) { return "P=" + s.functions().render(p); }

// Associativity: ⋃_{q∈V(b,c)} V(a,q) ⊆ ⋃_{r∈V(a,b)} V(r,c), V the given value set.
template <class V>
std::vector<std::size_t> associativity_witness(const SignSpace& s, V&& vs) {
  const std::size_t n = s.size();
  std::vector<ElementSet> cell(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cell[a * n + b] = vs(a, b);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        ElementSet lhs, rhs;
        for (std::size_t q : cell[b * n + c]) lhs |= cell[a * n + q];
        for (std::size_t r : cell[a * n + b]) rhs |= cell[r * n + c];
        if (!lhs.subset_of(rhs)) return {a, b, c, (lhs - rhs).first()};
      }
  return {};
}

}  // namespace

CheckReport check_aos(const SignSpace& s) {
  if (s.mode() != SpaceMode::aos) throw InputError("check_aos: space is in ARS mode");
  CheckReport r;
  const bool ax1 = check_ax1(s, r);
  const std::size_t n = s.size();
  if (!ax1) {
    r.skip("AX2", "AX1 fails; characters are not defined");
  } else {
    const std::size_t m1 = *s.constant(-1);
    std::vector<ElementSet> allowed(n, ElementSet::full(2));  // 0 ↦ +1, 1 ↦ −1
    allowed[*s.constant(1)] = ElementSet::singleton(0);
    allowed[m1] = ElementSet::singleton(1);
    std::vector<std::vector<std::size_t>> prod(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) prod[a][b] = *s.product(a, b);
    std::size_t characters = 0;
    std::vector<std::string> bad;
    auto consistent = [&](const std::vector<std::size_t>& chi, std::size_t k) {
      for (std::size_t a = 0; a <= k; ++a)
        for (std::size_t b = 0; b <= k; ++b) {
          const std::size_t p = prod[a][b];
          if (p <= k && std::max({a, b, p}) == k && chi[p] != (chi[a] ^ chi[b])) return false;
        }
      return true;
    };
    detail::backtrack_maps(n, allowed, false, consistent, [&](const std::vector<std::size_t>& chi) {
      ElementSet ker;
      for (std::size_t a = 0; a < n; ++a)
        if (chi[a] == 0) ker.insert(a);
      for (std::size_t a : ker)
        for (std::size_t b : ker)
          if (!s.value_set(a, b).subset_of(ker)) return true;
      ++characters;
      for (std::size_t x = 0; x < s.point_count(); ++x) {
        bool match = true;
        for (std::size_t a = 0; a < n && match; ++a) match = (s.value(a, x) == 1) == (chi[a] == 0);
        if (match) return true;
      }
      bad = {"ker=" + s.functions().render(ker)};
      return false;
    });
    if (bad.empty()) {
      r.pass("AX2", std::to_string(characters) + " admissible characters, all point evaluations");
    } else {
      r.fail_text("AX2", bad, "an admissible character is not a point evaluation");
    }
  }
  r.verdict("AX3", associativity_witness(s, [&](auto a, auto b) { return s.value_set(a, b); }).empty(),
            s.functions(), associativity_witness(s, [&](auto a, auto b) { return s.value_set(a, b); }),
            "t in D(a,r), r in D(b,c) give t in D(s,c) for some s in D(a,b)");
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        for (std::size_t c = 0; c < n; ++c) {
          ElementSet left, right;
          for (std::size_t g : s.value_set(a, b)) left |= s.value_set(c, g);
          for (std::size_t h : s.value_set(b, c)) right |= s.value_set(h, a);
          if (left != right) {
            w = {a, b, c};
            break;
          }
        }
    Verdict v;
    v.id = "value_set_associativity";
    v.detail = "union of D(c,g), g in D(a,b) = union of D(h,a), h in D(b,c)";
    if (!w.empty()) {
      v.status = Status::fail;
      v.witness = w;
      for (std::size_t i : w) v.witness_labels.push_back(s.functions().name(i));
    }
    r.inform(v);
  }
  return r;
}

CheckReport check_ars(const SignSpace& s) {
  if (s.mode() != SpaceMode::ars) throw InputError("check_ars: space is in AOS mode");
  CheckReport r;
  const bool ax1 = check_ax1(s, r);
  const std::size_t n = s.size();
  if (!ax1) {
    r.skip("AX2", "AX1 fails; cones are not defined");
  } else {
    const std::size_t one = *s.constant(1), m1 = *s.constant(-1);
    std::vector<std::size_t> neg(n);
    std::vector<std::vector<std::size_t>> prod(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
      neg[a] = *s.product(m1, a);
      for (std::size_t b = 0; b < n; ++b) prod[a][b] = *s.product(a, b);
    }
    std::vector<ElementSet> vs(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) vs[a * n + b] = s.value_set(a, b);
    // Orbits {a, −a}; each contributes a, −a or both to P.
    std::vector<std::size_t> reps;
    for (std::size_t a = 0; a < n; ++a)
      if (a <= neg[a]) reps.push_back(a);
    std::size_t cones = 0;
    std::vector<std::string> bad;
    ElementSet decided, p;
    auto closed_so_far = [&]() {
      for (std::size_t a : p)
        for (std::size_t b : p)
          if (decided.contains(prod[a][b]) && !p.contains(prod[a][b])) return false;
      return true;
    };
    auto leaf = [&]() {
      const ElementSet supp = [&] {
        ElementSet out;
        for (std::size_t a : p)
          if (p.contains(neg[a])) out.insert(a);
        return out;
      }();
      for (std::size_t a : p)
        for (std::size_t b : p)
          if (!vs[a * n + b].subset_of(p)) return true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (supp.contains(prod[a][b]) && !supp.contains(a) && !supp.contains(b)) return true;
      ++cones;
      for (std::size_t x = 0; x < s.point_count(); ++x) {
        ElementSet px;
        for (std::size_t a = 0; a < n; ++a)
          if (s.value(a, x) >= 0) px.insert(a);
        if (px == p) return true;
      }
      bad = {render_subset(s, p)};
      return false;
    };
    bool stop = false;
    auto go = [&](auto&& self, std::size_t k) -> void {
      if (stop) return;
      if (k == reps.size()) {
        if (!leaf()) stop = true;
        return;
      }
      const std::size_t a = reps[k], na = neg[a];
      std::vector<ElementSet> options;
      if (a == na) {
        options = {ElementSet::singleton(a)};
      } else {
        options = {ElementSet::singleton(a), ElementSet::singleton(na),
                   ElementSet::singleton(a) | ElementSet::singleton(na)};
      }
      for (ElementSet opt : options) {
        if (opt.contains(m1)) continue;  // −1 ∉ P, hence 1 ∈ P
        const ElementSet saved_p = p, saved_d = decided;
        p |= opt;
        decided.insert(a);
        decided.insert(na);
        if (p.contains(one) || !decided.contains(one)) {
          if (closed_so_far()) self(self, k + 1);
        }
        p = saved_p;
        decided = saved_d;
        if (stop) return;
      }
    };
    go(go, 0);
    if (bad.empty()) {
      r.pass("AX2", std::to_string(cones) + " admissible cones, all of the form {a : a(x) >= 0}");
    } else {
      r.fail_text("AX2", bad, "an admissible cone is not {a : a(x) >= 0} for any point");
    }
  }
  const auto w = associativity_witness(s, [&](auto a, auto b) { return s.transversal_value_set(a, b); });
  r.verdict("AX3", w.empty(), s.functions(), w, "p in Dt(a,q), q in Dt(b,c) give p in Dt(r,c) for some r in Dt(a,b)");
  {
    std::vector<std::size_t> wb;
    for (std::size_t a = 0; a < n && wb.empty(); ++a)
      for (std::size_t b = 0; b < n && wb.empty(); ++b) {
        if (!s.transversal_value_set(a, b).subset_of(s.value_set(a, b))) {
          wb = {a, b};
          break;
        }
        for (std::size_t c : s.value_set(a, b)) {
          const std::size_t c2 = *s.product(c, c);
          if (!s.transversal_value_set(*s.product(a, c2), *s.product(b, c2)).contains(c)) {
            wb = {a, b, c};
            break;
          }
        }
      }
    if (ax1) {
      r.verdict("value_set_bridges", wb.empty(), s.functions(), wb,
                "Dt(a,b) within D(a,b); c in D(a,b) gives c in Dt(ac^2,bc^2)");
    } else {
      r.skip("value_set_bridges", "AX1 fails");
    }
  }
  return r;
}

CheckReport check_space(const SignSpace& s) { return s.mode() == SpaceMode::aos ? check_aos(s) : check_ars(s); }

FiniteMultiring aos_to_mfred(const SignSpace& s, const std::string& zero_label) {
  if (!check_aos(s).overall()) throw PreconditionError("M(G): input is not an abstract ordering space");
  const std::size_t n = s.size(), z = n, m = n + 1;
  if (m > kMaxElements) throw InputError("M(G) would exceed the 64-element carrier cap");
  std::vector<std::string> names = s.functions().names();
  names.push_back(zero_label);
  const std::size_t m1 = *s.constant(-1);
  std::vector<ElementSet> add(m * m);
  std::vector<std::size_t> mul(m * m), neg(m);
  for (std::size_t a = 0; a < m; ++a) {
    neg[a] = a == z ? z : *s.product(m1, a);
    for (std::size_t b = 0; b < m; ++b) {
      mul[a * m + b] = (a == z || b == z) ? z : *s.product(a, b);
      if (a == z) {
        add[a * m + b] = ElementSet::singleton(b);
      } else if (b == z) {
        add[a * m + b] = ElementSet::singleton(a);
      } else if (a == *s.product(m1, b)) {
        add[a * m + b] = ElementSet::full(m);
      } else {
        add[a * m + b] = s.value_set(a, b);
      }
    }
  }
  return FiniteMultiring(Carrier(std::move(names)), std::move(add), std::move(mul), std::move(neg), z, *s.constant(1));
}

namespace {

// Characters x of F• (as ±1 per element, 0 at zero) with x(−1) = −1 whose
// kernel is closed under sums.
std::vector<SignVector> admissible_characters(const FiniteMultiring& f) {
  std::vector<std::size_t> units(f.nonzero().begin(), f.nonzero().end());
  const std::size_t k = units.size();
  std::vector<std::size_t> pos(f.size(), k);
  for (std::size_t i = 0; i < k; ++i) pos[units[i]] = i;
  std::vector<ElementSet> allowed(k, ElementSet::full(2));
  allowed[pos[f.one()]] = ElementSet::singleton(0);
  allowed[pos[f.minus_one()]] &= ElementSet::singleton(1);
  auto consistent = [&](const std::vector<std::size_t>& chi, std::size_t j) {
    for (std::size_t a = 0; a <= j; ++a)
      for (std::size_t b = 0; b <= j; ++b) {
        const std::size_t p = pos[f.mul(units[a], units[b])];
        if (p <= j && std::max({a, b, p}) == j && chi[p] != (chi[a] ^ chi[b])) return false;
      }
    return true;
  };
  std::vector<SignVector> out;
  detail::backtrack_maps(k, allowed, false, consistent, [&](const std::vector<std::size_t>& chi) {
    for (std::size_t a = 0; a < k; ++a) {
      if (chi[a]) continue;
      for (std::size_t b = 0; b < k; ++b) {
        if (chi[b]) continue;
        for (std::size_t c : f.add(units[a], units[b]) - ElementSet::singleton(f.zero()))
          if (chi[pos[c]]) return true;
      }
    }
    SignVector x(f.size(), 0);
    for (std::size_t a = 0; a < k; ++a) x[units[a]] = chi[a] ? -1 : 1;
    out.push_back(x);
    return true;
  });
  return out;
}

}  // namespace

SignSpace mfred_to_aos(const FiniteMultiring& f) {
  if (!is_real_reduced_mf(f).overall()) throw PreconditionError("Spec(F): input is not a real reduced multifield");
  const auto chars = admissible_characters(f);
  std::vector<std::string> labels;
  std::vector<SignVector> rows;
  for (std::size_t a : f.nonzero()) {
    SignVector row;
    for (const auto& x : chars) row.push_back(x[a]);
    labels.push_back(f.name(a));
    rows.push_back(row);
  }
  std::set<SignVector> distinct(rows.begin(), rows.end());
  if (distinct.size() != rows.size()) throw StructuralAnomaly("Spec(F): evaluation is not injective on F*");
  return SignSpace(SpaceMode::aos, Carrier(numbered("x", chars.size())), Carrier(std::move(labels)), std::move(rows));
}

CheckReport aos_bijection_audit(const FiniteMultiring& f) {
  CheckReport r;
  const auto chars = admissible_characters(f);
  const auto sper = hom_to_q2(f);
  // x ↦ x' with x'(0) = 0, as a map into Q₂ = ("0","1","-1").
  std::set<StructureMap> images;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < chars.size(); ++i) {
    StructureMap xp;
    for (int v : chars[i]) xp.images.push_back(v == 0 ? 0 : v == 1 ? 1 : 2);
    if (bad.empty() && std::find(sper.begin(), sper.end(), xp) == sper.end()) bad = {"x" + std::to_string(i + 1)};
    images.insert(xp);
  }
  if (bad.empty()) {
    r.pass("X_to_Sper", "every point extends to a morphism into Q2");
  } else {
    r.fail_text("X_to_Sper", bad, "point does not extend to a morphism into Q2");
  }
  const std::string counts = std::to_string(chars.size()) + " points, " + std::to_string(sper.size()) + " orderings";
  if (images.size() == chars.size() && chars.size() == sper.size()) {
    r.pass("X_Sper_bijective", counts);
  } else {
    r.fail_text("X_Sper_bijective", {counts}, "X and Sper(F) correspond bijectively");
  }
  std::set<SignVector> evals;
  for (std::size_t a : f.nonzero()) {
    SignVector row;
    for (const auto& x : chars) row.push_back(x[a]);
    evals.insert(row);
  }
  const std::string gcount = std::to_string(evals.size()) + " functions, " + std::to_string(f.nonzero().size()) +
                             " nonzero elements";
  if (evals.size() == f.nonzero().size()) {
    r.pass("G_F_bijective", gcount);
  } else {
    r.fail_text("G_F_bijective", {gcount}, "G and F* correspond bijectively");
  }
  return r;
}

FiniteMultiring ars_to_mrred(const SignSpace& s) {
  if (!check_ars(s).overall()) throw PreconditionError("M(G): input is not an abstract real spectrum");
  const std::size_t n = s.size();
  const std::size_t m1 = *s.constant(-1);
  std::vector<ElementSet> add(n * n);
  std::vector<std::size_t> mul(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = *s.product(m1, a);
    for (std::size_t b = 0; b < n; ++b) {
      mul[a * n + b] = *s.product(a, b);
      add[a * n + b] = s.transversal_value_set(a, b);
      if (add[a * n + b].empty()) {
        throw StructuralAnomaly("M(G): Dt(" + s.functions().name(a) + "," + s.functions().name(b) + ") is empty");
      }
    }
  }
  return FiniteMultiring(s.functions(), std::move(add), std::move(mul), std::move(neg), *s.constant(0),
                         *s.constant(1));
}

SignSpace mrred_to_ars(const FiniteMultiring& a) {
  if (!is_real_reduced_mr(a).overall()) throw PreconditionError("Spec(A): input is not a real reduced multiring");
  const auto sper = hom_to_q2(a);
  static constexpr int sign_of_q2[3] = {0, 1, -1};
  std::vector<SignVector> rows;
  for (std::size_t e = 0; e < a.size(); ++e) {
    SignVector row;
    for (const auto& sigma : sper) row.push_back(sign_of_q2[sigma(e)]);
    rows.push_back(row);
  }
  std::set<SignVector> distinct(rows.begin(), rows.end());
  if (distinct.size() != rows.size()) throw StructuralAnomaly("Spec(A): evaluation is not injective");
  return SignSpace(SpaceMode::ars, Carrier(numbered("x", sper.size())), a.carrier(), std::move(rows));
}

CheckReport ars_sum_audit(const FiniteMultiring& a) {
  CheckReport r;
  const SignSpace s = mrred_to_ars(a);
  std::vector<std::size_t> w;
  for (std::size_t x = 0; x < a.size() && w.empty(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (s.transversal_value_set(x, y) != a.add(x, y)) {
        w = {x, y};
        break;
      }
  r.verdict("Dt=+", w.empty(), a.carrier(), w, "Dt(a^,b^) = {d^ : d in a+b}");
  return r;
}

namespace {

std::optional<std::size_t> compose_point(const SignSpace& s, const SignSpace& t, std::size_t h,
                                         const StructureMap& alpha) {
  SignVector v(s.point_count());
  for (std::size_t x = 0; x < v.size(); ++x) v[x] = t.value(h, alpha(x));
  return s.find(v);
}

void require_point_map(const SignSpace& s, const SignSpace& t, const StructureMap& alpha) {
  if (alpha.size() != s.point_count()) throw InputError("point map is not total on the source");
  for (std::size_t y : alpha.images) {
    if (y >= t.point_count()) throw InputError("point map leaves the target");
  }
}

}  // namespace

CheckReport check_space_morphism(const SignSpace& s, const SignSpace& t, const StructureMap& alpha) {
  require_point_map(s, t, alpha);
  CheckReport r;
  std::vector<std::size_t> w;
  for (std::size_t h = 0; h < t.size(); ++h) {
    if (!compose_point(s, t, h, alpha)) {
      w = {h};
      break;
    }
  }
  if (w.empty()) {
    r.pass("pullback", "h o alpha lies in G for every h in H");
  } else {
    r.fail("pullback", t.functions(), w, "h o alpha lies in G for every h in H");
  }
  Verdict v;
  v.id = "surjective";
  v.detail = "alpha is onto Y";
  ElementSet hit;
  for (std::size_t y : alpha.images) hit.insert(y);
  if (hit.size() != t.point_count()) {
    v.status = Status::fail;
    v.witness = {(ElementSet::full(t.point_count()) - hit).first()};
    v.witness_labels = {t.points().name(v.witness[0])};
  }
  r.inform(v);
  return r;
}

bool is_space_morphism(const SignSpace& s, const SignSpace& t, const StructureMap& alpha) {
  return check_space_morphism(s, t, alpha).overall();
}

std::vector<StructureMap> enumerate_space_morphisms(const SignSpace& s, const SignSpace& t) {
  double total = 1;
  for (std::size_t i = 0; i < s.point_count(); ++i) total *= static_cast<double>(t.point_count());
  if (total > 1e6) throw InputError("too many point maps to enumerate");
  std::vector<StructureMap> out;
  std::vector<ElementSet> allowed(s.point_count(), ElementSet::full(t.point_count()));
  detail::backtrack_maps(
      s.point_count(), allowed, false, [](const auto&, std::size_t) { return true; },
      [&](const std::vector<std::size_t>& f) {
        StructureMap alpha{f};
        if (is_space_morphism(s, t, alpha)) out.push_back(alpha);
        return true;
      });
  return out;
}

StructureMap pullback(const SignSpace& s, const SignSpace& t, const StructureMap& alpha) {
  require_point_map(s, t, alpha);
  StructureMap p;
  for (std::size_t h = 0; h < t.size(); ++h) {
    auto g = compose_point(s, t, h, alpha);
    if (!g) throw PreconditionError("pullback: '" + t.functions().name(h) + "' o alpha is not in G");
    p.images.push_back(*g);
  }
  return p;
}

StructureMap space_functor_map(const SignSpace& s, const SignSpace& t, const StructureMap& alpha) {
  StructureMap p = pullback(s, t, alpha);
  if (s.mode() == SpaceMode::aos) p.images.push_back(s.size());
  return p;
}

std::optional<StructureMap> find_space_isomorphism(const SignSpace& s, const SignSpace& t) {
  if (s.mode() != t.mode() || s.point_count() != t.point_count() || s.size() != t.size()) return std::nullopt;
  // A point's signature: how many functions take each sign there.
  auto signature = [](const SignSpace& sp, std::size_t x) {
    std::array<std::size_t, 3> c{};
    for (std::size_t f = 0; f < sp.size(); ++f) ++c[static_cast<std::size_t>(sp.value(f, x) + 1)];
    return c;
  };
  std::vector<ElementSet> allowed(s.point_count());
  for (std::size_t x = 0; x < s.point_count(); ++x)
    for (std::size_t y = 0; y < t.point_count(); ++y)
      if (signature(s, x) == signature(t, y)) allowed[x].insert(y);
  std::optional<StructureMap> found;
  detail::backtrack_maps(
      s.point_count(), allowed, true, [](const auto&, std::size_t) { return true; },
      [&](const std::vector<std::size_t>& f) {
        StructureMap alpha{f};
        for (std::size_t h = 0; h < t.size(); ++h)
          if (!compose_point(s, t, h, alpha)) return true;
        found = alpha;
        return false;
      });
  return found;
}

namespace {

FiniteMultiring space_to_structure(const SignSpace& s, const std::string& zero_label = "0") {
  return s.mode() == SpaceMode::aos ? aos_to_mfred(s, zero_label) : ars_to_mrred(s);
}

void space_side(const SignSpace& s, CheckReport& r) {
  const CheckReport audit = check_space(s);
  r.verdict("S.audit", audit.overall(), s.functions(), {}, "input passes its axiom audit");
  if (!audit.overall()) return;
  const bool aos = s.mode() == SpaceMode::aos;
  const FiniteMultiring m = space_to_structure(s);
  const CheckReport red = aos ? is_real_reduced_mf(m) : is_real_reduced_mr(m);
  r.verdict("M(S).multiring", check_multiring(m).overall(), m.carrier(), {}, "M(S) passes the multiring audit");
  r.verdict("M(S).real_reduced", red.overall(), m.carrier(), {}, "M(S) is real reduced");
  if (!red.overall()) return;
  const SignSpace back = aos ? mfred_to_aos(m) : mrred_to_ars(m);
  r.verdict("Spec(M(S)).audit", check_space(back).overall(), back.functions(), {}, "the rebuilt space passes its audit");
  r.verdict("|X|=|Sper|", back.point_count() == enumerate_orderings(m).size(), back.points(), {},
            std::to_string(back.point_count()) + " points");
  const auto iso = find_space_isomorphism(s, back);
  if (iso) {
    r.pass("Spec(M(S))~S", "alpha: " + render_map(s.points(), back.points(), *iso));
  } else {
    r.fail_text("Spec(M(S))~S", {"no point bijection matches the function sets"}, "round trip closes up to isomorphism");
  }
}

void structure_side(const FiniteMultiring& f, SpaceMode mode, CheckReport& r) {
  const bool aos = mode == SpaceMode::aos;
  const SignSpace s = aos ? mfred_to_aos(f) : mrred_to_ars(f);
  r.verdict("Spec(F).audit", check_space(s).overall(), s.functions(), {}, "the space passes its audit");
  r.verdict("|X|=|Sper|", s.point_count() == enumerate_orderings(f).size(), s.points(), {},
            std::to_string(s.point_count()) + " points");
  if (aos) {
    r.merge(aos_bijection_audit(f), "bijection.");
  } else {
    r.merge(ars_sum_audit(f), "sum.");
  }
  if (!check_space(s).overall()) return;
  const FiniteMultiring back = space_to_structure(s, f.name(f.zero()));
  const auto iso = find_isomorphism(back, f);
  if (iso) {
    r.pass("M(Spec(F))~F", "phi: " + render_map(back.carrier(), f.carrier(), *iso));
  } else {
    r.fail_text("M(Spec(F))~F", {"no isomorphism"}, "round trip closes up to isomorphism");
  }
}

}  // namespace

CheckReport aos_roundtrip(const SignSpace& s) {
  if (s.mode() != SpaceMode::aos) throw InputError("aos_roundtrip: ARS-mode space");
  CheckReport r;
  space_side(s, r);
  return r;
}

CheckReport ars_roundtrip(const SignSpace& s) {
  if (s.mode() != SpaceMode::ars) throw InputError("ars_roundtrip: AOS-mode space");
  CheckReport r;
  space_side(s, r);
  return r;
}

CheckReport mf_aos_roundtrip(const FiniteMultiring& f) {
  CheckReport r;
  structure_side(f, SpaceMode::aos, r);
  return r;
}

CheckReport mr_ars_roundtrip(const FiniteMultiring& a) {
  CheckReport r;
  structure_side(a, SpaceMode::ars, r);
  return r;
}

CheckReport space_functor_audit(const SignSpace& s, const SignSpace& t) {
  if (s.mode() != t.mode()) throw InputError("space_functor_audit: modes differ");
  CheckReport r;
  const FiniteMultiring ms = space_to_structure(s), mt = space_to_structure(t);
  const auto alphas = enumerate_space_morphisms(s, t);
  std::set<StructureMap> images;
  std::vector<std::string> bad;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    const StructureMap m = space_functor_map(s, t, alphas[i]);
    if (bad.empty() && !is_morphism(mt, ms, m)) bad = {"alpha=" + render_map(s.points(), t.points(), alphas[i])};
    images.insert(m);
  }
  if (bad.empty()) {
    r.pass("M(alpha).morphism", "every induced map M(T) -> M(S) is a morphism");
  } else {
    r.fail_text("M(alpha).morphism", bad, "induced map is a morphism");
  }
  r.verdict("faithful", images.size() == alphas.size(), s.points(), {}, "distinct alpha give distinct M(alpha)");
  const auto homs = enumerate_morphisms(mt, ms);
  const std::string counts = std::to_string(alphas.size()) + " space maps, " + std::to_string(homs.size()) + " maps M(T)->M(S)";
  bool full = homs.size() == images.size();
  for (const auto& h : homs) full = full && images.count(h);
  if (full) {
    r.pass("hom_counts", counts);
  } else {
    r.fail_text("hom_counts", {counts}, "every morphism M(T) -> M(S) is induced by a point map");
  }
  if (s == t) {
    StructureMap id = identity_map(s.point_count());
    r.verdict("identity", space_functor_map(s, s, id) == identity_map(ms.size()), s.points(), {},
              "M(id) = id");
  }
  return r;
}

}  // namespace mvalg
