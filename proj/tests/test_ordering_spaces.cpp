#include <doctest.h>

#include <set>

#include "mvalg/corpus.hpp"
#include "mvalg/error.hpp"
#include "mvalg/sign_space.hpp"
#include "mvalg/spectra.hpp"
#include "support.hpp"

using namespace mvalg;
using namespace testsupport;

namespace {

std::string label_of(const SignVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

SignSpace space_of(SpaceMode mode, std::size_t points, const std::vector<SignVector>& fs) {
  std::vector<std::string> pts, names;
  for (std::size_t x = 0; x < points; ++x) pts.push_back("x" + std::to_string(x + 1));
  for (const auto& f : fs) names.push_back(label_of(f));
  return SignSpace(mode, Carrier(pts), Carrier(names), fs);
}

SignVector times(const SignVector& a, const SignVector& b) {
  SignVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] * b[i];
  return c;
}

/// The subgroup of {±1}^X generated by −1 and `gens`.
std::vector<SignVector> generated(std::size_t points, std::vector<SignVector> gens) {
  std::set<SignVector> g = {SignVector(points, 1), SignVector(points, -1)};
  gens.push_back(SignVector(points, -1));
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& a : std::vector<SignVector>(g.begin(), g.end()))
      for (const auto& b : gens) grew |= g.insert(times(a, b)).second;
  }
  return {g.begin(), g.end()};
}

/// The AOS axioms read off the definitions: subgroup with −1, separation,
/// AX2 over all 2^|G| sign maps, AX3 by a direct scan.
bool naive_aos(const SignSpace& s) {
  const std::size_t n = s.size(), X = s.point_count();
  auto find = [&](const SignVector& v) -> std::optional<std::size_t> {
    for (std::size_t f = 0; f < n; ++f)
      if (s.values(f) == v) return f;
    return std::nullopt;
  };
  if (X == 0 || !find(SignVector(X, 1)) || !find(SignVector(X, -1))) return false;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (!find(times(s.values(a), s.values(b)))) return false;
  for (std::size_t x = 0; x < X; ++x)
    for (std::size_t y = x + 1; y < X; ++y) {
      bool sep = false;
      for (std::size_t f = 0; f < n; ++f) sep = sep || s.value(f, x) != s.value(f, y);
      if (!sep) return false;
    }
  auto d = [&](std::size_t a, std::size_t b) {
    ElementSet out;
    for (std::size_t c = 0; c < n; ++c) {
      bool ok = true;
      for (std::size_t x = 0; x < X; ++x) ok = ok && (s.value(c, x) == s.value(a, x) || s.value(c, x) == s.value(b, x));
      if (ok) out.insert(c);
    }
    return out;
  };
  const std::size_t m1 = *find(SignVector(X, -1));
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    auto chi = [&](std::size_t a) { return (bits >> a & 1) ? -1 : 1; };
    if (chi(m1) != -1) continue;
    bool hom = true;
    for (std::size_t a = 0; a < n && hom; ++a)
      for (std::size_t b = 0; b < n && hom; ++b) hom = chi(*find(times(s.values(a), s.values(b)))) == chi(a) * chi(b);
    if (!hom) continue;
    bool closed = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (chi(a) == 1 && chi(b) == 1)
          for (std::size_t c : d(a, b)) closed = closed && chi(c) == 1;
    if (!closed) continue;
    bool point = false;
    for (std::size_t x = 0; x < X && !point; ++x) {
      point = true;
      for (std::size_t a = 0; a < n; ++a) point = point && s.value(a, x) == chi(a);
    }
    if (!point) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r : d(b, c))
          for (std::size_t t : d(a, r)) {
            bool found = false;
            for (std::size_t u : d(a, b)) found = found || d(u, c).contains(t);
            if (!found) return false;
          }
  return true;
}

std::vector<std::pair<std::string, SignSpace>> corpus_spaces() { return corpus::of_type<SignSpace>(); }

}  // namespace

TEST_CASE("value sets") {
  const SignSpace p = full_space(SpaceMode::aos, 1);
  const std::size_t one = *p.constant(1), m1 = *p.constant(-1);
  CHECK(p.value_set(one, one) == ElementSet::singleton(one));
  CHECK(p.value_set(one, m1) == ElementSet::full(2));

  const SignSpace fan = full_space(SpaceMode::aos, 2);
  CHECK(fan.size() == 4);
  CHECK(fan.value_set(*fan.constant(1), *fan.constant(-1)) == ElementSet::full(4));

  const SignSpace a1 = full_space(SpaceMode::ars, 1);
  const std::size_t p1 = *a1.constant(1), n1 = *a1.constant(-1), z = *a1.constant(0);
  CHECK(a1.transversal_value_set(p1, n1) == ElementSet::full(3));
  CHECK(a1.transversal_value_set(p1, p1) == ElementSet::singleton(p1));
  CHECK(a1.value_set(p1, p1) == (ElementSet::singleton(p1) | ElementSet::singleton(z)));
  CHECK(a1.transversal_value_set(z, z) == ElementSet::singleton(z));
}

TEST_CASE("AOS audits on small spaces") {
  CHECK(check_aos(full_space(SpaceMode::aos, 1)).overall());
  CHECK(check_aos(full_space(SpaceMode::aos, 2)).overall());
  const SignSpace glued = space_of(SpaceMode::aos, 2, {{1, 1}, {-1, -1}});
  const CheckReport r = check_aos(glued);
  CHECK(r.failed("AX1.separation"));
  // Missing the constant -1.
  CHECK(check_aos(space_of(SpaceMode::aos, 1, {{1}})).failed("AX1.minus_one"));
  CHECK_THROWS_AS(space_of(SpaceMode::aos, 1, {{1}, {0}}), InputError);
  CHECK_THROWS_AS(space_of(SpaceMode::aos, 1, {{1}, {1}}), InputError);
}

TEST_CASE("property: check_aos agrees with the definitions on random sign groups") {
  Rng rng(2718);
  std::size_t passing = 0, failing = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t X = 1 + pick(rng, 4);
    std::vector<SignVector> gens;
    for (std::size_t k = pick(rng, 3); k > 0; --k) {
      SignVector v(X);
      for (auto& e : v) e = pick(rng, 2) ? 1 : -1;
      gens.push_back(v);
    }
    std::vector<SignVector> g = generated(X, gens);
    // Sometimes drop a non-constant function to break closure.
    if (g.size() > 2 && pick(rng, 4) == 0) {
      const std::size_t i = pick(rng, g.size());
      if (g[i] != SignVector(X, 1) && g[i] != SignVector(X, -1)) g.erase(g.begin() + static_cast<long>(i));
    }
    const SignSpace s = space_of(SpaceMode::aos, X, g);
    const bool expected = naive_aos(s);
    INFO(X << " points, " << g.size() << " functions");
    CHECK(check_aos(s).overall() == expected);
    (expected ? passing : failing)++;
  }
  CHECK(passing > 10);
  CHECK(failing > 10);
}

TEST_CASE("AOS to real reduced multifields and back") {
  const FiniteMultiring m1 = aos_to_mfred(full_space(SpaceMode::aos, 1));
  CHECK(isomorphic(m1, corpus::q2()));
  const FiniteMultiring m2 = aos_to_mfred(full_space(SpaceMode::aos, 2));
  CHECK(m2.size() == 5);
  CHECK(classify(m2).multifield);
  CHECK(is_real_reduced_mf(m2).overall());
  CHECK_THROWS_AS(aos_to_mfred(space_of(SpaceMode::aos, 2, {{1, 1}, {-1, -1}})), PreconditionError);

  const SignSpace q = mfred_to_aos(corpus::q2());
  CHECK(q.point_count() == 1);
  CHECK(q.size() == 2);
  const SignSpace back = mfred_to_aos(m2);
  CHECK(find_space_isomorphism(back, full_space(SpaceMode::aos, 2)).has_value());
  CHECK_THROWS_AS(mfred_to_aos(corpus::zn(3)), PreconditionError);
  CHECK_THROWS_AS(mfred_to_aos(product({corpus::q2(), corpus::q2()})), PreconditionError);

  for (const auto& [name, f] : corpus_fields()) {
    if (!is_real_reduced_mf(f).overall()) continue;
    INFO(name);
    const SignSpace s = mfred_to_aos(f);
    CHECK(check_aos(s).overall());
    CHECK(s.point_count() == enumerate_orderings(f).size());
    CHECK(s.size() + 1 == f.size());
    CHECK(aos_bijection_audit(f).overall());
    CHECK(mf_aos_roundtrip(f).overall());
  }
}

TEST_CASE("ARS and real reduced multirings") {
  const SignSpace pt = full_space(SpaceMode::ars, 1);
  CHECK(check_ars(pt).overall());
  CHECK(isomorphic(ars_to_mrred(pt), corpus::q2()));
  const FiniteMultiring qq = product({corpus::q2(), corpus::q2()});
  const SignSpace s = mrred_to_ars(qq);
  CHECK(s.point_count() == 2);
  CHECK(s.size() == 9);
  CHECK(check_ars(s).overall());
  CHECK(isomorphic(ars_to_mrred(s), qq));
  CHECK(ars_sum_audit(qq).overall());
  const SignSpace full2 = full_space(SpaceMode::ars, 2);
  const CheckReport r2 = check_ars(full2);
  CHECK(r2.overall());
  CHECK(find_space_isomorphism(full2, s).has_value());
  CHECK_THROWS_AS(mrred_to_ars(corpus::zn(3)), PreconditionError);
  // The transversal relation sits inside the plain one, and c ∈ D(a,b) ⇒
  // c ∈ D^t(ac², bc²).
  for (const SignSpace& sp : {pt, s}) {
    for (std::size_t a = 0; a < sp.size(); ++a)
      for (std::size_t b = 0; b < sp.size(); ++b) {
        CHECK(sp.transversal_value_set(a, b).subset_of(sp.value_set(a, b)));
        for (std::size_t c : sp.value_set(a, b)) {
          const std::size_t c2 = *sp.product(c, c);
          CHECK(sp.transversal_value_set(*sp.product(a, c2), *sp.product(b, c2)).contains(c));
        }
      }
  }
  for (const auto& [name, a] : corpus_rings()) {
    if (!is_real_reduced_mr(a).overall()) continue;
    INFO(name);
    const SignSpace sp = mrred_to_ars(a);
    CHECK(check_ars(sp).overall());
    CHECK(sp.point_count() == enumerate_orderings(a).size());
    CHECK(ars_sum_audit(a).overall());
    CHECK(mr_ars_roundtrip(a).overall());
  }
}

TEST_CASE("space morphisms") {
  const SignSpace pt = full_space(SpaceMode::aos, 1), fan = full_space(SpaceMode::aos, 2);
  CHECK(is_space_morphism(fan, fan, StructureMap{{0, 1}}));
  // Collapsing both points: h∘α is constant, hence in G.
  CHECK(is_space_morphism(fan, pt, StructureMap{{0, 0}}));
  // Including the point: not surjective, yet every pullback lies in G.
  const CheckReport inc = check_space_morphism(pt, fan, StructureMap{{0}});
  CHECK(inc.overall());
  CHECK(is_space_morphism(pt, fan, StructureMap{{1}}));

  const auto spaces = corpus_spaces();
  for (const auto& [sn, s] : spaces)
    for (const auto& [tn, t] : spaces) {
      if (s.mode() != t.mode()) continue;
      INFO(sn << " -> " << tn);
      // Every point map, checked by the pullback condition directly.
      std::size_t count = 0;
      std::vector<std::size_t> a(s.point_count(), 0);
      while (true) {
        bool ok = true;
        for (std::size_t h = 0; h < t.size() && ok; ++h) {
          SignVector v(s.point_count());
          for (std::size_t x = 0; x < v.size(); ++x) v[x] = t.value(h, a[x]);
          ok = s.find(v).has_value();
        }
        count += ok;
        std::size_t i = 0;
        while (i < a.size() && ++a[i] == t.point_count()) a[i++] = 0;
        if (i == a.size()) break;
      }
      CHECK(enumerate_space_morphisms(s, t).size() == count);
      CHECK(space_functor_audit(s, t).overall());
    }
}

TEST_CASE("contravariant composition on a chain of spaces") {
  const SignSpace s1 = full_space(SpaceMode::aos, 1), s2 = full_space(SpaceMode::aos, 2),
                  s3 = full_space(SpaceMode::aos, 3);
  for (const auto& a : enumerate_space_morphisms(s1, s2))
    for (const auto& b : enumerate_space_morphisms(s2, s3)) {
      std::vector<std::size_t> ba(s1.point_count());
      for (std::size_t x = 0; x < ba.size(); ++x) ba[x] = b(a(x));
      const StructureMap comp{ba};
      REQUIRE(is_space_morphism(s1, s3, comp));
      // M(b∘a) = M(a)∘M(b).
      const StructureMap ma = space_functor_map(s1, s2, a), mb = space_functor_map(s2, s3, b);
      std::vector<std::size_t> expect(mb.size());
      for (std::size_t i = 0; i < expect.size(); ++i) expect[i] = ma(mb(i));
      CHECK(space_functor_map(s1, s3, comp) == StructureMap{expect});
      CHECK(is_morphism(aos_to_mfred(s3), aos_to_mfred(s1), space_functor_map(s1, s3, comp)));
    }
}

TEST_CASE("property: round trips close up on every corpus space") {
  for (const auto& [name, s] : corpus_spaces()) {
    INFO(name);
    CHECK(check_space(s).overall());
    CHECK((s.mode() == SpaceMode::aos ? aos_roundtrip(s) : ars_roundtrip(s)).overall());
  }
}
