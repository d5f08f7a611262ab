#include <doctest.h>

#include <fstream>
#include <set>

#include "mvalg/corpus.hpp"
#include "mvalg/diagram.hpp"
#include "mvalg/enumerate.hpp"
#include "mvalg/error.hpp"
#include "mvalg/multigroup.hpp"
#include "mvalg/spectra.hpp"
#include "support.hpp"

using namespace mvalg;
using namespace testsupport;

namespace {

std::vector<std::string> fixture(const std::string& kind, std::size_t order) {
  std::ifstream in(std::string(MVALG_FIXTURE_DIR) + "/" + kind + "_" + std::to_string(order) + ".txt");
  REQUIRE(in.good());
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

std::vector<std::string> codes(const EnumerationResult& r) {
  std::vector<std::string> out;
  for (const auto& e : r.items) out.push_back(e.code);
  return out;
}

FiniteMultigroup permute_group(const FiniteMultigroup& g, const std::vector<std::size_t>& p) {
  const std::size_t n = g.size();
  std::vector<std::string> names(n);
  std::vector<ElementSet> op(n * n);
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    names[p[a]] = g.carrier().name(a);
    inv[p[a]] = p[g.inv(a)];
    for (std::size_t b = 0; b < n; ++b) op[p[a] * n + p[b]] = image_of(g.op(a, b), p);
  }
  return FiniteMultigroup(Carrier(names), op, inv, p[g.identity()]);
}

}  // namespace

TEST_CASE("enumeration matches the brute-force fixtures") {
  for (const char* kind : {"multigroup", "multiring", "multifield"}) {
    for (std::size_t n = 1; n <= kMaxEnumOrder; ++n) {
      INFO(kind << " order " << n);
      const EnumerationResult r = enumerate_structures(*parse_enum_kind(kind), n, true);
      CHECK(codes(r) == fixture(kind, n));
    }
  }
}

TEST_CASE("known counts and members") {
  CHECK(enumerate_structures(EnumKind::multifield, 1, true).items.empty());
  const auto f2 = enumerate_structures(EnumKind::multifield, 2, true);
  REQUIRE(f2.items.size() == 2);
  bool k = false, z2 = false;
  for (const auto& e : f2.items) {
    const auto& r = std::get<FiniteMultiring>(e.value);
    k = k || isomorphic(r, corpus::krasner());
    z2 = z2 || isomorphic(r, corpus::zn(2));
  }
  CHECK(k);
  CHECK(z2);
  const auto f3 = enumerate_structures(EnumKind::multifield, 3, true);
  CHECK(f3.items.size() == 5);
  std::size_t q2 = 0, ws = 0, z3 = 0;
  for (const auto& e : f3.items) {
    const auto& r = std::get<FiniteMultiring>(e.value);
    CHECK(classify(r).multifield);
    q2 += isomorphic(r, corpus::q2());
    ws += isomorphic(r, corpus::weak_sign());
    z3 += isomorphic(r, corpus::zn(3));
  }
  CHECK(q2 == 1);
  CHECK(ws == 1);
  CHECK(z3 == 1);
  CHECK(f3.labelled == 30);
  CHECK(enumerate_structures(EnumKind::multiring, 3, true).items.size() == 14);
  CHECK(enumerate_structures(EnumKind::multigroup, 3, true).items.size() == 10);
  CHECK_THROWS_AS(enumerate_structures(EnumKind::multiring, 0, true), InputError);
  CHECK_THROWS_AS(enumerate_structures(EnumKind::multiring, kMaxEnumOrder + 1, true), InputError);
  CHECK_FALSE(parse_enum_kind("ring").has_value());
}

TEST_CASE("property: labelled results are closed under relabeling and reduce to the canonical list") {
  for (std::size_t n = 1; n <= kMaxEnumOrder; ++n) {
    const auto all = enumerate_structures(EnumKind::multiring, n, false);
    const auto iso = enumerate_structures(EnumKind::multiring, n, true);
    CHECK(all.items.size() == all.labelled);
    std::set<std::string> labelled, canon;
    for (const auto& e : all.items) labelled.insert(e.code);
    CHECK(labelled.size() == all.items.size());
    for (const auto& e : all.items) {
      const auto& r = std::get<FiniteMultiring>(e.value);
      canon.insert(canonical_form(r).first);
      std::vector<std::size_t> p(n);
      std::iota(p.begin(), p.end(), std::size_t{0});
      do {
        CHECK(labelled.count(structure_code(permute(r, p))) == 1);
      } while (std::next_permutation(p.begin(), p.end()));
    }
    CHECK(std::vector<std::string>(canon.begin(), canon.end()) == codes(iso));
  }
}

TEST_CASE("property: canonical forms are invariant under seeded relabelings") {
  Rng rng(31337);
  for (const auto& [name, r] : corpus_rings()) {
    if (r.size() > 8) continue;
    INFO(name);
    const auto [code, canon] = canonical_form(r);
    CHECK(structure_code(canon) == code);
    CHECK(isomorphic(canon, r));
    for (int t = 0; t < 5; ++t) CHECK(canonical_form(permute(r, random_permutation(rng, r.size()))).first == code);
  }
  for (const auto& [name, g] : corpus::of_type<FiniteMultigroup>()) {
    INFO(name);
    const std::string code = canonical_form(g).first;
    for (int t = 0; t < 5; ++t)
      CHECK(canonical_form(permute_group(g, random_permutation(rng, g.size()))).first == code);
  }
  // Non-isomorphic structures get different codes.
  CHECK(canonical_form(corpus::q2()).first != canonical_form(corpus::weak_sign()).first);
  CHECK(canonical_form(corpus::q2()).first != canonical_form(corpus::zn(3)).first);
}

TEST_CASE("the whole diagram closes on real reduced corpus structures") {
  for (const char* name : {"q2", "fan2_mf", "fan3_mf", "q2xq2"}) {
    INFO(name);
    const auto f = corpus::find(name);
    REQUIRE(f.has_value());
    const CheckReport r = diagram_audit(std::get<FiniteMultiring>(f->value));
    CHECK_MESSAGE(r.overall(), r.to_text());
  }
  const CheckReport q2 = diagram_audit(corpus::q2());
  for (const char* id : {"multifield", "agree.SG~RS", "agree.AOS~ARS", "agree.RS~ARS"}) CHECK(q2.passed(id));
  const CheckReport qq = diagram_audit(product({corpus::q2(), corpus::q2()}));
  CHECK(qq.passed("agree.RS~ARS"));
  CHECK(qq.find("agree.SG~RS") == nullptr);
  for (const auto& [name, a] : corpus_rings()) {
    INFO(name);
    const CheckReport r = diagram_audit(a);
    CHECK(r.overall() == is_real_reduced_mr(a).overall());
  }
  CHECK(diagram_audit(corpus::zn(3)).failed("real_reduced"));
}
