#include "mvalg/corpus.hpp"

#include "mvalg/constructions.hpp"
#include "mvalg/error.hpp"

namespace mvalg::corpus {

namespace {

// Sign-like carriers ("0","1","-1") with 0 additive identity and the usual
// sign product; `pp` is 1+1 (and, negated, −1+−1).
FiniteMultiring sign_like(ElementSet pp) {
  const ElementSet z = ElementSet::singleton(0), p = ElementSet::singleton(1), m = ElementSet::singleton(2);
  const ElementSet all = ElementSet::full(3);
  ElementSet mm;
  for (std::size_t x : pp) mm.insert(x == 0 ? 0 : 3 - x);
  std::vector<ElementSet> add = {z, p, m,  //
                                 p, pp, all, m, all, mm};
  std::vector<std::size_t> mul = {0, 0, 0, 0, 1, 2, 0, 2, 1};
  return FiniteMultiring(Carrier({"0", "1", "-1"}), std::move(add), std::move(mul), {0, 2, 1}, 0, 1);
}

std::vector<StructureFile> build() {
  std::vector<StructureFile> out;
  auto put = [&](std::string name, std::string provenance, Structure s) {
    out.push_back(StructureFile{std::move(name), std::move(provenance), std::move(s)});
  };

  put("q2", "sign multifield", q2());
  put("krasner", "Krasner multifield", krasner());
  put("weak_sign", "sign carrier with 1+1 = {1,-1}", weak_sign());
  for (std::size_t n = 2; n <= 8; ++n) put("z" + std::to_string(n), "integers modulo " + std::to_string(n), zn(n));
  put("q2xq2", "product of two sign multifields", product({q2(), q2()}));
  put("q2xz2", "product of the sign multifield and Z/2", product({q2(), zn(2)}));
  put("kxk", "product of two Krasner multifields", product({krasner(), krasner()}));
  put("fan2_mf", "multifield of the fan on four elements", sg_to_mf(sg_fan(2)));
  put("fan3_mf", "multifield of the fan on eight elements", sg_to_mf(sg_fan(3)));
  put("f5_mf", "multifield of the special group of F_5", sg_to_mf(sg_of_prime_field(5)));

  put("q2_add", "additive multigroup of the sign multifield", q2().additive_multigroup());
  put("krasner_add", "additive multigroup of the Krasner multifield", krasner().additive_multigroup());
  put("z4_add", "cyclic group of order 4", zn(4).additive_multigroup());
  put("weak_sign_add", "additive multigroup of the weak sign multifield", weak_sign().additive_multigroup());

  put("sg_trivial1", "trivial special group on Z_2", sg_trivial(1));
  put("sg_trivial2", "trivial special group on Z_2^2", sg_trivial(2));
  put("sg_z2", "reduced special group on Z_2", sg_fan(1));
  put("sg_fan2", "fan on Z_2^2", sg_fan(2));
  put("sg_fan3", "fan on Z_2^3", sg_fan(3));
  put("sg_f3", "special group of F_3", sg_of_prime_field(3));
  put("sg_f5", "special group of F_5", sg_of_prime_field(5));
  put("sg_f7", "special group of F_7", sg_of_prime_field(7));
  put("sg_f13", "special group of F_13", sg_of_prime_field(13));

  put("three", "the ternary real semigroup", canonical_3());
  put("three_x_three", "product of two copies of 3", rs_product({canonical_3(), canonical_3()}));
  put("rs_fan2", "real semigroup of the fan on four elements", mrred_to_rs(sg_to_mf(sg_fan(2))));

  put("aos_point", "one-point abstract order space", full_space(SpaceMode::aos, 1));
  put("aos_fan2", "two points, every sign function", full_space(SpaceMode::aos, 2));
  put("aos_full3", "three points, every sign function", full_space(SpaceMode::aos, 3));
  put("ars_point", "one-point abstract real spectrum", full_space(SpaceMode::ars, 1));
  put("ars_full2", "two points, every sign function", full_space(SpaceMode::ars, 2));
  return out;
}

}  // namespace

FiniteMultiring q2() {
  static const FiniteMultiring q = sign_like(ElementSet::singleton(1));
  return q;
}

FiniteMultiring weak_sign() {
  static const FiniteMultiring t = sign_like(ElementSet::from_bits(0b110));
  return t;
}

FiniteMultiring krasner() {
  const ElementSet z = ElementSet::singleton(0), o = ElementSet::singleton(1);
  return FiniteMultiring(Carrier({"0", "1"}), {z, o, o, z | o}, {0, 0, 0, 1}, {0, 1}, 0, 1);
}

FiniteMultiring zn(std::size_t n) {
  if (n == 0 || n > 64) throw InputError("Z/n needs 1 <= n <= 64");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::size_t> add(n * n), mul(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = (a * b) % n;
    }
  }
  return singleton_multiring(Carrier(std::move(names)), add, std::move(mul), 0, 1 % n);
}

const std::vector<StructureFile>& all() {
  static const std::vector<StructureFile> files = build();
  return files;
}

std::optional<StructureFile> find(const std::string& name) {
  for (const auto& f : all()) {
    if (f.name == name) return f;
  }
  return std::nullopt;
}

}  // namespace mvalg::corpus
