#pragma once

#include <array>
#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "mvalg/carrier.hpp"
#include "mvalg/element_set.hpp"
#include "mvalg/morphism.hpp"
#include "mvalg/multiring.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

using Quad = std::array<std::size_t, 4>;

/// (G, −1, ≡): an exponent-2 group with the isometry relation on pairs,
/// stored as iso_cell(a,b,c) = {d : ⟨a,b⟩ ≡ ⟨c,d⟩}.
class SpecialGroup {
 public:
  /// Validates that `mul` is an abelian group of exponent 2 (InputError
  /// otherwise), then closes `iso` under the equivalence-relation and
  /// ⟨a,b⟩ ≡ ⟨b,a⟩ rules. added_by_closure() counts the new quadruples.
  SpecialGroup(Carrier carrier, std::vector<std::size_t> mul, std::size_t minus_one, const std::vector<Quad>& iso);
  /// Same validation, but takes `iso` as given (used for audits that must
  /// see an unclosed relation).
  static SpecialGroup raw(Carrier carrier, std::vector<std::size_t> mul, std::size_t minus_one,
                          const std::vector<Quad>& iso);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  const std::string& name(std::size_t i) const { return carrier_.name(i); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
  std::size_t one() const { return one_; }
  std::size_t minus_one() const { return minus_one_; }
  std::size_t neg(std::size_t a) const { return mul(minus_one_, a); }
  std::span<const std::size_t> mul_table() const { return mul_; }

  bool iso(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return iso_[(a * size() + b) * size() + c].contains(d);
  }
  ElementSet iso_cell(std::size_t a, std::size_t b, std::size_t c) const {
    return iso_[(a * size() + b) * size() + c];
  }
  /// All quadruples in lexicographic order.
  std::vector<Quad> quadruples() const;
  std::size_t added_by_closure() const { return added_; }

  /// D_G(a,b) = {c : ⟨c,d⟩ ≡ ⟨a,b⟩ for some d}.
  ElementSet represented(std::size_t a, std::size_t b) const;

  SpecialGroup with_quad(const Quad& q, bool present) const;

  friend bool operator==(const SpecialGroup& x, const SpecialGroup& y) {
    return x.carrier_ == y.carrier_ && x.mul_ == y.mul_ && x.minus_one_ == y.minus_one_ && x.iso_ == y.iso_;
  }

 private:
  SpecialGroup() = default;
  void validate_group();

  Carrier carrier_;
  std::vector<std::size_t> mul_;
  std::size_t one_ = 0;
  std::size_t minus_one_ = 0;
  std::vector<ElementSet> iso_;
  std::size_t added_ = 0;
};

/// SG0–SG5.
CheckReport check_psg(const SpecialGroup& g);
/// SG0–SG6.
CheckReport check_sg(const SpecialGroup& g);
/// check_sg plus 1 ≠ −1 and ⟨a,a⟩ ≡ ⟨1,1⟩ ⇒ a = 1.
CheckReport check_reduced(const SpecialGroup& g);
/// SG7, SG8, SG9 and whether SG6 ⟺ SG7∧SG8 ⟺ SG9 on this instance.
/// Skipped unless SG0–SG5 hold.
CheckReport check_sg_extended(const SpecialGroup& g);

/// The relation on 3-forms: ⟨a1,a2,a3⟩ ≡ ⟨b1,b2,b3⟩ iff some x,y,z give
/// ⟨a1,x⟩ ≡ ⟨b1,y⟩, ⟨a2,a3⟩ ≡ ⟨x,z⟩ and ⟨b2,b3⟩ ≡ ⟨y,z⟩. Row-major over
/// triples t = (a1·n + a2)·n + a3.
std::vector<boost::dynamic_bitset<>> triple_isometry(const SpecialGroup& g);

/// M(G) = G ∪ {0}; 0 is appended with label `zero_label`. Throws
/// PreconditionError unless check_sg passes.
FiniteMultiring sg_to_mf(const SpecialGroup& g, const std::string& zero_label = "0");

/// Properties i–v making F• a special group (multifield required).
CheckReport check_smf(const FiniteMultiring& f);
/// S(F) = F• with ⟨a,b⟩ ≡ ⟨c,d⟩ iff ab = cd and a ∈ c+d. Throws
/// PreconditionError unless check_smf passes.
SpecialGroup mf_to_sg(const FiniteMultiring& f);

/// Group homomorphism, f(−1) = −1, forward isometry preservation (required)
/// and reverse preservation (informational).
CheckReport check_sg_morphism(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f);
bool is_sg_morphism(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f);
/// All maps passing the required part of check_sg_morphism.
std::vector<StructureMap> enumerate_sg_morphisms(const SpecialGroup& g, const SpecialGroup& h,
                                                 std::size_t limit = std::numeric_limits<std::size_t>::max());

/// M(f): f on G, 0 ↦ 0 (zero is the last index of M(G)).
StructureMap sg_functor_map(const SpecialGroup& g, const SpecialGroup& h, const StructureMap& f);
/// S(σ): σ restricted to nonzero elements, as indices of S(F) and S(K).
StructureMap smf_functor_map(const FiniteMultiring& f, const FiniteMultiring& k, const StructureMap& sigma);

/// S(M(G)) = G exactly.
CheckReport sg_roundtrip(const SpecialGroup& g);
/// M(S(F)) = F table-for-table under F's labels.
CheckReport smf_roundtrip(const FiniteMultiring& f);
/// On Hom(G,H): M(f) are morphisms, pairwise distinct (faithful),
/// S(M(f)) = f, and every multifield morphism M(G)→M(H) is some M(f).
CheckReport sg_functor_audit(const SpecialGroup& g, const SpecialGroup& h);

/// F_p•/F_p•² with isometry from binary-form representation over F_p,
/// by brute force. Odd primes p ≤ 61 only.
SpecialGroup sg_of_prime_field(std::size_t p);

/// Exponent-2 group Z₂^k with labels built from generators "-1", "a", "b",
/// ... (index = bitmask of generators, "-1" is bit 0).
SpecialGroup sg_trivial(std::size_t k);
/// Z₂^k with D(a,b) = {a,b} for b ≠ −a.
SpecialGroup sg_fan(std::size_t k);

/// Least relation containing `seeds` and closed under SG0, SG1, SG2, SG4 and
/// SG5 on the given group (seeds should satisfy SG3).
SpecialGroup psg_closure(const Carrier& carrier, const std::vector<std::size_t>& mul, std::size_t minus_one,
                         const std::vector<Quad>& seeds);
/// Every PSG relation on the group, found by walking closures upward from the
/// least one. Stops after `limit` relations.
std::vector<SpecialGroup> enumerate_psgs(const Carrier& carrier, const std::vector<std::size_t>& mul,
                                         std::size_t minus_one, std::size_t limit);

}  // namespace mvalg
