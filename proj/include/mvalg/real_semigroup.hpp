#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "mvalg/carrier.hpp"
#include "mvalg/element_set.hpp"
#include "mvalg/morphism.hpp"
#include "mvalg/multiring.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

/// (S, ·, 1, 0, −1, D) with D stored as cells d_cell(b,c) = {a : a ∈ D(b,c)}.
/// D^t is always derived.
class RealSemigroup {
 public:
  /// Validates table shapes and indices only; TS/RS axioms are audits.
  RealSemigroup(Carrier carrier, std::vector<std::size_t> mul, std::size_t one, std::size_t zero,
                std::size_t minus_one, std::vector<ElementSet> d);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  const std::string& name(std::size_t i) const { return carrier_.name(i); }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
  std::size_t one() const { return one_; }
  std::size_t zero() const { return zero_; }
  std::size_t minus_one() const { return minus_one_; }
  std::size_t neg(std::size_t a) const { return mul(minus_one_, a); }
  std::size_t sq(std::size_t a) const { return mul(a, a); }
  std::span<const std::size_t> mul_table() const { return mul_; }

  ElementSet d_cell(std::size_t b, std::size_t c) const { return d_[b * size() + c]; }
  bool in_d(std::size_t a, std::size_t b, std::size_t c) const { return d_cell(b, c).contains(a); }
  /// a ∈ D^t(b,c) ⟺ a ∈ D(b,c) ∧ −b ∈ D(−a,c) ∧ −c ∈ D(b,−a).
  bool in_dt(std::size_t a, std::size_t b, std::size_t c) const;
  ElementSet dt_cell(std::size_t b, std::size_t c) const;
  const std::vector<ElementSet>& d_cells() const { return d_; }

  RealSemigroup with_d(std::size_t a, std::size_t b, std::size_t c, bool present) const;

  friend bool operator==(const RealSemigroup&, const RealSemigroup&) = default;

 private:
  Carrier carrier_;
  std::vector<std::size_t> mul_;
  std::size_t one_, zero_, minus_one_;
  std::vector<ElementSet> d_;
};

/// TS1–TS5.
CheckReport check_ts(const RealSemigroup& s);
/// TS1–TS5 then RS0–RS8.
CheckReport check_rs(const RealSemigroup& s);
/// Same verdict as check_rs(s).overall(), with early exit.
bool is_rs(const RealSemigroup& s);
/// Items i–xvii of the derived-property list; skipped unless check_rs passes.
CheckReport check_rs_derived(const RealSemigroup& s);

/// 3 = {0, 1, −1} with its representation relation.
RealSemigroup canonical_3();
/// The ternary semigroup 3 with an arbitrary D.
RealSemigroup three_with(std::vector<ElementSet> d);

struct UniquenessResult {
  std::vector<RealSemigroup> survivors;
  std::size_t candidates = 0;  // after symmetry and a ∈ D(a,b) pruning
};
/// Every D on the ternary semigroup 3 making it a real semigroup.
UniquenessResult rs_on_three();

/// Componentwise product (at least one factor).
RealSemigroup rs_product(const std::vector<RealSemigroup>& factors);

/// f(ab)=f(a)f(b), f(1)=1, f(0)=0, f(−1)=−1, a ∈ D(b,c) ⇒ f(a) ∈ D(f(b),f(c)).
CheckReport check_rs_morphism(const RealSemigroup& s, const RealSemigroup& t, const StructureMap& f);
bool is_rs_morphism(const RealSemigroup& s, const RealSemigroup& t, const StructureMap& f);
std::vector<StructureMap> enumerate_rs_morphisms(const RealSemigroup& s, const RealSemigroup& t,
                                                 std::size_t limit = std::numeric_limits<std::size_t>::max());
std::vector<StructureMap> hom_to_3(const RealSemigroup& s);

/// Representation, transversal representation and point separation as
/// statements about Hom(S, 3).
CheckReport separation_audit(const RealSemigroup& s);

/// a + b := D^t(a,b). PreconditionError unless check_rs passes.
FiniteMultiring rs_to_mrred(const RealSemigroup& s);
/// d ∈ D(a,b) ⟺ d ∈ d²a + d²b. PreconditionError unless A is real reduced.
RealSemigroup mrred_to_rs(const FiniteMultiring& a);

/// S(M(S)) = S exactly, plus the audits of M(S).
CheckReport rs_roundtrip(const RealSemigroup& s);
/// D^t of S(A) equals the addition of A, and M(S(A)) = A exactly.
CheckReport mr_rs_roundtrip(const FiniteMultiring& a);
/// Hom_RS(S,T) and Hom_MR(M S, M T) coincide as sets of maps.
CheckReport rs_functor_audit(const RealSemigroup& s, const RealSemigroup& t);

}  // namespace mvalg
