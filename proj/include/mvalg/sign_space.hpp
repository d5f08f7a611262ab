#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mvalg/carrier.hpp"
#include "mvalg/element_set.hpp"
#include "mvalg/morphism.hpp"
#include "mvalg/multiring.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

enum class SpaceMode { aos, ars };

std::string_view to_string(SpaceMode m);

using SignVector = std::vector<int>;

/// (X, G): labelled points and labelled functions X → {−1,1} (AOS) or
/// X → {−1,0,1} (ARS). Function i has label functions().name(i).
class SignSpace {
 public:
  /// Validates value ranges, row lengths and that no two functions coincide.
  SignSpace(SpaceMode mode, Carrier points, Carrier functions, std::vector<SignVector> values);

  SpaceMode mode() const { return mode_; }
  const Carrier& points() const { return points_; }
  const Carrier& functions() const { return functions_; }
  std::size_t point_count() const { return points_.size(); }
  std::size_t size() const { return functions_.size(); }
  const SignVector& values(std::size_t f) const { return values_[f]; }
  int value(std::size_t f, std::size_t x) const { return values_[f][x]; }
  /// Index of the function with these values, if any.
  std::optional<std::size_t> find(const SignVector& v) const;

  /// Pointwise product, or nullopt when the product is not in G.
  std::optional<std::size_t> product(std::size_t f, std::size_t g) const;
  std::optional<std::size_t> constant(int c) const;

  /// AOS: c(x) ∈ {a(x), b(x)} everywhere. ARS: a(x)c(x) > 0, b(x)c(x) > 0
  /// or c(x) = 0, everywhere.
  ElementSet value_set(std::size_t a, std::size_t b) const;
  /// ARS: as value_set but c(x) = 0 additionally requires b(x) = −a(x).
  ElementSet transversal_value_set(std::size_t a, std::size_t b) const;

  friend bool operator==(const SignSpace&, const SignSpace&) = default;

 private:
  SpaceMode mode_;
  Carrier points_;
  Carrier functions_;
  std::vector<SignVector> values_;
};

/// One-point or k-point spaces with every sign function (the fan for AOS).
/// Function labels are the sign vectors, e.g. "(1,-1)"; a single point uses
/// "1", "-1", "0".
SignSpace full_space(SpaceMode mode, std::size_t points);

/// AX1 (group/monoid, constants, separation), AX2 by exhaustive character or
/// cone enumeration, AX3; plus an informational value-set associativity check
/// in AOS mode.
CheckReport check_aos(const SignSpace& s);
CheckReport check_ars(const SignSpace& s);
CheckReport check_space(const SignSpace& s);

/// G ∪ {0} with the case-split sum. PreconditionError unless check_aos passes.
FiniteMultiring aos_to_mfred(const SignSpace& s, const std::string& zero_label = "0");
/// X = characters of F• with x(−1) = −1 whose kernel is closed under sums;
/// G = evaluations. PreconditionError unless F is a real reduced multifield.
SignSpace mfred_to_aos(const FiniteMultiring& f);
/// The correspondences X ↔ Sper(F) and G ↔ F•.
CheckReport aos_bijection_audit(const FiniteMultiring& f);

/// G with a + b := D^t(a,b). PreconditionError unless check_ars passes.
FiniteMultiring ars_to_mrred(const SignSpace& s);
/// (Sper(A), Â). PreconditionError unless A is real reduced.
SignSpace mrred_to_ars(const FiniteMultiring& a);
/// D^t(â,b̂) = {d̂ : d ∈ a+b} on the space built from A.
CheckReport ars_sum_audit(const FiniteMultiring& a);

/// α: X → Y with h∘α ∈ G for every h ∈ H (required); surjectivity is
/// reported informationally.
CheckReport check_space_morphism(const SignSpace& s, const SignSpace& t, const StructureMap& alpha);
bool is_space_morphism(const SignSpace& s, const SignSpace& t, const StructureMap& alpha);
std::vector<StructureMap> enumerate_space_morphisms(const SignSpace& s, const SignSpace& t);
/// h ↦ h∘α as a map on function indices H → G.
StructureMap pullback(const SignSpace& s, const SignSpace& t, const StructureMap& alpha);
/// The multiring map induced by α: M(T) → M(S) (contravariant). In AOS
/// mode the zeros of both M's are the last index.
StructureMap space_functor_map(const SignSpace& s, const SignSpace& t, const StructureMap& alpha);

/// Bijective α whose pullback is bijective; found by backtracking over point
/// bijections with function-set matching.
std::optional<StructureMap> find_space_isomorphism(const SignSpace& s, const SignSpace& t);

/// Space side: S ≅ Spec(M(S)). Structure side: F ≅ M(Spec(F)). Isomorphisms
/// are exhibited in the verdict details.
CheckReport aos_roundtrip(const SignSpace& s);
CheckReport mf_aos_roundtrip(const FiniteMultiring& f);
CheckReport ars_roundtrip(const SignSpace& s);
CheckReport mr_ars_roundtrip(const FiniteMultiring& a);

/// On every space morphism S → T: M(α) is a multiring morphism, identity goes
/// to identity, and the count matches Hom(M T, M S).
CheckReport space_functor_audit(const SignSpace& s, const SignSpace& t);

}  // namespace mvalg
