#pragma once

#include <cstddef>
#include <vector>

#include "mvalg/constructions.hpp"
#include "mvalg/element_set.hpp"
#include "mvalg/morphism.hpp"
#include "mvalg/multiring.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

/// All ideals, sorted by bitmask. Found by walking the lattice of closures
/// ⟨J ∪ {x}⟩ upward from {0}.
std::vector<ElementSet> enumerate_ideals(const FiniteMultiring& a);
bool is_prime_ideal(const FiniteMultiring& a, ElementSet p);
std::vector<ElementSet> enumerate_primes(const FiniteMultiring& a);
/// Proper ideals maximal among proper ideals.
std::vector<ElementSet> enumerate_maximals(const FiniteMultiring& a);

/// Per ideal: prime ⟺ A/𝔭 multidomain, maximal ⟺ A/𝔪 multifield,
/// maximal ⇒ prime.
CheckReport check_quotient_characterizations(const FiniteMultiring& a);

struct SpectrumReport {
  std::vector<ElementSet> primes;
  /// basic_opens[a] = D(a) as a set of indices into `primes`.
  std::vector<ElementSet> basic_opens;
  CheckReport report;
};

/// D(a) for every a, the closure relations on each prime's 0/1 vector, T₀
/// separation, and (for n ≤ 20) that every vector satisfying the relations
/// is a prime's.
SpectrumReport spec_topology(const FiniteMultiring& a);

/// The positive-cone conditions: P+P ⊆ P, PP ⊆ P, P ∪ −P = A, and P ∩ −P a
/// prime ideal (which is {0} for multifields).
bool is_ordering(const FiniteMultiring& a, ElementSet p);
/// Sorted by bitmask; backtracking over negation orbits.
std::vector<ElementSet> enumerate_orderings(const FiniteMultiring& a);

/// All morphisms a → Q₂.
std::vector<StructureMap> hom_to_q2(const FiniteMultiring& a);
/// σ⁻¹({0,1}).
ElementSet ordering_of(const FiniteMultiring& a, const StructureMap& sigma);
/// The sign map with σ⁻¹(0) = P ∩ −P and σ⁻¹({0,1}) = P, as a map into the
/// corpus Q₂ ("0","1","-1").
StructureMap sign_map_of(const FiniteMultiring& a, ElementSet p);
/// Counts agree and σ ↦ σ⁻¹({0,1}), P ↦ sign map are mutually inverse.
CheckReport ordering_hom_bijection(const FiniteMultiring& a);

/// T+T ⊆ T, TT ⊆ T, F² ⊆ T.
bool is_preordering(const FiniteMultiring& f, ElementSet t);
/// Every preordering, by scanning supersets of F².
std::vector<ElementSet> enumerate_preorderings(const FiniteMultiring& f);
/// T = ⋂ {P ∈ Sper(F) : T ⊆ P}; skipped when −1 ∈ T.
CheckReport preordering_intersection_check(const FiniteMultiring& f, ElementSet t);

/// ΣA²: closure of {a² : a ∈ A} (0 included) under sums and products.
ElementSet sums_of_squares(const FiniteMultiring& a);
/// −1 ∉ ΣA².
bool is_real(const FiniteMultiring& a);
/// Multifield with a³ = a and (a ∈ 1+1 ⇒ a = 1).
CheckReport is_real_reduced_mf(const FiniteMultiring& f);
/// i 1 ≠ 0; ii a³ = a; iii c ∈ a+ab² ⇒ c = a; iv c,d ∈ a²+b² ⇒ c = d.
CheckReport is_real_reduced_mr(const FiniteMultiring& a);

/// Evaluates (a) F → Q_red(F) is an isomorphism, (b) ΣF² = {0,1}, (c) the
/// element conditions, and whether they agree. Agreement is required for
/// real F and informational otherwise.
CheckReport check_reduced_characterizations(const FiniteMultiring& f);

/// The evaluation map a ↦ (σ(a))_σ into Q₂^Sper(A): injective, a morphism
/// and strong. Throws PreconditionError unless A is real reduced.
CheckReport sper_embedding_check(const FiniteMultiring& a);

/// Q_T(A) = A/ₘ(T∖{0}). PreconditionError unless T∖{0} contains 1 and is
/// closed under products.
Construction q_t(const FiniteMultiring& a, ElementSet t);
/// For a multifield F and a proper preordering T: the map ā ↦ (σ(a))_σ from
/// Q_T(F) into Q₂^{X_T}, X_T = {σ : σ(T) ⊆ {0,1}}, is well defined,
/// injective, a morphism and strong. Skipped for improper T.
CheckReport qt_embedding_check(const FiniteMultiring& f, ElementSet t);

}  // namespace mvalg
