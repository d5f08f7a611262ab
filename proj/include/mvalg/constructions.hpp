#pragma once

#include <vector>

#include "mvalg/element_set.hpp"
#include "mvalg/morphism.hpp"
#include "mvalg/multiring.hpp"

namespace mvalg {

/// A construction's output together with its canonical map from the input
/// (projection for quotients, a ↦ a/1 for localizations).
struct Construction {
  FiniteMultiring result;
  StructureMap map;
};

/// Componentwise; element labels are tuples "(a,b,...)". The empty product
/// is the one-element ring "()" with 1 = 0.
FiniteMultiring product(const std::vector<FiniteMultiring>& factors);
/// Projection of a product onto factor i (indices as produced by product()).
StructureMap product_projection(const std::vector<FiniteMultiring>& factors, std::size_t i);

/// 0 ∈ I, I+I ⊆ I, A·I ⊆ I.
bool is_ideal(const FiniteMultiring& a, ElementSet i);
/// 1 ∈ S and S·S ⊆ S.
bool is_multiplicative(const FiniteMultiring& a, ElementSet s);

/// Least ideal containing s, by closure under A· and + to a fixpoint.
ElementSet ideal_generated(const FiniteMultiring& a, ElementSet s);

/// A/I with cosets a+I. Throws PreconditionError if I is not an ideal and
/// StructuralAnomaly if the cosets do not partition A or an operation
/// depends on the chosen representatives.
Construction quotient_by_ideal(const FiniteMultiring& a, ElementSet ideal);

/// S⁻¹A: classes of pairs a/s. Throws PreconditionError unless S is
/// multiplicative, StructuralAnomaly if the pair relation is not transitive.
/// Sums are taken over all representatives of the three classes involved.
Construction localization(const FiniteMultiring& a, ElementSet s);

/// Localization at the nonzero elements. Throws PreconditionError unless d
/// is a multidomain.
Construction fraction_multifield(const FiniteMultiring& d);

/// A/ₘS under a ∼ b iff as = bt for some s,t ∈ S. Transitivity of ∼ and
/// representative independence are verified (StructuralAnomaly otherwise).
Construction marshall_quotient(const FiniteMultiring& a, ElementSet s);

struct SquareClosure {
  ElementSet members;
  /// False when 0 or −1 entered the closure.
  bool proper = false;
};

/// Least set containing every u² (u a unit) that is closed under products
/// and under sums s+t of its members.
SquareClosure sum_of_squares_closure(const FiniteMultiring& a);

/// A/ₘΣA*². Throws PreconditionError("not real") when the closure is improper.
Construction q_red(const FiniteMultiring& a);

/// Label used for a class with least member `rep`: the member's own label
/// for singleton classes, "[rep]" otherwise.
std::string class_label(const Carrier& c, ElementSet cls);

}  // namespace mvalg
