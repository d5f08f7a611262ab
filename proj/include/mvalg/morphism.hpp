#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "mvalg/multiring.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

/// A total map on carrier indices. Source and target are passed alongside
/// wherever the map is checked, so the map itself is plain data.
struct StructureMap {
  std::vector<std::size_t> images;

  std::size_t operator()(std::size_t a) const { return images[a]; }
  std::size_t size() const { return images.size(); }
  ElementSet image() const;
  ElementSet apply(ElementSet s) const;
  bool injective() const;
  bool surjective_onto(std::size_t target_size) const;

  friend bool operator==(const StructureMap&, const StructureMap&) = default;
  friend auto operator<=>(const StructureMap&, const StructureMap&) = default;
};

StructureMap identity_map(std::size_t n);
/// g ∘ f.
StructureMap compose(const StructureMap& g, const StructureMap& f);

/// Conditions i–v: sums, negation, zero, products, one.
CheckReport check_morphism(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f);
bool is_morphism(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f);

enum class EmbeddingKind { not_injective, embedded, strongly_embedded, submultiring };
std::string_view to_string(EmbeddingKind k);

/// Strongest label of the chain injective ⊂ strong (reflects sums) ⊂
/// submultiring (image closed under sums). Assumes f is a morphism.
EmbeddingKind embedding_kind(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f);

/// All morphisms a → b in lexicographic order of their image vectors.
std::vector<StructureMap> enumerate_morphisms(const FiniteMultiring& a, const FiniteMultiring& b,
                                              std::size_t limit = std::numeric_limits<std::size_t>::max());

/// First bijection (in backtracking order over a's indices) that is a
/// morphism in both directions.
std::optional<StructureMap> find_isomorphism(const FiniteMultiring& a, const FiniteMultiring& b);
bool isomorphic(const FiniteMultiring& a, const FiniteMultiring& b);
/// f bijective, f and f⁻¹ both morphisms.
bool is_isomorphism(const FiniteMultiring& a, const FiniteMultiring& b, const StructureMap& f);
StructureMap inverse_map(const StructureMap& f);

}  // namespace mvalg
