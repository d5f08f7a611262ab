#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvalg/io.hpp"

namespace mvalg {

enum class EnumKind { multigroup, multiring, multifield };

std::optional<EnumKind> parse_enum_kind(std::string_view s);

/// Largest order the exhaustive search accepts.
inline constexpr std::size_t kMaxEnumOrder = 3;

/// Compact table code over the carrier indices:
///   multiring   "z<zero>o<one>|n<neg>|m<mul>|a<add>"
///   multigroup  "i<identity>|r<inv>|o<op>"
/// with one decimal digit per map entry and one hex digit (bitmask) per
/// cell, cells row-major.
std::string structure_code(const FiniteMultiring& r);
std::string structure_code(const FiniteMultigroup& g);

/// Lexicographically least code over all relabelings, and a structure on
/// labels "e0".."e{n-1}" realizing it.
std::pair<std::string, FiniteMultiring> canonical_form(const FiniteMultiring& r);
std::pair<std::string, FiniteMultigroup> canonical_form(const FiniteMultigroup& g);

struct Enumerated {
  std::string code;
  Structure value;
};

struct EnumerationResult {
  /// Labelled structures found before isomorphism reduction.
  std::size_t labelled = 0;
  /// Sorted by code. With up_to_iso, one canonical representative per class.
  std::vector<Enumerated> items;
};

/// Every structure of the kind on the carrier {e0, …, e(n−1)}. Candidates
/// are generated with the forced parts fixed (the identity row, commutative
/// monoid products with absorbing zero, negation read off the sum table);
/// every survivor is then confirmed by the full audit. InputError for
/// order 0 or order > kMaxEnumOrder.
EnumerationResult enumerate_structures(EnumKind kind, std::size_t order, bool up_to_iso);

}  // namespace mvalg
