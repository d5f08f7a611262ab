#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "mvalg/carrier.hpp"
#include "mvalg/element_set.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

/// (G, *, r, 1) with a set-valued operation. Every cell is non-empty.
class FiniteMultigroup {
 public:
  FiniteMultigroup(Carrier carrier, std::vector<ElementSet> op, std::vector<std::size_t> inv,
                   std::size_t identity);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  ElementSet op(std::size_t x, std::size_t y) const { return op_[x * size() + y]; }
  std::size_t inv(std::size_t x) const { return inv_[x]; }
  std::size_t identity() const { return identity_; }
  std::span<const ElementSet> table() const { return op_; }
  std::span<const std::size_t> inv_table() const { return inv_; }

  FiniteMultigroup with_cell(std::size_t x, std::size_t y, ElementSet cell) const;

  friend bool operator==(const FiniteMultigroup&, const FiniteMultigroup&) = default;

 private:
  Carrier carrier_;
  std::vector<ElementSet> op_;
  std::vector<std::size_t> inv_;
  std::size_t identity_;
};

/// (G, Π, r, i): the ternary-relation presentation. Stored as cells
/// cell(x,y) = {z : (x,y,z) ∈ Π}; unlike FiniteMultigroup cells may be empty.
class RelationalMultigroup {
 public:
  RelationalMultigroup(Carrier carrier, std::vector<ElementSet> cells, std::vector<std::size_t> inv,
                       std::size_t identity);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  bool contains(std::size_t x, std::size_t y, std::size_t z) const { return cell(x, y).contains(z); }
  ElementSet cell(std::size_t x, std::size_t y) const { return cells_[x * size() + y]; }
  std::size_t inv(std::size_t x) const { return inv_[x]; }
  std::size_t identity() const { return identity_; }

  std::size_t triple_count() const;
  std::vector<std::array<std::size_t, 3>> triples() const;

  RelationalMultigroup with_triple(std::size_t x, std::size_t y, std::size_t z, bool present) const;

  friend bool operator==(const RelationalMultigroup&, const RelationalMultigroup&) = default;

 private:
  Carrier carrier_;
  std::vector<ElementSet> cells_;
  std::vector<std::size_t> inv_;
  std::size_t identity_;
};

/// Axioms i (reversibility), ii (identity), iii (associativity under the
/// union convention) and iv (commutativity, reported separately).
CheckReport check_multigroup(const FiniteMultigroup& m);

RelationalMultigroup to_relational(const FiniteMultigroup& m);
/// Throws InputError("non-total hyperoperation ...") when some pair (a,b)
/// has no triple.
FiniteMultigroup from_relational(const RelationalMultigroup& r);

/// Axioms I–IV of the relational presentation.
CheckReport check_relational_axioms(const RelationalMultigroup& r);
/// The six consequences (a)–(f) of axioms I–III. Runs the axioms first and
/// skips the consequence checks when they fail.
CheckReport check_relational_consequences(const RelationalMultigroup& r);

namespace detail {

/// Shared scan behind check_multigroup and the additive part of
/// check_multiring. Appends verdicts "<prefix>i.reversibility" etc.
void check_hyperop_axioms(const Carrier& carrier, std::span<const ElementSet> table,
                          std::span<const std::size_t> inv, std::size_t identity, std::string_view prefix,
                          CheckReport& report);

void validate_hyperop_table(std::size_t n, std::span<const ElementSet> table, std::string_view what,
                            const Carrier& carrier);
void validate_map(std::size_t n, std::span<const std::size_t> map, std::string_view what);

}  // namespace detail

}  // namespace mvalg
