#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mvalg/carrier.hpp"
#include "mvalg/element_set.hpp"
#include "mvalg/multigroup.hpp"
#include "mvalg/report.hpp"

namespace mvalg {

/// (R, +, ·, −, 0, 1) with set-valued addition and single-valued product.
/// 1 = 0 is allowed; checks that need 1 ≠ 0 test it explicitly.
class FiniteMultiring {
 public:
  FiniteMultiring(Carrier carrier, std::vector<ElementSet> add, std::vector<std::size_t> mul,
                  std::vector<std::size_t> neg, std::size_t zero, std::size_t one);

  std::size_t size() const { return carrier_.size(); }
  const Carrier& carrier() const { return carrier_; }
  const std::string& name(std::size_t i) const { return carrier_.name(i); }

  ElementSet add(std::size_t a, std::size_t b) const { return add_[a * size() + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * size() + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  std::size_t minus_one() const { return neg_[one_]; }

  /// Union of a+b over a ∈ x, b ∈ y.
  ElementSet add_sets(ElementSet x, ElementSet y) const;
  /// {d·a : a ∈ x}.
  ElementSet scale(ElementSet x, std::size_t d) const;
  ElementSet all() const { return ElementSet::full(size()); }
  ElementSet nonzero() const { return all() - ElementSet::singleton(zero_); }
  /// Elements with a multiplicative inverse.
  ElementSet units() const;
  /// Some b with ab = 1, or size() if none.
  std::size_t inverse(std::size_t a) const;

  std::span<const ElementSet> add_table() const { return add_; }
  std::span<const std::size_t> mul_table() const { return mul_; }
  std::span<const std::size_t> neg_table() const { return neg_; }

  FiniteMultiring with_add_cell(std::size_t a, std::size_t b, ElementSet cell) const;
  FiniteMultiring with_mul_cell(std::size_t a, std::size_t b, std::size_t value) const;
  FiniteMultiring relabeled(Carrier carrier) const;

  FiniteMultigroup additive_multigroup() const;

  /// Label-sensitive equality: same carrier order, same tables.
  friend bool operator==(const FiniteMultiring&, const FiniteMultiring&) = default;

 private:
  Carrier carrier_;
  std::vector<ElementSet> add_;
  std::vector<std::size_t> mul_;
  std::vector<std::size_t> neg_;
  std::size_t zero_;
  std::size_t one_;
};

/// Same labels with the same tables, allowing a different carrier order.
bool same_tables_up_to_order(const FiniteMultiring& a, const FiniteMultiring& b);

/// Additive multigroup axioms (ids "add.*"), multiplicative monoid, 0
/// absorption, weak distributivity (a+b)d ⊆ ad+bd, and an informational
/// full-distributivity verdict.
CheckReport check_multiring(const FiniteMultiring& r);

/// Exhaustive (a+b)d = ad+bd; shared by the informational verdict above.
Verdict full_distributivity(const FiniteMultiring& r);

struct Classification {
  bool multiring = false;
  bool multidomain = false;
  bool multifield = false;
};

/// Multidomain: 1 ≠ 0 and no zero divisors. Multifield: 1 ≠ 0 and every
/// nonzero element invertible. `multiring` is the check_multiring verdict.
Classification classify(const FiniteMultiring& r);

/// Wraps a ring given by its tables as a multiring with singleton sums.
FiniteMultiring singleton_multiring(Carrier carrier, const std::vector<std::size_t>& add,
                                    std::vector<std::size_t> mul, std::size_t zero, std::size_t one);

}  // namespace mvalg
