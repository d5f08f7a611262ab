#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "mvalg/report.hpp"

namespace mvalg {

using Rational = boost::multiprecision::cpp_rational;

/// Membership-level view of a multifield whose carrier may be infinite.
/// Implementations must be deterministic for fixed inputs; randomness only
/// enters through the generator passed to the sampling hooks.
class MembershipOracle {
 public:
  virtual ~MembershipOracle() = default;

  virtual std::string name() const = 0;
  /// Is c ∈ a + b?
  virtual bool in_sum(const Rational& c, const Rational& a, const Rational& b) const = 0;
  virtual Rational mul(const Rational& a, const Rational& b) const = 0;
  virtual Rational neg(const Rational& a) const = 0;
  virtual Rational zero() const = 0;
  virtual Rational one() const = 0;
  virtual std::optional<Rational> inverse(const Rational& a) const = 0;

  /// A random carrier element with bounded numerator and denominator.
  virtual Rational sample(std::mt19937_64& rng) const = 0;
  /// A random element of a + b.
  virtual Rational sample_sum(const Rational& a, const Rational& b, std::mt19937_64& rng) const = 0;
  /// Some t ∈ a+b with x ∈ t+c, if one exists.
  virtual std::optional<Rational> left_assoc_witness(const Rational& x, const Rational& a, const Rational& b,
                                                     const Rational& c) const = 0;
  /// Some s ∈ b+c with x ∈ a+s, if one exists.
  virtual std::optional<Rational> right_assoc_witness(const Rational& x, const Rational& a, const Rational& b,
                                                      const Rational& c) const = 0;
};

/// Non-negative rationals with a + b = [|a−b|, a+b], −a = a and the usual
/// product.
class TriangleOracle : public MembershipOracle {
 public:
  std::string name() const override { return "triangle"; }
  bool in_sum(const Rational& c, const Rational& a, const Rational& b) const override;
  Rational mul(const Rational& a, const Rational& b) const override { return a * b; }
  Rational neg(const Rational& a) const override { return a; }
  Rational zero() const override { return 0; }
  Rational one() const override { return 1; }
  std::optional<Rational> inverse(const Rational& a) const override;

  Rational sample(std::mt19937_64& rng) const override;
  Rational sample_sum(const Rational& a, const Rational& b, std::mt19937_64& rng) const override;
  std::optional<Rational> left_assoc_witness(const Rational& x, const Rational& a, const Rational& b,
                                             const Rational& c) const override;
  std::optional<Rational> right_assoc_witness(const Rational& x, const Rational& a, const Rational& b,
                                              const Rational& c) const override;

 protected:
  /// Endpoints of a + b.
  virtual Rational lower(const Rational& a, const Rational& b) const;
  Rational upper(const Rational& a, const Rational& b) const { return a + b; }
};

inline constexpr std::string_view kSampledAxioms[] = {"commutativity", "associativity", "reversibility",
                                                      "distributivity", "inverse"};

/// Runs `trials` random instances of one axiom. A failure carries concrete
/// rational witnesses; a pass only means no violation was drawn.
CheckReport sampled_check(const MembershipOracle& oracle, std::string_view axiom, std::size_t trials,
                          std::uint64_t seed);

std::string to_string(const Rational& q);

}  // namespace mvalg
