#include "mvalg/oracle.hpp"

#include <array>
#include <functional>

#include "mvalg/error.hpp"

namespace mvalg {

namespace {

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

constexpr std::int64_t kMaxNumerator = 1000;
constexpr std::int64_t kMaxDenominator = 64;

// Uniform point of [lo, hi] on a grid of 64 steps, endpoints included.
Rational grid_point(const Rational& lo, const Rational& hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> step(0, 64);
  return lo + (hi - lo) * Rational(step(rng), 64);
}

}  // namespace

std::string to_string(const Rational& q) { return q.str(); }

Rational TriangleOracle::lower(const Rational& a, const Rational& b) const { return abs_q(a - b); }

bool TriangleOracle::in_sum(const Rational& c, const Rational& a, const Rational& b) const {
  if (a < 0 || b < 0 || c < 0) throw InputError("triangle oracle: negative argument");
  return lower(a, b) <= c && c <= upper(a, b);
}

std::optional<Rational> TriangleOracle::inverse(const Rational& a) const {
  if (a == 0) return std::nullopt;
  return Rational(1) / a;
}

Rational TriangleOracle::sample(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::int64_t> num(0, kMaxNumerator);
  std::uniform_int_distribution<std::int64_t> den(1, kMaxDenominator);
  // Small values are where the absolute value matters; bias a quarter of the
  // draws toward them.
  std::uniform_int_distribution<int> coin(0, 3);
  std::int64_t p = coin(rng) == 0 ? num(rng) % 8 : num(rng);
  return Rational(p, den(rng));
}

Rational TriangleOracle::sample_sum(const Rational& a, const Rational& b, std::mt19937_64& rng) const {
  Rational lo = lower(a, b);
  if (lo < 0) lo = 0;
  return grid_point(lo, upper(a, b), rng);
}

// x ∈ t + c pins t to an interval whose ends are among |x−c|, x+c; a+b is an
// interval with ends lower(a,b), a+b. The extreme feasible t is one of these
// candidates, and each candidate is re-verified through in_sum.
std::optional<Rational> TriangleOracle::left_assoc_witness(const Rational& x, const Rational& a, const Rational& b,
                                                           const Rational& c) const {
  const std::array<Rational, 5> candidates = {lower(a, b), upper(a, b), abs_q(x - c), x + c, abs_q(c - x)};
  for (const Rational& t : candidates) {
    if (t >= 0 && in_sum(t, a, b) && in_sum(x, t, c)) return t;
  }
  return std::nullopt;
}

std::optional<Rational> TriangleOracle::right_assoc_witness(const Rational& x, const Rational& a, const Rational& b,
                                                            const Rational& c) const {
  const std::array<Rational, 5> candidates = {lower(b, c), upper(b, c), abs_q(x - a), x + a, abs_q(a - x)};
  for (const Rational& s : candidates) {
    if (s >= 0 && in_sum(s, b, c) && in_sum(x, a, s)) return s;
  }
  return std::nullopt;
}

namespace {

using Labels = std::vector<std::string>;

struct Trial {
  bool ok = true;
  Labels witness;
  std::string detail;
};

Labels named(std::initializer_list<std::pair<const char*, Rational>> values) {
  Labels out;
  for (const auto& [k, v] : values) out.push_back(std::string(k) + "=" + to_string(v));
  return out;
}

Trial trial_commutativity(const MembershipOracle& o, std::mt19937_64& rng) {
  Rational a = o.sample(rng), b = o.sample(rng);
  Rational c = (rng() & 1U) ? o.sample_sum(a, b, rng) : o.sample(rng);
  if (o.in_sum(c, a, b) != o.in_sum(c, b, a)) return {false, named({{"a", a}, {"b", b}, {"c", c}}), "c in a+b iff c in b+a"};
  if (o.mul(a, b) != o.mul(b, a)) return {false, named({{"a", a}, {"b", b}}), "ab = ba"};
  return {};
}

Trial trial_reversibility(const MembershipOracle& o, std::mt19937_64& rng) {
  Rational a = o.sample(rng), b = o.sample(rng);
  Rational c = o.sample_sum(a, b, rng);
  if (!o.in_sum(c, a, b)) return {false, named({{"a", a}, {"b", b}, {"c", c}}), "sampled element not in a+b"};
  if (!o.in_sum(a, c, o.neg(b)) || !o.in_sum(b, o.neg(a), c)) {
    return {false, named({{"a", a}, {"b", b}, {"c", c}}), "c in a+b implies a in c-b and b in -a+c"};
  }
  return {};
}

Trial trial_associativity(const MembershipOracle& o, std::mt19937_64& rng) {
  Rational a = o.sample(rng), b = o.sample(rng), c = o.sample(rng);
  Rational x;
  switch (rng() % 3) {
    case 0:
      x = o.sample_sum(o.sample_sum(a, b, rng), c, rng);
      break;
    case 1:
      x = o.sample_sum(a, o.sample_sum(b, c, rng), rng);
      break;
    default:
      x = o.sample(rng);
  }
  bool left = o.left_assoc_witness(x, a, b, c).has_value();
  bool right = o.right_assoc_witness(x, a, b, c).has_value();
  if (left != right) {
    return {false, named({{"a", a}, {"b", b}, {"c", c}, {"x", x}}), "x in (a+b)+c iff x in a+(b+c)"};
  }
  return {};
}

Trial trial_distributivity(const MembershipOracle& o, std::mt19937_64& rng) {
  Rational a = o.sample(rng), b = o.sample(rng), d = o.sample(rng);
  Rational t = o.sample_sum(a, b, rng);
  if (!o.in_sum(o.mul(t, d), o.mul(a, d), o.mul(b, d))) {
    return {false, named({{"a", a}, {"b", b}, {"d", d}, {"t", t}}), "t in a+b implies td in ad+bd"};
  }
  if (auto inv = o.inverse(d)) {
    Rational u = o.sample_sum(o.mul(a, d), o.mul(b, d), rng);
    if (!o.in_sum(o.mul(u, *inv), a, b)) {
      return {false, named({{"a", a}, {"b", b}, {"d", d}, {"u", u}}), "u in ad+bd implies u/d in a+b"};
    }
  }
  return {};
}

Trial trial_inverse(const MembershipOracle& o, std::mt19937_64& rng) {
  Rational a = o.sample(rng);
  if (a == o.zero()) return {};
  auto inv = o.inverse(a);
  if (!inv || o.mul(a, *inv) != o.one()) return {false, named({{"a", a}}), "every nonzero a has a^-1 with a a^-1 = 1"};
  if (!o.in_sum(o.zero(), a, o.neg(a))) return {false, named({{"a", a}}), "0 in a + (-a)"};
  return {};
}

}  // namespace

CheckReport sampled_check(const MembershipOracle& oracle, std::string_view axiom, std::size_t trials,
                          std::uint64_t seed) {
  std::function<Trial(const MembershipOracle&, std::mt19937_64&)> run;
  if (axiom == "commutativity") run = trial_commutativity;
  else if (axiom == "associativity") run = trial_associativity;
  else if (axiom == "reversibility") run = trial_reversibility;
  else if (axiom == "distributivity") run = trial_distributivity;
  else if (axiom == "inverse") run = trial_inverse;
  else throw InputError("unknown sampled axiom '" + std::string(axiom) + "'");

  std::mt19937_64 rng(seed);
  CheckReport report;
  const std::string id = "sampled." + std::string(axiom);
  for (std::size_t i = 0; i < trials; ++i) {
    Trial t;
    try {
      t = run(oracle, rng);
    } catch (const InputError&) {
      throw;
    } catch (const std::exception& e) {
      throw InputError(oracle.name() + " oracle: " + e.what());
    }
    if (!t.ok) {
      report.fail_text(id, t.witness, t.detail + " (trial " + std::to_string(i + 1) + ")");
      return report;
    }
  }
  report.pass(id, "statistical: " + std::to_string(trials) + " trials, seed " + std::to_string(seed) +
                      ", no violation drawn");
  return report;
}

}  // namespace mvalg
