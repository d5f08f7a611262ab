#include "mvalg/multiring.hpp"

#include "mvalg/error.hpp"

namespace mvalg {

FiniteMultiring::FiniteMultiring(Carrier carrier, std::vector<ElementSet> add, std::vector<std::size_t> mul,
                                 std::vector<std::size_t> neg, std::size_t zero, std::size_t one)
    : carrier_(std::move(carrier)),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(std::move(neg)),
      zero_(zero),
      one_(one) {
  const std::size_t n = carrier_.size();
  detail::validate_hyperop_table(n, add_, "addition", carrier_);
  if (mul_.size() != n * n) throw InputError("multiplication table has the wrong number of cells");
  for (std::size_t v : mul_) {
    if (v >= n) throw InputError("multiplication table has an out-of-range entry");
  }
  detail::validate_map(n, neg_, "negation map");
  if (zero_ >= n) throw InputError("zero index out of range");
  if (one_ >= n) throw InputError("one index out of range");
}

ElementSet FiniteMultiring::add_sets(ElementSet x, ElementSet y) const {
  ElementSet out;
  for (std::size_t a : x) {
    for (std::size_t b : y) out |= add(a, b);
  }
  return out;
}

ElementSet FiniteMultiring::scale(ElementSet x, std::size_t d) const {
  ElementSet out;
  for (std::size_t a : x) out.insert(mul(d, a));
  return out;
}

std::size_t FiniteMultiring::inverse(std::size_t a) const {
  for (std::size_t b = 0; b < size(); ++b) {
    if (mul(a, b) == one_) return b;
  }
  return size();
}

ElementSet FiniteMultiring::units() const {
  ElementSet out;
  for (std::size_t a = 0; a < size(); ++a) {
    if (inverse(a) < size()) out.insert(a);
  }
  return out;
}

FiniteMultiring FiniteMultiring::with_add_cell(std::size_t a, std::size_t b, ElementSet cell) const {
  auto add = add_;
  add.at(a * size() + b) = cell;
  return FiniteMultiring(carrier_, std::move(add), mul_, neg_, zero_, one_);
}

FiniteMultiring FiniteMultiring::with_mul_cell(std::size_t a, std::size_t b, std::size_t value) const {
  auto mul = mul_;
  mul.at(a * size() + b) = value;
  return FiniteMultiring(carrier_, add_, std::move(mul), neg_, zero_, one_);
}

FiniteMultiring FiniteMultiring::relabeled(Carrier carrier) const {
  if (carrier.size() != size()) throw InputError("relabeling changes the carrier size");
  return FiniteMultiring(std::move(carrier), add_, mul_, neg_, zero_, one_);
}

FiniteMultigroup FiniteMultiring::additive_multigroup() const { return FiniteMultigroup(carrier_, add_, neg_, zero_); }

bool same_tables_up_to_order(const FiniteMultiring& a, const FiniteMultiring& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return false;
  std::vector<std::size_t> to_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto j = b.carrier().find(a.name(i));
    if (!j) return false;
    to_b[i] = *j;
  }
  auto map_set = [&](ElementSet s) {
    ElementSet out;
    for (std::size_t i : s) out.insert(to_b[i]);
    return out;
  };
  if (to_b[a.zero()] != b.zero() || to_b[a.one()] != b.one()) return false;
  for (std::size_t x = 0; x < n; ++x) {
    if (to_b[a.neg(x)] != b.neg(to_b[x])) return false;
    for (std::size_t y = 0; y < n; ++y) {
      if (to_b[a.mul(x, y)] != b.mul(to_b[x], to_b[y])) return false;
      if (map_set(a.add(x, y)) != b.add(to_b[x], to_b[y])) return false;
    }
  }
  return true;
}

Verdict full_distributivity(const FiniteMultiring& r) {
  const std::size_t n = r.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t d = 0; d < n; ++d) {
        if (r.scale(r.add(a, b), d) != r.add(r.mul(a, d), r.mul(b, d))) {
          CheckReport tmp;
          tmp.fail("full_distributivity", r.carrier(), {a, b, d}, "(a+b)d = ad+bd");
          return tmp.verdicts().front();
        }
      }
    }
  }
  Verdict v;
  v.id = "full_distributivity";
  v.detail = "(a+b)d = ad+bd";
  return v;
}

CheckReport check_multiring(const FiniteMultiring& r) {
  CheckReport report;
  const std::size_t n = r.size();
  const Carrier& c = r.carrier();
  detail::check_hyperop_axioms(c, r.add_table(), r.neg_table(), r.zero(), "add.", report);

  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        for (std::size_t d = 0; d < n; ++d) {
          if (r.mul(r.mul(a, b), d) != r.mul(a, r.mul(b, d))) {
            w = {a, b, d};
            break;
          }
        }
      }
    }
    report.verdict("mul.associativity", w.empty(), c, w, "(ab)d = a(bd)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (r.mul(a, b) != r.mul(b, a)) {
          w = {a, b};
          break;
        }
      }
    }
    report.verdict("mul.commutativity", w.empty(), c, w, "ab = ba");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n; ++a) {
      if (r.mul(r.one(), a) != a || r.mul(a, r.one()) != a) {
        w = {a};
        break;
      }
    }
    report.verdict("mul.identity", w.empty(), c, w, "1a = a");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n; ++a) {
      if (r.mul(a, r.zero()) != r.zero() || r.mul(r.zero(), a) != r.zero()) {
        w = {a};
        break;
      }
    }
    report.verdict("zero.absorption", w.empty(), c, w, "a0 = 0");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        for (std::size_t d = 0; d < n; ++d) {
          if (!r.scale(r.add(a, b), d).subset_of(r.add(r.mul(a, d), r.mul(b, d)))) {
            w = {a, b, d};
            break;
          }
        }
      }
    }
    report.verdict("weak_distributivity", w.empty(), c, w, "(a+b)d ⊆ ad+bd");
  }
  report.inform(full_distributivity(r));
  return report;
}

Classification classify(const FiniteMultiring& r) {
  Classification out;
  out.multiring = check_multiring(r).overall();
  if (r.one() == r.zero()) return out;
  bool domain = true;
  for (std::size_t a : r.nonzero()) {
    for (std::size_t b : r.nonzero()) {
      if (r.mul(a, b) == r.zero()) domain = false;
    }
  }
  out.multidomain = domain;
  out.multifield = r.nonzero().subset_of(r.units());
  return out;
}

FiniteMultiring singleton_multiring(Carrier carrier, const std::vector<std::size_t>& add,
                                    std::vector<std::size_t> mul, std::size_t zero, std::size_t one) {
  const std::size_t n = carrier.size();
  if (add.size() != n * n) throw InputError("addition table has the wrong number of cells");
  std::vector<ElementSet> cells(n * n);
  std::vector<std::size_t> neg(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (add[a * n + b] >= n) throw InputError("addition table has an out-of-range entry");
      cells[a * n + b] = ElementSet::singleton(add[a * n + b]);
      if (add[a * n + b] == zero && neg[a] == n) neg[a] = b;
    }
    if (neg[a] == n) throw InputError("element '" + carrier.name(a) + "' has no additive inverse");
  }
  return FiniteMultiring(std::move(carrier), std::move(cells), std::move(mul), std::move(neg), zero, one);
}

}  // namespace mvalg
