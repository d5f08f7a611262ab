#include "mvalg/multigroup.hpp"

#include <string>

#include "mvalg/error.hpp"

namespace mvalg {

namespace detail {

void validate_hyperop_table(std::size_t n, std::span<const ElementSet> table, std::string_view what,
                            const Carrier& carrier) {
  if (table.size() != n * n) {
    throw InputError(std::string(what) + " table has " + std::to_string(table.size()) + " cells, expected " +
                     std::to_string(n * n));
  }
  const ElementSet all = ElementSet::full(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ElementSet cell = table[i * n + j];
      if (cell.empty()) {
        throw InputError("empty hyperoperation cell at (" + carrier.name(i) + "," + carrier.name(j) + ")");
      }
      if (!cell.subset_of(all)) {
        throw InputError(std::string(what) + " cell (" + carrier.name(i) + "," + carrier.name(j) +
                         ") has an out-of-range element");
      }
    }
  }
}

void validate_map(std::size_t n, std::span<const std::size_t> map, std::string_view what) {
  if (map.size() != n) {
    throw InputError(std::string(what) + " has " + std::to_string(map.size()) + " entries, expected " +
                     std::to_string(n));
  }
  for (std::size_t v : map) {
    if (v >= n) throw InputError(std::string(what) + " maps to out-of-range index " + std::to_string(v));
  }
}

void check_hyperop_axioms(const Carrier& carrier, std::span<const ElementSet> table,
                          std::span<const std::size_t> inv, std::size_t identity, std::string_view prefix,
                          CheckReport& report) {
  const std::size_t n = carrier.size();
  auto op = [&](std::size_t a, std::size_t b) { return table[a * n + b]; };
  auto id = [&](std::string_view name) { return std::string(prefix) + std::string(name); };

  {
    std::vector<std::size_t> witness;
    for (std::size_t x = 0; x < n && witness.empty(); ++x) {
      for (std::size_t y = 0; y < n && witness.empty(); ++y) {
        for (std::size_t z : op(x, y)) {
          if (!op(z, inv[y]).contains(x) || !op(inv[x], z).contains(y)) {
            witness = {x, y, z};
            break;
          }
        }
      }
    }
    report.verdict(id("i.reversibility"), witness.empty(), carrier, witness,
                   "z in x*y implies x in z*r(y) and y in r(x)*z");
  }
  {
    // Witness (y, x): y in 1*x disagrees with x = y.
    std::vector<std::size_t> witness;
    for (std::size_t y = 0; y < n && witness.empty(); ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (op(identity, x).contains(y) != (x == y)) {
          witness = {y, x};
          break;
        }
      }
    }
    report.verdict(id("ii.identity"), witness.empty(), carrier, witness, "y in 1*x iff x = y");
  }
  {
    std::vector<std::size_t> witness;
    for (std::size_t x = 0; x < n && witness.empty(); ++x) {
      for (std::size_t y = 0; y < n && witness.empty(); ++y) {
        const ElementSet xy = op(x, y);
        for (std::size_t z = 0; z < n; ++z) {
          ElementSet left;
          for (std::size_t t : xy) left |= op(t, z);
          ElementSet right;
          for (std::size_t w : op(y, z)) right |= op(x, w);
          if (left != right) {
            witness = {x, y, z};
            break;
          }
        }
      }
    }
    report.verdict(id("iii.associativity"), witness.empty(), carrier, witness, "(x*y)*z = x*(y*z)");
  }
  {
    std::vector<std::size_t> witness;
    for (std::size_t x = 0; x < n && witness.empty(); ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (op(x, y) != op(y, x)) {
          witness = {x, y};
          break;
        }
      }
    }
    report.verdict(id("iv.commutativity"), witness.empty(), carrier, witness, "x*y = y*x");
  }
}

}  // namespace detail

FiniteMultigroup::FiniteMultigroup(Carrier carrier, std::vector<ElementSet> op, std::vector<std::size_t> inv,
                                   std::size_t identity)
    : carrier_(std::move(carrier)), op_(std::move(op)), inv_(std::move(inv)), identity_(identity) {
  const std::size_t n = carrier_.size();
  detail::validate_hyperop_table(n, op_, "hyperoperation", carrier_);
  detail::validate_map(n, inv_, "inverse map");
  if (identity_ >= n) throw InputError("identity index out of range");
}

FiniteMultigroup FiniteMultigroup::with_cell(std::size_t x, std::size_t y, ElementSet cell) const {
  auto op = op_;
  op.at(x * size() + y) = cell;
  return FiniteMultigroup(carrier_, std::move(op), inv_, identity_);
}

RelationalMultigroup::RelationalMultigroup(Carrier carrier, std::vector<ElementSet> cells,
                                           std::vector<std::size_t> inv, std::size_t identity)
    : carrier_(std::move(carrier)), cells_(std::move(cells)), inv_(std::move(inv)), identity_(identity) {
  const std::size_t n = carrier_.size();
  if (cells_.size() != n * n) throw InputError("relation table has the wrong number of cells");
  for (ElementSet c : cells_) {
    if (!c.subset_of(ElementSet::full(n))) throw InputError("relation has an out-of-range triple");
  }
  detail::validate_map(n, inv_, "inverse map");
  if (identity_ >= n) throw InputError("identity index out of range");
}

std::size_t RelationalMultigroup::triple_count() const {
  std::size_t total = 0;
  for (ElementSet c : cells_) total += c.size();
  return total;
}

std::vector<std::array<std::size_t, 3>> RelationalMultigroup::triples() const {
  std::vector<std::array<std::size_t, 3>> out;
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      for (std::size_t z : cell(x, y)) out.push_back({x, y, z});
    }
  }
  return out;
}

RelationalMultigroup RelationalMultigroup::with_triple(std::size_t x, std::size_t y, std::size_t z,
                                                       bool present) const {
  auto cells = cells_;
  ElementSet& c = cells.at(x * size() + y);
  if (present) {
    c.insert(z);
  } else {
    c.erase(z);
  }
  return RelationalMultigroup(carrier_, std::move(cells), inv_, identity_);
}

CheckReport check_multigroup(const FiniteMultigroup& m) {
  CheckReport report;
  detail::check_hyperop_axioms(m.carrier(), m.table(), m.inv_table(), m.identity(), "", report);
  return report;
}

RelationalMultigroup to_relational(const FiniteMultigroup& m) {
  return RelationalMultigroup(m.carrier(), std::vector<ElementSet>(m.table().begin(), m.table().end()),
                              std::vector<std::size_t>(m.inv_table().begin(), m.inv_table().end()),
                              m.identity());
}

FiniteMultigroup from_relational(const RelationalMultigroup& r) {
  const std::size_t n = r.size();
  std::vector<ElementSet> op(n * n);
  std::vector<std::size_t> inv(n);
  for (std::size_t a = 0; a < n; ++a) {
    inv[a] = r.inv(a);
    for (std::size_t b = 0; b < n; ++b) {
      if (r.cell(a, b).empty()) {
        throw InputError("non-total hyperoperation: no triple (" + r.carrier().name(a) + "," +
                         r.carrier().name(b) + ",_)");
      }
      op[a * n + b] = r.cell(a, b);
    }
  }
  return FiniteMultigroup(r.carrier(), std::move(op), std::move(inv), r.identity());
}

namespace {

// Union of cell(p, w) over p in cell(u, v): the "(u v) w" side of III.
ElementSet left_assoc(const RelationalMultigroup& r, std::size_t u, std::size_t v, std::size_t w) {
  ElementSet out;
  for (std::size_t p : r.cell(u, v)) out |= r.cell(p, w);
  return out;
}

ElementSet right_assoc(const RelationalMultigroup& r, std::size_t u, std::size_t v, std::size_t w) {
  ElementSet out;
  for (std::size_t q : r.cell(v, w)) out |= r.cell(u, q);
  return out;
}

}  // namespace

CheckReport check_relational_axioms(const RelationalMultigroup& r) {
  CheckReport report;
  const std::size_t n = r.size();
  const Carrier& c = r.carrier();
  {
    std::vector<std::size_t> w;
    for (const auto& [x, y, z] : r.triples()) {
      if (!r.contains(z, r.inv(y), x) || !r.contains(r.inv(x), z, y)) {
        w = {x, y, z};
        break;
      }
    }
    report.verdict("I.reversibility", w.empty(), c, w, "(x,y,z) implies (z,r(y),x) and (r(x),z,y)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (r.contains(x, r.identity(), y) != (x == y)) {
          w = {x, y};
          break;
        }
      }
    }
    report.verdict("II.identity", w.empty(), c, w, "(x,i,y) iff x = y");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t u = 0; u < n && w.empty(); ++u) {
      for (std::size_t v = 0; v < n && w.empty(); ++v) {
        for (std::size_t ww = 0; ww < n; ++ww) {
          ElementSet missing = left_assoc(r, u, v, ww) - right_assoc(r, u, v, ww);
          if (!missing.empty()) {
            w = {u, v, ww, missing.first()};
            break;
          }
        }
      }
    }
    report.verdict("III.associativity", w.empty(), c, w,
                   "(u,v,p),(p,w,x) implies some q with (v,w,q),(u,q,x)");
  }
  {
    std::vector<std::size_t> w;
    for (const auto& [x, y, z] : r.triples()) {
      if (!r.contains(y, x, z)) {
        w = {x, y, z};
        break;
      }
    }
    report.verdict("IV.commutativity", w.empty(), c, w, "(x,y,z) iff (y,x,z)");
  }
  return report;
}

CheckReport check_relational_consequences(const RelationalMultigroup& r) {
  CheckReport axioms = check_relational_axioms(r);
  CheckReport report;
  const Carrier& c = r.carrier();
  const std::size_t n = r.size();
  const char* ids[] = {"a.inverse_of_identity", "b.involution",     "c.triple_inversion",
                       "d.left_identity",       "e.reassociation", "f.totality"};
  std::vector<std::size_t> bad;
  for (const char* axiom : {"I.reversibility", "II.identity", "III.associativity"}) {
    if (const Verdict* v = axioms.find(axiom); v != nullptr && !v->passed()) {
      Verdict pre = *v;
      pre.id = std::string("precondition.") + axiom;
      report.add(pre);
      bad.push_back(0);
    }
  }
  if (!bad.empty()) {
    for (const char* id : ids) report.skip(id, "axioms I-III do not hold");
    return report;
  }

  const std::size_t i = r.identity();
  report.verdict(ids[0], r.inv(i) == i, c, {i}, "r(i) = i");
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n; ++x) {
      if (r.inv(r.inv(x)) != x) {
        w = {x};
        break;
      }
    }
    report.verdict(ids[1], w.empty(), c, w, "r(r(x)) = x");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n && w.empty(); ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (r.contains(x, y, z) != r.contains(r.inv(y), r.inv(x), r.inv(z))) {
            w = {x, y, z};
            break;
          }
        }
      }
    }
    report.verdict(ids[2], w.empty(), c, w, "(x,y,z) iff (r(y),r(x),r(z))");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t x = 0; x < n && w.empty(); ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (r.contains(i, x, y) != (x == y)) {
          w = {x, y};
          break;
        }
      }
    }
    report.verdict(ids[3], w.empty(), c, w, "(i,x,y) iff x = y");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t u = 0; u < n && w.empty(); ++u) {
      for (std::size_t v = 0; v < n && w.empty(); ++v) {
        for (std::size_t ww = 0; ww < n; ++ww) {
          ElementSet missing = right_assoc(r, u, v, ww) - left_assoc(r, u, v, ww);
          if (!missing.empty()) {
            w = {u, v, ww, missing.first()};
            break;
          }
        }
      }
    }
    report.verdict(ids[4], w.empty(), c, w, "(v,w,q),(u,q,x) implies some p with (u,v,p),(p,w,x)");
  }
  {
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (r.cell(a, b).empty()) {
          w = {a, b};
          break;
        }
      }
    }
    report.verdict(ids[5], w.empty(), c, w, "every (a,b) has some (a,b,c)");
  }
  return report;
}

}  // namespace mvalg
