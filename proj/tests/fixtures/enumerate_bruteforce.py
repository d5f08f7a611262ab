#!/usr/bin/env python3
"""Brute-force enumeration of small multirings, multifields and multigroups.

Written independently of the C++ search: it walks whole table spaces and
filters by the axioms as stated, then canonicalizes by trying every
relabeling. Two axioms are built into the generators instead of filtered
for: multiring sum tables are generated symmetric (commutativity), and the
identity row of a multigroup is fixed to e*x = {x} (which is exactly what
"y in e*x iff x = y" says). Both are parametrizations, not pruning
heuristics.

Prints one canonical code per isomorphism class, sorted. Code format:
  multiring   z<zero>o<one>|n<neg>|m<mul>|a<add>
  multigroup  i<identity>|r<inv>|o<op>
one decimal digit per map entry, one hex digit (bitmask) per cell.
"""

import itertools
import sys


def subsets(n):
    return list(range(1, 1 << n))


def members(mask, n):
    return [x for x in range(n) if mask >> x & 1]


# ---- multigroups ------------------------------------------------------

def multigroup_ok(n, op, inv, e):
    m = lambda x, y: op[x * n + y]
    for x in range(n):
        # y in e*x iff x = y
        if m(e, x) != 1 << x:
            return False
    for x in range(n):
        for y in range(n):
            for z in members(m(x, y), n):
                if not (m(z, inv[y]) >> x & 1) or not (m(inv[x], z) >> y & 1):
                    return False
    for x in range(n):
        for y in range(n):
            for z in range(n):
                left = 0
                for t in members(m(x, y), n):
                    left |= m(t, z)
                right = 0
                for w in members(m(y, z), n):
                    right |= m(x, w)
                if left != right:
                    return False
    return True


def multigroup_code(n, op, inv, e):
    return "i%d|r%s|o%s" % (e, "".join(map(str, inv)), "".join("%x" % c for c in op))


def relabel_mask(mask, p, n):
    out = 0
    for x in members(mask, n):
        out |= 1 << p[x]
    return out


def canonical_multigroup(n, op, inv, e):
    best = None
    for p in itertools.permutations(range(n)):
        op2 = [0] * (n * n)
        inv2 = [0] * n
        for a in range(n):
            inv2[p[a]] = p[inv[a]]
            for b in range(n):
                op2[p[a] * n + p[b]] = relabel_mask(op[a * n + b], p, n)
        code = multigroup_code(n, op2, inv2, p[e])
        if best is None or code < best:
            best = code
    return best


def enumerate_multigroups(n):
    codes = set()
    cells = subsets(n)
    for e in range(n):
        # The identity row is fixed to {x} (axiom: y in e*x iff x = y); every
        # other cell ranges over all non-empty subsets.
        for rest in itertools.product(cells, repeat=(n - 1) * n):
            tab = list(rest[: e * n]) + [1 << x for x in range(n)] + list(rest[e * n:])
            for inv in itertools.product(range(n), repeat=n):
                if multigroup_ok(n, tab, inv, e):
                    codes.add(canonical_multigroup(n, tab, inv, e))
    return codes


# ---- multirings -------------------------------------------------------

def mul_ok(n, mul, zero, one):
    m = lambda a, b: mul[a * n + b]
    for a in range(n):
        if m(one, a) != a or m(a, zero) != zero:
            return False
        for b in range(n):
            if m(a, b) != m(b, a):
                return False
            for c in range(n):
                if m(m(a, b), c) != m(a, m(b, c)):
                    return False
    return True


def symmetric_tables(n, cells):
    pairs = [(a, b) for a in range(n) for b in range(a, n)]
    for choice in itertools.product(cells, repeat=len(pairs)):
        tab = [0] * (n * n)
        for (a, b), c in zip(pairs, choice):
            tab[a * n + b] = tab[b * n + a] = c
        yield tab


def weakly_distributive(n, add, mul):
    for a in range(n):
        for b in range(n):
            for d in range(n):
                rhs = add[mul[a * n + d] * n + mul[b * n + d]]
                for c in members(add[a * n + b], n):
                    if not (rhs >> mul[c * n + d] & 1):
                        return False
    return True


def multiring_code(n, zero, one, neg, mul, add):
    return "z%do%d|n%s|m%s|a%s" % (zero, one, "".join(map(str, neg)), "".join(map(str, mul)),
                                   "".join("%x" % c for c in add))


def canonical_multiring(n, zero, one, neg, mul, add):
    best = None
    for p in itertools.permutations(range(n)):
        neg2 = [0] * n
        mul2 = [0] * (n * n)
        add2 = [0] * (n * n)
        for a in range(n):
            neg2[p[a]] = p[neg[a]]
            for b in range(n):
                mul2[p[a] * n + p[b]] = p[mul[a * n + b]]
                add2[p[a] * n + p[b]] = relabel_mask(add[a * n + b], p, n)
        code = multiring_code(n, p[zero], p[one], neg2, mul2, add2)
        if best is None or code < best:
            best = code
    return best


def enumerate_multirings(n, fields):
    cells = subsets(n)
    # Additive parts: (zero, add, neg) forming a commutative multigroup.
    additive = []
    for zero in range(n):
        for add in symmetric_tables(n, cells):
            if any(add[zero * n + x] != 1 << x for x in range(n)):
                continue
            for neg in itertools.product(range(n), repeat=n):
                if multigroup_ok(n, add, neg, zero):
                    additive.append((zero, add, neg))
    # Multiplicative parts: (zero, one, mul).
    multiplicative = []
    for zero in range(n):
        for one in range(n):
            for mul in itertools.product(range(n), repeat=n * n):
                if mul_ok(n, mul, zero, one):
                    multiplicative.append((zero, one, mul))
    codes = set()
    for zero, add, neg in additive:
        for zero2, one, mul in multiplicative:
            if zero2 != zero or not weakly_distributive(n, add, mul):
                continue
            if fields:
                if one == zero:
                    continue
                if any(all(mul[a * n + b] != one for b in range(n)) for a in range(n) if a != zero):
                    continue
            codes.add(canonical_multiring(n, zero, one, list(neg), list(mul), add))
    return codes


def main():
    if len(sys.argv) != 3:
        sys.exit("usage: enumerate_bruteforce.py multigroup|multiring|multifield ORDER")
    kind, n = sys.argv[1], int(sys.argv[2])
    if kind == "multigroup":
        codes = enumerate_multigroups(n)
    elif kind in ("multiring", "multifield"):
        codes = enumerate_multirings(n, kind == "multifield")
    else:
        sys.exit("unknown kind " + kind)
    for c in sorted(codes):
        print(c)


if __name__ == "__main__":
    main()
