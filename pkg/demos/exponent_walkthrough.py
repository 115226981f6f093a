#!/usr/bin/env python3
"""Primitive exponents: formulas, witnesses, and one refuted pair.

A strongly connected digraph with cycle gcd 1 is primitive: some power
of its adjacency matrix is strictly positive, and the least such power
is the exponent.  The fan and wheel families admit exact exponent
formulas once n reaches 10; this script checks them by brute walk
counting, then digs into the one recorded no-walk pair that walk
counting refutes.
"""

from digraph_spectra import (
    FamilySpec,
    alternating_fan_walks_length9,
    build_digraph,
    build_family,
    cycle_gcd,
    exponent,
    expected_exponent,
    expected_no_walk_pair,
    is_primitive,
    verify_walk_list,
    walk_count,
)

# -- formulas vs computation ------------------------------------------

print("family   n   exponent   formula   witness (lex-least zero of A^(e-1))")
for family in ("PDF", "kDF", "HDF", "ADW", "kDW"):
    for n in (10, 11, 12, 13):
        d = build_family(FamilySpec(family, n))
        res = exponent(d)
        formula = expected_exponent(family, n)
        mark = "ok" if res.exponent == formula else "MISMATCH"
        print(
            f"{family:6s} {n:3d} {res.exponent:8d} {formula:9d}   "
            f"{res.witness_pair}  {mark}"
        )

# Below n = 10 the formulas simply do not apply; the library returns
# None rather than extrapolating:
assert expected_exponent("kDF", 6) is None
assert exponent(build_family(FamilySpec("kDF", 6))).exponent == 11
print()

# The odd alternating fan is the outlier: exponent 9 for every odd
# n >= 7 regardless of order, because the hub recycles walks fast.
for n in (7, 9, 11, 13):
    res = exponent(build_family(FamilySpec("ADF", n)))
    print(f"ADF n={n:2d}: exponent {res.exponent}, witness {res.witness_pair}")

# explicit length-9 walks between every ordered vertex pair, written
# out move by move and replayed against the arc set
d7 = build_family(FamilySpec("ADF", 7))
cover = alternating_fan_walks_length9(7)
assert verify_walk_list(d7, list(cover.values()))
print("ADF n=7 walk cover:", len(cover), "pairs, e.g.", cover[(2, 5)])
print()

# -- the refuted pair -------------------------------------------------

# For the full fan the recorded no-walk pair at length n - 1 is
# (n - 1, 2).  But the hub loop makes that length reachable: step to
# the hub, idle on the loop, leave by the spoke to 2.
n = 10
d = build_family(FamilySpec("PDF", n))
pair = expected_no_walk_pair("PDF", n)
w = walk_count(d, n - 1)
print(f"PDF n={n}: recorded pair {pair}, walks of length {n - 1}:", w.entry(*pair))

walk = (n - 1, n, 1) + (1,) * (n - 5) + (2,)
assert verify_walk_list(d, [walk])
print("refuting walk:", " -> ".join(str(v) for v in walk))

# The genuinely zero entries of A^(n-1) sit in row 2: vertex 2 needs
# n - 1 steps just to crawl the rim back to the hub, so at length
# n - 1 it can reach nothing but vertex 1.
row2 = [w.entry(2, j) for j in range(1, n + 1)]
print("row 2 of A^(n-1):", row2)
assert row2 == [1] + [0] * (n - 1)

res = exponent(d)
print("exponent:", res.exponent, " lex-least zero pair:", res.witness_pair)
print()

# -- how large can an exponent get? -----------------------------------

# The n-cycle plus the single arc n -> 2 is the classical extremal
# case: exponent exactly (n - 1)^2 + 1.
for n in (4, 5, 6, 7):
    d = build_digraph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1), (n, 2)])
    assert is_primitive(d) and cycle_gcd(d) == 1
    res = exponent(d)
    print(f"cycle + chord, n={n}: exponent {res.exponent} = (n-1)^2 + 1 = {(n - 1) ** 2 + 1}")
    assert res.exponent == (n - 1) ** 2 + 1
