"""Complement spectra and distinct-eigenvalue certificates.

The complement of the directed n-cycle, and of the wheel whose hub
reaches every rim vertex, both factor over cyclotomic polynomials after
the shift x -> -(x + 1).  For the chorded-cycle and fan families no such
factorization is available; there the squarefreeness of the
characteristic polynomial is certified with exact gcds, over Q or
(cheaper, one-sided) mod 2.
"""

from digraph_spectra import (
    FamilySpec,
    IntPolynomial,
    build_family,
    charpoly_exact,
    complement,
    complement_closed_form,
    cyclotomic,
    distinctness_check,
    exponent,
    parse_family_spec,
)

# -- cycle complement -------------------------------------------------

n = 7
dcc = build_family(FamilySpec("DCc", n))
phi = charpoly_exact(dcc)
print(f"complement of the directed {n}-cycle")
print("  charpoly     ", phi)
print("  closed form  ", complement_closed_form("DCc", n))

# (x - (n - 2)) times the degree-(n-1) cyclotomic part, shifted:
shifted = cyclotomic(n).substitute_linear(-1, -1)
print("  Phi_7(-(x+1))", shifted)
assert phi == shifted * (IntPolynomial.x() - (n - 2))
print("  factors as (x - 5) * Phi_7(-(x+1))")

# complement() really is an involution on loopless simple digraphs
assert complement(complement(dcc)) == dcc

# dense digraphs reach everything almost immediately
res = exponent(dcc)
print("  exponent     ", res.exponent, "(every pair joined by walks of any length >= 2)")
print()

# -- wheel complement -------------------------------------------------

# The hub of the wheel complement receives no arcs, so one factor of
# the cycle-complement pattern drops out and the matrix goes derogatory
# at odd orders.  The charpoly still lands one shift away from a
# cyclotomic product.
for n in (8, 9):
    udwc = build_family(FamilySpec("UDWc", n))
    print(f"UDWc n={n}: {charpoly_exact(udwc)}")
print()

# -- distinct eigenvalues by exact gcd --------------------------------

for text, method in [
    ("family=DCn_m n=9 m=5", "gcdQ"),
    ("family=DCn_i_kpjpi n=10 j=3", "gcdQ"),
    ("family=DCn_i_nmi n=11", "gcdF2"),
    ("family=ADF n=9", "gcdF2"),
    ("family=ADW n=11", "cyclotomic"),
    ("family=RADW n=11", "cyclotomic"),
]:
    out = distinctness_check(parse_family_spec(text), method)
    print(f"{out['spec']:30s} {method:10s} verdict={out['verdict']}")
    if method == "gcdQ":
        print(f"{'':30s} gcd(psi, psi') = {out['gcd']}")
    elif method == "gcdF2":
        print(f"{'':30s} gcd mod 2 = {out['gcd_mod2']}  ({out['note']})")
    else:
        print(
            f"{'':30s} cubic {out['cubic']}, cofactor = product of "
            f"Phi_d for d in {out['cyclotomic_indices']}"
        )
