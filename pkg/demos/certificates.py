"""Non-derogatory certificates without computing the minimal polynomial.

is_non_derogatory() compares minimal and characteristic degree, which
is definitive but opaque.  triangular_certificate() instead searches
for a combinatorial witness: delete one row and one (different) column
of xI - A, then reorder what is left so the minor becomes triangular
with nonzero constants on the diagonal.  Such a minor has a nonzero
constant determinant, so the gcd of all (n-1)-minors is 1 and the
matrix is non-derogatory.  The witness can be checked by hand.
"""

from digraph_spectra import (
    FamilySpec,
    build_family,
    charpoly_exact,
    is_non_derogatory,
    minimal_polynomial,
    triangular_certificate,
)


def show(spec: FamilySpec) -> None:
    d = build_family(spec)
    cert = triangular_certificate(d)
    print(spec.to_text())
    if cert is None:
        print("  no triangular witness found")
        return
    print(f"  delete row {cert.removed_row}, column {cert.removed_col}")
    stages = ", ".join(
        f"({r},{c})" for r, c in zip(cert.row_order, cert.col_order)
    )
    print(f"  stage the rows on the arcs {stages}")
    # each stage pairs its row with an arc (constant nonzero in xI - A,
    # so the row index must differ from the column), and the row must
    # vanish identically against every later column: no arc, and never
    # the diagonal x entry
    a = d.adjacency_matrix()
    for t, r in enumerate(cert.row_order):
        assert r != cert.col_order[t] and a[r - 1][cert.col_order[t] - 1] != 0
        for c in cert.col_order[t + 1 :]:
            assert r != c and a[r - 1][c - 1] == 0
    print("  checked: every stage arc present, every later entry zero")
    assert is_non_derogatory(d)


show(FamilySpec("DCn", 5))
show(FamilySpec("DCn_i_nmi", 8))
show(FamilySpec("PDF", 7))
print()

# The odd wheel complement is genuinely derogatory: its minimal
# polynomial drops a cyclotomic factor, so no certificate can exist
# and the search comes back empty rather than lying.
spec = FamilySpec("UDWc", 9)
d = build_family(spec)
mu, phi = minimal_polynomial(d), charpoly_exact(d)
print(spec.to_text())
print("  charpoly degree", phi.degree, " minpoly degree", mu.degree)
print("  non-derogatory:", is_non_derogatory(d))
print("  certificate search:", triangular_certificate(d))

# The even wheel complement keeps full degree.
spec = FamilySpec("UDWc", 8)
print(spec.to_text(), " non-derogatory:", is_non_derogatory(build_family(spec)))
