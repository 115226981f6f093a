"""Acceptance suite: nine criteria, one printed pass/fail line each.

Each criterion runs end to end and prints a single summary line; the
session-finish hook in conftest reprints the collected block after the
pytest output.  A criterion with failing checks raises with the full
list, so nothing is reported green that did not hold.

Criterion 5 keeps the tabulated "no walk of length exp-1" pairs as
stated, including the full-fan pair (n-1, 2), which direct computation
refutes (the hub loop gives n-1 -> n -> 1 -> 1 ... 1 -> 2).  That check
therefore fails by design; the verify reports record the same fact as
witness_zero_ok=False rows.
"""

import json
import random
import time

from conftest import ACCEPTANCE_LINES

from digraph_spectra import (
    FamilySpec,
    IntPolynomial,
    InvalidParameter,
    build_digraph,
    build_family,
    charpoly_exact,
    charpoly_ldsg,
    closed_form_charpoly,
    complement,
    complement_closed_form,
    distinctness_check,
    exponent,
    expected_exponent,
    expected_no_walk_pair,
    find_monic_factor,
    geometric_sum,
    is_non_derogatory,
    is_squarefree,
    minimal_polynomial,
    perron_irreducible,
    table_specs,
    walk_count,
)
from digraph_spectra import BrauerForm, brauer_form
from digraph_spectra.families import DEFAULT_RANGES, TABLE_NAMES


def _record(num, desc, failures):
    status = "PASS" if not failures else "FAIL"
    line = f"criterion {num}: {status} - {desc}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    if failures:
        shown = "\n".join(str(f) for f in failures[:12])
        extra = "" if len(failures) <= 12 else f"\n... and {len(failures) - 12} more"
        raise AssertionError(
            f"criterion {num}: {len(failures)} failing checks\n{shown}{extra}"
        )


def _iter_table_instances(tables, lo, hi):
    seen = set()
    for table in tables:
        for spec in table_specs(table, lo, hi):
            text = spec.to_text()
            if text in seen:
                continue
            seen.add(text)
            try:
                yield spec, build_family(spec)
            except InvalidParameter:
                continue


def _mono(k):
    return IntPolynomial.monomial(k, 1)


# -- criterion 1: dual-route oracle equivalence -----------------------


def test_criterion_1():
    start = time.monotonic()
    failures = []
    count = 0
    for spec, graph in _iter_table_instances(TABLE_NAMES, 3, 12):
        count += 1
        if charpoly_exact(graph) != charpoly_ldsg(graph):
            failures.append(("route mismatch", spec.to_text()))
    rng = random.Random(20260823)
    for case in range(200):
        n = rng.randint(1, 7)
        arcs = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(1, n + 1)
            if rng.random() < 0.4
        ]
        d = build_digraph(n, arcs)
        if charpoly_exact(d) != charpoly_ldsg(d):
            failures.append(("random route mismatch", case, d))
    elapsed = time.monotonic() - start
    if count < 300:
        failures.append(("sweep unexpectedly small", count))
    if elapsed >= 60:
        failures.append(("runtime target missed", f"{elapsed:.1f}s"))
    _record(
        1,
        f"dual-route equality on {count} family instances (n<=12) "
        f"plus 200 random digraphs ({elapsed:.1f}s)",
        failures,
    )


# -- criterion 2: worked example --------------------------------------


def test_criterion_2():
    failures = []
    d = build_family(FamilySpec("DCn_i_nmi", 8))
    want = "x^8 - x^5 - x^3 - x - 1"
    exact = charpoly_exact(d)
    ldsg = charpoly_ldsg(d)
    if str(exact) != want:
        failures.append(("exact", str(exact)))
    if str(ldsg) != want:
        failures.append(("ldsg", str(ldsg)))
    _record(2, f"worked octagon example equals {want} by both methods", failures)


# -- criterion 3: single-family closed forms, 5 <= n <= 14 ------------


def test_criterion_3():
    failures = []
    checks = 0
    for n in range(5, 15):
        k = n // 2
        # chorded cycle with chords i -> n-i
        want = _mono(n) - IntPolynomial.one()
        for t in range(1, k):
            want = want - _mono(n - (2 * t + 1))
        got = charpoly_exact(build_family(FamilySpec("DCn_i_nmi", n)))
        checks += 1
        if got != want:
            failures.append(("DCn_i_nmi", n, str(got), str(want)))

        # loop placed at vertex j of the full fan skeleton
        for j in range(2, n + 1):
            if j == 2:
                want = _mono(n) - _mono(n - 1) * 2
            else:
                want = _mono(n) - _mono(n - 1) * 2 - geometric_sum(0, j - 3)
            got = charpoly_exact(build_family(FamilySpec("Zn_loop", n, j=j)))
            checks += 1
            if got != want:
                failures.append(("Zn_loop", n, j, str(got), str(want)))

        # unidirectional wheel
        got = charpoly_exact(build_family(FamilySpec("UDW", n)))
        checks += 1
        if got != _mono(n) - _mono(1):
            failures.append(("UDW", n, str(got)))

        # full fan
        got = charpoly_exact(build_family(FamilySpec("PDF", n)))
        checks += 1
        if got != _mono(n) - geometric_sum(0, n - 1):
            failures.append(("PDF", n, str(got)))

        # even fan recursion
        if n % 2 == 0:
            even = charpoly_exact(build_family(FamilySpec("ADF", n)))
            odd = charpoly_exact(build_family(FamilySpec("ADF", n - 1)))
            checks += 1
            if even != odd.shift(1):
                failures.append(("ADF recursion", n))
    _record(3, f"single-family closed forms reproduced exactly ({checks} checks)", failures)


# -- criterion 4: complement formulas ---------------------------------


def test_criterion_4():
    failures = []
    for n in range(5, 15):
        computed = charpoly_exact(complement(build_family(FamilySpec("DCn", n))))
        want = complement_closed_form("DCc", n)
        if computed != want:
            failures.append(("DCc", n, str(computed), str(want)))
    for n in range(4, 15):
        computed = charpoly_exact(complement(build_family(FamilySpec("UDW", n))))
        want = complement_closed_form("UDWc", n)
        if computed != want:
            failures.append(("UDWc", n, str(computed), str(want)))
    for n in range(5, 21):
        r = exponent(build_family(FamilySpec("DCc", n)))
        if r.exponent != 2:
            failures.append(("exp DCc", n, r.exponent))
    _record(
        4,
        "cycle/wheel complement cyclotomic products (n<=14) and "
        "complement exponent 2 (n<=20)",
        failures,
    )


# -- criterion 5: exponent table with tabulated witnesses -------------


def test_criterion_5():
    start = time.monotonic()
    failures = []
    table_families = ("PDF", "kDF", "HDF", "ADW", "kDW")
    exp_checks = 0
    pair_checks = 0
    for n in range(10, 21):
        for family in table_families:
            try:
                d = build_family(FamilySpec(family, n))
            except InvalidParameter:
                continue
            r = exponent(d)
            want = expected_exponent(family, n)
            exp_checks += 1
            if r.exponent != want:
                failures.append(("exponent", family, n, r.exponent, want))
                continue
            pair = expected_no_walk_pair(family, n)
            if pair is None:
                continue
            pair_checks += 1
            walks = walk_count(d, r.exponent - 1).entry(*pair)
            if walks != 0:
                failures.append(
                    (
                        "tabulated pair has walks",
                        family,
                        n,
                        pair,
                        f"count={walks}",
                        "refuted by n-1 -> n -> 1 -> 1 ... 1 -> 2"
                        if family == "PDF"
                        else "",
                    )
                )
    for n in range(7, 21, 2):
        d = build_family(FamilySpec("ADF", n))
        r = exponent(d)
        exp_checks += 1
        if r.exponent != 9:
            failures.append(("exponent", "ADF", n, r.exponent, 9))
        else:
            pair_checks += 1
            if walk_count(d, 8).entry(n - 1, 3) != 0:
                failures.append(("tabulated pair has walks", "ADF", n, (n - 1, 3)))
    r5 = exponent(build_family(FamilySpec("ADF", 5)))
    exp_checks += 1
    if r5.exponent != 12:
        failures.append(("exponent", "ADF", 5, r5.exponent, 12))
    elapsed = time.monotonic() - start
    if elapsed >= 30:
        failures.append(("runtime target missed", f"{elapsed:.1f}s"))
    _record(
        5,
        f"exponent table 10<=n<=20: {exp_checks} exponent values and "
        f"{pair_checks} tabulated no-walk pairs ({elapsed:.1f}s)",
        failures,
    )


# -- criterion 6: non-derogatory suite --------------------------------


def test_criterion_6():
    failures = []
    checked = 0
    for table in TABLE_NAMES:
        lo, hi = DEFAULT_RANGES[table]
        for spec, graph in _iter_table_instances([table], lo, hi):
            psi = charpoly_exact(graph)
            if psi.degree < 1 or not is_squarefree(psi, "Q"):
                continue
            checked += 1
            if not is_non_derogatory(graph):
                failures.append(("squarefree but derogatory", spec.to_text()))
    for k in range(2, 7):
        odd = build_family(FamilySpec("UDWc", 2 * k + 1))
        mp = minimal_polynomial(odd)
        psi = charpoly_exact(odd)
        if is_non_derogatory(odd):
            failures.append(("odd wheel complement not derogatory", 2 * k + 1))
        if mp.shift(1) != psi:
            failures.append(("odd wheel complement min poly", 2 * k + 1, str(mp)))
        even = build_family(FamilySpec("UDWc", 2 * k))
        if not is_non_derogatory(even):
            failures.append(("even wheel complement derogatory", 2 * k))
    _record(
        6,
        f"squarefree implies non-derogatory on {checked} instances; "
        "odd wheel complements derogatory with min poly = charpoly/x, "
        "even ones non-derogatory (k=2..6)",
        failures,
    )


# -- criterion 7: distinct-eigenvalue methods -------------------------


def test_criterion_7():
    failures = []
    checks = 0

    def expect_true(spec, method):
        nonlocal checks
        checks += 1
        out = distinctness_check(spec, method)
        if out["verdict"] is not True:
            failures.append((method, spec.to_text(), out))
        return out

    for n in range(5, 15):
        k = n // 2
        for j in range(1, k):
            expect_true(FamilySpec("DCn_i_kpjpi", n, j=j), "gcdQ")
        for m in range(3, n):
            expect_true(FamilySpec("DCn_m", n, m=m), "gcdQ")
        expect_true(FamilySpec("Zn_loop", n, j=3), "gcdQ")
    for n in range(5, 14, 2):
        expect_true(FamilySpec("DCn_i_nmi", n), "gcdF2")
        expect_true(FamilySpec("ADF", n), "gcdF2")
    for k in range(2, 9):
        n = 2 * k + 1
        out = expect_true(FamilySpec("ADW", n), "cyclotomic")
        if not out["remainder_zero"] or out["cubic"] != str(
            _mono(3) - _mono(1) - IntPolynomial.constant(k)
        ):
            failures.append(("ADW cubic division", n, out))
        out = expect_true(FamilySpec("RADW", n), "cyclotomic")
        if not out["remainder_zero"] or out["cubic"] != str(
            _mono(3) - _mono(1) * 2 - IntPolynomial.constant(k)
        ):
            failures.append(("RADW cubic division", n, out))
    _record(
        7,
        f"distinct-eigenvalue methods: gcd over Q, gcd over F2, "
        f"cyclotomic cubic division ({checks} verdicts)",
        failures,
    )


# -- criterion 8: irreducibility criteria -----------------------------


def test_criterion_8():
    failures = []
    perron_true = 0
    brauer_true = 0
    cross_checked = 0
    for n in range(3, 15):
        for m in (n + 1, n + 2):  # dominance needs m > (n-1) + 1
            psi = charpoly_exact(build_family(FamilySpec("Xn_loops", n, m=m)))
            if not perron_irreducible(psi):
                failures.append(("perron", n, m, str(psi)))
            else:
                perron_true += 1
            if psi.degree <= 6:
                cross_checked += 1
                if find_monic_factor(psi, min(3, psi.degree - 1)) is not None:
                    failures.append(("perron factor found", n, m))
    for n in range(3, 15):
        psi = charpoly_exact(build_family(FamilySpec("PDF", n)))
        if brauer_form(psi) is not BrauerForm.FORM_F:
            failures.append(("brauer PDF", n, str(psi)))
        else:
            brauer_true += 1
        if psi.degree <= 6:
            cross_checked += 1
            if find_monic_factor(psi, min(3, psi.degree - 1)) is not None:
                failures.append(("brauer factor found PDF", n))
        for m in range(2, n + 3):
            psi = charpoly_exact(build_family(FamilySpec("Xn_loops", n, m=m)))
            if brauer_form(psi) is not BrauerForm.FORM_F:
                failures.append(("brauer Xn_loops", n, m, str(psi)))
            else:
                brauer_true += 1
            if psi.degree <= 6:
                cross_checked += 1
                if find_monic_factor(psi, min(3, psi.degree - 1)) is not None:
                    failures.append(("brauer factor found Xn_loops", n, m))
    _record(
        8,
        f"Perron dominance ({perron_true} true verdicts) and Brauer FormF "
        f"({brauer_true} classifications), {cross_checked} factor-search "
        "cross-checks",
        failures,
    )


# -- criterion 9: table verification reports --------------------------


def test_criterion_9():
    from digraph_spectra.cli import main
    import contextlib
    import io

    failures = []
    for table in ("cdf", "cdw"):
        out = io.StringIO()
        with contextlib.redirect_stdout(out):
            rc = main(["verify", f"--table={table}", "--format=json"])
        if rc != 0:
            failures.append(("exit code", table, rc))
            continue
        doc = json.loads(out.getvalue())
        if doc["summary"]["hard_failures"] != 0:
            failures.append(("hard failures", table, doc["summary"]))
        for row in doc["rows"]:
            if row["skipped"] is not None:
                if not row["skipped"]:
                    failures.append(("empty skip reason", table, row["spec"]))
                continue
            if row["ldsg_checked"] and row["ldsg_agreement"] is not True:
                failures.append(("route disagreement", table, row["spec"]))
            both = row["computed_charpoly"] and row["closed_form"]
            if not both:
                failures.append(("missing polynomial", table, row["spec"]))
                continue
            same = row["computed_charpoly"] == row["closed_form"]
            if row["charpoly_match"] is not same:
                failures.append(("inconsistent match flag", table, row["spec"]))
    _record(
        9,
        "verify reports for the fan and wheel tables: zero hard failures, "
        "rows internally consistent, mismatches (if any) carry both "
        "polynomials",
        failures,
    )
