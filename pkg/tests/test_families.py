"""Family registry: specs, constructions, closed forms, table sweeps.

Core claims:
    - spec text and JSON forms round-trip, including the nested
      Complement-of form; malformed specs and out-of-range parameters
      raise with a reason
    - constructed arc sets match the worked instances exactly
    - closed_form_charpoly agrees with the computed polynomial on the
      spot-checked instances and on a sweep of every family
    - chorded-cycle families have all non-leading coefficients <= 0
    - no family ever produces parallel non-loop arcs; loops appear only
      in the loop-derived families
    - the even fan satisfies the x * (odd fan) recursion
"""

import pytest

from digraph_spectra import (
    FAMILY_NAMES,
    FamilySpec,
    IntPolynomial,
    InvalidParameter,
    TABLE_NAMES,
    build_family,
    charpoly_exact,
    closed_form_charpoly,
    complement,
    complement_closed_form,
    cyclotomic,
    family_spec_from_json_dict,
    parse_family_spec,
    table_specs,
)
from digraph_spectra.families import DEFAULT_RANGES

X = IntPolynomial.x()


def _arcs(d):
    out = set()
    for i in range(1, d.n + 1):
        for j, mult in d.successors(i):
            out.add((i, j, mult))
    return out


def _sweep(lo=3, hi=10):
    seen = set()
    for table in TABLE_NAMES:
        for spec in table_specs(table, lo, hi):
            if spec.to_text() in seen:
                continue
            seen.add(spec.to_text())
            try:
                yield spec, build_family(spec)
            except InvalidParameter:
                continue


# -- spec forms -------------------------------------------------------


class TestSpecForms:
    def test_text_round_trip(self):
        for text in [
            "family=DCn n=8",
            "family=DCn_i_kpjpi n=9 j=2",
            "family=DCn_tips n=8 tips=2,4",
            "family=Xn_loops n=6 m=4",
            "family=Yn_arcs_loops n=7 m=3 arcs=3,5",
            "family=Complement n=5 inner=(family=DCn n=5)",
        ]:
            spec = parse_family_spec(text)
            assert spec.to_text() == text
            assert parse_family_spec(spec.to_text()) == spec

    def test_json_round_trip(self):
        spec = parse_family_spec("family=Complement n=5 inner=(family=ADF n=5)")
        assert family_spec_from_json_dict(spec.to_json_dict()) == spec

    def test_parse_errors(self):
        with pytest.raises(ValueError):
            parse_family_spec("ADF(5)")
        with pytest.raises(ValueError):
            parse_family_spec("family=ADF")
        with pytest.raises(ValueError):
            parse_family_spec("family=ADF n=five")
        with pytest.raises(ValueError):
            parse_family_spec("family=ADF n=5 color=red")
        with pytest.raises(InvalidParameter):
            parse_family_spec("family=NoSuchFamily n=5")

    def test_json_unknown_key(self):
        with pytest.raises(ValueError):
            family_spec_from_json_dict({"family": "ADF", "n": 5, "extra": 1})

    def test_registry_names(self):
        assert "DCn" in FAMILY_NAMES and "Complement" in FAMILY_NAMES
        assert set(DEFAULT_RANGES) == set(TABLE_NAMES)


class TestValidation:
    @pytest.mark.parametrize(
        "text",
        [
            "family=DCn n=2",
            "family=UDW n=3",
            "family=ADW n=3",
            "family=DCc n=4",
            "family=Zn_loop n=5 j=7",
            "family=Zn_loop n=5 j=1",
            "family=DCn_i_kpjpi n=9 j=9",
            "family=DCn_tips n=8 tips=7",
            "family=DCn_m n=9 m=9",
            "family=Yn_arcs_loops n=7 m=2 arcs=3,5",
        ],
    )
    def test_out_of_range_parameters(self, text):
        with pytest.raises(InvalidParameter):
            build_family(parse_family_spec(text))

    def test_missing_parameter(self):
        with pytest.raises(InvalidParameter):
            build_family(FamilySpec("Zn_loop", 5))

    def test_complement_rejects_extra_parameters(self):
        inner = FamilySpec("DCn", 5)
        with pytest.raises(InvalidParameter):
            build_family(FamilySpec("Complement", 5, j=2, inner=inner))

    def test_complement_needs_matching_n(self):
        inner = FamilySpec("DCn", 5)
        with pytest.raises(InvalidParameter):
            build_family(FamilySpec("Complement", 6, inner=inner))


# -- worked constructions ---------------------------------------------


class TestConstructions:
    def test_chorded_cycle_octagon(self):
        d = build_family(FamilySpec("DCn_i_nmi", 8))
        cycle = {(i, i % 8 + 1, 1) for i in range(1, 9)}
        chords = {(1, 7, 1), (2, 6, 1), (3, 5, 1)}
        assert _arcs(d) == cycle | chords

    def test_tipped_cycle(self):
        d = build_family(FamilySpec("DCn_tips", 8, tips=(2, 4)))
        cycle = {(i, i % 8 + 1, 1) for i in range(1, 9)}
        assert _arcs(d) == cycle | {(8, 3, 1), (8, 5, 1)}

    def test_alternating_fan_five(self):
        d = build_family(FamilySpec("ADF", 5))
        path = {(2, 3, 1), (3, 4, 1), (4, 5, 1)}
        spokes = {(1, 2, 1), (1, 4, 1), (3, 1, 1), (5, 1, 1)}
        assert _arcs(d) == path | spokes

    def test_unidirectional_wheel_four(self):
        d = build_family(FamilySpec("UDW", 4))
        rim = {(1, 2, 1), (2, 3, 1), (3, 1, 1)}
        spokes = {(4, 1, 1), (4, 2, 1), (4, 3, 1)}
        assert _arcs(d) == rim | spokes

    def test_full_fan_has_hub_loop(self):
        d = build_family(FamilySpec("PDF", 5))
        assert d.multiplicity(1, 1) == 1
        assert d.has_arc(5, 1)
        assert d.has_arc(1, 5)

    def test_loop_families_carry_multiplicities(self):
        d = build_family(FamilySpec("Xn_loops", 6, m=4))
        assert d.multiplicity(1, 1) == 1 + 3  # hub loop plus m-1 extras

    def test_complement_family_equals_generic_complement(self):
        direct = build_family(FamilySpec("DCc", 7))
        generic = build_family(
            FamilySpec("Complement", 7, inner=FamilySpec("DCn", 7))
        )
        assert direct == generic
        assert direct == complement(build_family(FamilySpec("DCn", 7)))


# -- closed forms -----------------------------------------------------


class TestClosedForms:
    def test_worked_example(self):
        spec = FamilySpec("DCn_i_nmi", 8)
        assert str(closed_form_charpoly(spec)) == "x^8 - x^5 - x^3 - x - 1"

    def test_loop_on_cycle(self):
        spec = FamilySpec("Zn_loop", 5, j=3)
        assert str(closed_form_charpoly(spec)) == "x^5 - 2x^4 - 1"

    def test_odd_fan(self):
        assert str(closed_form_charpoly(FamilySpec("ADF", 5))) == "x^5 - 2x^2 - 1"

    def test_wheel(self):
        assert str(closed_form_charpoly(FamilySpec("UDW", 4))) == "x^4 - x"

    def test_closed_forms_match_computation_on_sweep(self):
        checked = 0
        for spec, graph in _sweep(3, 10):
            if spec.family == "Complement":
                continue
            assert closed_form_charpoly(spec) == charpoly_exact(graph), spec.to_text()
            checked += 1
        assert checked > 80

    def test_even_fan_recursion(self):
        for n in (6, 8, 10, 12):
            even = closed_form_charpoly(FamilySpec("ADF", n))
            odd = closed_form_charpoly(FamilySpec("ADF", n - 1))
            assert even == odd.shift(1)

    def test_cycle_complement_odd(self):
        # (x - (n-2)) * prod_{d | n, d > 1} Phi_d(-(x+1)) at n = 5
        formula = (X - IntPolynomial.constant(3)) * cyclotomic(5).substitute_linear(-1, -1)
        assert complement_closed_form("DCc", 5) == formula
        computed = charpoly_exact(build_family(FamilySpec("DCc", 5)))
        assert computed == formula

    def test_cycle_complement_even(self):
        # x (x - (n-2)) prod of the remaining cyclotomic substitutions, n = 6
        formula = X * (X - IntPolynomial.constant(4))
        for d in (3, 6):
            formula = formula * cyclotomic(d).substitute_linear(-1, -1)
        assert complement_closed_form("DCc", 6) == formula
        assert charpoly_exact(build_family(FamilySpec("DCc", 6))) == formula

    def test_wheel_complement_sweep(self):
        for n in range(4, 11):
            computed = charpoly_exact(build_family(FamilySpec("UDWc", n)))
            assert computed == complement_closed_form("UDWc", n), n

    def test_complement_closed_form_bad_kind(self):
        with pytest.raises(ValueError):
            complement_closed_form("ADFc", 6)


# -- structural invariants --------------------------------------------


class TestStructuralInvariants:
    def test_no_parallel_non_loop_arcs(self):
        loop_families = {"ADF_loops", "Xn_loops", "Yn_arcs_loops", "Zn_loop", "PDF"}
        for spec, graph in _sweep(3, 10):
            for i in range(1, graph.n + 1):
                for j, mult in graph.successors(i):
                    if i != j:
                        assert mult == 1, spec.to_text()
                    elif spec.family not in loop_families and spec.family != "Complement":
                        assert mult == 0, spec.to_text()

    def test_loop_multiplicity_above_one_only_in_loop_derived(self):
        multi = {"Xn_loops", "Yn_arcs_loops", "ADF_loops"}
        for spec, graph in _sweep(3, 10):
            for v in range(1, graph.n + 1):
                if graph.multiplicity(v, v) > 1:
                    assert spec.family in multi, spec.to_text()

    def test_chorded_cycles_have_nonpositive_coefficients(self):
        chord_families = ("DCn_i_nmi", "DCn_i_kmi", "DCn_i_kpjpi", "DCn_tips", "DCn_m")
        for spec in table_specs("cdc", 3, 12):
            if spec.family not in chord_families:
                continue
            try:
                graph = build_family(spec)
            except InvalidParameter:
                continue
            psi = charpoly_exact(graph)
            assert all(c <= 0 for c in psi.coeffs[:-1]), spec.to_text()

    def test_table_specs_unknown_table(self):
        with pytest.raises(ValueError):
            table_specs("nope", 3, 5)

    def test_exponent_table_has_complement_rows(self):
        families = {s.family for s in table_specs("exponents", 10, 12)}
        assert "DCc" in families and "PDF" in families
