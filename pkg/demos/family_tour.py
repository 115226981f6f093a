#!/usr/bin/env python3
"""Quick tour: build one member of each digraph family and compare the
computed characteristic polynomial against the shipped closed form."""

import json

from digraph_spectra import (
    FAMILY_NAMES,
    FamilySpec,
    InvalidParameter,
    build_family,
    charpoly_exact,
    closed_form_charpoly,
    family_spec_from_json_dict,
    parse_family_spec,
)

# one representative of every registered family, at small order
picks = [
    "family=DCn n=8",
    "family=DCn_i_nmi n=8",
    "family=DCn_i_kmi n=8",
    "family=DCn_i_kpjpi n=9 j=2",
    "family=DCn_tips n=8 tips=2,4",
    "family=DCn_m n=8 m=3",
    "family=ADF n=7",
    "family=ADF_loops n=7",
    "family=PDF n=6",
    "family=Xn_loops n=6 m=4",
    "family=Yn_arcs_loops n=6 m=4 arcs=3,5",
    "family=Zn_loop n=7 j=3",
    "family=kDF n=8",
    "family=HDF n=6",
    "family=TDF n=9",
    "family=UDW n=6",
    "family=ADW n=9",
    "family=RADW n=9",
    "family=kDW n=8",
    "family=HDW n=8",
    "family=DCc n=6",
    "family=UDWc n=6",
    "family=Complement n=6 inner=(family=DCn n=6)",
]

for text in picks:
    spec = parse_family_spec(text)
    d = build_family(spec)
    phi = charpoly_exact(d)
    try:
        closed = closed_form_charpoly(spec)
        tag = "closed form ok" if closed == phi else "CLOSED FORM MISMATCH"
    except (InvalidParameter, KeyError, ValueError):
        tag = "no closed form"
    print(f"{spec.to_text():48s} n={d.n:2d}  {str(phi):36s} {tag}")

# specs round trip through text and json untouched
spec = parse_family_spec("family=DCn_m n=10 m=4")
assert parse_family_spec(spec.to_text()) == spec
assert family_spec_from_json_dict(json.loads(json.dumps(spec.to_json_dict()))) == spec
print()
print("round trips:", spec.to_text(), "|", json.dumps(spec.to_json_dict()))

# out-of-range parameters are rejected up front, not at build time
try:
    build_family(FamilySpec("ADF", 6))
except InvalidParameter as exc:
    print("rejected:", exc)

print()
print("registered families:", " ".join(FAMILY_NAMES))
