"""Published classification data for the (3,6) lattice, exactly transcribed.

Coordinates are given as power-basis coefficient vectors: conductor 3 entries
over (1, z3), conductor 9 entries over (1, z9, ..., z9^5), all rational
numbers as strings to keep the JSON exact.  Loaders return CycloNum values.

The expected table rows for every type-one (p,k) are bundled so pipeline
output can be reconciled row by row.
"""

import json
from fractions import Fraction
from importlib import resources

from .cyclotomic import CycloNum


def _load():
    with resources.files(__package__).joinpath("data/tables.json").open() as f:
        return json.load(f)


_DATA = None


def data():
    global _DATA
    if _DATA is None:
        _DATA = _load()
    return _DATA


def _num(obj):
    n = obj["n"]
    return CycloNum(n, [Fraction(c) for c in obj["coeffs"]])


def published_alpha_points():
    """The fifteen published (3,6) reflection-case solutions, in order:
    list of (name, {r1, r2}) with exact cyclotomic values."""
    out = []
    for row in data()["alpha_points"]:
        out.append((row["name"], {"r1": _num(row["r1"]), "r2": _num(row["r2"])}))
    return out


def published_degenerate_r2():
    """The four (x, r2) pairs of the degenerate configurations (same set for
    both block forms)."""
    return [(_num(row["x"]), _num(row["r2"])) for row in data()["degenerate_r2"]]


def published_both_regular():
    """The eleven both-regular solutions listed up to complex conjugation:
    list of {s1, s2, s3, r1, r2} value dicts."""
    out = []
    for row in data()["both_regular"]:
        out.append({g: _num(row[g]) for g in ("s1", "s2", "s3", "r1", "r2")})
    return out


def expected_orbit_names():
    """Galois orbit partition of the published points under the subgroup
    fixing the branch (names, not indices)."""
    return [list(o) for o in data()["galois_orbits"]]


def expected_signatures():
    """name -> signature label: "(3,0)", "(2,1)" or "degenerate_rank1"."""
    return dict(data()["signatures"])


def expected_liftable():
    return list(data()["liftable"])


def expected_cusp():
    """name -> "unipotent" or "elliptic"."""
    return dict(data()["cusp"])


def expected_table_row(p, k):
    """The published aggregate row for (p,k), or None if not tabulated."""
    for row in data()["table_rows"]:
        if row["p"] == p and row["k"] == k:
            return row
    return None


def type_one_lattices():
    return [tuple(pk) for pk in data()["type_one"]]
