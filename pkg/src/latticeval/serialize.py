"""JSON encoding of scalars, lattices, instances, and verification reports."""

from __future__ import annotations

from .harness import ConjectureReport
from .lattices import Lattice
from .scalars import BaseField, LaurentPoly, RATIONAL, ValuedScalar


def field_to_str(field: BaseField) -> str:
    return "rational" if field.is_rational else f"prime:{field.p}"


def field_from_str(s: str) -> BaseField:
    if s == "rational":
        return RATIONAL
    if s.startswith("prime:"):
        return BaseField(int(s.split(":", 1)[1]))
    raise ValueError(f"unknown field {s!r}")


def poly_to_json(p: LaurentPoly):
    """Sorted [exponent, coefficient-string] pairs."""
    return [[e, p.field.format(c)] for e, c in sorted(p.coeffs.items())]


def poly_from_json(data, field: BaseField) -> LaurentPoly:
    return LaurentPoly(field, {int(e): field.parse(str(c)) for e, c in data})


def scalar_to_json(s: ValuedScalar):
    out = {"num": poly_to_json(s.num)}
    if s.den.coeffs != {0: s.field.one}:
        out["den"] = poly_to_json(s.den)
    return out


def scalar_from_json(data, field: BaseField) -> ValuedScalar:
    num = poly_from_json(data["num"], field)
    den = poly_from_json(data["den"], field) if "den" in data else None
    return ValuedScalar(num, den)


def lattice_to_json(lat: Lattice):
    return {
        "n": lat.n,
        "columns": [[scalar_to_json(e) for e in col] for col in lat.columns],
    }


def lattice_from_json(data, field: BaseField) -> Lattice:
    cols = [
        [scalar_from_json(e, field) for e in col] for col in data["columns"]
    ]
    if len(cols) == data["n"]:
        return Lattice.from_columns(cols)
    return Lattice.from_generators(cols, data["n"])


def instance_to_json(lattices, indices):
    field = lattices[0].field
    return {
        "n": lattices[0].n,
        "field": field_to_str(field),
        "lattices": [lattice_to_json(lat) for lat in lattices],
        "indices": list(indices),
    }


def instance_from_json(data):
    """Returns (lattices, indices, field)."""
    field = field_from_str(data["field"])
    lattices = [lattice_from_json(d, field) for d in data["lattices"]]
    indices = tuple(int(i) for i in data["indices"])
    return lattices, indices, field


def report_to_json(report: ConjectureReport):
    out = {
        "lhs": report.lhs,
        "status": report.status,
        "witness": None,
        "candidates": [],
        "strategy": report.strategy,
        "seed": report.seed,
    }
    if report.best_candidate is not None:
        lat, cost = report.best_candidate
        out["candidates"].append({"lattice": lattice_to_json(lat), "cost": cost})
        if report.status == "verified":
            out["witness"] = lattice_to_json(lat)
    out["candidates_examined"] = report.candidates_examined
    return out
