"""Seeded random instances: scalars, lattices, frames, close triples, and
apartment configurations for sweeps and the CLI generator."""

from __future__ import annotations

from .apartment import Apartment, ApartmentPoint
from .lattices import Lattice, SingularMatrixError
from .scalars import BaseField, LaurentPoly, ValuedScalar
from .subspaces import Subspace


def random_coefficient(rng, field: BaseField):
    if field.is_rational:
        return field.from_int(rng.randint(-3, 3))
    return field.from_int(rng.randrange(field.p))


def random_poly(rng, field: BaseField, low: int, high: int) -> LaurentPoly:
    """Random Laurent polynomial supported on exponents in [low, high]."""
    coeffs = {e: random_coefficient(rng, field) for e in range(low, high + 1)}
    return LaurentPoly(field, coeffs)


def random_scalar(rng, field: BaseField, low: int = -2, high: int = 2) -> ValuedScalar:
    return ValuedScalar(random_poly(rng, field, low, high))


def random_lattice(rng, n: int, field: BaseField, low: int = -3, high: int = 3) -> Lattice:
    """Random lattice from random generator columns (resampled if singular)."""
    while True:
        cols = [
            [random_scalar(rng, field, low, high) for _ in range(n)]
            for _ in range(n)
        ]
        try:
            return Lattice.from_columns(cols)
        except SingularMatrixError:
            continue


def random_unimodular(rng, n: int, field: BaseField, degree: int = 1, ops: int | None = None):
    """Random integral matrix of determinant-valuation zero, built from
    elementary column operations on the identity (column-major)."""
    one = ValuedScalar.one(field)
    zero = ValuedScalar.zero(field)
    cols = [[one if i == j else zero for i in range(n)] for j in range(n)]
    if n < 2:
        return cols
    for _ in range(ops if ops is not None else 2 * n):
        a, b = rng.sample(range(n), 2)
        m = random_scalar(rng, field, 0, degree)
        for i in range(n):
            cols[a][i] = cols[a][i] + m * cols[b][i]
    return cols


def random_valdet0(rng, n: int, field: BaseField, window: int = 2):
    """Random transformation matrix with determinant valuation zero: a
    unimodular product twisted by a diagonal of t-powers summing to zero."""
    cols = random_unimodular(rng, n, field)
    shifts = [rng.randint(-window, window) for _ in range(n - 1)]
    shifts.append(-sum(shifts))
    # Row-major g with column j of the unimodular part scaled by t^{shift_j}.
    return [
        [
            cols[j][i] * ValuedScalar.t_power(field, shifts[j])
            for j in range(n)
        ]
        for i in range(n)
    ]


def random_subspace(rng, n: int, field: BaseField) -> Subspace:
    d = rng.randint(0, n)
    vecs = [
        [random_coefficient(rng, field) for _ in range(n)] for _ in range(d)
    ]
    return Subspace.span(vecs, n, field)


def random_close_triple(rng, n: int, field: BaseField):
    """Three lattices between the standard lattice and its t^{-1} dilate,
    realized from three random subspaces of the quotient."""
    e = Lattice.standard(n, field)
    lats = []
    for _ in range(3):
        u = random_subspace(rng, n, field)
        gens = [list(c) for c in e.columns]
        tinv = ValuedScalar.t_power(field, -1)
        for row in u.rows:
            gens.append([tinv * ValuedScalar(LaurentPoly(field, {0: c})) for c in row])
        lats.append(Lattice.from_generators(gens, n))
    return tuple(lats)


def random_index(rng, n: int, k: int):
    """Random nonnegative index vector of length k summing to n."""
    cuts = sorted(rng.randint(0, n) for _ in range(k - 1))
    parts = []
    prev = 0
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(n - prev)
    return tuple(parts)


def random_apartment_instance(rng, n: int, k: int, field: BaseField, window: int = 5):
    """A random frame, k random exponent points, and a valid index vector."""
    apt = Apartment(random_unimodular(rng, n, field))
    points = [
        ApartmentPoint(tuple(rng.randint(-window, window) for _ in range(n)))
        for _ in range(k)
    ]
    idx = random_index(rng, n, k)
    return apt, points, idx
