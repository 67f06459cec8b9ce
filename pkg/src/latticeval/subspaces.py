"""Linear algebra over the base field: subspaces in reduced row-echelon form."""

from __future__ import annotations

import itertools
from functools import lru_cache

from .scalars import BaseField


def rref(vectors, n: int, field: BaseField):
    """Reduced row-echelon basis (tuple of tuples) of the span of vectors."""
    rows = [list(v) for v in vectors if any(v)]
    basis: list[list] = []
    pivots: list[int] = []
    for row in rows:
        row = _reduce(row, basis, pivots, field)
        lead = next((i for i, c in enumerate(row) if c), None)
        if lead is None:
            continue
        inv = field.inv(row[lead])
        row = [field.mul(c, inv) for c in row]
        for b, p in zip(basis, pivots):
            if b[lead]:
                coef = b[lead]
                for i in range(n):
                    b[i] = field.sub(b[i], field.mul(coef, row[i]))
        basis.append(row)
        pivots.append(lead)
    order = sorted(range(len(basis)), key=lambda k: pivots[k])
    return tuple(tuple(basis[k]) for k in order)


def _reduce(row, basis, pivots, field: BaseField):
    row = list(row)
    for b, p in zip(basis, pivots):
        if row[p]:
            coef = row[p]
            for i in range(len(row)):
                row[i] = field.sub(row[i], field.mul(coef, b[i]))
    return row


class Subspace:
    """A subspace of F^n held as its unique reduced row-echelon basis."""

    __slots__ = ("n", "field", "rows", "_hash")

    def __init__(self, n: int, field: BaseField, rows):
        self.n = n
        self.field = field
        self.rows = rows
        self._hash = None

    @classmethod
    def span(cls, vectors, n: int, field: BaseField) -> "Subspace":
        return cls(n, field, rref(vectors, n, field))

    @classmethod
    def zero(cls, n: int, field: BaseField) -> "Subspace":
        return cls(n, field, ())

    @classmethod
    def full(cls, n: int, field: BaseField) -> "Subspace":
        eye = [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
        return cls(n, field, tuple(tuple(r) for r in eye))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, v) -> bool:
        pivots = [next(i for i, c in enumerate(r) if c) for r in self.rows]
        return not any(_reduce(list(v), [list(r) for r in self.rows], pivots, self.field))

    @lru_cache(maxsize=65536)
    def sum(self, other: "Subspace") -> "Subspace":
        return Subspace.span(list(self.rows) + list(other.rows), self.n, self.field)

    @lru_cache(maxsize=65536)
    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection via the kernel of the projection of self mod other."""
        f = self.field
        if not self.rows or not other.rows:
            return Subspace.zero(self.n, f)
        pivots = [next(i for i, c in enumerate(r) if c) for r in other.rows]
        residues = [
            _reduce(list(r), [list(b) for b in other.rows], pivots, f)
            for r in self.rows
        ]
        combos = _nullspace(residues, f)
        vecs = []
        for combo in combos:
            v = [f.zero] * self.n
            for coef, row in zip(combo, self.rows):
                if coef:
                    for i in range(self.n):
                        v[i] = f.add(v[i], f.mul(coef, row[i]))
            vecs.append(v)
        return Subspace.span(vecs, self.n, f)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.field == other.field
            and self.rows == other.rows
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.field, self.rows))
        return self._hash

    def __repr__(self):
        return f"Subspace(n={self.n}, dim={self.dim})"


def _nullspace(rows, field: BaseField):
    """Basis of the kernel of the matrix whose rows are given (as row vectors
    acting by left combination: solutions x with sum_i x_i rows[i] = 0)."""
    k = len(rows)
    if k == 0:
        return []
    n = len(rows[0])
    # Transpose-free: run elimination on rows, tracking combination matrix.
    mat = [list(r) + [field.one if i == j else field.zero for j in range(k)] for i, r in enumerate(rows)]
    pivots = []
    rank_rows = []
    for row in mat:
        for b, p in zip(rank_rows, pivots):
            if row[p]:
                coef = row[p]
                for i in range(len(row)):
                    row[i] = field.sub(row[i], field.mul(coef, b[i]))
        lead = next((i for i in range(n) if row[i]), None)
        if lead is None:
            continue
        inv = field.inv(row[lead])
        for i in range(len(row)):
            row[i] = field.mul(row[i], inv)
        rank_rows.append(row)
        pivots.append(lead)
    kernel = []
    for row in mat:
        if not any(row[:n]) and any(row[n:]):
            kernel.append(tuple(row[n:]))
    return kernel


def rank_of(vectors, n: int, field: BaseField) -> int:
    return len(rref(vectors, n, field))


def all_subspaces(n: int, field: BaseField):
    """Every subspace of F_p^n, enumerated through canonical RREF matrices."""
    if field.is_rational:
        raise ValueError("subspace enumeration requires a finite base field")
    p = field.p
    out = [Subspace.zero(n, field)]
    for d in range(1, n + 1):
        for pivots in itertools.combinations(range(n), d):
            free_cols = [
                c
                for c in range(n)
                if c not in pivots
            ]
            # Free entries: (row r, column c) with c > pivots[r] and c not a pivot.
            slots = [
                (r, c)
                for r in range(d)
                for c in free_cols
                if c > pivots[r]
            ]
            for fill in itertools.product(range(p), repeat=len(slots)):
                rows = [[field.zero] * n for _ in range(d)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = field.one
                for (r, c), v in zip(slots, fill):
                    rows[r][c] = field.from_int(v)
                out.append(Subspace(n, field, tuple(tuple(r) for r in rows)))
    return out
