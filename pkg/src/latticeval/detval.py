"""The k-ary determinantal valuation f^t_{i_1,...,i_k} and network costs.

The valuation is an exact maximum of -val(det) over all choices of i_j
vectors from the j-th lattice.  By multilinearity of the determinant and the
ultrametric inequality, the maximum over module elements is attained on
subsets of any fixed generating basis, so the search space collapses to
prod_j C(n, i_j) exact determinant evaluations over Laurent polynomials.
"""

from __future__ import annotations

import itertools

from .lattices import Lattice
from .metric import binary_f, distance, fundamental_weight, pair
from .scalars import LaurentPoly, ValuedScalar


def det_poly(mat: list[list[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant of a Laurent-polynomial matrix."""
    n = len(mat)
    field = mat[0][0].field
    if n == 1:
        return mat[0][0]
    m = [row[:] for row in mat]
    sign = 1
    prev = LaurentPoly.one(field)
    for i in range(n - 1):
        if m[i][i].is_zero():
            for r in range(i + 1, n):
                if not m[r][i].is_zero():
                    m[i], m[r] = m[r], m[i]
                    sign = -sign
                    break
            else:
                return LaurentPoly.zero(field)
        for r in range(i + 1, n):
            for c in range(i + 1, n):
                m[r][c] = (m[i][i] * m[r][c] - m[r][i] * m[i][c]).divexact(prev)
            m[r][i] = LaurentPoly.zero(field)
        prev = m[i][i]
    d = m[n - 1][n - 1]
    return d if sign == 1 else -d


def det_scalar(mat: list[list[ValuedScalar]]) -> ValuedScalar:
    """Determinant of a general exact-scalar matrix by elimination."""
    n = len(mat)
    field = mat[0][0].field
    m = [row[:] for row in mat]
    det = ValuedScalar.one(field)
    for i in range(n):
        piv = None
        best = None
        for r in range(i, n):
            if m[r][i].is_zero():
                continue
            v = m[r][i].valuation()
            if best is None or v < best:
                piv, best = r, v
        if piv is None:
            return ValuedScalar.zero(field)
        if piv != i:
            m[i], m[piv] = m[piv], m[i]
            det = -det
        det = det * m[i][i]
        for r in range(i + 1, n):
            if m[r][i].is_zero():
                continue
            q = m[r][i] / m[i][i]
            m[r] = [x - q * y for x, y in zip(m[r], m[i])]
    return det


def _check_index(idx, n: int):
    if any(i < 0 for i in idx):
        raise ValueError("indices must be nonnegative")
    if sum(idx) != n:
        raise ValueError(f"indices must sum to the rank {n}, got {tuple(idx)}")


def multi_f_detail(idx, lattices: list[Lattice]):
    """f^t_{i_1,...,i_k} together with a maximizing basis-subset selection.

    Returns (value, selection) where selection[j] is the tuple of canonical
    column indices chosen from the j-th lattice.
    """
    n = lattices[0].n
    if any(l.n != n for l in lattices):
        raise ValueError("rank mismatch")
    if len(idx) != len(lattices):
        raise ValueError("one index per lattice required")
    _check_index(idx, n)
    polys = [l.poly_columns() for l in lattices]
    col_vals = [
        [min(e.valuation() for e in col if not e.is_zero()) for col in pc]
        for pc in polys
    ]
    best = None
    best_sel = None
    choices = [
        list(itertools.combinations(range(n), i)) for i, _ in zip(idx, lattices)
    ]
    for sel in itertools.product(*choices):
        # -val(det) <= -sum of columnwise minimal valuations; prune early.
        ub = -sum(col_vals[j][c] for j, cols in enumerate(sel) for c in cols)
        if best is not None and ub <= best:
            continue
        cols = [polys[j][c] for j, chosen in enumerate(sel) for c in chosen]
        mat = [[col[i] for col in cols] for i in range(n)]
        d = det_poly(mat)
        if d.is_zero():
            continue
        v = -d.valuation()
        if best is None or v > best:
            best, best_sel = v, sel
    if best is None:
        raise AssertionError("no nonsingular selection exists; lattices degenerate")
    return best, best_sel


def multi_f(idx, lattices: list[Lattice]) -> int:
    """The k-ary determinantal valuation f^t_{i_1,...,i_k}(L_1,...,L_k)."""
    # The value is symmetric under jointly permuting indices and lattices,
    # so cache it under a sorted key.
    key = tuple(sorted(zip(idx, lattices), key=lambda p: (p[0], hash(p[1]))))
    try:
        return _MULTI_F_CACHE[key]
    except KeyError:
        pass
    value = multi_f_detail(idx, lattices)[0]
    if len(_MULTI_F_CACHE) >= 1 << 17:
        _MULTI_F_CACHE.clear()
    _MULTI_F_CACHE[key] = value
    return value


_MULTI_F_CACHE: dict = {}


def star_cost(idx, lattices: list[Lattice], p: Lattice) -> int:
    """Cost of the star network through internal lattice P:
    sum_j f^t_{i_j, n-i_j}(L_j, P) - (k-1) f^t_n(P)."""
    n = lattices[0].n
    _check_index(idx, n)
    k = len(lattices)
    total = sum(binary_f(i, n - i, l, p) for i, l in zip(idx, lattices))
    return total - (k - 1) * p.unary_f()


def edge_reduction_check(i: int, j: int, l: Lattice, m: Lattice) -> bool:
    """Edge functions recover the distance: the brute-force binary valuation,
    the invariant-factor formula, and the weight pairing (plus the f^t_n(L)
    normalization correction) must all agree."""
    n = l.n
    if i + j != n:
        raise ValueError("indices must sum to the rank")
    brute = multi_f((i, j), [l, m])
    formula = binary_f(i, j, l, m)
    paired = pair(fundamental_weight(n, j), distance(l, m)) + l.unary_f()
    return brute == formula == paired
