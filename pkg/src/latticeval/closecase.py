"""The close-triple case: E <= L, M, N <= t^{-1}E.

Such a lattice is determined by its projection to t^{-1}E / E = F^n, so a
triple reduces to three subspaces of F^n.  The triple decomposes as a
D4-quiver representation into nine indecomposable types; the maximum number of
independently choosable vectors is a max-flow in a small four-layer network,
its min cut is an eight-term minimum over subspace dimensions, and each cut
names a witness lattice among tE, L, M, N and their sums.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache

from .detval import star_cost
from .lattices import Lattice
from .subspaces import Subspace

# Which of U1, U2, U3 each indecomposable type meets (cf. the nine-type table).
REP_TYPES = (
    ("A", (1, 0, 0)),
    ("A'", (0, 1, 0)),
    ("A''", (0, 0, 1)),
    ("B", (1, 1, 0)),
    ("B'", (1, 0, 1)),
    ("B''", (0, 1, 1)),
    ("C", (1, 1, 1)),
    ("D", (1, 1, 1)),
    ("S", (0, 0, 0)),
)


@dataclass(frozen=True)
class SubspaceTriple:
    u1: Subspace
    u2: Subspace
    u3: Subspace

    def __post_init__(self):
        if not (self.u1.n == self.u2.n == self.u3.n):
            raise ValueError("ambient dimensions differ")

    @property
    def n(self) -> int:
        return self.u1.n


@dataclass(frozen=True)
class QuiverMultiplicities:
    m_a: int
    m_a1: int
    m_a2: int
    m_b: int
    m_b1: int
    m_b2: int
    m_c: int
    m_d: int
    m_s: int

    def as_dict(self) -> dict[str, int]:
        return dict(
            zip(
                ("A", "A'", "A''", "B", "B'", "B''", "C", "D", "S"),
                (self.m_a, self.m_a1, self.m_a2, self.m_b, self.m_b1, self.m_b2, self.m_c, self.m_d, self.m_s),
            )
        )


@dataclass(frozen=True)
class FlowNetwork:
    """Source -> representation vertices -> U-vertices -> sink, with integer
    capacities; multiplicities are absorbed into capacities."""

    edges: tuple[tuple[str, str, int], ...]
    source: str = "src"
    sink: str = "sink"


@lru_cache(maxsize=65536)
def extract_triple(l: Lattice, m: Lattice, n_lat: Lattice) -> SubspaceTriple:
    """Project a close lattice triple to its three subspaces of t^{-1}E/E."""
    return SubspaceTriple(*(_projection(x) for x in (l, m, n_lat)))


def _projection(l: Lattice) -> Subspace:
    n = l.n
    field = l.field
    e = Lattice.standard(n, field)
    if not l.contains_lattice(e):
        raise ValueError("lattice does not contain the elementary lattice")
    vectors = []
    for col in l.columns:
        vec = []
        for entry in col:
            if not entry.is_zero() and entry.valuation() < -1:
                raise ValueError("lattice is not contained in t^{-1}E")
            vec.append(entry.num.coefficient(-1))
        vectors.append(vec)
    return Subspace.span(vectors, n, field)


def decompose(triple: SubspaceTriple) -> QuiverMultiplicities:
    """Multiplicities of the nine indecomposable types, from the triangular
    closed-form dimension system (no basis chasing)."""
    u1, u2, u3 = triple.u1, triple.u2, triple.u3
    n = triple.n
    m_c = u1.intersect(u2).intersect(u3).dim
    m_b = u1.intersect(u2).dim - m_c
    m_b1 = u1.intersect(u3).dim - m_c
    m_b2 = u2.intersect(u3).dim - m_c
    m_d = u1.sum(u2).intersect(u3).dim - m_b1 - m_b2 - m_c
    m_a = u1.dim - m_b - m_b1 - m_c - m_d
    m_a1 = u2.dim - m_b - m_b2 - m_c - m_d
    m_a2 = u3.dim - m_b1 - m_b2 - m_c - m_d
    m_s = n - (m_a + m_a1 + m_a2 + m_b + m_b1 + m_b2 + m_c + 2 * m_d)
    mult = QuiverMultiplicities(m_a, m_a1, m_a2, m_b, m_b1, m_b2, m_c, m_d, m_s)
    if any(v < 0 for v in mult.as_dict().values()):
        raise AssertionError(f"inconsistent quiver multiplicities: {mult}")
    return mult


def build_network(mult: QuiverMultiplicities, i: int, j: int, k: int) -> FlowNetwork:
    """The four-layer flow network; a representation vertex of multiplicity mu
    is one vertex with all incident capacities scaled by mu."""
    counts = mult.as_dict()
    edges = []
    for name, touches in REP_TYPES:
        mu = counts[name]
        if mu == 0:
            continue
        v_dim = 2 if name == "D" else 1
        edges.append(("src", name, mu * v_dim))
        for u_idx, touch in enumerate(touches):
            if touch:
                edges.append((name, f"U{u_idx + 1}", mu))
    for u_idx, cap in enumerate((i, j, k)):
        edges.append((f"U{u_idx + 1}", "sink", cap))
    return FlowNetwork(tuple(edges))


def max_flow(net: FlowNetwork) -> int:
    """Exact integer maximum flow by BFS augmenting paths (Edmonds-Karp)."""
    cap: dict[tuple[str, str], int] = {}
    adj: dict[str, list[str]] = {}
    for u, v, c in net.edges:
        cap[(u, v)] = cap.get((u, v), 0) + c
        cap.setdefault((v, u), 0)
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    if net.source not in adj or net.sink not in adj:
        return 0
    total = 0
    while True:
        parent = {net.source: None}
        queue = deque([net.source])
        while queue and net.sink not in parent:
            u = queue.popleft()
            for v in adj[u]:
                if v not in parent and cap[(u, v)] > 0:
                    parent[v] = u
                    queue.append(v)
        if net.sink not in parent:
            return total
        bottleneck = None
        v = net.sink
        while parent[v] is not None:
            u = parent[v]
            c = cap[(u, v)]
            bottleneck = c if bottleneck is None else min(bottleneck, c)
            v = u
        v = net.sink
        while parent[v] is not None:
            u = parent[v]
            cap[(u, v)] -= bottleneck
            cap[(v, u)] += bottleneck
            v = u
        total += bottleneck


def min_formula(triple: SubspaceTriple, i: int, j: int, k: int) -> int:
    """The eight-cut minimum, in its (U, index)-symmetric form."""
    if i + j + k != triple.n:
        raise ValueError("indices must sum to the ambient dimension")
    u1, u2, u3 = triple.u1, triple.u2, triple.u3
    return min(
        i + j + k,
        j + k + u1.dim,
        i + k + u2.dim,
        i + j + u3.dim,
        k + u1.sum(u2).dim,
        j + u1.sum(u3).dim,
        i + u2.sum(u3).dim,
        u1.sum(u2).sum(u3).dim,
    )


@lru_cache(maxsize=4096)
def close_candidates(l: Lattice, m: Lattice, n_lat: Lattice):
    """The eight witness candidates, in the fixed examination order."""
    e = Lattice.standard(l.n, l.field)
    return (
        ("tE", e.scale(1)),
        ("L", l),
        ("M", m),
        ("N", n_lat),
        ("L+M", l.sum(m)),
        ("L+N", l.sum(n_lat)),
        ("M+N", m.sum(n_lat)),
        ("L+M+N", l.sum(m, n_lat)),
    )


def close_witness(l: Lattice, m: Lattice, n_lat: Lattice, i: int, j: int, k: int):
    """Witness lattice P and the value for a close triple: the first of the
    eight candidates whose star cost equals the eight-cut minimum."""
    triple = extract_triple(l, m, n_lat)
    value = min_formula(triple, i, j, k)
    for _, cand in close_candidates(l, m, n_lat):
        if star_cost((i, j, k), [l, m, n_lat], cand) == value:
            return cand, value
    raise AssertionError("no candidate achieves the minimum; theorem violated")
