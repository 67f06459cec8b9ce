"""Independent representatives of set systems and subspace families."""

import itertools
import random

import pytest

from latticeval.closecase import SubspaceTriple, min_formula
from latticeval.randgen import random_subspace
from latticeval.representatives import (
    coordinate_subspace,
    konig_linear_value,
    konig_linear_witness,
    konig_set_formula,
    konig_set_max,
    moshonkin_check,
    multiset_g,
)
from latticeval.scalars import GF, RATIONAL
from latticeval.subspaces import Subspace, all_subspaces, rank_of

F2 = GF(2)


def span(vecs, n, field=F2):
    return Subspace.span([[field.from_int(c) for c in v] for v in vecs], n, field)


def test_set_max_examples():
    assert konig_set_max([{1}, {1}, {2}]) == 2
    assert konig_set_max([]) == 0
    assert konig_set_max([{i} for i in range(7)]) == 7


def test_set_max_matches_formula():
    rng = random.Random(51)
    for _ in range(60):
        r = rng.randint(0, 6)
        sets = [
            set(rng.sample(range(5), rng.randint(0, 4))) for _ in range(r)
        ]
        assert konig_set_max(sets) == konig_set_formula(sets)


def test_linear_value_examples():
    e1 = span([(1, 0)], 2)
    e2 = span([(0, 1)], 2)
    assert konig_linear_value([e1, e1, e2]) == 2
    assert konig_linear_value([Subspace.full(4, F2)] * 3) == 3
    assert konig_linear_value([]) == 0


def test_witness_examples():
    e1 = span([(1, 0)], 2)
    e2 = span([(0, 1)], 2)
    w = konig_linear_witness([e1, e1, e2])
    assert len(w) == 2
    assert konig_linear_witness([Subspace.zero(3, F2)] * 2) == []
    w = konig_linear_witness([e1, e2])
    assert [(i, tuple(v)) for i, v in w] == [(1, (1, 0)), (2, (0, 1))]


def test_moshonkin():
    e1 = span([(1, 0)], 2)
    e2 = span([(0, 1)], 2)
    assert not moshonkin_check([e1, e1])
    assert moshonkin_check([e1, e2])
    assert moshonkin_check([])


def brute_force_max(subs, n, field):
    best = 0

    def go(i, vecs):
        nonlocal best
        best = max(best, len(vecs))
        if i == len(subs):
            return
        go(i + 1, vecs)
        for row in subs[i].rows:
            if rank_of(vecs + [row], n, field) == len(vecs) + 1:
                go(i + 1, vecs + [row])

    go(0, [])
    return best


def test_exhaustive_small_families():
    rng = random.Random(52)
    for n in (1, 2, 3):
        subs_all = all_subspaces(n, F2)
        for _ in range(30):
            r = rng.randint(1, 4)
            fam = [rng.choice(subs_all) for _ in range(r)]
            v = konig_linear_value(fam)
            assert v == brute_force_max(fam, n, F2)
            w = konig_linear_witness(fam)
            assert len(w) == v
            assert rank_of([vec for _, vec in w], n, F2) == v
            for i, vec in w:
                assert fam[i - 1].contains(vec)
            assert moshonkin_check(fam) == (v == r)


def test_multiset_matches_eight_cut_formula():
    rng = random.Random(53)
    for n in (2, 3):
        for _ in range(15):
            u1, u2, u3 = (random_subspace(rng, n, F2) for _ in range(3))
            for i, j, k in itertools.product(range(n + 1), repeat=3):
                if i + j + k != n:
                    continue
                assert multiset_g(u1, u2, u3, i, j, k) == min_formula(
                    SubspaceTriple(u1, u2, u3), i, j, k
                )


def test_multiset_examples():
    u = span([(1, 0, 0)], 3)
    assert multiset_g(u, u, u, 1, 1, 1) == 1
    d = [span([v], 3) for v in ((1, 0, 0), (0, 1, 0), (0, 0, 1))]
    assert multiset_g(*d, 1, 1, 1) == 3
    assert multiset_g(u, u, u, 0, 0, 0) == 0
    with pytest.raises(ValueError):
        multiset_g(u, u, u, -1, 1, 0)


def test_coordinate_consistency():
    rng = random.Random(54)
    for _ in range(25):
        n = rng.randint(1, 4)
        r = rng.randint(0, 4)
        sets = [
            sorted(rng.sample(range(n), rng.randint(0, n))) for _ in range(r)
        ]
        fam = [coordinate_subspace(s, n, F2) for s in sets]
        assert konig_set_max(sets) == konig_linear_value(fam)


def test_subset_cap():
    with pytest.raises(ValueError):
        konig_linear_value([Subspace.full(2, F2)] * 21)
