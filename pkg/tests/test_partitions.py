from itertools import product
from math import comb

import pytest

from schubertq.errors import (BoxMismatch, InvalidDegree, InvalidPartition, NoDepression,
                              NotNormalized)
from schubertq.partitions import (Partition, betti_numbers, bruhat_leq, cell_dimension,
                                  erase_first_depression, homology_basis, normalize,
                                  parse_partition, partitions_in_box, profile, rebuild)


def brute_partitions(m, n):
    # oracle: filter all of {0..n}^m
    return [p for p in product(range(n + 1), repeat=m)
            if all(a >= b for a, b in zip(p, p[1:]))]


def boxes(limit):
    return [(m, n) for m in range(1, limit + 1) for n in range(1, limit + 1)]


def test_enumeration_matches_brute_force():
    for m, n in boxes(4):
        got = sorted(lam.parts for lam in partitions_in_box(m, n))
        assert got == sorted(brute_partitions(m, n))


def test_validation():
    with pytest.raises(InvalidPartition):
        Partition((1, 2), 2, 2)
    with pytest.raises(InvalidPartition):
        Partition((3, 0), 2, 2)
    with pytest.raises(InvalidPartition):
        Partition((1,), 2, 2)
    assert parse_partition("1", 2, 2).parts == (1, 0)
    with pytest.raises(InvalidPartition):
        parse_partition("1,1,1", 2, 2)


def test_json_roundtrip():
    lam = Partition((2, 1, 0), 3, 3)
    assert lam.to_json() == {"box": [3, 3], "parts": [2, 1, 0]}
    assert Partition.from_json(lam.to_json()) == lam


def test_profile_examples():
    p = profile(Partition((1, 0), 2, 2))
    assert (p.c, p.a, p.b, p.mk, p.dk) == (2, (1, 1), (1, 1), (1, 2), (2, 4))
    assert p.depressions == ((2, 2),)
    p = profile(Partition.empty(3, 2))
    assert (p.c, p.a, p.b, p.depressions) == (1, (3,), (2,), ())
    p = profile(Partition((2, 1), 2, 2))
    assert (p.c, p.a, p.b) == (3, (1, 1, 0), (0, 1, 1))


def test_profile_invariants_exhaustive():
    for m, n in boxes(4):
        for lam in partitions_in_box(m, n):
            p = profile(lam)
            assert sum(p.a) == m and sum(p.b) == n
            assert all(x >= 1 for x in p.a[:-1]) and all(x >= 1 for x in p.b[1:])
            assert p.dk[-1] == m + n
            assert all(nk == m + n - mk for mk, nk in zip(p.mk, p.nk))
            assert rebuild(p, m, n) == lam
            # each block has constant part sum_{k=i}^{c-1} b_k
            row = 0
            for i in range(p.c):
                for _ in range(p.a[i]):
                    assert lam.parts[row] == sum(p.b[i + 1:])
                    row += 1


def test_depressions_are_corners_of_the_diagram():
    # a depression (r, s) sits where row r first drops below row r - 1:
    # column s is one past the end of row r - 1
    for m, n in boxes(4):
        for lam in partitions_in_box(m, n):
            if not lam.is_normalized():
                continue
            for r, s in profile(lam).depressions:
                assert lam.part(r - 1) == s - 1
                assert lam.part(r) < lam.part(r - 1)


def test_cell_dimension():
    assert cell_dimension(Partition((1, 0), 2, 2)) == 3
    assert cell_dimension(Partition.full(3, 2)) == 0
    assert cell_dimension(Partition((2, 1), 2, 2)) == 1
    for m, n in boxes(3):
        for lam in partitions_in_box(m, n):
            assert cell_dimension(lam) + lam.weight == m * n


def test_bruhat_examples_and_order_axioms():
    a, b = Partition((1, 0), 2, 2), Partition((2, 1), 2, 2)
    assert bruhat_leq(a, b)
    assert not bruhat_leq(Partition((2, 0), 2, 2), Partition((1, 1), 2, 2))
    assert bruhat_leq(a, a)
    with pytest.raises(BoxMismatch):
        bruhat_leq(a, Partition((1, 0), 2, 3))
    for m, n in [(2, 2), (2, 3)]:
        ps = list(partitions_in_box(m, n))
        for x in ps:
            for y in ps:
                if bruhat_leq(x, y) and bruhat_leq(y, x):
                    assert x == y
                for z in ps:
                    if bruhat_leq(x, y) and bruhat_leq(y, z):
                        assert bruhat_leq(x, z)


def test_normalize_examples():
    nm = normalize(Partition((1, 0), 2, 2))
    assert nm.core == Partition((1, 0), 2, 2) and nm.moves == ()
    nm = normalize(Partition((2, 1), 2, 2))
    assert nm.core == Partition((0,), 1, 1)
    assert [(mv.kind, mv.amount) for mv in nm.moves] == [("shrink", 1), ("strip", 1)]
    assert nm.is_whole_grassmannian
    nm = normalize(Partition((2, 2), 2, 2))
    assert nm.is_point and nm.box == (0, 2)
    assert [(mv.kind, mv.amount) for mv in nm.moves] == [("strip", 2)]


def test_normalize_invariants_exhaustive():
    for m, n in boxes(4):
        for lam in partitions_in_box(m, n):
            nm = normalize(lam)
            size = m + n
            for mv in nm.moves:
                after = sum(mv.box_after)
                assert after < size
                size = after
            if nm.core is not None:
                core = nm.core
                assert core.is_normalized() or core.weight == 0
                # the variety keeps its dimension through the moves
                assert core.m * core.n - core.weight == m * n - lam.weight
            else:
                assert lam.weight == m * n


def test_erase_first_depression():
    assert erase_first_depression(Partition((1, 0), 2, 2)) == Partition((0,), 1, 2)
    assert erase_first_depression(Partition((2, 1, 0), 3, 3)) == Partition((1, 0), 2, 3)
    with pytest.raises(NoDepression):
        erase_first_depression(Partition.empty(2, 2))
    with pytest.raises(NotNormalized):
        erase_first_depression(Partition((2, 1), 2, 2))
    for m, n in boxes(3):
        for lam in partitions_in_box(m, n):
            if lam.is_normalized() and profile(lam).c >= 2:
                mu = erase_first_depression(lam)
                assert len(profile(mu).depressions) == len(profile(lam).depressions) - 1


def brute_betti(m, n):
    counts = [0] * (m * n + 1)
    for p in brute_partitions(m, n):
        counts[m * n - sum(p)] += 1
    return counts


def test_betti_numbers():
    assert betti_numbers(2, 2) == [1, 1, 2, 1, 1]
    assert betti_numbers(1, 2) == [1, 1, 1]
    assert betti_numbers(1, 1) == [1, 1]
    for m, n in boxes(5):
        b = betti_numbers(m, n)
        assert b == brute_betti(m, n)
        assert sum(b) == comb(m + n, m)
        assert b == b[::-1]


def test_homology_basis():
    assert [lam.parts for lam in homology_basis(2, 2, 2)] == [(2, 0), (1, 1)]
    assert [lam.parts for lam in homology_basis(2, 3, 0)] == [(3, 3)]
    assert [lam.parts for lam in homology_basis(2, 3, 6)] == [(0, 0)]
    for k, count in enumerate(betti_numbers(3, 2)):
        assert len(homology_basis(3, 2, k)) == count
    with pytest.raises(InvalidDegree):
        homology_basis(2, 2, 5)
