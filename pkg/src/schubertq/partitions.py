"""Young diagrams in the m x n box.

Conventions: parts are listed top row first, ``n >= parts[0] >= ... >= 0``.
The *profile* splits the rows into blocks of equal length::

    rows of block i have length b_i + ... + b_{c-1}      (block c is empty)
    a_i = number of rows in block i,  b_0 = n - parts[0]

so that ``sum(a) == m`` and ``sum(b) == n``.  A partition is *normalized*
when ``b_0 > 0`` and ``a_c > 0`` (no full rows, last row empty).
"""

from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb

from .errors import BoxMismatch, InvalidDegree, InvalidPartition, NoDepression, NotNormalized


@dataclass(frozen=True)
class Partition:
    parts: tuple
    m: int
    n: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.m < 0 or self.n < 0:
            raise InvalidPartition("box sides must be non-negative")
        if len(parts) != self.m:
            raise InvalidPartition(f"expected {self.m} parts, got {len(parts)}")
        if any(p < 0 or p > self.n for p in parts):
            raise InvalidPartition(f"parts must lie in [0, {self.n}]")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition("parts must be weakly decreasing")

    @classmethod
    def of(cls, parts, n):
        parts = tuple(parts)
        return cls(parts, len(parts), n)

    @classmethod
    def empty(cls, m, n):
        return cls((0,) * m, m, n)

    @classmethod
    def full(cls, m, n):
        return cls((n,) * m, m, n)

    @property
    def box(self):
        return (self.m, self.n)

    @property
    def weight(self):
        return sum(self.parts)

    def part(self, k):
        """1-based part with the conventions lambda_0 = n, lambda_{m+1} = 0."""
        if k <= 0:
            return self.n
        if k > self.m:
            return 0
        return self.parts[k - 1]

    def is_normalized(self):
        return self.m > 0 and self.parts[0] < self.n and self.parts[-1] == 0

    def to_json(self):
        return {"box": [self.m, self.n], "parts": list(self.parts)}

    @classmethod
    def from_json(cls, data):
        m, n = data["box"]
        return cls(tuple(data["parts"]), m, n)

    def __str__(self):
        return f"({','.join(map(str, self.parts))}) in {self.m}x{self.n}"


@dataclass(frozen=True)
class PartitionProfile:
    c: int
    a: tuple
    b: tuple
    mk: tuple
    nk: tuple
    dk: tuple
    depressions: tuple

    def to_json(self):
        return {
            "c": self.c, "a": list(self.a), "b": list(self.b), "mk": list(self.mk),
            "nk": list(self.nk), "dk": list(self.dk),
            "depressions": [list(d) for d in self.depressions],
        }


def _ladder(lam):
    values = []
    counts = []
    for p in lam.parts:
        if values and values[-1] == p:
            counts[-1] += 1
        else:
            values.append(p)
            counts.append(1)
    if not values or values[-1] > 0:
        values.append(0)
        counts.append(0)
    c = len(values)
    b = [lam.n - values[0]] + [values[i] - values[i + 1] for i in range(c - 1)]
    return c, counts, b


def _direct_depressions(a, b):
    c = len(a)
    return tuple(
        (sum(a[:i]) + 1, sum(b[i:c]) + 1)
        for i in range(1, c)
    )


def profile(lam):
    """The (c, a, b, m_k, n_k, d_k, depressions) ladder of ``lam``.

    Depressions are only defined for normalized partitions.  For the others
    the depressions of the normalized core are reported, shifted back into
    the coordinates of the original box.
    """
    c, a, b = _ladder(lam)
    N = lam.m + lam.n
    mk, dk = [], []
    for k in range(1, c + 1):
        mk.append(sum(a[:k]))
        dk.append(mk[-1] + sum(b[:k]))
    nk = [N - v for v in mk]
    if a[-1] > 0 and b[0] > 0:
        deps = _direct_depressions(a, b)
    else:
        norm = normalize(lam)
        if norm.core is None:
            deps = ()
        else:
            row_off = sum(mv.amount for mv in norm.moves if mv.kind == "strip")
            col_off = sum(mv.amount for mv in norm.moves if mv.kind == "shrink")
            core = profile(norm.core)
            deps = tuple((r + row_off, s + col_off) for r, s in core.depressions)
    return PartitionProfile(c, tuple(a), tuple(b), tuple(mk), tuple(nk), tuple(dk), deps)


def rebuild(prof, m, n):
    """Inverse of :func:`profile`: recover the parts from (a, b)."""
    parts = []
    c = prof.c
    for i in range(c):
        parts.extend([sum(prof.b[i + 1:c])] * prof.a[i])
    return Partition(tuple(parts), m, n)


def cell_dimension(lam):
    return lam.m * lam.n - lam.weight


def bruhat_leq(lam, mu):
    if lam.box != mu.box:
        raise BoxMismatch(f"{lam.box} vs {mu.box}")
    return all(x <= y for x, y in zip(lam.parts, mu.parts))


@dataclass(frozen=True)
class Move:
    """One step of the normalization trace.

    ``strip``: delete ``amount`` full top rows, box (m - amount, n).
    ``shrink``: subtract ``amount`` from every part, box (m, n - amount).
    """

    kind: str
    amount: int
    box_before: tuple
    box_after: tuple

    def to_json(self):
        return {"move": self.kind, "amount": self.amount,
                "from": list(self.box_before), "to": list(self.box_after)}


@dataclass(frozen=True)
class Normalization:
    partition: Partition
    core: Partition  # None when the Schubert variety is a single point
    box: tuple
    moves: tuple

    @property
    def is_point(self):
        return self.core is None

    @property
    def is_whole_grassmannian(self):
        return self.core is not None and self.core.weight == 0

    def to_json(self):
        return {
            "partition": self.partition.to_json(),
            "core": None if self.core is None else self.core.to_json(),
            "box": list(self.box),
            "point": self.is_point,
            "trace": [mv.to_json() for mv in self.moves],
        }


def normalize(lam):
    """Reduce to a normalized core by shrink-ambient and strip-top moves.

    Shrink-ambient is tried first and only when ``0 < lambda_m < n``;
    strip-top applies when ``lambda_1 == n``.  Each move lowers m + n, so the
    loop terminates.  A core with no rows is returned as ``core=None`` (the
    Schubert variety is one point).
    """
    parts, m, n = lam.parts, lam.m, lam.n
    moves = []
    while m > 0:
        if 0 < parts[-1] < n:
            s = parts[-1]
            parts = tuple(p - s for p in parts)
            moves.append(Move("shrink", s, (m, n), (m, n - s)))
            n -= s
        elif parts[0] == n and n > 0:
            a1 = sum(1 for p in parts if p == n)
            parts = parts[a1:]
            moves.append(Move("strip", a1, (m, n), (m - a1, n)))
            m -= a1
        else:
            break
    core = Partition(parts, m, n) if m > 0 else None
    return Normalization(lam, core, (m, n), tuple(moves))


def erase_first_depression(lam):
    """Drop the first block of rows: mu_k = lambda_{k + a_1}, box (m - a_1, n)."""
    c, a, b = _ladder(lam)
    if c == 1:
        raise NoDepression(str(lam))
    if b[0] == 0 or a[-1] == 0:
        raise NotNormalized(str(lam))
    a1 = a[0]
    return Partition(lam.parts[a1:], lam.m - a1, lam.n)


def partitions_in_box(m, n):
    """Every partition in the box, in descending lexicographic order."""
    for parts in combinations_with_replacement(range(n, -1, -1), m):
        yield Partition(parts, m, n)


def betti_numbers(m, n):
    """Z/2 Betti numbers of G_{m,n}: entry k counts partitions of weight mn - k."""
    if m < 1 or n < 1:
        raise InvalidPartition("m and n must be positive")
    counts = [0] * (m * n + 1)
    for lam in partitions_in_box(m, n):
        counts[m * n - lam.weight] += 1
    assert sum(counts) == comb(m + n, m)
    return counts


def homology_basis(m, n, k):
    """Partitions indexing the cells of dimension k, descending lexicographic."""
    if not 0 <= k <= m * n:
        raise InvalidDegree(f"degree {k} outside 0..{m * n}")
    return [lam for lam in partitions_in_box(m, n) if lam.weight == m * n - k]


def parse_partition(text, m, n):
    """Parse '1,0' (padding with zeros up to m parts)."""
    text = str(text).strip()
    parts = [int(t) for t in text.replace(" ", "").split(",") if t] if text else []
    if len(parts) > m:
        raise InvalidPartition(f"{len(parts)} parts do not fit {m} rows")
    parts += [0] * (m - len(parts))
    return Partition(tuple(parts), m, n)
