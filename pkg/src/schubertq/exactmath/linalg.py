"""Exact dense linear algebra over Q and symbolic minors.

Scalar matrices are plain lists of rows of :class:`~fractions.Fraction`.
Polynomial matrices are lists of rows of :class:`Poly` sharing one ambient.
"""

from fractions import Fraction
from itertools import combinations
from math import lcm

from ..errors import AmbientMismatch, InvalidMinorSize
from .poly import Poly, as_fraction


def to_matrix(rows):
    return [[as_fraction(v) for v in row] for row in rows]


def identity(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r, c):
    return [[Fraction(0)] * c for _ in range(r)]


def transpose(a):
    return [list(col) for col in zip(*a)] if a else []


def matmul(a, b):
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def matsub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def flatten(a):
    return [v for row in a for v in row]


def reshape(values, r, c):
    values = list(values)
    if len(values) != r * c:
        raise AmbientMismatch(f"{len(values)} values cannot fill a {r}x{c} matrix")
    return [list(values[i * c:(i + 1) * c]) for i in range(r)]


def _integer_rows(a):
    rows = []
    for row in a:
        row = [as_fraction(v) for v in row]
        if not any(row):
            continue
        d = lcm(*(v.denominator for v in row))
        rows.append([v.numerator * (d // v.denominator) for v in row])
    return rows


def _bareiss_rank(rows, ncols):
    # rows: list of int lists, modified in place
    r = 0
    prev = 1
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        p = prow[col]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[col]
            if f:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j] - f * prow[j]) // prev
            else:
                for j in range(col + 1, ncols):
                    row[j] = (p * row[j]) // prev
            row[col] = 0
        prev = p
        r += 1
    return r


def rank(a):
    """Exact rank via fraction-free (Bareiss) elimination."""
    if not a:
        return 0
    ncols = len(a[0])
    return _bareiss_rank(_integer_rows(a), ncols)


def det(a):
    """Exact determinant of a square rational matrix (Bareiss)."""
    n = len(a)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    rows = []
    for row in a:
        row = [as_fraction(v) for v in row]
        d = lcm(*(v.denominator for v in row))
        scale /= d
        rows.append([v.numerator * (d // v.denominator) for v in row])
    sign = 1
    prev = 1
    for k in range(n - 1):
        piv = next((i for i in range(k, n) if rows[i][k]), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            sign = -sign
        p = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (p * rows[i][j] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = p
    return sign * rows[n - 1][n - 1] * scale


def rref(a):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [list(map(as_fraction, row)) for row in a]
    if not m:
        return m, []
    nrows, ncols = len(m), len(m[0])
    pivots = []
    r = 0
    for col in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][col]
        m[r] = [v / p for v in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def nullspace(a, ncols=None):
    """Basis of the right kernel, one vector per free column (RREF order)."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    red, pivots = rref(a) if a else ([], [])
    free = [j for j in range(ncols) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(v)
    return basis


def inverse(a):
    n = len(a)
    aug = [list(map(as_fraction, row)) + e for row, e in zip(a, identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red[:n]]


# symbolic ---------------------------------------------------------------


def poly_matrix(ambient, rows):
    """Lift a grid of Poly / rationals to a PolyMatrix over ``ambient``."""
    ambient = tuple(ambient)
    out = []
    for row in rows:
        new = []
        for v in row:
            if isinstance(v, Poly):
                if v.ambient != ambient:
                    v = v.embed(ambient)
                new.append(v)
            else:
                new.append(Poly.constant(ambient, v))
        out.append(new)
    return out


def poly_matmul(a, b):
    ambient = a[0][0].ambient
    bt = transpose(b)
    out = []
    for row in a:
        new = []
        for col in bt:
            acc = Poly.zero(ambient)
            for x, y in zip(row, col):
                if x.terms and y.terms:
                    acc = acc + x * y
            new.append(acc)
        out.append(new)
    return out


def evaluate_matrix(pm, point):
    return [[p.evaluate(point) for p in row] for row in pm]


def minors(pm, size):
    """All ``size`` x ``size`` minors of a PolyMatrix.

    Emitted in row-set then column-set lexicographic order; identically
    zero minors are dropped.  Laplace expansion along the first chosen row
    with memoisation on (row tuple, column tuple).
    """
    nrows = len(pm)
    ncols = len(pm[0]) if nrows else 0
    if size < 1 or size > min(nrows, ncols):
        raise InvalidMinorSize(f"size {size} outside 1..{min(nrows, ncols)}")
    ambient = pm[0][0].ambient
    zero = Poly.zero(ambient)
    memo = {}

    def expand(rows, cols):
        key = (rows, cols)
        hit = memo.get(key)
        if hit is not None:
            return hit
        if len(rows) == 1:
            val = pm[rows[0]][cols[0]]
        else:
            val = zero
            r0, rest = rows[0], rows[1:]
            for pos, c in enumerate(cols):
                entry = pm[r0][c]
                if not entry.terms:
                    continue
                sub = expand(rest, cols[:pos] + cols[pos + 1:])
                if not sub.terms:
                    continue
                term = entry * sub
                val = val - term if pos % 2 else val + term
        memo[key] = val
        return val

    out = []
    for rows in combinations(range(nrows), size):
        for cols in combinations(range(ncols), size):
            d = expand(rows, cols)
            if d.terms:
                out.append(d)
    return out


def scalar_minors(a, size):
    """Numeric counterpart of :func:`minors` (zeros kept, same order)."""
    nrows, ncols = len(a), len(a[0])
    return [
        det([[a[i][j] for j in cols] for i in rows])
        for rows in combinations(range(nrows), size)
        for cols in combinations(range(ncols), size)
    ]
