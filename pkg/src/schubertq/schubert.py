"""Schubert cells and varieties of G_{m,n} for the coordinate flag.

With V = range(X) and the flag R^1 < R^2 < ... < R^{m+n}, the incidence
conditions are read as ``dim(V & R^l) >= k`` at ``l = n + k - lambda_k``.
For an orthogonal projection X this equals ``l - rank((X - I) D_l)``, which
is how the ideal is generated: all (n - lambda_k + 1)-minors of
(X - I) D_l vanish.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidEmbedding, NotOnGrassmannian
from .exactmath import Poly, PolySystem
from .exactmath import linalg
from .grassmann import (GrassmannPoint, flag_projector, grassmann_ideal, intersection_dim,
                        is_on_grassmannian, projection_onto_span, symbolic_matrix)
from .partitions import Partition


def _rank_position(lam, k):
    return lam.n + k - lam.part(k)


def schubert_ideal(lam):
    """Grassmann generators followed by the minors for k = 1..m.

    Minor sizes that fit the matrix are always emitted (even when lambda_k is
    0 and the condition holds on all of G); identically zero minors are
    dropped.
    """
    m, n = lam.m, lam.n
    N = m + n
    base = grassmann_ideal(m, n)
    ambient = base.ambient
    X = symbolic_matrix(ambient, list(ambient), N)
    gens = list(base.generators)
    stages = []
    for k in range(1, m + 1):
        ell = _rank_position(lam, k)
        size = n - lam.part(k) + 1
        shifted = [[X[i][j] - (1 if i == j else 0) if j < ell else Poly.zero(ambient)
                    for j in range(N)] for i in range(N)]
        block = linalg.minors(shifted, size) if size <= N else []
        stages.append({"k": k, "flag": ell, "minor_size": size, "count": len(block)})
        gens.extend(block)
    meta = {
        "construction": "schubert",
        "box": [m, n],
        "partition": list(lam.parts),
        "stages": stages,
        "grassmann_generators": len(base.generators),
        "bounds": base.metadata["bounds"],
        "contained_in": "grassmann",
    }
    return PolySystem(ambient, gens, dimension=m * n - lam.weight,
                      construction="schubert", metadata=meta)


def _as_rows(P, lam):
    if isinstance(P, GrassmannPoint):
        if (P.m, P.n) != (lam.m, lam.n):
            raise NotOnGrassmannian("point lives on a different Grassmannian")
        return P.rows()
    rows = [list(r) for r in P]
    if not is_on_grassmannian(rows, lam.m, lam.n):
        raise NotOnGrassmannian("matrix is not on the Grassmannian")
    return rows


def flag_ranks(P, m):
    """dim(range P & R^l) for l = 0..N."""
    N = len(P)
    return [intersection_dim(P, m, ell) for ell in range(N + 1)]


def schubert_membership(P, lam):
    rows = _as_rows(P, lam)
    return all(
        intersection_dim(rows, lam.m, _rank_position(lam, k)) >= k
        for k in range(1, lam.m + 1)
    )


def open_cell_membership(P, lam):
    """All window equalities, k = 0..m, with lambda_0 = n and lambda_{m+1} = 0."""
    rows = _as_rows(P, lam)
    r = flag_ranks(rows, lam.m)
    for k in range(0, lam.m + 1):
        lo = lam.n + k - lam.part(k)
        hi = lam.n + k - lam.part(k + 1)
        if any(r[ell] != k for ell in range(lo, hi + 1)):
            return False
    return True


def cell_partition(P, m, n):
    """The unique lambda with P in the open cell Omega_lambda."""
    rows = [list(r) for r in (P.rows() if isinstance(P, GrassmannPoint) else P)]
    r = flag_ranks(rows, m)
    pivots = [next(ell for ell in range(len(r)) if r[ell] >= k) for k in range(1, m + 1)]
    return Partition(tuple(n + k - p for k, p in zip(range(1, m + 1), pivots)), m, n)


def pivot_positions(lam):
    return [_rank_position(lam, k) for k in range(1, lam.m + 1)]


def cell_basis(lam, params):
    """Echelon basis of a point of Omega_lambda.

    Vector k has a 1 at pivot p_k = n + k - lambda_k, zeros at the other
    pivots and after p_k, and free entries elsewhere below p_k, filled from
    ``params`` (exactly mn - |lambda| values, in order).
    """
    N = lam.m + lam.n
    piv = pivot_positions(lam)
    params = list(params)
    if len(params) != lam.m * lam.n - lam.weight:
        raise ValueError(f"need {lam.m * lam.n - lam.weight} parameters, got {len(params)}")
    it = iter(params)
    vecs = []
    for p in piv:
        v = [Fraction(0)] * N
        v[p - 1] = Fraction(1)
        for j in range(1, p):
            if j not in piv:
                v[j - 1] = Fraction(next(it))
        vecs.append(v)
    return vecs


def cell_point(lam, params):
    return projection_onto_span(cell_basis(lam, params), lam.m, lam.n)


def random_cell_point(lam, rng, spread=3):
    k = lam.m * lam.n - lam.weight
    return cell_point(lam, [rng.randint(-spread, spread) for _ in range(k)])


def embedding_partition(mp, np, m, n):
    return Partition(tuple(n if k <= m - mp else n - np for k in range(1, m + 1)), m, n)


@dataclass(frozen=True)
class SubGrassmannianEmbedding:
    """G_{mp,np} -> G_{m,n}: I on the first m - mp diagonal entries, X' on
    the window of indices m - mp + 1 .. m + np, zero elsewhere."""

    mp: int
    np: int
    m: int
    n: int

    @property
    def offset(self):
        return self.m - self.mp

    def __call__(self, Xp):
        rows = Xp.rows() if isinstance(Xp, GrassmannPoint) else [list(r) for r in Xp]
        N = self.m + self.n
        Np = self.mp + self.np
        if len(rows) != Np:
            raise InvalidEmbedding(f"expected a {Np}x{Np} matrix")
        out = linalg.zeros(N, N)
        for i in range(self.offset):
            out[i][i] = Fraction(1)
        o = self.offset
        for s in range(Np):
            for t in range(Np):
                out[o + s][o + t] = rows[s][t]
        return out

    def index_map(self):
        """(s, t) of the source -> (i, j) of the target, 1-based."""
        Np = self.mp + self.np
        o = self.offset
        return {(s, t): (s + o, t + o) for s in range(1, Np + 1) for t in range(1, Np + 1)}


def subgrassmannian_embedding(mp, np, m, n):
    if not (0 <= mp <= m and 0 <= np <= n) or m + n == 0:
        raise InvalidEmbedding(f"cannot embed G_{{{mp},{np}}} into G_{{{m},{n}}}")
    phi = SubGrassmannianEmbedding(mp, np, m, n)
    return phi, schubert_ideal(embedding_partition(mp, np, m, n))


def lift_through_trace(norm, core_matrix):
    """Push a point of the normalized core back into the original box.

    Undoes the moves of :func:`~schubertq.partitions.normalize` last-first:
    a strip of a rows is the embedding G_{m-a,n} -> G_{m,n}, a shrink by s
    is G_{m,n-s} -> G_{m,n}.
    """
    X = [list(r) for r in core_matrix]
    for mv in reversed(norm.moves):
        (m0, n0), (m1, n1) = mv.box_before, mv.box_after
        X = SubGrassmannianEmbedding(m1, n1, m0, n0)(X)
    return X


def diagonal_point(m, n):
    return GrassmannPoint(flag_projector(m, m + n), m, n)
