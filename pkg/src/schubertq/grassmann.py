"""The Grassmannian G_{m,n} as symmetric idempotent trace-m matrices."""

from dataclasses import dataclass
from fractions import Fraction

from .errors import AmbientMismatch, DegenerateSpan, InvalidFlagIndex, NotOnGrassmannian
from .exactmath import Poly, PolySystem, as_fraction
from .exactmath import linalg


def matrix_names(N, prefix="x"):
    """Row-major entry names: x11, x12, ... (x1_10 style once N >= 10)."""
    sep = "" if N < 10 else "_"
    return [f"{prefix}{i}{sep}{j}" for i in range(1, N + 1) for j in range(1, N + 1)]


def symbolic_matrix(ambient, names, N):
    xs = {v: Poly.variable(ambient, v) for v in names}
    return [[xs[names[i * N + j]] for j in range(N)] for i in range(N)]


def bound_json(variables, bound, multipliers, squares):
    return {
        "variables": list(variables),
        "bound": str(bound),
        "multipliers": {str(i): str(p) for i, p in sorted(multipliers.items())},
        "squares": sorted(squares),
    }


def grassmann_block(ambient, names, N, trace, offset=0):
    """Generators X^T = X, X^2 = X, tr X = trace for one matrix block.

    Returns ``(generators, bound)``: ``bound`` certifies |X|^2 - trace as an
    explicit combination of the block's generators (generator indices are
    shifted by ``offset``)::

        |X|^2 - trace = sum_i (X^2 - X)_ii + (tr X - trace) + sum_{i<j} (x_ij - x_ji)^2
    """
    X = symbolic_matrix(ambient, names, N)
    gens = []
    sym_idx = []
    for i in range(N):
        for j in range(i + 1, N):
            sym_idx.append(offset + len(gens))
            gens.append(X[i][j] - X[j][i])
    sq = linalg.poly_matmul(X, X)
    diag_idx = []
    for i in range(N):
        for j in range(N):
            if i == j:
                diag_idx.append(offset + len(gens))
            gens.append(sq[i][j] - X[i][j])
    tr = Poly.zero(ambient)
    for i in range(N):
        tr = tr + X[i][i]
    trace_idx = offset + len(gens)
    gens.append(tr - trace)
    one = Poly.constant(ambient, 1)
    bound = Poly.zero(ambient)
    for v in names:
        bound = bound + Poly.variable(ambient, v) ** 2
    bound = bound - trace
    mult = {i: one for i in diag_idx}
    mult[trace_idx] = one
    return gens, bound_json(names, bound, mult, sym_idx)


def grassmann_ideal(m, n):
    N = m + n
    names = matrix_names(N)
    ambient = tuple(names)
    gens, bound = grassmann_block(ambient, names, N, m)
    return PolySystem(ambient, gens, dimension=m * n, construction="grassmann",
                      metadata={"construction": "grassmann", "box": [m, n], "bounds": [bound]})


def flag_projector(ell, N):
    """D_ell: the N x N diagonal 0/1 matrix with ell leading ones."""
    if ell < 0 or ell > N:
        raise InvalidFlagIndex(f"ell={ell} outside 0..{N}")
    return [[Fraction(int(i == j and i < ell)) for j in range(N)] for i in range(N)]


@dataclass(frozen=True)
class GrassmannPoint:
    matrix: tuple
    m: int
    n: int

    def __post_init__(self):
        mat = tuple(tuple(as_fraction(v) for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        if not is_on_grassmannian(mat, self.m, self.n):
            raise NotOnGrassmannian("matrix is not a symmetric idempotent of trace m")

    def rows(self):
        return [list(r) for r in self.matrix]

    def flat(self):
        return [v for r in self.matrix for v in r]

    def to_json(self):
        from .exactmath import format_fraction
        return [[format_fraction(v) for v in r] for r in self.matrix]


def is_on_grassmannian(P, m, n):
    N = m + n
    if len(P) != N or any(len(r) != N for r in P):
        raise AmbientMismatch(f"expected a {N}x{N} matrix")
    P = [[as_fraction(v) for v in r] for r in P]
    if any(P[i][j] != P[j][i] for i in range(N) for j in range(i + 1, N)):
        return False
    if sum(P[i][i] for i in range(N)) != m:
        return False
    return linalg.matmul(P, P) == P


def projection_onto_span(vectors, m, n):
    """Orthogonal projection A (A^T A)^{-1} A^T onto the span of ``vectors``."""
    vecs = [[as_fraction(v) for v in vec] for vec in vectors]
    N = m + n
    if len(vecs) != m or any(len(v) != N for v in vecs):
        raise AmbientMismatch(f"need {m} vectors of length {N}")
    if m == 0:
        return GrassmannPoint(linalg.zeros(N, N), 0, n)
    A = linalg.transpose(vecs)
    gram = linalg.matmul(vecs, A)
    if linalg.rank(gram) < m:
        raise DegenerateSpan("vectors are linearly dependent")
    P = linalg.matmul(linalg.matmul(A, linalg.inverse(gram)), vecs)
    return GrassmannPoint(P, m, n)


def intersection_dim(P, m, ell):
    """dim(range P  intersect  R^ell) for a projection P of rank m."""
    N = len(P)
    stacked = [list(P[i]) + [Fraction(int(i == j)) for j in range(ell)] for i in range(N)]
    return m + ell - linalg.rank(stacked)


def random_grassmann_point(m, n, rng, spread=3):
    """Projection onto the span of m random integer vectors (rejection on dependence)."""
    N = m + n
    while True:
        vecs = [[rng.randint(-spread, spread) for _ in range(N)] for _ in range(m)]
        try:
            return projection_onto_span(vecs, m, n)
        except DegenerateSpan:
            continue


def conjugate(P, G):
    """G^T P G."""
    return linalg.matmul(linalg.matmul(linalg.transpose(G), P), G)


def random_signed_permutation(N, rng):
    perm = list(range(N))
    rng.shuffle(perm)
    return [[Fraction(rng.choice((-1, 1)) if perm[i] == j else 0) for j in range(N)] for i in range(N)]
