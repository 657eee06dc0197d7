"""Embedded Bott-Samelson resolutions Z_lambda of Schubert varieties.

For a normalized partition with ladder (c, a, b) the variety lives in
c copies of R^{(m+n)^2}, ordered (X, Y_{c-1}, ..., Y_1)::

    X in G_{m,n},  Y_k in G_{m_k, n_k}
    Y_k D_{d_k} = Y_k                       k = 1..c-1
    Y_{k+1} Y_k = Y_k  (with Y_c := X)      k = 1..c-1

It has dimension dim sigma_lambda = mn - |lambda|, so the Jacobian of the
generators has rank c(m+n)^2 - dim sigma_lambda at every point.
"""

import random
from dataclasses import dataclass, field

from .errors import NotInOpenCell, NotNormalized, NotOnGrassmannian
from .exactmath import Poly, PolySystem, format_fraction, jacobian_at, rank
from .exactmath import linalg
from .grassmann import (flag_projector, grassmann_block, is_on_grassmannian, matrix_names,
                        projection_onto_span, symbolic_matrix)
from .partitions import Partition, normalize, profile
from .schubert import lift_through_trace, open_cell_membership, random_cell_point


@dataclass
class BottSamelsonSystem:
    partition: Partition
    system: PolySystem
    profile: object
    dim_sigma: int
    rank_target: int

    @property
    def c(self):
        return self.profile.c


def _require_normalized(lam):
    if not lam.is_normalized():
        raise NotNormalized(f"{lam} has a full top row or a non-empty last row")


def block_names(c, N):
    """Variable names per block in ambient order: X, Y_{c-1}, ..., Y_1."""
    blocks = [matrix_names(N, "x")]
    for k in range(c - 1, 0, -1):
        blocks.append(matrix_names(N, f"y{k}_"))
    return blocks


def dimension_from_profile(prof, n):
    """sum_k a_k (n - sum_{i=k}^{c-1} b_i)."""
    c = prof.c
    return sum(prof.a[k - 1] * (n - sum(prof.b[k:c])) for k in range(1, c + 1))


def bott_samelson_ideal(lam):
    _require_normalized(lam)
    prof = profile(lam)
    m, n, c = lam.m, lam.n, prof.c
    N = m + n
    blocks = block_names(c, N)
    ambient = tuple(v for blk in blocks for v in blk)

    gens, bounds = [], []
    block_of = {}
    g, b = grassmann_block(ambient, blocks[0], N, m, offset=0)
    gens.extend(g)
    bounds.append(b)
    mats = {c: symbolic_matrix(ambient, blocks[0], N)}
    layout = [{"block": "X", "trace": m, "start": 0}]
    for pos, k in enumerate(range(c - 1, 0, -1), start=1):
        names = blocks[pos]
        Y = symbolic_matrix(ambient, names, N)
        mats[k] = Y
        start = len(gens)
        g, b = grassmann_block(ambient, names, N, prof.mk[k - 1], offset=start)
        gens.extend(g)
        bounds.append(b)
        D = linalg.poly_matrix(ambient, flag_projector(prof.dk[k - 1], N))
        YD = linalg.poly_matmul(Y, D)
        gens.extend(YD[i][j] - Y[i][j] for i in range(N) for j in range(N))
        prod = linalg.poly_matmul(mats[k + 1], Y)
        gens.extend(prod[i][j] - Y[i][j] for i in range(N) for j in range(N))
        layout.append({"block": f"Y{k}", "trace": prof.mk[k - 1], "start": start})
        block_of[k] = pos

    dim_sigma = m * n - lam.weight
    meta = {
        "construction": "bott-samelson",
        "box": [m, n],
        "partition": list(lam.parts),
        "profile": prof.to_json(),
        "layout": layout,
        "rank_target": c * N * N - dim_sigma,
        "bounds": bounds,
    }
    system = PolySystem(ambient, gens, dimension=dim_sigma, construction="bott-samelson",
                        metadata=meta)
    return BottSamelsonSystem(lam, system, prof, dim_sigma, c * N * N - dim_sigma)


def canonical_base_point(lam):
    """(D_m, D_{m_{c-1}}, ..., D_{m_1}) flattened row-major, block by block."""
    _require_normalized(lam)
    prof = profile(lam)
    N = lam.m + lam.n
    point = linalg.flatten(flag_projector(lam.m, N))
    for k in range(prof.c - 1, 0, -1):
        point.extend(linalg.flatten(flag_projector(prof.mk[k - 1], N)))
    return point


def flag_section_blocks(A, lam, prof=None):
    """B_k = projection onto range(A) & R^{d_k} for k = c-1..1."""
    prof = prof or profile(lam)
    N = lam.m + lam.n
    shifted = [[A[i][j] - (1 if i == j else 0) for j in range(N)] for i in range(N)]
    out = []
    for k in range(prof.c - 1, 0, -1):
        d = prof.dk[k - 1]
        # vectors of R^d fixed by A
        kernel = linalg.nullspace([row[:d] for row in shifted], d)
        basis = [v + [0] * (N - d) for v in kernel]
        mk = prof.mk[k - 1]
        if len(basis) != mk:
            raise NotInOpenCell(f"range(A) & R^{d} has dimension {len(basis)}, expected {mk}")
        out.append(projection_onto_span(basis, mk, N - mk).rows())
    return out


def section_over_cell(A, lam):
    """The unique point of Z_lambda over A in the open cell, flattened."""
    _require_normalized(lam)
    rows = A.rows() if hasattr(A, "rows") else [list(r) for r in A]
    if not is_on_grassmannian(rows, lam.m, lam.n):
        raise NotOnGrassmannian("A is not on the Grassmannian")
    if not open_cell_membership(rows, lam):
        raise NotInOpenCell(f"A is not in the open cell of {lam}")
    point = linalg.flatten(rows)
    for B in flag_section_blocks(rows, lam):
        point.extend(linalg.flatten(B))
    return point


def literal_products(A, lam):
    """A D_{d_k} for k = c-1..1 (compared against the section in reports)."""
    prof = profile(lam)
    N = lam.m + lam.n
    rows = A.rows() if hasattr(A, "rows") else [list(r) for r in A]
    return [linalg.matmul(rows, flag_projector(prof.dk[k - 1], N)) for k in range(prof.c - 1, 0, -1)]


def index_set_cardinalities(prof, m, n):
    """Enumerate S_1..S_4 and T for every k and compare with the closed forms."""
    N = m + n
    rows = []
    for k in range(1, prof.c + 1):
        mk, d = prof.mk[k - 1], prof.dk[k - 1]
        mprev = prof.mk[k - 2] if k >= 2 else 0
        pairs = [(i, j) for i in range(1, N + 1) for j in range(1, N + 1)]
        s1 = sum(1 for i, j in pairs if i < j <= d)
        s2 = sum(1 for i, j in pairs if i <= j <= mk)
        s3 = sum(1 for i, j in pairs if mk < i <= j <= d)
        s4 = sum(1 for i, j in pairs if d < i or d < j)
        t = sum(1 for i, j in pairs if mk < i <= d and j <= mprev) if k >= 2 else 0
        s_expected = N * N - mk * (d - mk)
        t_expected = mprev * (d - mk)
        total_expected = N * N - prof.a[k - 1] * (d - mk)
        rows.append({
            "k": k, "m_k": mk, "d_k": d,
            "S1": s1, "S2": s2, "S3": s3, "S4": s4, "T": t,
            "S_sum": s1 + s2 + s3 + s4, "S_expected": s_expected,
            "T_expected": t_expected, "total_expected": total_expected,
            "ok": (s1 + s2 + s3 + s4 == s_expected and t == t_expected
                   and s1 + s2 + s3 + s4 + t == total_expected),
        })
    return rows


@dataclass
class BottSamelsonReport:
    partition: Partition
    c: int
    dim_sigma: int
    dim_from_profile: int
    rank_target: int
    rank_at_base: int
    cardinalities: list
    extra_ranks: list = field(default_factory=list)

    @property
    def rank_ok(self):
        return self.rank_at_base == self.rank_target and all(r == self.rank_target for r in self.extra_ranks)

    @property
    def dimension_ok(self):
        return self.dim_sigma == self.dim_from_profile

    @property
    def cardinalities_ok(self):
        return all(row["ok"] for row in self.cardinalities)

    @property
    def ok(self):
        return self.rank_ok and self.dimension_ok and self.cardinalities_ok

    def to_json(self):
        return {
            "partition": self.partition.to_json(),
            "c": self.c,
            "dim": self.dim_sigma,
            "dim_from_profile": self.dim_from_profile,
            "rank_target": self.rank_target,
            "rank_at_base": self.rank_at_base,
            "extra_ranks": list(self.extra_ranks),
            "cardinalities": self.cardinalities,
            "ok": self.ok,
        }


def certify_bott_samelson(lam, points=(), bs=None):
    """Exact Jacobian rank at the canonical base point (and at ``points``),
    index-set counts, and the dimension identity."""
    _require_normalized(lam)
    bs = bs or bott_samelson_ideal(lam)
    base = canonical_base_point(lam)
    if not bs.system.vanishes_at(base):
        raise AssertionError("canonical base point is not on Z_lambda")
    r0 = rank(jacobian_at(bs.system, base))
    extra = [rank(jacobian_at(bs.system, p)) for p in points]
    return BottSamelsonReport(
        partition=lam, c=bs.c, dim_sigma=bs.dim_sigma,
        dim_from_profile=dimension_from_profile(bs.profile, lam.n),
        rank_target=bs.rank_target, rank_at_base=r0,
        cardinalities=index_set_cardinalities(bs.profile, lam.m, lam.n),
        extra_ranks=extra,
    )


def _fmt(rows):
    return [[format_fraction(v) for v in r] for r in rows]


def section_check(lam, rng, bs=None):
    """Sample A in the open cell, build the section and compare with A D_{d_k}."""
    bs = bs or bott_samelson_ideal(lam)
    A = random_cell_point(lam, rng)
    point = section_over_cell(A, lam)
    N = lam.m + lam.n
    blocks = flag_section_blocks(A.rows(), lam)
    literal = literal_products(A, lam)
    return {
        "A": A.to_json(),
        "on_variety": bs.system.vanishes_at(point),
        "rank": rank(jacobian_at(bs.system, point)),
        "projects_to_A": point[:N * N] == A.flat(),
        "sections": [_fmt(B) for B in blocks],
        "literal_products": [_fmt(P) for P in literal],
        "literal_equals_section": [B == P for B, P in zip(blocks, literal)],
    }


@dataclass
class PipelineReport:
    normalization: object
    dim: int
    certificate: BottSamelsonReport = None
    section: dict = None
    base_point_in_box: list = None

    @property
    def ok(self):
        if self.certificate is None:
            return self.dim == 0
        sec_ok = self.section is None or (self.section["on_variety"] and self.section["projects_to_A"])
        return self.certificate.ok and sec_ok

    def to_json(self):
        norm = self.normalization
        out = {
            "partition": norm.partition.to_json(),
            "trace": [mv.to_json() for mv in norm.moves],
            "core": None if norm.core is None else norm.core.to_json(),
            "point": norm.is_point,
            "dim": self.dim,
            "rank_target": None,
            "rank_at_base": None,
            "cardinalities": [],
            "ok": self.ok,
        }
        if self.certificate is not None:
            cert = self.certificate
            out.update(rank_target=cert.rank_target, rank_at_base=cert.rank_at_base,
                       cardinalities=cert.cardinalities, c=cert.c,
                       dim_from_profile=cert.dim_from_profile)
        if self.section is not None:
            out["section"] = self.section
        if self.base_point_in_box is not None:
            out["base_point_in_box"] = self.base_point_in_box
        return out


def desingularize(lam, seed=0, with_section=True):
    """Normalize, then resolve and certify the core."""
    norm = normalize(lam)
    dim = lam.m * lam.n - lam.weight
    if norm.is_point:
        N0 = norm.box[1]
        point = lift_through_trace(norm, [[0] * N0 for _ in range(N0)])
        return PipelineReport(norm, dim, base_point_in_box=_fmt(point))
    core = norm.core
    bs = bott_samelson_ideal(core)
    cert = certify_bott_samelson(core, bs=bs)
    section = section_check(core, random.Random(seed), bs=bs) if with_section else None
    N = core.m + core.n
    base_X = linalg.reshape(canonical_base_point(core)[:N * N], N, N)
    return PipelineReport(norm, dim, cert, section,
                          base_point_in_box=_fmt(lift_through_trace(norm, base_X)))
