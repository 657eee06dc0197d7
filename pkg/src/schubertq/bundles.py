"""Universal vector / sphere bundles over Grassmannians and their pullbacks."""

from dataclasses import dataclass, field

from .errors import AmbientMismatch, IndexOutOfRange, UncertifiedDenominator
from .exactmath import Poly, PolySystem
from .exactmath import linalg
from .grassmann import bound_json, grassmann_block, matrix_names, symbolic_matrix


def _fiber_names(N, tag=""):
    if tag:
        return [f"y{tag}_{j}" for j in range(1, N + 1)], f"t{tag}"
    return [f"y{j}" for j in range(1, N + 1)], "t"


def _fiber_equations(ambient, M, ynames, tname=None):
    """Entries of M y - y, then |y|^2 + t^2 - t when ``tname`` is given."""
    N = len(ynames)
    y = [Poly.variable(ambient, v) for v in ynames]
    gens = []
    for i in range(N):
        acc = -y[i]
        for j in range(N):
            if M[i][j].terms:
                acc = acc + M[i][j] * y[j]
        gens.append(acc)
    if tname is not None:
        t = Poly.variable(ambient, tname)
        sphere = t * t - t
        for v in y:
            sphere = sphere + v * v
        gens.append(sphere)
    return gens


def universal_bundle_ideal(m, n):
    N = m + n
    xs = matrix_names(N)
    ys, _ = _fiber_names(N)
    ambient = tuple(xs + ys)
    gens, bound = grassmann_block(ambient, xs, N, m)
    gens += _fiber_equations(ambient, symbolic_matrix(ambient, xs, N), ys)
    meta = {"construction": "vbundle", "box": [m, n], "trace_index": N * (N - 1) // 2 + N * N,
            "bounds": [bound]}
    return PolySystem(ambient, gens, dimension=m * (n + 1), construction="vbundle", metadata=meta)


def sphere_bundle_ideal(m, n):
    N = m + n
    xs = matrix_names(N)
    ys, t = _fiber_names(N)
    ambient = tuple(xs + ys + [t])
    gens, bound = grassmann_block(ambient, xs, N, m)
    gens += _fiber_equations(ambient, symbolic_matrix(ambient, xs, N), ys, t)
    fiber = _fiber_bound(ambient, ys, t, len(gens) - 1)
    meta = {"construction": "sphere_bundle", "box": [m, n],
            "trace_index": N * (N - 1) // 2 + N * N, "bounds": [bound, fiber]}
    return PolySystem(ambient, gens, dimension=m * (n + 1), construction="sphere_bundle",
                      metadata=meta)


def _fiber_bound(ambient, ys, t, index):
    g = Poly.zero(ambient)
    for v in list(ys) + [t]:
        g = g + Poly.variable(ambient, v) ** 2
    g = g - Poly.variable(ambient, t)
    return bound_json(list(ys) + [t], g, {index: Poly.constant(ambient, 1)}, [])


def phi_generators(system):
    """Generators without the trace polynomial."""
    skip = system.metadata.get("trace_index")
    return [g for i, g in enumerate(system.generators) if i != skip]


def sub_bundle_zeroed(mlist, i0):
    """Product of sphere bundles with the fiber of factor ``i0`` forced to 0.

    Factor i uses variables x{i}_{rc}, y{i}_{j}, t{i} (1-based i).
    """
    if not 0 <= i0 < len(mlist):
        raise IndexOutOfRange(f"factor {i0} out of range 0..{len(mlist) - 1}")
    blocks = []
    for i, (mi, ni) in enumerate(mlist, start=1):
        N = mi + ni
        xs = [f"x{i}_{v[1:]}" for v in matrix_names(N)]
        ys, t = _fiber_names(N, str(i))
        blocks.append((mi, ni, xs, ys, t))
    ambient = tuple(v for _, _, xs, ys, t in blocks for v in xs + ys + [t])
    gens, bounds = [], []
    for mi, ni, xs, ys, t in blocks:
        N = mi + ni
        g, b = grassmann_block(ambient, xs, N, mi, offset=len(gens))
        gens += g
        bounds.append(b)
        gens += _fiber_equations(ambient, symbolic_matrix(ambient, xs, N), ys, t)
        bounds.append(_fiber_bound(ambient, ys, t, len(gens) - 1))
    _, _, _, ys, t = blocks[i0]
    gens += [Poly.variable(ambient, v) for v in ys + [t]]
    dim = sum(mi * ni for mi, ni in mlist) + sum(mi for k, (mi, _) in enumerate(mlist) if k != i0)
    meta = {"construction": "sub_bundle_zeroed", "factors": [list(p) for p in mlist],
            "zeroed": i0, "bounds": bounds}
    return PolySystem(ambient, gens, dimension=dim, construction="sub_bundle_zeroed", metadata=meta)


@dataclass
class PolyMap:
    """A Q-regular map into a product of Grassmannians.

    ``components[i]`` is an (m_i + n_i) x (m_i + n_i) grid of Poly over
    ``source_ambient``.  When ``denominator`` is set, the map is
    components / denominator and ``certificate_points`` must list points
    where the denominator is known to be nonzero.
    """

    source_ambient: tuple
    components: list
    denominator: Poly = None
    certificate_points: list = field(default_factory=list)
    ranks: list = None

    def __post_init__(self):
        self.source_ambient = tuple(self.source_ambient)
        self.components = [linalg.poly_matrix(self.source_ambient, blk) for blk in self.components]
        if self.denominator is not None and self.denominator.ambient != self.source_ambient:
            raise AmbientMismatch("denominator ambient differs from the source ambient")

    def check_denominator(self):
        if self.denominator is None:
            return
        if not self.certificate_points:
            raise UncertifiedDenominator("denominator given without nonvanishing certificate points")
        for p in self.certificate_points:
            if not self.denominator.evaluate(p):
                raise UncertifiedDenominator(f"denominator vanishes at certificate point {p}")

    def evaluate(self, point):
        d = 1 if self.denominator is None else self.denominator.evaluate(point)
        return [[[e.evaluate(point) / d for e in row] for row in blk] for blk in self.components]

    @classmethod
    def identity(cls, ambient, N, m=None):
        ranks = None if m is None else [m]
        return cls(ambient, [symbolic_matrix(tuple(ambient), list(ambient[:N * N]), N)], ranks=ranks)

    @classmethod
    def constant(cls, ambient, matrices):
        return cls(ambient, [[[Poly.constant(ambient, v) for v in row] for row in M] for M in matrices])


def pullback_sphere_bundle_ideal(W, mu):
    """W's generators plus, per factor i, mu_i(x) y^i - y^i and
    |y^i|^2 + t_i^2 - t_i.  A single factor uses the names y1.., t."""
    if tuple(W.ambient) != mu.source_ambient:
        raise AmbientMismatch("map source ambient differs from W's ambient")
    mu.check_denominator()
    multi = len(mu.components) > 1
    fibers = []
    for i, blk in enumerate(mu.components, start=1):
        fibers.append(_fiber_names(len(blk), str(i) if multi else ""))
    extra = [v for ys, t in fibers for v in ys + [t]]
    clash = set(extra) & set(W.ambient)
    if clash:
        raise AmbientMismatch(f"fiber variables collide with base variables: {sorted(clash)}")
    ambient = tuple(W.ambient) + tuple(extra)
    gens = [g.embed(ambient) for g in W.generators]
    bounds = [dict(b) for b in W.metadata.get("bounds", [])]
    den = None if mu.denominator is None else mu.denominator.embed(ambient)
    for blk, (ys, t) in zip(mu.components, fibers):
        M = [[e.embed(ambient) for e in row] for row in blk]
        if den is None:
            gens += _fiber_equations(ambient, M, ys, t)
        else:
            # (M/den) y - y = 0  <=>  M y - den y = 0 where den != 0
            y = [Poly.variable(ambient, v) for v in ys]
            for i in range(len(ys)):
                acc = -(den * y[i])
                for j in range(len(ys)):
                    acc = acc + M[i][j] * y[j]
                gens.append(acc)
            tt = Poly.variable(ambient, t)
            sphere = tt * tt - tt
            for v in y:
                sphere = sphere + v * v
            gens.append(sphere)
        bounds.append(_fiber_bound(ambient, ys, t, len(gens) - 1))
    meta = {
        "construction": "pullback",
        "base_construction": W.metadata.get("construction", W.construction),
        "factors": [len(blk) for blk in mu.components],
        "denominator": None if mu.denominator is None else str(mu.denominator),
        "bounds": bounds,
    }
    if mu.denominator is not None:
        meta["denominator_certificate_points"] = [[str(v) for v in p] for p in mu.certificate_points]
    dim = None
    if W.dimension is not None and mu.ranks is not None:
        dim = W.dimension + sum(mu.ranks)
    return PolySystem(ambient, gens, dimension=dim, construction="pullback", metadata=meta)
