"""Generator lists modelling Q-algebraic sets, and their Jacobians."""

from dataclasses import dataclass, field
from fractions import Fraction

from ..errors import AmbientMismatch
from .poly import Poly, as_fraction


@dataclass
class PolySystem:
    """A named-variable generator list.

    ``metadata`` holds JSON-native values only (it is written verbatim into
    ideal files).  ``dimension`` is the claimed real dimension, if known.
    """

    ambient: tuple
    generators: list
    dimension: int = None
    construction: str = "custom"
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        self.ambient = tuple(self.ambient)
        for g in self.generators:
            if g.ambient != self.ambient:
                raise AmbientMismatch("generator ambient differs from system ambient")

    @classmethod
    def from_strings(cls, ambient, texts, **kw):
        return cls(tuple(ambient), [Poly.parse(t, ambient) for t in texts], **kw)

    def __len__(self):
        return len(self.generators)

    def nvars(self):
        return len(self.ambient)

    def vanishes_at(self, point):
        return all(not g.evaluate(point) for g in self.generators)

    def values_at(self, point):
        return [g.evaluate(point) for g in self.generators]

    def max_degree(self):
        return max((g.degree() for g in self.generators), default=0)

    def subsystem(self, indices):
        return PolySystem(self.ambient, [self.generators[i] for i in indices],
                          construction=self.construction + ":subsystem")


def jacobian_at(system, point):
    """Gradient rows of every generator at ``point``, exactly.

    Accepts a :class:`PolySystem` or a plain list of Poly.
    """
    gens = system.generators if isinstance(system, PolySystem) else list(system)
    if not gens:
        return []
    n = len(gens[0].ambient)
    if len(point) != n:
        raise AmbientMismatch(f"point has {len(point)} coordinates, ambient has {n}")
    pts = [as_fraction(v) for v in point]
    powers = {}

    def pw(j, e):
        key = (j, e)
        v = powers.get(key)
        if v is None:
            v = powers[key] = pts[j] ** e
        return v

    rows = []
    for g in gens:
        row = [Fraction(0)] * n
        for exps, c in g.terms.items():
            support = [(j, e) for j, e in enumerate(exps) if e]
            for j, e in support:
                v = c * e
                for k, f in support:
                    if k == j:
                        if f > 1:
                            v *= pw(k, f - 1)
                    else:
                        v *= pw(k, f)
                    if not v:
                        break
                if v:
                    row[j] += v
        rows.append(row)
    return rows
