"""Certificates: Q-Jacobian witnesses, overtness, projective Q-closure,
plus the inversion compactification and puncture transforms.

Every certificate carries a JSON evidence payload with a ``check`` tag so
that :func:`replay_certificate` can re-run the same test and compare.
"""

from dataclasses import dataclass, field

from .errors import (DegreeTooSmall, InvalidDegree, PointNotOnVariety, ZeroConstant,
                     ZeroPolynomial)
from .exactmath import Poly, PolySystem, as_fraction, format_fraction, jacobian_at, rank

KINDS = ("QJacobianWitness", "Overt", "ProjectivelyQClosed", "Unknown")


@dataclass
class Certificate:
    kind: str
    evidence: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown certificate kind {self.kind!r}")

    def __bool__(self):
        return self.kind != "Unknown"

    def to_json(self):
        return {"kind": self.kind, "evidence": self.evidence}

    @classmethod
    def from_json(cls, data):
        return cls(data["kind"], dict(data.get("evidence", {})))


# -- Jacobian witness ---------------------------------------------------------

def verify_q_jacobian_witness(system, point, expected_dim):
    """QJacobianWitness when rank J(point) >= #vars - expected_dim.

    A sufficient witness only; a low rank is reported as Unknown, never as a
    proof of non-regularity.
    """
    N = system.nvars()
    if not 0 <= expected_dim < N:
        raise InvalidDegree(f"expected_dim must lie in 0..{N - 1}")
    pt = [as_fraction(v) for v in point]
    if len(pt) != N:
        raise PointNotOnVariety(f"point has {len(pt)} coordinates, ambient has {N}")
    bad = [i for i, v in enumerate(system.values_at(pt)) if v]
    if bad:
        raise PointNotOnVariety(f"generator {bad[0]} does not vanish at the point")
    r = rank(jacobian_at(system, pt)) if system.generators else 0
    need = N - expected_dim
    evidence = {
        "check": "jacobian",
        "point": [format_fraction(v) for v in pt],
        "expected_dim": expected_dim,
        "rank": r,
        "required_rank": need,
    }
    return Certificate("QJacobianWitness" if r >= need else "Unknown", evidence)


# -- overtness ------------------------------------------------------------------

def sos_collapse(system):
    """The single polynomial sum g_i^2 with the same real zero set."""
    gens = system.generators if isinstance(system, PolySystem) else list(system)
    if not gens:
        raise ValueError("sos_collapse needs at least one generator")
    out = Poly.zero(gens[0].ambient)
    for g in gens:
        out = out + g * g
    return out


def _even_pure_power_rule(form):
    """True when every monomial of the homogeneous ``form`` has even exponents
    and a positive coefficient, and x_j^deg occurs for every variable."""
    d = form.degree()
    if d == 0 or d % 2:
        return False
    for exps, c in form.terms.items():
        if c <= 0 or any(e % 2 for e in exps):
            return False
    n = len(form.ambient)
    for j in range(n):
        pure = tuple(d if k == j else 0 for k in range(n))
        if pure not in form.terms:
            return False
    return True


def overt_certificate(p):
    if p.is_zero():
        raise ZeroPolynomial("overtness of the zero polynomial")
    evidence = {"check": "overt", "variables": list(p.ambient), "poly": str(p),
                "degree": p.degree()}
    if len(p.ambient) == 1 and p.degree() >= 1:
        evidence["rule"] = "univariate"
        return Certificate("Overt", evidence)
    lf = p.leading_form()
    evidence["leading_form"] = str(lf)
    if _even_pure_power_rule(lf):
        evidence["rule"] = "even_pure_powers"
        return Certificate("Overt", evidence)
    evidence["rule"] = None
    return Certificate("Unknown", evidence)


def _sos_leading_form(gens):
    # only the top-degree generators reach the top degree of sum g^2
    nz = [g for g in gens if not g.is_zero()]
    if not nz:
        return None
    D = max(g.degree() for g in nz)
    out = Poly.zero(nz[0].ambient)
    for g in nz:
        if g.degree() == D:
            lf = g.leading_form()
            out = out + lf * lf
    return out


def _check_bound(system, bound):
    """Replay one bound witness: bound == sum mult_i g_i + sum_{i in squares} g_i^2,
    and the leading form of bound is the sum of squares of its variables."""
    amb = system.ambient
    b = Poly.parse(bound["bound"], amb)
    rhs = Poly.zero(amb)
    for idx, text in bound["multipliers"].items():
        rhs = rhs + Poly.parse(text, amb) * system.generators[int(idx)]
    for idx in bound["squares"]:
        g = system.generators[int(idx)]
        rhs = rhs + g * g
    if b != rhs or b.degree() != 2:
        return False
    target = Poly.zero(amb)
    for v in bound["variables"]:
        target = target + Poly.variable(amb, v) ** 2
    return b.leading_form() == target


def _bounds_route(system):
    bounds = system.metadata.get("bounds") or []
    if not bounds or not system.generators:
        return None
    covered = set()
    for bd in bounds:
        if any(int(i) >= len(system.generators) for i in list(bd["multipliers"]) + bd["squares"]):
            return None
        if not _check_bound(system, bd):
            return None
        covered.update(bd["variables"])
    if covered != set(system.ambient):
        return None
    D = 2 * system.max_degree()
    k = D // 4 + 1  # 4k > deg(sum g^2)
    return {
        "route": "bounds",
        "overt_polynomial": "sum g_i^2 + sum_B bound_B^(2k)",
        "k": k,
        "leading_form": f"sum_B |x_B|^{4 * k}",
        "bounds": bounds,
    }


def _containment_route(system):
    meta = system.metadata
    if meta.get("contained_in") != "grassmann" or "box" not in meta:
        return None
    from .grassmann import grassmann_ideal
    m, n = meta["box"]
    G = grassmann_ideal(m, n)
    if tuple(G.ambient) != tuple(system.ambient):
        return None
    if system.generators[:len(G.generators)] != G.generators:
        return None
    inner = projectively_q_closed_certificate(G)
    if inner.kind != "ProjectivelyQClosed":
        return None
    return {"route": "containment", "container": {"construction": "grassmann", "box": [m, n]},
            "container_certificate": inner.evidence}


def projectively_q_closed_certificate(system):
    evidence = {"check": "projective", "construction": system.metadata.get(
        "construction", system.construction)}
    lf = _sos_leading_form(system.generators)
    if lf is not None and not lf.is_zero():
        if (len(system.ambient) == 1 and lf.degree() >= 1) or _even_pure_power_rule(lf):
            evidence.update(route="sos", leading_form=str(lf))
            return Certificate("ProjectivelyQClosed", evidence)
    for route in (_bounds_route, _containment_route):
        found = route(system)
        if found is not None:
            evidence.update(found)
            return Certificate("ProjectivelyQClosed", evidence)
    evidence["route"] = None
    return Certificate("Unknown", evidence)


def replay_certificate(cert, system=None):
    """Re-run the check recorded in ``cert``; True when the verdict matches."""
    ev = cert.evidence
    check = ev.get("check")
    if check == "jacobian":
        again = verify_q_jacobian_witness(system, ev["point"], ev["expected_dim"])
        return again.kind == cert.kind and again.evidence["rank"] == ev["rank"]
    if check == "overt":
        p = Poly.parse(ev["poly"], tuple(ev["variables"]))
        return overt_certificate(p).kind == cert.kind
    if check == "projective":
        return projectively_q_closed_certificate(system).kind == cert.kind
    raise ValueError(f"cannot replay check {check!r}")


# -- compactification and puncture ------------------------------------------------

def _norm_squared(ambient, names=None):
    out = Poly.zero(ambient)
    for v in names if names is not None else ambient:
        out = out + Poly.variable(ambient, v) ** 2
    return out


def inversion_compactify(system, e=None):
    """Homogenize each generator against |x|^2 up to degree 2e.

    c x^a becomes c x^a |x|^(2(e - |a|)), so the zero set turns into
    theta(V) + {0} with theta(x) = x / |x|^2.  Whether 0 lies in V is the
    caller's business.
    """
    top = system.max_degree()
    if e is None:
        e = top
    if e < top:
        raise DegreeTooSmall(f"e={e} below the maximal generator degree {top}")
    amb = system.ambient
    r2 = _norm_squared(amb)
    powers = [Poly.constant(amb, 1)]
    for _ in range(e):
        powers.append(powers[-1] * r2)
    gens = []
    for g in system.generators:
        out = Poly.zero(amb)
        for exps, c in g.terms.items():
            out = out + Poly._raw(amb, {exps: c}) * powers[e - sum(exps)]
        gens.append(out)
    meta = {"construction": "compactify", "e": e,
            "source": system.metadata.get("construction", system.construction)}
    return PolySystem(amb, gens, dimension=system.dimension, construction="compactify",
                      metadata=meta)


def theta(point):
    pt = [as_fraction(v) for v in point]
    r2 = sum(v * v for v in pt)
    if not r2:
        raise ValueError("theta is undefined at the origin")
    return [v / r2 for v in pt]


def _fresh_name(ambient, base="y"):
    if base not in ambient:
        return base
    i = 0
    while f"{base}{i}" in ambient:
        i += 1
    return f"{base}{i}"


def puncture_lift(system, C):
    """Append a variable y and the generator y |x|^2 - C (C != 0)."""
    C = as_fraction(C)
    if not C:
        raise ZeroConstant("the puncture constant must be nonzero")
    y = _fresh_name(system.ambient)
    amb = tuple(system.ambient) + (y,)
    gens = [g.embed(amb) for g in system.generators]
    gens.append(Poly.variable(amb, y) * _norm_squared(amb, system.ambient) - C)
    meta = {"construction": "puncture", "C": format_fraction(C), "lift_variable": y,
            "source": system.metadata.get("construction", system.construction)}
    return PolySystem(amb, gens, dimension=system.dimension, construction="puncture",
                      metadata=meta)


def puncture_point(point, C):
    """The lift (p, C / |p|^2) of a nonzero point."""
    pt = [as_fraction(v) for v in point]
    r2 = sum(v * v for v in pt)
    if not r2:
        raise ValueError("the origin has no lift")
    return pt + [as_fraction(C) / r2]


__all__ = [
    "Certificate", "verify_q_jacobian_witness", "sos_collapse", "overt_certificate",
    "projectively_q_closed_certificate", "replay_certificate", "inversion_compactify",
    "theta", "puncture_lift", "puncture_point",
]
