"""JSON files: ideals, points, maps and certificates.

Ideal files list generators as term lists in graded-lex order; coefficients
are "p/q" strings so nothing is lost.  Serialization is deterministic
(sorted keys, fixed indentation) so identical inputs give identical bytes.
"""

import json

from .bundles import PolyMap
from .certify import Certificate
from .errors import ParseError
from .exactmath import Poly, PolySystem, as_fraction, format_fraction

SCHEMA_VERSION = "1"


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=1) + "\n"


def _compact(obj):
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def dumps_ideal(data):
    """One generator per line; everything else compact.  Keys stay sorted."""
    gens = ",\n".join("  " + _compact(g) for g in data["generators"])
    return (
        "{\n"
        f' "generators": [\n{gens}\n ],\n'
        f' "metadata": {_compact(data["metadata"])},\n'
        f' "schema_version": {_compact(data["schema_version"])},\n'
        f' "variables": {_compact(data["variables"])}\n'
        "}\n"
    )


def ideal_to_json(system):
    meta = dict(system.metadata)
    meta.setdefault("construction", system.construction)
    meta["dimension"] = system.dimension
    return {
        "schema_version": SCHEMA_VERSION,
        "variables": list(system.ambient),
        "generators": [
            [{"coeff": format_fraction(c), "exps": list(e)} for e, c in g.sorted_terms()]
            for g in system.generators
        ],
        "metadata": meta,
    }


def ideal_from_json(data):
    try:
        if str(data.get("schema_version")) != SCHEMA_VERSION:
            raise ParseError(f"unsupported schema_version {data.get('schema_version')!r}")
        ambient = tuple(data["variables"])
        n = len(ambient)
        gens = []
        for terms in data["generators"]:
            d = {}
            for t in terms:
                exps = tuple(int(e) for e in t["exps"])
                if len(exps) != n or any(e < 0 for e in exps):
                    raise ParseError(f"bad exponent vector {t['exps']}")
                d[exps] = d.get(exps, 0) + as_fraction(t["coeff"])
            gens.append(Poly(ambient, d))
        meta = dict(data.get("metadata", {}))
    except (KeyError, TypeError, AttributeError, ValueError) as exc:
        if isinstance(exc, ParseError):
            raise
        raise ParseError(f"malformed ideal file: {exc}") from None
    return PolySystem(ambient, gens, dimension=meta.get("dimension"),
                      construction=meta.get("construction", "custom"), metadata=meta)


def _flatten(values):
    if isinstance(values, (list, tuple)):
        for v in values:
            yield from _flatten(v)
    else:
        yield values


def point_from_json(data):
    """A flat or nested list of rationals ("p/q" strings or integers)."""
    if isinstance(data, dict):
        data = data.get("point")
    if not isinstance(data, list):
        raise ParseError("a point file holds a (possibly nested) list")
    try:
        return [as_fraction(v) for v in _flatten(data)]
    except (TypeError, ValueError) as exc:
        raise ParseError(f"bad point coordinate: {exc}") from None


def point_to_json(point):
    return [format_fraction(as_fraction(v)) for v in point]


def map_from_json(data, ambient):
    """Map file: {"components": [[["poly", ...], ...], ...], "denominator": text|null,
    "certificate_points": [...], "ranks": [...]} over the base ambient."""
    try:
        comps = [[[Poly.parse(str(e), ambient) for e in row] for row in blk]
                 for blk in data["components"]]
        den = data.get("denominator")
        den = None if den is None else Poly.parse(str(den), ambient)
        pts = [point_from_json(p) for p in data.get("certificate_points", [])]
        ranks = data.get("ranks")
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed map file: {exc}") from None
    return PolyMap(ambient, comps, den, pts, ranks)


def certificate_from_json(data):
    try:
        return Certificate.from_json(data)
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed certificate: {exc}") from None


def load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from None
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror}") from None


def write_text(path, text):
    with open(path, "w") as fh:
        fh.write(text)
