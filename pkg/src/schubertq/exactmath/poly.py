"""Sparse multivariate polynomials over Q.

A :class:`Poly` is a dict ``{exponent tuple: Fraction}`` tied to an ordered
tuple of variable names (its *ambient*).  Exponent tuples are dense, one
entry per ambient variable.  Zero coefficients are never stored.

The canonical text form lists terms in graded-lex order (highest total
degree first, ties broken lexicographically on the exponent vector, larger
first)::

    >>> x = Poly.variables(("x1", "x2"))
    >>> str(x[0]**2 + x[1]**2 - 1)
    'x1^2 + x2^2 - 1'
"""

import re
from fractions import Fraction
from math import lcm

from ..errors import AmbientMismatch, ParseError, ZeroPolynomial


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad rational {value!r}") from exc
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass int, Fraction or 'p/q'")
    return Fraction(value)


def format_fraction(q):
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def grlex_key(exps):
    return (sum(exps), exps)


class Poly:
    __slots__ = ("ambient", "terms", "_hash")

    def __init__(self, ambient, terms=None):
        self.ambient = tuple(ambient)
        n = len(self.ambient)
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(exps)
                if len(exps) != n:
                    raise AmbientMismatch(f"monomial {exps} has {len(exps)} exponents, ambient has {n}")
                c = as_fraction(c)
                if c:
                    clean[exps] = clean.get(exps, 0) + c
            clean = {e: c for e, c in clean.items() if c}
        self.terms = clean
        self._hash = None

    # constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, ambient):
        return cls(ambient)

    @classmethod
    def constant(cls, ambient, c):
        ambient = tuple(ambient)
        return cls(ambient, {(0,) * len(ambient): c})

    @classmethod
    def variable(cls, ambient, name):
        ambient = tuple(ambient)
        try:
            j = ambient.index(name)
        except ValueError:
            raise AmbientMismatch(f"{name!r} not in ambient") from None
        exps = [0] * len(ambient)
        exps[j] = 1
        return cls(ambient, {tuple(exps): 1})

    @classmethod
    def variables(cls, ambient):
        ambient = tuple(ambient)
        return [cls.variable(ambient, v) for v in ambient]

    @classmethod
    def _raw(cls, ambient, terms):
        # trusted fast path: terms already clean
        p = object.__new__(cls)
        p.ambient = ambient
        p.terms = terms
        p._hash = None
        return p

    # basic queries --------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self):
        """Total degree; the zero polynomial has degree 0 by convention."""
        return max((sum(e) for e in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def variables_used(self):
        used = set()
        for exps in self.terms:
            used.update(j for j, e in enumerate(exps) if e)
        return sorted(used)

    def constant_term(self):
        return self.terms.get((0,) * len(self.ambient), Fraction(0))

    def homogeneous_part(self, d):
        return Poly._raw(self.ambient, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading_form(self):
        if not self.terms:
            raise ZeroPolynomial("leading form of the zero polynomial")
        return self.homogeneous_part(self.degree())

    # arithmetic -----------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.ambient != self.ambient:
                raise AmbientMismatch("polynomials live over different ambients")
            return other
        return Poly.constant(self.ambient, as_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = s
            else:
                terms.pop(e, None)
        return Poly._raw(self.ambient, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ambient, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = as_fraction(other)
            if not c:
                return Poly.zero(self.ambient)
            return Poly._raw(self.ambient, {e: c * v for e, v in self.terms.items()})
        other = self._coerce(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                s = terms.get(e, 0) + c1 * c2
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Poly._raw(self.ambient, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * (1 / as_fraction(other))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Poly.constant(self.ambient, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ambient == other.ambient and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.constant(self.ambient, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ambient, frozenset(self.terms.items())))
        return self._hash

    # calculus / evaluation ------------------------------------------------

    def derivative(self, j):
        if isinstance(j, str):
            j = self.ambient.index(j)
        terms = {}
        for exps, c in self.terms.items():
            e = exps[j]
            if e:
                new = list(exps)
                new[j] = e - 1
                terms[tuple(new)] = c * e
        return Poly._raw(self.ambient, terms)

    def evaluate(self, point):
        """Exact value at ``point`` (a sequence of rationals, ambient order).

        Works over a common integer denominator so the inner loop only
        touches Python ints.
        """
        if len(point) != len(self.ambient):
            raise AmbientMismatch(f"point has {len(point)} coordinates, ambient has {len(self.ambient)}")
        if not self.terms:
            return Fraction(0)
        pts = [as_fraction(v) for v in point]
        den = lcm(*(p.denominator for p in pts)) if pts else 1
        nums = [p.numerator * (den // p.denominator) for p in pts]
        cden = lcm(*(c.denominator for c in self.terms.values()))
        top = self.degree()
        den_pows = [1]
        for _ in range(top):
            den_pows.append(den_pows[-1] * den)
        total = 0
        for exps, c in self.terms.items():
            v = c.numerator * (cden // c.denominator)
            d = 0
            for num, e in zip(nums, exps):
                if e:
                    v *= num ** e
                    d += e
            total += v * den_pows[top - d]
        return Fraction(total, cden * den_pows[top])

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = point[0]
        return self.evaluate(point)

    # ambient bookkeeping --------------------------------------------------

    def embed(self, ambient):
        """Re-express over a larger ambient containing every used variable by name."""
        ambient = tuple(ambient)
        if ambient == self.ambient:
            return self
        index = {v: i for i, v in enumerate(ambient)}
        moves = []
        for j in self.variables_used():
            name = self.ambient[j]
            if name not in index:
                raise AmbientMismatch(f"variable {name!r} missing from target ambient")
            moves.append((j, index[name]))
        n = len(ambient)
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for src, dst in moves:
                new[dst] = exps[src]
            terms[tuple(new)] = c
        return Poly._raw(ambient, terms)

    def substitute(self, images):
        """Compose with polynomials: variable j is replaced by ``images[j]``."""
        if len(images) != len(self.ambient):
            raise AmbientMismatch("one image per ambient variable required")
        target = images[0].ambient if images else ()
        result = Poly.zero(target)
        cache = {}
        for exps, c in self.terms.items():
            term = Poly.constant(target, c)
            for j, e in enumerate(exps):
                if e:
                    key = (j, e)
                    if key not in cache:
                        cache[key] = images[j] ** e
                    term = term * cache[key]
            result = result + term
        return result

    # text form ------------------------------------------------------------

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps, c in self.sorted_terms():
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ambient, exps) if e
            )
            a = abs(c)
            if not mono:
                body = format_fraction(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_fraction(a)}*{mono}"
            if not pieces:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def __repr__(self):
        return f"Poly({str(self)!r})"

    @classmethod
    def parse(cls, text, ambient):
        ambient = tuple(ambient)
        index = {v: i for i, v in enumerate(ambient)}
        s = text.replace(" ", "")
        if not s:
            raise ParseError("empty polynomial text")
        if s == "0":
            return cls.zero(ambient)
        if s[0] not in "+-":
            s = "+" + s
        chunks = re.findall(r"[+-][^+-]+", s)
        if "".join(chunks) != s:
            raise ParseError(f"cannot parse {text!r}")
        n = len(ambient)
        terms = {}
        for chunk in chunks:
            sign = -1 if chunk[0] == "-" else 1
            coeff = Fraction(sign)
            exps = [0] * n
            for factor in chunk[1:].split("*"):
                if not factor:
                    raise ParseError(f"empty factor in {text!r}")
                if re.fullmatch(r"\d+(/\d+)?", factor):
                    coeff *= as_fraction(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in index:
                    raise ParseError(f"unknown variable {name!r}")
                if power and not power.isdigit():
                    raise ParseError(f"bad exponent in {factor!r}")
                exps[index[name]] += int(power) if power else 1
            key = tuple(exps)
            terms[key] = terms.get(key, 0) + coeff
        return cls(ambient, terms)


def leading_form(p):
    return p.leading_form()


def evaluate(p, point):
    return p.evaluate(point)


def sum_of_squares_of_vars(ambient, names):
    """Return ``sum(v**2 for v in names)`` over ``ambient``."""
    ambient = tuple(ambient)
    n = len(ambient)
    terms = {}
    for name in names:
        exps = [0] * n
        exps[ambient.index(name)] = 2
        terms[tuple(exps)] = Fraction(1)
    return Poly(ambient, terms)
