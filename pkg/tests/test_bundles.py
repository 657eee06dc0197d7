from fractions import Fraction as F

import pytest

from schubertq.bundles import (PolyMap, phi_generators, pullback_sphere_bundle_ideal,
                               sphere_bundle_ideal, sub_bundle_zeroed, universal_bundle_ideal)
from schubertq.errors import AmbientMismatch, IndexOutOfRange, UncertifiedDenominator
from schubertq.exactmath import Poly, PolySystem, flatten, jacobian_at, matmul, rank
from schubertq.grassmann import flag_projector, grassmann_ideal, random_grassmann_point

D1 = flatten(flag_projector(1, 2))


def test_universal_bundle():
    E = universal_bundle_ideal(1, 1)
    assert len(E.generators) == 8 and len(E.ambient) == 6
    assert E.dimension == 2
    assert E.vanishes_at(D1 + [5, 0])
    assert E.values_at(D1 + [0, 1])[-1] == -1


def test_sphere_bundle_points():
    S = sphere_bundle_ideal(1, 1)
    assert len(S.ambient) == 7
    assert S.vanishes_at(D1 + [F(1, 2), 0, F(1, 2)])
    assert S.vanishes_at(D1 + [0, 0, 0])
    assert not S.vanishes_at(D1 + [F(1, 2), 0, 1])
    assert "trace" not in " ".join(str(g) for g in phi_generators(S))
    assert len(phi_generators(S)) == len(S.generators) - 1


def test_phi_rank_is_the_codimension():
    # the fiber is an m-sphere, so the codimension is N^2 + N + 1 - m(n + 1)
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2)]:
        N = m + n
        S = sphere_bundle_ideal(m, n)
        pt = flatten(flag_projector(m, N)) + [F(1, 2)] + [0] * (N - 1) + [F(1, 2)]
        assert S.vanishes_at(pt)
        assert rank(jacobian_at(phi_generators(S), pt)) == N * N - m * n + n + 1
        assert rank(jacobian_at(S, pt)) == N * N - m * n + n + 1


def test_fiber_sphere_check(rng):
    m, n = 1, 2
    S = sphere_bundle_ideal(m, n)
    for _ in range(5):
        P = random_grassmann_point(m, n, rng)
        v = [rng.randint(-2, 2) for _ in range(3)]
        y = [row[0] for row in matmul(P.rows(), [[x] for x in v])]
        for t in (F(0), F(1, 3), F(1, 2)):
            on_sphere = sum(c * c for c in y) + t * t == t
            assert S.vanishes_at(P.flat() + y + [t]) == on_sphere


def test_sub_bundle_zeroed():
    Z = sub_bundle_zeroed([(1, 1)], 0)
    assert Z.vanishes_at(D1 + [0, 0, 0])
    assert not Z.vanishes_at(D1 + [F(1, 2), 0, F(1, 2)])
    Z = sub_bundle_zeroed([(1, 1), (1, 1)], 1)
    assert Z.vanishes_at(D1 + [F(1, 2), 0, F(1, 2)] + D1 + [0, 0, 0])
    assert not Z.vanishes_at(D1 + [0, 0, 0] + D1 + [F(1, 2), 0, F(1, 2)])
    assert Z.dimension == 1 + 1 + 1
    with pytest.raises(IndexOutOfRange):
        sub_bundle_zeroed([(1, 1)], 1)


def test_identity_pullback_recovers_sphere_bundle():
    for m, n in [(1, 1), (1, 2)]:
        G = grassmann_ideal(m, n)
        pb = pullback_sphere_bundle_ideal(G, PolyMap.identity(G.ambient, m + n, m))
        S = sphere_bundle_ideal(m, n)
        assert pb.ambient == S.ambient
        assert sorted(map(str, pb.generators)) == sorted(map(str, S.generators))
        assert pb.dimension == S.dimension


def test_constant_pullback_is_the_fiber():
    W = PolySystem.from_strings(["x"], ["x - 1"])
    pb = pullback_sphere_bundle_ideal(W, PolyMap.constant(W.ambient, [flag_projector(1, 2)]))
    gens = [str(g) for g in pb.generators if g]
    assert gens == ["x - 1", "-y2", "y1^2 + y2^2 + t^2 - t"]
    assert pb.vanishes_at([1, 0, 0, 0])
    assert pb.vanishes_at([1, F(1, 2), 0, F(1, 2)])


def test_pullback_functoriality(rng):
    # the circle mapped to G_{1,1} by the rational line through (x1, x2)
    W = PolySystem.from_strings(["x1", "x2"], ["x1^2 + x2^2 - 1"])
    amb = W.ambient
    comps = [[["x1^2", "x1*x2"], ["x1*x2", "x2^2"]]]
    mu = PolyMap(amb, [[[Poly.parse(t, amb) for t in row] for row in blk] for blk in comps])
    pb = pullback_sphere_bundle_ideal(W, mu)
    S = sphere_bundle_ideal(1, 1)
    for a, b in [(3, 4), (5, 12), (8, 15)]:
        c = a * a + b * b
        w = [F(a * a - b * b, c), F(2 * a * b, c)]
        X = flatten(mu.evaluate(w)[0])
        for y, t in [([0, 0], 0), ([w[0] / 2, w[1] / 2], F(1, 2)), ([1, 0], F(1, 2))]:
            assert pb.vanishes_at(w + list(y) + [t]) == S.vanishes_at(X + list(y) + [t])


def test_denominators_need_certificates():
    W = PolySystem.from_strings(["x"], ["x - 2"])
    amb = W.ambient
    num = [[[Poly.parse("x", amb), Poly.zero(amb)], [Poly.zero(amb), Poly.zero(amb)]]]
    den = Poly.parse("x", amb)
    with pytest.raises(UncertifiedDenominator):
        pullback_sphere_bundle_ideal(W, PolyMap(amb, num, den))
    with pytest.raises(UncertifiedDenominator):
        pullback_sphere_bundle_ideal(W, PolyMap(amb, num, den, [[0]]))
    pb = pullback_sphere_bundle_ideal(W, PolyMap(amb, num, den, [[2]]))
    assert pb.metadata["denominator"] == "x"
    assert pb.vanishes_at([2, F(1, 2), 0, F(1, 2)])
    assert not pb.vanishes_at([2, 0, F(1, 2), F(1, 2)])


def test_zero_section_and_mismatch():
    G = grassmann_ideal(1, 1)
    pb = pullback_sphere_bundle_ideal(G, PolyMap.identity(G.ambient, 2))
    assert pb.vanishes_at(D1 + [0, 0, 0])
    other = PolySystem.from_strings(["z"], ["z"])
    with pytest.raises(AmbientMismatch):
        pullback_sphere_bundle_ideal(other, PolyMap.identity(G.ambient, 2))
