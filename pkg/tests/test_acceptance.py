"""Acceptance criteria 1-10.

Each test records a PASS/FAIL line (with its runtime) that the terminal
summary prints, and fails if the check or its time budget fails.  Run
standalone with ``python3 tests/test_acceptance.py`` for the lines alone.
"""

import random
import time
from fractions import Fraction as F
from functools import wraps
from itertools import combinations, permutations, product
from math import comb

from schubertq.bottsamelson import (bott_samelson_ideal, canonical_base_point,
                                    dimension_from_profile, section_over_cell)
from schubertq.bundles import phi_generators, sphere_bundle_ideal
from schubertq.certify import (inversion_compactify, puncture_lift, theta,
                               verify_q_jacobian_witness)
from schubertq.exactmath import PolySystem, flatten, jacobian_at, rank, reshape
from schubertq.grassmann import flag_projector, grassmann_ideal, random_grassmann_point
from schubertq.partitions import (Partition, betti_numbers, erase_first_depression, normalize,
                                  partitions_in_box, profile)
from schubertq.schubert import random_cell_point, schubert_ideal, schubert_membership

RESULTS = {}


def criterion(number, title, budget):
    def wrap(fn):
        @wraps(fn)
        def run(*args, **kw):
            t0 = time.perf_counter()
            detail, ok = "", False
            try:
                detail = fn(*args, **kw) or ""
                ok = True
            except AssertionError as exc:
                detail = str(exc).splitlines()[0] if str(exc) else "assertion failed"
                raise
            finally:
                dt = time.perf_counter() - t0
                if ok and dt >= budget:
                    ok = False
                    detail = f"over time budget ({dt:.2f}s >= {budget}s)"
                RESULTS[number] = (ok, f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  "
                                       f"{title}  [{dt:.2f}s / {budget}s] {detail}".rstrip())
            assert dt < budget, f"criterion {number} took {dt:.2f}s (budget {budget}s)"
        return run
    return wrap


# -- independent oracles --------------------------------------------------------------

def brute_weakly_decreasing(m, n):
    return [p for p in product(range(n + 1), repeat=m) if all(a >= b for a, b in zip(p, p[1:]))]


def cofactor_det(a):
    if len(a) == 1:
        return a[0][0]
    total = F(0)
    for j, v in enumerate(a[0]):
        if v:
            minor = [row[:j] + row[j + 1:] for row in a[1:]]
            total += (-1) ** j * v * cofactor_det(minor)
    return total


def det_rank(a):
    """Largest k with a nonvanishing k x k minor (cofactor determinants)."""
    rows, cols = len(a), len(a[0]) if a else 0
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if cofactor_det([[a[i][j] for j in cs] for i in rs]):
                    return k
    return 0


def oracle_membership(P, lam):
    # dim(range P & R^l) = l - rank of the first l columns of P - I
    N = len(P)
    shifted = [[P[i][j] - (1 if i == j else 0) for j in range(N)] for i in range(N)]
    dims = {}
    for k in range(1, lam.m + 1):
        ell = lam.n + k - lam.part(k)
        if ell not in dims:
            dims[ell] = ell - det_rank([row[:ell] for row in shifted]) if ell else 0
        if dims[ell] < k:
            return False
    return True


def index_sets(N, mk, dk, mprev, k):
    pairs = list(product(range(1, N + 1), repeat=2))
    s1 = {(i, j) for i, j in pairs if i < j <= dk}
    s2 = {(i, j) for i, j in pairs if i <= j <= mk}
    s3 = {(i, j) for i, j in pairs if mk < i <= j <= dk}
    s4 = {(i, j) for i, j in pairs if dk < i or dk < j}
    t = set() if k == 1 else {(i, j) for i, j in pairs if mk < i <= dk and j <= mprev}
    return s1, s2, s3, s4, t


def normalized_in(boxes):
    for m, n in boxes:
        for lam in partitions_in_box(m, n):
            if lam.is_normalized():
                yield lam


def all_boxes(mmax, nmax):
    return [(m, n) for m in range(1, mmax + 1) for n in range(1, nmax + 1)]


# -- criteria ------------------------------------------------------------------------------

@criterion(1, "Betti tables by cell counting", 1)
def test_criterion_01_betti():
    assert betti_numbers(2, 2) == [1, 1, 2, 1, 1]
    assert betti_numbers(1, 2) == [1, 1, 1]
    assert betti_numbers(1, 1) == [1, 1]
    for m, n in all_boxes(5, 5):
        brute = [0] * (m * n + 1)
        for p in brute_weakly_decreasing(m, n):
            brute[m * n - sum(p)] += 1
        got = betti_numbers(m, n)
        assert got == brute, f"betti({m},{n}) = {got}, brute force {brute}"
        assert sum(got) == comb(m + n, m)
    return "25 boxes"


@criterion(2, "dimension identity through normalization", 1)
def test_criterion_02_dimension():
    count = 0
    for m, n in all_boxes(3, 3):
        for lam in partitions_in_box(m, n):
            count += 1
            nm = normalize(lam)
            # trace bookkeeping: the moves preserve mn - |lambda|
            mm, nn, w = m, n, lam.weight
            for mv in nm.moves:
                if mv.kind == "strip":
                    w -= mv.amount * nn
                    mm -= mv.amount
                else:
                    w -= mv.amount * mm
                    nn -= mv.amount
            assert (mm, nn) == nm.box
            if nm.core is None:
                assert m * n - lam.weight == 0
                continue
            core = nm.core
            assert core.weight == w
            via_profile = dimension_from_profile(profile(core), core.n)
            assert via_profile == core.m * core.n - core.weight == m * n - lam.weight, str(lam)
    assert count == sum(comb(m + n, m) for m, n in all_boxes(3, 3))
    return f"{count} partitions"


@criterion(3, "Bott-Samelson rank at the canonical base point", 60)
def test_criterion_03_bott_samelson_rank():
    cases = list(normalized_in(all_boxes(2, 2)))
    big = Partition((2, 1, 0), 3, 3)
    cases += [Partition((1, 0), 2, 3), big, erase_first_depression(big),
              erase_first_depression(erase_first_depression(big))]
    for lam in cases:
        bs = bott_samelson_ideal(lam)
        N = lam.m + lam.n
        r = rank(jacobian_at(bs.system, canonical_base_point(lam)))
        assert r == bs.c * N * N - (lam.m * lam.n - lam.weight), f"{lam}: rank {r}"
    return f"{len(cases)} partitions, up to {len(bott_samelson_ideal(big).system.ambient)} variables"


@criterion(4, "index-set cardinalities", 1)
def test_criterion_04_cardinalities():
    checked = 0
    for lam in normalized_in(all_boxes(3, 3)):
        p = profile(lam)
        N = lam.m + lam.n
        for k in range(1, p.c + 1):
            mk, dk = p.mk[k - 1], p.dk[k - 1]
            mprev = p.mk[k - 2] if k > 1 else 0
            s1, s2, s3, s4, t = index_sets(N, mk, dk, mprev, k)
            # S2 and S3 both index g-generators, so they must not overlap
            assert not s2 & s3
            assert len(s1) + len(s2) + len(s3) + len(s4) == N * N - mk * (dk - mk), f"{lam} k={k}"
            if k >= 2:
                assert len(t) == mprev * (dk - mk), f"{lam} k={k}"
            checked += 1
    return f"{checked} (partition, k) pairs"


@criterion(5, "Grassmannian Jacobian rank at random points", 10)
def test_criterion_05_grassmann_rank():
    rng = random.Random(5)
    for m, n in [(1, 1), (1, 2), (2, 1), (2, 2), (2, 3)]:
        G = grassmann_ideal(m, n)
        N = m + n
        for _ in range(20):
            P = random_grassmann_point(m, n, rng)
            r = rank(jacobian_at(G, P.flat()))
            assert r == N * N - m * n, f"G({m},{n}): rank {r}"
    return "100 points"


def sphere_point(m, n, rng):
    """(D_m, v, c) with v in R^m x 0 and |v|^2 + c^2 = c, from inverse
    stereographic projection of a random rational u in Q^m."""
    u = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(m)]
    s = sum(x * x for x in u)
    v = [x / (1 + s) for x in u] + [F(0)] * n
    c = (1 + (s - 1) / (1 + s)) / 2
    return flatten(flag_projector(m, m + n)) + v + [c]


@criterion(6, "sphere-bundle phi rank equals (m+n)^2 - mn + n", 10)
def test_criterion_06_sphere_bundle_rank():
    rng = random.Random(6)
    for m, n in [(1, 1), (1, 2), (2, 2)]:
        S = sphere_bundle_ideal(m, n)
        phi = phi_generators(S)
        N = m + n
        for _ in range(10):
            pt = sphere_point(m, n, rng)
            assert S.vanishes_at(pt)
            r = rank(jacobian_at(phi, pt))
            assert r == N * N - m * n + n, f"(m,n)=({m},{n}): rank {r}, expected {N * N - m * n + n}"
    return "30 points"


@criterion(7, "Schubert rank conditions <=> minors vanish", 30)
def test_criterion_07_schubert_equivalence():
    rng = random.Random(7)
    total = 0
    for m, n in all_boxes(2, 3):
        lams = list(partitions_in_box(m, n))
        extras = {}
        for lam in lams:
            S = schubert_ideal(lam)
            extras[lam] = S.generators[S.metadata["grassmann_generators"]:]
        points = []
        for i in range(50):
            # alternate generic points with points from a random cell
            points.append(random_grassmann_point(m, n, rng) if i % 2 == 0
                          else random_cell_point(rng.choice(lams), rng))
        for P in points:
            rows, flat = P.rows(), P.flat()
            for lam in lams:
                member = oracle_membership(rows, lam)
                vanish = all(not g.evaluate(flat) for g in extras[lam])
                assert member == vanish, f"{lam} at {P.to_json()}"
                assert schubert_membership(P, lam) == member
                total += 1
    return f"{total} (point, partition) checks"


def linear_system_for_block(above, D, N):
    """Coefficient rows (over the N^2 entries of Y) of Y D - Y, above Y - Y, Y - Y^T."""
    rows = []
    idx = lambda i, j: i * N + j
    for i in range(N):
        for j in range(N):
            r = [F(0)] * (N * N)
            for l in range(N):
                r[idx(i, l)] += D[l][j]
            r[idx(i, j)] -= 1
            rows.append(r)
            r = [F(0)] * (N * N)
            for l in range(N):
                r[idx(l, j)] += above[i][l]
            r[idx(i, j)] -= 1
            rows.append(r)
            if i < j:
                r = [F(0)] * (N * N)
                r[idx(i, j)] += 1
                r[idx(j, i)] -= 1
                rows.append(r)
    return rows


@criterion(8, "section over the open cell", 10)
def test_criterion_08_section():
    rng = random.Random(8)
    checked = 0
    for m, n in all_boxes(2, 2):
        for lam in partitions_in_box(m, n):
            core = normalize(lam).core
            if core is None:
                continue  # sigma is a single point
            bs = bott_samelson_ideal(core)
            p = bs.profile
            N = core.m + core.n
            for _ in range(10):
                A = random_cell_point(core, rng)
                point = section_over_cell(A, core)
                assert bs.system.vanishes_at(point), str(core)
                assert point[:N * N] == A.flat()
                blocks = [reshape(point[i * N * N:(i + 1) * N * N], N, N) for i in range(p.c)]
                for pos, k in enumerate(range(p.c - 1, 0, -1), start=1):
                    mk = p.mk[k - 1]
                    eqs = linear_system_for_block(blocks[pos - 1], flag_projector(p.dk[k - 1], N), N)
                    free = N * N - rank(eqs)
                    # symmetric matrices supported on an mk-dim space: the
                    # trace-mk idempotent among them is unique
                    assert free == mk * (mk + 1) // 2, f"{core} k={k}: {free} free"
                    B = flatten(blocks[pos])
                    assert all(sum(c * y for c, y in zip(row, B)) == 0 for row in eqs)
                    assert rank(blocks[pos]) == mk
                checked += 1
    return f"{checked} sections"


@criterion(9, "Q-regularity fixtures", 1)
def test_criterion_09_regularity_fixtures():
    circle = PolySystem.from_strings(["x1", "x2"], ["x1^2 + x2^2 - 1"])
    assert verify_q_jacobian_witness(circle, [F(3, 5), F(4, 5)], 1).kind == "QJacobianWitness"
    G = grassmann_ideal(1, 1)
    assert verify_q_jacobian_witness(G, flatten(flag_projector(1, 2)), 1).kind == "QJacobianWitness"
    cusp = PolySystem.from_strings(["x1", "x2"], ["x1^3 - 2*x2^3"])
    assert verify_q_jacobian_witness(cusp, [0, 0], 1).kind == "Unknown"
    return "3 fixtures"


def fixture_varieties():
    """(system, generator of rational points on it)."""
    def circle_pt(rng):
        a, b = rng.randint(1, 9), rng.randint(1, 9)
        c = a * a + b * b
        return [F(a * a - b * b, c), F(2 * a * b, c)]

    def parabola_pt(rng):
        x = F(rng.randint(-6, 6), rng.randint(1, 3))
        return [x, x * x]

    def hyperbola_pt(rng):
        x = F(rng.choice([-1, 1]) * rng.randint(1, 6), rng.randint(1, 3))
        return [x, 1 / x]

    def line_pt(rng):
        return [F(2)]

    def twisted_pt(rng):
        x = F(rng.randint(-4, 4) or 1, rng.randint(1, 3))
        return [x, x * x, x * x * x]

    return [
        (PolySystem.from_strings(["x1", "x2"], ["x1^2 + x2^2 - 1"]), circle_pt),
        (PolySystem.from_strings(["x1", "x2"], ["x2 - x1^2"]), parabola_pt),
        (PolySystem.from_strings(["x1", "x2"], ["x1*x2 - 1"]), hyperbola_pt),
        (PolySystem.from_strings(["x"], ["x - 2"]), line_pt),
        (PolySystem.from_strings(["x1", "x2", "x3"], ["x2 - x1^2", "x3 - x1*x2"]), twisted_pt),
    ]


@criterion(10, "compactification and puncture round trip", 1)
def test_criterion_10_compactify_puncture():
    rng = random.Random(10)
    C = F(3, 2)
    checked = 0
    for V, on_v in fixture_varieties():
        n = V.nvars()
        comp = inversion_compactify(V)
        lifted = puncture_lift(comp, C)
        for i in range(20):
            if i % 2 == 0:
                p = on_v(rng)
            else:
                p = [F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]
            if not any(p):
                p[0] = F(1)
            q = theta(p)
            inside = V.vanishes_at(p)
            assert inside == comp.vanishes_at(q)
            # theta(p) != 0, so its lift exists and the correspondence holds
            r2 = sum(x * x for x in q)
            assert inside == lifted.vanishes_at(q + [C / r2])
            checked += 1
        # the compactified set contains the origin; its lift does not
        assert comp.vanishes_at([0] * n)
        assert not any(lifted.vanishes_at([0] * n + [F(y, 3)]) for y in range(-9, 10))
    return f"{checked} points on 5 varieties"


if __name__ == "__main__":
    import sys
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for number in sorted(RESULTS):
        print(RESULTS[number][1])
    sys.exit(0 if all(ok for ok, _ in RESULTS.values()) else 1)
