"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line.

Run alone with ``pytest tests/test_acceptance.py`` or
``python tests/test_acceptance.py``.
"""

import math
import random
import time
from collections import deque
from fractions import Fraction
from functools import lru_cache

from polysurf.complex import VertexType
from polysurf.cover import develop_universal_cover, verify_covering
from polysurf.curvature import CurvatureProfile, Verdict, classify, curvature, exclusion_check
from polysurf.gauss_bonnet import check_gauss_bonnet, vertex_bound
from polysurf.generators import closed_fixtures, generate
from polysurf.isoperimetric import SubcomplexSelection, ball_profile, boundary_edges
from polysurf.metric import approx_diameter, build_mesh, straddling_pair, vertex_avoidance_probe
from polysurf.spherical import angle_residual, phi_S, threshold_radius

# chosen before measuring; only existence of such a constant is claimed
ISOPERIMETRIC_C = Fraction(1, 2)


def report(number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {detail}"
    print(line)
    return ok


def _check(capsys, criterion):
    # capture is resumed for the call phase, so disable it here
    with capsys.disabled():
        print()
        ok = criterion()
    assert ok


@lru_cache(maxsize=None)
def c1():
    cases = [((5, 5, 5), Fraction(1, 10)), ((4, 4, 4, 4), Fraction(0)), ((7, 7, 7), Fraction(-1, 14))]
    ok, worst = True, 0.0
    for vt, want in cases:
        reps = 1000
        t = time.perf_counter()
        for _ in range(reps):
            got = curvature(vt)
        dt = (time.perf_counter() - t) / reps
        worst = max(worst, dt)
        ok &= got == want and isinstance(got, Fraction) and dt < 1e-3
    return report(1, ok, f"kappa exact for [5,5,5], [4,4,4,4], [7,7,7]; slowest {worst * 1e6:.1f} us per call")


@lru_cache(maxsize=None)
def c2():
    t = time.perf_counter()
    fx = closed_fixtures()
    bad = [n for n, cx in fx.items() if not check_gauss_bonnet(cx).consistent]
    dt = time.perf_counter() - t
    want = {"tetrahedron", "cube", "octahedron", "dodecahedron", "icosahedron", "square_torus", "hexagonal_torus", "genus2_octagon"}
    want |= {f"{f}({n})" for f in ("prism", "antiprism", "double_ngon") for n in range(3, 9)}
    ok = not bad and set(fx) == want and dt < 1.0
    return report(2, ok, f"chi = sum kappa on {len(fx)} closed complexes in {dt:.3f} s; failures {bad}")


@lru_cache(maxsize=None)
def c3():
    ok = True
    checked = 0
    for cx in closed_fixtures().values():
        c0 = min(curvature(v.cyclic_sizes) for v in cx.vertices)
        if c0 > 0:
            checked += 1
            ok &= cx.num_vertices <= vertex_bound(c0)
    tet = generate("platonic", "tetrahedron")
    dod = generate("platonic", "dodecahedron")
    ok &= tet.num_vertices == vertex_bound(Fraction(1, 2)) == 4
    ok &= dod.num_vertices == vertex_bound(Fraction(1, 10)) == 20
    return report(3, ok, f"|V| <= 2/c0 on {checked} positively curved complexes; equality on tetrahedron and dodecahedron")


@lru_cache(maxsize=None)
def c4():
    t = time.perf_counter()
    v1 = classify(CurvatureProfile.from_complex(generate("platonic", "dodecahedron"))).verdict
    v2 = classify(CurvatureProfile.from_complex(generate("hexagonal_torus"))).verdict
    v3 = classify(CurvatureProfile.from_types([VertexType((7, 7, 7))], 7)).verdict
    e6, e7 = exclusion_check(6).excluded, exclusion_check(7).excluded
    dt = time.perf_counter() - t
    ok = (
        v1 is Verdict.ELLIPTIC and v2 is Verdict.PARABOLIC and v3 is Verdict.HYPERBOLIC
        and e6 == {"sphere"} and e7 == {"sphere", "plane"} and dt < 1.0
    )
    return report(4, ok, f"{v1.value}/{v2.value}/{v3.value}; exclusions {sorted(e6)} and {sorted(e7)}; {dt:.3f} s")


@lru_cache(maxsize=None)
def c5():
    rng = random.Random(20240501)
    worst = 0.0
    for _ in range(10_000):
        n = rng.randint(3, 12)
        r = n / (2 * math.pi) * math.exp(rng.uniform(1e-9, math.log(1e4)))
        worst = max(worst, angle_residual(phi_S(r, n)))
    lim = max(abs(2 * phi_S(1e4, n).phi - (math.pi - 2 * math.pi / n)) for n in range(3, 13))
    rstar = threshold_radius((4, 4, 4))
    err = abs(rstar - 1 / math.acos(1 / 3))
    ok = worst <= 1e-12 and lim <= 1e-6 and err <= 1e-9
    return report(5, ok, f"max residual {worst:.2e}; limit gap {lim:.2e}; r*([4,4,4]) error {err:.2e}")


def _grid_counts(G):
    seen = {(0, 0): 0}
    todo = deque([(0, 0)])
    while todo:
        c = todo.popleft()
        if seen[c] < G:
            for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                nb = (c[0] + dx, c[1] + dy)
                if nb not in seen:
                    seen[nb] = seen[c] + 1
                    todo.append(nb)
    return [sum(1 for g in seen.values() if g == k) for k in range(G + 1)]


@lru_cache(maxsize=None)
def c6():
    t = time.perf_counter()
    dod = generate("platonic", "dodecahedron")
    ball = develop_universal_cover(dod, max_faces=100)
    ok = ball.halted_by == "closure" and ball.cover_complex.num_faces == 12
    ok &= sorted(ball.face_projection) == list(range(12)) and verify_covering(ball, dod).ok
    torus = generate("square_torus")
    for G in range(6):
        b = develop_universal_cover(torus, max_generation=G)
        ok &= b.faces_per_generation() == _grid_counts(G)
        ok &= verify_covering(b, torus).ok
    hexa = generate("hexagonal_torus")
    for G in range(5):
        ok &= verify_covering(develop_universal_cover(hexa, max_generation=G), hexa).ok
    dt = time.perf_counter() - t
    ok &= dt < 5.0
    return report(6, ok, f"dodecahedron closes at 12 faces; torus generations match grid BFS up to 5; types preserved; {dt:.2f} s")


@lru_cache(maxsize=None)
def c7():
    t = time.perf_counter()
    vals = {}
    for name in ("cube", "tetrahedron"):
        cx = generate("platonic", name)
        for h in (0.1, 0.05):
            vals[(name, h)] = approx_diameter(build_mesh(cx, 1.0, h)).value
    dt = time.perf_counter() - t
    ok = all(v <= math.pi + 1e-6 for v in vals.values()) and dt < 60.0
    shown = ", ".join(f"{n} h={h}: {v:.6f}" for (n, h), v in vals.items())
    return report(7, ok, f"diameter estimates {shown} (bound pi = {math.pi:.6f}); {dt:.1f} s")


@lru_cache(maxsize=None)
def c8():
    cube = generate("platonic", "cube")
    mesh = build_mesh(cube, 1.0, 0.05)
    rep = vertex_avoidance_probe(mesh, cube, 1.0, pairs=50, seed=0, extra_pairs=[straddling_pair(mesh)])
    random_part, special = rep.pairs[:50], rep.pairs[50]
    ok = len(random_part) == 50 and all(p.detour >= 0 for p in random_part) and special.detour > 1e-4
    return report(
        8, ok,
        f"min detour over 50 seeded pairs {min(p.detour for p in random_part):.4e}; straddling pair detour {special.detour:.4e}",
    )


def _brute_boundary(cx, faces):
    n = 0
    for d, p in cx.edges:
        if p >= 0 and ((cx.slot(d)[0] in faces) != (cx.slot(p)[0] in faces)):
            n += 1
    return n


@lru_cache(maxsize=None)
def c9():
    rng = random.Random(99)
    b73 = generate("pq_ball", 7, 3, 5)
    b63 = generate("pq_ball", 6, 3, 5)
    mismatches = 0
    for k in range(100):
        cx = b73 if k % 2 == 0 else b63
        faces = set(rng.sample(range(cx.num_faces), rng.randint(1, cx.num_faces)))
        mismatches += len(boundary_edges(SubcomplexSelection(cx, faces))) != _brute_boundary(cx, faces)
    r73 = [r.ratio for r in ball_profile(b73, 0, 4)]
    r63 = [r.ratio for r in ball_profile(b63, 0, 4)]
    ok = mismatches == 0 and max(r73) < ISOPERIMETRIC_C and all(a < b for a, b in zip(r63, r63[1:]))
    return report(
        9, ok,
        f"100 selections, {mismatches} mismatches; {{7,3}} max ratio {max(r73)} < c = {ISOPERIMETRIC_C}; "
        f"{{6,3}} ratios {', '.join(map(str, r63))} strictly increasing",
    )


@lru_cache(maxsize=None)
def c10():
    # no computation can certify the conformal type itself; the criterion is
    # the classification logic plus the numerical evidence
    ok = c4() and c7() and c8() and c9()
    return report(10, ok, "conformal type not computed directly; rests on criteria 4, 7, 8, 9")


def test_c1_exact_curvature(capsys):
    _check(capsys, c1)


def test_c2_gauss_bonnet(capsys):
    _check(capsys, c2)


def test_c3_vertex_bound(capsys):
    _check(capsys, c3)


def test_c4_classification(capsys):
    _check(capsys, c4)


def test_c5_spherical_solver(capsys):
    _check(capsys, c5)


def test_c6_universal_cover(capsys):
    _check(capsys, c6)


def test_c7_diameter_bound(capsys):
    _check(capsys, c7)


def test_c8_vertex_avoidance(capsys):
    _check(capsys, c8)


def test_c9_isoperimetric(capsys):
    _check(capsys, c9)


def test_c10_evidence_for_classification(capsys):
    _check(capsys, c10)


if __name__ == "__main__":
    results = [fn() for fn in (c1, c2, c3, c4, c5, c6, c7, c8, c9, c10)]
    raise SystemExit(0 if all(results) else 1)
