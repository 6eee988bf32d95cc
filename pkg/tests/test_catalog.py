import itertools
from fractions import Fraction

import pytest

from polysurf.catalog import CatalogQuery, canonicalize, enumerate_vertex_types, extremal_curvature
from polysurf.complex import VertexType
from polysurf.curvature import curvature
from polysurf.errors import BadVertexType, EmptyCatalog, UnboundedQuery


def dihedral_min(t):
    n = len(t)
    cands = []
    for seq in (t, t[::-1]):
        cands += [seq[k:] + seq[:k] for k in range(n)]
    return min(cands)


def brute(N, sign, dmin, dmax):
    out = set()
    for d in range(dmin, dmax + 1):
        for t in itertools.product(range(3, N + 1), repeat=d):
            k = Fraction(1) - Fraction(d, 2) + sum(Fraction(1, x) for x in t)
            if (sign == "positive" and k > 0) or (sign == "zero" and k == 0) or (sign == "negative" and k < 0):
                out.add(dihedral_min(t))
    return sorted(out)


def test_canonicalize():
    assert canonicalize([5, 3, 5, 3]).sizes == (3, 5, 3, 5)
    assert canonicalize([4, 6, 8]).sizes == (4, 6, 8)
    assert canonicalize([6, 4, 8]).sizes == (4, 6, 8)
    with pytest.raises(BadVertexType):
        canonicalize([2, 4])


def test_triangles_positive():
    got = enumerate_vertex_types(CatalogQuery(3, "positive"))
    assert [t.sizes for t in got] == [(3, 3, 3), (3, 3, 3, 3), (3, 3, 3, 3, 3)]


def test_flat_types_N6():
    got = {t.sizes for t in enumerate_vertex_types(CatalogQuery(6, "zero"))}
    for t in [(6, 6, 6), (4, 4, 4, 4), (3,) * 6, (3, 6, 3, 6), (3, 3, 6, 6), (3, 4, 4, 6)]:
        assert t in got
    assert got == set(brute(6, "zero", 3, 6))


def test_negative_degree3_N7():
    got = [t.sizes for t in enumerate_vertex_types(CatalogQuery(7, "neg", 3, 3))]
    assert got == [(5, 7, 7), (6, 6, 7), (6, 7, 7), (7, 7, 7)]
    # [4,7,7] is positively curved, so it is not in the negative set
    assert curvature((4, 7, 7)) > 0


def test_negative_needs_degree_cap():
    with pytest.raises(UnboundedQuery):
        enumerate_vertex_types(CatalogQuery(7, "negative"))


@pytest.mark.parametrize("N", range(3, 13))
@pytest.mark.parametrize("sign", ["positive", "zero"])
def test_matches_brute_force(N, sign):
    dmax = 6 if N <= 7 else 4
    got = [t.sizes for t in enumerate_vertex_types(CatalogQuery(N, sign, 3, dmax))]
    assert got == brute(N, sign, 3, dmax)


@pytest.mark.parametrize("N", range(3, 13))
def test_negative_matches_brute_force(N):
    got = [t.sizes for t in enumerate_vertex_types(CatalogQuery(N, "negative", 3, 4))]
    assert got == brute(N, "negative", 3, 4)


def test_sign_consistency():
    for sign in ("positive", "zero", "negative"):
        for t in enumerate_vertex_types(CatalogQuery(8, sign, 3, 5)):
            k = curvature(t)
            assert (k > 0) if sign == "positive" else (k == 0) if sign == "zero" else (k < 0)


def test_high_degree_always_negative():
    for d in range(7, 21):
        assert curvature((3,) * d) < 0


def test_extremal():
    q = CatalogQuery(5, "positive")
    t, k = extremal_curvature(q)
    assert k == min(curvature(x) for x in brute(5, "positive", 3, 6))
    assert extremal_curvature(CatalogQuery(3, "positive")) == (VertexType((3, 3, 3, 3, 3)), Fraction(1, 6))
    # closest-to-zero negative type at degree 3 with N = 7
    assert extremal_curvature(CatalogQuery(7, "negative", 3, 3)) == (VertexType((5, 7, 7)), Fraction(-1, 70))
    assert curvature((6, 6, 7)) == Fraction(-1, 42)
    with pytest.raises(EmptyCatalog):
        extremal_curvature(CatalogQuery(3, "negative", 3, 3))
