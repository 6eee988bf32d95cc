from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from polysurf.complex import VertexType
from polysurf.curvature import CurvatureProfile, Verdict, angle_sum, classify, curvature, exclusion_check
from polysurf.errors import BadVertexType, EmptyProfile, NonOrientable
from polysurf.complex import Gluing, GluingData, Slot, build_complex
from polysurf.generators import generate

sizes = st.lists(st.integers(3, 30), min_size=1, max_size=9)


@pytest.mark.parametrize("vt, coeff", [((6, 6, 6), 2), ((5, 5, 5), Fraction(9, 5)), ((3,) * 6, 2)])
def test_angle_sum(vt, coeff):
    assert angle_sum(vt).coefficient_of_pi == coeff


@pytest.mark.parametrize("vt, k", [((5, 5, 5), Fraction(1, 10)), ((4, 4, 4, 4), 0), ((7, 7, 7), Fraction(-1, 14))])
def test_curvature_values(vt, k):
    assert curvature(vt) == k
    assert isinstance(curvature(vt), Fraction)


def test_bad_vertex_type():
    with pytest.raises(BadVertexType):
        curvature((2, 3))
    with pytest.raises(BadVertexType):
        angle_sum(())


@given(sizes)
def test_curvature_matches_angle_sum(ks):
    assert curvature(ks) == 1 - angle_sum(ks).coefficient_of_pi / 2


@given(sizes, st.integers(0, 8), st.integers(3, 30))
def test_monotonicity(ks, idx, extra):
    k = curvature(ks)
    bigger = list(ks)
    bigger[idx % len(ks)] += 1
    assert curvature(bigger) < k
    assert curvature(list(ks) + [extra]) < k


def test_classify_examples():
    assert classify(CurvatureProfile.from_complex(generate("platonic", "dodecahedron"))).verdict is Verdict.ELLIPTIC
    for n in (None, 3, 6, 100):
        assert classify(CurvatureProfile.from_types([(6, 6, 6)], n)).verdict is Verdict.PARABOLIC
    assert classify(CurvatureProfile.from_types([(7, 7, 7)], 7)).verdict is Verdict.HYPERBOLIC


def test_classify_needs_side_bound():
    for types in ([(5, 5, 5)], [(7, 7, 7)]):
        tv = classify(CurvatureProfile.from_types(types))
        assert tv.verdict is Verdict.INDETERMINATE and "bound" in tv.reason


def test_classify_mixed_and_errors():
    tv = classify(CurvatureProfile.from_types([(5, 5, 5), (7, 7, 7)], 7))
    assert tv.verdict is Verdict.INDETERMINATE and "mixed" in tv.reason
    with pytest.raises(EmptyProfile):
        classify(CurvatureProfile.from_types([]))
    klein = build_complex(GluingData(((0, 4),), (Gluing(Slot(0, 0), Slot(0, 2), False), Gluing(Slot(0, 1), Slot(0, 3)))))
    with pytest.raises(NonOrientable):
        classify(CurvatureProfile.from_complex(klein))


def test_closed_higher_genus_verdict_notes_universal_cover():
    tv = classify(CurvatureProfile.from_complex(generate("hexagonal_torus")))
    assert tv.verdict is Verdict.PARABOLIC and "universal cover" in tv.note
    tv = classify(CurvatureProfile.from_complex(generate("genus2_octagon")))
    assert tv.verdict is Verdict.HYPERBOLIC and "universal cover" in tv.note


def test_triangulation_profiles():
    for d in range(3, 6):
        assert classify(CurvatureProfile.from_types([(3,) * d], 3)).verdict is Verdict.ELLIPTIC
    assert classify(CurvatureProfile.from_types([(3,) * 6], 3)).verdict is Verdict.PARABOLIC
    for d in range(7, 12):
        assert classify(CurvatureProfile.from_types([(3,) * d], 3)).verdict is Verdict.HYPERBOLIC


def test_exclusion_check():
    r6 = exclusion_check(6)
    assert r6.excluded == {"sphere"} and r6.extremal_type == VertexType((6, 6, 6)) and r6.extremal_curvature == 0
    assert exclusion_check(7).excluded == {"sphere", "plane"}
    assert exclusion_check(5).excluded == frozenset()
