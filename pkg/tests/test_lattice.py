from __future__ import annotations

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.spatial import ConvexHull

from tropsign.lattice import (AffineFrame, Support, cell_lattice_volume, cone_span_basis, convex_hull,
                              euclidean_volume, in_convex_hull, minkowski_sum, normalized_volume,
                              support_face)

points2 = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=8)
points3 = st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2)), min_size=4, max_size=9)


def test_support_is_canonical():
    assert Support.of([(1, 0), (0, 0), (1, 0)]).points == ((0, 0), (1, 0))
    with pytest.raises(ValueError):
        Support.of([])
    with pytest.raises(ValueError):
        Support.of([(0,), (0, 1)])


def test_hull_drops_interior_points():
    P = convex_hull([(0, 0), (1, 0), (2, 0)])
    assert P.points == ((0, 0), (2, 0)) and P.dim == 1
    sq = convex_hull([(0, 0), (1, 0), (0, 1), (1, 1), (0, 0)])
    assert sq.dim == 2 and len(sq.points) == 4


def test_volumes():
    assert normalized_volume([(0, 0), (1, 0), (0, 1)]) == 1
    assert cell_lattice_volume([(0,), (2,)]) == 2
    assert normalized_volume([(0, 0), (2, 0), (0, 2), (2, 2)]) == 8
    assert cell_lattice_volume([(3, 4)]) == 1
    # a segment of lattice length 3 sitting diagonally in Z^2
    assert cell_lattice_volume([(0, 0), (3, 3)]) == 3


def test_cone_span_basis():
    assert cone_span_basis([(1, 0), (2, 0)]) == [(1, 0)]
    assert cone_span_basis([(1, 1), (1, -1)]) == [(1, 0), (0, 1)]


def test_support_face():
    F = support_face([(0, 0), (1, 0), (1, 1)], (1, 0))
    assert F.points.points == ((1, 0), (1, 1))


@given(points2)
@settings(deadline=None)
def test_hull_vertices_are_extreme(pts):
    P = convex_hull(pts)
    for p in set(pts):
        assert in_convex_hull(p, P.points)
    for v in P.points:
        others = [q for q in P.points if q != v]
        assert not in_convex_hull(v, others)


@given(points3)
@settings(deadline=None, max_examples=40)
def test_hull_3d_against_qhull(pts):
    P = convex_hull(pts)
    arr = np.array(sorted(set(pts)), dtype=float)
    if P.dim < 3:
        return
    qh = ConvexHull(arr)
    assert sorted(map(tuple, arr[qh.vertices].astype(int).tolist())) == list(P.points)


@given(points2)
@settings(deadline=None)
def test_volume_against_qhull(pts):
    vol = euclidean_volume(pts)
    arr = np.array(sorted(set(pts)), dtype=float)
    if len(arr) < 3 or vol == 0:
        return
    assert abs(float(vol) - ConvexHull(arr).volume) < 1e-9


@given(points3)
@settings(deadline=None, max_examples=40)
def test_volume_3d_against_qhull(pts):
    vol = euclidean_volume(pts)
    if vol == 0:
        return
    arr = np.array(sorted(set(pts)), dtype=float)
    assert abs(float(vol) - ConvexHull(arr).volume) < 1e-9
    assert vol.denominator in (1, 2, 3, 6)


@given(points2)
@settings(deadline=None)
def test_frame_round_trip(pts):
    frame = AffineFrame(pts)
    for p in pts:
        y = frame.coords(p)
        back = tuple(o + sum(c * b[j] for c, b in zip(y, frame.basis)) for j, o in enumerate(frame.origin))
        assert back == tuple(p)
    w = tuple(Fraction(i + 1) for i in range(frame.dim))
    u = frame.lift_covector(w)
    for p in pts:
        y = frame.coords(p)
        assert sum(a * b for a, b in zip(u, p)) - sum(a * b for a, b in zip(u, frame.origin)) == \
            sum(a * b for a, b in zip(w, y))


@given(points2, points2)
@settings(deadline=None, max_examples=50)
def test_minkowski_volume_is_superadditive(A, B):
    P, Q = convex_hull(A), convex_hull(B)
    S = minkowski_sum(P, Q)
    assert euclidean_volume(S.points) >= euclidean_volume(P.points) + euclidean_volume(Q.points)
