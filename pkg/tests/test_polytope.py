"""Polyhedral engine: LP separation, double description, face lattices,
Newton polytopes, the PK polytope and associahedron."""
import random
from fractions import Fraction as F

import pytest

from grascat.combinat import nonfrozen_subsets
from grascat.polynomial import Poly, pk_factors, tau
from grascat.polytope import (extreme_points, gamma_functional, hull_of_points,
                              lift_and_lower_hull,
                              minimize_face, minkowski_sum_points,
                              minkowski_summand_count, newton, newton_points,
                              omega_vertices, pk_associahedron, pk_polytope,
                              planar_face_polytope, polytope_from_inequalities,
                              root_polytope,
                              tau_newton_facets, triangulation_volume, grid_point)
from grascat.roots import v_root


def test_extreme_points():
    assert extreme_points([(0,), (1,), (2,)]) == [(0,), (2,)]
    pts = [(0, 0), (1, 0), (0, 1), (1, 1), (F(1, 2), F(1, 2))]
    assert len(extreme_points(pts)) == 4
    tri = [(0, 0), (2, 0), (0, 2)]
    assert extreme_points(tri) == sorted(tri)


def test_hull_roundtrips():
    sq = hull_of_points([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert len(sq.inequalities) == 4 and sq.f_vector() == [1, 4, 4, 1]
    back = polytope_from_inequalities(sq.inequalities, sq.equalities, 2)
    assert sorted(back.vertices) == sorted(sq.vertices)
    # the dd_convert front end accepts either representation
    from grascat.polytope import dd_convert
    assert sorted(dd_convert(vertices=sq.vertices).vertices) == sorted(sq.vertices)
    assert sorted(dd_convert(inequalities=sq.inequalities).vertices) == \
        sorted(sq.vertices)
    # a polytope inside an affine subspace
    tri = hull_of_points([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert tri.dim == 2 and len(tri.equalities) == 1
    back = polytope_from_inequalities(tri.inequalities, tri.equalities, 3)
    assert sorted(back.vertices) == sorted(tri.vertices)


def test_simplex_fvector():
    for d in (2, 3, 4):
        pts = [tuple(F(1) if i == j else F(0) for j in range(d + 1)) for i in range(d + 1)]
        P = hull_of_points(pts)
        from math import comb
        assert P.f_vector() == [1] + [comb(d + 1, i + 1) for i in range(d + 1)]


def test_newton_of_factors():
    Ps, Qs = pk_factors(3, 6)
    NP = newton(Ps[0])
    assert NP.dim == 2 and len(NP.vertices) == 3  # an (n-k-1)-simplex
    NQ = newton(Qs[0])
    assert NQ.dim == 2 and len(NQ.vertices) == 3  # a (k-1)-simplex
    pt = newton(Poly.monomial([(1, 1), (2, 2)], 3, 6))
    assert len(pt.vertices) == 1


@pytest.mark.parametrize("k,n,facets", [
    (2, 4, 2), (2, 5, 5), (2, 6, 9), (2, 7, 14), (2, 8, 20), (3, 6, 14), (3, 7, 28)])
def test_pk_polytope(k, n, facets):
    from math import comb
    P = pk_polytope(k, n)  # cross-checks the Newton vertex set internally
    assert len(P.inequalities) == facets == comb(n, k) - n
    # every inequality is facet-defining
    d = P.dim
    import grascat.linalg as linalg
    for (c, coeffs), inc in zip(P.inequalities, P.incidence):
        verts = [P.vertices[i] for i in _bits(inc)]
        rank = linalg.rank([[a - b for a, b in zip(v, verts[0])] for v in verts[1:]])
        assert rank == d - 1
    # containment in the cube [-1, 2]
    for v in P.vertices:
        assert all(-1 <= xi <= 2 for xi in v)


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def test_pk_polytope_vertex_counts():
    # frozen facts of this implementation, dual to the root polytope
    assert len(pk_polytope(3, 6).vertices) == 27
    assert len(pk_polytope(2, 6).vertices) == 12


@pytest.mark.parametrize("k,n", [(3, 6), (2, 5), (2, 6), (2, 7)])
def test_pk_root_duality(k, n):
    P = pk_polytope(k, n, cross_check=False)
    R = root_polytope(k, n)
    # facets of Pi <-> vertices of R and vice versa
    assert len(R.inequalities) == len(P.vertices)
    assert len(R.vertices) == len(nonfrozen_subsets(k, n))


def test_root_polytope_hat_variant():
    R = root_polytope(2, 5)
    Rhat = root_polytope(2, 5, hat=True)
    assert R.dim == 2 and Rhat.dim == 3
    assert tuple(F(0) for _ in range(3)) in Rhat.vertices


def test_extreme_points_cross_check():
    # LP-based extreme filtering against the double-description hull on the
    # exponent vectors of Q_1 * Q_2 at (3,6)
    _Ps, Qs = pk_factors(3, 6)
    pts = newton_points(Qs[0] * Qs[1])
    via_lp = extreme_points(pts)
    via_dd = sorted(hull_of_points(pts).vertices)
    assert via_lp == via_dd


@pytest.mark.parametrize("k,n,vol", [(2, 5, 5), (2, 6, 14), (2, 7, 42),
                                     (3, 6, 42), (4, 7, 462)])
def test_triangulation_volume(k, n, vol):
    assert triangulation_volume(k, n) == vol


def test_omega_vertices():
    assert len(omega_vertices(3, 1)) == 1
    assert len(omega_vertices(2, 4)) == 4  # the standard simplex
    # brute force count over 0/1 grids for (3, 2)
    assert len(omega_vertices(3, 2)) == 3
    # the projection e_{i,j} -> e_j is injective on vertices
    for (k, m) in [(3, 3), (4, 2)]:
        verts = omega_vertices(k, m)
        proj = {tuple(sum(v[i * m + j] for i in range(k - 1)) for j in range(m))
                for v in verts}
        assert len(proj) == len(verts)


def test_planar_faces():
    P = planar_face_polytope(1, (1, 2), 3, 6)
    assert len(P.vertices) == 2
    P = planar_face_polytope(1, (1, 2, 3), 3, 6)
    assert len(P.vertices) == 3
    P = planar_face_polytope(2, (1, 2, 4), 4, 8)
    assert len(P.vertices) == 5
    with pytest.raises(ValueError):
        planar_face_polytope(2, (1, 2, 3), 3, 6)


def test_pk_associahedron_36():
    KA, count = pk_associahedron(3, 6)
    assert count == 10 == minkowski_summand_count(3, 6)
    assert KA.f_vector() == [1, 42, 84, 56, 14, 1]


def test_pk_associahedron_is_loday_for_k2():
    KA, count = pk_associahedron(2, 6)
    from math import comb
    assert count == comb(4, 2)
    # 3-dimensional associahedron: 14 vertices, 21 edges, 9 facets
    assert KA.f_vector() == [1, 14, 21, 9, 1]


def test_summand_count_formula():
    from math import comb
    from grascat.polynomial import planar_face_range
    for n in range(4, 11):
        for k in range(2, n - 1):
            assert len(planar_face_range(k, n)) == comb(n, k) - k * (n - k) - 1


def test_minkowski_sum_points():
    sq = [(F(0), F(0)), (F(1), F(0)), (F(0), F(1)), (F(1), F(1))]
    seg = [(F(0), F(0)), (F(1), F(1))]
    out = minkowski_sum_points([sq, seg])
    assert len(out) == 6


def test_tau_newton_facets_36():
    tf = tau_newton_facets(3, 6)
    want = {(1, 3, 5): 1, (2, 4, 6): 1, (1, 2, 5): 2, (2, 5, 6): 2,
            (1, 4, 5): 3, (2, 3, 6): 3, (1, 3, 6): 5, (1, 4, 6): 5,
            (1, 3, 4): 0, (2, 4, 5): 0, (3, 5, 6): 0, (1, 2, 4): 0,
            (2, 3, 5): 0, (3, 4, 6): 0}
    assert {J: int(c) for J, c in tf["constants"].items()} == want
    assert tf["lambda"] == [7, 7]
    assert tf["agrees"]
    assert len(tf["polytope"].inequalities) == 14
    assert tf["polytope"].f_vector() == [1, 42, 84, 56, 14, 1]


def test_minimize_face_Q_rule():
    # min of gamma_J over Newt(Q_t) is 1 exactly when j_1 <= t < t+k+1 <= j_k
    for (k, n) in [(3, 6), (3, 7), (4, 8)]:
        Ps, Qs = pk_factors(k, n)
        for t, Q in enumerate(Qs, start=1):
            pts = newton_points(Q)
            for J in nonfrozen_subsets(k, n):
                m, _face = minimize_face(pts, gamma_functional(J, k, n))
                expect = 1 if (J[0] <= t and t + k + 1 <= J[-1]) else 0
                assert m == expect, (k, n, t, J)


def test_minimize_face_tau_2368():
    # gamma_1458 is identically 2 on Newt(tau_2368) in the (4,8) grid
    pts = newton_points(tau((2, 3, 6, 8), 4, 8))
    g = gamma_functional((1, 4, 5, 8), 4, 8)
    vals = {sum(a * x for a, x in zip(g, p)) for p in pts}
    assert vals == {2}


def test_minimize_face_associahedron_26():
    # the K^(2)_4 facet minimizing gamma_36 is Newt(x12^2 (x11+x12)^3 (x13+x14))
    KA, _ = pk_associahedron(2, 6)
    g = gamma_functional((3, 6), 2, 6)
    m, face = minimize_face(KA.vertices, g)
    xx = lambda i, j: Poly.var(i, j, 2, 6)
    target = (xx(1, 2) ** 2) * ((xx(1, 1) + xx(1, 2)) ** 3) * (xx(1, 3) + xx(1, 4))
    tgt_pts = newton_points(target)
    tgt_extreme = set(extreme_points(tgt_pts))
    # the minimized face agrees with the product's Newton polytope up to a
    # translation by the difference of minima
    shift = tuple(a - b for a, b in zip(sorted(face)[0], sorted(tgt_extreme)[0]))
    assert {tuple(a - s for a, s in zip(v, shift)) for v in face} == tgt_extreme
    # the minimized face is the Minkowski sum of the per-summand minimized
    # faces, and the per-summand minima add up to its minimum
    from grascat.polynomial import delta, planar_face_range
    total = 0
    summand_faces = []
    for (i, J) in planar_face_range(2, 6):
        mi, fi = minimize_face(newton_points(delta(i, J, 2, 6)), g)
        total += mi
        summand_faces.append(fi)
    assert total == m
    assert sorted(minkowski_sum_points(summand_faces)) == sorted(face)


def test_lift_and_lower_hull():
    rng = random.Random(5)
    pts = [grid_point(v_root(J, 2, 5), 2, 5) for J in nonfrozen_subsets(2, 5)]
    pts = [tuple(F(0) for _ in pts[0])] + pts
    assert lift_and_lower_hull(pts, [0] * len(pts)) == [tuple(range(len(pts)))]
    heights = [0] + [F(rng.randint(1, 100), rng.randint(1, 9)) for _ in pts[1:]]
    cells = lift_and_lower_hull(pts, heights)
    assert len(cells) == 5  # a triangulation: cell count equals the volume


def test_octahedron_fold():
    # Delta_{2,4}(1,3,4,5,6) in the (3,6) root space folds across the square
    # holding v_{136}, v_{145} when lifted by eta at an interior point
    from grascat.kinematics import eta_functional, interior_kd_point
    from grascat.roots import grid_add
    point = interior_kd_point(3, 6, seed=9)
    names = [(1, 3, 5), (1, 3, 6), (1, 4, 5), (1, 4, 6)]
    base = [grid_point(v_root(J, 3, 6), 3, 6) for J in names]
    apex_vec = grid_add(v_root((1, 3, 5), 3, 6), v_root((1, 4, 6), 3, 6))
    verts = [tuple(F(0) for _ in base[0])] + base + [grid_point(apex_vec, 3, 6)]
    hts = [F(0)] + [eta_functional(J, 3, 6).value(point) for J in names]
    hts.append(eta_functional((1, 3, 6), 3, 6).value(point)
               + eta_functional((1, 4, 5), 3, 6).value(point))
    cells = lift_and_lower_hull(verts, hts)
    assert len(cells) == 2
    shared = set(cells[0]) & set(cells[1])
    # the internal square: origin, v_{136}, v_{145}, apex
    assert shared == {0, 2, 3, 5}
