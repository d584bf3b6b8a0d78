"""Alcoves, central points and reduction to the fundamental alcove."""

from fractions import Fraction

from alcoved import geometry
from alcoved.geometry import (
    alcove_of,
    fundamental_central_point,
    neighbors,
    reduce_to_fundamental,
    weyl_alcove,
)
from alcoved.rootsys import build, pairing
from alcoved.weyl import enumerate_weyl


def test_fundamental_central_point_lies_in_the_open_alcove():
    for t, r in (("A", 3), ("C", 2), ("D", 4), ("G", 2)):
        rs = build(t, r)
        p = fundamental_central_point(rs).omega_point()
        for root in rs.positive_roots:
            assert 0 < pairing(p, root) < 1
        # central points live in (1/h) times the coweight lattice
        h = rs.h_star
        assert all((h * c).denominator == 1 for c in map(Fraction, p))


def test_fundamental_alcove_has_zero_floor_vector():
    rs = build("C", 2)
    alc = alcove_of(fundamental_central_point(rs))
    assert all(m == 0 for m in alc.m)


def test_alcove_floors_bound_the_central_point():
    rs = build("A", 3)
    point = fundamental_central_point(rs)
    for q in neighbors(point):
        alc = alcove_of(q)
        y = q.omega_point()
        for root, m in zip(rs.positive_roots, alc.m):
            assert m < pairing(y, root) < m + 1


def test_neighbors_count_and_distinctness():
    for t, r in (("A", 2), ("C", 3), ("D", 4)):
        rs = build(t, r)
        ns = neighbors(fundamental_central_point(rs))
        assert len(ns) == r + 1
        assert len({alcove_of(q).m for q in ns}) == r + 1


def test_weyl_alcoves_are_distinct():
    rs = build("C", 2)
    W = enumerate_weyl(rs)
    alcoves = {alcove_of(weyl_alcove(w)).m for w in W}
    assert len(alcoves) == len(W)


def test_reduce_to_fundamental_roundtrip():
    rs = build("A", 2)
    W = enumerate_weyl(rs)
    base = fundamental_central_point(rs)
    target = base.omega_point()
    for w in W:
        coords = weyl_alcove(w).omega_point()
        sigma, image = reduce_to_fundamental(rs, coords)
        assert image == target
        assert sigma.apply(coords) == image


def test_reduce_to_fundamental_reaches_far_alcoves():
    rs = build("C", 2)
    point = fundamental_central_point(rs)
    # walk a deterministic zig-zag path away from the origin
    for step in range(12):
        point = neighbors(point)[step % (rs.rank + 1)]
    coords = point.omega_point()
    sigma, image = reduce_to_fundamental(rs, coords)
    assert image == fundamental_central_point(rs).omega_point()
    assert sigma.apply(coords) == image


def test_affine_map_compose_and_inverse():
    rs = build("A", 3)
    p = fundamental_central_point(rs)
    q = neighbors(neighbors(p)[0])[2]
    sigma, _ = reduce_to_fundamental(rs, q.omega_point())
    rt = sigma.compose(sigma.inverse())
    ident = geometry.AffineMap.identity_map(rs.rank)
    assert rt.linear == ident.linear
    assert rt.translation == ident.translation
