"""Portrait construction, classification, and the brute-force cross-check."""

import math
import random

import pytest

from preper.dynmap import DegenerateMapError, apply, build_map, orbit
from preper.portrait import (
    PortraitOverflowError,
    brute_force_preperiodic,
    build_portrait,
    classify,
    default_period_cap,
    rational_points_up_to,
)
from preper.qarith import INFINITY, ProjPoint


def z_squared():
    return build_map([0, 0, 1], [1])


def z_squared_plus_one():
    return build_map([1, 0, 1], [1])


def z_squared_minus_z():
    return build_map([0, -1, 1], [1])


def shifted_product_d2():
    return build_map([2, -3, 1], [0, 0, 1])  # (z-1)(z-2)/z^2


def test_point_enumeration_against_gcd_count():
    for H in (1, 2, 5, 9):
        pts = list(rational_points_up_to(H))
        assert pts[0] == INFINITY
        assert len(pts) == len(set(pts))
        expected = 1 + sum(
            1
            for y in range(1, H + 1)
            for x in range(-H, H + 1)
            if math.gcd(x, y) == 1
        )
        assert len(pts) == expected
        for P in pts:
            assert P.height() <= H


def test_point_enumeration_rejects_zero_bound():
    with pytest.raises(ValueError):
        list(rational_points_up_to(0))


def test_portrait_z2():
    port = build_portrait(z_squared())
    assert port.points() == [
        INFINITY,
        ProjPoint(-1, 1),
        ProjPoint(0, 1),
        ProjPoint(1, 1),
    ]
    counts = classify(port)
    assert counts.periodic == 3
    assert counts.tails == 1
    assert counts.preperiodic == 4
    assert counts.cycle_lengths == (1, 1, 1)
    assert counts.max_tail_depth == 1
    assert counts.longest_orbit == 2
    (tail,) = port.tails
    assert tail.point == ProjPoint(-1, 1)
    assert tail.image == tail.entry == ProjPoint(1, 1)
    assert tail.depth == 1


def test_portrait_z2_plus_one():
    # the classic rigid example: infinity is the only rational preperiodic point
    port = build_portrait(z_squared_plus_one())
    assert port.points() == [INFINITY]
    counts = classify(port)
    assert counts == classify(port)  # dataclass equality sanity
    assert (counts.periodic, counts.tails, counts.preperiodic) == (1, 0, 1)
    assert counts.cycle_lengths == (1,)
    assert counts.longest_orbit == 1


def test_portrait_shifted_product():
    port = build_portrait(shifted_product_d2())
    assert port.points() == [
        INFINITY,
        ProjPoint(0, 1),
        ProjPoint(1, 1),
        ProjPoint(2, 1),
        ProjPoint(2, 3),
    ]
    counts = classify(port)
    assert (counts.periodic, counts.tails, counts.preperiodic) == (3, 2, 5)
    assert counts.cycle_lengths == (3,)
    assert counts.max_tail_depth == 1
    assert counts.longest_orbit == 4
    assert port.cycles() == [(INFINITY, ProjPoint(1, 1), ProjPoint(0, 1))]
    t2, t23 = port.tails
    assert (t2.point, t2.image, t2.entry, t2.depth) == (
        ProjPoint(2, 1),
        ProjPoint(0, 1),
        ProjPoint(0, 1),
        1,
    )
    assert (t23.point, t23.image, t23.entry, t23.depth) == (
        ProjPoint(2, 3),
        ProjPoint(1, 1),
        ProjPoint(1, 1),
        1,
    )
    assert port.flags.closed
    assert port.flags.roots_complete
    assert port.flags.preimages_complete
    assert port.flags.bad_primes_complete
    assert port.flags.n_max == 6


def test_portrait_fixed_points_with_tails():
    port = build_portrait(z_squared_minus_z())
    assert port.points() == [
        INFINITY,
        ProjPoint(-1, 1),
        ProjPoint(0, 1),
        ProjPoint(1, 1),
        ProjPoint(2, 1),
    ]
    counts = classify(port)
    assert counts.cycle_lengths == (1, 1, 1)
    assert (counts.tails, counts.max_tail_depth, counts.longest_orbit) == (2, 1, 2)
    by_pt = {t.point: t for t in port.tails}
    assert by_pt[ProjPoint(1, 1)].entry == ProjPoint(0, 1)
    assert by_pt[ProjPoint(-1, 1)].entry == ProjPoint(2, 1)


def test_default_period_cap():
    assert default_period_cap(2) == 6
    assert default_period_cap(3) == 6
    assert default_period_cap(4) == 4
    assert default_period_cap(9) == 4


def test_overflow_guard():
    with pytest.raises(PortraitOverflowError):
        build_portrait(shifted_product_d2(), 3, max_points=3)


def test_brute_force_against_direct_orbits():
    # the memoized scan must agree with one-orbit-at-a-time classification
    phi = shifted_product_d2()
    brute = brute_force_preperiodic(phi, 8)
    for P in rational_points_up_to(8):
        rec = orbit(phi, P)
        assert (P in brute) == (rec.kind == "preperiodic")


def test_portrait_matches_brute_force_on_named_maps():
    for phi in (z_squared(), z_squared_plus_one(), shifted_product_d2(), z_squared_minus_z()):
        port = build_portrait(phi)
        assert port.flags.closed
        brute = brute_force_preperiodic(phi, 25)
        mine = {P for P in port.points() if P.height() <= 25}
        assert mine == brute


def test_portrait_matches_brute_force_on_random_maps():
    # equivalence holds up to the period horizon: a brute-force point whose
    # cycle is longer than n_max is legitimately outside the portrait
    rng = random.Random(7071)
    built = 0
    while built < 12:
        num = [rng.randrange(-4, 5) for _ in range(3)]
        den = [rng.randrange(-4, 5) for _ in range(3)]
        try:
            phi = build_map(num, den)
        except DegenerateMapError:
            continue
        built += 1
        n_max = 6
        port = build_portrait(phi, n_max)
        pts = set(port.points())
        brute = brute_force_preperiodic(phi, 10)
        for P in pts:
            if P.height() <= 10:
                assert P in brute
        for P in brute:
            rec = orbit(phi, P)
            assert rec.kind == "preperiodic"
            if rec.cycle_length <= n_max and port.flags.closed:
                assert P in pts


def test_portrait_points_are_closed_under_the_map():
    # forward images of portrait points stay inside the portrait
    for phi in (z_squared(), shifted_product_d2(), z_squared_minus_z()):
        port = build_portrait(phi)
        pts = set(port.points())
        for P in pts:
            assert apply(phi, P) in pts
