"""Complete rational preperiodic portraits.

A preperiodic point is one with a finite forward orbit: after some number of
steps (its tail depth) it lands on a cycle. The set of rational preperiodic
points is closed under taking rational preimages, and every rational
preperiodic point sits above a rational cycle, so the whole portrait can be
recovered in two stages: find the rational cycles through dynatomic forms,
then saturate under preimages. Both stages report whether their root searches
were exhaustive, and the portrait carries those flags.

`brute_force_preperiodic` is the independent cross-check: it classifies every
point up to a height bound by direct iteration, sharing verdicts along orbits
so large scans stay cheap.
"""

from dataclasses import dataclass
from typing import Iterator, Optional

from .dynatomic import PeriodicPoint, rational_periodic_points
from .dynmap import HEIGHT_ESCAPE, InvariantViolation, RationalMap, apply, preimages
from .qarith import INFINITY, ProjPoint

MAX_PORTRAIT_POINTS = 10**5


class PortraitOverflowError(RuntimeError):
    """Raised when preimage saturation exceeds the point budget."""


def default_period_cap(degree: int) -> int:
    """Default search depth for cycle lengths, smaller for costly degrees."""
    return 6 if degree <= 3 else 4


@dataclass(frozen=True)
class TailRecord:
    """A strictly preperiodic point and its route into the cycles.

    depth is the least k >= 1 with phi^k(point) periodic, image is the single
    forward step phi(point), and entry is phi^depth(point), the first periodic
    point the orbit reaches.
    """

    point: ProjPoint
    depth: int
    image: ProjPoint
    entry: ProjPoint


@dataclass(frozen=True)
class CompletenessFlags:
    """What the portrait computation can vouch for.

    roots_complete covers the dynatomic root searches, preimages_complete the
    root searches during preimage saturation, and bad_primes_complete the
    factorization of the resultant. closed means the portrait provably
    contains every rational preperiodic point whose cycle length is at most
    n_max; longer cycles, if any exist, are outside the search horizon.
    """

    n_max: int
    roots_complete: bool
    preimages_complete: bool
    bad_primes_complete: bool

    @property
    def closed(self) -> bool:
        return self.roots_complete and self.preimages_complete


@dataclass(frozen=True)
class PortraitCounts:
    periodic: int
    tails: int
    preperiodic: int
    cycle_lengths: tuple[int, ...]
    max_tail_depth: int
    longest_orbit: int


@dataclass(frozen=True)
class Portrait:
    """All rational preperiodic points of a map, with orbit structure."""

    phi: RationalMap
    periodic: tuple[PeriodicPoint, ...]
    tails: tuple[TailRecord, ...]
    flags: CompletenessFlags

    def points(self) -> list[ProjPoint]:
        """Every preperiodic point, in the canonical (y, x) order."""
        pts = [pp.point for pp in self.periodic] + [t.point for t in self.tails]
        return sorted(pts, key=ProjPoint.sort_key)

    def is_periodic(self, P: ProjPoint) -> bool:
        return any(pp.point == P for pp in self.periodic)

    def periodic_by_point(self) -> dict[ProjPoint, PeriodicPoint]:
        return {pp.point: pp for pp in self.periodic}

    def cycles(self) -> list[tuple[ProjPoint, ...]]:
        """The cycles, each listed once in orbit order from its least point."""
        remaining = {pp.point for pp in self.periodic}
        out = []
        while remaining:
            start = min(remaining, key=ProjPoint.sort_key)
            cyc = [start]
            cur = apply(self.phi, start)
            while cur != start:
                cyc.append(cur)
                cur = apply(self.phi, cur)
            remaining.difference_update(cyc)
            out.append(tuple(cyc))
        out.sort(key=lambda c: c[0].sort_key())
        return out


def build_portrait(
    phi: RationalMap,
    n_max: Optional[int] = None,
    *,
    max_points: int = MAX_PORTRAIT_POINTS,
    root_kwargs: Optional[dict] = None,
) -> Portrait:
    """Compute the rational preperiodic portrait of phi.

    Cycles of length up to n_max are found first, then the preimage closure
    is taken. Saturation always terminates on genuine inputs because the
    portrait is finite, but a hard cap guards the search anyway.
    """
    if n_max is None:
        n_max = default_period_cap(phi.degree)
    search = rational_periodic_points(phi, n_max, root_kwargs=root_kwargs)
    periodic_points = {pp.point for pp in search.points}

    known = set(periodic_points)
    frontier = sorted(known, key=ProjPoint.sort_key)
    preimages_complete = True
    while frontier:
        fresh = []
        for Q in frontier:
            pre = preimages(phi, Q, **(root_kwargs or {}))
            preimages_complete = preimages_complete and pre.complete
            for P in sorted(pre.points, key=ProjPoint.sort_key):
                if P not in known:
                    known.add(P)
                    fresh.append(P)
        if len(known) > max_points:
            raise PortraitOverflowError(
                f"preimage closure exceeded {max_points} points"
            )
        frontier = fresh

    # every known point reaches the periodic set; record how the tails get in
    image = {P: apply(phi, P) for P in known}
    depth: dict[ProjPoint, int] = {P: 0 for P in periodic_points}

    def depth_of(P: ProjPoint) -> int:
        path = []
        cur = P
        while cur not in depth:
            path.append(cur)
            cur = image[cur]
            if len(path) > len(known):
                raise InvariantViolation("orbit failed to reach the periodic set")
        base = depth[cur]
        for i, Q in enumerate(reversed(path), start=1):
            depth[Q] = base + i
        return depth[P]

    tails = []
    for P in sorted(known - periodic_points, key=ProjPoint.sort_key):
        k = depth_of(P)
        entry = P
        for _ in range(k):
            entry = image[entry]
        tails.append(TailRecord(point=P, depth=k, image=image[P], entry=entry))

    flags = CompletenessFlags(
        n_max=n_max,
        roots_complete=search.roots_complete,
        preimages_complete=preimages_complete,
        bad_primes_complete=phi.bad_primes_complete,
    )
    return Portrait(
        phi=phi,
        periodic=tuple(sorted(search.points, key=lambda pp: pp.point.sort_key())),
        tails=tuple(tails),
        flags=flags,
    )


def classify(portrait: Portrait) -> PortraitCounts:
    """Headline statistics of a portrait."""
    period_of = {pp.point: pp.primitive_period for pp in portrait.periodic}
    cycle_lengths = tuple(sorted(len(c) for c in portrait.cycles()))
    max_depth = max((t.depth for t in portrait.tails), default=0)
    orbit_lengths = [pp.primitive_period for pp in portrait.periodic]
    orbit_lengths += [t.depth + period_of[t.entry] for t in portrait.tails]
    return PortraitCounts(
        periodic=len(portrait.periodic),
        tails=len(portrait.tails),
        preperiodic=len(portrait.periodic) + len(portrait.tails),
        cycle_lengths=cycle_lengths,
        max_tail_depth=max_depth,
        longest_orbit=max(orbit_lengths, default=0),
    )


def rational_points_up_to(height_bound: int) -> Iterator[ProjPoint]:
    """All points [x : y] with max(|x|, |y|) <= height_bound, plus infinity."""
    if height_bound < 1:
        raise ValueError("height bound must be at least 1")
    yield INFINITY
    for y in range(1, height_bound + 1):
        for x in range(-height_bound, height_bound + 1):
            P = ProjPoint(x, y)
            if P.x == x and P.y == y:  # already coprime, not a repeat
                yield P


def brute_force_preperiodic(
    phi: RationalMap,
    height_bound: int,
    *,
    height_cap: int = HEIGHT_ESCAPE,
) -> frozenset[ProjPoint]:
    """Classify every point up to a height bound by direct iteration.

    Orbits share verdicts: once a point is known preperiodic or escaping,
    everything that flowed through it inherits the answer.
    """
    verdict: dict[ProjPoint, bool] = {}

    def settle(P: ProjPoint) -> bool:
        path: list[ProjPoint] = []
        on_path: set[ProjPoint] = set()
        cur = P
        while True:
            if cur in verdict:
                v = verdict[cur]
                break
            if cur in on_path:
                v = True  # the orbit looped, so the whole path is preperiodic
                break
            if cur.height() > height_cap:
                v = False
                break
            path.append(cur)
            on_path.add(cur)
            cur = apply(phi, cur)
        for Q in path:
            verdict[Q] = v
        return v

    return frozenset(P for P in rational_points_up_to(height_bound) if settle(P))
