"""Exact arithmetic over Q: valuations, projective points, factoring, S-units.

Everything downstream (reduction types, portraits, certificates) reduces to
integer arithmetic done here.  Rationals are stdlib ``fractions.Fraction``;
projective points are coprime integer pairs in a fixed sign normal form, so
equality and hashing are structural.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Union

Rat = Union[Fraction, int]


class InfiniteValuation:
    """Sentinel for v_p(0) = +infinity.

    Deliberately supports comparison but no arithmetic: adding or subtracting
    an infinite valuation is a logic error upstream and raises TypeError.
    """

    _instance: Optional["InfiniteValuation"] = None

    def __new__(cls) -> "InfiniteValuation":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "oo"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, InfiniteValuation)

    def __hash__(self) -> int:
        return hash("InfiniteValuation")

    def __gt__(self, other: object) -> bool:
        if isinstance(other, (int, InfiniteValuation)):
            return not isinstance(other, InfiniteValuation)
        return NotImplemented

    def __ge__(self, other: object) -> bool:
        if isinstance(other, (int, InfiniteValuation)):
            return True
        return NotImplemented

    def __lt__(self, other: object) -> bool:
        if isinstance(other, (int, InfiniteValuation)):
            return False
        return NotImplemented

    def __le__(self, other: object) -> bool:
        return self.__eq__(other) if isinstance(other, InfiniteValuation) else False


OO = InfiniteValuation()

Valuation = Union[int, InfiniteValuation]


def is_infinite(v: Valuation) -> bool:
    return isinstance(v, InfiniteValuation)


# ---------------------------------------------------------------------------
# primality and factoring
# ---------------------------------------------------------------------------

# Strong-pseudoprime witnesses: first 13 primes decide primality below this
# bound (Sorenson-Webster).  Above it the test is probabilistic.
_MR_DETERMINISTIC_BOUND = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def _mr_witness(a: int, d: int, r: int, n: int) -> bool:
    """True if a witnesses compositeness of n = d*2^r + 1, d odd."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n: int) -> bool:
    """Miller-Rabin primality check.

    Deterministic for n below ~3.3e24 via the fixed witness set; for larger n
    the fixed bases are augmented with 25 bases drawn from a PRNG seeded by n,
    so the answer is reproducible and a false positive needs to fool 38
    strong-pseudoprime tests at once.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n == p:
            return True
        if n % p == 0:
            return False
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    bases: tuple[int, ...] = _MR_BASES
    if n >= _MR_DETERMINISTIC_BOUND:
        rng = random.Random(n)
        bases = bases + tuple(rng.randrange(2, n - 1) for _ in range(25))
    return not any(_mr_witness(a % n, d, r, n) for a in bases if a % n not in (0, 1, n - 1))


def _brent_rho(n: int, seed: int, max_steps: int) -> int:
    """One Brent-cycle Pollard rho attempt; returns a factor or 1 on failure.

    n must be odd composite, not a perfect power of interest here.  Budget is
    the total number of f-iterations.
    """
    rng = random.Random(seed)
    y = rng.randrange(1, n)
    c = rng.randrange(1, n)
    m = 128
    g = r = q = 1
    steps = 0
    x = ys = y
    while g == 1 and steps < max_steps:
        x = y
        for _ in range(r):
            y = (y * y + c) % n
        k = 0
        while k < r and g == 1:
            ys = y
            for _ in range(min(m, r - k)):
                y = (y * y + c) % n
                q = q * abs(x - y) % n
            steps += min(m, r - k)
            g = math.gcd(q, n)
            k += m
        r *= 2
    if g == n:
        # backtrack one step at a time
        g = 1
        while g == 1:
            ys = (ys * ys + c) % n
            g = math.gcd(abs(x - ys), n)
    return g if g != n else 1


@dataclass(frozen=True)
class FactorResult:
    """Factorization of |n| into certified primes, plus any unfactored rest.

    factors: ((p, e), ...) sorted by p; every p passed is_prime.
    cofactor: composite remainder the budget could not split, or None.
    """

    factors: tuple[tuple[int, int], ...]
    cofactor: Optional[int] = None

    @property
    def complete(self) -> bool:
        return self.cofactor is None

    def value(self) -> int:
        v = 1
        for p, e in self.factors:
            v *= p**e
        return v * (self.cofactor or 1)


def _kth_root(n: int, k: int) -> int:
    """Floor of the k-th root of n."""
    if k == 2:
        return math.isqrt(n)
    lo = 1 << ((n.bit_length() - 1) // k)
    hi = lo * 2
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid - 1
    return lo


def _perfect_root(n: int) -> Optional[tuple[int, int]]:
    """(r, k) with r^k = n for some prime k, else None."""
    for k in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if (1 << (n.bit_length() // k + 1)) < 2:
            break
        r = _kth_root(n, k)
        if r > 1 and r**k == n:
            return r, k
    return None


def factor(
    n: int,
    *,
    trial_bound: int = 10**6,
    rho_steps: int = 200_000,
    rho_restarts: int = 24,
) -> FactorResult:
    """Factor |n| with a bounded effort budget.

    Trial division by 2, 3 and a 6k+-1 wheel up to trial_bound, then
    Brent-cycle rho on what remains.  When the budget runs out the composite
    remainder is surfaced as ``cofactor`` rather than silently dropped.

    Examples:
        >>> factor(600851475143).factors
        ((71, 1), (839, 1), (1471, 1), (6857, 1))
        >>> factor(-2**20).factors
        ((2, 20),)
    """
    if n == 0:
        raise ValueError("cannot factor 0")
    n = abs(n)
    found: dict[int, int] = {}

    def push(p: int, e: int = 1) -> None:
        found[p] = found.get(p, 0) + e

    for p in (2, 3):
        while n % p == 0:
            push(p)
            n //= p
    q = 5
    while q <= trial_bound and q * q <= n:
        for cand in (q, q + 2):
            while n % cand == 0:
                push(cand)
                n //= cand
        q += 6
    if n > 1 and (n <= trial_bound * trial_bound or is_prime(n)):
        # survived trial division: any composite this small would have split
        push(n)
        n = 1

    cofactor = None
    if n > 1:
        pending = [n]
        restarts_left = rho_restarts
        stuck: list[int] = []
        while pending:
            m = pending.pop()
            if is_prime(m):
                push(m)
                continue
            pr = _perfect_root(m)
            if pr is not None:
                r, k = pr
                pending.extend([r] * k)
                continue
            g = 1
            while g == 1 and restarts_left > 0:
                restarts_left -= 1
                g = _brent_rho(m, seed=m + restarts_left, max_steps=rho_steps)
            if g in (1, m):
                stuck.append(m)
            else:
                pending.extend([g, m // g])
        if stuck:
            cofactor = math.prod(stuck)

    pairs = tuple(sorted(found.items()))
    return FactorResult(factors=pairs, cofactor=cofactor)


def divisor_count(factors: Iterable[tuple[int, int]]) -> int:
    return math.prod(e + 1 for _, e in factors)


def iter_divisors(factors: tuple[tuple[int, int], ...]) -> Iterator[int]:
    """Yield positive divisors of the factored part, deterministically.

    Order is the mixed-radix order over exponent vectors; callers that cap the
    enumeration get a reproducible prefix.
    """
    if not factors:
        yield 1
        return
    (p, e), rest = factors[0], factors[1:]
    pk = 1
    for _ in range(e + 1):
        for d in iter_divisors(rest):
            yield pk * d
        pk *= p


# ---------------------------------------------------------------------------
# valuations and the logarithmic distance
# ---------------------------------------------------------------------------


def valuation(q: Rat, p: int) -> Valuation:
    """p-adic valuation v_p(q); v_p(0) is the infinite sentinel.

    Examples:
        >>> valuation(Fraction(12, 5), 2)
        2
        >>> valuation(Fraction(1, 9), 3)
        -2
        >>> valuation(0, 7)
        oo
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if q == 0:
        return OO
    num, den = (q.numerator, q.denominator) if isinstance(q, Fraction) else (q, 1)
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v


def _int_valuation(n: int, p: int) -> Valuation:
    if n == 0:
        return OO
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# projective points
# ---------------------------------------------------------------------------


@dataclass(frozen=True, order=False)
class ProjPoint:
    """A point of P^1(Q) as a coprime integer pair [x : y].

    Normal form: gcd(x, y) = 1 and y > 0, except the point at infinity which
    is stored as [1 : 0].  The constructor normalizes, so ProjPoint(4, -2) is
    the same object as ProjPoint(-2, 1).
    """

    x: int
    y: int

    def __post_init__(self) -> None:
        x, y = self.x, self.y
        if x == 0 and y == 0:
            raise ValueError("[0:0] is not a projective point")
        g = math.gcd(x, y)
        x, y = x // g, y // g
        if y < 0 or (y == 0 and x < 0):
            x, y = -x, -y
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "y", y)

    @classmethod
    def from_rational(cls, q: Rat) -> "ProjPoint":
        q = Fraction(q)
        return cls(q.numerator, q.denominator)

    @property
    def is_infinity(self) -> bool:
        return self.y == 0

    def to_rational(self) -> Fraction:
        if self.y == 0:
            raise ZeroDivisionError("point at infinity has no affine value")
        return Fraction(self.x, self.y)

    def height(self) -> int:
        return max(abs(self.x), abs(self.y))

    def sort_key(self) -> tuple[int, int]:
        # fixed (y, x) order used for all deterministic output
        return (self.y, self.x)

    def __str__(self) -> str:
        if self.y == 0:
            return "inf"
        if self.y == 1:
            return str(self.x)
        return f"{self.x}/{self.y}"


INFINITY = ProjPoint(1, 0)

PointLike = Union[ProjPoint, tuple[int, int]]


def _point_coords(P: PointLike) -> tuple[int, int]:
    if isinstance(P, ProjPoint):
        return P.x, P.y
    x, y = P
    if x == 0 and y == 0:
        raise ValueError("[0:0] is not a projective point")
    return x, y


def log_distance(P1: PointLike, P2: PointLike, p: int) -> Valuation:
    """Logarithmic p-adic distance v_p(x1 y2 - x2 y1) - min terms.

    Accepts raw (possibly unnormalized) coordinate pairs as well as
    ProjPoints; the two min-valuation corrections make the value independent
    of scaling.  Equal points give the infinite sentinel.

    Examples:
        >>> log_distance(ProjPoint(1, 1), ProjPoint(3, 1), 2)
        1
        >>> log_distance((2, 2), (3, 1), 2)
        0
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    x1, y1 = _point_coords(P1)
    x2, y2 = _point_coords(P2)
    cross = x1 * y2 - x2 * y1
    if cross == 0:
        return OO
    correction = 0
    for a, b in ((x1, y1), (x2, y2)):
        va, vb = _int_valuation(a, p), _int_valuation(b, p)
        m = vb if is_infinite(va) else (va if is_infinite(vb) else min(va, vb))
        assert isinstance(m, int)
        correction += m
    v = _int_valuation(cross, p)
    assert isinstance(v, int)
    return v - correction


# ---------------------------------------------------------------------------
# prime sets and S-units
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeSet:
    """A finite set of rational primes plus the archimedean place.

    The size s counts the archimedean place, so s = len(primes) + 1; the
    bound formulas all consume this s.
    """

    primes: tuple[int, ...]

    def __post_init__(self) -> None:
        ps = tuple(sorted(set(self.primes)))
        for p in ps:
            if not is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "primes", ps)

    @property
    def s(self) -> int:
        return len(self.primes) + 1

    def __contains__(self, p: int) -> bool:
        return p in self.primes

    def __iter__(self) -> Iterator[int]:
        return iter(self.primes)

    def __str__(self) -> str:
        inner = ", ".join(["inf"] + [str(p) for p in self.primes])
        return "{" + inner + "}"


def strip_primes(n: int, primes: Iterable[int]) -> int:
    """Divide all powers of the given primes out of |n|."""
    n = abs(n)
    if n == 0:
        return 0
    for p in primes:
        while n % p == 0:
            n //= p
    return n


def is_s_unit(q: Rat, S: Union[PrimeSet, Iterable[int]]) -> bool:
    """True iff q is nonzero and v_p(q) = 0 away from S's finite primes.

    Examples:
        >>> is_s_unit(Fraction(4, 3), PrimeSet((2, 3)))
        True
        >>> is_s_unit(10, PrimeSet((2,)))
        False
    """
    if q == 0:
        return False
    primes = S.primes if isinstance(S, PrimeSet) else tuple(S)
    num, den = (q.numerator, q.denominator) if isinstance(q, Fraction) else (q, 1)
    return strip_primes(num, primes) == 1 and strip_primes(den, primes) == 1
