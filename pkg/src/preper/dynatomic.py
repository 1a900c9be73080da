"""Period and dynatomic polynomials, formal periods, multipliers.

The n-th period form of phi = [F : G] is Phi_n = Y*F_n - X*G_n, whose roots
are the points of period dividing n.  Moebius inversion over the divisors of
n isolates the n-th dynatomic form Phi*_n, whose roots have formal period n.
A root's primitive period can still be a proper divisor m of n, but only when
the multiplier at the m-cycle is a root of unity; over Q that means -1, so a
rational periodic point carries at most two formal periods (m and 2m).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from .dynmap import InvariantViolation, RationalMap, apply
from .forms import BinaryForm, compose_pair, exact_divide, rational_roots, root_multiplicity
from .qarith import ProjPoint, factor

# Degree/period pairs (n, d) for which a degree-d map may have no point of
# exact period n over the algebraic closure (Baker).  For polynomial maps the
# only genuine exception is (2, 2).
BAKER_EXCEPTIONAL_PAIRS = frozenset({(2, 2), (2, 3), (3, 2), (4, 2)})


def baker_degree_check(d: int, n: int) -> bool:
    """True iff exact-period-n points are guaranteed to exist in degree d."""
    return (n, d) not in BAKER_EXCEPTIONAL_PAIRS


def _divisors(n: int) -> list[int]:
    return [k for k in range(1, n + 1) if n % k == 0]


def mobius(n: int) -> int:
    if n == 1:
        return 1
    fr = factor(n)
    assert fr.complete
    if any(e > 1 for _, e in fr.factors):
        return 0
    return -1 if len(fr.factors) % 2 else 1


def formal_period_degree(d: int, n: int) -> int:
    """deg Phi*_n = sum over k | n of mu(n/k) (d^k + 1)."""
    return sum(mobius(n // k) * (d**k + 1) for k in _divisors(n))


def period_polynomial(phi: RationalMap, n: int) -> BinaryForm:
    """Phi_n = Y*F_n - X*G_n, content- and sign-normalized, degree d^n + 1."""
    if n < 1:
        raise ValueError("period must be >= 1")
    Fn, Gn = compose_pair(phi.F, phi.G, n)
    y_fn = BinaryForm((0,) + Fn.coeffs)
    x_gn = BinaryForm(Gn.coeffs + (0,))
    form = y_fn - x_gn
    if form.is_zero:
        raise InvariantViolation("period form vanished identically")
    return form.primitive()


@dataclass(frozen=True)
class DynatomicRecord:
    n: int
    period_form: BinaryForm
    star_form: BinaryForm
    degree_expected: int

    @property
    def degree_ok(self) -> bool:
        return self.star_form.degree == self.degree_expected


@lru_cache(maxsize=None)
def dynatomic_record(phi: RationalMap, n: int) -> DynatomicRecord:
    """Phi_n together with Phi*_n, built by one exact division.

    The Moebius factors are grouped into a single numerator and denominator
    product first; the division of those two primitive forms must come out
    exact and integral, which is itself a strong self-check.
    """
    num: Optional[BinaryForm] = None
    den: Optional[BinaryForm] = None
    for k in _divisors(n):
        mu = mobius(n // k)
        if mu == 0:
            continue
        pk = period_polynomial(phi, k)
        if mu == 1:
            num = pk if num is None else num * pk
        else:
            den = pk if den is None else den * pk
    assert num is not None
    star = num if den is None else exact_divide(num, den)
    star = star.primitive()
    return DynatomicRecord(
        n=n,
        period_form=period_polynomial(phi, n),
        star_form=star,
        degree_expected=formal_period_degree(phi.degree, n),
    )


def dynatomic_polynomial(phi: RationalMap, n: int) -> BinaryForm:
    return dynatomic_record(phi, n).star_form


def formal_period_orders(phi: RationalMap, P: ProjPoint, n_max: int) -> dict[int, int]:
    """a*_P(n) = multiplicity of P as a root of Phi*_n, for n = 1..n_max."""
    return {
        n: root_multiplicity(dynatomic_record(phi, n).star_form, P)
        for n in range(1, n_max + 1)
    }


# ---------------------------------------------------------------------------
# multipliers
# ---------------------------------------------------------------------------


def _eval_asc(p: list[int], t: Fraction) -> Fraction:
    r = Fraction(0)
    for c in reversed(p):
        r = r * t + c
    return r


def _ratderiv(u: list[int], v: list[int], t: Fraction) -> Fraction:
    """(u/v)'(t) for ascending integer coefficient lists, v(t) != 0."""
    du = [i * c for i, c in enumerate(u)][1:]
    dv = [i * c for i, c in enumerate(v)][1:]
    vt = _eval_asc(v, t)
    if vt == 0:
        raise InvariantViolation("chart denominator vanished at evaluation point")
    return (_eval_asc(du, t) * vt - _eval_asc(u, t) * _eval_asc(dv, t)) / (vt * vt)


def _local_derivative(phi: RationalMap, P: ProjPoint, Q: ProjPoint) -> Fraction:
    """Derivative of phi at P read in affine charts at P and at Q = phi(P).

    Finite points use the z-chart, infinity uses w = 1/z; with the chart at
    the image chosen by where Q actually lies, every case is a rational
    function with nonvanishing denominator at the base point.
    """
    if not P.is_infinity:
        t = Fraction(P.x, P.y)
        u = list(reversed(phi.F.coeffs))  # F(z, 1), ascending
        v = list(reversed(phi.G.coeffs))
    else:
        t = Fraction(0)
        u = list(phi.F.coeffs)  # F(1, w), ascending
        v = list(phi.G.coeffs)
    if Q.is_infinity:
        u, v = v, u  # image read in the w-chart: w' = G/F
    return _ratderiv(u, v, t)


def multiplier(phi: RationalMap, P: ProjPoint, m: int) -> Fraction:
    """Multiplier of the length-m cycle through P: the cycle's derivative.

    Chain rule along the cycle with chart swaps at infinity; chart choices
    cancel around the loop, so the value is the conjugation invariant.  It is
    always a finite rational here: each local factor has a nonvanishing
    chart denominator by construction.
    """
    cycle = [P]
    cur = apply(phi, P)
    while cur != P:
        cycle.append(cur)
        if len(cycle) > m:
            raise ValueError(f"{P} does not have period {m}")
        cur = apply(phi, cur)
    if len(cycle) != m:
        raise ValueError(f"{P} has period {len(cycle)}, not {m}")
    lam = Fraction(1)
    for i, Pi in enumerate(cycle):
        lam *= _local_derivative(phi, Pi, cycle[(i + 1) % m])
    return lam


# ---------------------------------------------------------------------------
# rational periodic points
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PeriodicPoint:
    point: ProjPoint
    primitive_period: int
    multiplier: Fraction
    formal_periods: tuple[int, ...]


@dataclass(frozen=True)
class PeriodicSearchResult:
    """Every rational periodic point of primitive period <= n_max.

    Complete relative to n_max when roots_complete holds; longer cycles are
    out of scope by definition, which the portrait layer reports.
    """

    points: tuple[PeriodicPoint, ...]
    n_max: int
    roots_complete: bool

    def by_point(self) -> dict[ProjPoint, PeriodicPoint]:
        return {pp.point: pp for pp in self.points}


def rational_periodic_points(
    phi: RationalMap, n_max: int, *, root_kwargs: Optional[dict] = None
) -> PeriodicSearchResult:
    """Search Phi*_n roots for n <= n_max and verify each by iteration.

    Whole cycles are closed off even if only one member shows up as a root,
    so the result is cycle-closed by construction.
    """
    rk = root_kwargs or {}
    found: dict[ProjPoint, PeriodicPoint] = {}
    complete = True
    for n in range(1, n_max + 1):
        rec = dynatomic_record(phi, n)
        rr = rational_roots(rec.star_form, **rk)
        complete = complete and rr.complete
        for pt in rr.points():
            if pt in found:
                continue
            cycle = [pt]
            cur = apply(phi, pt)
            while cur != pt:
                cycle.append(cur)
                if len(cycle) > n:
                    raise InvariantViolation(
                        f"root {pt} of the n={n} dynatomic form is not n-periodic"
                    )
                cur = apply(phi, cur)
            m = len(cycle)
            if n % m != 0:
                raise InvariantViolation(
                    f"primitive period {m} does not divide formal period {n}"
                )
            lam = multiplier(phi, pt, m)
            for c in cycle:
                formal = tuple(
                    k for k, a in formal_period_orders(phi, c, n_max).items() if a > 0
                )
                found[c] = PeriodicPoint(
                    point=c, primitive_period=m, multiplier=lam, formal_periods=formal
                )
    pts = tuple(sorted(found.values(), key=lambda pp: pp.point.sort_key()))
    return PeriodicSearchResult(points=pts, n_max=n_max, roots_complete=complete)
