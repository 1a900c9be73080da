"""Integer binary forms: the polynomial layer under rational maps.

A form of formal degree d is stored as d+1 integer coefficients with
coeffs[i] the coefficient of X^(d-i) Y^i.  The formal degree matters: leading
zeros encode roots at infinity, so they are never stripped implicitly.  Two
views fall out of the indexing for free: f(z, 1) has coefficient list
``coeffs`` read as descending powers of z, and f(1, w) has ``coeffs`` read as
ascending powers of w.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .qarith import (
    FactorResult,
    ProjPoint,
    divisor_count,
    factor,
    iter_divisors,
)


class InexactDivisionError(ArithmeticError):
    """Raised when a form division leaves a remainder or a non-integer quotient."""


@dataclass(frozen=True)
class BinaryForm:
    """Homogeneous integer form in X, Y of fixed formal degree."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) == 0:
            raise ValueError("a form needs at least one coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def evaluate(self, x: int, y: int) -> int:
        """f(x, y) by Horner in x with a running power of y."""
        r = self.coeffs[0]
        ypow = 1
        for c in self.coeffs[1:]:
            ypow *= y
            r = r * x + c * ypow
        return r

    def evaluate_point(self, P: ProjPoint) -> int:
        return self.evaluate(P.x, P.y)

    def content(self) -> int:
        return math.gcd(*self.coeffs) if len(self.coeffs) > 1 else abs(self.coeffs[0])

    def primitive(self) -> "BinaryForm":
        """Divide out the content; sign fixed so the first nonzero coeff is > 0."""
        c = self.content()
        if c == 0:
            return self
        lead = next(a for a in self.coeffs if a != 0)
        if lead < 0:
            c = -c
        return BinaryForm(tuple(a // c for a in self.coeffs))

    def scale(self, k: int) -> "BinaryForm":
        return BinaryForm(tuple(k * a for a in self.coeffs))

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("can only add forms of equal formal degree")
        return BinaryForm(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        if self.degree != other.degree:
            raise ValueError("can only subtract forms of equal formal degree")
        return BinaryForm(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(tuple(-a for a in self.coeffs))

    def __mul__(self, other: "BinaryForm") -> "BinaryForm":
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                if b != 0:
                    out[i + j] += a * b
        return BinaryForm(tuple(out))

    def power(self, k: int) -> "BinaryForm":
        if k < 0:
            raise ValueError("negative power of a form")
        result = BinaryForm((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __str__(self) -> str:
        d = self.degree
        parts: list[str] = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            xp, yp = d - i, i
            mon = "*".join(
                ([f"X^{xp}"] if xp > 1 else ["X"] if xp == 1 else [])
                + ([f"Y^{yp}"] if yp > 1 else ["Y"] if yp == 1 else [])
            )
            if not mon:
                term = str(abs(c))
            elif abs(c) == 1:
                term = mon
            else:
                term = f"{abs(c)}*{mon}"
            parts.append(("- " if c < 0 else "+ ") + term)
        if not parts:
            return "0"
        head = parts[0].replace("+ ", "", 1).replace("- ", "-", 1)
        return " ".join([head] + parts[1:])


def form_from_poly(coeffs_ascending: list, degree: int) -> BinaryForm:
    """Homogenize an affine polynomial to a form of the given formal degree.

    coeffs_ascending[i] is the z^i coefficient; entries may be Fraction or
    int, but the result must be integral (clear denominators first).
    """
    if len(coeffs_ascending) - 1 > degree:
        raise ValueError("polynomial degree exceeds target formal degree")
    out = [0] * (degree + 1)
    for i, c in enumerate(coeffs_ascending):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError("non-integer coefficient; clear denominators first")
            c = c.numerator
        out[degree - i] = int(c)
    return BinaryForm(tuple(out))


def substitute(outer: BinaryForm, A: BinaryForm, B: BinaryForm) -> BinaryForm:
    """outer(A, B) for forms A, B of equal degree: the composition workhorse."""
    if A.degree != B.degree:
        raise ValueError("substituted pair must share a degree")
    d = outer.degree
    apow: list[BinaryForm] = [BinaryForm((1,))]
    bpow: list[BinaryForm] = [BinaryForm((1,))]
    for _ in range(d):
        apow.append(apow[-1] * A)
        bpow.append(bpow[-1] * B)
    acc: Optional[BinaryForm] = None
    for i, c in enumerate(outer.coeffs):
        if c == 0:
            continue
        term = (apow[d - i] * bpow[i]).scale(c)
        acc = term if acc is None else acc + term
    if acc is None:
        return BinaryForm((0,) * (d * A.degree + 1))
    return acc


def compose_pair(F: BinaryForm, G: BinaryForm, n: int) -> tuple[BinaryForm, BinaryForm]:
    """Coordinate forms (F_n, G_n) of the n-th iterate of [F : G].

    No content division is performed: at good primes none is needed, and the
    raw pair is exactly what the reduction checks want to look at.
    """
    if F.degree != G.degree:
        raise ValueError("map coordinates must share a degree")
    if n < 1:
        raise ValueError("iterate count must be >= 1")
    Fn, Gn = F, G
    for _ in range(n - 1):
        Fn, Gn = substitute(F, Fn, Gn), substitute(G, Fn, Gn)
    return Fn, Gn


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------


def _bareiss_det(M: list[list[int]]) -> int:
    """Fraction-free determinant, destroying M."""
    n = len(M)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k] != 0:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = M[k][k]
        for i in range(k + 1, n):
            row_i, row_k = M[i], M[k]
            head = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - head * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * M[n - 1][n - 1]


def resultant(F: BinaryForm, G: BinaryForm) -> int:
    """Resultant of two forms via the Sylvester determinant.

    Formal degrees are used, so common roots at infinity (both leading
    coefficients zero) correctly give 0.
    """
    m, n = F.degree, G.degree
    if m == 0 and n == 0:
        return 1
    size = m + n
    rows: list[list[int]] = []
    f, g = list(F.coeffs), list(G.coeffs)
    for i in range(n):
        rows.append([0] * i + f + [0] * (n - 1 - i))
    for j in range(m):
        rows.append([0] * j + g + [0] * (m - 1 - j))
    assert all(len(r) == size for r in rows)
    return _bareiss_det(rows)


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------


def _strip_monomials(f: BinaryForm) -> tuple[int, int, tuple[int, ...]]:
    """f = X^a * Y^b * h with h nonzero at both ends; returns (a, b, h-coeffs)."""
    coeffs = f.coeffs
    lead = 0
    while coeffs[lead] == 0:
        lead += 1
    trail = 0
    while coeffs[len(coeffs) - 1 - trail] == 0:
        trail += 1
    core = coeffs[lead : len(coeffs) - trail]
    # coeffs[i] multiplies X^(d-i) Y^i: leading zeros are powers of Y,
    # trailing zeros are powers of X
    return trail, lead, core


def exact_divide(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Quotient f / g in Z[X, Y], or raise InexactDivisionError.

    Division is attempted over Q and then checked for integrality, so both a
    nonzero remainder and a genuinely rational quotient are rejected.
    """
    if g.is_zero:
        raise ZeroDivisionError("division by the zero form")
    if f.degree < g.degree:
        raise InexactDivisionError("degree of divisor exceeds degree of dividend")
    if f.is_zero:
        return BinaryForm((0,) * (f.degree - g.degree + 1))
    fa, fb, fh = _strip_monomials(f)
    ga, gb, gh = _strip_monomials(g)
    if ga > fa or gb > fb:
        raise InexactDivisionError("divisor has a monomial factor the dividend lacks")
    # univariate long division on the cores, descending coefficients
    num = [Fraction(c) for c in fh]
    den = [Fraction(c) for c in gh]
    dn, dd = len(num) - 1, len(den) - 1
    if dn < dd:
        raise InexactDivisionError("divisor core degree exceeds dividend core degree")
    q = [Fraction(0)] * (dn - dd + 1)
    for k in range(dn - dd + 1):
        c = num[k] / den[0]
        q[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num[dn - dd + 1 :]):
        raise InexactDivisionError("nonzero remainder")
    if any(c.denominator != 1 for c in q):
        raise InexactDivisionError("quotient is not integral")
    qa, qb = fa - ga, fb - gb
    out_deg = f.degree - g.degree
    out = [0] * (out_deg + 1)
    for i, c in enumerate(q):
        out[qb + i] = c.numerator
    return BinaryForm(tuple(out))


# ---------------------------------------------------------------------------
# rational roots
# ---------------------------------------------------------------------------

# fixed filter primes for cheap modular rejection of root candidates
_FILTER_PRIMES = (2305843009213693951, 1000000000000000003)


@dataclass(frozen=True)
class RootResult:
    """Rational roots with multiplicity, and whether the list is certified full.

    complete degrades to False when the leading/trailing coefficient could not
    be fully factored inside the budget or the candidate enumeration was
    capped; the roots returned are still genuine roots.
    """

    roots: tuple[tuple[ProjPoint, int], ...]
    complete: bool

    def as_dict(self) -> dict[ProjPoint, int]:
        return dict(self.roots)

    def points(self) -> set[ProjPoint]:
        return {P for P, _ in self.roots}


def root_multiplicity(f: BinaryForm, P: ProjPoint) -> int:
    """Order of vanishing of f at P, by repeated division by P's linear form."""
    L = BinaryForm((P.y, -P.x))
    m = 0
    while True:
        if f.evaluate_point(P) != 0:
            return m
        f = exact_divide(f, L)
        m += 1


def _default_factor_budget(n: int) -> dict:
    # rho can only reach ~35-bit factors under any sane budget; on gigantic
    # inputs each step is also expensive, so the budget shrinks with size and
    # the completeness flag carries the consequence
    if abs(n).bit_length() <= 1500:
        return {}
    return {"rho_steps": 30_000, "rho_restarts": 6}


def rational_roots(
    f: BinaryForm,
    *,
    candidate_cap: int = 200_000,
    factor_kwargs: Optional[dict] = None,
) -> RootResult:
    """All P in P^1(Q) with f(P) = 0, with multiplicities.

    Method: strip powers of X and Y (roots [0:1] and [1:0]), then run the
    rational root theorem on the remaining core, with candidate numerators
    dividing the trailing coefficient and denominators dividing the leading
    one.  Candidates are screened modulo two fixed large primes before any
    exact evaluation.
    """
    if f.is_zero:
        raise ValueError("zero form vanishes everywhere")
    work = f.primitive()
    found: list[tuple[ProjPoint, int]] = []
    x_mult, y_mult, core = _strip_monomials(work)
    if y_mult:
        found.append((ProjPoint(1, 0), y_mult))
    if x_mult:
        found.append((ProjPoint(0, 1), x_mult))
    complete = True
    if len(core) > 1:
        lead, trail = core[0], core[-1]
        fk = factor_kwargs if factor_kwargs is not None else _default_factor_budget(
            max(abs(lead), abs(trail))
        )
        fr_trail: FactorResult = factor(trail, **fk)
        fr_lead: FactorResult = factor(lead, **fk)
        complete = fr_trail.complete and fr_lead.complete
        n_cand = 2 * divisor_count(fr_trail.factors) * divisor_count(fr_lead.factors)
        if n_cand > candidate_cap:
            complete = False
        core_form = BinaryForm(core)
        filt = [
            tuple(c % p for c in core) for p in _FILTER_PRIMES
        ]
        degc = len(core) - 1

        def _passes_filter(a: int, b: int) -> bool:
            for coeffs_mod, p in zip(filt, _FILTER_PRIMES):
                r = coeffs_mod[0]
                ypow = 1
                am, bm = a % p, b % p
                for c in coeffs_mod[1:]:
                    ypow = ypow * bm % p
                    r = (r * am + c * ypow) % p
                if r != 0:
                    return False
            return True

        tried = 0
        done = False
        for b in iter_divisors(fr_lead.factors):
            if done:
                break
            for a_abs in iter_divisors(fr_trail.factors):
                for a in (a_abs, -a_abs):
                    tried += 1
                    if tried > candidate_cap:
                        complete = False
                        done = True
                        break
                    if math.gcd(a_abs, b) != 1:
                        continue
                    if not _passes_filter(a, b):
                        continue
                    if core_form.evaluate(a, b) == 0:
                        P = ProjPoint(a, b)
                        found.append((P, root_multiplicity(core_form, P)))
                if done:
                    break
    found.sort(key=lambda pm: pm[0].sort_key())
    total_mult = sum(m for _, m in found)
    assert total_mult <= f.degree
    return RootResult(roots=tuple(found), complete=complete)
