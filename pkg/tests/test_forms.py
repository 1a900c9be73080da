"""Binary forms: evaluation, composition, resultants, roots, exact division.

Derived expected values are frozen from independent oracles implemented here
(Fraction Gaussian elimination for determinants, univariate gcd, brute-force
root scans), not from the library code under test.
"""

import math
import random
from fractions import Fraction

import pytest

from preper.forms import (
    BinaryForm,
    InexactDivisionError,
    compose_pair,
    exact_divide,
    form_from_poly,
    rational_roots,
    resultant,
    substitute,
)
from preper.qarith import ProjPoint


# ---------------------------------------------------------------------------
# oracles
# ---------------------------------------------------------------------------


def det_fraction_gauss(rows):
    """Plain Gaussian elimination over Fraction: the determinant oracle."""
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    det = Fraction(1)
    for k in range(n):
        pivot_row = next((i for i in range(k, n) if m[i][k] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != k:
            m[k], m[pivot_row] = m[pivot_row], m[k]
            det = -det
        det *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            factor = m[i][k] * inv
            if factor:
                for j in range(k, n):
                    m[i][j] -= factor * m[k][j]
    return det


def sylvester_rows(F: BinaryForm, G: BinaryForm):
    m, n = F.degree, G.degree
    f, g = list(F.coeffs), list(G.coeffs)
    rows = [[0] * i + f + [0] * (n - 1 - i) for i in range(n)]
    rows += [[0] * j + g + [0] * (m - 1 - j) for j in range(m)]
    return rows


def resultant_oracle(F: BinaryForm, G: BinaryForm) -> int:
    d = det_fraction_gauss(sylvester_rows(F, G))
    assert d.denominator == 1
    return d.numerator


def _strip_lead(p):
    i = 0
    while i < len(p) and p[i] == 0:
        i += 1
    return p[i:]


def _poly_mod(a, b):
    """a mod b on descending Fraction coefficient lists, b nonzero."""
    a = _strip_lead(list(a))
    while len(a) >= len(b):
        c = a[0] / b[0]
        a = [ai - c * bi for ai, bi in zip(a, b)] + a[len(b):]
        a = _strip_lead(a)
    return a


def forms_have_common_factor(F: BinaryForm, G: BinaryForm) -> bool:
    """gcd oracle: univariate Fraction Euclid plus a shared root at infinity."""
    if F.coeffs[0] == 0 and G.coeffs[0] == 0:
        return True  # both divisible by Y
    a = _strip_lead([Fraction(c) for c in F.coeffs])
    b = _strip_lead([Fraction(c) for c in G.coeffs])
    while b:
        a, b = b, _poly_mod(a, b)
    return len(a) > 1


def brute_roots(f: BinaryForm, bound: int) -> set:
    out = set()
    for P in (ProjPoint(1, 0), ProjPoint(0, 1)):
        if f.evaluate_point(P) == 0:
            out.add(P)
    for b in range(1, bound + 1):
        for a in range(-bound, bound + 1):
            if math.gcd(a, b) == 1 and f.evaluate(a, b) == 0:
                out.add(ProjPoint(a, b))
    return out


# ---------------------------------------------------------------------------
# construction and evaluation
# ---------------------------------------------------------------------------


def test_form_basics():
    f = BinaryForm((1, -3, 2))
    assert f.degree == 2
    assert f.evaluate(2, 1) == 4 - 6 + 2
    assert f.evaluate_point(ProjPoint(1, 0)) == 1
    assert str(f) == "X^2 - 3*X*Y + 2*Y^2"
    assert str(BinaryForm((0, 1, -1, 0))) == "X^2*Y - X*Y^2"


def test_evaluate_against_power_sum():
    rng = random.Random(4)
    for _ in range(200):
        d = rng.randrange(0, 7)
        f = BinaryForm(tuple(rng.randrange(-9, 10) for _ in range(d + 1)))
        x, y = rng.randrange(-20, 21), rng.randrange(-20, 21)
        naive = sum(c * x ** (d - i) * y**i for i, c in enumerate(f.coeffs))
        assert f.evaluate(x, y) == naive


def test_form_from_poly():
    # z^2 - 3z + 2 homogenized to degree 2
    f = form_from_poly([2, -3, 1], 2)
    assert f == BinaryForm((1, -3, 2))
    # constant 1 homogenized to degree 2 is Y^2
    assert form_from_poly([1], 2) == BinaryForm((0, 0, 1))
    with pytest.raises(ValueError):
        form_from_poly([1, 2, 3], 1)
    with pytest.raises(ValueError):
        form_from_poly([Fraction(1, 2)], 1)


def test_content_primitive():
    f = BinaryForm((-4, -6, -2))
    assert f.content() == 2
    assert f.primitive() == BinaryForm((2, 3, 1))
    assert BinaryForm((0, 5, 0)).primitive() == BinaryForm((0, 1, 0))


def test_arithmetic_and_power():
    f = BinaryForm((1, 1))  # X + Y
    g = BinaryForm((1, -1))  # X - Y
    assert f * g == BinaryForm((1, 0, -1))
    assert f.power(3) == BinaryForm((1, 3, 3, 1))
    assert f.power(0) == BinaryForm((1,))
    assert (f + g) == BinaryForm((2, 0))
    with pytest.raises(ValueError):
        f + BinaryForm((1, 0, 0))


# ---------------------------------------------------------------------------
# composition
# ---------------------------------------------------------------------------


def test_compose_pair_z2_plus_1():
    # z^2 + 1: second iterate numerator (z^2+1)^2 + 1, denominator 1
    F, G = BinaryForm((1, 0, 1)), BinaryForm((0, 0, 1))
    F2, G2 = compose_pair(F, G, 2)
    assert F2 == BinaryForm((1, 0, 2, 0, 2))
    assert G2 == BinaryForm((0, 0, 0, 0, 1))
    F1, G1 = compose_pair(F, G, 1)
    assert (F1, G1) == (F, G)


def test_compose_pair_degree_growth():
    F, G = BinaryForm((1, -3, 2)), BinaryForm((1, 0, 0))
    for n in (1, 2, 3, 4):
        Fn, Gn = compose_pair(F, G, n)
        assert Fn.degree == Gn.degree == 2**n


def test_compose_matches_affine_iteration():
    # F_n/G_n evaluated at a point equals n-fold affine iteration
    rng = random.Random(12)
    F, G = BinaryForm((1, 1, -1)), BinaryForm((0, 1, 3))
    for _ in range(50):
        z = Fraction(rng.randrange(-8, 9), rng.randrange(1, 7))
        n = rng.randrange(1, 4)
        w = z
        bad = False
        for _ in range(n):
            den = w + 3
            if den == 0:
                bad = True
                break
            w = (w * w + w - 1) / den
        if bad:
            continue
        Fn, Gn = compose_pair(F, G, n)
        x, y = z.numerator, z.denominator
        assert Fraction(Fn.evaluate(x, y), Gn.evaluate(x, y)) == w


def test_substitute_rejects_degree_mismatch():
    with pytest.raises(ValueError):
        substitute(BinaryForm((1, 0)), BinaryForm((1, 0)), BinaryForm((1, 0, 0)))


# ---------------------------------------------------------------------------
# resultant
# ---------------------------------------------------------------------------


def test_resultant_frozen_values():
    assert resultant(BinaryForm((1, 0, 0)), BinaryForm((0, 0, 1))) == 1
    assert resultant(BinaryForm((1, -3, 2)), BinaryForm((1, 0, 0))) == 4


def test_resultant_matches_fraction_gauss_oracle():
    rng = random.Random(271828)
    for _ in range(150):
        dm = rng.randrange(1, 5)
        dn = rng.randrange(1, 5)
        F = BinaryForm(tuple(rng.randrange(-6, 7) for _ in range(dm + 1)))
        G = BinaryForm(tuple(rng.randrange(-6, 7) for _ in range(dn + 1)))
        if F.is_zero or G.is_zero:
            continue
        assert resultant(F, G) == resultant_oracle(F, G)


def test_resultant_zero_iff_common_factor():
    # both directions against the univariate-gcd oracle, plus constructed
    # shared-factor pairs to make sure the zero branch is exercised
    rng = random.Random(5150)
    zero_seen = nonzero_seen = 0
    for _ in range(150):
        A = BinaryForm(tuple(rng.randrange(-5, 6) for _ in range(rng.randrange(2, 5))))
        B = BinaryForm(tuple(rng.randrange(-5, 6) for _ in range(rng.randrange(2, 5))))
        if A.is_zero or B.is_zero:
            continue
        assert (resultant(A, B) == 0) == forms_have_common_factor(A, B)
        L = BinaryForm((rng.randrange(1, 5), rng.randrange(-4, 5)))
        assert resultant(L * A, L * B) == 0
        assert forms_have_common_factor(L * A, L * B)
        zero_seen += 1
        if resultant(A, B) != 0:
            nonzero_seen += 1
    assert zero_seen > 50 and nonzero_seen > 50


def test_resultant_shared_root_at_infinity():
    # both leading coefficients zero: common root [1:0], resultant 0
    F = BinaryForm((0, 1, 2))
    G = BinaryForm((0, 3, -1))
    assert resultant(F, G) == 0


def test_resultant_multiplicativity():
    rng = random.Random(31)
    for _ in range(60):
        A = BinaryForm(tuple(rng.randrange(-4, 5) for _ in range(3)))
        B = BinaryForm(tuple(rng.randrange(-4, 5) for _ in range(2)))
        C = BinaryForm(tuple(rng.randrange(-4, 5) for _ in range(3)))
        if A.is_zero or B.is_zero or C.is_zero:
            continue
        assert resultant(A * B, C) == resultant(A, C) * resultant(B, C)


# ---------------------------------------------------------------------------
# exact division
# ---------------------------------------------------------------------------


def test_exact_divide_examples():
    X3mY3 = BinaryForm((1, 0, 0, -1))
    XmY = BinaryForm((1, -1))
    assert exact_divide(X3mY3, XmY) == BinaryForm((1, 1, 1))
    f = BinaryForm((3, 1, -2))
    assert exact_divide(f, f) == BinaryForm((1,))
    with pytest.raises(InexactDivisionError):
        exact_divide(BinaryForm((1, 0, 0)), BinaryForm((0, 1)))  # X^2 / Y
    with pytest.raises(InexactDivisionError):
        exact_divide(BinaryForm((1, 0, 1)), BinaryForm((1, -1)))
    with pytest.raises(InexactDivisionError):
        # exact over Q but quotient X/2 not integral
        exact_divide(BinaryForm((1, 1, 0)), BinaryForm((2, 2)))
    with pytest.raises(ZeroDivisionError):
        exact_divide(BinaryForm((1, 0)), BinaryForm((0, 0)))


def test_exact_divide_round_trip():
    rng = random.Random(909)
    for _ in range(200):
        df = rng.randrange(0, 4)
        dg = rng.randrange(0, 4)
        f = BinaryForm(tuple(rng.randrange(-7, 8) for _ in range(df + 1)))
        g = BinaryForm(tuple(rng.randrange(-7, 8) for _ in range(dg + 1)))
        if f.is_zero or g.is_zero:
            continue
        assert exact_divide(f * g, g) == f


def test_exact_divide_monomial_bookkeeping():
    # X^2 Y * (X+Y) divided by XY leaves X(X+Y)
    f = BinaryForm((0, 1, 1, 0))  # X^2 Y + X Y^2
    g = BinaryForm((0, 1, 0))  # XY
    q = exact_divide(f, g)
    assert q == BinaryForm((1, 1))
    with pytest.raises(InexactDivisionError):
        exact_divide(BinaryForm((1, 1)), g)


# ---------------------------------------------------------------------------
# rational roots
# ---------------------------------------------------------------------------


def test_rational_roots_examples():
    # XY(X-Y): the three fixed points of z^2
    f = BinaryForm((0, 1, -1, 0))
    rr = rational_roots(f)
    assert rr.as_dict() == {
        ProjPoint(1, 0): 1,
        ProjPoint(0, 1): 1,
        ProjPoint(1, 1): 1,
    }
    assert rr.complete


def test_rational_roots_multiplicity():
    # (X - 2Y)^3 (3X + Y) (X^2 + Y^2): exact multiplicities, no fake roots
    f = (
        BinaryForm((1, -2)).power(3)
        * BinaryForm((3, 1))
        * BinaryForm((1, 0, 1))
    )
    rr = rational_roots(f)
    assert rr.as_dict() == {ProjPoint(2, 1): 3, ProjPoint(-1, 3): 1}
    assert rr.complete


def test_rational_roots_against_brute_scan():
    rng = random.Random(62)
    checked = 0
    for _ in range(250):
        d = rng.randrange(1, 7)
        f = BinaryForm(tuple(rng.randrange(-30, 31) for _ in range(d + 1)))
        if f.is_zero:
            continue
        rr = rational_roots(f)
        assert rr.complete
        bound = max(abs(c) for c in f.coeffs)
        assert rr.points() == brute_roots(f, bound)
        checked += 1
    assert checked > 200


def test_rational_roots_incomplete_when_budget_starved():
    # leading and trailing coefficients are a hard semiprime; with a starved
    # factoring budget the finder must degrade its completeness claim
    p = 2**127 - 1
    q = 2**89 - 1
    hard = p * q
    f = BinaryForm((hard, 1, 1, hard))
    rr = rational_roots(f, factor_kwargs={"trial_bound": 10**3, "rho_steps": 10, "rho_restarts": 1})
    assert not rr.complete


def test_rational_roots_respects_candidate_cap():
    f = BinaryForm((2 * 3 * 5 * 7 * 11 * 13, 1, 1, 2 * 3 * 5 * 7 * 11 * 13))
    rr = rational_roots(f, candidate_cap=10)
    assert not rr.complete
