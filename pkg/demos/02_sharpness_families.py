"""Two map families showing that portrait sizes must depend on more than s.

Both families below have bad reduction only at 2, so the place count s = 2
never changes as the degree grows. Yet:

  * the three-cycle family f_d(z) = (z-1)(z-2)...(z-2^{d-1}) / z^d keeps a
    single cycle 0 -> inf -> 1 -> 0 while the points 2, 4, ..., 2^{d-1} all
    fall into its tail, so the number of TAIL points grows without bound;

  * the power-swap family g_d(z) = 1/z + prod_{i=-d}^{d}(z - 2^i) / z^{2d+1}
    pairs 2^i with 2^{-i} in two-cycles, so the number of PERIODIC points
    grows without bound.

Together they show any bound on one count in terms of s alone needs a
hypothesis on the other count, and that degree-dependent bounds are the
price of dropping such hypotheses.
"""

from preper import FamilySpec, classify, family_portrait, verify_claims


def main() -> None:
    print("three-cycle family: fixed s, growing tails")
    print(f"{'d':>3} {'degree':>7} {'bad':>6} {'periodic':>9} {'tails':>6}")
    for d in range(2, 9):
        spec = FamilySpec("ex52", d)
        portrait = family_portrait(spec)
        counts = classify(portrait)
        report = verify_claims(spec, portrait)
        assert report.all_hold, report.failures()
        bad = str(portrait.phi.bad_primes)
        print(f"{d:>3} {spec.degree:>7} {bad:>6} {counts.periodic:>9} {counts.tails:>6}")
    print()

    print("power-swap family: fixed s, growing periodic set")
    print(f"{'d':>3} {'degree':>7} {'bad':>6} {'periodic':>9} {'tails':>6}")
    for d in range(1, 4):
        spec = FamilySpec("ex51", d)
        portrait = family_portrait(spec)
        counts = classify(portrait)
        report = verify_claims(spec, portrait)
        assert report.all_hold, report.failures()
        bad = str(portrait.phi.bad_primes)
        print(f"{d:>3} {spec.degree:>7} {bad:>6} {counts.periodic:>9} {counts.tails:>6}")
    print()
    print("periodic count for the power-swap family is 2d+1: the fixed point 1")
    print("plus d two-cycles {2^i, 2^-i}, while s = 2 throughout.")


if __name__ == "__main__":
    main()
