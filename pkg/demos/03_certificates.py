"""S-unit certificates: machine-checked arithmetic rigidity of portraits.

For a tail point R and a periodic point P of a map with bad reduction set S,
the cross term x_R*y_P - x_P*y_R is an S-unit, with exactly one excluded
periodic point per tail (the point where R's orbit lands when it first
settles into the cycle, pushed forward to R's own residue position).

For a map of everywhere good reduction S = {inf}, so the S-units are just
+1 and -1: every covered cross term must be plus or minus one. That is a
brutally tight constraint, and this script shows it holding on z^2 - 2 and
then on a map with genuine bad reduction.
"""

from preper import FamilySpec, build_map, build_portrait, family_portrait, make_certificates


def show(title, portrait) -> None:
    bundle = make_certificates(portrait)
    print(f"{title}: S = {bundle.primes}")
    for cert in bundle.certificates:
        mark = "excluded" if cert.excluded else ("S-unit ok" if cert.s_unit_ok else "FAIL")
        print(f"  tail {str(cert.tail):>5}  periodic {str(cert.periodic):>5}  "
              f"cross {str(cert.cross):>4}   {mark}")
    print(f"  -> all non-excluded pairs hold: {bundle.all_hold}")
    print()


def main() -> None:
    # z^2 - 2: good reduction everywhere, so covered crosses must be +-1.
    # The tail 0 -> -2 -> 2 sits at depth 2 over the fixed point 2, so the
    # excluded partner of both 0 and -2 is the fixed point 2 itself.
    show("z^2 - 2", build_portrait(build_map([-2, 0, 1], [1]), 6))

    # the three-cycle family member at d = 2 has bad reduction at 2: crosses
    # may now carry powers of 2 (and only powers of 2)
    show("(z-1)(z-2)/z^2", family_portrait(FamilySpec("ex52", 2)))


if __name__ == "__main__":
    main()
