"""Every explicit portrait bound the library evaluates, in one table.

All bounds are functions of s (the number of places of bad reduction,
archimedean included) and sometimes the degree d. They are astronomically
slack by design: the point of evaluating them exactly is soundness checks
against computed portraits, not tightness.
"""

import math
from decimal import Decimal

from preper import FamilySpec, classify, evaluate_bounds, family_portrait
from preper.certify import check_bounds


def render(v) -> str:
    if isinstance(v, Decimal):
        return f"{v:.4E}"
    if v < 10**12:
        return str(v)
    return f"2^{math.log2(v):.1f}"


def main() -> None:
    print("bounds as s grows (degree fixed at 2):")
    fields = [
        ("periodic, given >= 3 tails", "per_bound_tails3"),
        ("tails, given >= 4 periodic", "tail_bound_periodic4"),
        ("periodic, unconditional", "per_bound_degree"),
        ("tails, unconditional", "tail_bound_degree"),
        ("preperiodic, unconditional", "preper_bound_degree"),
        ("tails, via Thue-Mahler", "tail_bound_tm"),
        ("periodic, given >= 1 tail", "per_bound_tm"),
        ("ln of orbit-length bound", "orbit_len_ln_bound"),
        ("refined orbit-length bound", "orbit_len_bound_refined"),
    ]
    reports = {s: evaluate_bounds(s, 2) for s in (1, 2, 3, 4)}
    print(f"{'bound':<28}" + "".join(f"{f's={s}':>12}" for s in (1, 2, 3, 4)))
    for label, name in fields:
        row = "".join(f"{render(getattr(reports[s], name)):>12}" for s in (1, 2, 3, 4))
        print(f"{label:<28}{row}")
    print()

    print("soundness check against a real portrait (three-cycle family, d=2):")
    portrait = family_portrait(FamilySpec("ex52", 2))
    report = evaluate_bounds(portrait.phi.bad_primes.s, portrait.phi.degree)
    for item in check_bounds(classify(portrait), report):
        applic = "applies        " if item.applicable else "hypothesis unmet"
        verdict = "holds" if item.holds else "VIOLATED"
        print(f"  {item.name:<22} {applic}  observed {render(item.observed):>10}"
              f"  bound {render(item.bound):>10}  {verdict}")


if __name__ == "__main__":
    main()
