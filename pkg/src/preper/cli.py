"""Command line interface: expression parser, subcommands, JSON and DOT output.

The map grammar is deliberately small. A map is a polynomial in x, or two
polynomials split by a single '/':

    expr     := poly ("/" poly)?
    poly     := ["-"] term (("+" | "-") term)*
    term     := factor (("*" | "/") factor)*
    factor   := base ("^" uint)?
    base     := rational | "x" | "(" poly ")"
    rational := int ("/" uint)?

A slash directly between integer literals is a rational constant (2/3); any
other slash is the numerator/denominator split and may occur only once, at
the top of the expression. That rule makes "1/x + x^2" a syntax error (write
"(x^3+1)/x") while "(x-1)*(x-2)/x^2" parses as intended. A Unicode minus
sign is accepted anywhere an ASCII hyphen is.

Exit codes: 0 success, 2 expression or parameter error, 3 degenerate map,
4 internal invariant failure.
"""

import argparse
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional, Sequence, Union

from .certify import (
    BoundCheckItem,
    BoundReport,
    CertificateBundle,
    check_bounds,
    evaluate_bounds,
    make_certificates,
)
from .dynatomic import PeriodicPoint
from .dynmap import DegenerateMapError, InvariantViolation, RationalMap, apply, build_map
from .families import FamilySpec, family_n_max, generate
from .forms import BinaryForm
from .portrait import (
    CompletenessFlags,
    Portrait,
    PortraitOverflowError,
    TailRecord,
    brute_force_preperiodic,
    build_portrait,
    classify,
)
from .qarith import PrimeSet, ProjPoint

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_INVARIANT = 4

MAX_EXPONENT = 4096


class MapSyntaxError(ValueError):
    """Expression rejected, with the character position that caused it."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


# ---------------------------------------------------------------------------
# lexer and parser
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # 'num', 'x', one of '+-*/^()', or 'end'
    text: str
    pos: int


def _tokenize(text: str) -> list[_Token]:
    src = text.replace("−", "-")
    toks = []
    i = 0
    while i < len(src):
        c = src[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            toks.append(_Token("num", src[i:j], i))
            i = j
        elif c == "x":
            toks.append(_Token("x", c, i))
            i += 1
        elif c in "+-*/^()":
            toks.append(_Token(c, c, i))
            i += 1
        else:
            raise MapSyntaxError(f"unexpected character {c!r}", i)
    toks.append(_Token("end", "", len(src)))
    return toks


# AST nodes are tuples: ('num', Fraction), ('x',), ('neg', a),
# ('+'|'-'|'*', a, b), ('/', a, b, pos), ('^', a, k)


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    def peek(self) -> _Token:
        return self.tokens[self.i]

    def take(self) -> _Token:
        t = self.tokens[self.i]
        self.i += 1
        return t

    def expect(self, kind: str) -> _Token:
        t = self.take()
        if t.kind != kind:
            raise MapSyntaxError(f"expected {kind!r}, found {t.text or 'end'!r}", t.pos)
        return t

    def parse(self):
        node = self.poly()
        t = self.peek()
        if t.kind != "end":
            raise MapSyntaxError(f"unexpected {t.text!r}", t.pos)
        return node

    def poly(self):
        if self.peek().kind == "-":
            self.take()
            node = ("neg", self.term())
        else:
            node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take()
            node = (op.kind, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.take()
            rhs = self.factor()
            if op.kind == "/":
                node = ("/", node, rhs, op.pos)
            else:
                node = ("*", node, rhs)
        return node

    def factor(self):
        node = self.base()
        if self.peek().kind == "^":
            self.take()
            t = self.expect("num")
            k = int(t.text)
            if k > MAX_EXPONENT:
                raise MapSyntaxError(f"exponent {k} exceeds {MAX_EXPONENT}", t.pos)
            node = ("^", node, k)
        return node

    def base(self):
        t = self.take()
        if t.kind == "num":
            value = Fraction(int(t.text))
            # an integer directly followed by /uint is a rational literal
            if self.peek().kind == "/" and self.tokens[self.i + 1].kind == "num":
                slash = self.take()
                den = int(self.take().text)
                if den == 0:
                    raise MapSyntaxError("zero denominator in rational literal", slash.pos)
                value /= den
            return ("num", value)
        if t.kind == "x":
            return ("x",)
        if t.kind == "(":
            node = self.poly()
            self.expect(")")
            return node
        raise MapSyntaxError(f"expected a polynomial, found {t.text or 'end'!r}", t.pos)


def _contains_div(node) -> Optional[int]:
    if node[0] == "/":
        return node[3]
    for child in node[1:]:
        if isinstance(child, tuple):
            pos = _contains_div(child)
            if pos is not None:
                return pos
    return None


# polynomial arithmetic on ascending Fraction tuples


def _ptrim(c: list[Fraction]) -> tuple[Fraction, ...]:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(a, b):
    n = max(len(a), len(b))
    return _ptrim([(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)])


def _pneg(a):
    return tuple(-c for c in a)


def _pmul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return _ptrim(out)


def _eval_poly_node(node) -> tuple[Fraction, ...]:
    kind = node[0]
    if kind == "num":
        return (node[1],)
    if kind == "x":
        return (Fraction(0), Fraction(1))
    if kind == "neg":
        return _pneg(_eval_poly_node(node[1]))
    if kind == "+":
        return _padd(_eval_poly_node(node[1]), _eval_poly_node(node[2]))
    if kind == "-":
        return _padd(_eval_poly_node(node[1]), _pneg(_eval_poly_node(node[2])))
    if kind == "*":
        return _pmul(_eval_poly_node(node[1]), _eval_poly_node(node[2]))
    if kind == "^":
        base = _eval_poly_node(node[1])
        out = (Fraction(1),)
        for _ in range(node[2]):
            out = _pmul(out, base)
        return out
    raise AssertionError(f"unhandled node {kind}")


@dataclass(frozen=True)
class MapExpr:
    """A parsed map: numerator and denominator as ascending coefficients."""

    source: str
    num: tuple[Fraction, ...]
    den: tuple[Fraction, ...]


def parse_map(text: str) -> MapExpr:
    """Parse an expression into exact numerator/denominator polynomials."""
    ast = _Parser(_tokenize(text)).parse()
    if ast[0] == "/":
        num_ast, den_ast = ast[1], ast[2]
    else:
        num_ast, den_ast = ast, ("num", Fraction(1))
    for side in (num_ast, den_ast):
        pos = _contains_div(side)
        if pos is not None:
            raise MapSyntaxError(
                "'/' may only split the whole expression once; "
                "write a single fraction like (x^3+1)/x",
                pos,
            )
    return MapExpr(source=text, num=_eval_poly_node(num_ast), den=_eval_poly_node(den_ast))


def _poly_to_text(coeffs: Sequence[Fraction]) -> str:
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if c == 0:
            continue
        mag = -c if c < 0 else c
        if e == 0:
            body = str(mag)
        else:
            xpow = "x" if e == 1 else f"x^{e}"
            body = xpow if mag == 1 else f"{mag}*{xpow}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f" + {body}" if c > 0 else f" - {body}")
    return "".join(parts) if parts else "0"


def expr_to_text(expr: MapExpr) -> str:
    """Render a MapExpr so that parsing the text reproduces it exactly."""
    num = _poly_to_text(expr.num)
    if expr.den == (Fraction(1),):
        return num
    return f"({num})/({_poly_to_text(expr.den)})"


def map_from_expr(expr: MapExpr) -> RationalMap:
    return build_map(list(expr.num), list(expr.den))


# ---------------------------------------------------------------------------
# JSON serialization
# ---------------------------------------------------------------------------


def _point_json(P: ProjPoint) -> dict:
    return {"x": str(P.x), "y": str(P.y)}


def _point_from_json(d: dict) -> ProjPoint:
    return ProjPoint(int(d["x"]), int(d["y"]))


def portrait_to_json_dict(portrait: Portrait) -> dict:
    phi = portrait.phi
    counts = classify(portrait)
    return {
        "map": {
            "num": [str(c) for c in phi.F.coeffs],
            "den": [str(c) for c in phi.G.coeffs],
            "degree": phi.degree,
            "resultant": str(phi.res),
            "res_cofactor": None if phi.res_cofactor is None else str(phi.res_cofactor),
            "bad_primes": [str(p) for p in phi.bad_primes],
        },
        "periodic": [
            {
                "point": _point_json(pp.point),
                "period": pp.primitive_period,
                "multiplier": str(pp.multiplier),
                "formal_periods": list(pp.formal_periods),
            }
            for pp in portrait.periodic
        ],
        "cycles": [[_point_json(P) for P in cyc] for cyc in portrait.cycles()],
        "tails": [
            {"point": _point_json(t.point), "depth": t.depth, "image": _point_json(t.image)}
            for t in portrait.tails
        ],
        "counts": {
            "periodic": counts.periodic,
            "tails": counts.tails,
            "preperiodic": counts.preperiodic,
            "cycle_lengths": list(counts.cycle_lengths),
            "max_tail_depth": counts.max_tail_depth,
            "longest_orbit": counts.longest_orbit,
        },
        "completeness": {
            "n_max": portrait.flags.n_max,
            "roots_complete": portrait.flags.roots_complete,
            "preimages_complete": portrait.flags.preimages_complete,
            "bad_primes_complete": portrait.flags.bad_primes_complete,
        },
    }


def portrait_from_json(data: dict) -> Portrait:
    """Rebuild a Portrait from its JSON form, exactly."""
    m = data["map"]
    phi = RationalMap(
        F=BinaryForm(tuple(int(c) for c in m["num"])),
        G=BinaryForm(tuple(int(c) for c in m["den"])),
        res=int(m["resultant"]),
        bad_primes=PrimeSet(tuple(int(p) for p in m["bad_primes"])),
        res_cofactor=None if m["res_cofactor"] is None else int(m["res_cofactor"]),
    )
    periodic = tuple(
        PeriodicPoint(
            point=_point_from_json(e["point"]),
            primitive_period=e["period"],
            multiplier=Fraction(e["multiplier"]),
            formal_periods=tuple(e["formal_periods"]),
        )
        for e in data["periodic"]
    )
    tails = []
    for e in data["tails"]:
        point = _point_from_json(e["point"])
        entry = point
        for _ in range(e["depth"]):
            entry = apply(phi, entry)
        tails.append(
            TailRecord(
                point=point, depth=e["depth"], image=_point_from_json(e["image"]), entry=entry
            )
        )
    flags = CompletenessFlags(**data["completeness"])
    return Portrait(phi=phi, periodic=periodic, tails=tuple(tails), flags=flags)


def portrait_json(portrait: Portrait) -> str:
    return json.dumps(portrait_to_json_dict(portrait), sort_keys=True, indent=2)


# ---------------------------------------------------------------------------
# DOT and text rendering
# ---------------------------------------------------------------------------


def portrait_to_dot(portrait: Portrait) -> str:
    """GraphViz digraph: every point a node, solid edges P -> phi(P)."""
    periodic = {pp.point for pp in portrait.periodic}
    points = portrait.points()
    lines = ["digraph portrait {", "  rankdir=LR;", "  node [shape=circle];"]
    for P in points:
        shape = ' [shape=doublecircle]' if P in periodic else ""
        lines.append(f'  "{P}"{shape};')
    edges = {t.point: t.image for t in portrait.tails}
    for P in sorted(periodic, key=ProjPoint.sort_key):
        edges[P] = apply(portrait.phi, P)
    for P in points:
        lines.append(f'  "{P}" -> "{edges[P]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _render_big(v: Union[int, Decimal]) -> str:
    if isinstance(v, Decimal):
        return f"{v:.6E}"
    if -(10**15) < v < 10**15:
        return str(v)
    return f"~2^{math.log2(v):.1f}"


def portrait_to_text(portrait: Portrait) -> str:
    phi = portrait.phi
    counts = classify(portrait)
    period_of = {pp.point: pp for pp in portrait.periodic}
    out = [
        f"map: {phi}",
        f"degree: {phi.degree}   bad primes: {phi.bad_primes}   resultant: {phi.res}",
        f"counts: periodic={counts.periodic} tails={counts.tails} "
        f"preperiodic={counts.preperiodic} longest_orbit={counts.longest_orbit}",
    ]
    for cyc in portrait.cycles():
        route = " -> ".join(str(P) for P in cyc)
        out.append(f"cycle (length {len(cyc)}): {route}")
        for P in cyc:
            pp = period_of[P]
            out.append(
                f"  {P}: multiplier {pp.multiplier}, formal periods "
                + ", ".join(str(n) for n in pp.formal_periods)
            )
    if portrait.tails:
        out.append("tails:")
        for t in portrait.tails:
            out.append(f"  {t.point} -> {t.image} (depth {t.depth}, enters at {t.entry})")
    f = portrait.flags
    out.append(
        f"completeness: n_max={f.n_max} roots={f.roots_complete} "
        f"preimages={f.preimages_complete} bad_primes={f.bad_primes_complete} "
        f"closed={f.closed}"
    )
    return "\n".join(out) + "\n"


_BOUND_FIELDS = (
    "per_bound_tails3",
    "tail_bound_periodic4",
    "per_bound_degree",
    "tail_bound_degree",
    "preper_bound_degree",
    "tail_bound_tm",
    "per_bound_tm",
    "orbit_len_ln_bound",
    "orbit_len_bound_refined",
)


def bounds_to_json_dict(report: BoundReport, items: Optional[tuple[BoundCheckItem, ...]]) -> dict:
    data = {
        "s": report.s,
        "degree": report.degree,
        "bounds": {name: str(getattr(report, name)) for name in _BOUND_FIELDS},
    }
    if items is not None:
        data["checks"] = [
            {
                "name": it.name,
                "applicable": it.applicable,
                "observed": str(it.observed),
                "bound": str(it.bound),
                "holds": it.holds,
            }
            for it in items
        ]
    return data


def bounds_to_text(report: BoundReport, items: Optional[tuple[BoundCheckItem, ...]]) -> str:
    out = [f"s = {report.s}, degree = {report.degree}"]
    for name in _BOUND_FIELDS:
        out.append(f"  {name:24s} {_render_big(getattr(report, name))}")
    if items is not None:
        out.append("checks against the portrait:")
        for it in items:
            status = "pass" if it.holds else "FAIL"
            applic = "applies" if it.applicable else "hypothesis unmet"
            out.append(
                f"  {it.name:22s} {applic:16s} observed {_render_big(it.observed):>12s}"
                f"  bound {_render_big(it.bound):>12s}  {status}"
            )
    return "\n".join(out) + "\n"


def certificates_to_json_dict(bundle: CertificateBundle) -> dict:
    return {
        "primes": [str(p) for p in bundle.primes],
        "primes_complete": bundle.primes_complete,
        "all_hold": bundle.all_hold,
        "certificates": [
            {
                "tail": _point_json(c.tail),
                "periodic": _point_json(c.periodic),
                "cycle_length": c.cycle_length,
                "excluded_point": _point_json(c.excluded_point),
                "cross": str(c.cross),
                "s_unit_ok": c.s_unit_ok,
                "excluded": c.excluded,
            }
            for c in bundle.certificates
        ],
    }


def certificates_to_text(bundle: CertificateBundle) -> str:
    out = [f"S = {bundle.primes} (complete: {bundle.primes_complete})"]
    for c in bundle.certificates:
        mark = "excluded" if c.excluded else ("ok" if c.s_unit_ok else "FAIL")
        out.append(
            f"  tail {str(c.tail):>8s}  periodic {str(c.periodic):>8s}  "
            f"cross {c.cross}  {mark}"
        )
    verdict = "hold" if bundle.all_hold else "FAIL"
    out.append(f"certificates {verdict}: {len(bundle.certificates)} pairs checked")
    return "\n".join(out) + "\n"


def oracle_to_json_dict(portrait: Portrait, height: int) -> dict:
    brute = brute_force_preperiodic(portrait.phi, height)
    mine = {P for P in portrait.points() if P.height() <= height}
    return {
        "height": height,
        "agree": brute == mine,
        "portrait_only": [_point_json(P) for P in sorted(mine - brute, key=ProjPoint.sort_key)],
        "brute_only": [_point_json(P) for P in sorted(brute - mine, key=ProjPoint.sort_key)],
    }


def oracle_to_text(portrait: Portrait, height: int) -> str:
    data = oracle_to_json_dict(portrait, height)
    if data["agree"]:
        return f"oracle at height {height}: diff empty\n"
    lines = [f"oracle at height {height}: DISAGREEMENT"]
    if data["portrait_only"]:
        pts = ", ".join(f'{d["x"]}/{d["y"]}' for d in data["portrait_only"])
        lines.append(f"  portrait only: {pts}")
    if data["brute_only"]:
        pts = ", ".join(f'{d["x"]}/{d["y"]}' for d in data["brute_only"])
        lines.append(f"  brute force only: {pts}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _selected_maps(args) -> list[tuple[str, RationalMap, Optional[int]]]:
    """Resolve --map / --family [--d | --d-range] to labeled maps.

    Returns (label, map, default n_max) triples in deterministic order.
    """
    if args.map is not None:
        expr = parse_map(args.map)
        return [(args.map, map_from_expr(expr), None)]
    if args.family is None:
        raise MapSyntaxError("one of --map or --family is required", 0)
    d_values = []
    if getattr(args, "d_range", None):
        lo, _, hi = args.d_range.partition(":")
        try:
            d_values = list(range(int(lo), int(hi) + 1))
        except ValueError:
            raise MapSyntaxError(f"--d-range wants A:B, got {args.d_range!r}", 0) from None
        if not d_values:
            raise MapSyntaxError(f"empty --d-range {args.d_range!r}", 0)
    elif args.d is not None:
        d_values = [args.d]
    else:
        raise MapSyntaxError("--family needs --d or --d-range", 0)
    out = []
    for d in d_values:
        spec = FamilySpec(args.family, d)
        out.append((f"{args.family} d={d}", generate(spec), family_n_max(spec)))
    return out


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _portrait_for(phi: RationalMap, args, default_n_max: Optional[int]) -> Portrait:
    n_max = args.max_period if args.max_period is not None else default_n_max
    return build_portrait(phi, n_max)


def cmd_analyze(args) -> int:
    selections = _selected_maps(args)

    def work(sel):
        label, phi, default_n = sel
        portrait = _portrait_for(phi, args, default_n)
        if args.format == "json":
            data = portrait_to_json_dict(portrait)
            if args.height_oracle:
                data["oracle"] = oracle_to_json_dict(portrait, args.height_oracle)
            return data
        if args.format == "dot":
            return portrait_to_dot(portrait)
        text = f"== {label} ==\n" + portrait_to_text(portrait)
        if args.height_oracle:
            text += oracle_to_text(portrait, args.height_oracle)
        return text

    if len(selections) == 1:
        rendered = [work(selections[0])]
    else:
        # sweeps fan out across threads; pool.map keeps results in d order
        with ThreadPoolExecutor(max_workers=min(8, len(selections))) as pool:
            rendered = list(pool.map(work, selections))
    if args.format == "json":
        payload = rendered[0] if len(rendered) == 1 else rendered
        _emit(json.dumps(payload, sort_keys=True, indent=2) + "\n", args.out)
    else:
        _emit("".join(rendered), args.out)
    return EXIT_OK


def cmd_bounds(args) -> int:
    if args.s is not None or args.map is None and args.family is None:
        if args.s is None or args.d is None:
            raise MapSyntaxError("formula-only mode needs both --s and --d", 0)
        report = evaluate_bounds(args.s, args.d)
        text = (
            json.dumps(bounds_to_json_dict(report, None), sort_keys=True, indent=2) + "\n"
            if args.format == "json"
            else bounds_to_text(report, None)
        )
        _emit(text, args.out)
        return EXIT_OK
    pieces = []
    for label, phi, default_n in _selected_maps(args):
        portrait = _portrait_for(phi, args, default_n)
        report = evaluate_bounds(phi.bad_primes.s, phi.degree)
        items = check_bounds(classify(portrait), report)
        if args.format == "json":
            pieces.append(json.dumps(bounds_to_json_dict(report, items), sort_keys=True, indent=2) + "\n")
        else:
            pieces.append(f"== {label} ==\n" + bounds_to_text(report, items))
    _emit("".join(pieces), args.out)
    return EXIT_OK


def cmd_certify(args) -> int:
    pieces = []
    for label, phi, default_n in _selected_maps(args):
        bundle = make_certificates(_portrait_for(phi, args, default_n))
        if args.format == "json":
            pieces.append(json.dumps(certificates_to_json_dict(bundle), sort_keys=True, indent=2) + "\n")
        else:
            pieces.append(f"== {label} ==\n" + certificates_to_text(bundle))
    _emit("".join(pieces), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    pieces = []
    for label, phi, default_n in _selected_maps(args):
        portrait = _portrait_for(phi, args, default_n)
        if args.format == "json":
            pieces.append(
                json.dumps(oracle_to_json_dict(portrait, args.height_oracle), sort_keys=True, indent=2)
                + "\n"
            )
        else:
            pieces.append(f"== {label} ==\n" + oracle_to_text(portrait, args.height_oracle))
    _emit("".join(pieces), args.out)
    return EXIT_OK


def _add_map_flags(p: argparse.ArgumentParser, d_range: bool = False) -> None:
    p.add_argument("--map", help="rational map expression in x")
    p.add_argument("--family", choices=["ex51", "ex52"], help="built-in family")
    p.add_argument("--d", type=int, help="family parameter")
    if d_range:
        p.add_argument("--d-range", dest="d_range", help="family parameter sweep A:B")
    p.add_argument("--max-period", dest="max_period", type=int, help="cycle-length horizon")
    p.add_argument("--out", help="write output to this file instead of stdout")


def make_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="preper",
        description="exact rational preperiodic portraits, certificates, and bounds",
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="compute a full preperiodic portrait")
    _add_map_flags(p, d_range=True)
    p.add_argument("--format", choices=["text", "json", "dot"], default="text")
    p.add_argument(
        "--height-oracle",
        dest="height_oracle",
        type=int,
        default=0,
        help="also brute-force points up to this height and diff",
    )
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="evaluate and check the cardinality bounds")
    _add_map_flags(p)
    p.add_argument("--s", type=int, help="formula-only: number of places including infinity")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("certify", help="emit S-unit certificates for a portrait")
    _add_map_flags(p)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("oracle", help="diff the portrait against brute-force search")
    _add_map_flags(p)
    p.add_argument("--height-oracle", dest="height_oracle", type=int, default=25)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_oracle)
    return top


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = make_parser().parse_args(argv)
    try:
        return args.func(args)
    except DegenerateMapError as e:
        print(f"degenerate map: {e}", file=sys.stderr)
        return EXIT_DEGENERATE
    except ValueError as e:
        # covers MapSyntaxError plus out-of-range family or flag parameters
        print(f"error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except (InvariantViolation, PortraitOverflowError) as e:
        print(f"invariant failure: {e}", file=sys.stderr)
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
