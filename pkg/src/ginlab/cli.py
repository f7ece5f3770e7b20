"""Command-line front end.

Example::

    ginlab --ring x,y,z --order rlex --ideal "x^3, x^2*y + x*y^2, x^2*z" gin
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from . import constructions, groebner, monideal, orders, polynomial, transform
from .errors import GinlabError, ParseError, StabilizationFailure
from .gin import GinConfig, gin, random_transform, segment_shortcut
from .groebner import Ideal
from .monideal import MonomialIdeal
from .monomial import Monomial, monomial_arith
from .orders import RLEX, OrderSpec
from .parsing import parse_ideal, parse_monomials, parse_order, parse_polynomials
from .polynomial import Polynomial, format_rational
from .ring import Ring
from .transform import TransformMatrix

# what each command needs from the command line
IDEAL, MONOS, POLY, POLY2, MATRIX = "ideal", "monomials", "poly", "poly2", "matrix"


@dataclass
class Command:
    name: str
    handler: Callable
    ops: tuple  # module operations reached through this command
    needs: tuple = ()
    help: str = ""


@dataclass
class Request:
    command: str
    ring: Optional[Ring] = None
    order: OrderSpec = RLEX
    order2: Optional[OrderSpec] = None
    ideal: Optional[Ideal] = None
    monomials: Optional[list] = None
    polys: Optional[list] = None
    matrix: Optional[TransformMatrix] = None
    degree: Optional[int] = None
    k: Optional[int] = None
    d: Optional[int] = None
    dmax: int = constructions.DEFAULT_DMAX
    config: GinConfig = field(default_factory=GinConfig)
    json: bool = False
    timing: bool = False
    argv: tuple = ()


@dataclass
class Report:
    command: str
    request: dict
    result: object      # JSON-ready payload
    text: str           # human-readable rendering
    trials: Optional[dict] = None
    elapsed: Optional[float] = None

    def to_json(self) -> str:
        doc = {"command": self.command, "request": self.request, "result": self.result}
        if self.trials is not None:
            doc["trials"] = self.trials
        if self.elapsed is not None:
            doc["elapsed_seconds"] = self.elapsed
        return json.dumps(doc, sort_keys=True)

    def to_text(self) -> str:
        out = self.text
        if self.trials is not None:
            t = self.trials
            out += (f"\n# trials_used={t['trials_used']} borel_verified={str(t['borel_verified']).lower()}"
                    f" seed={t['seed']}")
        if self.elapsed is not None:
            out += f"\n# elapsed {self.elapsed:.3f}s"
        return out


# -- serialisation ---------------------------------------------------------------


def rational_json(c) -> str:
    return f"{c.numerator}/{c.denominator}"


def poly_json(f: Polynomial, order: OrderSpec) -> list:
    terms = sorted(f.coeffs.items(), key=lambda t: order.key(t[0]), reverse=True)
    return [{"coeff": rational_json(c), "exponents": list(e)} for e, c in terms]


def monideal_json(J: MonomialIdeal) -> list:
    return [list(g.exponents) for g in J.gens]


def monomial_json(m: Monomial) -> list:
    return list(m.exponents)


# -- handlers --------------------------------------------------------------------


def _fmt_mono(req, m):
    return m.format(req.ring.var_names)


def cmd_gb(req):
    gb = groebner.reduce_gb(groebner.buchberger(req.ideal, req.order, req.config.chain))
    payload = {"basis": [poly_json(f, req.order) for f in gb.elements],
               "leading_monomials": [monomial_json(m) for m in gb.leading_monomials()]}
    return payload, "\n".join(f.format(req.order) for f in gb.elements)


def cmd_in(req):
    J = groebner.initial_ideal(req.ideal, req.order, req.config.chain)
    return {"ideal": monideal_json(J)}, J.format()


def _trials(res, cfg):
    return {"trials_used": res.trials_used, "borel_verified": res.borel_verified,
            "seed": res.seed, "entry_bound": cfg.entry_bound, "agreement": cfg.agreement,
            "max_trials": cfg.max_trials}


def cmd_gin(req):
    res = gin(req.ideal, req.order, req.config)
    return {"ideal": monideal_json(res.ideal)}, res.ideal.format(), _trials(res, req.config)


def cmd_reg(req):
    res = gin(req.ideal, RLEX, req.config)
    r = monideal.regularity_borel(res.ideal)
    return {"regularity": r, "gin_rlex": monideal_json(res.ideal)}, str(r), _trials(res, req.config)


def cmd_shortcut(req):
    J = segment_shortcut(req.ideal, req.order)
    if J is None:
        return {"gin": None}, "none"
    return {"gin": monideal_json(J)}, J.format()


def cmd_random_transform(req):
    rng = random.Random(req.config.seed)
    g = random_transform(req.ring, rng, req.config.entry_bound)
    rows = [[int(v) for v in row] for row in g.entries]
    return {"matrix": rows, "det": rational_json(g.det)}, "\n".join(" ".join(map(str, r)) for r in rows)


def _monideal(req):
    return MonomialIdeal(req.ring, req.monomials)


def cmd_mingens(req):
    J = monideal.minimal_generators(req.monomials, req.ring)
    return {"ideal": monideal_json(J)}, J.format()


def _bool(v):
    return {"value": v}, str(v).lower()


def cmd_borel(req):
    return _bool(monideal.is_borel_fixed(_monideal(req)))


def cmd_borel_leq(req):
    if len(req.monomials) != 2:
        raise ParseError("borel-leq needs exactly two monomials")
    return _bool(monideal.borel_leq(*req.monomials))


def cmd_segment(req):
    return _bool(monideal.is_segment(req.monomials, req.order))


def cmd_segment_ideal(req):
    return _bool(monideal.is_segment_ideal(_monideal(req), req.order))


def cmd_hilbert(req):
    v = monideal.hilbert_count(_monideal(req), req.degree)
    return {"value": v}, str(v)


def cmd_dim(req):
    v = groebner.dim_in_degree(req.ideal, req.degree)
    return {"value": v}, str(v)


def cmd_reg_borel(req):
    v = monideal.regularity_borel(_monideal(req))
    return {"regularity": v}, str(v)


def cmd_betti(req):
    J = _monideal(req)
    table = monideal.betti_table(J)
    reg = table.max_shift() + 1
    payload = {"betti": [list(t) for t in table.triples()], "truncation": table.truncation,
               "regularity": reg}
    return payload, table.format() + f"\nregularity {reg}"


def cmd_membership(req):
    gb = groebner.reduced_groebner(req.ideal, req.order, req.config.chain)
    return _bool(groebner.membership(req.polys[0], gb))


def cmd_reduce(req):
    r = groebner.reduce(req.polys[0], req.ideal.generators, req.order)
    return {"remainder": poly_json(r, req.order)}, r.format(req.order)


def cmd_spoly(req):
    f, g = req.polys
    s = groebner.s_poly(f, g, req.order)
    return {"s_poly": poly_json(s, req.order)}, s.format(req.order)


def cmd_cmp(req):
    a, b = req.monomials if len(req.monomials) == 2 else (None, None)
    if a is None:
        raise ParseError("cmp needs exactly two monomials")
    c = orders.cmp_monomials(req.order, a, b)
    return {"value": c.name.lower()}, c.name.lower()


def cmd_monomial(req):
    if len(req.monomials) != 2:
        raise ParseError("monomial needs exactly two monomials")
    r = monomial_arith(*req.monomials)
    payload = {"product": monomial_json(r.product), "lcm": monomial_json(r.lcm),
               "divides": r.divides,
               "quotient": None if r.quotient is None else monomial_json(r.quotient)}
    q = "none" if r.quotient is None else _fmt_mono(req, r.quotient)
    text = (f"product {_fmt_mono(req, r.product)}\nlcm {_fmt_mono(req, r.lcm)}\n"
            f"divides {str(r.divides).lower()}\nquotient {q}")
    return payload, text


def cmd_arith(req):
    f, g = req.polys
    r = polynomial.poly_arith(f, g)
    payload = {"sum": poly_json(r.sum, req.order), "product": poly_json(r.product, req.order)}
    return payload, f"sum {r.sum.format(req.order)}\nproduct {r.product.format(req.order)}"


def cmd_lt(req):
    t = polynomial.leading_term(req.order, req.polys[0])
    payload = {"coeff": rational_json(t.coeff), "exponents": monomial_json(t.monomial)}
    mono = _fmt_mono(req, t.monomial)
    return payload, mono if t.coeff == 1 else f"{format_rational(t.coeff)}*{mono}"


def cmd_sort(req):
    ms = orders.sorted_monomials(req.order, req.degree, req.ring.n)
    return {"monomials": [monomial_json(m) for m in ms]}, ", ".join(_fmt_mono(req, m) for m in ms)


def cmd_transform(req):
    outs = [transform.apply_transform(req.matrix, f) for f in req.polys]
    return {"images": [poly_json(f, req.order) for f in outs]}, "\n".join(f.format(req.order) for f in outs)


def cmd_distinguish(req):
    o2 = req.order2
    if o2 is None:
        raise ParseError("distinguish needs --order2")
    dis = constructions.first_disagreement(req.order, o2, req.dmax, req.ring)
    I = constructions.distinguishing_ideal(req.order, o2, req.dmax, req.ring)
    payload = {"disagreement": {"d": dis.d, "k": dis.k, "m1": monomial_json(dis.m1),
                                "m2": monomial_json(dis.m2)},
               "ideal": [poly_json(f, req.order) for f in I.generators]}
    text = (f"d={dis.d} k={dis.k} m1={_fmt_mono(req, dis.m1)} m2={_fmt_mono(req, dis.m2)}\n"
            f"{I}")
    return payload, text


def cmd_gap_witness(req):
    w = constructions.rlex_gap_witness(req.order, req.dmax, req.ring)
    if w is None:
        return {"witness": None}, "none"
    return {"witness": {"k": w.k, "d": w.d}}, f"k={w.k} d={w.d}"


def cmd_is_rlex(req):
    return _bool(constructions.is_rlex_up_to(req.order, req.dmax, req.ring))


def cmd_gap_ideal(req):
    I = constructions.regularity_gap_ideal(req.k, req.d, req.ring)
    return {"ideal": [poly_json(f, req.order) for f in I.generators]}, str(I)


COMMANDS = {c.name: c for c in [
    Command("gb", cmd_gb, ("buchberger", "reduce_gb"), (IDEAL,), "reduced Groebner basis"),
    Command("in", cmd_in, ("initial_ideal",), (IDEAL,), "initial ideal"),
    Command("gin", cmd_gin, ("gin",), (IDEAL,), "generic initial ideal"),
    Command("reg", cmd_reg, ("regularity",), (IDEAL,), "regularity via gin_rlex"),
    Command("shortcut", cmd_shortcut, ("segment_shortcut",), (IDEAL,),
            "initial ideal if it is a segment ideal (then it is the gin)"),
    Command("random-transform", cmd_random_transform, ("random_transform",), (),
            "the seeded random coordinate change"),
    Command("mingens", cmd_mingens, ("minimal_generators",), (MONOS,), "minimal generators"),
    Command("borel", cmd_borel, ("is_borel_fixed",), (MONOS,), "Borel-fixedness"),
    Command("borel-leq", cmd_borel_leq, ("borel_leq",), (MONOS,), "Borel order on two monomials"),
    Command("segment", cmd_segment, ("is_segment",), (MONOS,), "is the monomial set a segment"),
    Command("segment-ideal", cmd_segment_ideal, ("is_segment_ideal",), (MONOS,),
            "is the monomial ideal a segment ideal"),
    Command("hilbert", cmd_hilbert, ("hilbert_count",), (MONOS,), "monomials of J in --degree"),
    Command("dim", cmd_dim, ("dim_in_degree",), (IDEAL,), "dim I_d for --degree"),
    Command("reg-borel", cmd_reg_borel, ("regularity_borel",), (MONOS,),
            "regularity of a Borel-fixed ideal"),
    Command("betti", cmd_betti, ("betti_table", "regularity_monomial"), (MONOS,),
            "Betti table and regularity of a monomial ideal"),
    Command("membership", cmd_membership, ("membership",), (IDEAL, POLY), "is --poly in the ideal"),
    Command("reduce", cmd_reduce, ("reduce",), (IDEAL, POLY), "remainder of --poly"),
    Command("spoly", cmd_spoly, ("s_poly",), (POLY2,), "S-polynomial of two --poly entries"),
    Command("cmp", cmd_cmp, ("cmp_monomials",), (MONOS,), "compare two monomials"),
    Command("monomial", cmd_monomial, ("monomial_arith",), (MONOS,), "monomial arithmetic"),
    Command("arith", cmd_arith, ("poly_arith",), (POLY2,), "sum and product of two --poly entries"),
    Command("lt", cmd_lt, ("leading_term",), (POLY,), "leading term"),
    Command("sort", cmd_sort, ("sorted_monomials",), (), "degree --degree monomials, descending"),
    Command("transform", cmd_transform, ("apply_transform",), (POLY, MATRIX),
            "apply --matrix to --poly"),
    Command("distinguish", cmd_distinguish, ("first_disagreement", "distinguishing_ideal"), (),
            "ideal separating --order and --order2"),
    Command("gap-witness", cmd_gap_witness, ("rlex_gap_witness",), (), "first rlex gap witness"),
    Command("is-rlex", cmd_is_rlex, ("is_rlex_up_to",), (), "no gap witness up to --dmax"),
    Command("gap-ideal", cmd_gap_ideal, ("regularity_gap_ideal",), (), "regularity-gap ideal for --k --d"),
]}

_DEGREE_CMDS = {"hilbert", "dim", "sort"}


# -- request parsing -------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ginlab", description="Groebner bases, generic initial ideals and regularity over QQ.")
    p.add_argument("command", choices=sorted(COMMANDS), metavar="command",
                   help="one of: " + ", ".join(sorted(COMMANDS)))
    p.add_argument("--ring", help='variables, "x,y,z" or "n=6"')
    p.add_argument("--order", default="rlex", help='lex | rlex | "weight:w1,...,wn;tie=lex|rlex"')
    p.add_argument("--order2", help="second order (distinguish)")
    p.add_argument("--ideal", help="comma-separated generators")
    p.add_argument("--poly", help="polynomial(s), comma-separated")
    p.add_argument("--matrix", help='rows separated by ";", entries by ","')
    p.add_argument("--degree", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--d", type=int)
    p.add_argument("--dmax", type=int, default=constructions.DEFAULT_DMAX)
    p.add_argument("--seed", type=int, help="RNG seed (fallback: $GINLAB_SEED, then 0)")
    p.add_argument("--entry-bound", type=int, default=GinConfig.entry_bound)
    p.add_argument("--agreement", type=int, default=GinConfig.agreement)
    p.add_argument("--max-trials", type=int, default=GinConfig.max_trials)
    p.add_argument("--no-chain", action="store_true", help="disable the chain criterion")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--timing", action="store_true", help="include elapsed time (breaks byte-stability)")
    return p


def _parse_matrix(text: str) -> TransformMatrix:
    from fractions import Fraction

    try:
        rows = [[Fraction(v.strip()) for v in row.split(",")] for row in text.split(";")]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad matrix {text!r}: {exc}", text) from None
    return TransformMatrix(tuple(tuple(r) for r in rows))


def _seed(args) -> int:
    if args.seed is not None:
        return args.seed
    env = os.environ.get("GINLAB_SEED")
    if env is None:
        return 0
    try:
        return int(env)
    except ValueError:
        raise ParseError(f"GINLAB_SEED must be an integer, got {env!r}") from None


def parse_request(argv) -> Request:
    args = build_parser().parse_args(list(argv))
    cmd = COMMANDS[args.command]
    order = parse_order(args.order)
    order2 = parse_order(args.order2) if args.order2 else None
    if args.ring:
        ring = Ring.from_spec(args.ring)
    elif order.nvars or (order2 and order2.nvars):
        ring = Ring.of(order.nvars or order2.nvars)
    else:
        raise ParseError("--ring is required")
    try:
        config = GinConfig(args.entry_bound, args.agreement, args.max_trials, _seed(args),
                           chain=not args.no_chain)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    req = Request(cmd.name, ring, order, order2, dmax=args.dmax, config=config,
                  json=args.json, timing=args.timing, argv=tuple(argv))
    for o in (order, order2):
        if o is not None and o.nvars is not None and o.nvars != ring.n:
            raise ParseError(f"order {o} has {o.nvars} weights but the ring has {ring.n} variables")

    def need(flag, value):
        if value is None:
            raise ParseError(f"{cmd.name} needs --{flag}")
        return value

    if IDEAL in cmd.needs:
        req.ideal = parse_ideal(need("ideal", args.ideal), ring)
    if MONOS in cmd.needs:
        req.monomials = parse_monomials(need("ideal", args.ideal), ring)
    if POLY in cmd.needs or POLY2 in cmd.needs:
        req.polys = parse_polynomials(need("poly", args.poly), ring)
        want = 2 if POLY2 in cmd.needs else 1
        if len(req.polys) != want and cmd.name != "transform":
            raise ParseError(f"{cmd.name} needs {want} polynomial(s) in --poly")
    if MATRIX in cmd.needs:
        req.matrix = _parse_matrix(need("matrix", args.matrix))
    if cmd.name in _DEGREE_CMDS:
        req.degree = need("degree", args.degree)
        if req.degree < 0:
            raise ParseError("--degree must be nonnegative")
    if cmd.name == "gap-ideal":
        req.k, req.d = need("k", args.k), need("d", args.d)
        if not 3 <= req.k <= ring.n:
            raise ParseError(f"--k must satisfy 3 <= k <= {ring.n}")
        if req.d < 1:
            raise ParseError("--d must be at least 1")
    if cmd.name in ("distinguish", "gap-witness", "is-rlex") and args.dmax < 1:
        raise ParseError("--dmax must be at least 1")
    return req


def _echo(req: Request) -> dict:
    echo = {"ring": list(req.ring.var_names), "order": str(req.order)}
    if req.order2 is not None:
        echo["order2"] = str(req.order2)
    if req.ideal is not None:
        echo["ideal"] = [poly_json(f, req.order) for f in req.ideal.generators]
    if req.monomials is not None:
        echo["monomials"] = [monomial_json(m) for m in req.monomials]
    if req.polys is not None:
        echo["polys"] = [poly_json(f, req.order) for f in req.polys]
    for name in ("degree", "k", "d"):
        if getattr(req, name) is not None:
            echo[name] = getattr(req, name)
    if req.command in ("gin", "reg", "random-transform"):
        echo["seed"] = req.config.seed
    if req.command in ("distinguish", "gap-witness", "is-rlex"):
        echo["dmax"] = req.dmax
    return echo


def run(req: Request) -> Report:
    start = time.perf_counter()
    out = COMMANDS[req.command].handler(req)
    payload, text = out[0], out[1]
    trials = out[2] if len(out) > 2 else None
    elapsed = round(time.perf_counter() - start, 6) if req.timing else None
    return Report(req.command, _echo(req), payload, text, trials, elapsed)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        req = parse_request(argv)
        report = run(req)
    except StabilizationFailure as exc:
        print(f"ginlab: stabilization failure: {exc}", file=sys.stderr)
        return 2
    except (GinlabError, ValueError, ArithmeticError) as exc:
        print(f"ginlab: error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write((report.to_json() if req.json else report.to_text()) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
