"""Command-line interface: ``skeinalg <command> ...``.

Exit codes: 0 success (or every check passed), 1 a verification suite
failed, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import List, Optional

from .expr import ParseError, format_element, parse_link
from .laurent import Laurent, QuotientSpec, format_laurent, is_unit, parse_laurent
from .ncalg import Element, deformed_commutator
from .presentations import PRESENTATION_NAMES, SKEIN_NAMES, Presentation, f12, get_presentation
from .report import Report
from .rewrite import check_confluence

__all__ = ["main", "run", "run_suite", "SUITES", "element_json", "links_json"]

SUITES = ("confluence", "lemma2", "lemma4", "center", "zerodiv", "maps", "roots")

BASIS_TEXT = {
    "f11": "x1^i x2^j x3^k, all i, j, k",
    "f10": "x1^i x2^j x3^k with ijk = 0",
    "f04": "a1^p a2^q a3^r a4^s x1^i x2^j x3^k with ijk = 0",
    "f04r": "a1^p a2^q a3^r a4^s x1^i x2^j x3^k with pqrs = 0",
    "f12": "a^i x1^s x2^p y1^q y2^r z1^k z2^j with pqrs = 0",
    "uso3": "y1^i y2^j y3^k, all i, j, k",
}


class UsageError(ValueError):
    pass


# -- output helpers ----------------------------------------------------------------

def laurent_json(c: Laurent) -> dict:
    return {str(e): v for e, v in sorted(c.items())}


def element_json(e: Element, name: str, key=None) -> dict:
    key = key or (lambda w: (len(w), w))
    terms = [{"word": e.table.word_names(w), "coeff": laurent_json(e.coeff(w))}
             for w in sorted(e.words(), key=key, reverse=True)]
    return {"algebra": name, "terms": terms}


def _link_key_parts(key):
    """(LatticeLink, boundary) from a torus or sphere expansion key."""
    if isinstance(key, tuple):
        return key[0], key[1]
    return key, 0


def _boundary_text(b) -> str:
    if isinstance(b, tuple):
        return " ".join(f"a{i + 1}" + (f"^{k}" if k > 1 else "") for i, k in enumerate(b) if k)
    return "" if b == 0 else ("d" if b == 1 else f"d^{b}")


def format_links(exp: dict) -> str:
    if not exp:
        return "0"
    out = []
    for i, key in enumerate(sorted(exp, key=_sort_link_key, reverse=True)):
        c = exp[key]
        link, b = _link_key_parts(key)
        body = str(link)
        bt = _boundary_text(b)
        if bt:
            body = f"{body}*{bt}"
        neg = c.leading()[1] < 0
        mag = -c if neg else c
        if mag == Laurent({0: 1}):
            text = body
        elif mag.is_monomial():
            text = f"{format_laurent(mag)}*{body}"
        else:
            text = f"({format_laurent(mag)})*{body}"
        if i == 0:
            out.append(f"-{text}" if neg else text)
        else:
            out.append(f"{'-' if neg else '+'} {text}")
    return " ".join(out)


def _sort_link_key(key):
    link, b = _link_key_parts(key)
    return (link.complexity, link, b if isinstance(b, tuple) else (b,))


def links_json(exp: dict, name: str) -> dict:
    rows = []
    for key in sorted(exp, key=_sort_link_key, reverse=True):
        link, b = _link_key_parts(key)
        rows.append({"link": list(link.vec), "boundary": list(b) if isinstance(b, tuple) else b,
                     "coeff": laurent_json(exp[key])})
    return {"algebra": name, "links": rows}


# -- verification suites -------------------------------------------------------------

def _suite_confluence(max_degree: int, **_) -> Report:
    rep = Report(f"confluence (weight <= {max_degree})")
    for n in PRESENTATION_NAMES:
        pres = get_presentation(n)
        t = time.perf_counter()
        cr = check_confluence(pres.system, max_degree)
        rep.add(f"{n}: strategy-independent normal forms", cr.ok,
                f"{cr.words_checked} words, {cr.overlaps_checked} overlaps, "
                f"{len(cr.mismatches)} mismatches, {time.perf_counter() - t:.1f}s")
        nz = [i for i, r in enumerate(pres.relations) if pres.nf(r)]
        rep.add(f"{n}: all {len(pres.relations)} defining relations normalize to 0", not nz,
                f"nonzero: {nz}" if nz else "")
    p = f12()
    env = dict(p.notes)
    for text in ("y1 x2 - A^-1 (A^2 z2 + w2)", "x2 y1 - (A^-1 z2 + A w2)",
                 "x1 y1 - A^-1 (A^2 z1 + w1)", "y1 x1 - (A^-1 z1 + A w1)"):
        r = p.nf(p.parse(text, env))
        rep.add(f"f12: {text} = 0", not r, "" if not r else format_element(r, p.system.key))
    return rep


def _suite_lemma2(max_complexity: int = 25, **_) -> Report:
    from .torus_curves import lemma2_verify, links_up_to

    rep = Report(f"product-to-sum (complexity <= {max_complexity})")
    # |p| + |q| <= 2 * sqrt(complexity) bounds the leading weight
    links = [v for v in links_up_to(2 * max_complexity) if v.complexity <= max_complexity]
    for target in ("f10", "f11"):
        bad = []
        for v in links:
            for w in links:
                r = lemma2_verify(v, w, target)
                if not r.ok:
                    bad.append(f"{v}*{w}: {r.failures[0]}")
        rep.add(f"{target}: {len(links) ** 2} ordered pairs", not bad, "; ".join(bad[:3]))
    return rep


def _suite_lemma4(**_) -> Report:
    from .planar_curves import calibrate_coordinates, lemma4_suite, z_note_identity

    rep = Report("leading terms on the four-punctured sphere")
    cal = calibrate_coordinates()
    coords = ", ".join(f"{k}={v}" for k, v in cal.coords.items())
    rep.add("calibration", True, f"{coords}; arcs {cal.arcs}; {cal.alternatives} consistent assignments")
    for r in lemma4_suite(3):
        rep.add(f"{r.label}: {r.left}+{r.right}, A^{r.expected_exponent}", r.ok, "; ".join(r.failures))
    z = z_note_identity()
    rep.add("z-note reproduces the x1 x2 resolution", not z["eq3"], format_element(z["eq3"]) if z["eq3"] else "")
    rep.add("resolving z x3 and eliminating z reproduces the cubic relation", not z["zx3"],
            format_element(z["zx3"]) if z["zx3"] else "")
    return rep


def _suite_center(max_degree: int, **_) -> Report:
    from .presentations import f04_rbar, f10, f11
    from .structure import center_up_to_degree, in_span

    rep = Report("centers")
    for pres, D, want in ((f10(), 4, 1), (f11(), 3, 2), (f04_rbar(), 2, 1)):
        D = min(D, max_degree)
        c = center_up_to_degree(pres, D)
        rep.add(f"{pres.name}, weight <= {D}: dimension {want}", len(c) == want,
                "; ".join(format_element(e, pres.system.key) for e in c))
        if pres.name == "f11" and D >= 3:
            rep.add("f11: the boundary curve lies in the computed center", in_span(pres.notes["boundary"], c))
    return rep


def _suite_zerodiv(max_degree: int, seed: int, trials: int, **_) -> Report:
    from .structure import lemma3_sweep, zero_divisor_probe

    D = min(3, max_degree)
    rep = Report(f"zero divisors ({trials} trials, weight <= {D}, seed {seed})")
    for n in PRESENTATION_NAMES:
        r = zero_divisor_probe(get_presentation(n), trials, D, seed)
        rep.add(f"{n}: nonzero products", r.ok, "; ".join(f"({a})*({b})" for a, b in r.counterexamples[:3]))
    checked, failures = lemma3_sweep(3)
    rep.add(f"length inequality on {checked} quadruples in [-3,3]^2", not failures, str(failures[:3]) if failures else "")
    return rep


def _suite_maps(seed: int, trials: int, **_) -> Report:
    from .maps import maps_suite
    from .structure import cross_normalization_check

    rep = maps_suite()
    rep.extend(cross_normalization_check(max(trials, 100), 4, seed), "f04/f04r: ")
    return rep


def _suite_roots(max_degree: int, **_) -> Report:
    from .structure import roots_of_unity_suite

    return roots_of_unity_suite(max_degree, min(3, max_degree), SKEIN_NAMES)


_SUITE_FUNCS = {
    "confluence": _suite_confluence,
    "lemma2": _suite_lemma2,
    "lemma4": _suite_lemma4,
    "center": _suite_center,
    "zerodiv": _suite_zerodiv,
    "maps": _suite_maps,
    "roots": _suite_roots,
}


def run_suite(name: str, max_degree: int = 4, seed: int = 7, trials: int = 100) -> Report:
    if name not in _SUITE_FUNCS:
        raise UsageError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return _SUITE_FUNCS[name](max_degree=max_degree, seed=seed, trials=trials)


# -- commands ---------------------------------------------------------------------------

def _coefficient_rule(args):
    if args.quotient and args.eval_A is not None:
        raise UsageError("use at most one of --quotient and --eval-A")
    if args.quotient:
        try:
            return QuotientSpec(parse_laurent(args.quotient))
        except ValueError as exc:
            raise UsageError(f"bad --quotient: {exc}") from None
    if args.eval_A is not None:
        if args.eval_A not in (1, -1):
            raise UsageError("--eval-A accepts 1 or -1 (A must stay a unit)")
        return "A=-1" if args.eval_A == -1 else QuotientSpec(parse_laurent("A - 1"))
    return None


def _algebra(args) -> Presentation:
    try:
        pres = get_presentation(args.algebra)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rule = _coefficient_rule(args)
    if rule is not None:
        from .maps import specialize_presentation

        pres = specialize_presentation(pres, rule)
    return pres


def _parse(pres: Presentation, text: str) -> Element:
    e = pres.parse(text, pres.notes)
    if pres.system.scalar_reduce is not None:
        e = e.map_coefficients(pres.system.scalar_reduce)
    return e


def _emit_element(pres: Presentation, e: Element, args) -> str:
    if args.format == "json":
        return json.dumps(element_json(e, pres.name, pres.system.key))
    return format_element(e, pres.system.key)


def cmd_normalize(args) -> tuple:
    pres = _algebra(args)
    return 0, _emit_element(pres, pres.nf(_parse(pres, args.expr)), args)


def cmd_multiply(args) -> tuple:
    pres = _algebra(args)
    return 0, _emit_element(pres, pres.mul(_parse(pres, args.left), _parse(pres, args.right)), args)


def cmd_commutator(args) -> tuple:
    pres = _algebra(args)
    try:
        u = parse_laurent(args.u)
    except ValueError as exc:
        raise UsageError(f"bad --u: {exc}") from None
    if not is_unit(u):
        raise UsageError(f"--u must be a unit +-A^k, got {u}")
    a, b = _parse(pres, args.left), _parse(pres, args.right)
    return 0, _emit_element(pres, pres.nf(deformed_commutator(a, b, u)), args)


def cmd_curve(args) -> tuple:
    pres = _algebra(args)
    base = args.algebra
    if base in ("f11", "f10"):
        from .torus_curves import curve_element

        v = parse_link(args.link, 2)
        e = curve_element(v, base)
    elif base == "f04":
        from .planar_curves import planar_curve, slope_of

        try:
            v = parse_link(args.link, 2)
        except ParseError:
            v = slope_of(parse_link(args.link, 3))
        e = planar_curve(v)
    else:
        raise UsageError("curve needs --algebra f11, f10 or f04")
    if pres.system.scalar_reduce is not None:
        e = pres.nf(e.map_coefficients(pres.system.scalar_reduce))
    return 0, _emit_element(pres, e, args)


def cmd_tolinks(args) -> tuple:
    if args.quotient or args.eval_A is not None:
        raise UsageError("tolinks works over Z[A, A^-1] only")
    pres = _algebra(args)
    e = _parse(pres, args.expr)
    if args.algebra in ("f11", "f10"):
        from .torus_curves import to_link_basis

        exp = to_link_basis(e, args.algebra, args.bound)
    elif args.algebra == "f04":
        from .planar_curves import to_planar_links

        exp = to_planar_links(e)
    else:
        raise UsageError("tolinks needs --algebra f11, f10 or f04")
    if args.format == "json":
        return 0, json.dumps(links_json(exp, pres.name))
    return 0, format_links(exp)


def cmd_verify(args) -> tuple:
    names = SUITES if args.suite == "all" else (args.suite,)
    reports = [run_suite(n, args.max_degree, args.seed, args.trials) for n in names]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        text = json.dumps({"ok": ok, "suites": [r.to_dict() for r in reports]}, indent=1)
    else:
        text = "\n".join(r.to_text() for r in reports)
        text += f"\n{'ALL PASS' if ok else 'FAILED'}"
    return (0 if ok else 1), text


def cmd_info(args) -> tuple:
    pres = _algebra(args)
    sys_ = pres.system
    t = pres.table
    gens = [{"name": n, "weight": w, "central": c} for n, w, c in zip(t.names, sys_.weights, t.central)]
    rels = [format_element(r, sys_.key) + " = 0" for r in pres.relations]
    rules = []
    for (h, l), r in sorted(sys_.swaps.items()):
        rhs = Element(t, {(l, h): r.lead, **{tuple(w): c for w, c in r.tail}})
        rules.append(f"{t.names[h]} {t.names[l]} -> {format_element(rhs, sys_.key)}")
    for m in sys_.monomials:
        lhs = Element.monomial(t, t.sorted_word(m.trigger))
        rhs = Element(t, {tuple(w): c for w, c in m.replacement})
        rules.append(f"{format_element(lhs)} -> {format_element(rhs, sys_.key)}")
    base = args.algebra
    counts = [len(sys_.normal_words(d, d)) for d in range(4)]
    data = {
        "algebra": pres.name,
        "description": pres.description,
        "generators": gens,
        "relations": rels,
        "rules": rules,
        "basis": BASIS_TEXT.get(base, ""),
        "basis_counts_by_weight": counts,
        "notes": {k: format_element(v, sys_.key) for k, v in pres.notes.items()},
    }
    if args.format == "json":
        return 0, json.dumps(data, indent=1)
    lines = [f"{pres.name}: {pres.description}",
             "generators: " + ", ".join(
                 f"{g['name']}(w={g['weight']}{', central' if g['central'] else ''})" for g in gens),
             "relations:"] + [f"  {r}" for r in rels] + ["rules:"] + [f"  {r}" for r in rules]
    lines.append(f"basis: {data['basis']}")
    lines.append("normal words of weight <= 0..3 (length <= weight): " + ", ".join(map(str, counts)))
    lines += ["notes:"] + [f"  {k} = {v}" for k, v in data["notes"].items()]
    return 0, "\n".join(lines)


# -- parser -------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", help="also write the output to this file")
    alg = argparse.ArgumentParser(add_help=False)
    alg.add_argument("--algebra", required=True, help=f"one of {', '.join(PRESENTATION_NAMES)}")
    alg.add_argument("--quotient", help="reduce coefficients modulo this polynomial, e.g. 'A^2+1'")
    alg.add_argument("--eval-A", dest="eval_A", type=int, help="evaluate A at 1 or -1")

    p = argparse.ArgumentParser(prog="skeinalg", description="Exact computations in skein algebras.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("normalize", parents=[common, alg], help="normal form of an expression")
    s.add_argument("expr")
    s.set_defaults(func=cmd_normalize)
    s = sub.add_parser("multiply", parents=[common, alg], help="normal form of a product")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_multiply)
    s = sub.add_parser("commutator", parents=[common, alg], help="u*ab - u^-1*ba in normal form")
    s.add_argument("--u", default="1", help="unit deformation parameter (default 1)")
    s.add_argument("left")
    s.add_argument("right")
    s.set_defaults(func=cmd_commutator)
    s = sub.add_parser("curve", parents=[common, alg], help="element of the link (p,q), or (a,b,c) on f04")
    s.add_argument("link")
    s.set_defaults(func=cmd_curve)
    s = sub.add_parser("tolinks", parents=[common, alg], help="expand over the link basis")
    s.add_argument("expr")
    s.add_argument("--bound", type=int, help="largest link weight to tabulate")
    s.set_defaults(func=cmd_tolinks)
    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=SUITES + ("all",))
    s.add_argument("--max-degree", type=int, default=4)
    s.add_argument("--seed", type=int, default=7)
    s.add_argument("--trials", type=int, default=100)
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("info", parents=[common, alg], help="generators, relations and basis")
    s.set_defaults(func=cmd_info)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        code, text = args.func(args)
    except (UsageError, ParseError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError) as exc:
        # unknown generator names, bound exceedance, malformed links
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    print(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
