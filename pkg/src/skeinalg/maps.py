"""Algebra maps between presentations and coefficient specializations."""

from __future__ import annotations

import dataclasses
from typing import Callable, Mapping, Optional, Union

from .expr import format_element
from .laurent import A, DELTA, ONE, Laurent, QuotientSpec, parse_laurent, scalar_map
from .ncalg import Element, substitute_generators
from .presentations import Presentation, f04_rbar, f10, f11, uaso3
from .report import Report

__all__ = [
    "MissingImageError",
    "check_homomorphism",
    "parse_rule",
    "specialize_presentation",
    "boundary_solution",
    "eq5_identity_check",
    "f04_to_torus_check",
    "uso3_map_check",
    "maps_suite",
]


class MissingImageError(KeyError):
    pass


def check_homomorphism(src: Presentation, dst: Presentation, images: Mapping[str, Union[Element, str]],
                       coefficient_rule: Optional[Callable[[Laurent], Laurent]] = None,
                       system=None) -> list:
    """Normal forms in dst of the images of src's defining relations.

    ``images`` maps generator names to elements of dst (or text parsed in dst);
    ``system`` overrides dst's rewriting system (e.g. one with A -> A^2).
    All-zero output means the map is well defined on the presentation.
    """
    missing = [n for n in src.table.names if n not in images]
    if missing:
        raise MissingImageError(f"no image for {', '.join(missing)}")
    imgs = {n: dst.parse(v) if isinstance(v, str) else v for n, v in images.items()}
    sys = system or dst.system
    return [sys.normal_form(substitute_generators(r, imgs, dst.table, coefficient_rule))
            for r in src.relations]


def parse_rule(rule):
    """'A=-1', 'A->A^2', a QuotientSpec, or a modulus such as 'A^2+1'."""
    if rule in ("A=-1", "A->A^2") or isinstance(rule, QuotientSpec):
        return rule
    if isinstance(rule, str):
        text = rule.strip()
        if text.replace(" ", "") in ("A=-1", "-1"):
            return "A=-1"
        return QuotientSpec(parse_laurent(text))
    raise ValueError(f"unknown specialization rule {rule!r}")


def specialize_presentation(pres: Presentation, rule) -> Presentation:
    """Same generators and rules with coefficients pushed through ``rule``."""
    rule = parse_rule(rule)
    f = scalar_map(rule)
    reduce = None if rule == "A->A^2" else f
    label = rule if isinstance(rule, str) else f"mod {rule.modulus}"
    name = f"{pres.name}[{label}]"
    sys = pres.system.with_scalars(f, reduce=reduce, name=name)
    rels = [r.map_coefficients(f) for r in pres.relations]
    notes = {k: v.map_coefficients(f) for k, v in pres.notes.items()}
    return dataclasses.replace(pres, name=name, system=sys, relations=rels, notes=notes,
                               description=f"{pres.description}; coefficients {label}")


# -- the boundary solution -------------------------------------------------------

def boundary_solution(table, values=None) -> dict:
    """Images of a1..a4 as scalars of ``table``: by default
    a1 = a2 = a3 = -a4 = A + A^-1."""
    s = A + Laurent({-1: 1})
    values = values or (s, s, s, -s)
    return {f"a{i + 1}": Element.scalar(table, v) for i, v in enumerate(values)}


def _scalar_value(e: Element) -> Laurent:
    if not e.is_scalar():
        raise ValueError(f"{e} is not a scalar")
    return e.coeff(())


def eq5_identity_check(values=None) -> Report:
    """p1 = p2 = p3 = 0 and q + del^2 = 0 at the boundary solution; with
    ``values`` (e.g. all ones) the same quantities are reported as a control."""
    src = f04_rbar()
    tgt = f11().table
    imgs = {**boundary_solution(tgt, values), **{n: Element.gen(tgt, n) for n in ("x1", "x2", "x3")}}
    got = {k: _scalar_value(substitute_generators(src.notes[k], imgs, tgt)) for k in ("p1", "p2", "p3", "q")}
    title = "boundary identities at a1 = a2 = a3 = -a4 = A + A^-1" if values is None else f"boundary values {values}"
    rep = Report(title)
    for k in ("p1", "p2", "p3"):
        rep.add(f"{k} = 0", not got[k], f"{k} = {got[k]}")
    qd = got["q"] + DELTA * DELTA
    rep.add("q + del^2 = 0", not qd, f"q + del^2 = {qd}")
    return rep


def f04_to_torus_check(values=None) -> Report:
    """Relations of f04 under a_i -> boundary values, x_i -> x_i, landing in
    f10 with A replaced by A^2 (f04 keeps its own A)."""
    src, dst = f04_rbar(), f10()
    sys = dst.system.with_scalars(lambda c: c.subs_power(2), name="f10[A->A^2]")
    imgs = {**boundary_solution(dst.table, values), **{n: dst.gen(n) for n in ("x1", "x2", "x3")}}
    residuals = check_homomorphism(src, dst, imgs, system=sys)
    rep = Report("f04 -> f10 at A -> A^2" + ("" if values is None else f", boundary values {values}"))
    names = ["[x1,x2]", "[x2,x3]", "[x3,x1]"]
    for i, r in enumerate(residuals):
        label = names[i] if i < 3 else ("cubic relation" if i == len(residuals) - 1 else f"central relation {i - 2}")
        rep.add(f"{label} image reduces to 0", not r, "" if not r else format_element(r, sys.key))
    # constant term of the monomial form x1 x2 x3 -> ...
    eq4 = src.relations[-1]
    img = substitute_generators(eq4, imgs, dst.table)
    word = dst.table.word("x1", "x2", "x3")
    lead = img.coeff(word)
    const = img.coeff(()) * Laurent({-2: -1}) if lead == Laurent({2: 1}) else None
    want = Laurent({2: -2, -6: -2})
    rep.add("cubic relation image constant term = -2A^2 - 2A^-6", const == want, f"constant term {const}")
    return rep


def uso3_map_check() -> Report:
    src, dst = f11(), uaso3()
    rep = Report("f11 -> U_A(so3)")
    good = check_homomorphism(src, dst, {f"x{i}": dst.gen(f"y{i}").scale(DELTA) for i in (1, 2, 3)})
    rep.add("x_i -> del y_i: all relation residuals vanish", not any(good),
            "; ".join(format_element(r) for r in good if r))
    bad = check_homomorphism(src, dst, {f"x{i}": dst.gen(f"y{i}") for i in (1, 2, 3)})
    rep.add("control x_i -> y_i: some residual is nonzero", any(bad),
            "; ".join(format_element(r) for r in bad if r))
    same = check_homomorphism(src, f10(), {n: f10().gen(n) for n in ("x1", "x2", "x3")})
    rep.add("f11 -> f10 identity: all residuals vanish", not any(same))
    return rep


def maps_suite() -> Report:
    rep = Report("maps")
    rep.extend(uso3_map_check(), "uso3: ")
    rep.extend(eq5_identity_check(), "boundary identities: ")
    control = eq5_identity_check((ONE,) * 4)
    rep.add("boundary identities control: a_i = 1 gives nonzero p_i", not control.checks[0].ok,
            control.checks[0].detail)
    rep.extend(f04_to_torus_check(), "f04 -> torus: ")
    control = f04_to_torus_check((ONE,) * 4)
    rep.add("f04 -> torus control: a_i = 1 leaves a nonzero residual", not control.ok)
    return rep
