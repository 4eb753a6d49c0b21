"""Degree-truncated stable, symmetric, weak, and half-weak Grothendieck
functions, the conjugating involution on symmetric truncations, and the
Q-basis expansion pipeline."""

from __future__ import annotations

from functools import cache
from typing import NamedTuple

from .factorizations import (
    enumerate_double_unbounded,
    enumerate_hook,
    enumerate_plain_unbounded,
    genfun,
)
from .polynomials import (
    Polynomial,
    constant,
    exchange_families,
    monomial,
    restrict_variables,
    truncate_degree,
)
from .tableaux import (
    check_partition,
    conjugate,
    contains,
    enumerate_hecke_tableaux,
    f_coefficient,
    genfun_svt,
    oft_count,
    outer_shape,
    partitions_inside,
    partitions_of,
)

__all__ = [
    "TruncationSpec",
    "stable_single",
    "stable_double",
    "stable_double_via_tableaux",
    "schur",
    "schur_expand",
    "omega",
    "weak_stable_double",
    "weak_symmetric",
    "halfweak_stable",
    "qschur_expansion",
    "stability_check",
]


class TruncationSpec(NamedTuple):
    """Working window for function-level objects: m variables per
    family, keeping terms of total degree at most D."""

    m: int
    D: int


def _check_spec(t: TruncationSpec) -> None:
    if t.m < 1 or t.D < 0:
        raise ValueError(f"bad truncation window {t}")


def stable_single(w: tuple[int, ...], t: TruncationSpec) -> Polynomial:
    """
    Truncated stable polynomial of w: the generating polynomial of all
    factorizations of its Hecke words into t.m strictly decreasing
    factors using at most t.D letters.

    >>> from .polynomials import pretty
    >>> pretty(stable_single((2, 1), TruncationSpec(2, 2)))
    'x1 + x2 + x1*x2'
    >>> pretty(stable_single((1, 2, 3), TruncationSpec(3, 4)))
    '1'
    """
    _check_spec(t)
    return genfun(enumerate_plain_unbounded(w, t.m, t.D), t.m)


def stable_double(w: tuple[int, ...], t: TruncationSpec) -> Polynomial:
    """
    Truncated two-sided stable polynomial of w, generated by the
    factorizations with t.m increasing factors left of center and t.m
    decreasing ones right of it.

    >>> from .polynomials import pretty
    >>> pretty(stable_double((2, 1), TruncationSpec(1, 2)))
    'x1 + y1 + x1*y1'
    """
    _check_spec(t)
    return genfun(enumerate_double_unbounded(w, t.m, t.D), t.m)


def _one_box_per_line(mu: tuple[int, ...], rho: tuple[int, ...]) -> bool:
    """Whether mu/rho has no two boxes in a row or in a column."""
    pad = rho + (0,) * (len(mu) - len(rho))
    cols = []
    for wide, narrow in zip(mu, pad):
        if wide - narrow > 1:
            return False
        if wide > narrow:
            cols.append(narrow)
    return len(cols) == len(set(cols))


def stable_double_via_tableaux(
    w: tuple[int, ...], t: TruncationSpec
) -> Polynomial:
    """
    The tableau model for stable_double: sum over Hecke tableaux T and
    nested partitions rho inside mu inside the shape of T, with mu/rho
    scattered, of the set-valued polynomial of shape(T)/rho in x times
    that of the conjugate of mu in y.
    """
    _check_spec(t)
    total = constant(0, t.m)
    for T in enumerate_hecke_tableaux(w, max_boxes=t.D):
        shape = outer_shape(T)
        for mu in partitions_inside(shape):
            y_part = exchange_families(genfun_svt(conjugate(mu), t.m, t.D))
            for rho in partitions_inside(mu):
                if not _one_box_per_line(mu, rho):
                    continue
                x_part = genfun_svt(shape, t.m, t.D, inner=rho)
                total = total + truncate_degree(x_part * y_part, t.D)
    return total


@cache
def schur(shape: tuple[int, ...], m: int) -> Polynomial:
    """
    Schur polynomial in m variables by column-strict fillings; zero
    when the shape has more rows than there are variables.

    >>> from .polynomials import pretty
    >>> pretty(schur((2,), 2))
    'x1^2 + x1*x2 + x2^2'
    >>> pretty(schur((1, 1, 1), 2))
    '0'
    """
    check_partition(shape)
    if len(shape) > m:
        return constant(0, m)
    boxes = [(r, c) for r in range(len(shape)) for c in range(shape[r])]
    counts: dict = {}
    weights = [0] * m

    def place(idx: int, filled: dict) -> None:
        if idx == len(boxes):
            key = (tuple(weights), (0,) * m)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = boxes[idx]
        lo = filled.get((r, c - 1), 1)
        above = filled.get((r - 1, c))
        if above is not None:
            lo = max(lo, above + 1)
        for v in range(lo, m + 1):
            filled[(r, c)] = v
            weights[v - 1] += 1
            place(idx + 1, filled)
            weights[v - 1] -= 1
        filled.pop((r, c), None)

    place(0, {})
    return Polynomial(m, counts)


def _eliminate(component: dict, m: int) -> dict:
    """Expand an exponent-vector-to-coefficient map of one homogeneous
    symmetric component into Schur coordinates by leading-term
    subtraction."""
    component = {k: c for k, c in component.items() if c}
    out: dict[tuple[int, ...], int] = {}
    while component:
        lead = max(component)
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise ValueError(f"not symmetric: stray monomial {lead}")
        lam = lead[: next(
            (i for i, e in enumerate(lead) if e == 0), len(lead)
        )]
        c = component[lead]
        out[lam] = c
        for (exps, _), sc in schur(lam, m).terms.items():
            component[exps] = component.get(exps, 0) - c * sc
        component = {k: v for k, v in component.items() if v}
    return out


def schur_expand(p: Polynomial, family: str, d: int) -> dict:
    """
    Schur-basis coefficients of the degree-d part of a one-family
    symmetric polynomial.

    >>> schur_expand(schur((1,), 2), "x", 1)
    {(1,): 1}
    >>> from .polynomials import monomial
    >>> h2 = sum(monomial(2, e) for e in [(2, 0), (1, 1), (0, 2)])
    >>> schur_expand(h2, "x", 2)
    {(2,): 1}
    """
    if family not in ("x", "y"):
        raise ValueError(f"unknown family {family!r}")
    component: dict = {}
    for (xe, ye), c in p.terms.items():
        own, other = ((xe, ye) if family == "x" else (ye, xe))
        if any(other):
            raise ValueError("expected a polynomial in one family")
        if sum(own) == d:
            component[own] = c
    return _eliminate(component, p.m)


def omega(p: Polynomial, family: str) -> Polynomial:
    """
    The linear involution on symmetric truncations that rewrites each
    homogeneous component of the chosen family in the Schur basis and
    conjugates every indexing partition.  The other family rides along
    as coefficients.

    >>> omega(schur((2,), 3), "x") == schur((1, 1), 3)
    True
    """
    if family not in ("x", "y"):
        raise ValueError(f"unknown family {family!r}")
    groups: dict = {}
    for (xe, ye), c in p.terms.items():
        own, other = ((xe, ye) if family == "x" else (ye, xe))
        groups.setdefault((other, sum(own)), {})[own] = c
    total = constant(0, p.m)
    for (other, _), component in groups.items():
        carrier = (
            monomial(p.m, (), other)
            if family == "x"
            else monomial(p.m, other, ())
        )
        for lam, c in _eliminate(component, p.m).items():
            image = schur(conjugate(lam), p.m)
            if family == "y":
                image = exchange_families(image)
            total = total + c * (image * carrier)
    return total


def weak_stable_double(w: tuple[int, ...], t: TruncationSpec) -> Polynomial:
    """Image of stable_double under the conjugating involution applied
    to both families."""
    _check_spec(t)
    return omega(omega(stable_double(w, t), "x"), "y")


def weak_symmetric(shape: tuple[int, ...], t: TruncationSpec) -> Polynomial:
    """Image of the one-family set-valued polynomial of the shape under
    the conjugating involution."""
    _check_spec(t)
    return omega(genfun_svt(shape, t.m, t.D), "x")


def halfweak_stable(w: tuple[int, ...], t: TruncationSpec) -> Polynomial:
    """
    Truncated generating polynomial of the hook factorizations of w:
    each factor a circled decreasing set followed by an uncircled
    weakly increasing multiset.

    >>> from .polynomials import pretty
    >>> pretty(halfweak_stable((1, 2, 3), TruncationSpec(2, 3)))
    '1'
    """
    _check_spec(t)
    return genfun(enumerate_hook(w, t.m, t.D), t.m)


def qschur_expansion(w: tuple[int, ...], t: TruncationSpec) -> dict:
    """
    Coefficients of the Q-basis expansion of halfweak_stable at y = x,
    by strict partition, for degrees up to t.D: the count of Hecke
    tableaux per shape, convolved with over flagged fillings and with
    lattice primed tableaux per weight.

    >>> qschur_expansion((1, 2), TruncationSpec(1, 2))
    {(): 1}
    """
    _check_spec(t)
    shape_counts: dict[tuple[int, ...], int] = {}
    for T in enumerate_hecke_tableaux(w, max_boxes=t.D):
        s = outer_shape(T)
        shape_counts[s] = shape_counts.get(s, 0) + 1
    out: dict[tuple[int, ...], int] = {}
    for d in range(t.D + 1):
        for mu in partitions_of(d):
            filled = sum(
                count * oft_count(mu, rho)
                for rho, count in shape_counts.items()
                if contains(mu, rho)
            )
            if not filled:
                continue
            for lam in partitions_of(d):
                if any(a <= b for a, b in zip(lam, lam[1:])):
                    continue
                f = f_coefficient(mu, lam)
                if f:
                    out[lam] = out.get(lam, 0) + filled * f
    return out


_MODELS = {
    "stable_single": stable_single,
    "stable_double": stable_double,
    "stable_double_via_tableaux": stable_double_via_tableaux,
    "weak_stable_double": weak_stable_double,
    "weak_symmetric": weak_symmetric,
    "halfweak_stable": halfweak_stable,
}


def stability_check(model: str, arg, t: TruncationSpec) -> bool:
    """
    True when widening the window by one variable leaves every
    coefficient on the first t.m variables unchanged.

    >>> stability_check("stable_single", (2, 1), TruncationSpec(2, 2))
    True
    """
    _check_spec(t)
    if model not in _MODELS:
        raise ValueError(f"unknown model {model!r}")
    fn = _MODELS[model]
    wide = fn(arg, TruncationSpec(t.m + 1, t.D))
    return fn(arg, t) == restrict_variables(wide, t.m)
