"""
Hecke factorizations in all their flavors: plain, bounded, circled,
double, and hook, together with weights, enumeration, generating
polynomials, and the convolution over Demazure-product pairs.

A factorization cuts a Hecke word into ordered factors subject to
per-kind monotonicity and lower-bound constraints; circled letters feed
the y variables.  Letters compare in the interleaved order

    (1) < 1 < (2) < 2 < ... < (n) < n.

Plain, circled and double families evaluate their flattened word
rightmost letter first (like eval_hecke_word); hook factorizations
evaluate leftmost first.

>>> f = parse_factorization("(3 2)(3 2 1)()(1)", "plain", 3)
>>> factorization_to_str(f)
'(3 2)(3 2 1)()(1)'
>>> evaluation(f)
(4, 1, 3, 2)
"""

from dataclasses import dataclass
import re
from typing import Callable, Iterable, NamedTuple

from .grothendieck import grothendieck_single
from .permutations import (
    all_permutations,
    check_permutation,
    demazure_product,
    eval_hecke_word,
    eval_hecke_word_ltr,
    hecke_apply,
    hecke_apply_right,
    hecke_distance,
    identity,
    inverse,
)
from .polynomials import (
    Polynomial,
    constant,
    exchange_families,
    monomial,
)

__all__ = [
    "Letter",
    "Factorization",
    "evaluation",
    "is_valid_factorization",
    "weight",
    "enumerate_bounded_plain",
    "enumerate_circled_bounded",
    "enumerate_double_bounded",
    "enumerate_double_unbounded",
    "enumerate_plain_unbounded",
    "enumerate_hook",
    "genfun",
    "enumerate_X",
    "cauchy_sum",
    "factorization_to_str",
    "factorization_to_json",
    "parse_factorization",
]


class Letter(NamedTuple):
    value: int
    circled: bool = False

    @property
    def rank(self) -> int:
        """Position in the interleaved order; (v) sits just below v."""
        return 2 * self.value - (1 if self.circled else 0)

    def __str__(self) -> str:
        return f"{self.value}o" if self.circled else str(self.value)


@dataclass(frozen=True)
class Factorization:
    """
    kind is one of plain, bounded_plain, circled, circled_bounded,
    double_bounded, double_unbounded, hook; factors hold Letter tuples;
    split is the number of factors left of center for double kinds.
    """

    kind: str
    factors: tuple[tuple[Letter, ...], ...]
    n: int
    split: int | None = None

    def flat_word(self) -> tuple[int, ...]:
        return tuple(l.value for f in self.factors for l in f)

    def circle_mask(self) -> tuple[bool, ...]:
        return tuple(l.circled for f in self.factors for l in f)

    def letter_count(self) -> int:
        return sum(len(f) for f in self.factors)

    def __str__(self) -> str:
        return factorization_to_str(self)


def _canonical_key(f: Factorization):
    return (f.flat_word(), f.circle_mask(), tuple(len(x) for x in f.factors))


def evaluation(f: Factorization) -> tuple[int, ...]:
    """
    The permutation the flattened word evaluates to, in the reading
    order of the factorization's kind.
    """
    word = f.flat_word()
    if f.kind == "hook":
        return eval_hecke_word_ltr(word, f.n)
    return eval_hecke_word(word, f.n)


def _strictly_decreasing(ranks) -> bool:
    return all(a > b for a, b in zip(ranks, ranks[1:]))


def _strictly_increasing(ranks) -> bool:
    return all(a < b for a, b in zip(ranks, ranks[1:]))


def is_valid_factorization(f: Factorization) -> bool:
    """
    Structural membership test for the factorization's kind; does not
    fix a target permutation (use evaluation for that).

    >>> g = parse_factorization("(3 2 2o)(3o 2 1 1o)()(1o)", "circled", 3)
    >>> is_valid_factorization(g)
    True
    >>> evaluation(g)
    (4, 1, 3, 2)
    """
    letters = [l for fac in f.factors for l in fac]
    if any(not 1 <= l.value <= f.n for l in letters):
        return False
    kind = f.kind
    if kind in ("plain", "bounded_plain", "double_bounded", "double_unbounded"):
        if any(l.circled for l in letters):
            return False
    if kind in ("plain", "bounded_plain"):
        if not all(_strictly_decreasing([l.rank for l in fac]) for fac in f.factors):
            return False
        if kind == "bounded_plain":
            if len(f.factors) != f.n + 1:
                return False
            return all(
                l.value >= i
                for i, fac in enumerate(f.factors, start=1)
                for l in fac
            )
        return True
    if kind in ("circled", "circled_bounded"):
        if not all(_strictly_decreasing([l.rank for l in fac]) for fac in f.factors):
            return False
        if kind == "circled_bounded":
            if len(f.factors) != f.n + 1:
                return False
            return all(
                l.value >= i
                for i, fac in enumerate(f.factors, start=1)
                for l in fac
            )
        return True
    if kind in ("double_bounded", "double_unbounded"):
        if f.split is None or len(f.factors) != 2 * f.split:
            return False
        left, right = f.factors[: f.split], f.factors[f.split :]
        if not all(_strictly_increasing([l.rank for l in fac]) for fac in left):
            return False
        if not all(_strictly_decreasing([l.rank for l in fac]) for fac in right):
            return False
        if kind == "double_bounded":
            if f.split != f.n + 1:
                return False
            # the i-th factor outward from center on either side is
            # bounded below by i
            for i in range(1, f.split + 1):
                bound_ok = all(
                    l.value >= i for l in left[f.split - i]
                ) and all(l.value >= i for l in right[i - 1])
                if not bound_ok:
                    return False
        return True
    if kind == "hook":
        for fac in f.factors:
            flags = [l.circled for l in fac]
            if flags != sorted(flags, reverse=True):
                return False  # a circled letter after an uncircled one
            circled = [l.value for l in fac if l.circled]
            plain = [l.value for l in fac if not l.circled]
            if not _strictly_decreasing(circled):
                return False
            if any(a > b for a, b in zip(plain, plain[1:])):
                return False
        return True
    raise ValueError(f"unknown kind {kind!r}")


def weight(f: Factorization) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    The (x-weight, y-weight) pair of vectors for f, per its kind.

    >>> h = parse_factorization("(3o 2o 2 3 3)(1o 2 2)(3o 2o 1 1 3 3)", "hook", 3)
    >>> weight(h)
    ((3, 2, 4), (2, 1, 2))
    """
    sizes = tuple(len(fac) for fac in f.factors)
    if f.kind in ("plain", "bounded_plain"):
        return sizes, (0,) * len(sizes)
    if f.kind == "circled_bounded":
        x = tuple(sum(1 for l in fac if not l.circled) for fac in f.factors)
        y = [0] * len(f.factors)
        for k, fac in enumerate(f.factors, start=1):
            for l in fac:
                if l.circled:
                    y[l.value - k] += 1  # slot i = value - k + 1
        return x, tuple(y)
    if f.kind in ("double_bounded", "double_unbounded"):
        left, right = f.factors[: f.split], f.factors[f.split :]
        x = tuple(len(fac) for fac in right)
        y = tuple(len(fac) for fac in reversed(left))
        return x, y
    if f.kind == "hook":
        x = tuple(sum(1 for l in fac if not l.circled) for fac in f.factors)
        y = tuple(sum(1 for l in fac if l.circled) for fac in f.factors)
        return x, y
    raise ValueError(f"no weight defined for kind {f.kind!r}")


# ---------------------------------------------------------------------------
# enumeration engine
#
# Every family is enumerated the same way: factor by factor, letter by
# letter, carrying the evaluation of the prefix as a permutation.  A
# branch survives only while the prefix can still be completed to the
# target within both the letter budget and the residual capacity of the
# remaining factor slots, measured by a precomputed distance table, so
# the search never walks a dead subtree.


class _FactorSpec(NamedTuple):
    candidates: Callable[[Letter | None], Iterable[Letter]]
    capacity: Callable[[Letter | None], int]


def _decreasing_spec(bound: int, n: int) -> _FactorSpec:
    """Strictly decreasing uncircled factor with values >= bound."""

    def candidates(prev):
        hi = n if prev is None else prev.value - 1
        return (Letter(v) for v in range(hi, bound - 1, -1))

    def capacity(prev):
        hi = n if prev is None else prev.value - 1
        return max(0, hi - bound + 1)

    return _FactorSpec(candidates, capacity)


def _increasing_spec(bound: int, n: int) -> _FactorSpec:
    """Strictly increasing uncircled factor with values >= bound."""

    def candidates(prev):
        lo = bound if prev is None else prev.value + 1
        return (Letter(v) for v in range(lo, n + 1))

    def capacity(prev):
        lo = bound if prev is None else prev.value + 1
        return max(0, n - lo + 1)

    return _FactorSpec(candidates, capacity)


def _circled_spec(bound: int, n: int) -> _FactorSpec:
    """Interleaved-order strictly decreasing factor, values >= bound."""
    floor_rank = 2 * bound - 1

    def candidates(prev):
        hi = 2 * n if prev is None else prev.rank - 1
        for r in range(hi, floor_rank - 1, -1):
            yield Letter((r + 1) // 2, r % 2 == 1)

    def capacity(prev):
        hi = 2 * n if prev is None else prev.rank - 1
        return max(0, hi - floor_rank + 1)

    return _FactorSpec(candidates, capacity)


def _hook_spec(n: int, budget: int) -> _FactorSpec:
    """Circled strictly decreasing prefix, then weakly increasing
    uncircled multiset; the multiset part makes capacity budget-bound."""

    def candidates(prev):
        if prev is None or prev.circled:
            hi = n if prev is None else prev.value - 1
            for v in range(hi, 0, -1):
                yield Letter(v, True)
            lo = 1
        else:
            lo = prev.value
        for v in range(lo, n + 1):
            yield Letter(v, False)

    def capacity(prev):
        return budget

    return _FactorSpec(candidates, capacity)


def _enumerate_factors(
    w: tuple[int, ...],
    kind: str,
    specs: list[_FactorSpec],
    side: str,
    max_letters: int,
    split: int | None = None,
) -> list[Factorization]:
    check_permutation(w)
    n = len(w) - 1
    dist = hecke_distance(w, side)
    apply_fn = hecke_apply_right if side == "right" else hecke_apply
    far = max_letters + 1
    tail_cap = [0] * (len(specs) + 1)
    for idx in range(len(specs) - 1, -1, -1):
        tail_cap[idx] = tail_cap[idx + 1] + specs[idx].capacity(None)

    out: list[Factorization] = []
    factors: list[tuple[Letter, ...]] = []

    def start_factor(idx: int, u, used: int) -> None:
        if idx == len(specs):
            if u == w:
                out.append(Factorization(kind, tuple(factors), n, split))
            return
        if dist.get(u, far) > min(tail_cap[idx], max_letters - used):
            return
        extend_factor(idx, [], None, u, used)

    def extend_factor(idx, letters, prev, u, used) -> None:
        factors.append(tuple(letters))
        start_factor(idx + 1, u, used)
        factors.pop()
        spec = specs[idx]
        for letter in spec.candidates(prev):
            u2 = apply_fn(u, letter.value)
            need = dist.get(u2, far)
            room = min(
                spec.capacity(letter) + tail_cap[idx + 1],
                max_letters - used - 1,
            )
            if need > room:
                continue
            letters.append(letter)
            extend_factor(idx, letters, letter, u2, used + 1)
            letters.pop()

    start_factor(0, identity(n + 1), 0)
    return sorted(out, key=_canonical_key)


def enumerate_bounded_plain(
    w: tuple[int, ...], max_letters: int | None = None
) -> list[Factorization]:
    """
    All bounded Hecke factorizations of w: n+1 strictly decreasing
    factors with factor i using only values >= i.  The family is finite;
    max_letters defaults to its full capacity.

    >>> [factorization_to_str(f) for f in enumerate_bounded_plain((1, 2))]
    ['()()']
    >>> [factorization_to_str(f) for f in enumerate_bounded_plain((3, 1, 2))]
    ['(2 1)()()']
    """
    n = len(w) - 1
    cap = sum(n - i + 1 for i in range(1, n + 2))
    budget = cap if max_letters is None else min(cap, max_letters)
    specs = [_decreasing_spec(i, n) for i in range(1, n + 2)]
    return _enumerate_factors(w, "bounded_plain", specs, "right", budget)


def enumerate_circled_bounded(
    w: tuple[int, ...], max_letters: int | None = None
) -> list[Factorization]:
    """
    All bounded circled Hecke factorizations of w: n+1 factors strictly
    decreasing in the interleaved order, factor i bounded below by (i).

    >>> len(enumerate_circled_bounded((3, 2, 1)))
    27
    """
    n = len(w) - 1
    cap = sum(max(0, 2 * (n - i + 1)) for i in range(1, n + 2))
    budget = cap if max_letters is None else min(cap, max_letters)
    specs = [_circled_spec(i, n) for i in range(1, n + 2)]
    return _enumerate_factors(w, "circled_bounded", specs, "right", budget)


def enumerate_double_bounded(
    w: tuple[int, ...], max_letters: int | None = None
) -> list[Factorization]:
    """
    All bounded double Hecke factorizations of w: 2n+2 factors, the
    left half strictly increasing and the right half strictly
    decreasing, with the i-th factor outward from center on each side
    bounded below by i.
    """
    n = len(w) - 1
    cap = 2 * sum(n - i + 1 for i in range(1, n + 2))
    budget = cap if max_letters is None else min(cap, max_letters)
    specs = [_increasing_spec(i, n) for i in range(n + 1, 0, -1)]
    specs += [_decreasing_spec(i, n) for i in range(1, n + 2)]
    return _enumerate_factors(
        w, "double_bounded", specs, "right", budget, split=n + 1
    )


def enumerate_double_unbounded(
    w: tuple[int, ...], half_parts: int, max_letters: int
) -> list[Factorization]:
    """
    All double Hecke factorizations of w with half_parts factors on each
    side of center and at most max_letters letters.

    >>> [factorization_to_str(f)
    ...  for f in enumerate_double_unbounded((2, 1), 1, 2)]
    ['()|(1)', '(1)|()', '(1)|(1)']
    """
    n = len(w) - 1
    specs = [_increasing_spec(1, n) for _ in range(half_parts)]
    specs += [_decreasing_spec(1, n) for _ in range(half_parts)]
    return _enumerate_factors(
        w, "double_unbounded", specs, "right", max_letters, split=half_parts
    )


def enumerate_plain_unbounded(
    w: tuple[int, ...], parts: int, max_letters: int
) -> list[Factorization]:
    """
    All plain Hecke factorizations of w into the given number of
    strictly decreasing factors, at most max_letters letters.

    >>> [factorization_to_str(f) for f in enumerate_plain_unbounded((2, 1), 2, 2)]
    ['()(1)', '(1)()', '(1)(1)']
    """
    n = len(w) - 1
    specs = [_decreasing_spec(1, n) for _ in range(parts)]
    return _enumerate_factors(w, "plain", specs, "right", max_letters)


def enumerate_hook(
    w: tuple[int, ...], parts: int, max_letters: int
) -> list[Factorization]:
    """
    All hook Hecke factorizations of w into the given number of factors
    and at most max_letters letters: each factor is a strictly
    decreasing circled set followed by a weakly increasing uncircled
    multiset, and the flattened word is read leftmost letter first.

    >>> [factorization_to_str(f) for f in enumerate_hook((2, 1), 1, 2)]
    ['(1)', '(1o)', '(1 1)', '(1o 1)']
    """
    n = len(w) - 1
    specs = [_hook_spec(n, max_letters) for _ in range(parts)]
    return _enumerate_factors(w, "hook", specs, "left", max_letters)


def genfun(factorizations, m: int | None = None) -> Polynomial:
    """
    The generating polynomial: the sum of x^(x-weight) y^(y-weight)
    over the given factorizations, which must share kind and shape.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(genfun(enumerate_bounded_plain((3, 1, 2))))
    'x1^2'
    """
    items = list(factorizations)
    if not items:
        return constant(0, m or 1)
    kinds = {f.kind for f in items}
    if len(kinds) > 1:
        raise ValueError(f"mixed kinds {sorted(kinds)}")
    first_x, first_y = weight(items[0])
    width = m or max(len(first_x), len(first_y))
    total = constant(0, width)
    for f in items:
        x_wt, y_wt = weight(f)
        total = total + monomial(width, x_wt, y_wt)
    return total


def enumerate_X(w: tuple[int, ...]) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """
    All pairs (u, v) whose Demazure product is w.

    >>> enumerate_X((2, 1))
    [((1, 2), (2, 1)), ((2, 1), (1, 2)), ((2, 1), (2, 1))]
    """
    check_permutation(w)
    perms = all_permutations(len(w))
    return sorted(
        (u, v)
        for u in perms
        for v in perms
        if demazure_product(u, v) == w
    )


def cauchy_sum(w: tuple[int, ...]) -> Polynomial:
    """
    The convolution over pairs with Demazure product w of the single
    polynomial of u^-1 in the y variables times that of v in the x
    variables.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(cauchy_sum((1, 2)))
    '1'
    """
    total = constant(0, len(w))
    for u, v in enumerate_X(w):
        left = exchange_families(grothendieck_single(inverse(u)))
        total = total + left * grothendieck_single(v)
    return total


def factorization_to_str(f: Factorization) -> str:
    """ASCII form: circles become an "o" suffix, factors sit in
    parentheses, and double kinds mark the center with "|"."""
    chunks = []
    for idx, fac in enumerate(f.factors):
        if f.split is not None and idx == f.split:
            chunks.append("|")
        chunks.append("(" + " ".join(str(l) for l in fac) + ")")
    return "".join(chunks)


def factorization_to_json(f: Factorization) -> list[list[dict]]:
    """JSON array of factors, each an array of {"v": value, "c": circled}."""
    return [[{"v": l.value, "c": l.circled} for l in fac] for fac in f.factors]


_LETTER_RE = re.compile(r"(\d+)(o?)")
_FACTOR_RE = re.compile(r"\(([^()]*)\)")


def parse_factorization(text: str, kind: str, n: int) -> Factorization:
    """
    Parse the ASCII form back into a Factorization; "|" fixes the split
    for double kinds, otherwise the split is the midpoint when needed.

    >>> parse_factorization("()(3)|(3 1)()", "double_unbounded", 3).split
    2
    """
    split = None
    if "|" in text:
        before, _ = text.split("|", maxsplit=1)
        split = len(_FACTOR_RE.findall(before))
    elif kind.startswith("double"):
        split = len(_FACTOR_RE.findall(text)) // 2
    factors = []
    for body in _FACTOR_RE.findall(text):
        factors.append(
            tuple(
                Letter(int(v), bool(circle))
                for v, circle in _LETTER_RE.findall(body)
            )
        )
    return Factorization(kind, tuple(factors), n, split)
