"""
Sparse exact-integer polynomials in two variable families x1..xm, y1..ym,
with the divided-difference operators acting on the x side.

A term is keyed by a pair of exponent tuples, one per family.  All
arithmetic is exact; there are no floats anywhere.  The y variables are
scalars as far as the operators are concerned: delta and pi act on the
x exponents of each term and carry the y part along untouched.

>>> p = x_var(1, 2) + y_var(1, 2)
>>> pretty(p * p)
'x1^2 + 2*x1*y1 + y1^2'
>>> pretty(pi(1, x_var(1, 2) ** 2))
'x1 + x2 + x1*x2'
"""

from __future__ import annotations

__all__ = [
    "Polynomial",
    "constant",
    "x_var",
    "y_var",
    "monomial",
    "swap_x",
    "delta",
    "pi",
    "pi_word",
    "substitute_zero",
    "restrict_variables",
    "exchange_families",
    "set_y_equal_x",
    "truncate_degree",
    "coefficient",
    "homogeneous_component",
    "total_degree",
    "pretty",
    "to_json",
    "from_json",
]

Key = tuple[tuple[int, ...], tuple[int, ...]]


class Polynomial:
    """
    Immutable-by-convention sparse polynomial with a fixed family size m.

    terms maps (x_exponents, y_exponents) to a nonzero integer; both
    exponent tuples always have length m.  Mixing different m in
    arithmetic is an error rather than an implicit promotion.
    """

    __slots__ = ("m", "terms")

    def __init__(self, m: int, terms: dict[Key, int] | None = None):
        self.m = m
        self.terms = {k: c for k, c in (terms or {}).items() if c != 0}

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = constant(other, self.m)
        return (
            isinstance(other, Polynomial)
            and self.m == other.m
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.m, frozenset(self.terms.items())))

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return Polynomial(self.m, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.m, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, int):
            return Polynomial(
                self.m, {k: c * other for k, c in self.terms.items()}
            )
        other = self._coerce(other)
        out: dict[Key, int] = {}
        for (xa, ya), ca in self.terms.items():
            for (xb, yb), cb in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(xa, xb)),
                    tuple(a + b for a, b in zip(ya, yb)),
                )
                out[key] = out.get(key, 0) + ca * cb
        return Polynomial(self.m, out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if e < 0:
            raise ValueError("negative powers are not polynomials")
        result = constant(1, self.m)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, int):
            return constant(other, self.m)
        if not isinstance(other, Polynomial):
            raise TypeError(f"cannot combine Polynomial with {type(other)}")
        if other.m != self.m:
            raise ValueError(f"family size mismatch: {self.m} vs {other.m}")
        return other

    def __repr__(self) -> str:
        return pretty(self)


def constant(c: int, m: int) -> Polynomial:
    """The constant polynomial c in family size m."""
    zero = (0,) * m
    return Polynomial(m, {(zero, zero): c})


def monomial(
    m: int,
    x_exps: tuple[int, ...] = (),
    y_exps: tuple[int, ...] = (),
    c: int = 1,
) -> Polynomial:
    """
    A single term; exponent tuples shorter than m are zero-padded.

    >>> pretty(monomial(2, (1, 2), (), 3))
    '3*x1*x2^2'
    """
    xe = tuple(x_exps) + (0,) * (m - len(x_exps))
    ye = tuple(y_exps) + (0,) * (m - len(y_exps))
    if len(xe) != m or len(ye) != m or min(xe + ye, default=0) < 0:
        raise ValueError("bad exponent vectors")
    return Polynomial(m, {(xe, ye): c})


def x_var(i: int, m: int) -> Polynomial:
    """The variable x_i (1-based)."""
    if not 1 <= i <= m:
        raise ValueError(f"x index {i} out of range 1..{m}")
    return monomial(m, (0,) * (i - 1) + (1,))


def y_var(i: int, m: int) -> Polynomial:
    """The variable y_i (1-based)."""
    if not 1 <= i <= m:
        raise ValueError(f"y index {i} out of range 1..{m}")
    return monomial(m, (), (0,) * (i - 1) + (1,))


def swap_x(p: Polynomial, i: int) -> Polynomial:
    """
    Exchange the exponents of x_i and x_{i+1} in every term.

    >>> pretty(swap_x(x_var(1, 2), 1))
    'x2'
    >>> q = x_var(1, 2) * x_var(2, 2)
    >>> swap_x(q, 1) == q
    True
    """
    if not 1 <= i <= p.m - 1:
        raise ValueError(f"swap index {i} out of range 1..{p.m - 1}")
    out: dict[Key, int] = {}
    for (xe, ye), c in p.terms.items():
        xs = list(xe)
        xs[i - 1], xs[i] = xs[i], xs[i - 1]
        key = (tuple(xs), ye)
        out[key] = out.get(key, 0) + c
    return Polynomial(p.m, out)


def delta(i: int, f: Polynomial) -> Polynomial:
    """
    The divided difference (f - swap_x(f, i)) / (x_i - x_{i+1}).

    Computed term by term: for exponents (p, q) of x_i, x_{i+1} the
    quotient (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1}) is a
    signed geometric sum, so no polynomial division ever happens and the
    result is exact by construction.

    >>> pretty(delta(1, x_var(1, 2)))
    '1'
    >>> pretty(delta(1, x_var(1, 2) ** 2 * x_var(2, 2)))
    'x1*x2'
    >>> delta(1, x_var(1, 2) * x_var(2, 2)).terms
    {}
    """
    if not 1 <= i <= f.m - 1:
        raise ValueError(f"operator index {i} out of range 1..{f.m - 1}")
    out: dict[Key, int] = {}
    for (xe, ye), c in f.terms.items():
        p, q = xe[i - 1], xe[i]
        if p == q:
            continue
        sign = 1 if p > q else -1
        lo, hi = min(p, q), max(p, q)
        for t in range(lo, hi):
            xs = list(xe)
            xs[i - 1], xs[i] = t, p + q - 1 - t
            key = (tuple(xs), ye)
            out[key] = out.get(key, 0) + sign * c
    return Polynomial(f.m, out)


def pi(i: int, f: Polynomial) -> Polynomial:
    """
    The isobaric variant delta_i(f) + delta_i(x_{i+1} * f); satisfies
    pi^2 = -pi and commutes with multiplication by y monomials.

    >>> pretty(pi(1, constant(1, 2)))
    '-1'
    >>> pretty(pi(1, x_var(1, 2)))
    '1'
    """
    return delta(i, f) + delta(i, x_var(i + 1, f.m) * f)


def pi_word(word: tuple[int, ...], f: Polynomial) -> Polynomial:
    """
    Composite pi_{i1}(pi_{i2}(...(f))) for word (i1, i2, ...): the
    rightmost letter acts first.

    >>> pi_word((), x_var(1, 2)) == x_var(1, 2)
    True
    """
    for i in reversed(word):
        f = pi(i, f)
    return f


def substitute_zero(p: Polynomial, family: str, keep: int) -> Polynomial:
    """
    Set every variable of the given family ("x" or "y") with index
    greater than keep to zero.

    >>> pretty(substitute_zero(x_var(1, 2) + x_var(2, 2), "x", 1))
    'x1'
    >>> pretty(substitute_zero(x_var(1, 2) * y_var(2, 2), "y", 1))
    '0'
    """
    if family not in ("x", "y"):
        raise ValueError("family must be 'x' or 'y'")
    slot = 0 if family == "x" else 1
    out = {
        key: c
        for key, c in p.terms.items()
        if all(e == 0 for e in key[slot][keep:])
    }
    return Polynomial(p.m, out)


def restrict_variables(p: Polynomial, m: int) -> Polynomial:
    """
    Down-size to the first m variables of both families, dropping every
    term that uses a later one.

    >>> pretty(restrict_variables(x_var(1, 3) + x_var(3, 3), 1))
    'x1'
    """
    if not 0 <= m <= p.m:
        raise ValueError(f"cannot keep {m} of {p.m} variables")
    out = {
        (xe[:m], ye[:m]): c
        for (xe, ye), c in p.terms.items()
        if not any(xe[m:]) and not any(ye[m:])
    }
    return Polynomial(m, out)


def exchange_families(p: Polynomial) -> Polynomial:
    """
    Swap the two variable families: each term x^a y^b becomes x^b y^a.

    >>> exchange_families(x_var(1, 2)) == y_var(1, 2)
    True
    >>> q = x_var(1, 2) * y_var(2, 2) ** 3
    >>> exchange_families(exchange_families(q)) == q
    True
    """
    return Polynomial(p.m, {(ye, xe): c for (xe, ye), c in p.terms.items()})


def set_y_equal_x(p: Polynomial) -> Polynomial:
    """
    Substitute y_i -> x_i for every i; collided terms sum.

    >>> pretty(set_y_equal_x(y_var(1, 1)))
    'x1'
    >>> sp1 = x_var(1, 1) + y_var(1, 1) + x_var(1, 1) * y_var(1, 1)
    >>> pretty(set_y_equal_x(sp1))
    '2*x1 + x1^2'
    """
    out: dict[Key, int] = {}
    zero = (0,) * p.m
    for (xe, ye), c in p.terms.items():
        key = (tuple(a + b for a, b in zip(xe, ye)), zero)
        out[key] = out.get(key, 0) + c
    return Polynomial(p.m, out)


def total_degree(key: Key) -> int:
    return sum(key[0]) + sum(key[1])


def truncate_degree(p: Polynomial, bound: int) -> Polynomial:
    """
    Keep the terms of total degree (x and y together) at most bound.

    >>> pretty(truncate_degree(x_var(1, 1) + x_var(1, 1) ** 2, 1))
    'x1'
    """
    return Polynomial(
        p.m, {k: c for k, c in p.terms.items() if total_degree(k) <= bound}
    )


def coefficient(
    p: Polynomial,
    x_exps: tuple[int, ...] = (),
    y_exps: tuple[int, ...] = (),
) -> int:
    """
    The integer coefficient of the given monomial (exponents padded).

    >>> coefficient(constant(6, 1) * x_var(1, 1) ** 4, (4,))
    6
    """
    xe = tuple(x_exps) + (0,) * (p.m - len(x_exps))
    ye = tuple(y_exps) + (0,) * (p.m - len(y_exps))
    return p.terms.get((xe, ye), 0)


def homogeneous_component(p: Polynomial, d: int) -> Polynomial:
    """
    The sum of terms of total degree exactly d.

    >>> q = x_var(1, 2) + x_var(1, 2) * x_var(2, 2)
    >>> pretty(homogeneous_component(q, 2))
    'x1*x2'
    """
    return Polynomial(
        p.m, {k: c for k, c in p.terms.items() if total_degree(k) == d}
    )


def _term_sort_key(key: Key):
    # graded order, x block before y block inside a degree: ascending
    # total degree, then descending lexicographic on the concatenated
    # exponent vector, so "x1 + y1 + x1*y1" comes out in that order
    flat = key[0] + key[1]
    return (total_degree(key), tuple(-e for e in flat))


def _monomial_str(key: Key) -> str:
    parts = []
    for name, exps in zip("xy", key):
        for i, e in enumerate(exps, start=1):
            if e == 1:
                parts.append(f"{name}{i}")
            elif e > 1:
                parts.append(f"{name}{i}^{e}")
    return "*".join(parts)


def pretty(p: Polynomial) -> str:
    """
    Plain-text rendering in canonical term order.

    >>> pretty(constant(0, 1))
    '0'
    >>> pretty(x_var(1, 2) ** 2 * x_var(2, 2) - 3 * x_var(1, 2))
    '-3*x1 + x1^2*x2'
    """
    if not p.terms:
        return "0"
    chunks = []
    for key in sorted(p.terms, key=_term_sort_key):
        c = p.terms[key]
        mono = _monomial_str(key)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not chunks:
            chunks.append(body if c > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(chunks)


def to_json(p: Polynomial) -> dict:
    """JSON-ready dict, terms in canonical order."""
    return {
        "m": p.m,
        "terms": [
            {"c": p.terms[k], "x": list(k[0]), "y": list(k[1])}
            for k in sorted(p.terms, key=_term_sort_key)
        ],
    }


def from_json(data: dict) -> Polynomial:
    """
    Inverse of to_json.

    >>> q = x_var(1, 2) * y_var(2, 2) - 2
    >>> from_json(to_json(q)) == q
    True
    """
    m = data["m"]
    terms: dict[Key, int] = {}
    for t in data["terms"]:
        key = (tuple(t["x"]), tuple(t["y"]))
        if len(key[0]) != m or len(key[1]) != m:
            raise ValueError("exponent vector length mismatch")
        terms[key] = terms.get(key, 0) + t["c"]
    return Polynomial(m, terms)
