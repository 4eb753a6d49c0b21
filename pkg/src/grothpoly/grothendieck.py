"""
Grothendieck polynomials by the operator definition.

For a permutation w of {1, ..., n+1} the single polynomial is obtained
by applying the pi operators along a reduced word of w^{-1} w0 to the
staircase monomial x1^n x2^(n-1) ... xn; the double polynomial starts
instead from the product of x_i + y_j + x_i*y_j over i + j <= n+1.
The result does not depend on the reduced word chosen.

>>> from grothpoly.polynomials import pretty
>>> pretty(grothendieck_single((3, 1, 2)))
'x1^2'
>>> pretty(grothendieck_double((2, 1)))
'x1 + y1 + x1*y1'
"""

from .permutations import (
    check_permutation,
    compose,
    inverse,
    lex_min_reduced_word,
    longest_element,
)
from .polynomials import (
    Polynomial,
    constant,
    monomial,
    pi_word,
    x_var,
    y_var,
)

__all__ = [
    "staircase_monomial",
    "staircase_product",
    "operator_word",
    "grothendieck_single",
    "grothendieck_double",
]


def staircase_monomial(n: int) -> Polynomial:
    """
    The monomial x1^n x2^(n-1) ... xn^1 in family size n+1.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(staircase_monomial(2))
    'x1^2*x2'
    """
    return monomial(n + 1, tuple(n - i for i in range(n + 1)))


def staircase_product(n: int) -> Polynomial:
    """
    The expanded product of (x_i + y_j + x_i*y_j) over i + j <= n+1,
    in family size n+1.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(staircase_product(1))
    'x1 + y1 + x1*y1'
    >>> pretty(staircase_product(0))
    '1'
    """
    m = n + 1
    out = constant(1, m)
    for i in range(1, n + 1):
        for j in range(1, n + 2 - i):
            xi, yj = x_var(i, m), y_var(j, m)
            out = out * (xi + yj + xi * yj)
    return out


def operator_word(w: tuple[int, ...]) -> tuple[int, ...]:
    """
    The reduced word along which the pi operators act for w: the
    lexicographically least reduced word of w^{-1} w0.

    >>> operator_word((3, 2, 1))
    ()
    >>> operator_word((1, 2, 3))
    (1, 2, 1)
    """
    check_permutation(w)
    return lex_min_reduced_word(
        compose(inverse(w), longest_element(len(w)))
    )


def grothendieck_single(w: tuple[int, ...]) -> Polynomial:
    """
    The single Grothendieck polynomial of w, in variables x1..x(n+1).

    >>> from grothpoly.polynomials import pretty
    >>> pretty(grothendieck_single((2, 1)))
    'x1'
    >>> pretty(grothendieck_single((1, 2)))
    '1'
    """
    n = len(w) - 1
    return pi_word(operator_word(w), staircase_monomial(n))


def grothendieck_double(w: tuple[int, ...]) -> Polynomial:
    """
    The double Grothendieck polynomial of w, in x1..x(n+1), y1..y(n+1).

    >>> from grothpoly.polynomials import pretty
    >>> pretty(grothendieck_double((1, 2)))
    '1'
    """
    n = len(w) - 1
    return pi_word(operator_word(w), staircase_product(n))
