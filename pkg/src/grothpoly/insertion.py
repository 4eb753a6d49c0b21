"""Row insertion for Hecke words, with factorization-labelled variants."""

from __future__ import annotations

from bisect import bisect_left

from .factorizations import Factorization
from .tableaux import Entry, Tableau, pretty_tableau, tableau

__all__ = [
    "insert_row",
    "insert_word",
    "insert_into_pair",
    "semistandard_insert",
    "transpose",
    "phi",
]


def insert_row(
    above: tuple[int, ...] | None, row: tuple[int, ...], a: int
) -> tuple[tuple[int, ...], str, int | None]:
    """
    Insert the letter a into one increasing row; above is the row
    directly over it, or None at the top of the tableau.

    Returns (new_row, outcome, bumped).  The outcome is "appended"
    (a landed in a new box at the end), "disappeared" (a was absorbed
    and the bump path stops), or "bumped" (the returned letter moves
    on to the next row down).

    Walking the row, a either replaces the first entry >= it, or is
    blocked: equal entries, and entries sitting under an equal or
    larger entry of the row above, stay put and push their right or
    own neighbour down instead.

    >>> insert_row(None, (1, 2, 4, 5), 3)
    ((1, 2, 3, 5), 'bumped', 4)
    >>> insert_row((1, 2, 3, 5), (2, 4, 6, 8), 4)
    ((2, 4, 6, 8), 'bumped', 6)
    >>> insert_row((3, 5, 7), (4, 7), 7)
    ((4, 7), 'disappeared', None)
    """
    if above is not None:
        fits = a > above[0] and any(
            above[i] <= a and (i >= len(row) or a < row[i])
            for i in range(len(above))
        )
        if not fits:
            raise RuntimeError(f"letter {a} breaks the bump-path invariant")
    j = len(row)
    if j == 0 or a >= row[-1]:
        if j and a == row[-1]:
            return row, "disappeared", None
        nxt = above[j] if above is not None and j < len(above) else None
        if nxt == a:
            return row, "disappeared", None
        return row + (a,), "appended", None
    i = bisect_left(row, a)
    if row[i] == a:
        return row, "bumped", row[i + 1]
    if above is not None and above[i] == a:
        return row, "bumped", row[i]
    return row[:i] + (a,) + row[i + 1 :], "bumped", row[i]


def _insert_one(
    p_rows: list[tuple[int, ...]],
    q_rows: list[list[tuple[Entry, ...]]],
    a: int,
    label: Entry,
) -> None:
    """Push a down the rows of p_rows, marking where it ends in q_rows."""
    r, cur = 0, a
    while True:
        above = p_rows[r - 1] if r else None
        row = p_rows[r] if r < len(p_rows) else ()
        new_row, outcome, bumped = insert_row(above, row, cur)
        if outcome == "bumped":
            p_rows[r] = new_row
            r, cur = r + 1, bumped
            continue
        if outcome == "appended":
            if r == len(p_rows):
                p_rows.append(())
                q_rows.append([])
            p_rows[r] = new_row
            q_rows[r].append((label,))
        else:
            # the letter vanished in row r: mark the lowest box of the
            # column under this row's last box
            col = len(p_rows[r]) - 1
            rr = max(i for i, pr in enumerate(p_rows) if len(pr) > col)
            q_rows[rr][col] += (label,)
        return


def _pair(p_rows, q_rows) -> tuple[Tableau, Tableau]:
    p = Tableau(tuple(tuple((Entry(v),) for v in row) for row in p_rows))
    q = Tableau(tuple(tuple(row) for row in q_rows))
    return p, q


def _unpair(P: Tableau, Q: Tableau):
    p_rows = [tuple(box[0].value for box in row) for row in P.rows]
    q_rows = [list(row) for row in Q.rows]
    return p_rows, q_rows


def insert_word(word) -> tuple[Tableau, Tableau]:
    """
    Insert a word letter by letter.  P accumulates the letters; box
    i of Q (new box, or a mark added to an old one) shows where step
    i ended.

    >>> P, Q = insert_word((1, 3, 2, 2))
    >>> print(pretty_tableau(P))
    1 2
    3
    >>> print(pretty_tableau(Q))
    1  24
    3
    """
    p_rows: list[tuple[int, ...]] = []
    q_rows: list[list[tuple[Entry, ...]]] = []
    for step, a in enumerate(word, start=1):
        _insert_one(p_rows, q_rows, a, Entry(step))
    return _pair(p_rows, q_rows)


def insert_into_pair(
    P: Tableau, Q: Tableau, a: int, label: int | Entry
) -> tuple[Tableau, Tableau]:
    """
    One further insertion into an existing pair: a goes into P and the
    box ending its bump path gets the label in Q.

    >>> P, Q = insert_word((1, 3, 2))
    >>> P2, Q2 = insert_into_pair(P, Q, 2, 4)
    >>> (P2, Q2) == insert_word((1, 3, 2, 2))
    True
    """
    p_rows, q_rows = _unpair(P, Q)
    if not isinstance(label, Entry):
        label = Entry(label)
    _insert_one(p_rows, q_rows, a, label)
    return _pair(p_rows, q_rows)


def semistandard_insert(f: Factorization) -> tuple[Tableau, Tableau]:
    """
    Insert the letters of a decreasing factorization in reading order,
    labelling each step in Q by the index of its factor.

    >>> from .factorizations import parse_factorization
    >>> f = parse_factorization("(3 1)(4 2 1)", "plain", 9)
    >>> P, Q = semistandard_insert(f)
    >>> print(pretty_tableau(P))
    1 2
    2 4
    3
    >>> print(pretty_tableau(Q))
    1 2
    1 2
    2
    """
    if f.kind not in ("plain", "bounded_plain"):
        raise ValueError("semistandard insertion needs decreasing factors")
    p_rows: list[tuple[int, ...]] = []
    q_rows: list[list[tuple[Entry, ...]]] = []
    for i, fac in enumerate(f.factors, start=1):
        for letter in fac:
            _insert_one(p_rows, q_rows, letter.value, Entry(i))
    return _pair(p_rows, q_rows)


def _transpose_rows(rows):
    width = len(rows[0]) if rows else 0
    return [
        tuple(rows[r][c] for r in range(len(rows)) if c < len(rows[r]))
        for c in range(width)
    ]


def transpose(T: Tableau) -> Tableau:
    """
    Reflect a straight-shape tableau across its main diagonal.

    >>> print(pretty_tableau(transpose(tableau([[1, 2], [2, 4], [3]]))))
    1 2 3
    2 4
    """
    if any(T.inner):
        raise ValueError("cannot transpose a skew tableau")
    return Tableau(tuple(_transpose_rows(T.rows)))


def phi(f: Factorization) -> tuple[Tableau, Tableau]:
    """
    Insert a two-sided factorization.  The left half is reversed
    (factor order and letters) and inserted with factor labels, the
    pair is transposed with those labels primed, and the right half
    is then inserted on top with unprimed labels.

    >>> from .factorizations import parse_factorization
    >>> f = parse_factorization(
    ...     "(1 2 4)(1 3)|(4 3 2)(3)", "double_unbounded", 9
    ... )
    >>> P, Q = phi(f)
    >>> print(pretty_tableau(P))
    1 2 3 4
    2 3 4
    4
    >>> print(pretty_tableau(Q))
    1'  1'  2'  1
    2'  2'1 2
    1
    """
    if f.kind not in ("double_bounded", "double_unbounded"):
        raise ValueError("phi needs a two-sided factorization")
    left, right = f.factors[: f.split], f.factors[f.split :]
    p_rows: list[tuple[int, ...]] = []
    q_rows: list[list[tuple[Entry, ...]]] = []
    for i, fac in enumerate(reversed(left), start=1):
        for letter in reversed(fac):
            _insert_one(p_rows, q_rows, letter.value, Entry(i))
    p_rows = _transpose_rows(p_rows)
    q_rows = [
        [tuple(Entry(e.value, True) for e in box) for box in col]
        for col in _transpose_rows(q_rows)
    ]
    for i, fac in enumerate(right, start=1):
        for letter in fac:
            _insert_one(p_rows, q_rows, letter.value, Entry(i))
    return _pair(p_rows, q_rows)
