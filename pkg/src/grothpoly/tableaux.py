"""
Partitions, skew shapes, and the tableau families behind the symmetric
generating functions: set-valued tableaux, their primed variants,
Hecke tableaux, over flagged tableaux, primed tableaux, and marked
shifted tableaux for Q-Schur functions.

Entries are (value, primed) pairs.  Two orders are in play: the marked
order 1' < 1 < 2' < 2 < ... (multiset families, Q-Schur) and the
split order 1' < 2' < ... < 1 < 2 < ... (primed set-valued tableaux).
Each validator applies its own order; boxes are kept sorted in it.

>>> T = tableau([["1'2'", "2'3'", "123"], ["3'1", "23", "4"], ["12", "34"]])
>>> is_psvt(T)
True
>>> weight_of(T)
((3, 3, 3, 2), (1, 2, 2, 0))
"""

from dataclasses import dataclass, field
import itertools
import re
from typing import Iterable, NamedTuple

from .permutations import check_permutation, hecke_apply, hecke_distance
from .polynomials import Polynomial, constant

__all__ = [
    "Entry",
    "Tableau",
    "tableau",
    "outer_shape",
    "check_partition",
    "conjugate",
    "contains",
    "partitions_of",
    "partitions_inside",
    "is_standard_svt",
    "is_svt",
    "is_psvt",
    "is_psmt",
    "is_pt",
    "is_oft",
    "is_hecke_tableau",
    "enumerate_hecke_tableaux",
    "weight_of",
    "genfun_svt",
    "genfun_psvt",
    "genfun_psmt",
    "genfun_pt",
    "oft_count",
    "q_schur",
    "has_i_starting",
    "has_i_lattice",
    "f_coefficient",
    "tableau_to_json",
    "tableau_from_json",
    "pretty_tableau",
]


# ---------------------------------------------------------------------------
# partitions


def check_partition(p: tuple[int, ...]) -> None:
    if any(a < b for a, b in zip(p, p[1:])) or any(a < 1 for a in p):
        raise ValueError(f"not a partition: {p}")


def conjugate(p: tuple[int, ...]) -> tuple[int, ...]:
    """
    >>> conjugate((3, 1))
    (2, 1, 1)
    >>> conjugate(())
    ()
    """
    check_partition(p)
    return tuple(sum(1 for a in p if a > j) for j in range(p[0] if p else 0))


def contains(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    check_partition(outer)
    check_partition(inner)
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner, outer))


def partitions_of(
    n: int, max_part: int | None = None
) -> list[tuple[int, ...]]:
    """
    All partitions of n with parts at most max_part.

    >>> partitions_of(4, 3)
    [(3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    cap = n if max_part is None else min(n, max_part)
    if n == 0:
        return [()]
    out = []
    for first in range(cap, 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


def partitions_inside(shape: tuple[int, ...]) -> list[tuple[int, ...]]:
    """
    Every partition fitting componentwise inside the given one.

    >>> partitions_inside((2, 1))
    [(), (1,), (2,), (1, 1), (2, 1)]
    """
    check_partition(shape)
    levels = [[()]]
    for bound in shape:
        grown = []
        for p in levels[-1]:
            cap = min(bound, p[-1]) if p else bound
            grown.extend(p + (row,) for row in range(1, cap + 1))
        levels.append(grown)
    return sorted(
        (p for level in levels for p in level), key=lambda p: (len(p), p)
    )


# ---------------------------------------------------------------------------
# entries and tableaux


class Entry(NamedTuple):
    value: int
    primed: bool = False

    def __str__(self) -> str:
        return f"{self.value}'" if self.primed else str(self.value)


def marked_key(e: Entry) -> int:
    """Rank in the order 1' < 1 < 2' < 2 < ..."""
    return 2 * e.value - (1 if e.primed else 0)


def split_key(e: Entry) -> tuple[int, int]:
    """Rank in the order 1' < 2' < ... < 1 < 2 < ..."""
    return (0 if e.primed else 1, e.value)


@dataclass(frozen=True)
class Tableau:
    """Rows of boxes; each box a nonempty tuple of entries.  Row r of a
    skew tableau starts at column inner[r]."""

    rows: tuple[tuple[tuple[Entry, ...], ...], ...]
    inner: tuple[int, ...] = ()

    def box(self, r: int, c: int) -> tuple[Entry, ...] | None:
        if not 0 <= r < len(self.rows):
            return None
        start = self.inner[r] if r < len(self.inner) else 0
        if not start <= c < start + len(self.rows[r]):
            return None
        return self.rows[r][c - start]

    def all_entries(self) -> list[Entry]:
        return [e for row in self.rows for box in row for e in box]


_ENTRY_RE = re.compile(r"(\d)('?)")


def _as_box(spec) -> tuple[Entry, ...]:
    if isinstance(spec, int):
        return (Entry(spec),)
    if isinstance(spec, str):
        return tuple(
            Entry(int(v), p == "'") for v, p in _ENTRY_RE.findall(spec)
        )
    return tuple(
        e if isinstance(e, Entry) else _as_box(e)[0] for e in spec
    )


def tableau(rows, inner: tuple[int, ...] = ()) -> Tableau:
    """
    Build a tableau from per-box specs: an int, a string of single
    digits like "1'2'3", or a list of entries.  Entry order within a
    box is kept as given.

    >>> tableau([[1, 2], [3]]).rows
    (((Entry(value=1, primed=False),), (Entry(value=2, primed=False),)), ((Entry(value=3, primed=False),),))
    """
    return Tableau(
        tuple(tuple(_as_box(b) for b in row) for row in rows), tuple(inner)
    )


def outer_shape(T: Tableau) -> tuple[int, ...]:
    return tuple(
        (T.inner[r] if r < len(T.inner) else 0) + len(row)
        for r, row in enumerate(T.rows)
    )


def _shape_ok(T: Tableau) -> bool:
    outer = outer_shape(T)
    inner = tuple(T.inner) + (0,) * (len(T.rows) - len(T.inner))
    if any(a < 0 for a in inner):
        return False
    if any(a < b for a, b in zip(outer, outer[1:])):
        return False
    if any(a < b for a, b in zip(inner, inner[1:])):
        return False
    return all(i <= o for i, o in zip(inner, outer))


def weight_of(T: Tableau) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """
    Vector pair (x, y): x counts unprimed values, y primed ones, both
    padded to the largest value present.

    >>> weight_of(tableau([["1'1", 2]]))
    ((1, 1), (1, 0))
    """
    entries = T.all_entries()
    width = max((e.value for e in entries), default=0)
    x = [0] * width
    y = [0] * width
    for e in entries:
        (y if e.primed else x)[e.value - 1] += 1
    return tuple(x), tuple(y)


# ---------------------------------------------------------------------------
# validators
#
# Each validator walks boxes pairwise: a box against the box to its
# right and the box below, comparing whole contents in its own order.


def _neighbors_ok(T: Tableau, key, row_strict: bool, col_strict: bool) -> bool:
    for r, row in enumerate(T.rows):
        start = T.inner[r] if r < len(T.inner) else 0
        for idx, box in enumerate(row):
            c = start + idx
            right = T.box(r, c + 1)
            if right is not None:
                gap = max(key(e) for e in box) <= min(key(e) for e in right)
                strict = max(key(e) for e in box) < min(key(e) for e in right)
                if not (strict if row_strict else gap):
                    return False
            below = T.box(r + 1, c)
            if below is not None:
                gap = max(key(e) for e in box) <= min(key(e) for e in below)
                strict = max(key(e) for e in box) < min(key(e) for e in below)
                if not (strict if col_strict else gap):
                    return False
    return True


def _boxes_sorted(T: Tableau, key) -> bool:
    return all(
        all(key(a) <= key(b) for a, b in zip(box, box[1:]))
        for row in T.rows
        for box in row
    )


def _spread(T: Tableau, primed: bool, per: str) -> bool:
    """True when each (primed?) value hits at most one box per row or
    per column."""
    seen: set[tuple[int, int]] = set()
    for r, row in enumerate(T.rows):
        start = T.inner[r] if r < len(T.inner) else 0
        for idx, box in enumerate(row):
            c = start + idx
            line = r if per == "row" else c
            for v in {e.value for e in box if e.primed == primed}:
                if (v, line) in seen:
                    return False
                seen.add((v, line))
    return True


def is_standard_svt(T: Tableau) -> bool:
    """Boxes partition {1..N}, all comparisons strict.

    >>> is_standard_svt(tableau([["12", 4], [3]]))
    True
    >>> is_standard_svt(tableau([[1, 3], [3]]))
    False
    """
    if not _shape_ok(T) or T.inner or any(
        not box for row in T.rows for box in row
    ):
        return False
    entries = T.all_entries()
    if any(e.primed for e in entries):
        return False
    values = sorted(e.value for e in entries)
    if values != list(range(1, len(values) + 1)):
        return False
    return _boxes_sorted(T, marked_key) and _neighbors_ok(
        T, marked_key, row_strict=True, col_strict=True
    )


def is_svt(T: Tableau) -> bool:
    """Set-valued: rows weak, columns strict, boxes are sets.

    >>> is_svt(tableau([["12", 2], [2]]))
    False
    >>> is_svt(tableau([["12", 2], [3]]))
    True
    """
    if not _shape_ok(T) or any(not box for row in T.rows for box in row):
        return False
    entries = T.all_entries()
    if any(e.primed for e in entries):
        return False
    if any(len(set(box)) != len(box) for row in T.rows for box in row):
        return False
    return _boxes_sorted(T, marked_key) and _neighbors_ok(
        T, marked_key, row_strict=False, col_strict=True
    )


def is_psvt(T: Tableau) -> bool:
    """Primed set-valued: split order, all comparisons weak, unprimed
    once per row, primed once per column."""
    if not _shape_ok(T) or T.inner or any(
        not box for row in T.rows for box in row
    ):
        return False
    if any(len(set(box)) != len(box) for row in T.rows for box in row):
        return False
    return (
        _boxes_sorted(T, split_key)
        and _neighbors_ok(T, split_key, row_strict=False, col_strict=False)
        and _spread(T, primed=False, per="row")
        and _spread(T, primed=True, per="column")
    )


def is_psmt(T: Tableau) -> bool:
    """Primed multiset: marked order, weak comparisons, unprimed once
    per column, primed once per row and once per box."""
    if not _shape_ok(T) or T.inner or any(
        not box for row in T.rows for box in row
    ):
        return False
    for row in T.rows:
        for box in row:
            primes = [e for e in box if e.primed]
            if len(set(primes)) != len(primes):
                return False
    return (
        _boxes_sorted(T, marked_key)
        and _neighbors_ok(T, marked_key, row_strict=False, col_strict=False)
        and _spread(T, primed=False, per="column")
        and _spread(T, primed=True, per="row")
    )


def is_pt(T: Tableau) -> bool:
    """One entry per box and the multiset-family constraints.

    >>> is_pt(tableau([[1, 1], [1]]))
    False
    >>> is_pt(tableau([["1'", 1], [2]]))
    True
    """
    if any(len(box) != 1 for row in T.rows for box in row):
        return False
    return is_psmt(T)


def is_oft(T: Tableau, inner: tuple[int, ...]) -> bool:
    """Over flagged: skew over the given inner shape, row r entries at
    most inner[r], rows weakly decreasing, columns strictly decreasing."""
    check_partition(inner)
    if tuple(T.inner) != tuple(inner) or len(T.rows) != len(inner):
        return False
    if not _shape_ok(T):
        return False
    for r, row in enumerate(T.rows):
        flag = inner[r]
        for box in row:
            if len(box) != 1 or box[0].primed:
                return False
            if not 1 <= box[0].value <= flag:
                return False
        vals = [box[0].value for box in row]
        if any(a < b for a, b in zip(vals, vals[1:])):
            return False
    for r, row in enumerate(T.rows):
        start = inner[r]
        for idx in range(len(row)):
            c = start + idx
            below = T.box(r + 1, c)
            if below is not None and row[idx][0].value <= below[0].value:
                return False
    return True


def reading_word(T: Tableau) -> tuple[int, ...]:
    """Row word: bottom row to top, left to right within each row."""
    return tuple(
        e.value for row in reversed(T.rows) for box in row for e in box
    )


def is_hecke_tableau(T: Tableau, w: tuple[int, ...]) -> bool:
    """Single strictly increasing entries whose row word, read with the
    leftmost letter acting first, evaluates to w.

    >>> is_hecke_tableau(tableau([[1, 2], [4]]), (3, 1, 2, 5, 4))
    True
    """
    check_permutation(w)
    n = len(w) - 1
    if not _shape_ok(T) or T.inner:
        return False
    for row in T.rows:
        for box in row:
            if len(box) != 1 or box[0].primed or not 1 <= box[0].value <= n:
                return False
    if not _neighbors_ok(T, marked_key, row_strict=True, col_strict=True):
        return False
    u = tuple(range(1, n + 2))
    for a in reading_word(T):
        u = hecke_apply(u, a)
    return u == w


def _tableau_key(T: Tableau):
    return (
        outer_shape(T),
        T.inner,
        tuple(tuple(box for box in row) for row in T.rows),
    )


def enumerate_hecke_tableaux(
    w: tuple[int, ...], max_boxes: int | None = None
) -> list[Tableau]:
    """
    All Hecke tableaux for w with at most max_boxes boxes (default: the
    full n x n box).  Filled bottom row first in reading order so the
    running evaluation prunes against a distance table.

    >>> [outer_shape(T) for T in enumerate_hecke_tableaux((3, 1, 2, 5, 4))]
    [(2, 1), (3,), (3, 1)]
    >>> enumerate_hecke_tableaux((1, 2))
    [Tableau(rows=(), inner=())]
    """
    check_permutation(w)
    n = len(w) - 1
    cap = n * n if max_boxes is None else min(max_boxes, n * n)
    dist = hecke_distance(w, "left")
    identity = tuple(range(1, n + 2))
    far = cap + 1
    out: list[Tableau] = []

    shapes = [
        s
        for total in range(cap + 1)
        for s in partitions_of(total, n)
        if len(s) <= n
    ]

    def fill_rows(shape, r, done, u, left_boxes):
        # done holds the rows below row r, bottom row last
        if r < 0:
            if u == w:
                out.append(Tableau(tuple(done)))
            return
        lower = done[0] if done else ()

        def extend(row, c, u2):
            if dist.get(u2, far) > left_boxes - c:
                return
            if c == shape[r]:
                fill_rows(
                    shape, r - 1, [tuple(row)] + done, u2,
                    left_boxes - shape[r],
                )
                return
            lo = row[-1][0].value + 1 if row else 1
            for v in range(lo, n + 1):
                if c < len(lower) and v >= lower[c][0].value:
                    break
                extend(row + [(Entry(v),)], c + 1, hecke_apply(u2, v))

        extend([], 0, u)

    for shape in shapes:
        fill_rows(shape, len(shape) - 1, [], identity, sum(shape))

    return sorted(out, key=_tableau_key)


# ---------------------------------------------------------------------------
# generating polynomials
#
# Each enumerator walks boxes in row-major order carrying the entry
# budget and the per-line bookkeeping its family needs, accumulating
# monomial weights directly.


def _boxes_of(outer, inner):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [
        (r, c)
        for r in range(len(outer))
        for c in range(inner[r], outer[r])
    ]


def _poly_from_counts(m: int, counts: dict) -> Polynomial:
    return Polynomial(m, dict(counts))


def genfun_svt(
    outer: tuple[int, ...],
    m: int,
    D: int,
    inner: tuple[int, ...] = (),
) -> Polynomial:
    """
    Degree-truncated set-valued generating polynomial of a (skew)
    shape in m variables.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(genfun_svt((1,), 2, 2))
    'x1 + x2 + x1*x2'
    >>> pretty(genfun_svt((1, 1), 2, 2))
    'x1*x2'
    >>> pretty(genfun_svt((), 3, 2))
    '1'
    """
    check_partition(outer)
    if inner:
        check_partition(inner)
        if not contains(outer, inner):
            raise ValueError(f"{inner} not inside {outer}")
    boxes = _boxes_of(outer, inner)
    counts: dict = {}
    weights = [0] * m

    def place(idx: int, budget: int, filled: dict) -> None:
        if idx == len(boxes):
            key = (tuple(weights), (0,) * m)
            counts[key] = counts.get(key, 0) + 1
            return
        if budget < len(boxes) - idx:
            return
        r, c = boxes[idx]
        left = filled.get((r, c - 1))
        above = filled.get((r - 1, c))
        lo = 1
        if left:
            lo = max(lo, max(left))
        if above:
            lo = max(lo, max(above) + 1)
        pool = range(lo, m + 1)
        for size in range(1, min(budget - (len(boxes) - idx - 1), m - lo + 1) + 1):
            for combo in itertools.combinations(pool, size):
                filled[(r, c)] = combo
                for v in combo:
                    weights[v - 1] += 1
                place(idx + 1, budget - size, filled)
                for v in combo:
                    weights[v - 1] -= 1
        filled.pop((r, c), None)

    place(0, D, {})
    return _poly_from_counts(m, counts)


def _primed_pool(m: int) -> list[Entry]:
    return [Entry(v, True) for v in range(1, m + 1)]


def genfun_psvt(outer: tuple[int, ...], m: int, D: int) -> Polynomial:
    """
    Primed set-valued generating polynomial: split order, primed
    entries feed the y variables.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(genfun_psvt((1,), 1, 2))
    'x1 + y1 + x1*y1'
    """
    check_partition(outer)
    boxes = _boxes_of(outer, ())
    alphabet = _primed_pool(m) + [Entry(v) for v in range(1, m + 1)]
    rank = {e: i for i, e in enumerate(alphabet)}
    counts: dict = {}
    x_wt = [0] * m
    y_wt = [0] * m

    def place(idx, budget, filled, row_used, col_used):
        if idx == len(boxes):
            key = (tuple(x_wt), tuple(y_wt))
            counts[key] = counts.get(key, 0) + 1
            return
        if budget < len(boxes) - idx:
            return
        r, c = boxes[idx]
        left = filled.get((r, c - 1))
        above = filled.get((r - 1, c))
        lo = 0
        if left:
            lo = max(lo, max(rank[e] for e in left))
        if above:
            lo = max(lo, max(rank[e] for e in above))
        pool = [
            e
            for e in alphabet[lo:]
            if (e.primed and (e.value, c) not in col_used)
            or (not e.primed and (e.value, r) not in row_used)
        ]
        cap = min(budget - (len(boxes) - idx - 1), len(pool))
        for size in range(1, cap + 1):
            for combo in itertools.combinations(pool, size):
                filled[(r, c)] = combo
                for e in combo:
                    if e.primed:
                        y_wt[e.value - 1] += 1
                        col_used.add((e.value, c))
                    else:
                        x_wt[e.value - 1] += 1
                        row_used.add((e.value, r))
                place(idx + 1, budget - size, filled, row_used, col_used)
                for e in combo:
                    if e.primed:
                        y_wt[e.value - 1] -= 1
                        col_used.discard((e.value, c))
                    else:
                        x_wt[e.value - 1] -= 1
                        row_used.discard((e.value, r))
        filled.pop((r, c), None)

    place(0, D, {}, set(), set())
    return _poly_from_counts(m, counts)


def _box_multisets(pool, budget, primed_left_of_unprimed=False):
    """Nonempty weakly increasing multisets from pool (already rank
    sorted), primed entries at most once each, total size <= budget."""
    out = []

    def grow(start, current, room):
        if current:
            out.append(tuple(current))
        for i in range(start, len(pool)):
            e = pool[i]
            if room == 0:
                break
            if e.primed:
                current.append(e)
                grow(i + 1, current, room - 1)
                current.pop()
            else:
                current.append(e)
                grow(i, current, room - 1)
                current.pop()

    grow(0, [], budget)
    return out


def genfun_psmt(outer: tuple[int, ...], m: int, D: int) -> Polynomial:
    """
    Primed multiset generating polynomial: marked order, unprimed
    values once per column, primed once per row and per box.
    """
    check_partition(outer)
    boxes = _boxes_of(outer, ())
    alphabet = sorted(
        _primed_pool(m) + [Entry(v) for v in range(1, m + 1)],
        key=marked_key,
    )
    counts: dict = {}
    x_wt = [0] * m
    y_wt = [0] * m

    def place(idx, budget, filled, row_used, col_used):
        if idx == len(boxes):
            key = (tuple(x_wt), tuple(y_wt))
            counts[key] = counts.get(key, 0) + 1
            return
        if budget < len(boxes) - idx:
            return
        r, c = boxes[idx]
        left = filled.get((r, c - 1))
        above = filled.get((r - 1, c))
        lo = 0
        if left:
            lo = max(lo, max(marked_key(e) for e in left))
        if above:
            lo = max(lo, max(marked_key(e) for e in above))
        pool = [
            e
            for e in alphabet
            if marked_key(e) >= lo
            and (
                ((e.value, r) not in row_used)
                if e.primed
                else ((e.value, c) not in col_used)
            )
        ]
        room = budget - (len(boxes) - idx - 1)
        for combo in _box_multisets(pool, room):
            filled[(r, c)] = combo
            for e in set(combo):
                if e.primed:
                    row_used.add((e.value, r))
                else:
                    col_used.add((e.value, c))
            for e in combo:
                (y_wt if e.primed else x_wt)[e.value - 1] += 1
            place(idx + 1, budget - len(combo), filled, row_used, col_used)
            for e in set(combo):
                if e.primed:
                    row_used.discard((e.value, r))
                else:
                    col_used.discard((e.value, c))
            for e in combo:
                (y_wt if e.primed else x_wt)[e.value - 1] -= 1
        filled.pop((r, c), None)

    place(0, D, {}, set(), set())
    return _poly_from_counts(m, counts)


def _pt_fillings(shape: tuple[int, ...], max_value: int) -> list[Tableau]:
    """All primed tableaux of the shape with values <= max_value."""
    boxes = _boxes_of(shape, ())
    alphabet = sorted(
        _primed_pool(max_value) + [Entry(v) for v in range(1, max_value + 1)],
        key=marked_key,
    )
    out: list[Tableau] = []

    def place(idx, filled, row_used, col_used):
        if idx == len(boxes):
            rows = tuple(
                tuple((filled[(r, c)],) for c in range(shape[r]))
                for r in range(len(shape))
            )
            out.append(Tableau(rows))
            return
        r, c = boxes[idx]
        left = filled.get((r, c - 1))
        above = filled.get((r - 1, c))
        lo = 0
        if left is not None:
            lo = max(lo, marked_key(left))
        if above is not None:
            lo = max(lo, marked_key(above))
        for e in alphabet:
            if marked_key(e) < lo:
                continue
            if e.primed and (e.value, r) in row_used:
                continue
            if not e.primed and (e.value, c) in col_used:
                continue
            filled[(r, c)] = e
            used = row_used if e.primed else col_used
            token = (e.value, r if e.primed else c)
            used.add(token)
            place(idx + 1, filled, row_used, col_used)
            used.discard(token)
        filled.pop((r, c), None)

    place(0, {}, set(), set())
    return out


def genfun_pt(shape: tuple[int, ...], m: int) -> Polynomial:
    """
    Generating polynomial of single-entry primed tableaux; every term
    has degree equal to the number of boxes, so no truncation bound is
    needed.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(genfun_pt((), 2))
    '1'
    """
    check_partition(shape)
    counts: dict = {}
    for T in _pt_fillings(shape, m):
        x, y = weight_of(T)
        key = (
            tuple(x) + (0,) * (m - len(x)),
            tuple(y) + (0,) * (m - len(y)),
        )
        counts[key] = counts.get(key, 0) + 1
    return _poly_from_counts(m, counts)


def oft_count(mu: tuple[int, ...], rho: tuple[int, ...]) -> int:
    """
    The number of over flagged fillings of mu/rho; zero when mu has
    more rows than rho.

    >>> oft_count((3, 1), (2, 1))
    2
    >>> oft_count((2, 2), (2, 1))
    1
    >>> oft_count((4,), (3,))
    3
    >>> oft_count((2, 1), (2, 1))
    1
    """
    check_partition(mu)
    check_partition(rho)
    if not contains(mu, rho):
        raise ValueError(f"{rho} not inside {mu}")
    if len(mu) > len(rho):
        return 0
    boxes = _boxes_of(mu, rho)
    total = 0

    def place(idx, filled):
        nonlocal total
        if idx == len(boxes):
            total += 1
            return
        r, c = boxes[idx]
        hi = rho[r]
        left = filled.get((r, c - 1))
        if left is not None:
            hi = min(hi, left)
        above = filled.get((r - 1, c))
        if above is not None:
            hi = min(hi, above - 1)
        for v in range(1, hi + 1):
            filled[(r, c)] = v
            place(idx + 1, filled)
        filled.pop((r, c), None)

    place(0, {})
    return total


def q_schur(shape: tuple[int, ...], m: int, D: int) -> Polynomial:
    """
    Schur Q-polynomial of a strict partition via marked shifted
    tableaux: row r sits shifted r columns right; rows and columns
    weakly increase in the marked order; unprimed values at most once
    per column, primed at most once per row; i and i' both count
    toward x_i.

    >>> from grothpoly.polynomials import pretty
    >>> pretty(q_schur((1,), 2, 4))
    '2*x1 + 2*x2'
    """
    check_partition(shape)
    if any(a <= b for a, b in zip(shape, shape[1:])):
        raise ValueError(f"parts must strictly decrease: {shape}")
    if sum(shape) > D:
        return constant(0, m)
    boxes = [
        (r, r + j) for r in range(len(shape)) for j in range(shape[r])
    ]
    alphabet = sorted(
        _primed_pool(m) + [Entry(v) for v in range(1, m + 1)],
        key=marked_key,
    )
    counts: dict = {}
    wt = [0] * m

    def place(idx, filled, row_used, col_used):
        if idx == len(boxes):
            key = (tuple(wt), (0,) * m)
            counts[key] = counts.get(key, 0) + 1
            return
        r, c = boxes[idx]
        lo = 0
        left = filled.get((r, c - 1))
        if left is not None:
            lo = max(lo, marked_key(left))
        above = filled.get((r - 1, c))
        if above is not None:
            lo = max(lo, marked_key(above))
        for e in alphabet:
            if marked_key(e) < lo:
                continue
            if e.primed and (e.value, r) in row_used:
                continue
            if not e.primed and (e.value, c) in col_used:
                continue
            filled[(r, c)] = e
            used = row_used if e.primed else col_used
            token = (e.value, r if e.primed else c)
            used.add(token)
            wt[e.value - 1] += 1
            place(idx + 1, filled, row_used, col_used)
            wt[e.value - 1] -= 1
            used.discard(token)
        filled.pop((r, c), None)

    place(0, {}, set(), set())
    return _poly_from_counts(m, counts)


# ---------------------------------------------------------------------------
# finger scans


def _require_pt(T: Tableau) -> None:
    if not is_pt(T):
        raise ValueError("finger scans are defined on primed tableaux only")


def _rows_bottom_up(T: Tableau) -> Iterable[Entry]:
    for row in reversed(T.rows):
        for box in row:
            yield box[0]


def _rows_top_down_reversed(T: Tableau) -> Iterable[Entry]:
    for row in T.rows:
        for box in reversed(row):
            yield box[0]


def has_i_starting(T: Tableau, i: int) -> bool:
    """
    Scan rows left to right, bottom row to top: the first i or i' seen
    must be unprimed (vacuously true if neither occurs).
    """
    _require_pt(T)
    for e in _rows_bottom_up(T):
        if e.value == i:
            return not e.primed
    return True


def has_i_lattice(T: Tableau, i: int) -> bool:
    """
    Two tally scans with shared tallies.  First: top row rightmost box,
    right to left then down; unprimed i tallies above, unprimed i-1
    below; the finger breaks when above exceeds below, or when they tie
    on a primed i.  Second (tallies kept): bottom row leftmost box,
    left to right then up; primed i tallies above, primed i-1 below;
    breaks when above exceeds below, or on a tie over an unprimed i-1.
    """
    _require_pt(T)
    if i == 1:
        return True
    above = below = 0
    for e in _rows_top_down_reversed(T):
        if not e.primed and e.value == i:
            above += 1
        elif not e.primed and e.value == i - 1:
            below += 1
        if above > below:
            return False
        if above == below and e.primed and e.value == i:
            return False
    for e in _rows_bottom_up(T):
        if e.primed and e.value == i:
            above += 1
        elif e.primed and e.value == i - 1:
            below += 1
        if above > below:
            return False
        if above == below and not e.primed and e.value == i - 1:
            return False
    return True


def f_coefficient(mu: tuple[int, ...], lam: tuple[int, ...]) -> int:
    """
    The number of primed tableaux of shape mu having every starting and
    lattice property whose combined x- and y-weight is lam.  Qualifying
    weights are checked to be strict partitions; a violation raises.

    >>> f_coefficient((3, 1), (4,))
    1
    >>> f_coefficient((3, 1), (3, 1))
    1
    >>> f_coefficient((), ())
    1
    """
    check_partition(mu)
    check_partition(lam)
    if sum(mu) != sum(lam):
        return 0
    cap = max(sum(mu), 1)
    count = 0
    for T in _pt_fillings(mu, cap):
        if not all(
            has_i_starting(T, i) and has_i_lattice(T, i)
            for i in range(1, cap + 1)
        ):
            continue
        x, y = weight_of(T)
        combined = tuple(a + b for a, b in zip(x, y))
        while combined and combined[-1] == 0:
            combined = combined[:-1]
        if any(a <= b for a, b in zip(combined, combined[1:])):
            raise RuntimeError(
                f"weight {combined} of a qualifying tableau is not strict: "
                f"{T}"
            )
        if combined == lam:
            count += 1
    return count


# ---------------------------------------------------------------------------
# serialization


def tableau_to_json(T: Tableau) -> dict:
    outer = outer_shape(T)
    return {
        "outer": list(outer),
        "inner": list(T.inner),
        "boxes": [[[str(e) for e in box] for box in row] for row in T.rows],
    }


def tableau_from_json(data: dict) -> Tableau:
    rows = tuple(
        tuple(
            tuple(
                Entry(int(s.rstrip("'")), s.endswith("'")) for s in box
            )
            for box in row
        )
        for row in data["boxes"]
    )
    return Tableau(rows, tuple(data.get("inner", ())))


def pretty_tableau(T: Tableau) -> str:
    """Monospace Young-diagram layout; skew cells print as dots.

    >>> print(pretty_tableau(tableau([["1'2'", "123"], ["3"]])))
    1'2' 123
    3
    """
    cells: list[list[str]] = []
    for r, row in enumerate(T.rows):
        start = T.inner[r] if r < len(T.inner) else 0
        cells.append(["."] * start + ["".join(str(e) for e in box) for box in row])
    width = max((len(s) for row in cells for s in row), default=1)
    lines = [" ".join(s.ljust(width) for s in row).rstrip() for row in cells]
    return "\n".join(lines)
