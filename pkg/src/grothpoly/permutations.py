"""
Permutations in one-line notation and the 0-Hecke monoid acting on them.

A permutation of {1, ..., n+1} is stored as a tuple of length n+1.  The
0-Hecke generator for index i (1 <= i <= n) exchanges the *values* i and
i+1 when i sits at a smaller position than i+1, and does nothing
otherwise; unlike the simple transpositions these operators are
idempotent.  A word in the generators evaluates to a permutation by
applying its letters rightmost first:

>>> eval_hecke_word((3, 2, 3, 2, 1, 1), 3)
(4, 1, 3, 2)

Words may be longer than reduced words; two words are Hecke equivalent
when they evaluate to the same permutation.
"""

from functools import lru_cache
from itertools import permutations as _itertools_permutations

__all__ = [
    "identity",
    "longest_element",
    "all_permutations",
    "compose",
    "inverse",
    "inversions",
    "support",
    "hecke_apply",
    "hecke_apply_right",
    "eval_hecke_word",
    "eval_hecke_word_ltr",
    "hecke_equivalent",
    "hecke_distance",
    "demazure_product",
    "bruhat_leq",
    "reduced_words",
    "lex_min_reduced_word",
    "enumerate_hecke_words",
    "perm_to_str",
    "perm_from_str",
    "word_to_str",
    "word_from_str",
]


def identity(size: int) -> tuple[int, ...]:
    """The identity permutation of {1, ..., size}."""
    return tuple(range(1, size + 1))


def longest_element(size: int) -> tuple[int, ...]:
    """The longest permutation (size, size-1, ..., 1)."""
    return tuple(range(size, 0, -1))


def all_permutations(size: int) -> list[tuple[int, ...]]:
    """All permutations of {1, ..., size} in lexicographic order."""
    return [tuple(p) for p in _itertools_permutations(range(1, size + 1))]


def check_permutation(p: tuple[int, ...]) -> None:
    """Raise ValueError unless p is a permutation of {1, ..., len(p)}."""
    if len(p) < 1 or sorted(p) != list(range(1, len(p) + 1)):
        raise ValueError(f"not a permutation of 1..{len(p)}: {p!r}")


def compose(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """
    Functional composition (u o v)(i) = u(v(i)).

    >>> compose((2, 1, 3), (1, 3, 2))
    (2, 3, 1)
    """
    if len(u) != len(v):
        raise ValueError("size mismatch")
    return tuple(u[x - 1] for x in v)


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    """
    The inverse permutation.

    >>> inverse((4, 1, 3, 2))
    (2, 4, 3, 1)
    """
    inv = [0] * len(p)
    for pos, val in enumerate(p, start=1):
        inv[val - 1] = pos
    return tuple(inv)


def inversions(p: tuple[int, ...]) -> int:
    """
    Number of pairs i < j with p(i) > p(j); the Coxeter length of p.

    >>> inversions((4, 1, 3, 2))
    4
    """
    return sum(
        1
        for i in range(len(p))
        for j in range(i + 1, len(p))
        if p[i] > p[j]
    )


def support(p: tuple[int, ...]) -> frozenset[int]:
    """
    The set of generator indices that occur in every Hecke word for p.

    Index r is in the support exactly when some inversion of p straddles
    it, i.e. p(i) > p(j) for some i <= r < j: without the letter r no
    word can move a value across that boundary, and any word for p must
    create such an inversion.

    >>> sorted(support((1, 3, 2, 4)))
    [2]
    >>> sorted(support((2, 1, 4, 3)))
    [1, 3]
    """
    out = set()
    for r in range(1, len(p)):
        if max(p[:r]) > min(p[r:]):
            out.add(r)
    return frozenset(out)


def hecke_apply(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """
    Act on p by the 0-Hecke generator for index i.

    The values i and i+1 are interchanged if i lies to the left of i+1
    in p; otherwise p is returned unchanged.  Applying twice is the same
    as applying once.

    >>> hecke_apply((1, 2), 1)
    (2, 1)
    >>> hecke_apply((2, 1), 1)
    (2, 1)
    >>> hecke_apply((1, 3, 2, 4), 3)
    (1, 4, 2, 3)
    """
    if not 1 <= i <= len(p) - 1:
        raise ValueError(f"generator index {i} out of range 1..{len(p) - 1}")
    if p.index(i) < p.index(i + 1):
        swap = {i: i + 1, i + 1: i}
        return tuple(swap.get(v, v) for v in p)
    return p


def hecke_apply_right(p: tuple[int, ...], i: int) -> tuple[int, ...]:
    """
    Act on p by the 0-Hecke generator on the right (position side).

    The entries at positions i and i+1 are exchanged if they increase;
    otherwise p is returned unchanged.  This is the mirror of
    hecke_apply: acting on inverse(p) by hecke_apply(i) and inverting
    again gives the same result.

    >>> hecke_apply_right((1, 2, 3), 2)
    (1, 3, 2)
    >>> hecke_apply_right((1, 3, 2), 2)
    (1, 3, 2)
    """
    if not 1 <= i <= len(p) - 1:
        raise ValueError(f"generator index {i} out of range 1..{len(p) - 1}")
    if p[i - 1] < p[i]:
        return p[: i - 1] + (p[i], p[i - 1]) + p[i + 1 :]
    return p


def eval_hecke_word(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    """
    Evaluate a word in the generators 1..n, rightmost letter first.

    Starting from the identity arrangement of {1, ..., n+1}, the letters
    of the word are applied via hecke_apply from the right end of the
    word to the left end.

    >>> eval_hecke_word((3, 2, 3, 2, 1, 1), 3)
    (4, 1, 3, 2)
    >>> eval_hecke_word((), 3)
    (1, 2, 3, 4)
    """
    p = identity(n + 1)
    for i in reversed(word):
        p = hecke_apply(p, i)
    return p


def eval_hecke_word_ltr(word: tuple[int, ...], n: int) -> tuple[int, ...]:
    """
    Evaluate a word applying its letters leftmost first.

    This is the opposite reading order to eval_hecke_word; the two
    evaluations of the same word are inverse permutations of each other.

    >>> eval_hecke_word_ltr((1, 2), 2)
    (3, 1, 2)
    >>> eval_hecke_word((1, 2), 2)
    (2, 3, 1)
    """
    p = identity(n + 1)
    for i in word:
        p = hecke_apply(p, i)
    return p


def hecke_equivalent(w1: tuple[int, ...], w2: tuple[int, ...], n: int) -> bool:
    """
    True iff the two words evaluate to the same permutation.

    >>> hecke_equivalent((1, 1), (1,), 1)
    True
    >>> hecke_equivalent((1, 2, 1), (2, 1, 2), 2)
    True
    >>> hecke_equivalent((1, 3), (3, 1), 3)
    True
    """
    return eval_hecke_word(w1, n) == eval_hecke_word(w2, n)


def demazure_product(u: tuple[int, ...], v: tuple[int, ...]) -> tuple[int, ...]:
    """
    The permutation represented by concatenating words for u and v.

    Computed by folding a reduced word of v into u one letter at a time;
    the result does not depend on which words are chosen.

    >>> demazure_product((2, 1), (2, 1))
    (2, 1)
    >>> demazure_product((1, 3, 2), (2, 1, 3))
    (3, 1, 2)
    """
    if len(u) != len(v):
        raise ValueError("size mismatch")
    p = u
    for i in lex_min_reduced_word(v):
        p = hecke_apply_right(p, i)
    return p


def bruhat_leq(u: tuple[int, ...], w: tuple[int, ...]) -> bool:
    """
    Bruhat order comparison u <= w, by the rank-matrix criterion:
    u <= w iff for all i, j the count of k <= i with u(k) <= j is at
    least the corresponding count for w.

    >>> bruhat_leq((1, 3, 2), (3, 2, 1))
    True
    >>> bruhat_leq((3, 1, 2), (2, 3, 1))
    False
    """
    if len(u) != len(w):
        raise ValueError("size mismatch")
    size = len(u)
    ranks_u = _rank_table(u)
    ranks_w = _rank_table(w)
    return all(
        ranks_u[i][j] >= ranks_w[i][j]
        for i in range(size)
        for j in range(size)
    )


def _rank_table(p: tuple[int, ...]) -> list[list[int]]:
    """rank[i][j] = #{k <= i+1 : p(k) <= j+1}."""
    size = len(p)
    table = [[0] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            acc = table[i - 1][j] if i else 0
            table[i][j] = acc + (1 if p[i] <= j + 1 else 0)
    return table


@lru_cache(maxsize=None)
def reduced_words(p: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """
    All words of length exactly inversions(p) evaluating to p,
    lexicographically sorted.

    >>> reduced_words((1, 2, 3))
    ((),)
    >>> reduced_words((3, 2, 1))
    ((1, 2, 1), (2, 1, 2))
    >>> reduced_words((2, 1, 3))
    ((1,),)
    """
    check_permutation(p)
    if p == identity(len(p)):
        return ((),)
    words = set()
    for i in range(1, len(p)):
        if p[i - 1] > p[i]:
            shorter = p[: i - 1] + (p[i], p[i - 1]) + p[i + 1 :]
            for w in reduced_words(shorter):
                words.add(w + (i,))
    return tuple(sorted(words))


def lex_min_reduced_word(p: tuple[int, ...]) -> tuple[int, ...]:
    """
    The lexicographically smallest reduced word, built greedily: the
    leading letter is the smallest left descent.

    >>> lex_min_reduced_word((3, 2, 1))
    (1, 2, 1)
    >>> lex_min_reduced_word((1, 2, 3))
    ()
    """
    word = []
    q = p
    ident = identity(len(p))
    while q != ident:
        for i in range(1, len(q)):
            if q.index(i) > q.index(i + 1):  # left descent: i after i+1
                swap = {i: i + 1, i + 1: i}
                q = tuple(swap.get(v, v) for v in q)
                word.append(i)
                break
    return tuple(word)


def hecke_distance(
    target: tuple[int, ...], side: str = "right"
) -> dict[tuple[int, ...], int]:
    """
    For every permutation u of the same size, the least number of
    generators that must still be applied to u (on the given side) to
    reach target; permutations that cannot reach it are absent.  Used
    to prune dead branches during word and factorization enumeration.

    Breadth-first search backwards from target on the action graph.

    >>> hecke_distance((2, 1))[(1, 2)]
    1
    >>> hecke_distance((2, 1))[(2, 1)]
    0
    """
    size = len(target)
    n = size - 1
    apply_fn = hecke_apply_right if side == "right" else hecke_apply
    dist = {target: 0}
    frontier = [target]
    # predecessors of v are the u with u . s_i = v, found by scanning
    # the forward edges of every permutation once
    preds: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for u in _itertools_permutations(range(1, size + 1)):
        u = tuple(u)
        for i in range(1, n + 1):
            preds.setdefault(apply_fn(u, i), []).append(u)
    while frontier:
        nxt = []
        for v in frontier:
            for u in preds.get(v, ()):
                if u not in dist:
                    dist[u] = dist[v] + 1
                    nxt.append(u)
        frontier = nxt
    return dist


def enumerate_hecke_words(
    p: tuple[int, ...], max_len: int
) -> list[tuple[int, ...]]:
    """
    All words of length <= max_len over the alphabet 1..n evaluating to
    p, sorted by length then lexicographically.

    A partial word is extended only while its current evaluation can
    still reach p within the remaining letter budget, so the search
    touches no dead branches.

    >>> enumerate_hecke_words((1, 2), 0)
    [()]
    >>> enumerate_hecke_words((2, 1), 3)
    [(1,), (1, 1), (1, 1, 1)]
    >>> enumerate_hecke_words((3, 2, 1), 3)
    [(1, 2, 1), (2, 1, 2)]
    """
    check_permutation(p)
    n = len(p) - 1
    dist = hecke_distance(p)
    out: list[tuple[int, ...]] = []
    ident = identity(len(p))

    def extend(word: list[int], current: tuple[int, ...]) -> None:
        if current == p:
            out.append(tuple(word))
        remaining = max_len - len(word)
        if remaining == 0:
            return
        for i in range(1, n + 1):
            nxt = hecke_apply_right(current, i)
            if dist.get(nxt, max_len + 1) <= remaining - 1:
                word.append(i)
                extend(word, nxt)
                word.pop()

    if dist.get(ident, max_len + 1) <= max_len:
        extend([], ident)
    return sorted(out, key=lambda w: (len(w), w))


def perm_to_str(p: tuple[int, ...]) -> str:
    """One-line notation, comma separated: (4,1,3,2) -> "4,1,3,2"."""
    return ",".join(str(v) for v in p)


def perm_from_str(text: str) -> tuple[int, ...]:
    """
    Parse comma-separated one-line notation.

    >>> perm_from_str("4,1,3,2")
    (4, 1, 3, 2)
    """
    try:
        p = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse permutation from {text!r}") from exc
    check_permutation(p)
    return p


def word_to_str(word: tuple[int, ...], n: int) -> str:
    """Digit string when the alphabet fits (n <= 9), else comma separated."""
    if n <= 9:
        return "".join(str(i) for i in word)
    return ",".join(str(i) for i in word)


def word_from_str(text: str) -> tuple[int, ...]:
    """
    Parse a word either as a digit string or comma separated.

    >>> word_from_str("3232")
    (3, 2, 3, 2)
    >>> word_from_str("10,2")
    (10, 2)
    """
    if not text:
        return ()
    if "," in text:
        return tuple(int(tok) for tok in text.split(","))
    return tuple(int(ch) for ch in text)
