import itertools
import json

import pytest

from grothpoly.factorizations import enumerate_plain_unbounded, genfun
from grothpoly.permutations import all_permutations, eval_hecke_word_ltr
from grothpoly.polynomials import (
    Polynomial,
    coefficient,
    monomial,
    pi,
    pretty,
    set_y_equal_x,
    substitute_zero,
    truncate_degree,
)
from grothpoly.tableaux import (
    Entry,
    Tableau,
    check_partition,
    conjugate,
    contains,
    enumerate_hecke_tableaux,
    f_coefficient,
    genfun_psmt,
    genfun_psvt,
    genfun_pt,
    genfun_svt,
    has_i_lattice,
    has_i_starting,
    is_hecke_tableau,
    is_oft,
    is_psmt,
    is_psvt,
    is_pt,
    is_standard_svt,
    is_svt,
    oft_count,
    outer_shape,
    partitions_inside,
    partitions_of,
    pretty_tableau,
    q_schur,
    tableau,
    tableau_from_json,
    tableau_to_json,
    weight_of,
)
from grothpoly.tableaux import _pt_fillings


# ---------------------------------------------------------------------------
# partitions


def test_conjugate():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert conjugate((2, 1, 1)) == (3, 1)
    assert conjugate(()) == ()
    for n in range(7):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_partitions_of():
    assert partitions_of(0) == [()]
    assert partitions_of(4, 3) == [(3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(partitions_of(6)) == 11


def test_partitions_inside_matches_filter():
    for shape in [(), (1,), (3,), (2, 2), (3, 2, 1), (4, 1)]:
        brute = sorted(
            {
                p
                for n in range(sum(shape) + 1)
                for p in partitions_of(n)
                if contains(shape, p)
            },
            key=lambda p: (len(p), p),
        )
        assert partitions_inside(shape) == brute


def test_check_partition_rejects():
    with pytest.raises(ValueError):
        check_partition((1, 2))
    with pytest.raises(ValueError):
        check_partition((2, 0))


# ---------------------------------------------------------------------------
# validators on the worked tableaux


PSVT_EXAMPLE = tableau(
    [["1'2'", "2'3'", "123"], ["3'1", "23", "4"], ["12", "34"]]
)

PSMT_EXAMPLE = tableau(
    [["1'11", "12'", "23'"], ["2'", "2", "3'33"], ["2'3'", "3"]]
)

OFT_INNER = (4, 3, 2, 1)
OFT_EXAMPLE = tableau(
    [[4, 2], [3, 2, 1], [2, 2, 1], [1, 1, 1]], inner=OFT_INNER
)

BIG_PT = tableau(
    [
        ["1'", 1, 1, 1, 1, 1],
        [1, "2'", 2, 2],
        ["2'", 2, "3'", 3],
        [2, "3'", 3, 4],
        [3, "4'", 4],
    ]
)


def test_psvt_example():
    assert is_psvt(PSVT_EXAMPLE)
    assert weight_of(PSVT_EXAMPLE) == ((3, 3, 3, 2), (1, 2, 2, 0))


def test_psvt_counter_cases():
    # unprimed value twice in one row
    assert not is_psvt(tableau([[1, 1]]))
    # primed value twice in one column
    assert not is_psvt(tableau([["1'"], ["1'"]]))
    # split order: primed may not follow unprimed inside a box
    assert not is_psvt(tableau([["1", "2'"]]))
    # unprimed may repeat down a column
    assert is_psvt(tableau([[1], [1]]))


def test_psmt_example():
    assert is_psmt(PSMT_EXAMPLE)
    assert weight_of(PSMT_EXAMPLE) == ((3, 2, 3), (1, 3, 3))


def test_psmt_counter_cases():
    # unprimed value in two boxes of a column
    assert not is_psmt(tableau([[1], [1]]))
    # primed value twice in one box
    twice = Tableau((((Entry(1, True), Entry(1, True)),),))
    assert not is_psmt(twice)
    # primed value in two boxes of a row
    assert not is_psmt(tableau([["1'", "1'2"]]))
    # unprimed may repeat inside a box and along a row
    assert is_psmt(tableau([["11", 1]]))


def test_oft_example():
    assert is_oft(OFT_EXAMPLE, OFT_INNER)


def test_oft_counter_cases():
    # entry above the row flag
    assert not is_oft(tableau([[3]], inner=(2,)), (2,))
    # rows must weakly decrease
    assert not is_oft(tableau([[1, 2]], inner=(2,)), (2,))
    # columns must strictly decrease
    assert not is_oft(
        tableau([[2, 2], [2]], inner=(2, 2)), (2, 2)
    )
    assert is_oft(tableau([[2, 2], [1]], inner=(2, 2)), (2, 2))


def test_standard_svt():
    assert is_standard_svt(tableau([["12", 4], [3]]))
    # 3 repeats: not a partition of {1..N}
    assert not is_standard_svt(tableau([[1, 3], [3]]))
    # weak row violates strictness
    assert not is_standard_svt(tableau([["12", 2], [3]]))


def test_svt_buch_orientation():
    # equal values may sit in adjacent boxes of a row ...
    assert is_svt(tableau([[1, 1]]))
    # ... but not of a column
    assert not is_svt(tableau([[1], [1]]))
    assert is_svt(tableau([["12", 2], [3]]))
    assert not is_svt(tableau([["12", 1]]))


def test_pt():
    assert is_pt(tableau([["1'", 1], [1]]))
    assert not is_pt(tableau([[1, 1], [1]]))
    assert not is_pt(tableau([["12"]]))  # two entries in a box
    assert is_pt(Tableau(()))


# ---------------------------------------------------------------------------
# Hecke tableaux


def test_hecke_tableau_validator():
    T = tableau([[1, 2], [4]])
    assert is_hecke_tableau(T, (3, 1, 2, 5, 4))
    assert not is_hecke_tableau(T, (1, 3, 2, 5, 4))
    # weak row is not allowed
    assert not is_hecke_tableau(tableau([[1, 1]]), (2, 1, 3))


def test_enumerate_hecke_tableaux_pinned():
    hts = enumerate_hecke_tableaux((3, 1, 2, 5, 4))
    rows = [[[e.value for (e,) in row] for row in T.rows] for T in hts]
    assert rows == [[[1, 2], [4]], [[1, 2, 4]], [[1, 2, 4], [4]]]
    assert enumerate_hecke_tableaux((1, 2, 3)) == [Tableau(())]
    single = enumerate_hecke_tableaux((2, 1))
    assert [outer_shape(T) for T in single] == [(1,)]


def test_enumerate_hecke_tableaux_respects_cap():
    hts = enumerate_hecke_tableaux((3, 1, 2, 5, 4), max_boxes=3)
    assert [outer_shape(T) for T in hts] == [(2, 1), (3,)]


def test_enumerated_hecke_tableaux_validate():
    for w in all_permutations(4):
        for T in enumerate_hecke_tableaux(w):
            assert is_hecke_tableau(T, w)


def column_word(T):
    cols = {}
    for r, row in enumerate(T.rows):
        for c, box in enumerate(row):
            cols.setdefault(c, []).append((r, box[0].value))
    return tuple(
        v
        for c in sorted(cols)
        for _, v in sorted(cols[c], reverse=True)
    )


def test_hecke_tableau_row_and_column_words_agree():
    for w in all_permutations(4):
        for T in enumerate_hecke_tableaux(w):
            rw = tuple(
                e.value
                for row in reversed(T.rows)
                for box in row
                for e in box
            )
            assert eval_hecke_word_ltr(rw, 3) == w
            assert eval_hecke_word_ltr(column_word(T), 3) == w


# ---------------------------------------------------------------------------
# generating polynomials


def test_genfun_svt_pinned():
    assert pretty(genfun_svt((1,), 2, 2)) == "x1 + x2 + x1*x2"
    assert pretty(genfun_svt((1, 1), 2, 2)) == "x1*x2"
    assert pretty(genfun_svt((), 3, 2)) == "1"


def test_genfun_svt_skew_factors():
    # the two boxes of (2,1)/(1) are independent
    one = genfun_svt((1,), 2, 3)
    assert genfun_svt((2, 1), 2, 3, inner=(1,)) == truncate_degree(
        one * one, 3
    )


def test_genfun_svt_matches_unbounded_factorizations():
    m, D = 3, 5
    for w in all_permutations(4):
        lhs = truncate_degree(
            genfun(enumerate_plain_unbounded(w, m, D), m), D
        )
        rhs = Polynomial(m, {})
        shape_counts = {}
        for T in enumerate_hecke_tableaux(w, D):
            sh = outer_shape(T)
            shape_counts[sh] = shape_counts.get(sh, 0) + 1
        for sh, mult in shape_counts.items():
            rhs = rhs + genfun_svt(sh, m, D) * mult
        assert lhs == truncate_degree(rhs, D)


def test_genfun_svt_row_shapes_match_operator_image():
    for l1 in range(5):
        for l2 in range(l1 + 1):
            shape = tuple(p for p in (l1, l2) if p)
            D = 2 * (l1 + l2) + 2
            lhs = genfun_svt(shape, 2, D)
            rhs = pi(1, monomial(2, (l1 + 1, l2), ()))
            assert lhs == rhs, (l1, l2)


def test_genfun_psvt_pinned():
    assert pretty(genfun_psvt((1,), 1, 2)) == "x1 + y1 + x1*y1"


def test_genfun_psvt_unprimed_part():
    # dropping primed entries transposes the family: rows go strict,
    # columns weak, so the restriction is the conjugate-shape series
    for shape in [(1,), (2,), (1, 1), (2, 1), (2, 2), (3, 1)]:
        for m, D in [(2, 4), (3, 5)]:
            restricted = substitute_zero(genfun_psvt(shape, m, D), "y", 0)
            assert restricted == genfun_svt(conjugate(shape), m, D)


def test_genfun_pt_degree_and_empty():
    assert pretty(genfun_pt((), 2)) == "1"
    p = genfun_pt((2, 1), 3)
    for (xe, ye), coeff in p.terms.items():
        assert coeff > 0
        assert sum(xe) + sum(ye) == 3


def test_genfun_psmt_decomposes_over_flagged_fillings():
    m, D = 3, 5
    for mu in [(1,), (2,), (1, 1), (2, 1), (3,)]:
        lhs = truncate_degree(genfun_psmt(mu, m, D), D)
        rhs = Polynomial(m, {})
        for total in range(sum(mu), D + 1):
            for lam in partitions_of(total):
                if len(lam) == len(mu) and contains(lam, mu):
                    k = oft_count(lam, mu)
                    if k:
                        rhs = rhs + genfun_pt(lam, m) * k
        assert lhs == truncate_degree(rhs, D), mu


# ---------------------------------------------------------------------------
# over flagged counting


def brute_oft_count(mu, rho):
    rows = [
        [(r, c) for c in range(rho[r], mu[r])] for r in range(len(mu))
    ]
    if len(mu) > len(rho):
        return 0
    boxes = [b for row in rows for b in row]
    pools = [range(1, rho[r] + 1) for r, _ in boxes]
    total = 0
    for combo in itertools.product(*pools):
        filling = dict(zip(boxes, combo))
        grid = [
            [filling[(r, c)] for c in range(rho[r], mu[r])]
            for r in range(len(mu))
        ]
        T = tableau(grid, inner=rho)
        if is_oft(T, rho):
            total += 1
    return total


def test_oft_count_pinned():
    assert oft_count((3, 1), (2, 1)) == 2
    assert oft_count((2, 2), (2, 1)) == 1
    assert oft_count((4,), (3,)) == 3
    assert oft_count((2, 1), (2, 1)) == 1
    assert oft_count((2,), (1,)) == 1
    assert oft_count((2, 1, 1), (2, 1)) == 0


def test_oft_count_matches_brute_force():
    cases = [
        ((3, 1), (2, 1)),
        ((2, 2), (2, 1)),
        ((4,), (3,)),
        ((4, 2), (3, 2)),
        ((3, 3), (2, 2)),
        ((4, 3, 1), (3, 2, 1)),
        ((6, 6, 5, 4), (4, 3, 2, 1)),
    ]
    for mu, rho in cases:
        assert oft_count(mu, rho) == brute_oft_count(mu, rho), (mu, rho)


def test_oft_count_requires_containment():
    with pytest.raises(ValueError):
        oft_count((2,), (3,))


# ---------------------------------------------------------------------------
# Q-Schur


def test_q_schur_pinned():
    assert pretty(q_schur((1,), 2, 4)) == "2*x1 + 2*x2"
    assert coefficient(q_schur((4,), 1, 4), (4,)) == 2
    assert coefficient(q_schur((3, 1), 2, 6), (4, 0)) == 0


def test_q_schur_rejects_non_strict():
    with pytest.raises(ValueError):
        q_schur((2, 2), 2, 4)


def test_q_schur_degree_bound():
    assert q_schur((3, 1), 2, 3) == Polynomial(2, {})
    p = q_schur((2, 1), 3, 3)
    assert all(sum(xe) == 3 for (xe, _) in p.terms)


def test_pt_series_expands_into_q_schur():
    # setting y equal to x turns the primed-tableau series into a
    # nonnegative combination of Q-polynomials
    m = 4
    strict = [
        lam
        for n in range(5)
        for lam in partitions_of(n)
        if all(a > b for a, b in zip(lam, lam[1:]))
    ]
    for n in range(5):
        for mu in partitions_of(n):
            lhs = set_y_equal_x(genfun_pt(mu, m))
            rhs = Polynomial(m, {})
            for lam in strict:
                if sum(lam) == n:
                    f = f_coefficient(mu, lam)
                    assert f >= 0
                    if f:
                        rhs = rhs + q_schur(lam, m, n) * f
            assert lhs == rhs, mu


# ---------------------------------------------------------------------------
# finger scans and the F coefficients


def test_big_pt_verdicts():
    assert is_pt(BIG_PT)
    assert [has_i_starting(BIG_PT, i) for i in range(1, 5)] == [
        True,
        True,
        True,
        False,
    ]
    assert [has_i_lattice(BIG_PT, i) for i in range(1, 5)] == [
        True,
        True,
        True,
        False,
    ]


def test_finger_scans_on_empty():
    empty = Tableau(())
    for i in range(1, 4):
        assert has_i_starting(empty, i)
        assert has_i_lattice(empty, i)


def test_finger_scans_require_pt():
    with pytest.raises(ValueError):
        has_i_starting(tableau([["12"]]), 1)
    with pytest.raises(ValueError):
        has_i_lattice(tableau([["12"]]), 1)


def test_f_coefficient_pinned():
    assert f_coefficient((), ()) == 1
    assert f_coefficient((4,), (4,)) == 1
    assert f_coefficient((3, 1), (4,)) == 1
    assert f_coefficient((3, 1), (3, 1)) == 1
    assert f_coefficient((2, 2), (3, 1)) == 1
    assert f_coefficient((2, 2), (4,)) == 0
    assert f_coefficient((4,), (3, 1)) == 0
    assert f_coefficient((2,), (3,)) == 0  # size mismatch


def qualifying_weights(mu, cap):
    out = {}
    for T in _pt_fillings(mu, cap):
        if all(
            has_i_starting(T, i) and has_i_lattice(T, i)
            for i in range(1, cap + 1)
        ):
            x, y = weight_of(T)
            comb = tuple(a + b for a, b in zip(x, y))
            while comb and comb[-1] == 0:
                comb = comb[:-1]
            out[comb] = out.get(comb, 0) + 1
    return out


def test_f_coefficient_cap_is_saturated():
    # the entry cap used internally never cuts off a qualifying filling
    for n in range(6):
        for mu in partitions_of(n):
            cap = max(n, 1)
            assert qualifying_weights(mu, cap) == qualifying_weights(
                mu, cap + 2
            ), mu


# ---------------------------------------------------------------------------
# serialization and layout


def test_tableau_json_roundtrip():
    for T in [
        PSVT_EXAMPLE,
        PSMT_EXAMPLE,
        OFT_EXAMPLE,
        BIG_PT,
        Tableau(()),
    ]:
        blob = json.dumps(tableau_to_json(T))
        assert tableau_from_json(json.loads(blob)) == T


def test_tableau_json_shape_fields():
    data = tableau_to_json(OFT_EXAMPLE)
    assert data["outer"] == [6, 6, 5, 4]
    assert data["inner"] == [4, 3, 2, 1]
    assert data["boxes"][0] == [["4"], ["2"]]


def test_pretty_tableau():
    assert pretty_tableau(tableau([[1, 2], [3]])) == "1 2\n3"
    skew = pretty_tableau(tableau([[4, 2], [1]], inner=(2,)))
    assert skew.splitlines()[0] == ". . 4 2"


def test_weight_of_empty():
    assert weight_of(Tableau(())) == ((), ())
