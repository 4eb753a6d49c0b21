"""
Command line front end, installed as ``groth``.

``groth compute`` prints one object for a given permutation: an operator
polynomial, a degree-truncated stable series, or a Q-expansion stratum.
``groth verify`` replays the identity suites at adjustable desk scale
and reports one line per check; report order is fixed.  Identical
invocations print identical bytes.
"""

import argparse
import itertools
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor

from .bijections import (
    arrow_down,
    arrow_up,
    circled_to_double,
    circled_to_double_chain,
    psi,
    psi_inv,
)
from .factorizations import (
    cauchy_sum,
    enumerate_bounded_plain,
    enumerate_circled_bounded,
    enumerate_double_bounded,
    enumerate_hook,
    genfun,
    parse_factorization,
    weight,
)
from .grothendieck import (
    grothendieck_double,
    grothendieck_single,
    staircase_product,
)
from .insertion import insert_word
from .permutations import all_permutations, eval_hecke_word_ltr
from .polynomials import (
    Polynomial,
    coefficient,
    delta,
    exchange_families,
    homogeneous_component,
    monomial,
    pi,
    pretty,
    restrict_variables,
    set_y_equal_x,
    to_json,
    truncate_degree,
)
from .stable import (
    TruncationSpec,
    halfweak_stable,
    omega,
    qschur_expansion,
    stability_check,
    stable_double,
    stable_double_via_tableaux,
    stable_single,
    weak_stable_double,
)
from .tableaux import (
    conjugate,
    enumerate_hecke_tableaux,
    f_coefficient,
    genfun_pt,
    genfun_svt,
    has_i_lattice,
    has_i_starting,
    is_hecke_tableau,
    is_standard_svt,
    outer_shape,
    partitions_inside,
    partitions_of,
    q_schur,
    tableau,
)

__all__ = ["main"]

COMPUTE_TARGETS = (
    "single",
    "double",
    "stable-single",
    "stable-double",
    "halfweak",
    "qschur",
)
SUITE_ORDER = (
    "relations",
    "cauchy",
    "insertion",
    "bijections",
    "tabt",
    "qp",
    "tabtopi",
    "stability",
)


class UsageError(ValueError):
    """Bad input on the command line; reported with exit code 2."""


def parse_perm(text: str) -> tuple[int, ...]:
    """
    One-line notation, comma separated.

    >>> parse_perm("3,1,2")
    (3, 1, 2)
    """
    try:
        w = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise UsageError(f"not a permutation: {text!r}") from None
    if sorted(w) != list(range(1, len(w) + 1)):
        raise UsageError(f"not a permutation of 1..{len(w)}: {text!r}")
    return w


def _bound(value: int | None, default: int) -> int:
    return default if value is None else value


def _in_window(p: Polynomial, m: int) -> Polynomial:
    """Restrict to the first m variables, or pad with unused ones."""
    if m <= p.m:
        return restrict_variables(p, m)
    pad = (0,) * (m - p.m)
    return Polynomial(
        m, {(xe + pad, ye + pad): c for (xe, ye), c in p.terms.items()}
    )


# ---------------------------------------------------------------------------
# compute


def _partition_label(lam: tuple[int, ...]) -> str:
    """
    >>> _partition_label((3, 1))
    '[3,1]'
    """
    return "[" + ",".join(str(part) for part in lam) + "]"


def _stratum(w: tuple[int, ...], d: int) -> dict[tuple[int, ...], int]:
    full = qschur_expansion(w, TruncationSpec(1, d))
    lams = sorted((lam for lam in full if sum(lam) == d), reverse=True)
    return {lam: full[lam] for lam in lams}


def _stratum_text(stratum: dict[tuple[int, ...], int]) -> str:
    if not stratum:
        return "0"
    parts = []
    for lam, c in stratum.items():
        q = "Q" + _partition_label(lam)
        parts.append(q if c == 1 else f"{c}*{q}")
    return " + ".join(parts)


def cmd_compute(args: argparse.Namespace) -> int:
    w = parse_perm(args.perm)
    degree = _bound(args.degree, 4)
    if degree < 0:
        raise UsageError("--degree must be nonnegative")
    window = _bound(args.m, 2)
    if window < 1:
        raise UsageError("--m must be positive")
    if args.what == "qschur":
        stratum = _stratum(w, degree)
        if args.json:
            out = {_partition_label(lam): c for lam, c in stratum.items()}
            print(json.dumps(out, separators=(",", ":")))
        else:
            print(_stratum_text(stratum))
        return 0
    if args.what == "single":
        p = grothendieck_single(w)
    elif args.what == "double":
        p = grothendieck_double(w)
    else:
        model = {
            "stable-single": stable_single,
            "stable-double": stable_double,
            "halfweak": halfweak_stable,
        }[args.what]
        p = model(w, TruncationSpec(window, degree))
    if args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be nonnegative")
        p = _in_window(p, args.n)
    if args.json:
        print(json.dumps(to_json(p), separators=(",", ":")))
    else:
        print(pretty(p))
    return 0


# ---------------------------------------------------------------------------
# verify

Check = tuple[str, bool, str]


def _check(name: str, failures) -> Check:
    bad = next(iter(failures), None)
    if bad is None:
        return (name, True, "")
    bad = str(bad)
    return (name, False, bad if len(bad) <= 120 else bad[:117] + "...")


def _split_degree(rng: random.Random, total: int, m: int) -> tuple[int, ...]:
    cuts = sorted(rng.randint(0, total) for _ in range(max(m - 1, 0)))
    edges = [0, *cuts, total]
    return tuple(b - a for a, b in zip(edges, edges[1:]))


def _random_poly(rng: random.Random, m: int, degree: int) -> Polynomial:
    p = Polynomial(m, {})
    for _ in range(rng.randint(1, 4)):
        xe = _split_degree(rng, rng.randint(0, degree), m)
        ye = tuple(rng.randint(0, 1) for _ in range(m))
        p = p + monomial(m, xe, ye, rng.choice((-3, -2, -1, 1, 2, 3)))
    return p


def suite_relations(b: argparse.Namespace) -> list[Check]:
    m = max(2, min(_bound(b.n, 4), 8))
    degree = max(0, _bound(b.degree, 4))
    trials = max(1, _bound(b.trials, 50))
    rng = random.Random(_bound(b.seed, 0))
    polys = [_random_poly(rng, m, degree) for _ in range(trials)]
    zero = Polynomial(m, {})
    ops = (("delta", delta), ("pi", pi))
    return [
        _check(
            "delta_squared_is_zero",
            (
                f"i={i} on {pretty(p)}"
                for p in polys
                for i in range(1, m)
                if delta(i, delta(i, p)) != zero
            ),
        ),
        _check(
            "pi_squared_is_minus_pi",
            (
                f"i={i} on {pretty(p)}"
                for p in polys
                for i in range(1, m)
                if pi(i, pi(i, p)) + pi(i, p) != zero
            ),
        ),
        _check(
            "operators_commute_far_apart",
            (
                f"{nm} i={i} j={j} on {pretty(p)}"
                for p in polys
                for nm, op in ops
                for i in range(1, m)
                for j in range(i + 2, m)
                if op(i, op(j, p)) != op(j, op(i, p))
            ),
        ),
        _check(
            "operators_satisfy_the_braid_relation",
            (
                f"{nm} i={i} on {pretty(p)}"
                for p in polys
                for nm, op in ops
                for i in range(1, m - 1)
                if op(i, op(i + 1, op(i, p)))
                != op(i + 1, op(i, op(i + 1, p)))
            ),
        ),
    ]


def suite_cauchy(b: argparse.Namespace) -> list[Check]:
    rank = max(1, _bound(b.n, 2))
    rng = random.Random(_bound(b.seed, 0))
    perms = sorted(all_permutations(min(rank, 2) + 1))
    if rank >= 3:
        pool = sorted(all_permutations(rank + 1))
        for _ in range(max(1, _bound(b.trials, 10))):
            perms.append(pool[rng.randrange(len(pool))])
    checks = [
        _check(
            "single_equals_bounded_plain_series",
            (
                f"w={w}"
                for w in perms
                if genfun(enumerate_bounded_plain(w)) != grothendieck_single(w)
            ),
        ),
        _check(
            "double_equals_circled_series",
            (
                f"w={w}"
                for w in perms
                if genfun(enumerate_circled_bounded(w))
                != grothendieck_double(w)
            ),
        ),
        _check(
            "double_equals_split_series",
            (
                f"w={w}"
                for w in perms
                if genfun(enumerate_double_bounded(w))
                != grothendieck_double(w)
            ),
        ),
        _check(
            "double_equals_pairing_sum",
            (
                f"w={w}"
                for w in perms
                if cauchy_sum(w) != grothendieck_double(w)
            ),
        ),
    ]
    n0 = 3 if rank >= 3 else 2
    w0 = tuple(range(n0 + 1, 0, -1))
    circled = enumerate_circled_bounded(w0)
    ok = len(circled) == 3 ** (n0 * (n0 + 1) // 2) and genfun(
        circled
    ) == staircase_product(n0)
    checks.append(
        (
            "longest_element_series_is_the_staircase_product",
            ok,
            "" if ok else f"n={n0}, count={len(circled)}",
        )
    )
    return checks


def suite_insertion(b: argparse.Namespace) -> list[Check]:
    n = max(1, min(_bound(b.n, 3), 4))
    length = max(1, min(_bound(b.degree, 5), 7))
    words = [
        w
        for size in range(length + 1)
        for w in itertools.product(range(1, n + 1), repeat=size)
    ]
    pairs = {w: insert_word(w) for w in words}

    def record_rows(Q):
        rows = {}
        for r, row in enumerate(Q.rows):
            for box in row:
                for e in box:
                    rows[e.value] = r
        return rows

    groups: dict[tuple, list] = {}
    for w in words:
        groups.setdefault((len(w), eval_hecke_word_ltr(w, n)), []).append(w)
    return [
        _check(
            "insertion_lands_on_the_word_of_the_input",
            (
                f"word={w}"
                for w, (P, Q) in pairs.items()
                if not is_hecke_tableau(P, eval_hecke_word_ltr(w, n))
                or not is_standard_svt(Q)
                or outer_shape(P) != outer_shape(Q)
            ),
        ),
        _check(
            "word_descents_appear_in_the_record",
            (
                f"word={w} position={i}"
                for w, (_, Q) in pairs.items()
                for rows in [record_rows(Q)]
                for i in range(1, len(w))
                if (rows[i + 1] > rows[i]) != (w[i - 1] > w[i])
            ),
        ),
        _check(
            "insertion_is_injective_on_each_word_class",
            (
                f"length={size} target={perm}"
                for (size, perm), ws in sorted(groups.items())
                if len({pairs[w] for w in ws}) != len(ws)
            ),
        ),
    ]


def _increasing_subsets(values: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [
        sub
        for r in range(len(values) + 1)
        for sub in itertools.combinations(values, r)
    ]


def suite_bijections(b: argparse.Namespace) -> list[Check]:
    cap = max(2, min(_bound(b.n, 4), 5))
    subs = _increasing_subsets(tuple(range(1, cap + 1)))
    checks = []

    pair = ((1, 2, 3, 5, 6, 8), (8, 7, 5, 2))
    down = arrow_down(pair)
    ok = down == ((8, 6, 5, 3), (1, 2, 3, 5, 6, 7)) and arrow_up(down) == pair
    checks.append(
        ("ladder_descent_matches_the_worked_pair", ok, "" if ok else f"got {down}")
    )

    f_j = parse_factorization("(9 7 6 4 4o 3o 2 2o)", "circled", 9).factors[0]
    moved = psi(2, 3, f_j, (5, 6, 8, 9))
    want = parse_factorization("(9 8 6 5 3o 2 2o)", "circled", 9).factors[0]
    ok = moved == ((4, 5, 7, 8, 9), want) and psi_inv(2, 3, *moved) == (
        f_j,
        (5, 6, 8, 9),
    )
    checks.append(
        ("factor_move_matches_the_worked_example", ok, "" if ok else f"got {moved}")
    )

    chain = circled_to_double_chain(
        parse_factorization("(3 3o 2o 1 1o)(3o 2)(3 3o)()", "circled_bounded", 3)
    )
    ok = (
        len(chain) == 11
        and chain[0] == "(3 3o 2o 1 1o)(3o 2)(3 3o)()"
        and chain[-1] == "()(3)(2 3)(1 2)|(2 1)(3)(3)()"
    )
    checks.append(
        ("rewrite_chain_reaches_the_worked_output", ok, "" if ok else f"got {chain[-1]}")
    )

    checks.append(
        _check(
            "ladder_moves_invert_each_other",
            (
                f"pair={(bb, cc)}"
                for bb in subs
                for cc in map(lambda s: tuple(reversed(s)), subs)
                if arrow_up(arrow_down((bb, cc))) != (bb, cc)
                or arrow_down(arrow_up((cc, bb))) != (cc, bb)
            ),
        )
    )

    def rewrite_failures():
        for w in sorted(all_permutations(3)):
            image = {}
            for f in enumerate_circled_bounded(w):
                g = circled_to_double(f)
                if weight(g) != weight(f):
                    yield f"w={w} weight changed on {f}"
                    return
                image[str(g)] = g
            target = {str(g) for g in enumerate_double_bounded(w)}
            if set(image) != target:
                yield f"w={w} image mismatch"

    checks.append(
        _check("rewrite_is_a_weight_preserving_bijection", rewrite_failures())
    )
    return checks


def _scattered(outer: tuple[int, ...], inner: tuple[int, ...]) -> bool:
    pad = tuple(inner) + (0,) * (len(outer) - len(inner))
    if any(o - i > 1 for o, i in zip(outer, pad)):
        return False
    cols = [pad[r] for r in range(len(outer)) if outer[r] > pad[r]]
    return len(cols) == len(set(cols))


def _weak_tableau_formula(w: tuple[int, ...], t: TruncationSpec) -> Polynomial:
    out = Polynomial(t.m, {})
    for T in enumerate_hecke_tableaux(w, max_boxes=t.D):
        shape = outer_shape(T)
        for mu in partitions_inside(shape):
            wy = omega(genfun_svt(conjugate(mu), t.m, t.D), "x")
            for rho in partitions_inside(mu):
                if not _scattered(mu, rho):
                    continue
                wx = omega(genfun_svt(shape, t.m, t.D, inner=rho), "x")
                out = out + truncate_degree(wx * exchange_families(wy), t.D)
    return out


def _hecke_expansion_matches(w: tuple[int, ...], t: TruncationSpec) -> bool:
    counts: dict[tuple[int, ...], int] = {}
    for T in enumerate_hecke_tableaux(w, max_boxes=t.D):
        sh = outer_shape(T)
        counts[sh] = counts.get(sh, 0) + 1
    rhs = Polynomial(t.m, {})
    for sh, mult in counts.items():
        rhs = rhs + genfun_svt(sh, t.m, t.D) * mult
    return stable_single(w, t) == truncate_degree(rhs, t.D)


def suite_tabt(b: argparse.Namespace) -> list[Check]:
    m = max(1, _bound(b.m, 3))
    D = max(1, _bound(b.degree, 5))
    t = TruncationSpec(m, D)
    t_weak = TruncationSpec(m, max(D - 1, 1))
    checks = [
        _check(
            "skew_tableau_series_match_the_split_model",
            (
                f"w={w}"
                for w in sorted(all_permutations(3))
                if stable_double_via_tableaux(w, t) != stable_double(w, t)
            ),
        ),
        _check(
            "conjugated_series_match_the_weak_model",
            (
                f"w={w}"
                for w in sorted(all_permutations(3))
                if _weak_tableau_formula(w, t_weak)
                != weak_stable_double(w, t_weak)
            ),
        ),
        _check(
            "single_series_expands_over_hecke_tableaux",
            (
                f"w={w}"
                for w in sorted(all_permutations(4))
                if not _hecke_expansion_matches(w, t)
            ),
        ),
    ]
    shapes = sorted(
        outer_shape(T) for T in enumerate_hecke_tableaux((3, 1, 2, 5, 4))
    )
    ok = shapes == [(2, 1), (3,), (3, 1)]
    checks.append(
        (
            "hecke_tableaux_of_the_running_example",
            ok,
            "" if ok else f"shapes={shapes}",
        )
    )
    return checks


ONE_FACTOR_HOOKS = (
    "(1 1 2 4)",
    "(1o 1 2 4)",
    "(1 2 2 4)",
    "(1o 2 2 4)",
    "(1 2 4 4)",
    "(1o 2 4 4)",
    "(4o 1 1 2)",
    "(4o 1o 1 2)",
    "(4o 1 2 2)",
    "(4o 1o 2 2)",
    "(4o 1 2 4)",
    "(4o 1o 2 4)",
)


def suite_qp(b: argparse.Namespace) -> list[Check]:
    D = max(1, _bound(b.degree, 4))
    running = (3, 1, 2, 5, 4)
    checks = []

    stratum = _stratum(running, 4)
    ok = stratum == {(4,): 6, (3, 1): 4}
    checks.append(
        (
            "running_example_stratum",
            ok,
            "{(4):6,(3,1):4} matched" if ok else f"got {stratum}",
        )
    )

    merged = set_y_equal_x(halfweak_stable(running, TruncationSpec(1, 4)))
    got = coefficient(merged, (4,))
    checks.append(
        ("merged_degree_four_coefficient", got == 12, "" if got == 12 else f"got {got}")
    )

    ones = tuple(
        str(f)
        for f in enumerate_hook(running, 1, 4)
        if sum(len(part) for part in f.factors) == 4
    )
    ok = ones == ONE_FACTOR_HOOKS
    checks.append(
        ("one_factor_hook_census", ok, "" if ok else f"got {len(ones)} hooks")
    )

    def pipeline_failures():
        t = TruncationSpec(2, D)
        for w in [*sorted(all_permutations(3)), running]:
            out = qschur_expansion(w, t)
            rhs = Polynomial(t.m, {})
            for lam, c in out.items():
                if c <= 0:
                    yield f"w={w} nonpositive coefficient at {lam}"
                    return
                rhs = rhs + q_schur(lam, t.m, t.D) * c
            lhs = set_y_equal_x(halfweak_stable(w, t))
            for d in range(t.D + 1):
                if homogeneous_component(lhs, d) != homogeneous_component(
                    rhs, d
                ):
                    yield f"w={w} degree={d}"
                    return

    checks.append(
        _check("q_expansion_matches_the_merged_hook_model", pipeline_failures())
    )

    strict = [
        lam
        for size in range(5)
        for lam in partitions_of(size)
        if all(a > b for a, b in zip(lam, lam[1:]))
    ]

    def stembridge_failures():
        for size in range(5):
            for mu in partitions_of(size):
                lhs = set_y_equal_x(genfun_pt(mu, 4))
                rhs = Polynomial(4, {})
                for lam in strict:
                    if sum(lam) == size:
                        c = f_coefficient(mu, lam)
                        if c:
                            rhs = rhs + q_schur(lam, 4, size) * c
                if lhs != rhs:
                    yield f"mu={mu}"

    checks.append(
        _check("primed_series_expand_into_q_polynomials", stembridge_failures())
    )

    P = tableau(
        [
            ["1'", 1, 1, 1, 1, 1],
            [1, "2'", 2, 2],
            ["2'", 2, "3'", 3],
            [2, "3'", 3, 4],
            [3, "4'", 4],
        ]
    )
    starting = [has_i_starting(P, i) for i in range(1, 5)]
    lattice = [has_i_lattice(P, i) for i in range(1, 5)]
    ok = starting == [True, True, True, False] and lattice == [
        True,
        True,
        True,
        False,
    ]
    checks.append(
        (
            "finger_scan_verdicts",
            ok,
            "" if ok else f"starting={starting} lattice={lattice}",
        )
    )
    return checks


def suite_tabtopi(b: argparse.Namespace) -> list[Check]:
    top = max(0, min(_bound(b.n, 4), 6))
    return [
        _check(
            "two_letter_columns_match_the_operator_image",
            (
                f"lengths={(l1, l2)}"
                for l1 in range(top + 1)
                for l2 in range(l1 + 1)
                if genfun_svt(
                    tuple(p for p in (l1, l2) if p), 2, 2 * (l1 + l2) + 2
                )
                != pi(1, monomial(2, (l1 + 1, l2), ()))
            ),
        )
    ]


def suite_stability(b: argparse.Namespace) -> list[Check]:
    degree = max(1, _bound(b.degree, 3))
    wide = [
        ("stable_single", (2, 1), TruncationSpec(2, degree)),
        ("stable_double", (2, 1), TruncationSpec(1, degree)),
        ("stable_double_via_tableaux", (2, 1), TruncationSpec(1, degree)),
        ("halfweak_stable", (3, 1, 2), TruncationSpec(2, degree)),
        ("weak_stable_double", (2, 1), TruncationSpec(3, 2)),
        ("weak_symmetric", (1,), TruncationSpec(2, 2)),
    ]
    checks = [
        _check(
            "models_are_stable_in_wide_windows",
            (
                f"{name} {arg} m={t.m} D={t.D}"
                for name, arg, t in wide
                if not stability_check(name, arg, t)
            ),
        )
    ]
    narrow = not stability_check("weak_symmetric", (1,), TruncationSpec(1, 2))
    checks.append(
        (
            "weak_model_detects_a_narrow_window",
            narrow,
            "" if narrow else "expected an unstable verdict",
        )
    )
    return checks


SUITES = {
    "relations": suite_relations,
    "cauchy": suite_cauchy,
    "insertion": suite_insertion,
    "bijections": suite_bijections,
    "tabt": suite_tabt,
    "qp": suite_qp,
    "tabtopi": suite_tabtopi,
    "stability": suite_stability,
}


def _thread_cap() -> int:
    try:
        return max(1, int(os.environ.get("GROTH_THREADS", "1")))
    except ValueError:
        return 1


def cmd_verify(args: argparse.Namespace) -> int:
    chosen = args.suite_pos
    if args.suite is not None:
        if chosen is not None and chosen != args.suite:
            raise UsageError("suite named twice, with different names")
        chosen = args.suite
    names = list(SUITE_ORDER) if chosen in (None, "all") else [chosen]
    threads = min(_thread_cap(), len(names))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda nm: SUITES[nm](args), names))
    else:
        results = [SUITES[nm](args) for nm in names]
    rows = [
        (nm, check) for nm, checks in zip(names, results) for check in checks
    ]
    if args.json:
        payload = [
            {"suite": nm, "check": cname, "ok": ok, "detail": detail}
            for nm, (cname, ok, detail) in rows
        ]
        print(json.dumps(payload, separators=(",", ":")))
    else:
        for nm, (cname, ok, detail) in rows:
            tag = "ok" if ok else "FAIL"
            suffix = f": {detail}" if detail else ""
            print(f"{tag} {nm}.{cname}{suffix}")
    return 0 if all(ok for _, (_, ok, _) in rows) else 3


# ---------------------------------------------------------------------------
# wiring


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="groth",
        description="Grothendieck polynomial models and identity suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--n",
        type=int,
        default=None,
        help="variable window for operator polynomials; group rank or "
        "size bound for suites",
    )
    shared.add_argument(
        "--m",
        type=int,
        default=None,
        help="variables per family for truncated models (default 2; "
        "suites default 3)",
    )
    shared.add_argument(
        "--degree",
        type=int,
        default=None,
        help="total degree cap for truncated models; per-suite size bound",
    )
    shared.add_argument(
        "--json", action="store_true", help="machine-readable output"
    )

    comp = sub.add_parser(
        "compute", parents=[shared], help="print one object"
    )
    comp.add_argument("what", choices=COMPUTE_TARGETS)
    comp.add_argument(
        "--perm", required=True, help="one-line notation, e.g. 3,1,2"
    )

    ver = sub.add_parser(
        "verify", parents=[shared], help="replay an identity suite"
    )
    ver.add_argument(
        "suite_pos",
        nargs="?",
        choices=(*SUITE_ORDER, "all"),
        metavar="suite",
        help="suite name (default: all)",
    )
    ver.add_argument("--suite", choices=(*SUITE_ORDER, "all"))
    ver.add_argument("--trials", type=int, default=None)
    ver.add_argument("--seed", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "compute":
            return cmd_compute(args)
        return cmd_verify(args)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except Exception as err:
        print(f"internal error: {err!r}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
