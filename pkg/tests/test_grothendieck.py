from grothpoly.grothendieck import (
    grothendieck_double,
    grothendieck_single,
    operator_word,
    staircase_monomial,
    staircase_product,
)
from grothpoly.permutations import (
    all_permutations,
    compose,
    inverse,
    inversions,
    longest_element,
    reduced_words,
)
from grothpoly.polynomials import (
    constant,
    monomial,
    pi_word,
    pretty,
    substitute_zero,
    total_degree,
    x_var,
    y_var,
)


def test_staircase_monomial():
    assert staircase_monomial(1) == x_var(1, 2)
    assert staircase_monomial(2) == monomial(3, (2, 1, 0))
    assert staircase_monomial(3) == monomial(4, (3, 2, 1, 0))


def test_staircase_product():
    assert staircase_product(0) == constant(1, 1)
    x1, y1 = x_var(1, 2), y_var(1, 2)
    assert staircase_product(1) == x1 + y1 + x1 * y1
    # 3 factors, each a choice of 3 monomials
    n2 = staircase_product(2)
    assert sum(abs(c) for c in n2.terms.values()) <= 27
    assert n2.terms[((2, 1, 0), (0, 0, 0))] == 1  # pure-x staircase term


def test_longest_element_is_the_base_case():
    for size in (2, 3, 4):
        w0 = longest_element(size)
        assert operator_word(w0) == ()
        assert grothendieck_single(w0) == staircase_monomial(size - 1)
        assert grothendieck_double(w0) == staircase_product(size - 1)


def test_identity_collapses_to_one():
    for size in (2, 3, 4):
        assert grothendieck_single((*range(1, size + 1),)) == constant(1, size)
        assert grothendieck_double((*range(1, size + 1),)) == constant(1, size)


def test_pinned_small_values():
    assert pretty(grothendieck_single((2, 1))) == "x1"
    assert pretty(grothendieck_single((3, 1, 2))) == "x1^2"
    assert pretty(grothendieck_single((1, 3, 2))) == "x1 + x2 + x1*x2"
    assert pretty(grothendieck_double((2, 1))) == "x1 + y1 + x1*y1"


def test_double_restricts_to_single():
    for w in all_permutations(4):
        assert substitute_zero(grothendieck_double(w), "y", 0) == grothendieck_single(w)


def test_lowest_degree_is_the_length():
    for w in all_permutations(4):
        p = grothendieck_single(w)
        assert min(total_degree(k) for k in p.terms) == inversions(w)


def test_reduced_word_independence():
    for w in all_permutations(4):
        target = compose(inverse(w), longest_element(4))
        results = {
            pi_word(word, staircase_monomial(3)) for word in reduced_words(target)
        }
        assert len(results) == 1
        assert results.pop() == grothendieck_single(w)
