import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from snakechar.algebra import (
    ZERO,
    NotAProduct,
    dominance,
    dominant_terms,
    factor_into_A,
    greedy_self_check,
    y_to_v,
)
from snakechar.cartan import A_monomial, cartan_data, gammaminus_vertices, v_to_A_inverse
from snakechar.characters import char_by_exchange, truncated_q_character
from snakechar.laurent import LaurentPoly, Monomial, parse_laurent
from snakechar.snakes import SnakeSpec

A3 = cartan_data("A", 3)
B2 = cartan_data("B", 2)


def Ym(**kw):
    return Monomial({("Y", int(k[1]), -int(k[3:])): e for k, e in kw.items()})


def test_dominance():
    assert dominance(Monomial({("Y", 1, -15): 1, ("Y", 2, -6): 1})) == "dominant"
    mixed = Monomial({("Y", 2, -6): 1, ("Y", 2, -10): -1, ("Y", 1, -11): 1})
    assert dominance(mixed) == "neither"
    assert dominance(Monomial({("Y", 3, -8): -1})) == "anti_dominant"
    with pytest.raises(ValueError):
        dominance(Monomial({("z", 1, 0): 1}))


def test_single_dominant_term():
    chi = truncated_q_character(A3, SnakeSpec(((2, -10), (2, -6))))
    assert dominant_terms(chi) == [(Monomial({("Y", 2, -10): 1, ("Y", 2, -6): 1}), 1)]


@pytest.mark.parametrize("family,n", [("A", 1), ("A", 3), ("A", 5), ("B", 2), ("B", 3), ("B", 4)])
def test_greedy_self_check(family, n):
    assert greedy_self_check(cartan_data(family, n))


def test_single_factor():
    assert factor_into_A(A3, A_monomial(A3, (2, -1)).inverse()) == Monomial({("v", 2, -1): 1})


def test_not_a_product():
    with pytest.raises(NotAProduct):
        factor_into_A(A3, Monomial({("Y", 1, -1): 1}))


def test_truncation_gives_zero():
    outside = A_monomial(A3, (2, 1)).inverse()
    assert factor_into_A(A3, outside, truncate_to_window=True) is ZERO
    assert factor_into_A(A3, outside) == Monomial({("v", 2, 1): 1})


@pytest.mark.parametrize("cd", [A3, B2, cartan_data("B", 3)], ids=["A3", "B2", "B3"])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_round_trip(cd, data):
    window = gammaminus_vertices(cd, -14)
    picks = data.draw(st.lists(st.sampled_from(window), max_size=6))
    e = {}
    for v in picks:
        e[("v", *v)] = e.get(("v", *v), 0) + 1
    vmono = Monomial(e)
    assert factor_into_A(cd, v_to_A_inverse(cd, vmono)) == vmono


def test_exchange_quotient_example():
    """The 5-term character of L(Y_{1,-3}Y_{2,0}Y_{3,-3}) from an exchange relation."""
    chi = lambda *pts: truncated_q_character(A3, SnakeSpec(pts))
    got = char_by_exchange([(chi((1, -3), (2, 0)), chi((3, -3), (2, 0)))], chi((2, -2), (2, 0)), chi((2, 0)))
    m = Monomial({("Y", 1, -3): 1, ("Y", 2, 0): 1, ("Y", 3, -3): 1})
    resolve = lambda letter, i, r: A_monomial(A3, (i, r))
    expected = parse_laurent(
        "m(1+A^{-1}_{1,-2}+A^{-1}_{3,-2}+A^{-1}_{1,-2}A^{-1}_{3,-2}+A^{-1}_{1,-2}A^{-1}_{3,-2}A^{-1}_{2,-1})",
        symbols={"m": m}, resolver=resolve)
    assert got == expected
    assert y_to_v(A3, got, m) == parse_laurent("1+v_{1,-2}+v_{3,-2}+v_{1,-2}v_{3,-2}+v_{1,-2}v_{3,-2}v_{2,-1}")


def test_dominant_products_stay_dominant():
    rng = random.Random(3)
    for _ in range(50):
        a = Monomial({("Y", rng.randint(1, 3), -rng.randint(0, 9)): rng.randint(1, 3) for _ in range(3)})
        b = Monomial({("Y", rng.randint(1, 3), -rng.randint(0, 9)): rng.randint(1, 3) for _ in range(3)})
        assert dominance(a * b) == "dominant"


def test_exchange_identity():
    chi = truncated_q_character(A3, SnakeSpec(((2, -6),)))
    other = truncated_q_character(A3, SnakeSpec(((1, -5),)))
    assert char_by_exchange([(chi, other)], LaurentPoly(), other) == chi
