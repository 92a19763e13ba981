from math import comb

import pytest

from snakechar.algebra import ZERO
from snakechar.cartan import cartan_data, kr_lowest_monomial, membership
from snakechar.laurent import Monomial
from snakechar.paths import (
    NotInImage,
    NotInX,
    cells_between_typeA,
    corners,
    enumerate_nonoverlapping,
    enumerate_paths,
    height_monomial,
    highest_path,
    in_P_prime,
    iota,
    iota_inv,
    is_nonoverlapping,
    lowest_path,
    lowest_prime_path,
    m_of_path,
    strictly_above,
)

A3 = cartan_data("A", 3)
B2 = cartan_data("B", 2)
B3 = cartan_data("B", 3)


def v(*pairs):
    return Monomial({("v", i, r): 1 for i, r in pairs})


def window(cd, lo=-12, hi=4):
    return [(i, k) for i in cd.nodes() for k in range(lo, hi) if membership(cd, "X", (i, k))]


def test_small_counts():
    assert len(enumerate_paths(cartan_data("A", 4), (2, 0))) == 10
    assert len(enumerate_paths(B3, (3, 2))) == 8
    assert len(enumerate_paths(B3, (2, 1))) > comb(5, 2)


@pytest.mark.parametrize("n,i,count", [(2, 1, 5), (3, 1, 7), (3, 2, 22), (4, 1, 9), (4, 2, 37), (4, 3, 93)])
def test_type_b_counts_are_kr_dimensions(n, i, count):
    # fundamental KR modules of B_n restrict to Lambda^i + Lambda^{i-2} + ... of the vector representation
    cd = cartan_data("B", n)
    k = next(k for k in range(0, -8, -1) if membership(cd, "X", (i, k)))
    assert len(enumerate_paths(cd, (i, k))) == count == sum(comb(2 * n + 1, j) for j in range(i, -1, -2))


def test_not_in_x():
    with pytest.raises(NotInX):
        enumerate_paths(A3, (1, -12))


def test_type_a_endpoints():
    n = 3
    for p in enumerate_paths(A3, (2, -6)):
        assert p.points[0] == (0, 2 * (2 - 6)) and p.points[-1] == (n + 1, 2 * (n + 1 - 2 - 6))
        assert all(abs(b[1] - a[1]) == 2 for a, b in zip(p.points, p.points[1:]))


def test_type_b_shape():
    for p in enumerate_paths(B3, (3, 2)):
        assert p.points[-1][0] == 5 and p.points[-1][1] % 2 == 1
        assert p.points[0][0] == 0  # 2 = 2 mod 4
    for p in enumerate_paths(B3, (3, 0)):
        assert p.points[0][0] == 10


def test_iota():
    assert iota(B3, (3, 2)) == (5, 2)
    for k in range(-11, 12, 2):
        assert iota_inv(B3, iota(B3, (2, k))) == (2, k)
    with pytest.raises(NotInImage):
        iota_inv(B3, (0, 3))


@pytest.mark.parametrize("cd", [A3, cartan_data("A", 4), B2, B3], ids=["A3", "A4", "B2", "B3"])
def test_extreme_paths(cd):
    for pt in window(cd, -10, 2):
        paths = enumerate_paths(cd, pt)
        assert sum(1 for p in paths if not p.corners[1]) == 1
        assert sum(1 for p in paths if not p.corners[0]) == 1
        top = highest_path(cd, pt)
        assert corners(cd, top) == ((pt,), ())
        assert m_of_path(cd, top) == Monomial({("Y", *pt): 1})


@pytest.mark.parametrize("cd", [A3, cartan_data("A", 5), B2, B3], ids=["A3", "A5", "B2", "B3"])
def test_path_sum_is_thin_with_one_dominant(cd):
    from snakechar.algebra import dominance

    for pt in window(cd, -6, 2):
        monos = [p.monomial for p in enumerate_paths(cd, pt)]
        assert len(set(monos)) == len(monos)
        assert [m for m in monos if dominance(m) == "dominant"] == [Monomial({("Y", *pt): 1})]


def test_lowest_path_is_kr_lowest():
    # p^-_{1,-13} carries Y_{3,-9}^{-1}, the lowest monomial of L(Y_{1,-13})
    assert lowest_path(A3, (1, -13)).monomial == kr_lowest_monomial(A3, 1, 1, -12)
    assert lowest_path(A3, (1, -13)).monomial == Monomial({("Y", 3, -9): -1})
    assert lowest_path(B2, (2, -8)).monomial == kr_lowest_monomial(B2, 2, 1, -7)


@pytest.mark.parametrize("cd", [A3, cartan_data("A", 4), B2, B3], ids=["A3", "A4", "B2", "B3"])
def test_lowest_monomials_match_kr_formula(cd):
    for i, k in window(cd, -20, -5):
        r = k + cd.d(i)
        if r > cd.d(i) - cd.t * cd.dual_coxeter:
            continue
        assert lowest_path(cd, (i, k)).monomial == kr_lowest_monomial(cd, i, 1, r)


def test_b2_sum_of_four():
    paths = enumerate_paths(B2, (2, 0))
    assert len(paths) == 4 and len({p.monomial for p in paths}) == 4


def test_strictly_above():
    top = highest_path(A3, (2, -6))
    assert strictly_above(lowest_path(A3, (2, -10)), top) is False
    assert strictly_above(highest_path(A3, (2, -10)), lowest_path(A3, (2, -2)))
    assert not strictly_above(top, top)


def test_strictly_above_is_transitive_in_type_a():
    paths = list(enumerate_paths(A3, (2, -6))) + list(enumerate_paths(A3, (2, -2)))
    for a in paths:
        for b in paths:
            if not strictly_above(a, b):
                continue
            for c in paths:
                if strictly_above(b, c):
                    assert strictly_above(a, c)


def test_b_halves_are_ordered():
    # each i<n path joins two half-paths whose ends at column 2n-1 satisfy a_n above abar_n
    for p in enumerate_paths(B3, (2, 1)):
        ends = [y for x, y in p.points if x == 5]
        assert len(ends) == 2 and ends[0] > ends[1]


def _brute_tuples(cd, pts):
    import itertools

    sets = [enumerate_paths(cd, pt) for pt in pts]
    return [t for t in itertools.product(*sets) if is_nonoverlapping(t)]


@pytest.mark.parametrize("cd,pts", [
    (A3, ((2, -10), (2, -6))),
    (B2, ((2, -12), (2, -6))),
    (B3, ((3, -8), (3, -2))),
    (A3, ((1, -15), (3, -11), (3, -9), (2, -6))),
], ids=["A3-pair", "B2-pair", "B3-pair", "A3-four"])
def test_nonoverlapping_matches_brute_force(cd, pts):
    assert list(enumerate_nonoverlapping(cd, pts)) == _brute_tuples(cd, pts)


def test_tuple_counts():
    assert sum(1 for _ in enumerate_nonoverlapping(A3, ((1, -15), (3, -11), (3, -9), (2, -6)))) == 160
    assert sum(1 for _ in enumerate_nonoverlapping(A3, ((2, -10), (2, -6)))) == 35
    assert sum(1 for _ in enumerate_nonoverlapping(B2, ((2, -12), (2, -6)))) == 15


def test_height_examples():
    assert height_monomial(A3, highest_path(A3, (2, -6))).is_one()
    assert height_monomial(A3, lowest_path(A3, (2, -6))) == v((2, -5), (1, -4), (3, -4), (2, -3))
    assert cells_between_typeA(A3, lowest_path(A3, (2, -6))) == {(2, -5): 1, (1, -4): 1, (3, -4): 1, (2, -3): 1}
    assert cells_between_typeA(A3, highest_path(A3, (2, -6))) == {}
    first_flip = enumerate_paths(A3, (2, -6))
    one_cell = [p for p in first_flip if len(cells_between_typeA(A3, p)) == 1]
    assert [cells_between_typeA(A3, p) for p in one_cell] == [{(2, -5): 1}]


def test_truncated_height_near_the_top():
    low = lowest_path(A3, (2, -2))
    assert height_monomial(A3, low, truncate=True) is ZERO
    assert not in_P_prime(A3, low)
    assert height_monomial(A3, lowest_prime_path(A3, (2, -2))) == v((2, -1))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_cell_oracle_agrees_with_factorisation(n):
    cd = cartan_data("A", n)
    for pt in window(cd, -10, 3):
        for p in enumerate_paths(cd, pt):
            h = height_monomial(cd, p)
            assert {(i, r): e for (_, i, r), e in h.items()} == cells_between_typeA(cd, p)
