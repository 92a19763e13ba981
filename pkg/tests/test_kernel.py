import pytest

from snakechar.algebra import y_to_v
from snakechar.cartan import Vertex, cartan_data
from snakechar.characters import f_polynomial
from snakechar.kernel import (
    CANDIDATE,
    GIVEN,
    Inconsistent,
    NoMaximalTerm,
    NotThin,
    count_closed_subsets,
    dims_from_lowest_tuple,
    f_supports,
    infer_submodule_poset,
    kernel_data,
    kernel_data_from_f,
    lowest_truncated_tuple,
    support_quiver,
)
from snakechar.laurent import parse_laurent
from snakechar.worked import EXAMPLES, exchange_character, exchange_m

A3 = cartan_data("A", 3)


def _w(key):
    w = EXAMPLES[key]
    return w.cd, w.spec, w


def test_kernel_3_5():
    cd, spec, w = _w("3.5")
    kd = kernel_data(cd, spec)
    assert kd.total_dim == 13 and set(kd.dims.values()) == {1}
    assert set(kd.i_plus) == {(1, -16), (3, -12), (2, -7)}
    assert set(kd.i_minus) == {(1, -14), (3, -8), (2, -5)}
    figure_vertices = {v for arrow in w.arrows for v in arrow}
    assert kd.support == figure_vertices


def test_kernel_3_8_has_a_two():
    cd, spec, w = _w("3.8")
    kd = kernel_data(cd, spec)
    assert kd.dims[Vertex(2, -5)] == 2
    assert all(e == 1 for v, e in kd.dims.items() if v != (2, -5))
    assert kd.dims == dims_from_lowest_tuple(cd, spec)


@pytest.mark.parametrize("key", ["3.5", "3.6", "3.7", "3.8", "3.9"])
def test_lowest_tuple_gives_the_dimension_vector(key):
    cd, spec, _ = _w(key)
    assert lowest_truncated_tuple(cd, spec) is not None
    assert dims_from_lowest_tuple(cd, spec) == kernel_data(cd, spec).dims


def test_support_and_denominator_agree():
    from snakechar.characters import denominator

    for key in ["3.5", "3.6", "3.7", "3.8", "3.9"]:
        cd, spec, _ = _w(key)
        shifted = {("z", i, r + cd.d(i)) for i, r in kernel_data(cd, spec).support}
        assert shifted == set(denominator(cd, spec).keys())


def test_kernel_4_9_from_its_f():
    F = y_to_v(A3, exchange_character("4.9"), exchange_m("4.9"))
    kd = kernel_data_from_f(F)
    assert kd.dims[Vertex(2, -5)] == 2 and sum(1 for e in kd.dims.values() if e == 1) == 8


def test_no_maximal_term():
    with pytest.raises(NoMaximalTerm):
        kernel_data_from_f(parse_laurent("1 + v_{1,-2} + v_{2,-1}"))


def test_support_quiver_3_5():
    cd, spec, w = _w("3.5")
    q = support_quiver(cd, spec, given_arrows=w.arrows)
    assert sum(1 for *_, s in q.arrows if s == GIVEN) == 16
    assert ((2, -5), (1, -6), CANDIDATE) in q.arrows


def test_support_quiver_3_7_and_3_9():
    cd, spec, w = _w("3.7")
    q = support_quiver(cd, spec, given_arrows=w.arrows)
    assert sorted(q.arrow_pairs(GIVEN)) == sorted(w.arrows)
    cd, spec, w = _w("3.9")
    q = support_quiver(cd, spec)
    assert q.arrow_pairs("all") == [((2, -3), (2, -1))]


def test_support_quiver_rejects_non_arrow():
    cd, spec, _ = _w("3.6")
    with pytest.raises(ValueError):
        support_quiver(cd, spec, given_arrows=[((2, -3), (2, -5))])


@pytest.mark.parametrize("key,count", [("3.5", 160), ("3.6", 35), ("3.7", 15), ("3.9", 3)])
def test_closed_subsets_match_f(key, count):
    cd, spec, w = _w(key)
    q = support_quiver(cd, spec, given_arrows=w.arrows)
    total, found = count_closed_subsets(q, GIVEN)
    assert total == count
    assert dict(found) == dict(f_supports(f_polynomial(cd, spec)))


def test_closed_subsets_need_thin():
    cd, spec, _ = _w("3.8")
    with pytest.raises(NotThin):
        count_closed_subsets(support_quiver(cd, spec))


@pytest.mark.parametrize("key", ["3.5", "3.6", "3.7", "3.9"])
def test_inferred_poset(key):
    cd, spec, w = _w(key)
    F = f_polynomial(cd, spec)
    order = infer_submodule_poset(F)
    assert len(order.ideals()) == len(F)
    full = set(support_quiver(cd, spec).arrow_pairs("all"))
    assert set(order.hasse()) <= full
    # the arrows drawn for each example are exactly the cover relations
    assert set(order.hasse()) == set(w.arrows)


def test_inferred_poset_rejects_coefficient_two():
    F = y_to_v(A3, exchange_character("4.9"), exchange_m("4.9"))
    with pytest.raises(Inconsistent):
        infer_submodule_poset(F)


def test_inferred_poset_rejects_non_ideals():
    with pytest.raises(Inconsistent):
        infer_submodule_poset(parse_laurent("1 + v_{1,-2} + v_{2,-1} + v_{1,-2}v_{2,-1}v_{3,-2}"))
