import pytest

from bckbench import hasse_covers, is_linear, maximal_elements, restrict, validate
from bckbench.constructions import (
    chain_algebra,
    chain_op,
    commutative_chain,
    lemma2_algebra,
    top_extension,
)
from bckbench.core import is_commutative
from bckbench.sequences import prolongation_depth
from tables import TABLE3, TABLE4


@pytest.mark.parametrize("n", [1, 2, 3, 8, 17, 64])
def test_chain_is_linear(n):
    a = chain_algebra(n)
    assert is_linear(a)
    assert all(chain_op(x, y) == a.op(x, y) for x in a.elements for y in a.elements)


def test_chain_covers():
    assert hasse_covers(chain_algebra(4)) == {(0, 1), (1, 2), (2, 3)}


def test_chain_not_commutative():
    a = chain_algebra(4)
    assert not is_commutative(a)
    assert a.op(3, a.op(3, 2)) != a.op(2, a.op(2, 3))
    assert is_commutative(commutative_chain(5))


def test_lemma2_tables():
    assert lemma2_algebra(5).table.rows == TABLE3
    assert lemma2_algebra(6).table.rows == TABLE4


@pytest.mark.parametrize("n", [5, 6, 9, 16, 32])
def test_lemma2_inequalities(n):
    a = lemma2_algebra(n)
    le = a.leq
    for x in range(n):
        for y in range(n):
            if le(x, y):
                assert le(a.op(n, y), a.op(n, x))
    # domination is for x below n in the order, which leaves out n-1
    below = [x for x in range(n) if le(x, n)]
    assert below == list(range(n - 1))
    for x in below:
        for y in range(n):
            assert le(a.op(x, y), a.op(n, y))
    for y in range(n):
        assert a.op(n, y) >= 1
    assert maximal_elements(a) == {n - 1, n}
    assert {(n - 2, n - 1), (n - 2, n)} <= hasse_covers(a)


@pytest.mark.parametrize("n", [-1, 0, 4])
def test_lemma2_too_small(n):
    with pytest.raises(ValueError):
        lemma2_algebra(n)


def test_bad_orders():
    with pytest.raises(ValueError):
        chain_algebra(0)
    with pytest.raises(ValueError):
        commutative_chain(0)


def test_top_extension(t1, t2):
    for base in (t1, t2, chain_algebra(3), validate([[0]])):
        a = top_extension(base)
        n = base.order
        assert maximal_elements(a) == {n}
        assert all(a.leq(x, n) for x in a.elements)
        assert restrict(a, range(n)).table == base.table


def test_top_extension_keeps_witness(t1):
    a = t1
    for _ in range(3):
        a = top_extension(a)
        assert str(prolongation_depth(a, 4, 5)) == "Bounded(3)"
