import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bckbench import validate
from bckbench.constructions import chain_algebra, commutative_chain, lemma2_algebra
from bckbench.sequences import (
    PreconditionError,
    commutativity_index,
    find_identity_violation,
    in_variety,
    pair_sequences,
    prolongation_depth,
    satisfies_identity,
    sequence_terms,
    single_sequence,
)
from strategies import algebras


def _brute_terms(a, x, y, upto):
    xs, ys = [x, a.op(y, a.op(y, x))], [y, a.op(x, a.op(x, y))]
    for k in range(2, upto + 1):
        xs.append(a.op(xs[k - 2], a.op(xs[k - 2], xs[k - 1])))
        ys.append(a.op(ys[k - 2], a.op(ys[k - 2], ys[k - 1])))
    return xs, ys


def _brute_depth(a, x, y, horizon=60):
    """First failing link, scanning a long fixed horizon."""
    xs, ys = _brute_terms(a, x, y, horizon + 1)
    for k in range(horizon):
        c8 = (xs, ys) if k % 2 == 0 else (ys, xs)
        c9 = (ys, xs) if k % 2 == 0 else (xs, ys)
        for hi, lo in (c8, c9):
            if a.op(lo[k + 1], hi[k]) != 0:
                return k
    return None


class TestTraces:
    def test_table1_pair(self, t1):
        xs, ys = sequence_terms(t1, 4, 5, 8)
        assert xs[:4] == [4, 3, 2, 1] and all(v == 1 for v in xs[3:])
        assert ys[:3] == [5, 2, 2]

    def test_table2_pair(self, t2):
        xs, ys = sequence_terms(t2, 3, 5, 8)
        assert ys[:3] == [5, 2, 1] and all(v == 0 for v in ys[3:])

    def test_trace_period(self, t1):
        tr = pair_sequences(t1, 4, 5)
        k = tr.preperiod + tr.period
        state = lambda i: (tr.x_terms[i], tr.x_terms[i + 1], tr.y_terms[i], tr.y_terms[i + 1])
        assert state(k) == state(tr.preperiod)
        assert len({state(i) for i in range(k)}) == k
        assert tr.to_dict()["x"] == 4

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_terms_match_recurrence(self, data):
        a = data.draw(algebras())
        x = data.draw(st.sampled_from(a.elements))
        y = data.draw(st.sampled_from(a.elements))
        assert list(sequence_terms(a, x, y, 20)) == list(_brute_terms(a, x, y, 20))
        tr = pair_sequences(a, x, y)
        n = len(tr.x_terms)
        assert list(tr.x_terms) == _brute_terms(a, x, y, n - 1)[0]


class TestDepth:
    def test_table1_bounded(self, t1):
        rep = prolongation_depth(t1, 4, 5)
        assert str(rep) == "Bounded(3)" and rep.bounded
        w = rep.witness
        assert w.product == 1
        assert w.printed_term == "y_3.x_4" and w.printed_product == 1

    def test_table2_bounded(self, t2):
        rep = prolongation_depth(t2, 3, 5)
        assert str(rep) == "Bounded(3)"
        assert rep.witness.product == 1
        assert rep.witness.printed_term == "x_3.y_4" and rep.witness.printed_product == 1

    def test_chain_unbounded(self):
        a = chain_algebra(8)
        assert all(
            prolongation_depth(a, x, y).depth is None for x in a.elements for y in a.elements
        )

    def test_report_dict(self, t1):
        d = prolongation_depth(t1, 4, 5).to_dict()
        assert d["depth"] == "Bounded(3)" and d["witness"]["product"] == 1
        assert prolongation_depth(t1, 0, 0).to_dict()["witness"] is None

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_matches_long_scan(self, data):
        a = data.draw(algebras())
        x = data.draw(st.sampled_from(a.elements))
        y = data.draw(st.sampled_from(a.elements))
        rep = prolongation_depth(a, x, y)
        assert rep.depth == _brute_depth(a, x, y)
        assert rep.depth is None or rep.depth >= 3


class TestSingleSequence:
    def test_lemma2_example(self):
        tr = single_sequence(lemma2_algebra(5), 4, 3)
        assert tr.terms == (4, 3, 2, 1, 1)
        assert tr.stabilization_index == 3

    def test_precondition(self, t1):
        with pytest.raises(PreconditionError):
            single_sequence(t1, 3, 4)

    @settings(max_examples=100, deadline=None)
    @given(st.data())
    def test_persistence(self, data):
        a = data.draw(algebras())
        pairs = [(x0, x1) for x0 in a.elements for x1 in a.elements if a.op(x1, x0) == 0]
        x0, x1 = data.draw(st.sampled_from(pairs))
        tr = single_sequence(a, x0, x1)
        k = tr.stabilization_index
        terms = list(tr.terms)
        for _ in range(10):
            terms.append(a.op(terms[-2], a.op(terms[-2], terms[-1])))
        assert all(v == terms[k] for v in terms[k:])
        assert all(terms[i] != terms[i + 1] for i in range(k))


class TestCommutativity:
    def test_commutative_chain(self):
        assert commutativity_index(commutative_chain(6)) == 1
        assert satisfies_identity(commutative_chain(6), 1)

    @pytest.mark.parametrize("n", range(5, 11))
    def test_lemma2(self, n):
        a = lemma2_algebra(n)
        assert commutativity_index(a) == n - 2
        assert in_variety(a, n - 2) and not in_variety(a, n - 3)
        v = find_identity_violation(a, n - 2)
        assert (v.x, v.y, v.x_n, v.y_n) == (n - 1, n, 1, n - 3)

    def test_identity_witness_is_first(self):
        a = lemma2_algebra(5)
        v = find_identity_violation(a, 3)
        for x in a.elements:
            for y in a.elements:
                if (x, y) < (v.x, v.y):
                    xs, ys = sequence_terms(a, x, y, 3)
                    assert xs[3] == ys[3]

    def test_argument_checks(self, t1):
        with pytest.raises(ValueError):
            in_variety(t1, -1)
        with pytest.raises(ValueError):
            find_identity_violation(t1, 0)

    def test_index_of_one_element(self):
        assert commutativity_index(validate([[0]])) == 0
