"""Acceptance criteria, each checked exactly (integer results) within its time budget.

Run with ``pytest tests/test_acceptance.py``; a summary line per criterion
is printed at the end of the run.
"""

import itertools
import time
from contextlib import contextmanager

from bckbench import (
    CayleyTable,
    canonical_form,
    is_isomorphic,
    is_linear,
    restrict,
    validate,
)
from bckbench.constructions import chain_algebra, lemma2_algebra, top_extension
from bckbench.search import (
    NONPROLONGABLE,
    SearchConfig,
    census,
    enumerate_algebras,
    find_nonprolongable,
    naive_enumerate,
)
from bckbench.sequences import (
    commutativity_index,
    find_identity_violation,
    prolongation_depth,
    satisfies_identity,
    sequence_terms,
    single_sequence,
)
from tables import TABLE1, TABLE2, TABLE3, TABLE4


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f}s, budget {seconds}s"


def _witness_pairs():
    return [(TABLE1, (4, 5)), (TABLE2, (3, 5))]


def _tower(rows, top=12):
    """The algebra and its repeated top extensions up to order ``top``."""
    a = validate(rows)
    out = [a]
    while a.order < top:
        a = top_extension(a)
        out.append(a)
    return out


def test_criterion_01_reference_tables():
    with budget(1):
        algebras = [validate(CayleyTable(r)) for r in (TABLE1, TABLE2, TABLE3, TABLE4)]
        assert [a.order for a in algebras] == [6, 6, 6, 7]
        assert algebras[2].table.rows == TABLE1
        assert not is_isomorphic(algebras[0], algebras[1])


def test_criterion_02_bounded_pair_traces():
    with budget(1):
        t1, t2 = validate(TABLE1), validate(TABLE2)
        xs, ys = sequence_terms(t1, 4, 5, 12)
        assert xs[1:3] == [3, 2] and all(v == 1 for v in xs[3:])
        assert ys[1:3] == [2, 2]
        xs, ys = sequence_terms(t2, 3, 5, 12)
        assert ys[1:3] == [2, 1] and all(v == 0 for v in ys[3:])
        for a, (x, y) in [(t1, (4, 5)), (t2, (3, 5))]:
            rep = prolongation_depth(a, x, y)
            assert str(rep) == "Bounded(3)"
            assert rep.witness.product == 1
            assert rep.witness.printed_product == 1


def test_criterion_03_top_extension_tower():
    with budget(1):
        for rows, (x, y) in _witness_pairs():
            tower = _tower(rows)
            assert tower[-1].order == 12
            for prev, cur in zip(tower, tower[1:]):
                assert str(prolongation_depth(cur, x, y)) == "Bounded(3)"
                assert restrict(cur, range(prev.order)).table == prev.table


def test_criterion_04_linear_chains():
    with budget(5):
        for n in range(1, 65):
            assert is_linear(chain_algebra(n))
        a = chain_algebra(8)
        assert all(
            not prolongation_depth(a, x, y).bounded for x in a.elements for y in a.elements
        )


def test_criterion_05_two_top_construction():
    with budget(5):
        for n in range(5, 33):
            a = lemma2_algebra(n)
            le = a.leq
            for x, y in itertools.product(range(n), repeat=2):
                if le(x, y):
                    assert le(a.op(n, y), a.op(n, x))
            for x in range(n):
                if le(x, n):
                    for y in range(n):
                        assert le(a.op(x, y), a.op(n, y))
            assert all(a.op(n, y) >= 1 for y in range(n))
        assert lemma2_algebra(5).table.rows == TABLE3
        assert lemma2_algebra(6).table.rows == TABLE4


def test_criterion_06_identity_fails_at_index():
    with budget(5):
        for n in range(5, 11):
            a = lemma2_algebra(n)
            assert commutativity_index(a) == n - 2
            assert not satisfies_identity(a, n - 2)
            v = find_identity_violation(a, n - 2)
            assert (v.x, v.y, v.x_n, v.y_n) == (n - 1, n, 1, n - 3)


def test_criterion_07_low_index_identities():
    with budget(30):
        checked = 0
        for order in range(1, 5):
            for t in enumerate_algebras(SearchConfig(order)).algebras:
                a = validate(t)
                k = commutativity_index(a)
                assert (k <= 1) == satisfies_identity(a, 1)
                assert (k <= 2) == satisfies_identity(a, 2)
                checked += 1
        assert checked == 1 + 1 + 3 + 14


def test_criterion_08_nonprolongable_search():
    with budget(600):
        out = find_nonprolongable(6)
        assert len(out.algebras) >= 2
        assert canonical_form(validate(TABLE1)) in out.algebras
        assert canonical_form(validate(TABLE2)) in out.algebras
    with budget(60):
        rows = census(5)
        assert [r.up_to_iso for r in rows] == [1, 1, 3, 14, 88]


def test_criterion_09_oracle_equivalence():
    with budget(60):
        naive_counts = {}
        for n in range(1, 5):
            naive = naive_enumerate(n)
            naive_counts[n] = len(naive)
            assert enumerate_algebras(SearchConfig(n, up_to_iso=False)).algebras == naive
        assert naive_counts[3] == 5 and naive_counts[4] == 67
        rows = census(4)
        assert all(r.labeled == naive_counts[r.order] for r in rows)
        assert {canonical_form(t) for t in naive_enumerate(4)} == set(
            enumerate_algebras(SearchConfig(4)).algebras
        )


def _encountered():
    """Every certified algebra that criteria 1 to 9 build."""
    seen = {}

    def add(a):
        seen.setdefault(a.table, a)

    for rows in (TABLE1, TABLE2, TABLE3, TABLE4):
        add(validate(rows))
    for rows, _ in _witness_pairs():
        for a in _tower(rows):
            add(a)
    for n in range(1, 65):
        add(chain_algebra(n))
    for n in range(5, 33):
        add(lemma2_algebra(n))
    for n in range(1, 5):
        for t in naive_enumerate(n):
            add(validate(t))
    for n in range(1, 7):
        for t in enumerate_algebras(SearchConfig(n)).algebras:
            add(validate(t))
    return list(seen.values())


def test_criterion_10_universal_invariants():
    with budget(120):
        algebras = _encountered()
        assert len(algebras) > 900
        for a in algebras:
            op, le, els = a.op, a.leq, a.elements
            for x in els:
                assert op(x, x) == 0
                for y in els:
                    assert le(op(x, y), x)
            for x in els:
                for y in els:
                    rep = prolongation_depth(a, x, y)
                    assert rep.depth is None or rep.depth >= 3
            for x0 in els:
                for x1 in els:
                    if le(x1, x0):
                        tr = single_sequence(a, x0, x1)
                        k = tr.stabilization_index
                        assert all(v == tr.terms[k] for v in tr.terms[k:])
                        nxt = op(tr.terms[-2], op(tr.terms[-2], tr.terms[-1]))
                        assert nxt == tr.terms[k]
        for order, flt in [(5, None), (6, NONPROLONGABLE)]:
            kw = {} if flt is None else {"filter": flt}
            one = enumerate_algebras(SearchConfig(order, **kw))
            four = enumerate_algebras(SearchConfig(order, worker_count=4, **kw))
            assert one.algebras == four.algebras
            assert one.stats.nodes == four.stats.nodes
