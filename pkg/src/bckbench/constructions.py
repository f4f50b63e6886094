"""Parametric BCK-algebras.

Every constructor returns an algebra that went through :func:`validate`.
"""

from __future__ import annotations

from typing import Callable

from .core import BckAlgebra, CayleyTable, validate


def _build(order: int, op: Callable[[int, int], int]) -> BckAlgebra:
    rows = tuple(tuple(op(x, y) for y in range(order)) for x in range(order))
    return validate(CayleyTable(rows))


def chain_op(x: int, y: int) -> int:
    """Operation of the linearly ordered chain; first matching case wins."""
    if x <= y:
        return 0
    if y == 0:
        return x
    if x == y + 1:
        return 1
    return x - y - 1


def chain_algebra(n: int) -> BckAlgebra:
    """Chain ``0 < 1 < ... < n-1`` with :func:`chain_op`."""
    if n < 1:
        raise ValueError("chain_algebra needs n >= 1")
    return _build(n, chain_op)


def lemma2_algebra(n: int) -> BckAlgebra:
    """Chain ``0..n-1`` plus a second maximal element ``n`` above ``n-2``.

    ``n.y`` is ``max(n-y-1, 1)`` for ``0 < y < n``: the bare ``n-y-1``
    would give ``n.(n-1) = 0`` together with ``(n-1).n = 1``, which breaks
    the tabulated cases n = 5, 6 and leaves ``n`` below ``n-1``.
    """
    if n < 5:
        raise ValueError("lemma2_algebra needs n >= 5")

    def op(x: int, y: int) -> int:
        if x < n and y < n:
            return chain_op(x, y)
        if x == n and y == n:
            return 0
        if x == n:
            return n if y == 0 else max(n - y - 1, 1)
        return 1 if x == n - 1 else 0

    return _build(n + 1, op)


def top_extension(a: BckAlgebra) -> BckAlgebra:
    """Adjoin a new greatest element ``n``: ``n.y = n`` for ``y < n``, ``x.n = 0``."""
    n = a.order

    def op(x: int, y: int) -> int:
        if y == n:
            return 0
        if x == n:
            return n
        return a.op(x, y)

    return _build(n + 1, op)


def commutative_chain(n: int) -> BckAlgebra:
    """Chain ``0..n-1`` with truncated subtraction ``x.y = max(x-y, 0)``."""
    if n < 1:
        raise ValueError("commutative_chain needs n >= 1")
    return _build(n, lambda x, y: max(x - y, 0))


CONSTRUCTIONS = {
    "chain": chain_algebra,
    "lemma2": lemma2_algebra,
    "commutative": commutative_chain,
}
