"""Cayley tables, BCK axiom checking and the derived order.

A table over ``{0, ..., n-1}`` stores ``x . y`` at ``rows[x][y]``; element 0
is always the BCK constant.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations
from typing import Iterable, Sequence

from ._backend import kernels

DEFAULT_VIOLATION_CAP = 16

AXIOMS = {
    1: "((x.y).(z.y)).(x.z) = 0",
    2: "(x.(x.y)).y = 0",
    3: "x.0 = x",
    4: "0.x = 0",
    5: "x.y = y.x = 0 implies x = y",
}


class TableShapeError(ValueError):
    """The table is not a square matrix of in-range element indices."""


class ElementError(IndexError):
    """An element index outside the carrier."""


class NotBCKError(ValueError):
    """A well-formed table that fails at least one BCK axiom."""

    def __init__(self, violations: Sequence[AxiomViolation]):
        self.violations = list(violations)
        first = self.violations[0]
        super().__init__(
            f"not a BCK-algebra: {len(self.violations)} violation(s), first {first}"
        )


class ClosureError(ValueError):
    """A subset that is not closed under the operation."""

    def __init__(self, pair: tuple[int, int], value: int):
        self.pair = pair
        self.value = value
        x, y = pair
        super().__init__(f"subset not closed: {x}.{y} = {value} escapes")


@dataclass(frozen=True)
class CayleyTable:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in row) for row in self.rows)
        n = len(rows)
        if n == 0:
            raise TableShapeError("table must have at least one row")
        for x, row in enumerate(rows):
            if len(row) != n:
                raise TableShapeError(
                    f"row {x} has {len(row)} entries, expected {n}"
                )
            for y, v in enumerate(row):
                if not 0 <= v < n:
                    raise TableShapeError(
                        f"entry ({x},{y}) = {v} is outside 0..{n - 1}"
                    )
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_flat(cls, flat: Sequence[int], order: int) -> CayleyTable:
        if len(flat) != order * order:
            raise TableShapeError(f"expected {order * order} entries, got {len(flat)}")
        return cls(tuple(tuple(flat[x * order:(x + 1) * order]) for x in range(order)))

    @property
    def order(self) -> int:
        return len(self.rows)

    @cached_property
    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def __call__(self, x: int, y: int) -> int:
        return self.rows[x][y]

    def relabel(self, perm: Sequence[int]) -> CayleyTable:
        """Table of the same operation with element ``x`` renamed ``perm[x]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                rows[perm[x]][perm[y]] = perm[self.rows[x][y]]
        return CayleyTable(tuple(map(tuple, rows)))

    def __str__(self) -> str:
        return "\n".join(" ".join(map(str, row)) for row in self.rows)


@dataclass(frozen=True)
class AxiomViolation:
    axiom_id: int
    witness: tuple[int, ...]
    observed: int

    def __str__(self) -> str:
        return f"axiom ({self.axiom_id}) fails at {self.witness}: got {self.observed}"


def evaluate_axiom(table: CayleyTable, axiom_id: int, witness: Sequence[int]):
    """Evaluate one axiom instance; return the offending value or ``None``."""
    op = table
    if axiom_id == 1:
        x, y, z = witness
        v = op(op(op(x, y), op(z, y)), op(x, z))
        return v if v != 0 else None
    if axiom_id == 2:
        x, y = witness
        v = op(op(x, op(x, y)), y)
        return v if v != 0 else None
    if axiom_id == 3:
        (x,) = witness
        return op(x, 0) if op(x, 0) != x else None
    if axiom_id == 4:
        (x,) = witness
        return op(0, x) if op(0, x) != 0 else None
    if axiom_id == 5:
        x, y = witness
        if x != y and op(x, y) == 0 and op(y, x) == 0:
            return 0
        return None
    raise ValueError(f"no axiom ({axiom_id})")


def check_axioms(table: CayleyTable, cap: int = DEFAULT_VIOLATION_CAP) -> list[AxiomViolation]:
    """All axiom violations of ``table``, at most ``cap`` per axiom."""
    return [
        AxiomViolation(axiom, tuple(witness), observed)
        for axiom, witness, observed in kernels.axiom_violations(table.flat, table.order, cap)
    ]


@dataclass(frozen=True)
class BckAlgebra:
    """A Cayley table certified against the five BCK axioms.

    Build instances with :func:`validate`; the constructor does not check.
    """

    table: CayleyTable
    leq_matrix: tuple[tuple[bool, ...], ...] = field(repr=False, compare=False)

    @property
    def order(self) -> int:
        return self.table.order

    @property
    def elements(self) -> range:
        return range(self.table.order)

    def op(self, x: int, y: int) -> int:
        return self.table.rows[x][y]

    def leq(self, x: int, y: int) -> bool:
        return leq(self, x, y)


def _certified(table: CayleyTable) -> BckAlgebra:
    leq_matrix = tuple(tuple(v == 0 for v in row) for row in table.rows)
    return BckAlgebra(table, leq_matrix)


def validate(table: CayleyTable | Sequence[Sequence[int]], cap: int = DEFAULT_VIOLATION_CAP) -> BckAlgebra:
    """Certify ``table`` as a BCK-algebra.

    Raises :class:`TableShapeError` for malformed input and
    :class:`NotBCKError` (carrying every violation found) otherwise.
    """
    if not isinstance(table, CayleyTable):
        table = CayleyTable(tuple(map(tuple, table)))
    if kernels.is_bck(table.flat, table.order):
        return _certified(table)
    raise NotBCKError(check_axioms(table, cap))


def is_bck(table: CayleyTable) -> bool:
    return kernels.is_bck(table.flat, table.order)


def _check_element(a: BckAlgebra, *xs: int) -> None:
    for x in xs:
        if not 0 <= x < a.order:
            raise ElementError(f"element {x} is outside 0..{a.order - 1}")


def leq(a: BckAlgebra, x: int, y: int) -> bool:
    """``x <= y`` iff ``x . y = 0``."""
    _check_element(a, x, y)
    return a.leq_matrix[x][y]


def maximal_elements(a: BckAlgebra) -> frozenset[int]:
    return frozenset(
        m for m in a.elements
        if not any(x != m and a.leq_matrix[m][x] for x in a.elements)
    )


def hasse_covers(a: BckAlgebra) -> frozenset[tuple[int, int]]:
    """Pairs ``(x, y)`` with ``x < y`` and nothing strictly between."""
    lt = [[x != y and a.leq_matrix[x][y] for y in a.elements] for x in a.elements]
    return frozenset(
        (x, y)
        for x in a.elements
        for y in a.elements
        if lt[x][y] and not any(lt[x][z] and lt[z][y] for z in a.elements)
    )


def is_linear(a: BckAlgebra) -> bool:
    return all(
        a.leq_matrix[x][y] or a.leq_matrix[y][x]
        for x in a.elements
        for y in a.elements
    )


def canonical_form(a: BckAlgebra | CayleyTable) -> CayleyTable:
    """Least row-major relabeling of the table over permutations fixing 0."""
    table = a.table if isinstance(a, BckAlgebra) else a
    return CayleyTable.from_flat(kernels.canonical(table.flat, table.order), table.order)


def is_isomorphic(a: BckAlgebra, b: BckAlgebra) -> bool:
    if a.order != b.order:
        return False
    return canonical_form(a) == canonical_form(b)


def find_isomorphism(a: BckAlgebra, b: BckAlgebra) -> tuple[int, ...] | None:
    """A 0-fixing bijection ``f`` with ``f(x.y) = f(x).f(y)``, found by brute force."""
    if a.order != b.order:
        return None
    n = a.order
    for rest in permutations(range(1, n)):
        f = (0,) + rest
        if all(f[a.op(x, y)] == b.op(f[x], f[y]) for x in range(n) for y in range(n)):
            return f
    return None


def restrict(a: BckAlgebra, subset: Iterable[int]) -> BckAlgebra:
    """Subalgebra on ``subset`` (which must contain 0), relabeled ascending.

    Raises :class:`ClosureError` naming the first escaping pair.
    """
    elems = sorted(set(subset))
    _check_element(a, *elems)
    if not elems or elems[0] != 0:
        raise ValueError("subset must contain 0")
    index = {e: i for i, e in enumerate(elems)}
    rows = []
    for x in elems:
        row = []
        for y in elems:
            v = a.op(x, y)
            if v not in index:
                raise ClosureError((x, y), v)
            row.append(index[v])
        rows.append(tuple(row))
    # closed subsets of a BCK-algebra inherit every axiom
    return _certified(CayleyTable(tuple(rows)))


def naive_is_bck(rows: Sequence[Sequence[int]]) -> bool:
    """Reference check: every axiom over every pair and triple, no shortcuts."""
    n = len(rows)
    r = rows
    for x in range(n):
        if r[x][0] != x or r[0][x] != 0:
            return False
        for y in range(n):
            if r[r[x][r[x][y]]][y] != 0:
                return False
            if x != y and r[x][y] == 0 and r[y][x] == 0:
                return False
            for z in range(n):
                if r[r[r[x][y]][r[z][y]]][r[x][z]] != 0:
                    return False
    return True


def is_commutative(a: BckAlgebra) -> bool:
    """Whether ``x.(x.y) = y.(y.x)`` for all pairs."""
    op = a.op
    return all(
        op(x, op(x, y)) == op(y, op(y, x)) for x in a.elements for y in a.elements
    )
