"""Exhaustive search for BCK-algebras of a given small order.

The search fills the free cells of a Cayley table row by row and rejects a
partial table as soon as an axiom instance is decided false (see
``_kernels_py.search``). Results can be filtered and reduced to one
canonical table per isomorphism class; in that mode the search only visits
labelings that extend the order, which still reaches every class.

Subtrees below the first few cells run as independent tasks; the merged
result is sorted, so it does not depend on how many workers ran.
"""

from __future__ import annotations

import itertools
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from ._backend import kernels
from .core import BckAlgebra, CayleyTable, _certified, naive_is_bck
from .sequences import DepthReport, commutativity_index, prolongation_depth, satisfies_identity

DEFAULT_CEILING = 7
NAIVE_MAX_ORDER = 4


class SearchLimitError(ValueError):
    pass


# -- filters -----------------------------------------------------------------

def _nonprolongable(a: BckAlgebra) -> bool:
    return kernels.first_bounded_pair(a.table.flat, a.order) is not None


_CLAUSES: dict[str, Callable[..., bool]] = {
    "all": lambda a: True,
    "nonprolongable": _nonprolongable,
    "index=": lambda a, k: commutativity_index(a) == k,
    "index<=": lambda a, k: commutativity_index(a) <= k,
    "identity-fails=": lambda a, k: not satisfies_identity(a, k),
}


@dataclass(frozen=True)
class Filter:
    """Conjunction of clauses such as ``nonprolongable,index<=2``.

    ``extra`` holds additional predicates on :class:`BckAlgebra`; they must
    be module-level functions when the search runs in worker processes.
    """

    clauses: tuple[tuple[str, int | None], ...] = (("all", None),)
    extra: tuple[Callable[[BckAlgebra], bool], ...] = ()

    @classmethod
    def parse(cls, text: str) -> Filter:
        clauses = []
        for part in text.split(","):
            part = part.strip()
            if part in ("all", "nonprolongable"):
                clauses.append((part, None))
                continue
            for key in ("index<=", "index=", "identity-fails="):
                if part.startswith(key):
                    try:
                        k = int(part[len(key):])
                    except ValueError:
                        raise ValueError(f"bad number in filter clause {part!r}") from None
                    if k < (1 if key == "identity-fails=" else 0):
                        raise ValueError(f"out-of-range number in filter clause {part!r}")
                    clauses.append((key, k))
                    break
            else:
                raise ValueError(f"unknown filter clause {part!r}")
        return cls(tuple(clauses))

    def __call__(self, a: BckAlgebra) -> bool:
        for name, arg in self.clauses:
            fn = _CLAUSES[name]
            if not (fn(a) if arg is None else fn(a, arg)):
                return False
        return all(pred(a) for pred in self.extra)

    def __str__(self) -> str:
        parts = [name if arg is None else f"{name}{arg}" for name, arg in self.clauses]
        parts += [getattr(p, "__name__", repr(p)) for p in self.extra]
        return ",".join(parts)


ALL = Filter()
NONPROLONGABLE = Filter((("nonprolongable", None),))


# -- configuration and results -------------------------------------------------

@dataclass(frozen=True)
class SearchConfig:
    order: int
    filter: Filter = ALL
    up_to_iso: bool = True
    limit: int | None = None
    worker_count: int = 1
    ceiling: int = DEFAULT_CEILING

    def __post_init__(self):
        if isinstance(self.filter, str):
            object.__setattr__(self, "filter", Filter.parse(self.filter))
        if self.order < 1:
            raise ValueError("order must be at least 1")
        if self.limit is not None and self.limit < 1:
            raise ValueError("limit must be at least 1")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")


@dataclass(frozen=True)
class SearchStats:
    nodes: int
    validated: int
    passed: int
    wall_time: float
    tasks: int

    def summary(self) -> str:
        return (
            f"{self.nodes} nodes, {self.validated} tables validated, "
            f"{self.passed} passed filter, {self.tasks} task(s), {self.wall_time:.2f}s"
        )


@dataclass(frozen=True)
class SearchOutcome:
    order: int
    algebras: list[CayleyTable]
    stats: SearchStats
    witnesses: list[DepthReport] | None = field(default=None)


# -- partial tables ------------------------------------------------------------

@dataclass(frozen=True)
class PartialTable:
    """Table with some cells unknown (``None``), filled in row-major order.

    Row 0, column 0 and the diagonal are always known.
    """

    order: int
    entries: tuple[int | None, ...]

    @classmethod
    def empty(cls, order: int) -> PartialTable:
        n = order
        entries: list[int | None] = [None] * (n * n)
        for x in range(n):
            entries[x] = 0
            entries[x * n] = x
            entries[x * n + x] = 0
        return cls(n, tuple(entries))

    @classmethod
    def from_prefix(cls, table: CayleyTable, upto: tuple[int, int]) -> PartialTable:
        """Cells of ``table`` strictly before ``upto`` in fill order."""
        p = cls.empty(table.order)
        while p.cursor is not None and p.cursor != upto:
            p = prune_and_fill(p, p.cursor, table(*p.cursor))
            if p is None:
                raise ValueError("prefix of table is already inconsistent")
        return p

    @property
    def cursor(self) -> tuple[int, int] | None:
        for idx, v in enumerate(self.entries):
            if v is None:
                return divmod(idx, self.order)
        return None

    def get(self, x: int, y: int) -> int | None:
        return self.entries[x * self.order + y]

    def to_table(self) -> CayleyTable:
        if self.cursor is not None:
            raise ValueError("table is not complete")
        return CayleyTable.from_flat(self.entries, self.order)


def prune_and_fill(p: PartialTable, cell: tuple[int, int], value: int) -> PartialTable | None:
    """Fill the cursor cell, or return ``None`` if the result is already inconsistent.

    Rejects when ``value`` and its transposed cell are both 0, or when an
    instance of axiom (1) or (2) whose cells are all known evaluates nonzero.
    This covers ``x.y <= x``: the instance ``(x, y, 0)`` reads ``(x.y).x``.
    """
    n = p.order
    if cell != p.cursor:
        raise ValueError(f"{cell} is not the cursor cell {p.cursor}")
    if not 0 <= value < n:
        raise ValueError(f"value {value} outside 0..{n - 1}")
    x, y = cell
    entries = list(p.entries)
    entries[x * n + y] = value
    if value == 0 and entries[y * n + x] == 0:
        return None

    def op(u, v):
        if u is None or v is None:
            return None
        return entries[u * n + v]

    for u in range(n):
        for v in range(n):
            if op(op(u, op(u, v)), v) not in (0, None):
                return None
            for w in range(n):
                if op(op(op(u, v), op(w, v)), op(u, w)) not in (0, None):
                    return None
    return PartialTable(n, tuple(entries))


def partial_enumerate(order: int) -> list[CayleyTable]:
    """All labeled algebras by plain DFS over :func:`prune_and_fill`."""
    out = []

    def dfs(p: PartialTable):
        cell = p.cursor
        if cell is None:
            out.append(p.to_table())
            return
        for v in range(order):
            q = prune_and_fill(p, cell, v)
            if q is not None:
                dfs(q)

    dfs(PartialTable.empty(order))
    return sorted(out, key=lambda t: t.flat)


# -- naive reference enumerator -------------------------------------------------

def naive_enumerate(order: int) -> list[CayleyTable]:
    """Every labeled algebra of ``order`` by trying all fillings of the free cells.

    No pruning; each complete table goes through :func:`naive_is_bck`.
    """
    n = order
    if n > NAIVE_MAX_ORDER:
        raise SearchLimitError(f"naive enumeration is limited to order {NAIVE_MAX_ORDER}")
    free = [(x, y) for x in range(1, n) for y in range(1, n) if x != y]
    out = []
    for values in itertools.product(range(n), repeat=len(free)):
        rows = [[0] * n for _ in range(n)]
        for x in range(n):
            rows[x][0] = x
        for (x, y), v in zip(free, values):
            rows[x][y] = v
        if naive_is_bck(rows):
            out.append(CayleyTable(tuple(map(tuple, rows))))
    return sorted(out, key=lambda t: t.flat)


# -- engine --------------------------------------------------------------------

def _check_order(config: SearchConfig) -> None:
    if config.order > config.ceiling:
        raise SearchLimitError(
            f"order {config.order} exceeds the ceiling {config.ceiling}; raise the ceiling explicitly"
        )


def _run_task(order: int, prefixes: Sequence[tuple[int, ...]], flt: Filter, up_to_iso: bool):
    nodes = validated = 0
    keep: set[tuple[int, ...]] = set()
    for prefix in prefixes:
        tables, k = kernels.search(order, prefix, -1, up_to_iso)
        nodes += k
        for flat in tables:
            if not kernels.is_bck(flat, order):
                raise AssertionError(f"search emitted a non-BCK table {flat}")
            validated += 1
            keep.add(kernels.canonical(flat, order) if up_to_iso else flat)
    passing = [
        flat for flat in keep
        if flt(_certified(CayleyTable.from_flat(flat, order)))
    ]
    return passing, nodes, validated


def _split(order: int, workers: int, monotone: bool) -> tuple[list[tuple[int, ...]], int]:
    """Prefixes of the first k free cells, k the least giving >= 4 * workers."""
    if workers == 1:
        return [()], 0
    ncells = len(kernels.free_cells(order))
    prefixes, nodes = [()], 0
    for k in range(1, ncells):
        prefixes, nodes = kernels.search(order, (), k, monotone)
        if len(prefixes) >= 4 * workers:
            break
    return prefixes, nodes


def enumerate_algebras(config: SearchConfig) -> SearchOutcome:
    """All BCK-algebras of ``config.order`` that pass ``config.filter``.

    With ``up_to_iso`` each class is represented by its canonical table.
    The list is sorted by row-major entries and cut to ``config.limit``.
    """
    _check_order(config)
    started = time.perf_counter()
    n = config.order
    prefixes, nodes = _split(n, config.worker_count, config.up_to_iso)
    workers = config.worker_count
    chunks = [prefixes[i::workers * 4] for i in range(min(len(prefixes), workers * 4))] or [[]]
    if workers == 1:
        results = [_run_task(n, chunk, config.filter, config.up_to_iso) for chunk in chunks]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [
                pool.submit(_run_task, n, chunk, config.filter, config.up_to_iso)
                for chunk in chunks
            ]
            results = [f.result() for f in futures]
    merged: set[tuple[int, ...]] = set()
    validated = 0
    for passing, k, v in results:
        merged.update(passing)
        nodes += k
        validated += v
    found = sorted(merged)
    if config.limit is not None:
        found = found[: config.limit]
    stats = SearchStats(
        nodes=nodes,
        validated=validated,
        passed=len(merged),
        wall_time=time.perf_counter() - started,
        tasks=len(chunks),
    )
    return SearchOutcome(n, [CayleyTable.from_flat(f, n) for f in found], stats)


def first_nonprolongable_pair(a: BckAlgebra) -> DepthReport | None:
    """Depth report of the first pair, row-major, whose chains stop."""
    for x in a.elements:
        for y in a.elements:
            report = prolongation_depth(a, x, y)
            if report.bounded:
                return report
    return None


def find_nonprolongable(
    order: int,
    limit: int | None = None,
    up_to_iso: bool = True,
    worker_count: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> SearchOutcome:
    """Algebras with a pair whose chains cannot be prolonged, each with a witness."""
    outcome = enumerate_algebras(
        SearchConfig(order, NONPROLONGABLE, up_to_iso, limit, worker_count, ceiling)
    )
    witnesses = [first_nonprolongable_pair(_certified(t)) for t in outcome.algebras]
    return SearchOutcome(outcome.order, outcome.algebras, outcome.stats, witnesses)


@dataclass(frozen=True)
class CensusRow:
    order: int
    labeled: int
    up_to_iso: int


def census(
    max_order: int,
    worker_count: int = 1,
    ceiling: int = DEFAULT_CEILING,
) -> list[CensusRow]:
    """Number of BCK-algebras of each order ``1..max_order``.

    Labeled counts come from the isomorphism classes by orbit counting.
    """
    rows = []
    for n in range(1, max_order + 1):
        outcome = enumerate_algebras(
            SearchConfig(n, ALL, True, None, worker_count, ceiling)
        )
        rows.append(CensusRow(n, labeled_count(outcome.algebras), len(outcome.algebras)))
    return rows


def labeled_count(classes: Iterable[CayleyTable]) -> int:
    """Labeled tables in the given classes: (n-1)! / |Aut| each."""
    return sum(
        math.factorial(t.order - 1) // kernels.automorphism_count(t.flat, t.order)
        for t in classes
    )


def expand_labeled(tables: Iterable[CayleyTable]) -> set[CayleyTable]:
    """Every 0-fixing relabeling of every table."""
    out = set()
    for t in tables:
        n = t.order
        for rest in itertools.permutations(range(1, n)):
            out.add(t.relabel((0,) + rest))
    return out
