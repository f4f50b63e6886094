"""BCK-sequences, chain prolongation and n-commutativity.

For a pair ``(x, y)`` the two sequences are

    x_0 = x,  x_1 = y.(y.x),  x_k = x_{k-2}.(x_{k-2}.x_{k-1})
    y_0 = y,  y_1 = x.(x.y),  y_k = y_{k-2}.(y_{k-2}.y_{k-1})

and they interleave into the descending chains

    chain 8:  x_0 >= y_1 >= x_2 >= y_3 >= ...
    chain 9:  y_0 >= x_1 >= y_2 >= x_3 >= ...
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .core import BckAlgebra, _check_element


class PreconditionError(ValueError):
    pass


def _step(a: BckAlgebra, u: int, v: int) -> int:
    return a.op(u, a.op(u, v))


@dataclass(frozen=True)
class PairTrace:
    x: int
    y: int
    x_terms: tuple[int, ...]
    y_terms: tuple[int, ...]
    preperiod: int
    period: int

    def to_dict(self) -> dict:
        return asdict(self)


def pair_sequences(a: BckAlgebra, x: int, y: int) -> PairTrace:
    """Run both sequences until the state ``(x_k, x_k+1, y_k, y_k+1)`` repeats.

    The returned terms reach index ``k + 1`` where ``k`` is the first repeat,
    so one whole period after the preperiod is included.
    """
    _check_element(a, x, y)
    xs = [x, _step(a, y, x)]
    ys = [y, _step(a, x, y)]
    first_seen: dict[tuple[int, int, int, int], int] = {}
    k = 0
    while (state := (xs[k], xs[k + 1], ys[k], ys[k + 1])) not in first_seen:
        first_seen[state] = k
        xs.append(_step(a, xs[k], xs[k + 1]))
        ys.append(_step(a, ys[k], ys[k + 1]))
        k += 1
    pre = first_seen[state]
    return PairTrace(x, y, tuple(xs), tuple(ys), pre, k - pre)


def _extend(a: BckAlgebra, terms: list[int], upto: int) -> list[int]:
    while len(terms) <= upto:
        terms.append(_step(a, terms[-2], terms[-1]))
    return terms


def sequence_terms(a: BckAlgebra, x: int, y: int, upto: int) -> tuple[list[int], list[int]]:
    """``x_0..x_upto`` and ``y_0..y_upto``."""
    _check_element(a, x, y)
    xs = _extend(a, [x, _step(a, y, x)], upto)
    ys = _extend(a, [y, _step(a, x, y)], upto)
    return xs[: upto + 1], ys[: upto + 1]


@dataclass(frozen=True)
class ChainLink:
    """A failing link ``b <= a`` of one chain, with ``product = b.a != 0``.

    ``a_term``/``b_term`` name the sequence terms (``"x_3"``). The
    ``printed_*`` fields give the product with the letters x and y swapped,
    ``y_3.x_4`` instead of ``y_4.x_3``. On the order-6 counterexamples
    both forms give the same value.
    """

    chain: int
    link: int
    a: int
    b: int
    product: int
    a_term: str
    b_term: str
    printed_term: str
    printed_product: int


@dataclass(frozen=True)
class DepthReport:
    x: int
    y: int
    depth: int | None
    witness: ChainLink | None = None

    @property
    def bounded(self) -> bool:
        return self.depth is not None

    def __str__(self) -> str:
        return "Unbounded" if self.depth is None else f"Bounded({self.depth})"

    def to_dict(self) -> dict:
        return {
            "x": self.x,
            "y": self.y,
            "depth": str(self),
            "bounded": self.bounded,
            "link": self.depth,
            "witness": None if self.witness is None else asdict(self.witness),
        }


def _chain_terms(chain: int, k: int) -> tuple[str, str]:
    # letters of c_k and c_k+1: chain 8 starts with x, chain 9 with y
    first = "x" if (chain == 8) == (k % 2 == 0) else "y"
    second = "y" if first == "x" else "x"
    return first, second


def prolongation_depth(a: BckAlgebra, x: int, y: int) -> DepthReport:
    """Number of leading links that hold in both chains.

    The link pattern repeats with period ``lcm(period, 2)`` after the
    preperiod, so scanning ``preperiod + 2 * period`` links decides
    whether the chains continue forever.
    """
    trace = pair_sequences(a, x, y)
    limit = trace.preperiod + 2 * trace.period
    xs = _extend(a, list(trace.x_terms), limit)
    ys = _extend(a, list(trace.y_terms), limit)
    terms = {"x": xs, "y": ys}
    swap = {"x": "y", "y": "x"}
    for k in range(limit):
        for chain in (8, 9):
            la, lb = _chain_terms(chain, k)
            av, bv = terms[la][k], terms[lb][k + 1]
            product = a.op(bv, av)
            if product != 0:
                pa, pb = swap[la], swap[lb]
                link = ChainLink(
                    chain=chain,
                    link=k,
                    a=av,
                    b=bv,
                    product=product,
                    a_term=f"{la}_{k}",
                    b_term=f"{lb}_{k + 1}",
                    printed_term=f"{pa}_{k}.{pb}_{k + 1}",
                    printed_product=a.op(terms[pa][k], terms[pb][k + 1]),
                )
                return DepthReport(x, y, k, link)
    return DepthReport(x, y, None)


@dataclass(frozen=True)
class SingleTrace:
    terms: tuple[int, ...]
    stabilization_index: int


def single_sequence(a: BckAlgebra, x0: int, x1: int) -> SingleTrace:
    """Descending sequence from a comparable pair ``x1 <= x0``.

    Stops one term after the first repeat ``x_n = x_n+1``; from there on
    every term equals ``x_n`` since ``x_n.(x_n.x_n) = x_n``.
    """
    _check_element(a, x0, x1)
    if a.op(x1, x0) != 0:
        raise PreconditionError(f"{x1} <= {x0} does not hold")
    terms = [x0, x1]
    while terms[-2] != terms[-1]:
        terms.append(_step(a, terms[-2], terms[-1]))
    return SingleTrace(tuple(terms), len(terms) - 2)


def commutativity_index(a: BckAlgebra) -> int:
    """Least ``n`` with ``x_n = x_n+1`` for every comparable start ``x1 <= x0``."""
    return max(
        single_sequence(a, x0, x1).stabilization_index
        for x0 in a.elements
        for x1 in a.elements
        if a.op(x1, x0) == 0
    )


def in_variety(a: BckAlgebra, n: int) -> bool:
    """Membership in V_n read as ``commutativity_index(a) <= n``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return commutativity_index(a) <= n


@dataclass(frozen=True)
class IdentityViolation:
    x: int
    y: int
    n: int
    x_n: int
    y_n: int


def find_identity_violation(a: BckAlgebra, n: int) -> IdentityViolation | None:
    """First pair, row-major, with ``x_n != y_n``."""
    if n < 1:
        raise ValueError("n must be at least 1")
    for x in a.elements:
        for y in a.elements:
            xs, ys = sequence_terms(a, x, y, n)
            if xs[n] != ys[n]:
                return IdentityViolation(x, y, n, xs[n], ys[n])
    return None


def satisfies_identity(a: BckAlgebra, n: int) -> bool:
    """Whether ``x_n = y_n`` holds for every pair."""
    return find_identity_violation(a, n) is None
