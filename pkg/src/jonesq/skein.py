"""Kauffman bracket by state sum, and the writhe-normalised Jones polynomial."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .laurent import DELTA, LaurentQ, unit_pow
from .tangle import DiagramError, Orientation, Piece, SlicedDiagram, _require_closed, writhe

__all__ = ["MAX_CROSSINGS", "SmoothingState", "kauffman_bracket", "jones", "states", "loop_count"]

MAX_CROSSINGS = 20

# A-smoothing weight q^(1/2), B-smoothing weight q^(-1/2)
_A, _B = "A", "B"


@dataclass(frozen=True)
class SmoothingState:
    """One smoothing per crossing, in slice order.

    ``A`` is the smoothing weighted q^(1/2).  On a CROSS_POS that is the
    identity (two vertical strands); on a CROSS_NEG it is the cap-cup.
    """

    choices: tuple

    def weight_exponent(self) -> int:
        """Exponent of q, in quarters, carried by the smoothing weights."""
        a = sum(1 for c in self.choices if c == _A)
        return 2 * (a - (len(self.choices) - a))


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def _indexing(d: SlicedDiagram):
    offsets = []
    total = 0
    for w in d.widths:
        offsets.append(total)
        total += w
    return offsets, total


def _skeleton(d: SlicedDiagram):
    """Fixed unions from non-crossing pieces plus per-crossing point quadruples."""
    offsets, total = _indexing(d)
    fixed = []
    crossings = []
    for k, a, b, p in d.pieces():
        lo, hi = offsets[k], offsets[k + 1]
        if p is Piece.CUP:
            fixed.append((hi + b, hi + b + 1))
        elif p is Piece.CAP:
            fixed.append((lo + a, lo + a + 1))
        elif p.is_crossing:
            # (SW, SE, NW, NE)
            crossings.append((p, (lo + a, lo + a + 1, hi + b, hi + b + 1)))
        else:
            fixed.append((lo + a, hi + b))
    return total, fixed, crossings


def loop_count(d: SlicedDiagram, state: SmoothingState) -> int:
    """Number of closed loops after smoothing every crossing as ``state`` says."""
    total, fixed, crossings = _skeleton(d)
    return _loops(total, fixed, crossings, state.choices)


def _loops(total, fixed, crossings, choices) -> int:
    dsu = _DSU(total)
    for a, b in fixed:
        dsu.union(a, b)
    for (piece, (sw, se, nw, ne)), c in zip(crossings, choices):
        identity = (c == _A) == (piece is Piece.CROSS_POS)
        if identity:
            dsu.union(sw, nw)
            dsu.union(se, ne)
        else:
            dsu.union(sw, se)
            dsu.union(nw, ne)
    return len({dsu.find(i) for i in range(total)})


def states(d: SlicedDiagram) -> Iterator[SmoothingState]:
    for choices in product((_A, _B), repeat=d.n_crossings):
        yield SmoothingState(choices)


def kauffman_bracket(d: SlicedDiagram) -> LaurentQ:
    """Kauffman bracket of a closed framed diagram.

    Sum over all smoothings of q^((a-b)/2) (-q-q^-1)^loops, times -q^(3/2)
    per positive full twist and its inverse per negative one.
    """
    _require_closed(d)
    n = d.n_crossings
    if n > MAX_CROSSINGS:
        raise DiagramError(f"{n} crossings exceeds the state-sum limit of {MAX_CROSSINGS}")
    total, fixed, crossings = _skeleton(d)
    tally: Counter = Counter()
    for choices in product((_A, _B), repeat=n):
        a = choices.count(_A)
        tally[(2 * (2 * a - n), _loops(total, fixed, crossings, choices))] += 1
    result = LaurentQ()
    delta_pows: dict = {}
    for (e, loops), count in tally.items():
        if loops not in delta_pows:
            delta_pows[loops] = DELTA ** loops
        result = result + delta_pows[loops] * LaurentQ({e: count})
    twists = d.count(Piece.TWIST_POS) - d.count(Piece.TWIST_NEG)
    return result * unit_pow(-1, "3/2", twists)


def jones(d: SlicedDiagram, o: Orientation | None = None) -> LaurentQ:
    """(-q^(3/2))^(-w) times the Kauffman bracket.

    ``o`` may be omitted for knots, whose writhe does not depend on direction.
    """
    if o is None:
        from .tangle import components

        n = components(d).count
        if n > 1:
            raise DiagramError("an orientation is required for links with more than one component")
        o = Orientation.positive(n)
    return unit_pow(-1, "3/2", -writhe(d, o)) * kauffman_bracket(d)
