"""Exact clique checkers: maximum clique, fixed-size clique detection,
and clique counting.

All three work on integer-bitmask adjacency.  The maximum-clique search
is a branch and bound with a greedy-coloring bound; the fixed-size
detector is an independent early-exit search so it never pays for the
full optimum.
"""

from __future__ import annotations

from ..core import Graph, VertexSet
from ._verdict import PropertyVerdict


def _color_order(p: int, masks) -> list[tuple[int, int]]:
    """Greedy coloring of the candidate set p; returns (vertex, color)
    in nondecreasing color order.  color is an upper bound on the
    largest clique inside p containing that vertex and its successors."""
    out = []
    color = 0
    while p:
        color += 1
        q = p
        while q:
            low = q & -q
            v = low.bit_length() - 1
            out.append((v, color))
            p ^= low
            q = (q ^ low) & ~masks[v]
    return out


def max_clique(g: Graph) -> VertexSet:
    """One maximum clique, as a sorted vertex tuple."""
    if g.n == 0:
        raise ValueError("max_clique undefined on the empty graph (n=0)")
    masks = [g.adjacency_mask(v) for v in range(g.n)]
    best: list[int] = []
    cur: list[int] = []

    def expand(p: int) -> None:
        order = _color_order(p, masks)
        for v, bound in reversed(order):
            if len(cur) + bound <= len(best):
                return
            cur.append(v)
            nxt = p & masks[v]
            if nxt:
                expand(nxt)
            elif len(cur) > len(best):
                best[:] = cur
            cur.pop()
            p ^= 1 << v

    expand((1 << g.n) - 1)
    return tuple(sorted(best))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def contains_kr(g: Graph, r: int) -> PropertyVerdict:
    """Does g contain a clique on r vertices?  Early-exit search; on
    success the witness is one such clique."""
    if r < 1:
        raise ValueError("r must be positive")
    if r > g.n:
        return PropertyVerdict(False, reason=f"only {g.n} vertices")
    masks = [g.adjacency_mask(v) for v in range(g.n)]
    cur: list[int] = []
    found: list[int] = []

    def search(p: int) -> bool:
        need = r - len(cur)
        if p.bit_count() < need:
            return False
        order = _color_order(p, masks)
        if order[-1][1] < need:
            return False
        for v, bound in reversed(order):
            if bound < need:
                return False
            cur.append(v)
            if need == 1:
                found[:] = cur
                cur.pop()
                return True
            if search(p & masks[v]):
                cur.pop()
                return True
            cur.pop()
            p ^= 1 << v
        return False

    if search((1 << g.n) - 1):
        return PropertyVerdict(True, witness=tuple(sorted(found)))
    return PropertyVerdict(False, reason=f"no K_{r}")


def count_kr(g: Graph, r: int) -> int:
    """Exact number of r-vertex cliques in g."""
    if r < 1:
        raise ValueError("r must be positive")
    masks = [g.adjacency_mask(v) for v in range(g.n)]

    def rec(p: int, need: int) -> int:
        if need == 0:
            return 1
        if p.bit_count() < need:
            return 0
        total = 0
        while p:
            low = p & -p
            p ^= low
            if p.bit_count() + 1 < need:
                break
            v = low.bit_length() - 1
            total += rec(p & masks[v], need - 1)
        return total

    return rec((1 << g.n) - 1, r)
