"""Exact chromatic number: branch and bound between the clique lower
bound and a DSATUR greedy upper bound.  Exact search is capped (default
40 vertices); beyond that callers should fall back to the clique bound.
"""

from __future__ import annotations

from ..core import Graph
from .cliques import max_clique


def greedy_coloring(g: Graph) -> list[int]:
    """DSATUR greedy proper coloring (colors 0..c-1); an upper bound."""
    n = g.n
    colors = [-1] * n
    sat = [0] * n  # bitmask of colors seen in the neighborhood
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (sat[u].bit_count(), g.degree(u), -u),
        )
        c = 0
        while (sat[v] >> c) & 1:
            c += 1
        colors[v] = c
        for u in g.neighbors(v):
            sat[u] |= 1 << c
    return colors


def _search_coloring(g: Graph, k: int, clique: tuple) -> list[int] | None:
    """Proper k-coloring or None.  The seed clique is pre-colored and a
    fresh color is only ever opened once per level (symmetry breaking);
    vertices are picked by maximum saturation."""
    n = g.n
    if k < len(clique):
        return None
    colors = [-1] * n
    sat = [0] * n
    used = 0
    for i, v in enumerate(clique):
        colors[v] = i
        used = i + 1
        for u in g.neighbors(v):
            sat[u] |= 1 << i
    uncolored = [v for v in range(n) if colors[v] < 0]

    def pick() -> int:
        return max(uncolored, key=lambda u: (sat[u].bit_count(), g.degree(u), -u))

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        bit = 1 << c
        for u in g.neighbors(v):
            if colors[u] < 0 and not (sat[u] & bit):
                sat[u] |= bit
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        colors[v] = -1
        bit = 1 << c
        for u in touched:
            sat[u] ^= bit

    def backtrack(used: int) -> bool:
        if not uncolored:
            return True
        v = pick()
        if sat[v].bit_count() >= k:
            return False
        uncolored.remove(v)
        limit = min(used + 1, k)
        for c in range(limit):
            if (sat[v] >> c) & 1:
                continue
            touched = assign(v, c)
            if backtrack(max(used, c + 1)):
                return True
            undo(v, c, touched)
        uncolored.append(v)
        return False

    if backtrack(used):
        return colors
    return None


def minimum_coloring(g: Graph, cap: int = 40) -> list[int]:
    """A proper coloring with exactly chi(g) colors."""
    if g.n > cap:
        raise ValueError(
            f"exact coloring capped at n={cap} (got n={g.n}); "
            "use the clique number as a lower bound instead"
        )
    if g.n == 0:
        return []
    clique = max_clique(g)
    greedy = greedy_coloring(g)
    ub = max(greedy) + 1
    if ub == len(clique):
        return greedy
    for k in range(len(clique), ub):
        found = _search_coloring(g, k, clique)
        if found is not None:
            return found
    return greedy


def chromatic_number(g: Graph, cap: int = 40) -> int:
    if g.n == 0:
        return 0
    colors = minimum_coloring(g, cap=cap)
    return max(colors) + 1
