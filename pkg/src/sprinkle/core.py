"""Immutable simple-graph core: construction, basic queries, edge-list IO.

Vertices are dense integer ids 0..n-1.  A Graph is frozen after
construction, so checkers and concurrently running trials can share one
instance freely.  Adjacency is kept twice: as sorted neighbor tuples
(deterministic iteration order for BFS/flow routines) and as integer
bitmasks (O(1) membership, fast set algebra for the clique and diameter
checkers).
"""

from __future__ import annotations

from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Sequence

VertexSet = tuple[int, ...]
Edge = tuple[int, int]


class Graph:
    """Undirected simple graph on vertex set {0, ..., n-1}."""

    __slots__ = ("n", "_neighbors", "_masks", "_edge_count")

    def __init__(self, n: int, edges: Iterable[Sequence[int]]):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        seen: set(Edge) = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise ValueError(f"self-loop rejected: ({u}, {v})")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            seen.add((u, v) if u < v else (v, u))
        adj: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in seen:
            adj[u].append(v)
            adj[v].append(u)
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self._neighbors = tuple(tuple(sorted(a)) for a in adj)
        self._masks = tuple(masks)
        self._edge_count = len(seen)

    @property
    def edge_count(self) -> int:
        return self._edge_count

    def degree(self, v: int) -> int:
        return len(self._neighbors[v])

    def neighbors(self, v: int) -> VertexSet:
        """Neighbors of v in increasing id order."""
        return self._neighbors[v]

    def adjacency_mask(self, v: int) -> int:
        """Neighbors of v as a bitmask (bit u set iff u ~ v)."""
        return self._masks[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self._masks[u] >> v) & 1)

    def edges(self) -> list[Edge]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            mask = self._masks[u] >> (u + 1)
            v = u + 1
            while mask:
                if mask & 1:
                    out.append((u, v))
                mask >>= 1
                v += 1
        return out

    def vertices(self) -> range:
        return range(self.n)

    def with_edges(self, extra: Iterable[Sequence[int]]) -> "Graph":
        """New graph with the given edges added (duplicates collapse)."""
        return Graph(self.n, self.edges() + [tuple(e) for e in extra])

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self._masks == other._masks

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self._edge_count})"


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Validating builder: rejects out-of-range ids and self-loops,
    collapses duplicate pairs regardless of orientation."""
    return Graph(n, edges)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise ValueError("min_degree undefined on the empty graph (n=0)")
    return min(g.degree(v) for v in range(g.n))


def density_param(d) -> Fraction:
    """Coerce a density value to an exact Fraction in (0, 1).

    Floats go through their shortest decimal repr, so density_param(0.3)
    is exactly 3/10 rather than the binary float closest to 0.3.
    """
    if isinstance(d, float):
        d = Fraction(str(d))
    else:
        d = Fraction(d)
    if not (0 < d < 1):
        raise ValueError(f"density must lie strictly between 0 and 1, got {d}")
    return d


def is_dense(g: Graph, d) -> bool:
    """True iff every vertex has degree at least ceil(d * n)."""
    d = density_param(d)
    threshold = -((-d.numerator * g.n) // d.denominator)
    return min_degree(g) >= threshold


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Subgraph induced by the vertex set s, relabeled 0..|s|-1 in
    increasing order of the original ids."""
    ids = sorted(s)
    if any(not (0 <= v < g.n) for v in ids):
        bad = [v for v in ids if not (0 <= v < g.n)]
        raise ValueError(f"vertex ids out of range: {bad}")
    if len(set(ids)) != len(ids):
        raise ValueError("vertex set contains duplicates")
    pos = {v: i for i, v in enumerate(ids)}
    member = set(ids)
    edges = []
    for v in ids:
        for u in g.neighbors(v):
            if u > v and u in member:
                edges.append((pos[v], pos[u]))
    return Graph(len(ids), edges)


def non_edges(g: Graph) -> list[Edge]:
    """All unordered pairs not in E, in lexicographic order."""
    out = []
    for u in range(g.n):
        mask = g.adjacency_mask(u)
        for v in range(u + 1, g.n):
            if not (mask >> v) & 1:
                out.append((u, v))
    return out


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then m lines "u v" with u < v,
# 0-based ids, LF line endings.  The reader tolerates '#' comments and
# blank lines.
# ---------------------------------------------------------------------------


def write_edge_list(g: Graph, target: str | Path | IO[str]) -> None:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    text = "\n".join(lines) + "\n"
    if isinstance(target, (str, Path)):
        Path(target).write_text(text, encoding="ascii", newline="\n")
    else:
        target.write(text)


def read_edge_list(source: str | Path | IO[str]) -> Graph:
    if isinstance(source, (str, Path)):
        text = Path(source).read_text(encoding="ascii")
    else:
        text = source.read()
    rows: list[tuple[int, list[int]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            fields = [int(tok) for tok in line.split()]
        except ValueError as exc:
            raise ValueError(f"line {lineno}: expected integers, got {raw!r}") from exc
        rows.append((lineno, fields))
    if not rows:
        raise ValueError("empty edge-list input")
    header_line, header = rows[0]
    if len(header) != 2:
        raise ValueError(f"line {header_line}: header must be 'n m'")
    n, m = header
    body = rows[1:]
    if len(body) != m:
        raise ValueError(f"header declares {m} edges but {len(body)} edge lines found")
    edges = []
    for lineno, fields in body:
        if len(fields) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        edges.append((fields[0], fields[1]))
    return Graph(n, edges)
