"""Random edge addition: the uniform m-subset model and the independent
per-non-edge Bernoulli model, plus the phased-budget helper."""

from __future__ import annotations

from dataclasses import dataclass

from .core import Edge, Graph, non_edges
from .seeds import SeedSpec


@dataclass(frozen=True)
class AugmentResult:
    """An augmented graph together with the record that produced it.

    added lists the new edges in addition order; none of them was an
    edge of the base graph and e(graph) = base_edge_count + len(added).
    """

    graph: Graph
    added: tuple[Edge, ...]
    base_edge_count: int
    seed: SeedSpec


def augment_uniform(h: Graph, m: int, seed: SeedSpec) -> AugmentResult:
    """Add a uniformly random m-subset of the non-edges of h.

    The subset is drawn by a seeded partial Fisher-Yates shuffle over
    the lexicographic non-edge list, so identical seeds reproduce the
    same edges in the same order.
    """
    pool = non_edges(h)
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m > len(pool):
        raise ValueError(
            f"m={m} exceeds the {len(pool)} available non-edges (maximum m={len(pool)})"
        )
    rng = seed.generator()
    arr = list(pool)
    for i in range(m):
        j = int(rng.integers(i, len(arr)))
        arr[i], arr[j] = arr[j], arr[i]
    added = tuple(arr[:m])
    return AugmentResult(h.with_edges(added), added, h.edge_count, seed)


def augment_bernoulli(h: Graph, p: float, seed: SeedSpec) -> AugmentResult:
    """Add each non-edge of h independently with probability p."""
    if not (0 <= p <= 1):
        raise ValueError(f"p must lie in [0, 1], got {p}")
    pool = non_edges(h)
    rng = seed.generator()
    if pool:
        keep = rng.random(len(pool)) < p
        added = tuple(pair for pair, take in zip(pool, keep) if take)
    else:
        added = ()
    return AugmentResult(h.with_edges(added), added, h.edge_count, seed)


def split_budget(m: int, phases: int) -> list[int]:
    """Split m into the given number of balanced nonnegative counts
    (any two differ by at most 1), e.g. for phased edge addition."""
    if phases < 1:
        raise ValueError("need at least one phase")
    if m < 0:
        raise ValueError("m must be nonnegative")
    base, extra = divmod(m, phases)
    return [base + 1] * extra + [base] * (phases - extra)
