"""Separation of the minimal-dominating-set family, two independent ways.

For a 2-partition of the family, its separation is the smallest union
cardinality |X u Y| over cross pairs; the separation of the graph is the
maximum of that over all 2-partitions. The brute-force route scans every
partition; the bottleneck route reads the same number off a minimum
spanning tree over pair weights w(X,Y) = |X u Y|: the max-min over cuts
equals the heaviest MST edge, and removing that edge exhibits a witness
partition. The two routes are cross-validated in the tests rather than
trusted on faith, and sep is checked against the direct connectivity
threshold d_0 on every corpus graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph_core import BudgetError, Graph, InputError, VertexSet, popcount
from .domination import Budget, DomFamily, enumerate_minimal_dominating
from .reconfig import d0_direct

BRUTE_FORCE_MAX_FAMILY = 15


@dataclass(frozen=True)
class SepReport:
    sep: int
    witness_partition: tuple[tuple[int, ...], tuple[int, ...]]
    witness_pair: tuple[VertexSet, VertexSet]
    method: str  # "brute_force" | "bottleneck"


@dataclass(frozen=True)
class D0SepEvidence:
    """Both connectivity-threshold computations side by side."""

    d0: int
    sep: int
    agree: bool
    gamma: int
    Gamma: int
    report: SepReport


def _require_at_least_two(fam: DomFamily) -> None:
    if len(fam.sets) < 2:
        raise InputError(
            "separation needs at least two minimal dominating sets"
            " (edgeless graphs have exactly one)"
        )


def sep_brute_force(fam: DomFamily) -> SepReport:
    """Literal definition: max over all 2-partitions of the min cross union.

    Pairs are scanned in ascending weight order, so each partition's
    minimum is found at the first straddling pair.
    """
    _require_at_least_two(fam)
    m = len(fam.sets)
    if m > BRUTE_FORCE_MAX_FAMILY:
        raise BudgetError(
            f"family of {m} sets exceeds brute-force partition limit"
            f" {BRUTE_FORCE_MAX_FAMILY}"
        )
    sets = fam.sets
    pairs = sorted(
        (popcount(sets[i] | sets[j]), i, j)
        for i in range(m)
        for j in range(i + 1, m)
    )
    best_sep = -1
    best_sides: tuple[int, int] = (0, 0)
    best_pair = (0, 1)
    # Index 0 stays on side A; side B ranges over subsets of the rest.
    for choice in range(1, 1 << (m - 1)):
        side_b = choice << 1
        for w, i, j in pairs:
            if ((side_b >> i) ^ (side_b >> j)) & 1:
                if w > best_sep:
                    best_sep = w
                    best_sides = (side_b, ((1 << m) - 1) & ~side_b)
                    best_pair = (i, j)
                break
    side_b_mask, side_a_mask = best_sides
    part_a = tuple(i for i in range(m) if (side_a_mask >> i) & 1)
    part_b = tuple(i for i in range(m) if (side_b_mask >> i) & 1)
    i, j = best_pair
    return SepReport(
        sep=best_sep,
        witness_partition=(part_a, part_b),
        witness_pair=(sets[i], sets[j]),
        method="brute_force",
    )


def sep_bottleneck(fam: DomFamily) -> SepReport:
    """Separation via the heaviest edge of a minimum spanning tree.

    Prim's algorithm streams pair weights instead of materialising the
    m*(m-1)/2 matrix; ties break toward the lowest index, so the witness
    is deterministic.
    """
    _require_at_least_two(fam)
    sets = fam.sets
    m = len(sets)
    in_tree = [False] * m
    dist = [popcount(sets[0] | sets[j]) for j in range(m)]
    parent = [0] * m
    in_tree[0] = True
    tree_edges: list[tuple[int, int, int]] = []  # (weight, parent, child)
    for _ in range(m - 1):
        nxt, nxt_d = -1, None
        for j in range(m):
            if not in_tree[j] and (nxt_d is None or dist[j] < nxt_d):
                nxt, nxt_d = j, dist[j]
        in_tree[nxt] = True
        tree_edges.append((dist[nxt], parent[nxt], nxt))
        sj = sets[nxt]
        for j in range(m):
            if not in_tree[j]:
                w = popcount(sj | sets[j])
                if w < dist[j]:
                    dist[j] = w
                    parent[j] = nxt
    bottleneck = max(tree_edges, key=lambda e: e[0])
    sep, p_star, c_star = bottleneck
    # Splitting the tree at the bottleneck edge yields the witness partition.
    adjacency: list[list[int]] = [[] for _ in range(m)]
    for _, a, b in tree_edges:
        if (a, b) != (p_star, c_star):
            adjacency[a].append(b)
            adjacency[b].append(a)
    side_c = {c_star}
    stack = [c_star]
    while stack:
        cur = stack.pop()
        for nb in adjacency[cur]:
            if nb not in side_c:
                side_c.add(nb)
                stack.append(nb)
    part_c = tuple(sorted(side_c))
    part_p = tuple(i for i in range(m) if i not in side_c)
    first, second = (part_p, part_c) if 0 in part_p else (part_c, part_p)
    return SepReport(
        sep=sep,
        witness_partition=(first, second),
        witness_pair=(sets[p_star], sets[c_star]),
        method="bottleneck",
    )


def partition_separation(fam: DomFamily, part_b: tuple[int, ...]) -> int:
    """sep of one explicit 2-partition; used to validate witnesses."""
    in_b = set(part_b)
    if not in_b or len(in_b) == len(fam.sets):
        raise InputError("both sides of a 2-partition must be nonempty")
    side_a = [fam.sets[i] for i in range(len(fam.sets)) if i not in in_b]
    side_b = [fam.sets[i] for i in part_b]
    return min(popcount(x | y) for x in side_a for y in side_b)


def check_sep_equals_d0(
    g: Graph, budget: Optional[Budget] = None
) -> D0SepEvidence:
    """Cross-validate the two d_0 routes: direct scan vs separation."""
    if all(row == 0 for row in g.adj):
        raise InputError("cross-check requires a graph with at least one edge")
    budget = budget or Budget.resolve()
    fam = enumerate_minimal_dominating(g, budget)
    report = sep_bottleneck(fam)
    d0 = d0_direct(g, budget)
    return D0SepEvidence(
        d0=d0,
        sep=report.sep,
        agree=d0 == report.sep,
        gamma=fam.gamma,
        Gamma=fam.Gamma,
        report=report,
    )
