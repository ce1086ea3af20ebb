"""Exact enumeration of dominating-set families and classical invariants.

Everything here is exact; budgets exist to refuse inputs that would take
too long, never to approximate. The enumerator is a depth-first scan over
vertex ids with two sound prunes:

  * coverage feasibility - a vertex that is still undominated and has no
    closed neighbour among the undecided ids can never be dominated;
  * irredundance (minimal enumeration only) - private-neighbour sets only
    shrink as vertices are added, so a prefix in which some chosen vertex
    already lost all privates has no minimal dominating extension.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .graph_core import (
    BudgetError,
    Graph,
    VertexSet,
    bit,
    canonical_key,
    iter_vertices,
    popcount,
)

DEFAULT_MAX_N = 24
DEFAULT_IR_MAX_N = 20
BUDGET_ENV_VAR = "DOMREC_BUDGET"


@dataclass(frozen=True)
class Budget:
    """Explicit enumeration limits; tune via CLI flag or DOMREC_BUDGET."""

    max_n: int = DEFAULT_MAX_N
    ir_max_n: int = DEFAULT_IR_MAX_N

    @staticmethod
    def resolve(max_n: Optional[int] = None) -> "Budget":
        if max_n is not None:
            return Budget(max_n=max_n)
        env = os.environ.get(BUDGET_ENV_VAR)
        if env is not None:
            try:
                return Budget(max_n=int(env))
            except ValueError as exc:
                raise BudgetError(f"{BUDGET_ENV_VAR} must be an integer, got {env!r}") from exc
        return Budget()

    def check(self, g: Graph, what: str) -> None:
        if g.n > self.max_n:
            raise BudgetError(
                f"{what} on n={g.n} exceeds enumeration budget max_n={self.max_n}"
                f" (raise via --budget or {BUDGET_ENV_VAR})"
            )


@dataclass(frozen=True)
class DomFamily:
    """All minimal dominating sets, canonically ordered, plus gamma/Gamma."""

    sets: tuple[VertexSet, ...]
    gamma: int
    Gamma: int

    def __len__(self) -> int:
        return len(self.sets)


@dataclass(frozen=True)
class InvariantReport:
    gamma: int
    Gamma: int
    alpha: int
    ir: Optional[int]
    num_minimal_dom_sets: int
    well_covered: bool
    well_dominated: bool


def _suffix_covers(g: Graph) -> list[VertexSet]:
    """suffix[i] = union of closed neighbourhoods of vertices i..n-1."""
    suffix = [0] * (g.n + 1)
    for i in range(g.n - 1, -1, -1):
        suffix[i] = suffix[i + 1] | g.closed[i]
    return suffix


def minimal_dominating_sets(g: Graph, budget: Optional[Budget] = None) -> list[VertexSet]:
    """All minimal dominating sets of g, in canonical order."""
    budget = budget or Budget.resolve()
    budget.check(g, "minimal dominating set enumeration")
    n, closed, full = g.n, g.closed, g.full_mask
    suffix = _suffix_covers(g)
    out: list[VertexSet] = []

    def rec(i: int, chosen: VertexSet, cover: VertexSet, privates: list[VertexSet]) -> None:
        if cover == full:
            out.append(chosen)
            return
        if i == n:
            return
        if (full ^ cover) & ~suffix[i]:
            return
        rec(i + 1, chosen, cover, privates)
        ci = closed[i]
        pn_new = ci & ~cover
        if pn_new == 0:
            return
        shrunk = []
        for p in privates:
            p &= ~ci
            if p == 0:
                return
            shrunk.append(p)
        shrunk.append(pn_new)
        rec(i + 1, chosen | bit(i), cover | ci, shrunk)

    rec(0, 0, 0, [])
    out.sort(key=canonical_key)
    return out


def enumerate_minimal_dominating(g: Graph, budget: Optional[Budget] = None) -> DomFamily:
    sets = minimal_dominating_sets(g, budget)
    if not sets:
        raise BudgetError("no minimal dominating set found; graph state inconsistent")
    cards = [popcount(s) for s in sets]
    return DomFamily(sets=tuple(sets), gamma=min(cards), Gamma=max(cards))


def dominating_sets_upto(
    g: Graph, max_size: int, budget: Optional[Budget] = None
) -> list[VertexSet]:
    """All dominating sets of cardinality <= max_size, canonical order.

    Once a prefix already dominates, every extension does too, so the
    remaining ids are expanded with itertools.combinations in bulk.
    """
    budget = budget or Budget.resolve()
    budget.check(g, "dominating set enumeration")
    n, closed, full = g.n, g.closed, g.full_mask
    cap = min(max_size, n)
    if cap < 0:
        return []
    suffix = _suffix_covers(g)
    bits = [1 << v for v in range(n)]
    out: list[VertexSet] = []

    def emit_extensions(mask: VertexSet, i: int, count: int) -> None:
        out.append(mask)
        ids = range(i, n)
        for extra in range(1, cap - count + 1):
            if extra > n - i:
                break
            for combo in combinations(ids, extra):
                m = mask
                for v in combo:
                    m |= bits[v]
                out.append(m)

    def rec(i: int, chosen: VertexSet, count: int, cover: VertexSet) -> None:
        if cover == full:
            emit_extensions(chosen, i, count)
            return
        if i == n or count == cap:
            return
        if (full ^ cover) & ~suffix[i]:
            return
        rec(i + 1, chosen, count, cover)
        rec(i + 1, chosen | bits[i], count + 1, cover | closed[i])

    rec(0, 0, 0, 0)
    out.sort(key=canonical_key)
    return out


def list_maximal_independent(g: Graph, budget: Optional[Budget] = None) -> list[VertexSet]:
    """All maximal independent sets (Bron-Kerbosch with pivot on the complement)."""
    budget = budget or Budget.resolve()
    budget.check(g, "maximal independent set enumeration")
    full = g.full_mask
    # Complement adjacency: non-neighbours other than the vertex itself.
    nonadj = [full & ~g.closed[v] for v in range(g.n)]
    out: list[VertexSet] = []

    def bk(r: VertexSet, p: VertexSet, x: VertexSet) -> None:
        if p == 0 and x == 0:
            out.append(r)
            return
        pivot, best = -1, -1
        for u in iter_vertices(p | x):
            score = popcount(p & nonadj[u])
            if score > best:
                pivot, best = u, score
        for v in iter_vertices(p & ~nonadj[pivot]):
            bv = bit(v)
            bk(r | bv, p & nonadj[v], x & nonadj[v])
            p &= ~bv
            x |= bv

    bk(0, full, 0)
    out.sort(key=canonical_key)
    return out


def compute_alpha(g: Graph, budget: Optional[Budget] = None) -> int:
    return max(popcount(s) for s in list_maximal_independent(g, budget))


def compute_ir(g: Graph, budget: Optional[Budget] = None) -> int:
    """Maximum cardinality of an irredundant set, exact.

    Irredundance is hereditary downward, so a DFS over irredundant
    prefixes visits every irredundant set.
    """
    budget = budget or Budget.resolve()
    budget.check(g, "irredundant set scan")
    n, closed = g.n, g.closed
    best = 0

    def rec(i: int, count: int, cover: VertexSet, privates: list[VertexSet]) -> None:
        nonlocal best
        if count > best:
            best = count
        if i == n or count + (n - i) <= best:
            return
        rec(i + 1, count, cover, privates)
        ci = closed[i]
        pn_new = ci & ~cover
        if pn_new == 0:
            return
        shrunk = []
        for p in privates:
            p &= ~ci
            if p == 0:
                return
            shrunk.append(p)
        shrunk.append(pn_new)
        rec(i + 1, count + 1, cover | ci, shrunk)

    rec(0, 0, 0, [])
    return best


def invariant_report(
    g: Graph,
    budget: Optional[Budget] = None,
    include_ir: Optional[bool] = None,
) -> InvariantReport:
    """Aggregate gamma/Gamma/alpha/IR and the well-covered/-dominated flags.

    IR is skipped by default above the ir budget; pass include_ir=True to force.
    """
    budget = budget or Budget.resolve()
    fam = enumerate_minimal_dominating(g, budget)
    mis = list_maximal_independent(g, budget)
    alpha = max(popcount(s) for s in mis)
    well_covered = all(popcount(s) == alpha for s in mis)
    if include_ir is None:
        include_ir = g.n <= budget.ir_max_n
    ir = compute_ir(g, budget) if include_ir else None
    return InvariantReport(
        gamma=fam.gamma,
        Gamma=fam.Gamma,
        alpha=alpha,
        ir=ir,
        num_minimal_dom_sets=len(fam.sets),
        well_covered=well_covered,
        well_dominated=fam.gamma == fam.Gamma,
    )
