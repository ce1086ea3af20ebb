"""Graph generators: the hub-and-leaf-clique constructions plus stock families.

The `gkr` construction takes a clique K_k per leaf of a star K_{1,r},
wires matching vertices across cliques, and hangs an apex u0 off the hub
clique. The `qkr` variant additionally adds one saturating vertex w_i per
leaf clique, adjacent to the whole hub-plus-apex and to its own leaf
clique. Vertex numbering is frozen here so exports and golden files stay
byte-stable:

    u0 -> 0
    u_j -> j                      (1 <= j <= k)
    v_{i,j} -> k + (i-1)*k + j    (1 <= i <= r, 1 <= j <= k)
    w_i -> k*(r+1) + i            (qkr only, 1 <= i <= r)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .graph_core import (
    Graph,
    InputError,
    VertexSet,
    bit,
    canonical_key,
    is_dominating,
    mask_of,
    popcount,
    vertex_list,
)
from .domination import Budget, enumerate_minimal_dominating


@dataclass(frozen=True)
class GkrLayout:
    """Frozen vertex numbering for the hub construction."""

    k: int
    r: int

    @property
    def u0(self) -> int:
        return 0

    def u(self, j: int) -> int:
        if not 1 <= j <= self.k:
            raise InputError(f"u index {j} outside 1..{self.k}")
        return j

    def v(self, i: int, j: int) -> int:
        if not (1 <= i <= self.r and 1 <= j <= self.k):
            raise InputError(f"v index ({i},{j}) outside range")
        return self.k + (i - 1) * self.k + j

    @property
    def order(self) -> int:
        return self.k * (self.r + 1) + 1

    @property
    def hub_mask(self) -> VertexSet:  # U
        return mask_of(range(1, self.k + 1))

    @property
    def hub_apex_mask(self) -> VertexSet:  # U0 = U + u0
        return self.hub_mask | 1

    def leaf_mask(self, i: int) -> VertexSet:  # V_i
        return mask_of(self.v(i, j) for j in range(1, self.k + 1))


@dataclass(frozen=True)
class QkrLayout(GkrLayout):
    def w(self, i: int) -> int:
        if not 1 <= i <= self.r:
            raise InputError(f"w index {i} outside 1..{self.r}")
        return self.k * (self.r + 1) + i

    @property
    def order(self) -> int:
        return self.k * (self.r + 1) + 1 + self.r

    @property
    def w_mask(self) -> VertexSet:
        return mask_of(self.w(i) for i in range(1, self.r + 1))

    def leaf_plus_w_mask(self, i: int) -> VertexSet:  # W_i = V_i + w_i
        return self.leaf_mask(i) | bit(self.w(i))


def _check_params(k: int, r: int) -> None:
    if k < 3:
        raise InputError(f"clique size k must be at least 3, got {k}")
    if not 1 <= r <= k - 1:
        raise InputError(f"leaf count r must satisfy 1 <= r <= k-1, got r={r}, k={k}")


def _gkr_edges(layout: GkrLayout) -> list[tuple[int, int]]:
    k, r = layout.k, layout.r
    edges = []
    for j in range(1, k + 1):
        edges.append((layout.u0, layout.u(j)))
    for a in range(1, k + 1):
        for b in range(a + 1, k + 1):
            edges.append((layout.u(a), layout.u(b)))
    for i in range(1, r + 1):
        for a in range(1, k + 1):
            for b in range(a + 1, k + 1):
                edges.append((layout.v(i, a), layout.v(i, b)))
        for j in range(1, k + 1):
            edges.append((layout.u(j), layout.v(i, j)))
    return edges


def _gkr_labels(layout: GkrLayout) -> list[str]:
    k, r = layout.k, layout.r
    labels = ["u0"] + [f"u{j}" for j in range(1, k + 1)]
    for i in range(1, r + 1):
        labels.extend(f"v{i},{j}" for j in range(1, k + 1))
    return labels


def generate_gkr(k: int, r: int) -> tuple[Graph, GkrLayout]:
    _check_params(k, r)
    layout = GkrLayout(k=k, r=r)
    g = Graph.from_edges(layout.order, _gkr_edges(layout), _gkr_labels(layout))
    return g, layout


def generate_qkr(k: int, r: int) -> tuple[Graph, QkrLayout]:
    _check_params(k, r)
    layout = QkrLayout(k=k, r=r)
    edges = _gkr_edges(layout)
    for i in range(1, r + 1):
        wi = layout.w(i)
        edges.append((layout.u0, wi))
        for j in range(1, k + 1):
            edges.append((layout.u(j), wi))
            edges.append((layout.v(i, j), wi))
    labels = _gkr_labels(layout) + [f"w{i}" for i in range(1, r + 1)]
    g = Graph.from_edges(layout.order, edges, labels)
    return g, layout


def family_x(layout: GkrLayout) -> list[VertexSet]:
    """One vertex from the hub-plus-apex clique, one from each leaf clique."""
    hub_choices = [layout.u0] + [layout.u(j) for j in range(1, layout.k + 1)]
    leaf_choices = [
        [layout.v(i, j) for j in range(1, layout.k + 1)]
        for i in range(1, layout.r + 1)
    ]
    out = [
        mask_of((h, *vs))
        for h in hub_choices
        for vs in product(*leaf_choices)
    ]
    out.sort(key=canonical_key)
    return out


def family_w(layout: QkrLayout) -> list[VertexSet]:
    """One vertex per augmented leaf clique, at least one saturating vertex."""
    choices = [
        [layout.w(i)] + [layout.v(i, j) for j in range(1, layout.k + 1)]
        for i in range(1, layout.r + 1)
    ]
    w_all = layout.w_mask
    out = []
    for vs in product(*choices):
        m = mask_of(vs)
        if m & w_all:
            out.append(m)
    out.sort(key=canonical_key)
    return out


def irredundance_witness(layout: GkrLayout) -> VertexSet:
    """Non-dominating irredundant set of size k+r-2 (k-1 when r=1)."""
    members = [layout.u(j) for j in range(1, layout.k)]
    members.extend(layout.v(i, layout.k) for i in range(1, layout.r))
    return mask_of(members)


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class StructureReport:
    construction: str
    k: int
    r: int
    family_size: int
    gamma: int
    Gamma: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]


def _render(g: Graph, mask: VertexSet) -> str:
    return "{" + ",".join(g.label_of(v) for v in vertex_list(mask)) + "}"


def _no_dominating_subset_of(g: Graph, allowed: VertexSet) -> bool:
    """True iff no dominating set avoids the complement of `allowed`.

    Domination is upward closed, so such a set exists exactly when the
    allowed vertices themselves dominate.
    """
    return not is_dominating(g, allowed)


def verify_gkr_structure(
    k: int, r: int, budget: Optional[Budget] = None
) -> StructureReport:
    """Mechanically check the structure of the minimal dominating sets of gkr."""
    g, layout = generate_gkr(k, r)
    fam = enumerate_minimal_dominating(g, budget)
    full = g.full_mask
    hub = layout.hub_mask
    hub_apex = layout.hub_apex_mask
    leaves = [layout.leaf_mask(i) for i in range(1, r + 1)]
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append(CheckResult(name=name, passed=passed, detail=detail))

    # Every dominating set meets the hub-plus-apex clique: equivalently no
    # set avoiding it dominates.
    add(
        "dominating-sets-meet-hub-clique",
        _no_dominating_subset_of(g, full & ~hub_apex),
    )
    # A dominating set missing hub vertex u_j must hit every leaf clique.
    bad = [
        (i, j)
        for i in range(1, r + 1)
        for j in range(1, k + 1)
        if not _no_dominating_subset_of(
            g, full & ~(leaves[i - 1] | bit(layout.u(j)))
        )
    ]
    add(
        "missing-hub-vertex-forces-leaf-hits",
        not bad,
        f"violations at (leaf,hub) pairs {bad}" if bad else "",
    )
    # Checks over the enumerated minimal family.
    viol = next(
        (d for d in fam.sets if any(popcount(d & lv) > 1 for lv in leaves)), None
    )
    add(
        "minimal-hits-each-leaf-clique-at-most-once",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    viol = next(
        (d for d in fam.sets if d & 1 and d & hub_apex != 1), None
    )
    add(
        "apex-member-is-alone-in-hub-clique",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    viol = next(
        (
            d
            for d in fam.sets
            if d != hub and any(d & lv == 0 for lv in leaves)
        ),
        None,
    )
    add(
        "leaf-clique-missed-only-by-hub-set",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    expected = sorted(family_x(layout) + [hub], key=canonical_key)
    add(
        "minimal-family-is-construction-family-plus-hub",
        list(fam.sets) == expected,
        f"enumerated {len(fam.sets)} sets, expected {len(expected)}",
    )
    add("gamma-is-leaf-count-plus-one", fam.gamma == r + 1, f"gamma={fam.gamma}")
    add("Gamma-is-clique-size", fam.Gamma == k, f"Gamma={fam.Gamma}")
    if r < k - 1:
        top = [d for d in fam.sets if popcount(d) == fam.Gamma]
        add(
            "hub-is-unique-maximum-set",
            top == [hub],
            f"{len(top)} maximum sets",
        )
    else:
        add(
            "well-dominated-at-maximal-leaf-count",
            fam.gamma == fam.Gamma,
            f"gamma={fam.gamma}, Gamma={fam.Gamma}",
        )
    return StructureReport(
        construction="gkr",
        k=k,
        r=r,
        family_size=len(fam.sets),
        gamma=fam.gamma,
        Gamma=fam.Gamma,
        checks=tuple(checks),
    )


def verify_qkr_structure(
    k: int, r: int, budget: Optional[Budget] = None
) -> StructureReport:
    """Same style of checks for the saturated construction."""
    g, layout = generate_qkr(k, r)
    fam = enumerate_minimal_dominating(g, budget)
    full = g.full_mask
    hub = layout.hub_mask
    hub_apex = layout.hub_apex_mask
    w_all = layout.w_mask
    wleaves = [layout.leaf_plus_w_mask(i) for i in range(1, r + 1)]
    leaves = [layout.leaf_mask(i) for i in range(1, r + 1)]
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str = "") -> None:
        checks.append(CheckResult(name=name, passed=passed, detail=detail))

    add(
        "dominating-sets-meet-hub-or-saturators",
        _no_dominating_subset_of(g, full & ~(hub_apex | w_all)),
    )
    bad = [
        (i, j)
        for i in range(1, r + 1)
        for j in range(1, k + 1)
        if not _no_dominating_subset_of(
            g, full & ~(wleaves[i - 1] | bit(layout.u(j)))
        )
    ]
    add(
        "missing-hub-vertex-forces-augmented-leaf-hits",
        not bad,
        f"violations at {bad}" if bad else "",
    )
    bad = [
        (i, j)
        for i in range(1, r + 1)
        for j in range(1, k + 1)
        if not _no_dominating_subset_of(
            g, full & ~(leaves[i - 1] | bit(layout.w(i)) | bit(layout.u(j)))
        )
    ]
    add(
        "missing-hub-and-saturator-forces-leaf-hits",
        not bad,
        f"violations at {bad}" if bad else "",
    )
    viol = next(
        (d for d in fam.sets if any(popcount(d & wl) > 1 for wl in wleaves)), None
    )
    add(
        "minimal-hits-each-augmented-leaf-at-most-once",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    viol = next((d for d in fam.sets if d & 1 and d & hub_apex != 1), None)
    add(
        "apex-member-is-alone-in-hub-clique",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    viol = next(
        (
            d
            for d in fam.sets
            if d != hub and any(d & wl == 0 for wl in wleaves)
        ),
        None,
    )
    add(
        "augmented-leaf-missed-only-by-hub-set",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    viol = next((d for d in fam.sets if d & w_all and d & hub_apex), None)
    add(
        "saturator-member-excludes-hub-clique",
        viol is None,
        _render(g, viol) if viol is not None else "",
    )
    xs = family_x(layout)
    ws = family_w(layout)
    expected = sorted(xs + ws + [hub], key=canonical_key)
    add(
        "minimal-family-is-both-families-plus-hub",
        list(fam.sets) == expected,
        f"enumerated {len(fam.sets)} sets, expected {len(expected)}",
    )
    add("gamma-is-leaf-count", fam.gamma == r, f"gamma={fam.gamma}")
    add("Gamma-is-clique-size", fam.Gamma == k, f"Gamma={fam.Gamma}")
    min_sets = sorted(
        (d for d in fam.sets if popcount(d) == fam.gamma), key=canonical_key
    )
    add(
        "minimum-sets-are-saturator-family",
        min_sets == ws,
        f"{len(min_sets)} minimum sets, expected {len(ws)}",
    )
    top = sorted(
        (d for d in fam.sets if popcount(d) == fam.Gamma), key=canonical_key
    )
    if r < k - 1:
        add("hub-is-unique-maximum-set", top == [hub], f"{len(top)} maximum sets")
    else:
        expected_top = sorted(xs + [hub], key=canonical_key)
        add(
            "maximum-sets-are-construction-family-plus-hub",
            top == expected_top,
            f"{len(top)} maximum sets, expected {len(expected_top)}",
        )
    return StructureReport(
        construction="qkr",
        k=k,
        r=r,
        family_size=len(fam.sets),
        gamma=fam.gamma,
        Gamma=fam.Gamma,
        checks=tuple(checks),
    )


# Stock families. `star(n)` is K_{1,n}: centre 0 plus n leaves.


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("complete graph needs n >= 1")
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("empty graph needs n >= 1")
    return Graph.from_edges(n, [])


def star(n: int) -> Graph:
    if n < 1:
        raise InputError("star needs at least one leaf")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise InputError("path needs n >= 1")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise InputError("cycle needs n >= 3")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])
