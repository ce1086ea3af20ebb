import random

import pytest

from domrec import (
    BudgetError,
    InputError,
    check_sep_equals_d0,
    complete_graph,
    cycle_graph,
    d0_direct,
    empty_graph,
    enumerate_minimal_dominating,
    generate_gkr,
    generate_qkr,
    partition_separation,
    popcount,
    sep_bottleneck,
    sep_brute_force,
    star,
    vertex_list,
)
from conftest import random_connected_graph
from naive import naive_sep


def test_sep_star():
    fam = enumerate_minimal_dominating(star(3))
    for rep in (sep_brute_force(fam), sep_bottleneck(fam)):
        assert rep.sep == 4
        pair = {frozenset(vertex_list(s)) for s in rep.witness_pair}
        assert pair == {frozenset({0}), frozenset({1, 2, 3})}
        assert rep.witness_partition == ((0,), (1,))


def test_sep_cycle_and_k2():
    c4 = enumerate_minimal_dominating(cycle_graph(4))
    assert len(c4.sets) == 6
    assert sep_brute_force(c4).sep == 3
    assert sep_bottleneck(c4).sep == 3
    assert naive_sep([frozenset(vertex_list(s)) for s in c4.sets]) == 3

    k2 = enumerate_minimal_dominating(complete_graph(2))
    assert sep_brute_force(k2).sep == 2
    assert sep_bottleneck(k2).sep == 2


def test_sep_rejects_single_set_family():
    fam = enumerate_minimal_dominating(empty_graph(3))
    with pytest.raises(InputError):
        sep_brute_force(fam)
    with pytest.raises(InputError):
        sep_bottleneck(fam)


def test_sep_brute_force_family_size_cap():
    g43, _ = generate_gkr(4, 3)
    fam = enumerate_minimal_dominating(g43)
    with pytest.raises(BudgetError):
        sep_brute_force(fam)


def test_sep_constructions():
    g43, _ = generate_gkr(4, 3)
    assert sep_bottleneck(enumerate_minimal_dominating(g43)).sep == 7
    q43, _ = generate_qkr(4, 3)
    assert sep_bottleneck(enumerate_minimal_dominating(q43)).sep == 7


def _witness_is_valid(fam, rep):
    a, b = rep.witness_partition
    assert sorted(a + b) == list(range(len(fam.sets)))
    assert a and b
    # The witness pair straddles the partition and has union size sep.
    i = fam.sets.index(rep.witness_pair[0])
    j = fam.sets.index(rep.witness_pair[1])
    assert (i in a) != (j in a)
    assert popcount(rep.witness_pair[0] | rep.witness_pair[1]) == rep.sep
    # The partition achieves the separation value.
    assert partition_separation(fam, b) == rep.sep


def test_witnesses_are_valid_and_methods_agree(corpus50):
    rng = random.Random(99)
    graphs = [random_connected_graph(rng, rng.randint(2, 7)) for _ in range(30)]
    checked = 0
    for g in graphs + corpus50[:20]:
        fam = enumerate_minimal_dominating(g)
        if len(fam.sets) < 2:
            continue
        rep_fast = sep_bottleneck(fam)
        _witness_is_valid(fam, rep_fast)
        assert rep_fast.sep >= fam.Gamma + 1
        if len(fam.sets) <= 15:
            rep_slow = sep_brute_force(fam)
            _witness_is_valid(fam, rep_slow)
            assert rep_slow.sep == rep_fast.sep
            checked += 1
        if len(fam.sets) <= 11:
            naive = naive_sep([frozenset(vertex_list(s)) for s in fam.sets])
            assert naive == rep_fast.sep
    assert checked >= 5, "corpus never exercised the brute-force oracle"


def test_sep_equals_d0_on_stars_and_product():
    for n in range(3, 6):
        ev = check_sep_equals_d0(star(n))
        assert ev.agree and ev.d0 == n + 1
    from domrec import cartesian_product, path_graph

    prod = cartesian_product(path_graph(3), complete_graph(3))
    ev = check_sep_equals_d0(prod)
    assert ev.agree and ev.d0 == 5


def test_sep_equals_d0_random_campaign(corpus50):
    for g in corpus50:
        ev = check_sep_equals_d0(g)
        assert ev.agree, f"sep={ev.sep} d0={ev.d0} on {g.edges()}"


def test_check_rejects_edgeless():
    with pytest.raises(InputError):
        check_sep_equals_d0(empty_graph(2))


def test_sep_equals_d0_off_the_connected_corpus():
    from domrec import Graph

    # Disconnected but edged: two disjoint edges.
    two_k2 = Graph.from_edges(4, [(0, 1), (2, 3)])
    ev = check_sep_equals_d0(two_k2)
    assert ev.agree and ev.d0 == 3
    # One edge plus isolated vertices.
    dangling = Graph.from_edges(4, [(1, 2)])
    ev = check_sep_equals_d0(dangling)
    assert ev.agree and ev.d0 == 4


def test_sep_lower_bound_gamma_plus_one(corpus50):
    for g in corpus50[:25]:
        fam = enumerate_minimal_dominating(g)
        assert sep_bottleneck(fam).sep >= fam.Gamma + 1


def test_minimax_duality_on_synthetic_families():
    # The bottleneck-tree route must equal the literal partition scan for
    # arbitrary set collections, not just genuine minimal-dominating
    # families; this isolates the max-min-cut / MST-bottleneck duality.
    from domrec import DomFamily

    rng = random.Random(808)
    for _ in range(150):
        width = rng.randint(4, 10)
        m = rng.randint(2, min(11, (1 << width) - 1))
        sets = []
        while len(sets) < m:
            mask = rng.getrandbits(width) or 1
            if mask not in sets:
                sets.append(mask)
        sizes = [popcount(s) for s in sets]
        fam = DomFamily(sets=tuple(sets), gamma=min(sizes), Gamma=max(sizes))
        fast = sep_bottleneck(fam)
        slow = sep_brute_force(fam)
        assert fast.sep == slow.sep
        _witness_is_valid(fam, fast)
        _witness_is_valid(fam, slow)


def test_d0_equals_sep_is_exact_not_approximate():
    # The two routes share nothing: one scans D_k connectivity, the other
    # runs Prim on family pair weights. Equality on every instance is the
    # cross-validation contract.
    rng = random.Random(4242)
    for _ in range(30):
        g = random_connected_graph(rng, rng.randint(2, 8))
        fam = enumerate_minimal_dominating(g)
        assert sep_bottleneck(fam).sep == d0_direct(g)
