import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import brute_iso, closure
from oracles import members
from stringiso.chain import alternating_group, schreier_sims, symmetric_group, trivial_chain
from stringiso.expr import atom_count, evaluate
from stringiso.perm import compose, inverse
from stringiso.solver import (
    BudgetExceeded, alt_base, aut, brute_force_iso, iso, reduce_imprimitive, reduce_intransitive,
)

C4 = schreier_sims([(1, 2, 3, 0)], 4)
S2xS2 = schreier_sims([(1, 0, 2, 3), (0, 1, 3, 2)], 4)
PGL25 = schreier_sims([(1, 2, 3, 4, 0, 5), (0, 2, 4, 1, 3, 5), (5, 4, 2, 3, 1, 0)], 6)


def test_iso_examples():
    r = iso(symmetric_group(2), (0, 1), (1, 0))
    assert members(r.coset) == {(1, 0)} and atom_count(r.expr) == 1
    assert iso(C4, (0, 0, 1, 1), (0, 1, 1, 1)).coset.is_empty
    r = iso(alternating_group(4), (0, 0, 1, 1), (0, 1, 0, 1), brute_threshold=1)
    assert r.coset.order == 2
    assert r.stats.atom_count == atom_count(r.expr)


def test_aut_examples():
    assert aut(C4, (3, 3, 3, 3)).coset.order == 4
    assert aut(symmetric_group(4), (0, 0, 1, 1), brute_threshold=1).coset.order == 4
    assert aut(alternating_group(4), (0, 0, 1, 1), brute_threshold=1).coset.order == 2


def test_brute_force_examples():
    t = trivial_chain(3)
    assert members(brute_force_iso(t, (0, 1, 0), (0, 1, 0))) == {(0, 1, 2)}
    assert brute_force_iso(t, (0, 1, 0), (1, 0, 0)).is_empty
    c = brute_force_iso(symmetric_group(3), (0, 1, 1), (1, 1, 0))
    assert c.order == 2
    assert members(c) == brute_iso(closure(symmetric_group(3).generators, 3), (0, 1, 1), (1, 1, 0))


def test_reduce_intransitive():
    r = reduce_intransitive(S2xS2, (0, 1, 0, 1), (1, 0, 0, 1), brute_threshold=1)
    assert members(r.coset) == {(1, 0, 2, 3)}
    r = reduce_intransitive(S2xS2, (0, 1, 0, 0), (0, 0, 0, 1), brute_threshold=1)
    assert r.coset.is_empty
    with pytest.raises(ValueError):
        reduce_intransitive(C4, (0, 1, 0, 1), (0, 1, 0, 1))


def test_reduce_imprimitive():
    r = reduce_imprimitive(C4, (0, 1, 0, 1), (0, 1, 0, 1), brute_threshold=1)
    assert members(r.coset) == {(0, 1, 2, 3), (2, 3, 0, 1)}
    assert reduce_imprimitive(C4, (0, 0, 1, 1), (0, 1, 0, 1), brute_threshold=1).coset.is_empty
    r = reduce_imprimitive(C4, (0, 0, 1, 2), (2, 0, 0, 1), brute_threshold=1)
    assert r.coset.order == 1


def test_alt_base():
    c, _ = alt_base(alternating_group(4), (2, 2, 2, 2), (2, 2, 2, 2))
    assert c.order == 12
    assert alt_base(alternating_group(3), (0, 0, 1), (0, 1, 1))[0].is_empty
    # y[g[r]] == x[r] forces g = (2 0 1) as an image list
    c, e = alt_base(alternating_group(3), (0, 1, 2), (1, 2, 0))
    assert members(c) == brute_iso(closure(alternating_group(3).generators, 3), (0, 1, 2), (1, 2, 0))
    assert members(c) == {(2, 0, 1)} and atom_count(e) == 1


def test_budget_exhausted_on_primitive_group():
    assert PGL25.order == 120
    with pytest.raises(BudgetExceeded) as info:
        iso(PGL25, (0, 0, 1, 1, 2, 2), (0, 1, 0, 1, 2, 2), budget=10)
    assert info.value.order == 120
    r = iso(PGL25, (0, 0, 1, 1, 2, 2), (0, 1, 0, 1, 2, 2), brute_threshold=1)
    assert members(r.coset) == brute_iso(closure(PGL25.generators, 6), (0, 0, 1, 1, 2, 2), (0, 1, 0, 1, 2, 2))


group_st = st.integers(2, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.permutations(range(n)).map(tuple), min_size=1, max_size=2))
)


@settings(max_examples=60, deadline=None)
@given(group_st, st.randoms(use_true_random=False))
def test_oracle_equivalence_and_symmetry(data, rng):
    n, gens = data
    G = schreier_sims(gens, n)
    elements = closure(gens, n)
    x = tuple(rng.randrange(3) for _ in range(n))
    y = list(x)
    rng.shuffle(y)
    y = tuple(y)
    fwd = iso(G, x, y, brute_threshold=1)
    back = iso(G, y, x, brute_threshold=1)
    truth = brute_iso(elements, x, y)
    assert members(fwd.coset) == truth
    assert members(evaluate(fwd.expr)) == truth
    assert {inverse(g) for g in members(back.coset)} == truth
    a = aut(G, x, brute_threshold=1).coset
    for g in a.group.generators:
        for h in a.group.generators:
            assert compose(g, h) in a.group
        assert inverse(g) in a.group


def test_degree_mismatch():
    with pytest.raises(ValueError):
        iso(C4, (0, 1, 0), (0, 1, 0))
