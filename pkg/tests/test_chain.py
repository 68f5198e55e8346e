import math
import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_perms, closure
from stringiso.catalog import m24_generators
from stringiso.chain import (
    IndexBoundExceeded, NotInImage, alternating_group, block_action, block_system_stabilizer, contains,
    enumerate_elements, order, pointwise_stabilizer, preimage_element, preimage_subgroup, schreier_sims,
    subgroup_by_test, symmetric_group, trivial_chain,
)
from stringiso.perm import DegreeMismatch, compose, identity, is_even

C4 = schreier_sims([(1, 2, 3, 0)], 4)


def test_small_orders():
    assert schreier_sims([(1, 0, 2, 3), (1, 2, 3, 0)], 4).order == 24
    assert schreier_sims([], 5).order == 1
    assert order(alternating_group(5)) == 60
    assert order(trivial_chain(3)) == 1
    assert schreier_sims([(1, 2, 3, 4, 0), (4, 3, 2, 1, 0)], 5).order == 10


@pytest.mark.parametrize("n", range(1, 9))
def test_sym_alt_orders(n):
    assert symmetric_group(n).order == math.factorial(n)
    assert alternating_group(n).order == (math.factorial(n) // 2 if n > 1 else 1)


def test_m24_order():
    assert schreier_sims(m24_generators(), 24).order == 244823040


def test_contains():
    a3 = alternating_group(3)
    assert not contains(a3, (1, 0, 2))
    assert contains(a3, identity(3))
    assert contains(C4, (2, 3, 0, 1))
    with pytest.raises(DegreeMismatch):
        contains(C4, (0, 1, 2))


gens_st = st.integers(1, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.permutations(range(n)).map(tuple), max_size=3))
)


@settings(max_examples=60, deadline=None)
@given(gens_st)
def test_order_and_membership_match_closure(data):
    n, gens = data
    chain = schreier_sims(gens, n)
    group = closure(gens, n)
    assert chain.order == len(group)
    for g in all_perms(n):
        assert contains(chain, g) == (g in group)
    elems = list(enumerate_elements(chain))
    assert len(elems) == len(set(elems)) == chain.order
    assert set(elems) == group


def test_subgroup_by_test_examples():
    s4 = symmetric_group(4)
    h, reps = subgroup_by_test(s4, is_even, 2)
    assert h.order == 12 and len(reps) == 2
    h, reps = subgroup_by_test(s4, lambda g: True, 1)
    assert h.order == 24 and len(reps) == 1
    h, reps = subgroup_by_test(s4, lambda g: g[0] == 0, 4)
    assert h.order == 6 and len(reps) == 4
    assert h.order * len(reps) == s4.order
    # representatives lie in distinct right cosets
    for i, a in enumerate(reps):
        for b in reps[i + 1:]:
            assert compose(a, tuple(b.index(k) for k in range(4)))[0] != 0
    with pytest.raises(IndexBoundExceeded):
        subgroup_by_test(s4, lambda g: g[0] == 0, 3)


def test_preimages():
    blocks = [[0, 2], [1, 3]]
    act = block_action(blocks, 4)
    kernel = preimage_subgroup(C4, act, trivial_chain(2))
    assert set(enumerate_elements(kernel)) == {(0, 1, 2, 3), (2, 3, 0, 1)}
    assert preimage_element(C4, act, (1, 0)) in {(1, 2, 3, 0), (3, 0, 1, 2)}
    assert preimage_element(C4, act, (0, 1)) in {(0, 1, 2, 3), (2, 3, 0, 1)}
    assert preimage_subgroup(C4, lambda g: (0,), trivial_chain(1)).order == 4
    assert preimage_subgroup(C4, lambda g: g, C4).order == 4
    # tau outside the image
    odd_only = schreier_sims([(1, 0, 2)], 3)
    assert preimage_element(odd_only, lambda g: g, (1, 2, 0)) is None
    with pytest.raises(NotInImage):
        preimage_subgroup(odd_only, lambda g: g, alternating_group(3))


def test_preimage_sizes_random():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 6)
        gens = [tuple(rng.sample(range(n), n)) for _ in range(2)]
        g = schreier_sims(gens, n)
        pts = sorted(rng.sample(range(n), rng.randint(1, n)))
        # action on the orbit of the chosen points is awkward; use the sign map instead
        sign = lambda p: (0, 1) if is_even(p) else (1, 0)
        image = schreier_sims([sign(p) for p in g.generators], 2)
        r = preimage_subgroup(g, sign, image)
        kern = preimage_subgroup(g, sign, trivial_chain(2))
        assert r.order == kern.order * image.order == g.order
        stab = pointwise_stabilizer(g, pts)
        assert all(e[p] == p for e in enumerate_elements(stab) for p in pts)
        assert stab.order == sum(1 for e in closure(gens, n) if all(e[p] == p for p in pts))


def test_pointwise_and_block_stabilizers():
    assert pointwise_stabilizer(symmetric_group(3), [0]).order == 2
    assert pointwise_stabilizer(C4, []).order == 4
    assert set(enumerate_elements(pointwise_stabilizer(symmetric_group(4), [0, 1]))) == {(0, 1, 2, 3), (0, 1, 3, 2)}
    assert block_system_stabilizer(C4, [[0, 2], [1, 3]]).order == 2
    assert block_system_stabilizer(C4, [[0, 1, 2, 3]]).order == 4
    assert block_system_stabilizer(C4, [[0], [1], [2], [3]]).order == 1
    with pytest.raises(ValueError):
        block_system_stabilizer(C4, [[0, 1], [2, 3]])


def test_enumerate_examples():
    assert list(enumerate_elements(trivial_chain(3))) == [(0, 1, 2)]
    assert len(set(enumerate_elements(symmetric_group(3)))) == 6
    evens = {p for p in all_perms(4) if is_even(p)}
    assert set(enumerate_elements(alternating_group(4))) == evens
