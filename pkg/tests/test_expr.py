import random

import pytest
from hypothesis import given, settings, strategies as st

from conftest import all_perms, closure
from oracles import members
from stringiso.chain import schreier_sims
from stringiso.expr import (
    AltExtend, EmptyExpr, MalformedExpression, ParseError, atom, atom_count, atom_paths, combine_alt_extend,
    combine_glue, combine_union, evaluate, parse, replace_at, serialize, singleton, tamper_atom,
    tamperable_paths, verify_bound,
)
from stringiso.perm import identity, is_even
from stringiso.solver import iso


def _atom_oracle(parts, rep, n):
    """Even permutations preserving every part, shifted by rep."""
    owner = {p: i for i, part in enumerate(parts) for p in part}
    keep = [g for g in all_perms(n) if is_even(g) and all(owner.get(g[p]) == owner.get(p) for p in range(n))]
    return {tuple(rep[g[i]] for i in range(n)) for g in keep}


def test_atom_examples():
    sigma = (2, 0, 1, 3)
    assert members(evaluate(atom([[0], [1], [2], [3]], sigma))) == {sigma}
    assert evaluate(atom([[0, 1, 2, 3]], identity(4))).order == 12
    assert evaluate(atom([[0, 1], [2, 3]], identity(4))).order == 2
    with pytest.raises(ValueError):
        atom([[0, 1], [1, 2]], identity(3))


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_atom_order_formula(data):
    n = data.draw(st.integers(1, 6))
    labels = data.draw(st.lists(st.integers(0, 3), min_size=n, max_size=n))
    parts = [[p for p in range(n) if labels[p] == c] for c in set(labels)]
    rep = tuple(data.draw(st.permutations(range(n))))
    assert members(evaluate(atom(parts, rep))) == _atom_oracle(parts, rep, n)


def test_union_examples():
    a = singleton(identity(3))
    assert members(evaluate(combine_union([(a, identity(3))]))) == {identity(3)}
    assert isinstance(combine_union([], degree=3), EmptyExpr)
    u = combine_union([(singleton((0, 1)), (0, 1)), (singleton((0, 1)), (1, 0))])
    assert members(evaluate(u)) == {(0, 1), (1, 0)}
    assert atom_count(u) == 2
    overlapping = combine_union([(singleton((0, 1)), (0, 1)), (singleton((0, 1)), (0, 1))])
    with pytest.raises(MalformedExpression):
        evaluate(overlapping)


def test_glue_direct_product():
    left = atom([[0, 1]], identity(2))
    right = atom([[0, 1]], identity(2))
    # Alt(2) is trivial, so the fiber over the left side is what fixes {0, 1} pointwise
    fiber = [(0, 1, 3, 2)]
    g = combine_glue(left, right, ([0, 1], [2, 3]), fiber, identity(4))
    assert members(evaluate(g)) == {identity(4)}
    wrong = combine_glue(left, right, ([0, 1], [2, 3]), [(1, 0, 2, 3), (0, 1, 3, 2)], identity(4))
    with pytest.raises(MalformedExpression):
        evaluate(wrong)
    assert isinstance(combine_glue(EmptyExpr(2), right, ([0, 1], [2, 3]), fiber, identity(4)), EmptyExpr)


def test_glue_from_solver_matches_brute_force():
    G = schreier_sims([(1, 0, 2, 3), (0, 1, 3, 2)], 4)
    x, y = (0, 1, 0, 1), (1, 0, 0, 1)
    res = iso(G, x, y, brute_threshold=1)
    truth = {g for g in closure(G.generators, 4) if all(y[g[r]] == x[r] for r in range(4))}
    assert members(evaluate(res.expr)) == truth == {(1, 0, 2, 3)}


def test_alt_extend():
    c3 = (1, 2, 0)
    e = combine_alt_extend(singleton(identity(3)), c3, (2, 0, 1), identity(3), (3, 1), [[0], [1], [2]])
    assert members(evaluate(e)) == {identity(3), (1, 2, 0), (2, 0, 1)}
    shifted = AltExtend(3, e.child, e.s1, e.s2, (1, 0, 2), e.gamma, e.parts)
    assert members(evaluate(shifted)) == {(1, 0, 2), (2, 1, 0), (0, 2, 1)}
    with pytest.raises(MalformedExpression):
        combine_alt_extend(singleton(identity(3)), (1, 0, 2), (1, 0, 2), identity(3), (3, 1), [[0], [1], [2]])


def test_alt_extend_degree_six():
    parts = [[0, 1], [2, 3], [4, 5]]
    child = atom(parts, identity(6))
    s1 = (2, 3, 4, 5, 0, 1)
    s2 = (4, 5, 0, 1, 2, 3)
    e = combine_alt_extend(child, s1, s2, identity(6), (3, 1), parts)
    gens = list(evaluate(child).group.generators) + [s1, s2]
    assert members(evaluate(e)) == closure(gens, 6)


def test_atom_count_and_bound():
    assert atom_count(singleton((0,))) == 1
    k = 5
    u = combine_union([(singleton(identity(5)), tuple((i + j) % 5 for i in range(5))) for j in range(k)])
    assert atom_count(u) == k
    assert verify_bound(singleton((0,)), 1, True)
    many = combine_union([(singleton(identity(4)), g) for g in all_perms(4)[:16]])
    assert atom_count(many) == 16
    assert verify_bound(many, 4, True) and verify_bound(many, 4, False)


def test_serialize_round_trip():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(2, 6)
        x = tuple(rng.randrange(2) for _ in range(n))
        y = tuple(rng.sample(x, n))
        gens = [tuple(rng.sample(range(n), n)) for _ in range(2)]
        res = iso(schreier_sims(gens, n), x, y, brute_threshold=1)
        text = serialize(res.expr)
        again = parse(text)
        assert serialize(again) == text
        assert members(evaluate(again)) == members(res.coset)


def test_parse_errors():
    for bad in ["", "(atom", "(atom (deg 2) (rep 0 0))", "(nonsense)"]:
        with pytest.raises(ParseError):
            parse(bad)


def test_tamper_flips_membership():
    res = iso(schreier_sims([(1, 2, 3, 0)], 4), (0, 1, 0, 1), (0, 1, 0, 1), brute_threshold=1)
    good = members(evaluate(res.expr))
    paths = tamperable_paths(res.expr)
    assert paths
    for p in paths:
        bad = replace_at(res.expr, p, tamper_atom)
        try:
            assert members(evaluate(bad)) != good
        except MalformedExpression:
            pass
    assert len(atom_paths(res.expr)) == atom_count(res.expr)
    with pytest.raises(ValueError):
        tamper_atom(singleton((0,)))
