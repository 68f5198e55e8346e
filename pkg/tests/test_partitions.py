import itertools
import math
from fractions import Fraction

import pytest

from stringiso.catalog import symmetric
from stringiso.partitions import (
    ColouredPartition, binom_inequality, binom_value, check_part_bound, colex_subsets, exp_factor_ok,
    induced_generators, induced_partition_on_ksubsets, inequality_grid, johnson_blocks, parts_are_blocks,
)


def _classify_pairs(parts, k):
    """Group k-subsets by how many points they take from each part."""
    owner = {p: i for i, part in enumerate(parts) for p in part}
    n = sum(len(p) for p in parts)
    sig = {}
    for s in itertools.combinations(range(n), k):
        key = tuple(sum(1 for p in s if owner[p] == i) for i in range(len(parts)))
        sig.setdefault(key, []).append(s)
    return sorted(len(v) for v in sig.values())


def test_six_point_example():
    C = ColouredPartition.uncoloured(6, [[0, 1, 2], [3, 4, 5]])
    induced, subsets = induced_partition_on_ksubsets(C, 2)
    assert len(subsets) == 15
    assert sorted(len(p) for p in induced.parts) == _classify_pairs(C.parts, 2) == [3, 3, 9]
    size3 = [c for p, c in zip(induced.parts, induced.colours) if len(p) == 3]
    size9 = [c for p, c in zip(induced.parts, induced.colours) if len(p) == 9]
    assert size3[0] == size3[1] != size9[0]
    assert check_part_bound(C, 2)


def test_trivial_cases():
    C = ColouredPartition.uncoloured(4, [[0, 1], [2, 3]])
    assert len(induced_partition_on_ksubsets(C, 4)[0].parts) == 1
    S = ColouredPartition.uncoloured(4, [[0], [1], [2], [3]])
    assert all(len(p) == 1 for p in induced_partition_on_ksubsets(S, 1)[0].parts)
    assert check_part_bound(S, 1)
    with pytest.raises(ValueError):
        ColouredPartition.uncoloured(3, [[0, 1]])


def test_binomial_examples():
    assert binom_value(2, 1, Fraction(1, 2)) == Fraction(1, 2)
    assert binom_inequality(2, 1, Fraction(1, 2))
    assert binom_value(3, 2, Fraction(2, 3)) == Fraction(4, 9)
    assert binom_inequality(3, 2, Fraction(2, 3))
    with pytest.raises(ValueError):
        binom_inequality(5, 2, Fraction(9, 10))


def test_inequality_grid():
    r = inequality_grid(30)
    assert r.failures == ()
    assert r.equalities == ((2, 1, Fraction(1, 2)),)
    assert r.max_value == Fraction(1, 2)
    assert r.checked > 10000


def test_exp_factor():
    assert exp_factor_ok(1046)
    assert not exp_factor_ok(100)


def test_colex_order():
    assert colex_subsets(4, 2) == [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (2, 3)]


def test_johnson_m5():
    r = johnson_blocks(5, 2, 2, symmetric(5))
    assert r.size_B == 45
    sizes = sorted(len(p) for p in r.parts)
    assert sizes == [3] * 15
    assert r.max_part == 3 and 3 <= 22
    gens = induced_generators(5, 2, 2, symmetric(5))
    assert parts_are_blocks(r.parts, gens)


def test_johnson_m12():
    r = johnson_blocks(12, 2, 2, symmetric(12))
    assert r.size_B == math.comb(66, 2) == 2145
    assert r.max_part <= 1072
    assert sum(len(p) for p in r.parts) == 2145
    assert parts_are_blocks(r.parts, induced_generators(12, 2, 2, symmetric(12)))


def test_johnson_trivial_group():
    r = johnson_blocks(5, 2, 2, [])
    assert all(len(o) == 1 for o in r.orbits)
    assert r.half_bound_holds
