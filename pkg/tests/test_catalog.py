import random

from stringiso.catalog import (
    CatalogSummary, build_catalog, dihedral, run_instances, string_pairs, wreath,
)
from stringiso.chain import schreier_sims
from stringiso.orbits import minimal_blocks


def test_catalog_shape():
    cat = build_catalog(8)
    assert len(cat) >= 200
    assert max(g.degree for g in cat) <= 8
    assert {g.family for g in cat} >= {"cyclic", "dihedral", "symmetric", "alternating", "wreath", "product", "random"}
    assert [g.name for g in cat] == [g.name for g in build_catalog(8)]


def test_family_orders():
    assert schreier_sims(dihedral(5), 5).order == 10
    w = wreath("S", 2, "S", 3)
    assert schreier_sims(w, 6).order == 2**3 * 6
    assert minimal_blocks(w, 6).blocks == ((0, 1), (2, 3), (4, 5))


def test_string_pairs_alphabets():
    grp = build_catalog(6)[10]
    pairs = string_pairs(grp, random.Random(0), 8)
    assert len(pairs) == 8
    assert all(len(x) == len(y) == grp.degree for x, y in pairs)
    assert all(max(x) < 4 for x, _ in pairs)


def test_small_run_passes():
    groups = build_catalog(5)[::4]
    summary = CatalogSummary(5, 1, len(groups))
    summary.results.extend(run_instances(groups, seed=1, pairs=3))
    assert summary.passed, summary.text(verbose=True)
    assert summary.text() == summary.text()
