"""Brute-force oracles shared by the unit and acceptance tests.

Nothing here calls the solver; group elements come from a naive closure and
isomorphism sets from filtering those elements directly.
"""

import itertools
import random

from conftest import closure
from stringiso.calculus import Coset, chain_windows, iso_window, right_multiply, union_cosets
from stringiso.chain import schreier_sims, subgroup_by_test
from stringiso.perm import compose, inverse, pull_string


def window_iso(elements, x, y, delta):
    return {g for g in elements if all(y[g[r]] == x[r] for r in delta)}


def members(c):
    return set() if c.is_empty else set(c)


def invariant_windows(orbs):
    """Every union of orbits, the empty window included."""
    out = []
    for k in range(len(orbs) + 1):
        for pick in itertools.combinations(orbs, k):
            out.append(tuple(sorted(p for o in pick for p in o)))
    return out


def _preserving_perm(rng, n, delta):
    inside, outside = list(delta), [p for p in range(n) if p not in set(delta)]
    a, b = inside[:], outside[:]
    rng.shuffle(a)
    rng.shuffle(b)
    p = list(range(n))
    for src, dst in zip(inside + outside, a + b):
        p[src] = dst
    return tuple(p)


def chain_rule_identities(groups, seed, strings_per_window=2):
    """Check the four window identities extensionally; returns (checked, failures)."""
    from stringiso.orbits import orbits

    rng = random.Random(seed)
    checked = 0
    failures = []
    for grp in groups:
        n = grp.degree
        G = grp.chain
        elements = closure(grp.generators, n)
        orbs = [tuple(o) for o in orbits(grp.generators, n).orbits]
        windows = invariant_windows(orbs)
        for delta in windows:
            for _ in range(strings_per_window):
                size = rng.randint(1, 3)
                x = tuple(rng.randrange(size) for _ in range(n))
                y = tuple(rng.randrange(size) for _ in range(n))
                if rng.random() < 0.5:
                    g = rng.choice(sorted(elements))
                    y = tuple(x[inverse(g)[r]] for r in range(n))
                truth = window_iso(elements, x, y, delta)

                # (d) restriction and lifting
                got = members(iso_window(G, x, y, delta))
                checked += 1
                if got != truth:
                    failures.append(("lift", grp.name, delta, x, y))

                # (a) cosets to groups: Iso_{G s}(x, y) = Iso_G(x, y^{s^-1}) s
                s = _preserving_perm(rng, n, delta)
                lhs = window_iso({compose(e, s) for e in elements}, x, y, delta)
                rhs = members(right_multiply(iso_window(G, x, pull_string(y, s), delta), s))
                checked += 1
                if lhs != rhs:
                    failures.append(("shift", grp.name, delta, x, y, s))

                # (b) unions: split G into cosets of the stabilizer of a point
                pt = rng.randrange(n)
                N, reps = subgroup_by_test(G, lambda g: g[pt] == pt, n)
                parts = [right_multiply(iso_window(N, x, pull_string(y, r), delta), r) for r in reps]
                union = set().union(*(members(p) for p in parts))
                checked += 1
                if union != truth or members(union_cosets(parts)) != truth:
                    failures.append(("union", grp.name, delta, x, y, pt))

                # (c) chaining two windows
                delta2 = rng.choice(windows)
                c1 = iso_window(G, x, y, delta)
                both = window_iso(elements, x, y, sorted(set(delta) | set(delta2)))
                if c1.is_empty:
                    ok = not both
                else:
                    prob = chain_windows(c1, x, y, delta2)
                    ok = members(prob.solve()) == both
                checked += 1
                if not ok:
                    failures.append(("chain", grp.name, delta, delta2, x, y))
    return checked, failures
