"""Recursive solver for ``Iso_G(x, y)`` that also writes a coset expression.

Dispatch, in order:

1. ``n == 1`` or ``|G| <= brute_threshold``: enumerate ``G``.
2. ``G`` intransitive: solve the first orbit, lift, then solve the rest
   inside the preimage (a glue node).
3. ``G`` is ``Alt(n)`` or ``Sym(n)``: the alternating base case (one atom,
   or a union of two for ``Sym``).
4. ``G`` imprimitive: union over the cosets of the kernel ``N`` of the
   action on a minimal block system.
5. Any other primitive group: enumerate if ``|G| <= budget``, else give up.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .calculus import (
    Coset,
    Empty,
    PartialCoset,
    check_string,
    coset_from_members,
    restrict_string,
    right_multiply,
    symbol_classes,
    union_cosets,
)
from .chain import (
    ActionPreimage,
    IndexBoundExceeded,
    StabilizerChain,
    alternating_group,
    block_action,
    enumerate_elements,
    restriction_action,
    schreier_sims,
    subgroup_by_test,
)
from .expr import (
    EmptyExpr,
    Expression,
    Glue,
    Union,
    atom,
    atom_count,
    atom_group,
    singleton,
)
from .orbits import minimal_blocks, orbits
from .perm import Perm, compose, identity, is_even, is_identity, pull_string, transposition

DEFAULT_BUDGET = 10**5
DEFAULT_BRANCH_CAP = 10**6


class BudgetExceeded(RuntimeError):
    def __init__(self, message: str, order: int = 0):
        super().__init__(message)
        self.order = order


@dataclass
class SolveStats:
    depth: int = 0
    branches: dict = field(default_factory=dict)
    empty_branches: int = 0
    atom_count: int = 0

    def bump(self, rule: str, k: int = 1) -> None:
        self.branches[rule] = self.branches.get(rule, 0) + k


@dataclass(frozen=True, eq=False)
class SolveResult:
    coset: PartialCoset
    expr: Expression
    stats: SolveStats


def brute_force_iso(G: StabilizerChain, x: Sequence[int], y: Sequence[int]) -> PartialCoset:
    """Try every element of ``G``."""
    hits = [g for g in enumerate_elements(G) if all(y[g[r]] == x[r] for r in range(len(x)))]
    return coset_from_members(hits, G.degree)


def _brute_with_expr(G: StabilizerChain, x, y) -> tuple[PartialCoset, Expression]:
    n = G.degree
    hits = [g for g in enumerate_elements(G) if all(y[g[r]] == x[r] for r in range(n))]
    if not hits:
        return Empty(n), EmptyExpr(n)
    hits.sort()
    coset = coset_from_members(hits, n)
    if len(hits) == 1:
        return coset, singleton(hits[0])
    ident = identity(n)
    return coset, Union(n, tuple((singleton(g), ident) for g in hits))


def _is_giant(G: StabilizerChain) -> bool:
    n = G.degree
    if n < 3:
        return n == 2 and G.order == 2
    f = math.factorial(n)
    return G.order in (f, f // 2) and len(orbits(G.generators, n)) == 1


def alt_base(G: StabilizerChain, x: Sequence[int], y: Sequence[int]) -> tuple[PartialCoset, Expression]:
    """``Iso`` inside ``Alt(n)``; ``G`` must be the alternating group."""
    n = G.degree
    if G.order != max(1, math.factorial(n) // 2) or n < 1:
        raise ValueError("alt_base needs the alternating group")
    if Counter(x) != Counter(y):
        return Empty(n), EmptyExpr(n)
    xc = {}
    for r, s in enumerate(x):
        xc.setdefault(s, []).append(r)
    yc = {}
    for r, s in enumerate(y):
        yc.setdefault(s, []).append(r)
    pi = [0] * n
    for s, pts in xc.items():
        for p, q in zip(pts, yc[s]):
            pi[p] = q
    pi = tuple(pi)
    if not is_even(pi):
        big = next((c for c in xc.values() if len(c) >= 2), None)
        if big is None:
            return Empty(n), EmptyExpr(n)
        pi = compose(transposition(n, big[0], big[1]), pi)
    parts = tuple(tuple(c) for c in symbol_classes(x))
    e = atom(parts, pi)
    return Coset(atom_group(e.parts, n), pi), e


class Solver:
    def __init__(
        self,
        budget: int = DEFAULT_BUDGET,
        brute_threshold: Optional[int] = None,
        branch_cap: int = DEFAULT_BRANCH_CAP,
    ):
        if budget < 1 or branch_cap < 1:
            raise ValueError("budgets must be positive")
        self.budget = budget
        self.brute_threshold = budget if brute_threshold is None else brute_threshold
        self.branch_cap = branch_cap
        self.stats = SolveStats()

    def solve(self, G: StabilizerChain, x, y, depth: int = 0) -> tuple[PartialCoset, Expression]:
        n = G.degree
        self.stats.depth = max(self.stats.depth, depth)
        if Counter(x) != Counter(y):
            self.stats.empty_branches += 1
            return Empty(n), EmptyExpr(n)
        if n <= 1 or G.order <= self.brute_threshold:
            self.stats.bump("brute")
            return _brute_with_expr(G, x, y)
        orbs = orbits(G.generators, n)
        if len(orbs) > 1:
            self.stats.bump("intransitive")
            return self._intransitive(G, x, y, orbs.orbits[0], depth)
        if _is_giant(G):
            self.stats.bump("alt")
            return self._giant(G, x, y)
        if minimal_blocks(G.generators, n) is not None:
            self.stats.bump("imprimitive")
            return self._imprimitive(G, x, y, depth)
        if G.order > self.budget:
            raise BudgetExceeded(
                f"primitive group of order {G.order} exceeds the brute-force budget {self.budget}",
                G.order,
            )
        self.stats.bump("primitive_brute")
        return _brute_with_expr(G, x, y)

    def _intransitive(self, G, x, y, delta, depth):
        n = G.degree
        delta = tuple(delta)
        rest = tuple(p for p in range(n) if p not in set(delta))
        act = restriction_action(delta)
        g_delta = schreier_sims((act(g) for g in G.generators), len(delta))
        c1, e1 = self.solve(g_delta, restrict_string(x, delta), restrict_string(y, delta), depth + 1)
        if c1.is_empty:
            self.stats.empty_branches += 1
            return Empty(n), EmptyExpr(n)
        pre = ActionPreimage(G, act, len(delta))
        h1 = pre.subgroup(c1.group)
        t1 = pre.element(c1.rep)
        y1 = pull_string(y, t1)
        rest_act = restriction_action(rest)
        g_rest = schreier_sims((rest_act(h) for h in h1.generators), len(rest))
        c2, e2 = self.solve(g_rest, restrict_string(x, rest), restrict_string(y1, rest), depth + 1)
        if c2.is_empty:
            self.stats.empty_branches += 1
            return Empty(n), EmptyExpr(n)
        pre2 = ActionPreimage(h1, rest_act, len(rest))
        k2 = pre2.subgroup(c2.group)
        u = pre2.element(c2.rep)
        coset = Coset(k2, compose(u, t1))
        return coset, Glue(n, e1, e2, (delta, rest), tuple(h1.generators), t1)

    def _giant(self, G, x, y):
        n = G.degree
        if G.order * 2 == math.factorial(n) or n < 2:
            return alt_base(G, x, y)
        # Sym(n) = Alt(n) u Alt(n)*(0 1)
        alt = alternating_group(n)
        t = transposition(n, 0, 1)
        ident = identity(n)
        ca, ea = alt_base(alt, x, y)
        cb, eb = alt_base(alt, x, pull_string(y, t))
        cb = right_multiply(cb, t)
        kids = []
        if not ca.is_empty:
            kids.append((ea, ident))
        if not cb.is_empty:
            kids.append((eb, t))
        if not kids:
            self.stats.empty_branches += 1
            return Empty(n), EmptyExpr(n)
        return union_cosets([ca, cb]), Union(n, tuple(kids))

    def _imprimitive(self, G, x, y, depth):
        n = G.degree
        system = minimal_blocks(G.generators, n)
        act = block_action(system.blocks, n)
        try:
            kernel, reps = subgroup_by_test(
                G, lambda g: is_identity(act(g)), self.branch_cap, key=act
            )
        except IndexBoundExceeded:
            raise BudgetExceeded(
                f"more than {self.branch_cap} block-action cosets", G.order
            ) from None
        parts = []
        kids = []
        for sigma in reps:
            self.stats.bump("imprimitive_branch")
            c, e = self.solve(kernel, x, pull_string(y, sigma), depth + 1)
            if c.is_empty:
                self.stats.empty_branches += 1
                continue
            parts.append(right_multiply(c, sigma))
            kids.append((e, sigma))
        if not parts:
            return Empty(n), EmptyExpr(n)
        return union_cosets(parts), Union(n, tuple(kids))


def iso(
    G: StabilizerChain,
    x: Sequence[int],
    y: Sequence[int],
    budget: int = DEFAULT_BUDGET,
    brute_threshold: Optional[int] = None,
    branch_cap: int = DEFAULT_BRANCH_CAP,
) -> SolveResult:
    n = G.degree
    x = check_string(x, n)
    y = check_string(y, n)
    s = Solver(budget, brute_threshold, branch_cap)
    coset, expr = s.solve(G, x, y)
    s.stats.atom_count = atom_count(expr)
    return SolveResult(coset, expr, s.stats)


def aut(
    G: StabilizerChain,
    x: Sequence[int],
    budget: int = DEFAULT_BUDGET,
    brute_threshold: Optional[int] = None,
) -> SolveResult:
    res = iso(G, x, x, budget, brute_threshold)
    return SolveResult(Coset(res.coset.group, identity(G.degree)), res.expr, res.stats)


def reduce_intransitive(G, x, y, budget: int = DEFAULT_BUDGET, brute_threshold: Optional[int] = None) -> SolveResult:
    n = G.degree
    orbs = orbits(G.generators, n)
    if len(orbs) < 2:
        raise ValueError("group is transitive")
    s = Solver(budget, brute_threshold)
    x, y = check_string(x, n), check_string(y, n)
    if Counter(x) != Counter(y):
        return SolveResult(Empty(n), EmptyExpr(n), s.stats)
    coset, expr = s._intransitive(G, x, y, orbs.orbits[0], 0)
    s.stats.atom_count = atom_count(expr)
    return SolveResult(coset, expr, s.stats)


def reduce_imprimitive(G, x, y, budget: int = DEFAULT_BUDGET, brute_threshold: Optional[int] = None) -> SolveResult:
    n = G.degree
    if len(orbits(G.generators, n)) != 1 or minimal_blocks(G.generators, n) is None:
        raise ValueError("group is not transitive and imprimitive")
    s = Solver(budget, brute_threshold)
    x, y = check_string(x, n), check_string(y, n)
    coset, expr = s._imprimitive(G, x, y, 0)
    s.stats.atom_count = atom_count(expr)
    return SolveResult(coset, expr, s.stats)


__all__ = [
    "BudgetExceeded",
    "DEFAULT_BRANCH_CAP",
    "DEFAULT_BUDGET",
    "SolveResult",
    "SolveStats",
    "Solver",
    "alt_base",
    "aut",
    "brute_force_iso",
    "iso",
    "reduce_imprimitive",
    "reduce_intransitive",
]
