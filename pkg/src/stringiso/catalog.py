"""A seeded catalog of small permutation groups and the oracle-equivalence run over it.

Families: cyclic, dihedral, symmetric, alternating, wreath products
(imprimitive), direct products on disjoint supports (intransitive) and
random two-generator subgroups.  Everything derives from one integer seed,
so two runs with equal arguments give identical summaries.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Optional, Sequence

from .calculus import is_isomorphism
from .chain import StabilizerChain, enumerate_elements, schreier_sims
from .expr import MalformedExpression, atom_count, evaluate, replace_at, tamper_atom, tamperable_paths, verify_bound
from .perm import Perm, act_on_string, compose, from_cycles, identity
from .solver import iso

DEFAULT_SEED = 20240611
DEFAULT_PAIRS = 5
TAMPER_CAP = 16
RANDOM_TARGET = 240


@dataclass(frozen=True, eq=False)
class CatalogGroup:
    name: str
    family: str
    degree: int
    generators: tuple[Perm, ...]

    @cached_property
    def chain(self) -> StabilizerChain:
        return schreier_sims(self.generators, self.degree)

    @property
    def order(self) -> int:
        return self.chain.order


def cyclic(n: int) -> tuple[Perm, ...]:
    return (tuple((i + 1) % n for i in range(n)),) if n > 1 else ()


def dihedral(n: int) -> tuple[Perm, ...]:
    return cyclic(n) + (tuple((-i) % n for i in range(n)),)


def symmetric(n: int) -> tuple[Perm, ...]:
    if n < 2:
        return ()
    return (from_cycles(n, (0, 1)),) + cyclic(n)


def alternating(n: int) -> tuple[Perm, ...]:
    return tuple(from_cycles(n, (0, 1, k)) for k in range(2, n))


_SMALL = {"C": cyclic, "D": dihedral, "S": symmetric, "A": alternating}


def wreath(base: str, k: int, top: str, l: int) -> tuple[Perm, ...]:
    """``base(k) wr top(l)`` on ``k*l`` points; blocks are ``{bk, ..., bk+k-1}``."""
    n = k * l
    gens = []
    for h in _SMALL[base](k):
        gens.append(tuple(list(h) + list(range(k, n))))
    for t in _SMALL[top](l):
        gens.append(tuple(t[i // k] * k + i % k for i in range(n)))
    return tuple(gens)


def direct_product(parts: Sequence[tuple[int, Sequence[Perm]]]) -> tuple[int, tuple[Perm, ...]]:
    """Groups on consecutive disjoint supports."""
    n = sum(d for d, _ in parts)
    gens = []
    offset = 0
    for d, gs in parts:
        for g in gs:
            p = list(range(n))
            for i in range(d):
                p[offset + i] = offset + g[i]
            gens.append(tuple(p))
        offset += d
    return n, tuple(gens)


def _random_perm(rng: random.Random, n: int) -> Perm:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


def _random_sparse(rng: random.Random, n: int) -> Perm:
    """A random cycle on a random subset: gives intransitive and small groups."""
    k = rng.randint(2, n)
    pts = rng.sample(range(n), k)
    return from_cycles(n, pts)


def m24_generators() -> tuple[Perm, ...]:
    """Three standard generators of the Mathieu group of degree 24."""
    def c(*cyc):
        return from_cycles(24, *[[x - 1 for x in cy] for cy in cyc])

    return (
        c(tuple(range(1, 24))),
        c((3, 17, 10, 7, 9), (4, 13, 14, 19, 5), (8, 18, 11, 12, 23), (15, 20, 22, 21, 16)),
        c((1, 24), (2, 23), (3, 12), (4, 16), (5, 18), (6, 10), (7, 20), (8, 14), (9, 21), (11, 17), (13, 22), (15, 19)),
    )


def build_catalog(max_degree: int = 8, seed: int = DEFAULT_SEED, random_target: int = RANDOM_TARGET) -> list[CatalogGroup]:
    """The deterministic catalog; ``random_target`` is the total size aimed for."""
    out: list[CatalogGroup] = []
    D = max_degree
    for n in range(1, D + 1):
        out.append(CatalogGroup(f"C{n}", "cyclic", n, cyclic(n)))
        if n >= 3:
            out.append(CatalogGroup(f"D{n}", "dihedral", n, dihedral(n)))
        out.append(CatalogGroup(f"S{n}", "symmetric", n, symmetric(n)))
        if n >= 3:
            out.append(CatalogGroup(f"A{n}", "alternating", n, alternating(n)))
    for k in range(2, D + 1):
        for l in range(2, D // k + 1):
            for base in "CSD":
                for top in "CSD":
                    if (base == "D" and k < 3) or (top == "D" and l < 3):
                        continue
                    out.append(CatalogGroup(f"{base}{k}wr{top}{l}", "wreath", k * l, wreath(base, k, top, l)))
    small = [(d, f, _SMALL[f](d)) for d in range(1, 5) for f in "CS"] + [(3, "A", alternating(3)), (4, "A", alternating(4)), (4, "D", dihedral(4))]
    for i, (d1, f1, g1) in enumerate(small):
        for d2, f2, g2 in small[i:]:
            if d1 + d2 <= D:
                n, gens = direct_product([(d1, g1), (d2, g2)])
                out.append(CatalogGroup(f"{f1}{d1}x{f2}{d2}", "product", n, gens))
    rng = random.Random(seed)
    i = 0
    while len(out) < random_target:
        n = rng.randint(2, D)
        if i % 2 == 0:
            gens = (_random_perm(rng, n), _random_perm(rng, n))
            fam = "random"
        else:
            gens = (_random_sparse(rng, n), _random_sparse(rng, n))
            fam = "random-sparse"
        out.append(CatalogGroup(f"R{i}_{n}", fam, n, gens))
        i += 1
    return out


def transitive_groups(max_degree: int = 10, seed: int = DEFAULT_SEED) -> list[CatalogGroup]:
    from .orbits import is_transitive

    return [g for g in build_catalog(max_degree, seed) if g.degree >= 1 and is_transitive(g.generators, g.degree)]


def string_pairs(group: CatalogGroup, rng: random.Random, count: int = DEFAULT_PAIRS) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Pairs over alphabets of size 1-4, cycling through three kinds.

    ``image``: ``y`` is ``x`` moved by a random group element (never empty);
    ``shuffle``: ``y`` is a permutation of ``x`` (same symbol counts);
    ``random``: independent strings (usually empty).
    """
    n = group.degree
    elems = None
    out = []
    for j in range(count):
        size = 1 + j % 4 if j < 4 else rng.randint(1, 4)
        x = tuple(rng.randrange(size) for _ in range(n))
        kind = j % 3
        if kind == 0:
            if elems is None:
                elems = _sample_elements(group.chain, rng)
            y = act_on_string(x, rng.choice(elems))
        elif kind == 1:
            y = list(x)
            rng.shuffle(y)
            y = tuple(y)
        else:
            y = tuple(rng.randrange(size) for _ in range(n))
        out.append((x, y))
    return out


def _sample_elements(chain: StabilizerChain, rng: random.Random) -> list[Perm]:
    """A uniform random element via one random transversal element per level."""
    out = []
    for _ in range(4):
        g = identity(chain.degree)
        for lv in reversed(chain.levels):
            u = lv.transversal[rng.choice(sorted(lv.transversal))]
            g = compose(g, u)
        out.append(g)
    return out


def brute_iso_set(elements: Sequence[Perm], x, y) -> set:
    return {g for g in elements if is_isomorphism(g, x, y)}


def expression_matches(expr, target: set) -> bool:
    try:
        c = evaluate(expr)
    except MalformedExpression:
        return False
    if c.is_empty:
        return not target
    if c.order != len(target):
        return False
    return all(g in c for g in target)


def tamper_flips(expr, target: set, cap: int = TAMPER_CAP) -> tuple[int, int]:
    """Tamper atoms one at a time, at most ``cap`` of them evenly spread; return (tampered, detected)."""
    paths = tamperable_paths(expr)
    if len(paths) > cap:
        step = len(paths) / cap
        paths = [paths[int(i * step)] for i in range(cap)]
    detected = 0
    for p in paths:
        bad = replace_at(expr, p, tamper_atom)
        if not expression_matches(bad, target):
            detected += 1
    return len(paths), detected


@dataclass
class InstanceResult:
    group: str
    degree: int
    order: int
    pair: int
    iso_size: int
    atoms: int
    coset_ok: bool
    expr_ok: bool
    bound_ok: bool
    tampered: int
    detected: int

    @property
    def ok(self) -> bool:
        return self.coset_ok and self.expr_ok and self.bound_ok and self.detected == self.tampered

    def line(self) -> str:
        tag = "PASS" if self.ok else "FAIL"
        return (
            f"{tag} {self.group} n={self.degree} |G|={self.order} pair={self.pair} |Iso|={self.iso_size} "
            f"atoms={self.atoms} coset={int(self.coset_ok)} expr={int(self.expr_ok)} bound={int(self.bound_ok)} "
            f"tamper={self.detected}/{self.tampered}"
        )


@dataclass
class CatalogSummary:
    max_degree: int
    seed: int
    groups: int
    results: list[InstanceResult] = field(default_factory=list)

    @property
    def failures(self) -> list[InstanceResult]:
        return [r for r in self.results if not r.ok]

    @property
    def passed(self) -> bool:
        return not self.failures and bool(self.results)

    def text(self, verbose: bool = False) -> str:
        lines = [f"catalog max_degree={self.max_degree} seed={self.seed} groups={self.groups} instances={len(self.results)}"]
        shown = self.results if verbose else self.failures
        lines.extend(r.line() for r in shown)
        nonempty = sum(1 for r in self.results if r.iso_size)
        atoms = sum(r.atoms for r in self.results)
        tampered = sum(r.tampered for r in self.results)
        detected = sum(r.detected for r in self.results)
        lines.append(
            f"nonempty={nonempty} atoms={atoms} tamper={detected}/{tampered} "
            f"failures={len(self.failures)} result={'PASS' if self.passed else 'FAIL'}"
        )
        return "\n".join(lines) + "\n"


def run_instances(
    groups: Sequence[CatalogGroup],
    seed: int = DEFAULT_SEED,
    pairs: int = DEFAULT_PAIRS,
    tamper: bool = True,
) -> Iterator[InstanceResult]:
    rng = random.Random(seed + 1)
    for grp in groups:
        elements = list(enumerate_elements(grp.chain))
        for j, (x, y) in enumerate(string_pairs(grp, rng, pairs)):
            # recurse all the way down: no brute-force shortcut in the solver
            res = iso(grp.chain, x, y, brute_threshold=1)
            target = brute_iso_set(elements, x, y)
            coset_ok = (not target) if res.coset.is_empty else (res.coset.order == len(target) and all(g in target for g in res.coset))
            expr_ok = expression_matches(res.expr, target)
            t, d = tamper_flips(res.expr, target) if tamper else (0, 0)
            yield InstanceResult(
                grp.name, grp.degree, grp.order, j, len(target), atom_count(res.expr), coset_ok, expr_ok,
                verify_bound(res.expr, grp.degree, True) and verify_bound(res.expr, grp.degree, False), t, d,
            )


def run_catalog(max_degree: int = 8, seed: int = DEFAULT_SEED, pairs: int = DEFAULT_PAIRS, tamper: bool = True) -> CatalogSummary:
    groups = build_catalog(max_degree, seed)
    summary = CatalogSummary(max_degree, seed, len(groups))
    summary.results.extend(run_instances(groups, seed, pairs, tamper))
    return summary


__all__ = [
    "CatalogGroup",
    "CatalogSummary",
    "DEFAULT_SEED",
    "InstanceResult",
    "build_catalog",
    "brute_iso_set",
    "cyclic",
    "dihedral",
    "direct_product",
    "expression_matches",
    "m24_generators",
    "run_catalog",
    "run_instances",
    "string_pairs",
    "symmetric",
    "alternating",
    "tamper_flips",
    "transitive_groups",
    "wreath",
]
