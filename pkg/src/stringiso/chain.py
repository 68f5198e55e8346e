"""Stabilizer chains (base and strong generating sets) via Schreier-Sims.

The chain for ``G`` is a list of levels.  Level ``i`` has a base point
``b_i`` and a transversal mapping each point ``p`` of the orbit of ``b_i``
under ``G_(b_0..b_{i-1})`` to an element ``u`` of that stabilizer with
``u[b_i] == p``.  Every element of ``G`` factors uniquely as
``u_{k-1} * ... * u_1 * u_0`` (left factor applied first).

Everything built on the chain (membership, order, subgroups given by a
test, preimages under an action, pointwise and block-system stabilizers,
element enumeration) lives here too.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from math import prod
from typing import Callable, Hashable, Iterable, Iterator, Optional, Sequence

from .perm import (
    DegreeMismatch,
    Perm,
    compose,
    compose_all,
    identity,
    inverse,
    is_identity,
)


class IndexBoundExceeded(RuntimeError):
    """More cosets were found than the caller's index bound allows."""


class NotInImage(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class Level:
    base: int
    transversal: dict  # orbit point -> Perm

    @property
    def orbit(self) -> list[int]:
        return sorted(self.transversal)


@dataclass(frozen=True, eq=False)
class StabilizerChain:
    degree: int
    levels: tuple[Level, ...]
    generators: tuple[Perm, ...] = field(default=())

    @property
    def base(self) -> list[int]:
        return [lv.base for lv in self.levels]

    @cached_property
    def order(self) -> int:
        return prod(len(lv.transversal) for lv in self.levels)

    @cached_property
    def strong_generators(self) -> list[Perm]:
        """One representative per coset per level: at most n^2 elements."""
        out = []
        for lv in self.levels:
            for p in sorted(lv.transversal):
                u = lv.transversal[p]
                if not is_identity(u):
                    out.append(u)
        return out

    def level_generators(self, i: int) -> list[Perm]:
        """Strong generators of the stabilizer of the first ``i`` base points."""
        out = []
        for lv in self.levels[i:]:
            out.extend(u for u in lv.transversal.values() if not is_identity(u))
        return out

    def sift(self, g: Perm) -> tuple[Perm, int]:
        """Strip ``g``; return the residue and the level where stripping stopped."""
        if len(g) != self.degree:
            raise DegreeMismatch(f"degree {len(g)} != {self.degree}")
        for i, lv in enumerate(self.levels):
            u = lv.transversal.get(g[lv.base])
            if u is None:
                return g, i
            g = compose(g, inverse(u))
        return g, len(self.levels)

    def __contains__(self, g: Perm) -> bool:
        h, i = self.sift(g)
        return i == len(self.levels) and is_identity(h)

    def __iter__(self) -> Iterator[Perm]:
        return enumerate_elements(self)

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"StabilizerChain(degree={self.degree}, order={self.order}, base={self.base})"


class _Builder:
    """Mutable state of the deterministic Schreier-Sims algorithm."""

    def __init__(self, degree: int, base: Sequence[int]):
        self.n = degree
        self.base: list[int] = list(base)
        self.gens: list[list[Perm]] = [[] for _ in self.base]
        self.trans: list[dict] = [{b: identity(degree)} for b in self.base]
        self.checked: list[set] = [set() for _ in self.base]
        self.all_gens: list[Perm] = []

    def _new_level(self, b: int) -> None:
        self.base.append(b)
        self.gens.append([])
        self.trans.append({b: identity(self.n)})
        self.checked.append(set())

    def _extend_orbit(self, i: int) -> None:
        trans = self.trans[i]
        queue = list(trans)
        k = 0
        while k < len(queue):
            p = queue[k]
            k += 1
            u = trans[p]
            for s in self.gens[i]:
                q = s[p]
                if q not in trans:
                    trans[q] = compose(u, s)
                    queue.append(q)

    def _strip(self, h: Perm, start: int) -> tuple[Perm, int]:
        for j in range(start, len(self.base)):
            u = self.trans[j].get(h[self.base[j]])
            if u is None:
                return h, j
            h = compose(h, inverse(u))
        return h, len(self.base)

    def _insert(self, h: Perm, first: int, last: int) -> None:
        """Add ``h`` as a strong generator on levels ``first..last``."""
        if last == len(self.base):
            self._new_level(next(p for p in range(self.n) if h[p] != p))
        self.all_gens.append(h)
        for j in range(first, last + 1):
            self.gens[j].append(h)
            self._extend_orbit(j)

    def add(self, g: Perm) -> None:
        if len(g) != self.n:
            raise DegreeMismatch(f"degree {len(g)} != {self.n}")
        h, j = self._strip(g, 0)
        if j == len(self.base) and is_identity(h):
            return
        self._insert(h, 0, j)
        self._complete(j)

    def _complete(self, top: int) -> None:
        i = top
        while i >= 0:
            changed = False
            trans = self.trans[i]
            checked = self.checked[i]
            for p in list(trans):
                u = trans[p]
                for idx, s in enumerate(self.gens[i]):
                    if (p, idx) in checked:
                        continue
                    checked.add((p, idx))
                    us = compose(u, s)
                    v = trans[s[p]]
                    if us == v:
                        continue
                    h, j = self._strip(compose(us, inverse(v)), i + 1)
                    if j < len(self.base) or not is_identity(h):
                        self._insert(h, i + 1, j)
                        i = j
                        changed = True
                        break
                if changed:
                    break
            if not changed:
                i -= 1

    def freeze(self) -> StabilizerChain:
        levels = tuple(Level(b, dict(t)) for b, t in zip(self.base, self.trans))
        return StabilizerChain(self.n, levels, tuple(self.all_gens))


def schreier_sims(gens: Iterable[Perm], degree: int, base: Sequence[int] = ()) -> StabilizerChain:
    """Stabilizer chain of the group generated by ``gens``.

    ``base`` is an optional prefix of base points; they are kept even when
    their orbit is trivial, so the tail of the chain after the prefix is the
    pointwise stabilizer of those points.  Further base points are the
    smallest points moved by the generators that need them.
    """
    b = _Builder(degree, base)
    for g in gens:
        b.add(tuple(g))
    return b.freeze()


def trivial_chain(degree: int) -> StabilizerChain:
    return StabilizerChain(degree, (), ())


def order(chain: StabilizerChain) -> int:
    return chain.order


def contains(chain: StabilizerChain, g: Perm) -> bool:
    return g in chain


def same_group(a: StabilizerChain, b: StabilizerChain) -> bool:
    return a.order == b.order and all(g in a for g in b.generators)


def is_subgroup(a: StabilizerChain, b: StabilizerChain) -> bool:
    """True when ``a`` is contained in ``b``."""
    return all(g in b for g in a.generators)


def tail(chain: StabilizerChain, k: int) -> StabilizerChain:
    """Chain of the stabilizer of the first ``k`` base points."""
    levels = chain.levels[k:]
    gens = []
    for lv in levels:
        gens.extend(u for u in lv.transversal.values() if not is_identity(u))
    return StabilizerChain(chain.degree, levels, tuple(gens))


def enumerate_elements(chain: StabilizerChain) -> Iterator[Perm]:
    """Yield every element of the group exactly once (lazily)."""
    n = chain.degree
    reps = [list(lv.transversal.values()) for lv in chain.levels]

    def walk(i: int, acc: Perm) -> Iterator[Perm]:
        # acc = u_{k-1} ... u_{i}; prepend nothing, append u_{i-1}
        if i == 0:
            yield acc
            return
        for u in reps[i - 1]:
            yield from walk(i - 1, compose(acc, u))

    yield from walk(len(reps), identity(n))


def subgroup_by_test(
    chain: StabilizerChain,
    test: Callable[[Perm], bool],
    index_bound: int,
    key: Optional[Callable[[Perm], Hashable]] = None,
) -> tuple[StabilizerChain, list[Perm]]:
    """The subgroup ``H = {g in G : test(g)}`` and one representative per right coset ``Hg``.

    ``key``, when given, must satisfy ``key(a) == key(b)`` exactly when
    ``a * b^-1`` is in ``H``; it turns the quadratic coset search into a
    dictionary lookup.
    """
    n = chain.degree
    ident = identity(n)
    reps = [ident]
    keyed = {key(ident): 0} if key is not None else None
    hgens: dict = {}
    j = 0
    while j < len(reps):
        r = reps[j]
        j += 1
        for s in chain.generators:
            t = compose(r, s)
            if keyed is not None:
                hit = keyed.get(key(t))
                cands = [] if hit is None else [reps[hit]]
            else:
                cands = reps
            for r2 in cands:
                w = compose(t, inverse(r2))
                if keyed is not None or test(w):
                    if not is_identity(w):
                        hgens.setdefault(w, None)
                    break
            else:
                reps.append(t)
                if keyed is not None:
                    keyed[key(t)] = len(reps) - 1
                if len(reps) > index_bound:
                    raise IndexBoundExceeded(
                        f"more than {index_bound} cosets found; the index bound is wrong"
                    )
    return schreier_sims(hgens, n), reps


class ActionPreimage:
    """Preimages under a homomorphism ``G -> Sym(codegree)``.

    ``hom`` maps a permutation of the domain to its induced permutation of
    ``{0..codegree-1}``; it must respect composition.  Internally the group
    is rebuilt as the diagonal ``{(g, hom(g))}`` with the image points first
    in the base, so the tail of that chain is the kernel and sifting through
    the head recovers preimages.
    """

    def __init__(self, chain: StabilizerChain, hom: Callable[[Perm], Perm], codegree: int):
        self.chain = chain
        self.hom = hom
        self.codegree = codegree
        n = chain.degree
        gens = []
        for g in chain.generators:
            img = tuple(hom(g))
            if len(img) != codegree:
                raise DegreeMismatch(f"action image has degree {len(img)}, expected {codegree}")
            gens.append(g + tuple(n + x for x in img))
        self._diag = schreier_sims(gens, n + codegree, base=range(n, n + codegree))

    @cached_property
    def kernel(self) -> StabilizerChain:
        n = self.chain.degree
        gens = [g[:n] for g in tail(self._diag, self.codegree).generators]
        return schreier_sims(gens, n)

    def element(self, tau: Perm) -> Optional[Perm]:
        """Some ``g`` with ``hom(g) == tau``, or ``None`` if ``tau`` is not in the image."""
        n = self.chain.degree
        if len(tau) != self.codegree:
            raise DegreeMismatch(f"degree {len(tau)} != {self.codegree}")
        h = tuple(tau)
        word = []
        for lv in self._diag.levels[: self.codegree]:
            b = lv.base - n
            u = lv.transversal.get(h[b] + n)
            if u is None:
                return None
            h = compose(h, inverse(tuple(x - n for x in u[n:])))
            word.append(u[:n])
        if not is_identity(h):
            return None
        return compose_all(reversed(word), n)

    def subgroup(self, target: StabilizerChain) -> StabilizerChain:
        gens = list(self.kernel.generators)
        for t in target.generators:
            g = self.element(t)
            if g is None:
                raise NotInImage("a target generator is not in the image of the action")
            gens.append(g)
        return schreier_sims(gens, self.chain.degree)

    def image(self) -> StabilizerChain:
        return schreier_sims((self.hom(g) for g in self.chain.generators), self.codegree)


def preimage_subgroup(
    chain: StabilizerChain, hom: Callable[[Perm], Perm], target: StabilizerChain
) -> StabilizerChain:
    """Full preimage of ``target`` (a subgroup of the image) under ``hom``."""
    return ActionPreimage(chain, hom, target.degree).subgroup(target)


def preimage_element(chain: StabilizerChain, hom: Callable[[Perm], Perm], tau: Perm) -> Optional[Perm]:
    return ActionPreimage(chain, hom, len(tau)).element(tau)


def pointwise_stabilizer(chain: StabilizerChain, points: Iterable[int]) -> StabilizerChain:
    pts = sorted(set(points))
    rebuilt = schreier_sims(chain.generators, chain.degree, base=pts)
    return tail(rebuilt, len(pts))


def block_action(blocks: Sequence[Sequence[int]], degree: int) -> Callable[[Perm], Perm]:
    """Homomorphism sending a permutation to its action on ``blocks``.

    Raises ``ValueError`` when some image of a block is not a block.
    """
    block_of = [-1] * degree
    for j, blk in enumerate(blocks):
        for p in blk:
            block_of[p] = j
    sets = [frozenset(b) for b in blocks]

    def act(g: Perm) -> Perm:
        out = []
        for blk, s in zip(blocks, sets):
            j = block_of[g[blk[0]]]
            if j < 0 or frozenset(g[p] for p in blk) != sets[j]:
                raise ValueError("block system is not invariant under the group")
            out.append(j)
        return tuple(out)

    return act


def block_system_stabilizer(chain: StabilizerChain, blocks: Sequence[Sequence[int]]) -> StabilizerChain:
    """Kernel of the action on a ``G``-invariant system of blocks."""
    blocks = [sorted(b) for b in blocks]
    act = block_action(blocks, chain.degree)
    return ActionPreimage(chain, act, len(blocks)).kernel


def restriction_action(points: Sequence[int]) -> Callable[[Perm], Perm]:
    pts = list(points)
    index = {x: i for i, x in enumerate(pts)}

    def act(g: Perm) -> Perm:
        return tuple(index[g[x]] for x in pts)

    return act


def symmetric_group(n: int) -> StabilizerChain:
    if n < 2:
        return trivial_chain(n)
    gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
    return schreier_sims(gens, n)


def alternating_group(n: int) -> StabilizerChain:
    if n < 3:
        return trivial_chain(n)
    gens = []
    for k in range(2, n):
        g = list(range(n))
        g[0], g[1], g[k] = 1, k, 0
        gens.append(tuple(g))
    return schreier_sims(gens, n)


def product_of_symmetric_groups(parts: Sequence[Sequence[int]], degree: int) -> StabilizerChain:
    """``prod Sym(part)``, two generators per part: a transposition and a full cycle."""
    gens = []
    for part in parts:
        part = sorted(part)
        if len(part) < 2:
            continue
        t = list(range(degree))
        t[part[0]], t[part[1]] = part[1], part[0]
        gens.append(tuple(t))
        if len(part) > 2:
            c = list(range(degree))
            for a, b in zip(part, part[1:] + part[:1]):
                c[a] = b
            gens.append(tuple(c))
    return schreier_sims(gens, degree)


def elements_set(chain: StabilizerChain) -> set:
    return set(enumerate_elements(chain))


def brute_force_closure(gens: Sequence[Perm], degree: int) -> set:
    """All products of ``gens`` by breadth-first search; an independent oracle."""
    ident = identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = compose(g, s)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    return seen


__all__ = [
    "ActionPreimage",
    "IndexBoundExceeded",
    "Level",
    "NotInImage",
    "StabilizerChain",
    "alternating_group",
    "block_action",
    "block_system_stabilizer",
    "brute_force_closure",
    "contains",
    "elements_set",
    "enumerate_elements",
    "is_subgroup",
    "order",
    "pointwise_stabilizer",
    "preimage_element",
    "preimage_subgroup",
    "product_of_symmetric_groups",
    "restriction_action",
    "same_group",
    "schreier_sims",
    "subgroup_by_test",
    "symmetric_group",
    "tail",
    "trivial_chain",
]
