"""Orbits and minimal block systems of permutation groups given by generators."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence

from .perm import Perm


class NotTransitive(ValueError):
    pass


@dataclass(frozen=True)
class OrbitPartition:
    degree: int
    orbits: tuple[tuple[int, ...], ...]

    @property
    def orbit_of(self) -> tuple[int, ...]:
        out = [0] * self.degree
        for j, orb in enumerate(self.orbits):
            for p in orb:
                out[p] = j
        return tuple(out)

    def __len__(self) -> int:
        return len(self.orbits)


@dataclass(frozen=True)
class BlockSystem:
    degree: int
    blocks: tuple[tuple[int, ...], ...]

    @property
    def block_of(self) -> tuple[int, ...]:
        out = [-1] * self.degree
        for j, blk in enumerate(self.blocks):
            for p in blk:
                out[p] = j
        return tuple(out)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])


def orbits(gens: Sequence[Perm], degree: int) -> OrbitPartition:
    """Orbits by a breadth-first sweep, listed by smallest point."""
    seen = [False] * degree
    out = []
    for start in range(degree):
        if seen[start]:
            continue
        seen[start] = True
        orb = [start]
        k = 0
        while k < len(orb):
            p = orb[k]
            k += 1
            for g in gens:
                q = g[p]
                if not seen[q]:
                    seen[q] = True
                    orb.append(q)
        out.append(tuple(sorted(orb)))
    return OrbitPartition(degree, tuple(out))


def is_transitive(gens: Sequence[Perm], degree: int) -> bool:
    return len(orbits(gens, degree)) <= 1


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def block_closure(gens: Sequence[Perm], degree: int, seed: Sequence[int]) -> list[list[int]]:
    """Finest invariant partition with all of ``seed`` in one part."""
    parent = list(range(degree))
    pending = [(seed[0], p) for p in seed[1:]]
    while pending:
        a, b = pending.pop()
        ra, rb = _find(parent, a), _find(parent, b)
        if ra == rb:
            continue
        if rb < ra:
            ra, rb = rb, ra
        parent[rb] = ra
        for g in gens:
            pending.append((g[a], g[b]))
    classes: dict[int, list[int]] = {}
    for p in range(degree):
        classes.setdefault(_find(parent, p), []).append(p)
    return sorted(classes.values())


def minimal_blocks(gens: Sequence[Perm], degree: int) -> Optional[BlockSystem]:
    """A block system on which the group acts primitively, or ``None`` if primitive.

    Among the systems with the largest proper block size the one whose block
    through 0 is lexicographically smallest is returned.
    """
    if not is_transitive(gens, degree):
        raise NotTransitive("minimal_blocks needs a transitive group")
    if degree < 3:
        return None
    # every block through 0 is reached by growing a smaller one by one point
    found: dict[tuple[int, ...], list[list[int]]] = {}
    frontier = [(0,)]
    visited = {(0,)}
    while frontier:
        nxt = []
        for blk in frontier:
            inside = set(blk)
            for x in range(degree):
                if x in inside:
                    continue
                system = block_closure(gens, degree, list(blk) + [x])
                new = tuple(system[0])
                if len(new) == degree or new in visited:
                    continue
                visited.add(new)
                found[new] = system
                nxt.append(new)
        frontier = nxt
    if not found:
        return None
    best = min(found, key=lambda b: (-len(b), b))
    return BlockSystem(degree, tuple(tuple(b) for b in found[best]))


def is_block_system(gens: Sequence[Perm], blocks: Sequence[Sequence[int]]) -> bool:
    sets = {frozenset(b) for b in blocks}
    return all(frozenset(g[p] for p in b) in sets for g in gens for b in blocks)


def brute_force_block_systems(gens: Sequence[Perm], degree: int) -> list[tuple[tuple[int, ...], ...]]:
    """All nontrivial invariant partitions into equal-size parts, by exhaustive search."""
    out = []
    for size in range(2, degree):
        if degree % size:
            continue
        for part in _equal_partitions(list(range(degree)), size):
            if is_block_system(gens, part):
                out.append(tuple(part))
    return out


def _equal_partitions(points: list[int], size: int):
    if not points:
        yield []
        return
    first, rest = points[0], points[1:]
    for others in combinations(rest, size - 1):
        blk = (first,) + others
        remaining = [p for p in rest if p not in others]
        for tail in _equal_partitions(remaining, size):
            yield [blk] + tail


def induced_action(g: Perm, system: BlockSystem) -> Perm:
    block_of = system.block_of
    return tuple(block_of[g[b[0]]] for b in system.blocks)


__all__ = [
    "BlockSystem",
    "NotTransitive",
    "OrbitPartition",
    "block_closure",
    "brute_force_block_systems",
    "induced_action",
    "is_block_system",
    "is_transitive",
    "minimal_blocks",
    "orbits",
]
