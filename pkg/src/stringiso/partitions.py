"""Coloured partitions transferred to k-subsets, and Johnson-scheme block extraction.

k-subsets of ``{0..m-1}`` are indexed in colex order: subsets are sorted
tuples, compared by their largest element first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Hashable, Sequence

from .orbits import orbits as _orbits
from .perm import Perm

DEFAULT_B_CAP = 10**5


@dataclass(frozen=True)
class ColouredPartition:
    size: int
    parts: tuple[tuple[int, ...], ...]
    colours: tuple[Hashable, ...]

    def __post_init__(self):
        if len(self.parts) != len(self.colours):
            raise ValueError("one colour per part")
        pts = sorted(p for part in self.parts for p in part)
        if pts != list(range(self.size)):
            raise ValueError("parts do not partition the ground set")

    @classmethod
    def uncoloured(cls, size: int, parts: Sequence[Sequence[int]]) -> "ColouredPartition":
        parts = tuple(tuple(sorted(p)) for p in parts)
        return cls(size, parts, (0,) * len(parts))

    def respected_by(self, g: Perm) -> bool:
        """``g`` maps each part onto a part of the same colour."""
        where = {}
        for j, part in enumerate(self.parts):
            for p in part:
                where[p] = j
        for j, part in enumerate(self.parts):
            target = where[g[part[0]]]
            if self.colours[target] != self.colours[j]:
                return False
            if sorted(g[p] for p in part) != list(self.parts[target]):
                return False
        return True


def colex_subsets(m: int, k: int) -> list[tuple[int, ...]]:
    out = list(combinations(range(m), k))
    out.sort(key=lambda s: s[::-1])
    return out


def subset_action(g: Perm, subsets: Sequence[tuple[int, ...]], index: dict) -> Perm:
    """Permutation of ``subsets`` induced by ``g``."""
    return tuple(index[tuple(sorted(g[p] for p in s))] for s in subsets)


def _colour_classes(C: ColouredPartition) -> list[list[int]]:
    """Part indices grouped by colour, classes ordered by smallest element."""
    by_colour: dict = {}
    for j, col in enumerate(C.colours):
        by_colour.setdefault(col, []).append(j)
    classes = list(by_colour.values())
    classes.sort(key=lambda js: min(min(C.parts[j]) for j in js))
    return classes


def signature_key(vector: Sequence[int], classes: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(sorted(vector[j] for j in js)) for js in classes)


def induced_partition_on_ksubsets(C: ColouredPartition, k: int) -> tuple[ColouredPartition, list[tuple[int, ...]]]:
    """The coloured partition of the k-subsets by intersection sizes with the parts of ``C``.

    Returns the partition (over colex indices) and the colex list of subsets.
    Each part collects the subsets with one intersection vector; its colour
    is the signature key of that vector.
    """
    if not 1 <= k <= C.size:
        raise ValueError("need 1 <= k <= size")
    subsets = colex_subsets(C.size, k)
    where = [0] * C.size
    for j, part in enumerate(C.parts):
        for p in part:
            where[p] = j
    groups: dict[tuple[int, ...], list[int]] = {}
    for i, s in enumerate(subsets):
        vec = [0] * len(C.parts)
        for p in s:
            vec[where[p]] += 1
        groups.setdefault(tuple(vec), []).append(i)
    classes = _colour_classes(C)
    parts = []
    colours = []
    for vec, members in sorted(groups.items(), key=lambda kv: kv[1][0]):
        parts.append(tuple(members))
        colours.append(signature_key(vec, classes))
    return ColouredPartition(len(subsets), tuple(parts), tuple(colours)), subsets


def check_part_bound(C: ColouredPartition, k: int, alpha: Fraction = Fraction(2, 3)) -> bool:
    """Every induced part has at most ``2/3`` of all k-subsets."""
    alpha = Fraction(alpha)
    if alpha > Fraction(2, 3):
        raise ValueError("alpha must be at most 2/3")
    if any(len(p) > alpha * C.size for p in C.parts):
        raise ValueError("a part of C is larger than alpha * size")
    induced, _ = induced_partition_on_ksubsets(C, k)
    total = math.comb(C.size, k)
    return all(3 * len(p) <= 2 * total for p in induced.parts)


# the binomial inequality


def binom_value(k: int, a: int, beta: Fraction) -> Fraction:
    beta = Fraction(beta)
    return math.comb(k, a) * beta**a * (1 - beta) ** (k - a)


def binom_inequality(k: int, a: int, beta: Fraction) -> bool:
    """``binom(k, a) beta^a (1 - beta)^(k - a) <= 1/2`` in exact arithmetic."""
    if not 1 <= a <= k:
        raise ValueError("need 1 <= a <= k")
    beta = Fraction(beta)
    if not 0 < beta < 1:
        raise ValueError("need 0 < beta < 1")
    if beta > Fraction(2, 3) and a not in (1, k - 1):
        raise ValueError("beta > 2/3 is only admissible for a = 1 or a = k - 1")
    return binom_value(k, a, beta) <= Fraction(1, 2)


def admissible_betas(k: int, a: int, denominator: int = 100) -> list[Fraction]:
    """Grid of betas: multiples of ``1/denominator`` in range, plus 2/3."""
    top = Fraction(1) if a in (1, k - 1) else Fraction(2, 3)
    out = {Fraction(i, denominator) for i in range(1, denominator) if Fraction(i, denominator) <= top}
    out.add(Fraction(2, 3))
    if top == 1:
        out = {b for b in out if b < 1}
    return sorted(out)


@dataclass(frozen=True)
class GridResult:
    checked: int
    failures: tuple
    equalities: tuple
    max_value: Fraction


def inequality_grid(k_max: int = 30, denominator: int = 100) -> GridResult:
    """Evaluate the inequality for ``2 <= k <= k_max``, ``1 <= a <= k`` on the beta grid."""
    checked = 0
    failures = []
    equalities = []
    best = Fraction(0)
    for k in range(2, k_max + 1):
        for a in range(1, k + 1):
            for beta in admissible_betas(k, a, denominator):
                v = binom_value(k, a, beta)
                checked += 1
                best = max(best, v)
                if v > Fraction(1, 2):
                    failures.append((k, a, beta, v))
                elif v == Fraction(1, 2):
                    equalities.append((k, a, beta))
    return GridResult(checked, tuple(failures), tuple(equalities), best)


def exp_factor_ok(m: int, margin: float = 1e-9) -> bool:
    """``e^(2/ln m) / 2 < 2/3`` with a float margin."""
    return 0.5 * math.exp(2 / math.log(m)) + margin < 2 / 3


# Johnson blocks


@dataclass(frozen=True)
class JohnsonReport:
    m_prime: int
    k_prime: int
    k: int
    size_B: int
    orbits: tuple[tuple[int, ...], ...]
    parts: tuple[tuple[int, ...], ...]
    kinds: tuple[str, ...]
    max_part: int

    @property
    def half_bound_holds(self) -> bool:
        return 2 * self.max_part <= self.size_B


def _least_frequent_class(counts: Sequence[int]) -> frozenset:
    """Points whose count value is least frequent; smallest value on ties."""
    freq: dict[int, int] = {}
    for c in counts:
        freq[c] = freq.get(c, 0) + 1
    value = min(freq, key=lambda v: (freq[v], v))
    return frozenset(i for i, c in enumerate(counts) if c == value)


def johnson_blocks(
    m_prime: int,
    k_prime: int,
    k: int,
    H_gens: Sequence[Perm],
    cap: int = DEFAULT_B_CAP,
) -> JohnsonReport:
    """Orbits of ``H`` on k-sets of k'-subsets of an m'-set, refined into blocks.

    Within each orbit the elements ``x`` are grouped by ``A(x)``, the union
    of their members.  If every ``A(x)`` is the whole ground set, they are
    grouped by ``A'(x)`` instead: the points whose multiplicity in ``x`` has
    the least frequent value.  If the grouping is trivial the orbit itself is
    the part.
    """
    if not 2 <= k_prime <= m_prime // 2:
        raise ValueError("need 2 <= k' <= m'/2")
    gamma = colex_subsets(m_prime, k_prime)
    if not 2 <= k <= len(gamma) // 2:
        raise ValueError("need 2 <= k <= |Gamma|/2")
    size_B = math.comb(len(gamma), k)
    if size_B > cap:
        raise ValueError(f"|B| = {size_B} exceeds the cap {cap}")
    gamma_index = {s: i for i, s in enumerate(gamma)}
    B = colex_subsets(len(gamma), k)
    B_index = {s: i for i, s in enumerate(B)}
    induced = []
    for h in H_gens:
        on_gamma = subset_action(h, gamma, gamma_index)
        induced.append(subset_action(on_gamma, B, B_index))

    def A(x):
        return frozenset(p for j in B[x] for p in gamma[j])

    def A_prime(x):
        counts = [0] * m_prime
        for j in B[x]:
            for p in gamma[j]:
                counts[p] += 1
        return _least_frequent_class(counts)

    full = frozenset(range(m_prime))
    orbits = [list(o) for o in _orbits(induced, size_B).orbits]
    parts = []
    kinds = []
    for orb in orbits:
        keys = {x: A(x) for x in orb}
        kind = "A"
        if all(v == full for v in keys.values()):
            keys = {x: A_prime(x) for x in orb}
            kind = "A'"
        groups: dict = {}
        for x in orb:
            groups.setdefault(keys[x], []).append(x)
        blocks = sorted(groups.values())
        if len(blocks) == 1 or all(len(b) == 1 for b in blocks):
            parts.append(tuple(orb))
            kinds.append("orbit")
        else:
            for b in blocks:
                parts.append(tuple(b))
                kinds.append(kind)
    max_part = max(len(p) for p in parts)
    report = JohnsonReport(
        m_prime, k_prime, k, size_B, tuple(tuple(o) for o in orbits), tuple(parts), tuple(kinds), max_part
    )
    if m_prime >= 12 and not report.half_bound_holds:
        raise AssertionError(f"largest part {max_part} exceeds half of |B| = {size_B}")
    return report


def induced_generators(m_prime: int, k_prime: int, k: int, H_gens: Sequence[Perm]) -> list[Perm]:
    """The generators' action on the colex-indexed k-sets of k'-subsets."""
    gamma = colex_subsets(m_prime, k_prime)
    gamma_index = {s: i for i, s in enumerate(gamma)}
    B = colex_subsets(len(gamma), k)
    B_index = {s: i for i, s in enumerate(B)}
    return [subset_action(subset_action(h, gamma, gamma_index), B, B_index) for h in H_gens]


def parts_are_blocks(parts: Sequence[Sequence[int]], gens: Sequence[Perm]) -> bool:
    """Each generator maps every part onto a part."""
    sets = {frozenset(p) for p in parts}
    return all(frozenset(g[x] for x in p) in sets for g in gens for p in parts)


__all__ = [
    "ColouredPartition",
    "GridResult",
    "JohnsonReport",
    "admissible_betas",
    "binom_inequality",
    "binom_value",
    "check_part_bound",
    "colex_subsets",
    "exp_factor_ok",
    "induced_generators",
    "induced_partition_on_ksubsets",
    "inequality_grid",
    "johnson_blocks",
    "parts_are_blocks",
    "signature_key",
    "subset_action",
]
