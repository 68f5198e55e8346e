"""Cosets of permutation groups as answers to string isomorphism, and the window rules.

A string is a tuple of non-negative symbol ids, one per point.  ``g`` is an
isomorphism from ``x`` to ``y`` when ``y[g[r]] == x[r]`` for every point
``r``.  The set of those ``g`` inside a group ``G`` is empty or a coset
``Aut_G(x) * tau``, represented here by :class:`Coset` or :class:`Empty`.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Union

from .chain import (
    ActionPreimage,
    StabilizerChain,
    enumerate_elements,
    product_of_symmetric_groups,
    restriction_action,
    schreier_sims,
    trivial_chain,
)
from .perm import DegreeMismatch, Perm, compose, identity, inverse, pull_string

ColoredString = tuple


def check_string(s: Sequence[int], degree: int) -> tuple[int, ...]:
    s = tuple(int(v) for v in s)
    if len(s) != degree:
        raise DegreeMismatch(f"string has length {len(s)}, expected {degree}")
    if any(v < 0 for v in s):
        raise ValueError("symbols must be non-negative integers")
    return s


def is_isomorphism(g: Perm, x: Sequence[int], y: Sequence[int], window: Optional[Sequence[int]] = None) -> bool:
    pts = range(len(x)) if window is None else window
    return all(y[g[r]] == x[r] for r in pts)


@dataclass(frozen=True, eq=False)
class Empty:
    degree: int

    is_empty = True
    order = 0

    def __contains__(self, g: Perm) -> bool:
        return False

    def __iter__(self) -> Iterator[Perm]:
        return iter(())

    def members(self) -> set:
        return set()

    def __repr__(self) -> str:
        return f"Empty({self.degree})"


@dataclass(frozen=True, eq=False)
class Coset:
    """The right coset ``group * rep``."""

    group: StabilizerChain
    rep: Perm

    is_empty = False

    def __post_init__(self):
        if len(self.rep) != self.group.degree:
            raise DegreeMismatch("representative and group have different degrees")

    @property
    def degree(self) -> int:
        return self.group.degree

    @property
    def order(self) -> int:
        return self.group.order

    def __contains__(self, g: Perm) -> bool:
        return compose(g, inverse(self.rep)) in self.group

    def __iter__(self) -> Iterator[Perm]:
        rep = self.rep
        for h in enumerate_elements(self.group):
            yield compose(h, rep)

    def members(self) -> set:
        return set(self)

    def with_rep(self, g: Perm) -> "Coset":
        if g not in self:
            raise ValueError("new representative is not in the coset")
        return Coset(self.group, g)

    def __repr__(self) -> str:
        return f"Coset(order={self.order}, rep={self.rep})"


PartialCoset = Union[Coset, Empty]


def right_multiply(c: PartialCoset, sigma: Perm) -> PartialCoset:
    if c.is_empty:
        return c
    return Coset(c.group, compose(c.rep, sigma))


def same_set(a: PartialCoset, b: PartialCoset) -> bool:
    """Set equality without expansion."""
    if a.is_empty or b.is_empty:
        return a.is_empty and b.is_empty
    if a.order != b.order:
        return False
    if not all(g in a.group for g in b.group.generators):
        return False
    return b.rep in a


def coset_from_members(members: Sequence[Perm], degree: int) -> PartialCoset:
    """Wrap an explicit set that is known to be a coset; checks the size."""
    members = list(members)
    if not members:
        return Empty(degree)
    r = members[0]
    r_inv = inverse(r)
    group = schreier_sims((compose(m, r_inv) for m in members), degree)
    if group.order != len(set(members)):
        raise ValueError("the given elements do not form a coset")
    return Coset(group, r)


def symbol_classes(x: Sequence[int]) -> list[tuple[int, ...]]:
    """Positions grouped by symbol, ordered by first position."""
    classes: dict[int, list[int]] = {}
    for r, s in enumerate(x):
        classes.setdefault(s, []).append(r)
    return [tuple(c) for c in classes.values()]


def string_to_symmetric_product(x: Sequence[int]) -> tuple[list[tuple[int, ...]], StabilizerChain]:
    """``Aut_{Sym(n)}(x)``: the product of symmetric groups on the symbol classes."""
    classes = symbol_classes(x)
    return classes, product_of_symmetric_groups(classes, len(x))


def same_symbol_counts(x: Sequence[int], y: Sequence[int]) -> bool:
    return Counter(x) == Counter(y)


def shift_coset(c: PartialCoset, y: Sequence[int], sigma: Perm) -> tuple[tuple[int, ...], PartialCoset]:
    """Move a coset problem over ``G*sigma`` to one over ``G``.

    Returns ``y`` pulled back along ``sigma`` together with ``c * sigma``:
    if ``c`` solves the pulled-back problem in ``G`` then the second value
    solves the original problem in ``G*sigma``.
    """
    if len(y) != len(sigma) or (not c.is_empty and c.degree != len(sigma)):
        raise DegreeMismatch("degrees differ")
    return pull_string(y, sigma), right_multiply(c, sigma)


def union_cosets(parts: Sequence[PartialCoset]) -> PartialCoset:
    """Smallest coset of a group containing every part (parts share one group)."""
    if not parts:
        raise ValueError("union of no parts has no degree")
    degree = parts[0].degree
    if any(p.degree != degree for p in parts):
        raise DegreeMismatch("parts have different degrees")
    live = [p for p in parts if not p.is_empty]
    if not live:
        return Empty(degree)
    if len(live) == 1:
        return live[0]
    r1_inv = inverse(live[0].rep)
    gens = []
    for p in live:
        gens.extend(p.group.generators)
        gens.append(compose(p.rep, r1_inv))
    return Coset(schreier_sims(gens, degree), live[0].rep)


# windows


def normalize_window(delta: Sequence[int], degree: int) -> tuple[int, ...]:
    w = tuple(sorted(set(delta)))
    if w and (w[0] < 0 or w[-1] >= degree):
        raise ValueError("window point out of range")
    return w


def is_invariant(perms: Sequence[Perm], delta: Sequence[int]) -> bool:
    s = set(delta)
    return all(g[p] in s for g in perms for p in delta)


def require_invariant(perms: Sequence[Perm], delta: Sequence[int]) -> None:
    if not is_invariant(perms, delta):
        raise ValueError("window is not invariant")


def window_members(group: StabilizerChain, x, y, delta: Sequence[int], shift: Optional[Perm] = None) -> set:
    """``Iso^delta_{group*shift}(x, y)`` by enumeration; the test oracle."""
    out = set()
    for g in enumerate_elements(group):
        if shift is not None:
            g = compose(g, shift)
        if is_isomorphism(g, x, y, delta):
            out.add(g)
    return out


def restrict_string(s: Sequence[int], delta: Sequence[int]) -> tuple[int, ...]:
    return tuple(s[p] for p in delta)


def restrict_group(group: StabilizerChain, delta: Sequence[int]) -> StabilizerChain:
    act = restriction_action(delta)
    return schreier_sims((act(g) for g in group.generators), len(delta))


def lift_window_solution(
    inner: PartialCoset,
    group: StabilizerChain,
    delta: Sequence[int],
    preimage: Optional[ActionPreimage] = None,
) -> PartialCoset:
    """Turn a solution over ``group`` restricted to ``delta`` into the window set over the full domain.

    ``inner`` lives on ``delta`` relabelled as ``0..len(delta)-1``.  The
    answer is the preimage group of ``inner.group`` times any preimage of
    ``inner.rep``.
    """
    n = group.degree
    delta = normalize_window(delta, n)
    if inner.is_empty:
        return Empty(n)
    if len(delta) == n:
        return inner
    require_invariant(group.generators, delta)
    if preimage is None:
        preimage = ActionPreimage(group, restriction_action(delta), len(delta))
    rep = preimage.element(inner.rep)
    if rep is None:
        raise ValueError("inner representative is not a restriction of a group element")
    return Coset(preimage.subgroup(inner.group), rep)


def iso_window(group: StabilizerChain, x, y, delta: Sequence[int], solve=None) -> PartialCoset:
    """``Iso^delta_group(x, y)`` for an invariant window, via restriction and lifting.

    ``solve(group, x, y)`` solves the restricted full problem; enumeration is
    used when it is not given.
    """
    n = group.degree
    delta = normalize_window(delta, n)
    if not delta:
        return Coset(group, identity(n))
    require_invariant(group.generators, delta)
    sub = restrict_group(group, delta)
    xs, ys = restrict_string(x, delta), restrict_string(y, delta)
    if solve is None:
        inner = coset_from_members(window_members(sub, xs, ys, range(len(delta))), len(delta))
    else:
        inner = solve(sub, xs, ys)
    return lift_window_solution(inner, group, delta)


@dataclass(frozen=True, eq=False)
class WindowProblem:
    """The problem ``Iso^window_group(x, y) * shift`` left over after one window is solved."""

    group: StabilizerChain
    x: tuple
    y: tuple
    window: tuple[int, ...]
    shift: Perm

    def solve(self, solve=None) -> PartialCoset:
        c = iso_window(self.group, self.x, self.y, self.window, solve)
        return right_multiply(c, self.shift)

    def members(self) -> set:
        return window_members(self.group, self.x, self.y, self.window, self.shift)


def chain_windows(c1_result: PartialCoset, x, y, delta2: Sequence[int]) -> Union[WindowProblem, Empty]:
    """Reduce ``Iso^{D1 u D2}`` to a window problem on ``D2`` given ``c1_result = Iso^{D1} = G1*s1``.

    ``D2`` must be invariant under ``G1`` and ``s1``.  An empty ``c1_result``
    empties everything.
    """
    if c1_result.is_empty:
        return c1_result
    n = c1_result.degree
    delta2 = normalize_window(delta2, n)
    require_invariant(list(c1_result.group.generators) + [c1_result.rep], delta2)
    return WindowProblem(c1_result.group, tuple(x), pull_string(y, c1_result.rep), delta2, c1_result.rep)


def trivial_coset(degree: int) -> Coset:
    return Coset(trivial_chain(degree), identity(degree))


__all__ = [
    "Coset",
    "ColoredString",
    "Empty",
    "PartialCoset",
    "WindowProblem",
    "chain_windows",
    "check_string",
    "coset_from_members",
    "is_invariant",
    "is_isomorphism",
    "iso_window",
    "lift_window_solution",
    "restrict_group",
    "restrict_string",
    "right_multiply",
    "same_set",
    "same_symbol_counts",
    "shift_coset",
    "string_to_symmetric_product",
    "symbol_classes",
    "trivial_coset",
    "union_cosets",
    "window_members",
]
