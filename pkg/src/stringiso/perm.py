"""Permutations of {0, ..., n-1} stored as image tuples.

A permutation ``p`` maps point ``i`` to ``p[i]``.  Products are read left to
right: ``compose(p, q)`` applies ``p`` first and then ``q``.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

Perm = Tuple[int, ...]


class DegreeMismatch(ValueError):
    pass


def identity(n: int) -> Perm:
    return tuple(range(n))


def is_identity(p: Perm) -> bool:
    return all(i == x for i, x in enumerate(p))


def check_perm(p: Sequence[int]) -> Perm:
    """Return ``p`` as a tuple, raising ``ValueError`` if it is not a bijection."""
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise ValueError(f"not a permutation: {p!r}")
    return p


def compose(p: Perm, q: Perm) -> Perm:
    if len(p) != len(q):
        raise DegreeMismatch(f"degrees {len(p)} and {len(q)} differ")
    return tuple(map(q.__getitem__, p))


def compose_all(perms: Iterable[Perm], n: int) -> Perm:
    out = identity(n)
    for p in perms:
        out = compose(out, p)
    return out


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def power(p: Perm, k: int) -> Perm:
    if k < 0:
        p, k = inverse(p), -k
    out = identity(len(p))
    base = p
    while k:
        if k & 1:
            out = compose(out, base)
        base = compose(base, base)
        k >>= 1
    return out


def cycles(p: Perm) -> list[tuple[int, ...]]:
    """Nontrivial cycles of ``p``, each starting at its smallest point."""
    seen = set()
    out = []
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        cyc = [i]
        seen.add(i)
        j = p[i]
        while j != i:
            cyc.append(j)
            seen.add(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def from_cycles(n: int, *cycs: Sequence[int]) -> Perm:
    out = list(range(n))
    for cyc in cycs:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            out[a] = b
    return check_perm(out)


def transposition(n: int, a: int, b: int) -> Perm:
    return from_cycles(n, (a, b))


def is_even(p: Perm) -> bool:
    return sum(len(c) - 1 for c in cycles(p)) % 2 == 0


def order_of(p: Perm) -> int:
    from math import lcm

    out = 1
    for c in cycles(p):
        out = lcm(out, len(c))
    return out


def fmt_cycles(p: Perm) -> str:
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cs)


def restrict(p: Perm, points: Sequence[int]) -> Perm:
    """Restriction of ``p`` to an invariant sorted point list, relabelled 0..k-1."""
    index = {x: i for i, x in enumerate(points)}
    try:
        return tuple(index[p[x]] for x in points)
    except KeyError:
        raise ValueError("point set is not invariant under the permutation") from None


def embed(p: Perm, points: Sequence[int], n: int) -> Perm:
    """Inverse of :func:`restrict`: act as ``p`` on ``points``, fix the rest."""
    out = list(range(n))
    for i, x in enumerate(points):
        out[x] = points[p[i]]
    return tuple(out)


def act_on_string(s: Sequence[int], p: Perm) -> tuple[int, ...]:
    """The string ``s`` moved by ``p``: position ``p[r]`` receives ``s[r]``."""
    out = [0] * len(s)
    for r, sym in enumerate(s):
        out[p[r]] = sym
    return tuple(out)


def pull_string(s: Sequence[int], p: Perm) -> tuple[int, ...]:
    """``s`` moved by the inverse of ``p``: entry ``r`` is ``s[p[r]]``."""
    return tuple(s[x] for x in p)
