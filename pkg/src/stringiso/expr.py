"""Well-formed coset expressions: atoms and three combinators.

Node types
----------
``Atom``      the coset ``(Alt(U A_i) & prod Sym(A_i)) * rep``.
``Union``     union of child sets, each shifted on the right by its ``sigma``.
``Glue``      two-stage solution over a split ``A1 | A2``.  ``left`` lives on
              ``A1`` (relabelled ``0..|A1|-1``) and denotes ``K*tau``;
              ``fiber`` generates the full preimage of ``K``; ``lift``
              restricts to an element of ``K*tau``; ``right`` lives on ``A2``.
              The denoted set is ``{h in <fiber> : h|A2 in right} * lift``.
``AltExtend`` ``<child group, s1, s2> * sp``; ``s1, s2`` must move the child's
              equal-size ``parts`` as ``Alt(m)`` moves ``k``-subsets.
``EmptyExpr`` the empty set.

Evaluation is strict: any node whose data does not denote what its shape
claims raises :class:`MalformedExpression`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator, Sequence, Union as TUnion

from .calculus import Coset, Empty, PartialCoset, right_multiply, same_set
from .chain import (
    ActionPreimage,
    NotInImage,
    StabilizerChain,
    block_action,
    product_of_symmetric_groups,
    restriction_action,
    same_group,
    schreier_sims,
    subgroup_by_test,
)
from .perm import DegreeMismatch, Perm, check_perm, compose, inverse, is_even, restrict


class MalformedExpression(ValueError):
    pass


@dataclass(frozen=True)
class Atom:
    degree: int
    parts: tuple[tuple[int, ...], ...]
    rep: Perm


@dataclass(frozen=True)
class Union:
    degree: int
    children: tuple[tuple["Expression", Perm], ...]


@dataclass(frozen=True)
class Glue:
    degree: int
    left: "Expression"
    right: "Expression"
    split: tuple[tuple[int, ...], tuple[int, ...]]
    fiber: tuple[Perm, ...] = ()
    lift: Perm = ()


@dataclass(frozen=True)
class AltExtend:
    degree: int
    child: "Expression"
    s1: Perm
    s2: Perm
    sp: Perm
    gamma: tuple[int, int]
    parts: tuple[tuple[int, ...], ...] = field(default=())


@dataclass(frozen=True)
class EmptyExpr:
    degree: int


Expression = TUnion[Atom, Union, Glue, AltExtend, EmptyExpr]


# constructors


def atom(parts: Sequence[Sequence[int]], rep: Perm) -> Atom:
    rep = check_perm(rep)
    n = len(rep)
    canon = tuple(sorted(tuple(sorted(p)) for p in parts if len(p)))
    seen: set[int] = set()
    for p in canon:
        for x in p:
            if x in seen:
                raise ValueError("atom parts overlap")
            if not 0 <= x < n:
                raise ValueError("atom part point out of range")
            seen.add(x)
    return Atom(n, canon, rep)


def singleton(g: Perm) -> Atom:
    return atom((), g)


def combine_union(children: Sequence[tuple[Expression, Perm]], degree: int | None = None) -> Expression:
    if not children:
        if degree is None:
            raise ValueError("degree needed for an empty union")
        return EmptyExpr(degree)
    n = children[0][0].degree
    for e, s in children:
        if e.degree != n or len(s) != n:
            raise DegreeMismatch("union children have different degrees")
    return Union(n, tuple((e, tuple(s)) for e, s in children))


def combine_glue(
    left: Expression,
    right: Expression,
    split: tuple[Sequence[int], Sequence[int]],
    fiber: Sequence[Perm],
    lift: Perm,
) -> Expression:
    a1, a2 = tuple(sorted(split[0])), tuple(sorted(split[1]))
    if set(a1) & set(a2):
        raise ValueError("glue domains overlap")
    n = len(lift)
    if isinstance(left, EmptyExpr) or isinstance(right, EmptyExpr):
        return EmptyExpr(n)
    if left.degree != len(a1) or right.degree != len(a2):
        raise DegreeMismatch("glue children do not match the split")
    return Glue(n, left, right, (a1, a2), tuple(tuple(g) for g in fiber), tuple(lift))


def combine_alt_extend(
    child: Expression,
    sigma1: Perm,
    sigma2: Perm,
    sigma_prime: Perm,
    gamma: tuple[int, int],
    parts: Sequence[Sequence[int]],
) -> AltExtend:
    node = AltExtend(
        child.degree,
        child,
        tuple(sigma1),
        tuple(sigma2),
        tuple(sigma_prime),
        (int(gamma[0]), int(gamma[1])),
        tuple(tuple(sorted(p)) for p in parts),
    )
    _check_alt_extend(node, evaluate(child))
    return node


# evaluation


@lru_cache(maxsize=4096)
def atom_group(parts: tuple[tuple[int, ...], ...], degree: int) -> StabilizerChain:
    """``Alt(U parts) & prod Sym(parts)``."""
    prod_sym = product_of_symmetric_groups(parts, degree)
    if prod_sym.order == 1:
        return prod_sym
    even, _ = subgroup_by_test(prod_sym, is_even, 2)
    return even


def atom_order(parts: Sequence[Sequence[int]]) -> int:
    if all(len(p) < 2 for p in parts):
        return 1
    return math.prod(math.factorial(len(p)) for p in parts) // 2


def evaluate(e: Expression) -> PartialCoset:
    if isinstance(e, EmptyExpr):
        return Empty(e.degree)
    if isinstance(e, Atom):
        return Coset(atom_group(e.parts, e.degree), e.rep)
    if isinstance(e, Union):
        return _eval_union(e)
    if isinstance(e, Glue):
        return _eval_glue(e)
    if isinstance(e, AltExtend):
        child = evaluate(e.child)
        _check_alt_extend(e, child)
        group = schreier_sims(list(child.group.generators) + [e.s1, e.s2], e.degree)
        return Coset(group, e.sp)
    raise TypeError(f"not an expression node: {type(e).__name__}")


def _eval_union(e: Union) -> PartialCoset:
    live = []
    for child, sigma in e.children:
        c = evaluate(child)
        if not c.is_empty:
            live.append(right_multiply(c, sigma))
    if not live:
        return Empty(e.degree)
    group = live[0].group
    for c in live[1:]:
        if not same_group(c.group, group):
            raise MalformedExpression("union children are cosets of different groups")
    # the children must be distinct cosets whose union is again a coset
    if group.order == 1:
        if len({c.rep for c in live}) != len(live):
            raise MalformedExpression("union children overlap")
    else:
        for i, a in enumerate(live):
            for b in live[i + 1 :]:
                if b.rep in a:
                    raise MalformedExpression("union children overlap")
    r1_inv = inverse(live[0].rep)
    gens = list(group.generators) + [compose(c.rep, r1_inv) for c in live[1:]]
    total = schreier_sims(gens, e.degree)
    if total.order != group.order * len(live):
        raise MalformedExpression("union of the children is not a coset")
    return Coset(total, live[0].rep)


def _eval_glue(e: Glue) -> PartialCoset:
    a1, a2 = e.split
    n = e.degree
    if set(a1) & set(a2) or len(e.lift) != n:
        raise MalformedExpression("bad glue split")
    left = evaluate(e.left)
    right = evaluate(e.right)
    if left.is_empty or right.is_empty:
        raise MalformedExpression("glue over an empty side")
    fiber = schreier_sims(e.fiber, n)
    try:
        fiber_left = schreier_sims((restrict(g, a1) for g in fiber.generators), len(a1))
        lift_left = restrict(e.lift, a1)
    except ValueError:
        raise MalformedExpression("glue split is not invariant") from None
    if not same_group(fiber_left, left.group) or lift_left not in left:
        raise MalformedExpression("glue fiber does not match the left side")
    if not a2:
        return Coset(fiber, e.lift)
    try:
        pre = ActionPreimage(fiber, restriction_action(a2), len(a2))
        group = pre.subgroup(right.group)
    except (NotInImage, KeyError, IndexError):
        raise MalformedExpression("right side is not inside the fiber") from None
    u = pre.element(right.rep)
    if u is None:
        raise MalformedExpression("right representative is not inside the fiber")
    return Coset(group, compose(u, e.lift))


def _check_alt_extend(e: AltExtend, child: PartialCoset) -> None:
    m, k = e.gamma
    if child.is_empty or child.rep not in child.group:
        raise MalformedExpression("alt-extension child is not a subgroup")
    parts = [list(p) for p in e.parts]
    if not parts or len({len(p) for p in parts}) != 1:
        raise MalformedExpression("alt-extension parts must have equal size")
    covered = sorted(x for p in parts for x in p)
    if covered != list(range(e.degree)):
        raise MalformedExpression("alt-extension parts must partition the domain")
    if len(parts) != math.comb(m, k):
        raise MalformedExpression("number of parts is not binom(m, k)")
    for g in child.group.generators:
        for p in parts:
            if any(g[x] not in set(p) for x in p):
                raise MalformedExpression("child group does not fix every part")
    try:
        act = block_action(parts, e.degree)
        image = schreier_sims([act(e.s1), act(e.s2)], len(parts))
    except ValueError:
        raise MalformedExpression("s1, s2 do not permute the parts") from None
    want = math.factorial(m) // 2 if m >= 2 else 1
    if image.order != want:
        raise MalformedExpression(f"induced action has order {image.order}, expected {want}")


# counting and bounds


def iter_nodes(e: Expression) -> Iterator[Expression]:
    stack = [e]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Union):
            stack.extend(c for c, _ in reversed(node.children))
        elif isinstance(node, Glue):
            stack.extend([node.right, node.left])
        elif isinstance(node, AltExtend):
            stack.append(node.child)


def atom_count(e: Expression) -> int:
    return sum(1 for node in iter_nodes(e) if isinstance(node, Atom))


def log_atom_bound(n: int, cfsg: bool = True) -> float:
    """Natural log of ``n ** (1 + K * ln(n)**2)``."""
    K = 110 if cfsg else 112
    ln = math.log(n)
    return (1 + K * ln * ln) * ln


def verify_bound(e: Expression, n: int, cfsg: bool = True) -> bool:
    count = atom_count(e)
    if count == 0:
        return True
    if n == 1:
        return count <= 1
    return math.log(count) <= log_atom_bound(n, cfsg)


def equivalent(e: Expression, c: PartialCoset) -> bool:
    try:
        return same_set(evaluate(e), c)
    except MalformedExpression:
        return False


def map_atoms(e: Expression, fn) -> Expression:
    """Copy of ``e`` with every atom replaced by ``fn(atom)``."""
    if isinstance(e, Atom):
        return fn(e)
    if isinstance(e, Union):
        return Union(e.degree, tuple((map_atoms(c, fn), s) for c, s in e.children))
    if isinstance(e, Glue):
        return Glue(e.degree, map_atoms(e.left, fn), map_atoms(e.right, fn), e.split, e.fiber, e.lift)
    if isinstance(e, AltExtend):
        return AltExtend(e.degree, map_atoms(e.child, fn), e.s1, e.s2, e.sp, e.gamma, e.parts)
    return e


def atom_paths(e: Expression) -> list[tuple[int, ...]]:
    """Positions of the atoms, in the order :func:`iter_nodes` meets them."""
    out = []

    def walk(node, path):
        if isinstance(node, Atom):
            out.append(path)
        elif isinstance(node, Union):
            for i, (c, _) in enumerate(node.children):
                walk(c, path + (i,))
        elif isinstance(node, Glue):
            walk(node.left, path + (0,))
            walk(node.right, path + (1,))
        elif isinstance(node, AltExtend):
            walk(node.child, path + (0,))

    walk(e, ())
    return out


def node_at(e: Expression, path: Sequence[int]) -> Expression:
    for i in path:
        if isinstance(e, Union):
            e = e.children[i][0]
        elif isinstance(e, Glue):
            e = e.right if i else e.left
        elif isinstance(e, AltExtend):
            e = e.child
        else:
            raise ValueError("path leads nowhere")
    return e


def tamperable_paths(e: Expression) -> list[tuple[int, ...]]:
    """Atom positions of degree at least 2 (a degree-1 atom has no other representative)."""
    return [p for p in atom_paths(e) if node_at(e, p).degree >= 2]


def replace_at(e: Expression, path: Sequence[int], fn) -> Expression:
    if not path:
        return fn(e)
    i, rest = path[0], path[1:]
    if isinstance(e, Union):
        kids = list(e.children)
        c, s = kids[i]
        kids[i] = (replace_at(c, rest, fn), s)
        return Union(e.degree, tuple(kids))
    if isinstance(e, Glue):
        if i == 0:
            return Glue(e.degree, replace_at(e.left, rest, fn), e.right, e.split, e.fiber, e.lift)
        return Glue(e.degree, e.left, replace_at(e.right, rest, fn), e.split, e.fiber, e.lift)
    if isinstance(e, AltExtend):
        return AltExtend(e.degree, replace_at(e.child, rest, fn), e.s1, e.s2, e.sp, e.gamma, e.parts)
    raise ValueError("path leads nowhere")


def tamper_atom(a: Atom) -> Atom:
    """Same atom with an odd permutation put in front of the representative.

    Atom groups are even, so the new coset is disjoint from the old one.
    """
    n = a.degree
    if n < 2:
        raise ValueError("cannot tamper with a degree-1 atom")
    t = list(range(n))
    t[0], t[1] = 1, 0
    return Atom(n, a.parts, compose(tuple(t), a.rep))


# text format


def _ints(xs) -> str:
    return " ".join(str(int(v)) for v in xs)


def _perm_field(tag: str, p: Perm) -> str:
    body = _ints(p)
    return f"({tag} {body})" if body else f"({tag})"


def _parts_field(parts) -> str:
    inner = " ".join(f"(p {_ints(p)})" for p in parts)
    return f"(parts {inner})" if inner else "(parts)"


def serialize(e: Expression, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(e, EmptyExpr):
        return f"{pad}(empty {e.degree})"
    if isinstance(e, Atom):
        return f"{pad}(atom {e.degree} {_parts_field(e.parts)} {_perm_field('rep', e.rep)})"
    if isinstance(e, Union):
        lines = [f"{pad}(union {e.degree}"]
        for child, sigma in e.children:
            lines.append(f"{pad}  (")
            lines.append(serialize(child, indent + 2))
            lines.append(f"{pad}    {_perm_field('rep', sigma)})")
        lines[-1] += ")"
        return "\n".join(lines)
    if isinstance(e, Glue):
        fiber = " ".join(_perm_field("g", g) for g in e.fiber)
        return "\n".join(
            [
                f"{pad}(glue {e.degree}",
                f"{pad}  (left",
                serialize(e.left, indent + 2) + ")",
                f"{pad}  (right",
                serialize(e.right, indent + 2) + ")",
                f"{pad}  (split (p {_ints(e.split[0])}) (p {_ints(e.split[1])}))",
                f"{pad}  (fiber{' ' + fiber if fiber else ''})",
                f"{pad}  {_perm_field('lift', e.lift)})",
            ]
        )
    if isinstance(e, AltExtend):
        return "\n".join(
            [
                f"{pad}(altx {e.degree}",
                f"{pad}  (child",
                serialize(e.child, indent + 2) + ")",
                f"{pad}  {_perm_field('s1', e.s1)} {_perm_field('s2', e.s2)} {_perm_field('sp', e.sp)}",
                f"{pad}  (gamma {e.gamma[0]} {e.gamma[1]}) {_parts_field(e.parts)})",
            ]
        )
    raise TypeError(f"not an expression node: {type(e).__name__}")


class ParseError(ValueError):
    pass


def _tokenize(text: str) -> list[str]:
    return text.replace("(", " ( ").replace(")", " ) ").split()


def _read(tokens: list[str], pos: int):
    if pos >= len(tokens):
        raise ParseError("unexpected end of input")
    tok = tokens[pos]
    if tok == "(":
        out = []
        pos += 1
        while pos < len(tokens) and tokens[pos] != ")":
            item, pos = _read(tokens, pos)
            out.append(item)
        if pos >= len(tokens):
            raise ParseError("missing ')'")
        return out, pos + 1
    if tok == ")":
        raise ParseError("unexpected ')'")
    return tok, pos + 1


def _int(tok) -> int:
    if not isinstance(tok, str):
        raise ParseError("expected an integer")
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}") from None


def _tagged(item, tag: str) -> list:
    if not isinstance(item, list) or not item or item[0] != tag:
        raise ParseError(f"expected ({tag} ...)")
    return item[1:]


def _perm_of(item, tag: str, n: int) -> Perm:
    p = tuple(_int(t) for t in _tagged(item, tag))
    if len(p) != n:
        raise ParseError(f"({tag} ...) has {len(p)} entries, expected {n}")
    try:
        return check_perm(p)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def _parts_of(item) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(_int(t) for t in _tagged(p, "p")) for p in _tagged(item, "parts"))


def _build(tree) -> Expression:
    if not isinstance(tree, list) or len(tree) < 2:
        raise ParseError("expected a node")
    kind, n = tree[0], _int(tree[1])
    rest = tree[2:]
    if kind == "empty":
        return EmptyExpr(n)
    if kind == "atom":
        if len(rest) != 2:
            raise ParseError("atom needs parts and rep")
        try:
            return atom(_parts_of(rest[0]), _perm_of(rest[1], "rep", n))
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    if kind == "union":
        kids = []
        for item in rest:
            if not isinstance(item, list) or len(item) != 2:
                raise ParseError("union child must be (<expr> (rep ...))")
            kids.append((_build(item[0]), _perm_of(item[1], "rep", n)))
        if not kids:
            raise ParseError("union needs at least one child")
        return Union(n, tuple(kids))
    if kind == "glue":
        if len(rest) != 5:
            raise ParseError("glue needs left, right, split, fiber, lift")
        left = _build(_single(_tagged(rest[0], "left")))
        right = _build(_single(_tagged(rest[1], "right")))
        split = [tuple(_int(t) for t in _tagged(p, "p")) for p in _tagged(rest[2], "split")]
        if len(split) != 2:
            raise ParseError("split needs two parts")
        fiber = tuple(_perm_of(g, "g", n) for g in _tagged(rest[3], "fiber"))
        lift = _perm_of(rest[4], "lift", n)
        return Glue(n, left, right, (split[0], split[1]), fiber, lift)
    if kind == "altx":
        if len(rest) != 6:
            raise ParseError("altx needs child, s1, s2, sp, gamma, parts")
        child = _build(_single(_tagged(rest[0], "child")))
        gamma = tuple(_int(t) for t in _tagged(rest[4], "gamma"))
        if len(gamma) != 2:
            raise ParseError("gamma needs m and k")
        return AltExtend(
            n,
            child,
            _perm_of(rest[1], "s1", n),
            _perm_of(rest[2], "s2", n),
            _perm_of(rest[3], "sp", n),
            gamma,
            _parts_of(rest[5]),
        )
    raise ParseError(f"unknown node kind {kind!r}")


def _single(items: list):
    if len(items) != 1:
        raise ParseError("expected exactly one expression")
    return items[0]


def parse(text: str) -> Expression:
    tokens = _tokenize(text)
    tree, pos = _read(tokens, 0)
    if pos != len(tokens):
        raise ParseError("trailing tokens after expression")
    return _build(tree)


__all__ = [
    "AltExtend",
    "Atom",
    "EmptyExpr",
    "Expression",
    "Glue",
    "MalformedExpression",
    "ParseError",
    "Union",
    "atom",
    "atom_count",
    "atom_group",
    "atom_order",
    "atom_paths",
    "combine_alt_extend",
    "combine_glue",
    "combine_union",
    "equivalent",
    "evaluate",
    "iter_nodes",
    "log_atom_bound",
    "map_atoms",
    "node_at",
    "parse",
    "replace_at",
    "serialize",
    "singleton",
    "tamper_atom",
    "tamperable_paths",
    "verify_bound",
]
