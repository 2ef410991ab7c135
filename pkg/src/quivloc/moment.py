"""Moment-map flatness, irreducibility of dimensions, and leaves on a wall.

Both inequality checks run over multisets of summands. The right-hand sides
only depend on the total ``s`` of the chosen summands and on how many of them
are imaginary, so a memo over partial sums ``s <= v`` replaces the multiset
enumeration: ``best[s]`` is the largest number of imaginary summands among
multisets with total ``s``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from sympy.utilities.iterables import partitions

from .errors import BudgetExceededError, InputError
from .quiver import (
    Quiver,
    Vector,
    as_vector,
    delta,
    delta_multiple,
    dot,
    is_root,
    level,
    positive_roots_upto,
    require_supported,
    tits_form,
)
from .weights import FramedWeight, is_dominant, max_shift

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class RepType:
    """Representation type (v0; v1, n1; ...; vk, nk) of a point of a quiver variety.

    Distinct irreducible summands may share a dimension vector (several
    copies of delta at distinct points), so ``summands`` is an ordered list.
    """

    v0: Vector
    summands: tuple[tuple[Vector, int], ...] = ()
    minimal: bool = field(default=False, compare=False)

    def total(self) -> Vector:
        out = list(self.v0)
        for root, mult in self.summands:
            for i, x in enumerate(root):
                out[i] += mult * x
        return tuple(out)

    def __str__(self):
        parts = [",".join(map(str, self.v0))]
        parts += [f"({','.join(map(str, r))}),{k}" for r, k in self.summands]
        return "(" + "; ".join(parts) + ")"


@dataclass(frozen=True)
class FlatnessReport:
    flat: bool
    witness: RepType | None = None
    fast_path: bool = False


def _framed_value(quiver, w, x):
    """w.x - (x, x): the quantity compared on both sides of both inequalities."""
    return dot(w, x) - tits_form(quiver, x, x)


def _box(bound):
    return itertools.product(*(range(x + 1) for x in bound))


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _le(a, b):
    return all(x <= y for x, y in zip(a, b))


def _best_imaginary(bound, summands, is_imag, budget):
    """Memo of the max imaginary count per reachable partial sum s <= bound."""
    zero = tuple(0 for _ in bound)
    best = {zero: 0}
    choice = {}
    nodes = 0
    for s in _box(bound):
        if s == zero:
            continue
        top, pick = None, None
        for r, imag in zip(summands, is_imag):
            nodes += 1
            if nodes > budget:
                raise BudgetExceededError(budget)
            if not _le(r, s):
                continue
            prev = best.get(_sub(s, r))
            if prev is None:
                continue
            val = prev + imag
            if top is None or val > top:
                top, pick = val, r
        if top is not None:
            best[s] = top
            choice[s] = pick
    return best, choice


def _unwind(s, choice):
    counts: dict[Vector, int] = {}
    while any(s):
        r = choice[s]
        counts[r] = counts.get(r, 0) + 1
        s = _sub(s, r)
    return tuple(sorted(counts.items()))


def is_flat(quiver: Quiver, v: Sequence[int], w: Sequence[int], budget: int = DEFAULT_BUDGET) -> FlatnessReport:
    """Crawley-Boevey flatness test for the moment map at dimension v, framing w.

    Dominant weights are flat without enumeration for finite types and for
    affine types of positive level.
    """
    cls = require_supported(quiver)
    v = as_vector(quiver, v, "v")
    w = as_vector(quiver, w, "w")
    if any(x < 0 for x in v) or any(x < 0 for x in w):
        raise InputError("v and w must be nonnegative")
    fw = FramedWeight(quiver, w, v)
    if cls.family == "finite" or (cls.family == "affine" and level(quiver, w) >= 1):
        if is_dominant(fw):
            return FlatnessReport(True, fast_path=True)

    roots = positive_roots_upto(quiver, v)
    coords = [r.coords for r in roots]
    best, choice = _best_imaginary(v, coords, [0 if r.is_real else 1 for r in roots], budget)
    lhs = _framed_value(quiver, w, v)
    for s in _box(v):
        if not any(s) or s not in best:
            continue
        v0 = _sub(v, s)
        if lhs < _framed_value(quiver, w, v0) + best[s]:
            return FlatnessReport(False, witness=RepType(v0, _unwind(s, choice)))
    return FlatnessReport(True)


def framed_quiver(quiver: Quiver, w: Sequence[int]) -> Quiver:
    """Q^w: a new last vertex with w_i arrows from i to it."""
    w = as_vector(quiver, w, "w")
    extra = tuple((i, quiver.n) for i in range(quiver.n) for _ in range(w[i]))
    return Quiver(quiver.n + 1, quiver.arrows + extra)


def zero_parameter_summands(quiver: Quiver) -> list[Vector]:
    """Allowed summands at zeta = 0: the simple roots, plus delta for affine types."""
    cls = require_supported(quiver)
    if cls.family == "jordan":
        return [(1,)]
    out = [tuple(int(i == j) for j in range(quiver.n)) for i in range(quiver.n)]
    if cls.family == "affine":
        out.append(delta(quiver))
    return out


def is_irreducible_dim(
    quiver: Quiver,
    v0: Sequence[int],
    w: Sequence[int],
    allowed_summands: Sequence[Sequence[int]],
    budget: int = DEFAULT_BUDGET,
) -> bool:
    """Whether (1, v0) is the dimension of an irreducible framed representation."""
    require_supported(quiver)
    v0 = as_vector(quiver, v0, "v0")
    w = as_vector(quiver, w, "w")
    if not is_root(framed_quiver(quiver, w), v0 + (1,)):
        return False
    pool = sorted({tuple(s) for s in allowed_summands if any(s) and _le(s, v0)})
    if not pool:
        return True
    imag = [1 if delta_multiple(quiver, s) == 1 else 0 for s in pool]
    best, _ = _best_imaginary(v0, pool, imag, budget)
    lhs = _framed_value(quiver, w, v0)
    for s, count in best.items():
        if any(s) and not lhs > _framed_value(quiver, w, _sub(v0, s)) + count:
            return False
    return True


def _wall_normal(wall) -> Vector:
    return tuple(getattr(wall, "normal", wall))


def wall_kind(quiver: Quiver, normal: Sequence[int]) -> str:
    """'real' or 'imaginary' for a candidate wall normal; InputError otherwise."""
    normal = as_vector(quiver, normal, "wall normal")
    if any(x < 0 for x in normal) or not any(normal):
        raise InputError(f"wall not recognized: {list(normal)} is not a positive root")
    if delta_multiple(quiver, normal) == 1:
        return "imaginary"
    if tits_form(quiver, normal, normal) == 1:
        return "real"
    raise InputError(f"wall not recognized: {list(normal)} is neither a real root nor delta")


def wall_shift(quiver: Quiver, v: Sequence[int], w: Sequence[int], normal: Sequence[int]) -> tuple[str, int, bool]:
    """(kind, m, is_wall) for the hyperplane orthogonal to ``normal``; nu must be dominant.

    A real root is a wall iff m >= 1. For delta: at level >= 2 iff m >= 1, at
    level 1 (where v = n*delta) iff n > 1, never at level 0.
    """
    kind = wall_kind(quiver, normal)
    if kind == "imaginary":
        lev = level(quiver, w)
        if lev == 0:
            return kind, 0, False
        m = max_shift(quiver, v, w, normal)
        if lev == 1:
            return kind, m, (delta_multiple(quiver, v) or 0) > 1
        return kind, m, m >= 1
    m = max_shift(quiver, v, w, normal)
    return kind, m, m >= 1


def leaves_on_wall(quiver: Quiver, v: Sequence[int], w: Sequence[int], wall) -> list[RepType]:
    """Representation types of the leaves for zeta generic on the wall.

    ``wall`` is a wall object or its normal. Leaves are listed from the open
    leaf to the unique minimal one, which is flagged ``minimal``.
    """
    require_supported(quiver)
    v = as_vector(quiver, v, "v")
    w = as_vector(quiver, w, "w")
    if not is_dominant(FramedWeight(quiver, w, v)):
        raise InputError(f"leaves_on_wall needs a dominant weight; v={list(v)}, w={list(w)} is not")
    b = _wall_normal(wall)
    kind = wall_kind(quiver, b)

    if kind == "imaginary" and level(quiver, w) == 1:
        n = delta_multiple(quiver, v) if any(v) else 0
        if n is None:
            raise InputError(f"level 1 with dominant weight forces v = n*delta, got {list(v)}")
        zero = tuple(0 for _ in v)
        shapes = [sorted((k for k, mult in p.items() for _ in range(mult)), reverse=True) for p in partitions(n)]
        shapes.sort(key=lambda parts: (-len(parts), parts))
        return [RepType(zero, tuple((b, k) for k in parts), minimal=len(parts) <= 1) for parts in shapes]

    m = max_shift(quiver, v, w, b)
    leaves = []
    for i in range(m + 1):
        v0 = tuple(x - i * y for x, y in zip(v, b))
        leaves.append(RepType(v0, ((b, i),) if i else (), minimal=i == m))
    return leaves


def minimal_leaf(quiver: Quiver, v, w, wall) -> RepType:
    return next(r for r in leaves_on_wall(quiver, v, w, wall) if r.minimal)
