"""Slice quivers attached to representation types, and rank-1 slices of walls.

Normalization: loops at a slice vertex are ``1 - (v^i, v^i)`` in the Tits
form, while arrows between distinct slice vertices and the slice framing use
the Cartan pairing ``a^T C b``. Read with a single form, the defining formula
gives either half-integer arrow counts or loops on real roots; this mixed
reading is the one that reproduces the rank-1 slice formulas exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InternalConsistencyError
from .moment import RepType, wall_shift
from .quiver import Quiver, Vector, as_vector, cartan_pair, dot, level, require_supported, tits_form
from .weights import FramedWeight, is_dominant


@dataclass(frozen=True)
class SliceData:
    quiver: Quiver
    v_bar: Vector
    w_bar: Vector
    eta: tuple[Vector, ...]

    def restrict(self, param: Sequence) -> tuple:
        """eta applied to a parameter vector of the ambient quiver."""
        return tuple(dot(row, param) for row in self.eta)

    def key(self):
        """Comparison key ignoring arrow orientation."""
        return (self.quiver.n, self.quiver.edge_counts, self.v_bar, self.w_bar, self.eta)

    def to_json(self) -> dict:
        out = self.quiver.to_json()
        out.update(v_bar=list(self.v_bar), w_bar=list(self.w_bar), eta=[list(r) for r in self.eta])
        return out


def slice_quiver(quiver: Quiver, w: Sequence[int], rt: RepType) -> SliceData:
    require_supported(quiver)
    w = as_vector(quiver, w, "w")
    v0 = as_vector(quiver, rt.v0, "v0")
    roots = [as_vector(quiver, r, "summand") for r, _ in rt.summands]
    if any(k <= 0 for _, k in rt.summands):
        raise InputError("summand multiplicities must be positive")
    k = len(roots)
    arrows = []
    for i in range(k):
        loops = 1 - tits_form(quiver, roots[i], roots[i])
        if loops.denominator != 1 or loops < 0:
            raise InternalConsistencyError(f"summand {list(roots[i])} gives {loops} loops")
        arrows += [(i, i)] * int(loops)
        for j in range(i + 1, k):
            count = -cartan_pair(quiver, roots[i], roots[j])
            if count < 0:
                raise InternalConsistencyError(
                    f"summands {list(roots[i])}, {list(roots[j])} give a negative arrow count"
                )
            arrows += [(i, j)] * count
    w_bar = tuple(dot(w, r) - cartan_pair(quiver, v0, r) for r in roots)
    if any(x < 0 for x in w_bar):
        raise InternalConsistencyError(f"negative slice framing {list(w_bar)}: invalid representation type")
    if k == 0:
        # the open leaf: the slice is a point
        return SliceData(Quiver(1, ()), (0,), (0,), (tuple(0 for _ in v0),))
    return SliceData(Quiver(k, tuple(arrows)), tuple(n for _, n in rt.summands), w_bar, tuple(roots))


def rank1_slice(quiver: Quiver, v: Sequence[int], w: Sequence[int], wall) -> SliceData:
    """A1 or Jordan slice at the minimal leaf of a classical wall, from closed formulas."""
    require_supported(quiver)
    v = as_vector(quiver, v, "v")
    w = as_vector(quiver, w, "w")
    if not is_dominant(FramedWeight(quiver, w, v)):
        raise InputError(f"rank1_slice needs a dominant weight; v={list(v)}, w={list(w)} is not")
    b = as_vector(quiver, tuple(getattr(wall, "normal", wall)), "wall normal")
    kind, m, is_wall = wall_shift(quiver, v, w, b)
    if not is_wall:
        raise InputError(f"{list(b)} does not define a classical wall for v={list(v)}, w={list(w)}")
    if kind == "real":
        pairing = dot(w, b) - cartan_pair(quiver, v, b)
        return SliceData(Quiver(1, ()), (m,), (pairing + 2 * m,), (b,))
    return SliceData(Quiver(1, ((0, 0),)), (m,), (level(quiver, w),), (b,))
