"""Weights of integrable highest-weight modules, in c-coordinates.

A framed weight ``(w, c)`` stands for ``mu = omega - sum c_i alpha_i`` with
``omega = sum w_i varpi_i``. The pairing of mu with the i-th simple coroot is
``w_i - (C c)_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import InputError, InternalConsistencyError
from .quiver import Quiver, Vector, as_vector, cartan_apply, level, require_supported


@dataclass(frozen=True)
class FramedWeight:
    quiver: Quiver
    framing: Vector
    c: Vector

    def __post_init__(self):
        object.__setattr__(self, "framing", as_vector(self.quiver, self.framing, "w"))
        object.__setattr__(self, "c", as_vector(self.quiver, self.c, "c"))
        if any(x < 0 for x in self.framing):
            raise InputError(f"framing must be nonnegative, got {list(self.framing)}")

    def pairings(self) -> Vector:
        cc = cartan_apply(self.quiver, self.c)
        return tuple(wi - x for wi, x in zip(self.framing, cc))

    def with_c(self, c: Sequence[int]) -> "FramedWeight":
        return FramedWeight(self.quiver, self.framing, tuple(c))


def is_dominant(fw: FramedWeight) -> bool:
    return all(d >= 0 for d in fw.pairings())


def _first_negative(pairings):
    for i, d in enumerate(pairings):
        if d < 0:
            return i, d
    return None, 0


def dominant_conjugate(fw: FramedWeight) -> tuple[Vector, list[int]]:
    """Reflect at the first vertex with negative pairing until dominant.

    Returns the dominant ``c'`` and the vertices reflected at, in order.
    """
    cls = require_supported(fw.quiver)
    c = list(fw.c)
    if cls.family == "affine" and level(fw.quiver, fw.framing) < 1 and not is_dominant(fw):
        raise InputError("dominant conjugation of an affine weight needs level >= 1")
    guard = 10 * (sum(abs(x) for x in c) + sum(fw.framing) + 10)
    chain = []
    while True:
        i, d = _first_negative(fw.with_c(c).pairings())
        if i is None:
            return tuple(c), chain
        if len(chain) >= guard:
            raise InternalConsistencyError("dominant_conjugate: termination guard tripped")
        c[i] += d
        chain.append(i)


def reflect(fw: FramedWeight, i: int) -> FramedWeight:
    """Simple reflection s_i acting on mu."""
    c = list(fw.c)
    c[i] += fw.pairings()[i]
    return fw.with_c(c)


def is_weight(fw: FramedWeight) -> bool:
    """Whether mu is a weight of the irreducible integrable module L(omega).

    mu is a weight iff omega - mu^+ is a sum of simple roots for its dominant
    conjugate mu^+. Reflection descent only lowers c, so a negative entry at
    any point decides the answer.
    """
    cls = require_supported(fw.quiver)
    if cls.family == "affine" and level(fw.quiver, fw.framing) < 1:
        raise InputError("weight membership for affine quivers needs level w.delta >= 1")
    c = list(fw.c)
    while True:
        if any(x < 0 for x in c):
            return False
        i, d = _first_negative(fw.with_c(c).pairings())
        if i is None:
            return True
        c[i] += d


def max_shift(quiver: Quiver, v: Sequence[int], w: Sequence[int], b: Sequence[int]) -> int:
    """Largest m >= 0 such that nu + m*beta is a weight of L(omega).

    ``nu`` corresponds to ``(v, w)`` and must be dominant; ``b`` is the
    dimension vector of a positive real root or of delta.
    """
    fw = FramedWeight(quiver, tuple(w), tuple(v))
    if not is_dominant(fw):
        raise InputError(f"max_shift needs a dominant weight; v={list(v)}, w={list(w)} is not")
    b = as_vector(quiver, b, "root")
    support = [i for i in range(quiver.n) if b[i] > 0]
    if not support:
        raise InputError("max_shift needs a nonzero root")
    bound = min(fw.c[i] // b[i] for i in support)
    m = 0
    while m < bound and is_weight(fw.with_c(tuple(ci - (m + 1) * bi for ci, bi in zip(fw.c, b)))):
        m += 1
    return m


def dominantize(quiver: Quiver, v: Sequence[int], w: Sequence[int]) -> tuple[Vector, list[int]]:
    """Dimension vector v' with the same quiver variety and dominant weight.

    Entries of v' may be negative, in which case the variety is empty.
    """
    return dominant_conjugate(FramedWeight(quiver, tuple(w), tuple(v)))
