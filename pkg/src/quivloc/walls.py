"""Classical walls, singular and essential hyperplanes, genericity of stability.

Parameters live in ``Q^{Q_0}`` (one exact rational per vertex). A hyperplane
family is a primitive normal ``b`` together with the finite set ``S`` of
singular offsets: the singular hyperplanes are ``{lam : lam.b = s}`` for
``s in S`` and the essential ones are their translates ``lam.b = s + n*g``,
``g = gcd(b)``, by the integral lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Iterable, Sequence

from .errors import InputError, NotFlatError
from .moment import DEFAULT_BUDGET, is_flat, wall_shift
from .quiver import (
    Quiver,
    RootKind,
    Vector,
    as_vector,
    cartan_pair,
    delta,
    dot,
    level,
    positive_roots_upto,
    require_supported,
)
from .weights import dominantize


@dataclass(frozen=True)
class Wall:
    normal: Vector
    kind: RootKind
    m: int
    w_bar: int
    v_bar: int

    @property
    def is_real(self) -> bool:
        return self.kind is RootKind.REAL


@dataclass(frozen=True)
class HyperplaneFamily:
    wall: Wall
    singular_offsets: tuple[Fraction, ...]
    shift_modulus: int

    @property
    def normal(self) -> Vector:
        return self.wall.normal

    def pairing(self, lam: Sequence) -> Fraction:
        return Fraction(dot(self.normal, lam))

    def is_singular_value(self, x: Fraction) -> bool:
        return x in self.singular_offsets

    def coset_offsets(self, x: Fraction) -> list[Fraction]:
        """Singular offsets congruent to x modulo the shift modulus."""
        g = self.shift_modulus
        return [s for s in self.singular_offsets if ((x - s) / g).denominator == 1]

    def is_essential_value(self, x: Fraction) -> bool:
        return bool(self.coset_offsets(x))


@dataclass(frozen=True)
class DominantInstance:
    """The instance with dominant weight that all wall computations run on."""

    v: Vector
    w: Vector
    chain: tuple[int, ...]
    original_v: Vector

    @property
    def empty(self) -> bool:
        return any(x < 0 for x in self.v)

    @property
    def substituted(self) -> bool:
        return self.v != self.original_v


def dominant_instance(quiver: Quiver, v: Sequence[int], w: Sequence[int]) -> DominantInstance:
    v = as_vector(quiver, v, "v")
    w = as_vector(quiver, w, "w")
    v2, chain = dominantize(quiver, v, w)
    return DominantInstance(v2, w, tuple(chain), v)


def _primitive(vec: Sequence[int]) -> Vector:
    g = gcd(*vec)
    vec = tuple(x // g for x in vec)
    first = next(x for x in vec if x)
    return tuple(-x for x in vec) if first < 0 else vec


def classical_walls(quiver: Quiver, v: Sequence[int], w: Sequence[int], budget: int = DEFAULT_BUDGET) -> list[Wall]:
    """Classical walls of M(v, w), computed on the dominant instance."""
    require_supported(quiver)
    if not is_flat(quiver, v, w, budget=budget).flat:
        raise NotFlatError(v, w)
    inst = dominant_instance(quiver, v, w)
    if inst.empty:
        return []
    walls: dict[Vector, Wall] = {}
    w = inst.w
    for root in positive_roots_upto(quiver, inst.v):
        if not root.is_real and root.coords != delta(quiver):
            continue
        kind, m, is_wall = wall_shift(quiver, inst.v, w, root.coords)
        if not is_wall:
            continue
        b = root.coords
        if root.is_real:
            w_bar = dot(w, b) - cartan_pair(quiver, inst.v, b) + 2 * m
        else:
            w_bar = level(quiver, w)
        walls.setdefault(_primitive(b), Wall(_primitive(b), root.kind, m, w_bar, m))
    return list(walls.values())


def singular_offsets(wall: Wall) -> tuple[Fraction, ...]:
    """Offsets s such that {lam.b = s} is singular, sorted increasingly."""
    half = Fraction(wall.w_bar, 2)
    if wall.is_real:
        values = {half - i for i in range(1, wall.w_bar)}
    else:
        values = set()
        for q in range(1, wall.v_bar + 1):
            for p in range(1, q * wall.w_bar):
                if gcd(p, q) == 1:
                    values.add(half - Fraction(p, q))
    return tuple(sorted(values))


def family_for(wall: Wall) -> HyperplaneFamily:
    return HyperplaneFamily(wall, singular_offsets(wall), gcd(*wall.normal))


def singular_hyperplanes(quiver: Quiver, v: Sequence[int], w: Sequence[int], budget: int = DEFAULT_BUDGET) -> list[HyperplaneFamily]:
    return [family_for(wall) for wall in classical_walls(quiver, v, w, budget=budget)]


def offending_root(quiver: Quiver, v: Sequence[int], theta: Sequence) -> Vector | None:
    """First root b <= v with theta.b = 0, or None if theta is generic."""
    require_supported(quiver)
    theta = as_vector(quiver, theta, "theta")
    v = as_vector(quiver, v, "v")
    if any(x < 0 for x in v):
        return None
    for root in positive_roots_upto(quiver, v):
        if dot(theta, root.coords) == 0:
            return root.coords
    return None


def is_generic_stability(quiver: Quiver, v: Sequence[int], theta: Sequence) -> bool:
    return offending_root(quiver, v, theta) is None


def relevant_walls(families: Iterable[HyperplaneFamily], lam: Sequence) -> list[HyperplaneFamily]:
    """Families whose essential hyperplanes contain lam."""
    return [f for f in families if f.is_essential_value(f.pairing(lam))]


def verify_star(families: Iterable[HyperplaneFamily]) -> bool:
    """Within each residue class mod g, essential offsets between singular ones are singular."""
    for fam in families:
        g = fam.shift_modulus
        classes: dict[Fraction, list[Fraction]] = {}
        for s in fam.singular_offsets:
            classes.setdefault(s - g * floor(s / g), []).append(s)
        for members in classes.values():
            lo, hi = min(members), max(members)
            present = set(members)
            steps = int((hi - lo) / g)
            if any(lo + k * g not in present for k in range(steps + 1)):
                return False
    return True


def wall_from_normal(quiver: Quiver, v: Sequence[int], w: Sequence[int], normal: Sequence[int]) -> Wall:
    """The classical wall with the given normal; InputError if it is not one."""
    target = _primitive(as_vector(quiver, normal, "wall normal"))
    for wall in classical_walls(quiver, v, w):
        if wall.normal == target:
            return wall
    raise InputError(f"{list(normal)} is not a classical wall for v={list(v)}, w={list(w)}")

