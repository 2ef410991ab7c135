"""Localization verdicts at a parameter pair (lam, theta).

Quantization parameters ``lam`` and stability parameters ``theta`` are vectors
of exact rationals indexed by the vertices, in the symmetrized normalization
of the quantum comoment map (so for the Jordan quiver the singular values are
exactly ``lam - r/2`` in ``(-r, 0)`` with denominator at most ``n``). When the
input weight is not dominant, every verdict is computed on the dominant
instance and lam, theta are read in its coordinates.

Confidence follows a fixed coverage table: verdicts for finite type A, affine
type A and the Jordan quiver are proven; other finite/affine types are
conjectural, except that parameters off every essential hyperplane are proven
regular with abelian localization for every generic theta.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .errors import NonGenericStabilityError
from .moment import DEFAULT_BUDGET
from .presets import preset
from .quiver import Quiver, Vector, as_vector, classify, dot, require_supported
from .slices import rank1_slice
from .walls import (
    DominantInstance,
    HyperplaneFamily,
    dominant_instance,
    offending_root,
    relevant_walls,
    singular_hyperplanes,
)


class Confidence(enum.Enum):
    PROVEN = "proven"
    CONJECTURAL = "conjectural"


BASIS_TYPE_A = "type A localization theorem"
BASIS_OFF_ESSENTIAL = "off all essential hyperplanes"
BASIS_CONJ_DERIVED = "conjecture: derived localization fails exactly on singular hyperplanes"
BASIS_CONJ_ABELIAN = "conjecture: abelian localization iff the ample cone lies in the chamber of lam"
BASIS_CHAMBER = "quantum chamber exactness theorem"
BASIS_O_SING = "O-singular hyperplanes are singular (type A reduction to Gieseker spaces)"
BASIS_FIN_HOM = "conjecture: finite homological dimension iff derived localization"


@dataclass(frozen=True)
class WallDetail:
    normal: Vector
    pairing: Fraction
    relevant: bool
    threshold: Fraction | None = None
    side: str | None = None
    ok: bool = True


@dataclass(frozen=True)
class Verdict:
    question: str
    holds: bool
    confidence: Confidence
    basis: str
    walls: tuple[WallDetail, ...] = field(default=())


def as_params(quiver: Quiver, vec: Sequence, what: str) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) for x in as_vector(quiver, vec, what))


def is_singular_parameter(families: Sequence[HyperplaneFamily], lam: Sequence) -> bool:
    return any(f.is_singular_value(f.pairing(lam)) for f in families)


class LocalizationOracle:
    """All verdicts for one instance (Q, v, w); walls are computed once."""

    def __init__(self, quiver: Quiver, v: Sequence[int], w: Sequence[int], budget: int = DEFAULT_BUDGET):
        self.quiver = quiver
        self.cls = require_supported(quiver)
        self.families = tuple(singular_hyperplanes(quiver, v, w, budget=budget))
        self.instance: DominantInstance = dominant_instance(quiver, v, w)
        self.proven = self.cls.is_type_a

    def is_singular(self, lam) -> bool:
        return is_singular_parameter(self.families, as_params(self.quiver, lam, "lambda"))

    def _plain_details(self, lam):
        return tuple(
            WallDetail(f.normal, f.pairing(lam), f.is_essential_value(f.pairing(lam))) for f in self.families
        )

    def derived(self, lam) -> Verdict:
        lam = as_params(self.quiver, lam, "lambda")
        holds = not is_singular_parameter(self.families, lam)
        if self.proven:
            conf, basis = Confidence.PROVEN, BASIS_TYPE_A
        elif not relevant_walls(self.families, lam):
            conf, basis = Confidence.PROVEN, BASIS_OFF_ESSENTIAL
        else:
            conf, basis = Confidence.CONJECTURAL, BASIS_CONJ_DERIVED
        return Verdict("derived", holds, conf, basis, self._plain_details(lam))

    def finite_homological_dimension(self, lam) -> Verdict:
        v = self.derived(lam)
        basis = v.basis if v.confidence is Confidence.PROVEN else BASIS_FIN_HOM
        return Verdict("finite_homological_dimension", v.holds, v.confidence, basis, v.walls)

    def _check_theta(self, theta):
        theta = as_params(self.quiver, theta, "theta")
        bad = offending_root(self.quiver, self.instance.v, theta)
        if bad is not None:
            raise NonGenericStabilityError(bad, theta)
        return theta

    def gamma_exact(self, lam, theta) -> Verdict:
        lam = as_params(self.quiver, lam, "lambda")
        theta = self._check_theta(theta)
        details = []
        any_relevant = False
        for f in self.families:
            x = f.pairing(lam)
            coset = f.coset_offsets(x)
            if not coset:
                details.append(WallDetail(f.normal, x, False))
                continue
            any_relevant = True
            if dot(theta, f.normal) > 0:
                threshold, side, ok = max(coset), "+", x > max(coset)
            else:
                threshold, side, ok = min(coset), "-", x < min(coset)
            details.append(WallDetail(f.normal, x, True, threshold, side, ok))
        holds = all(d.ok for d in details)
        if not any_relevant:
            conf, basis = Confidence.PROVEN, BASIS_OFF_ESSENTIAL
        elif self.proven:
            conf, basis = Confidence.PROVEN, BASIS_CHAMBER
        else:
            conf, basis = Confidence.CONJECTURAL, BASIS_CONJ_ABELIAN
        return Verdict("gamma_exact", holds, conf, basis, tuple(details))

    def abelian(self, lam, theta) -> Verdict:
        g = self.gamma_exact(lam, theta)
        holds = g.holds and not self.is_singular(lam)
        basis = BASIS_TYPE_A if g.confidence is Confidence.PROVEN and g.basis == BASIS_CHAMBER else g.basis
        return Verdict("abelian", holds, g.confidence, basis, g.walls)

    def o_regular(self, lam) -> Verdict:
        lam = as_params(self.quiver, lam, "lambda")
        holds = not is_singular_parameter(self.families, lam)
        if self.proven:
            conf, basis = Confidence.PROVEN, BASIS_O_SING
        else:
            d = self.derived(lam)
            conf, basis = d.confidence, d.basis
        return Verdict("o_regular", holds, conf, basis, self._plain_details(lam))

    def slice_transfer(self, lam, theta) -> "SliceTransferReport":
        lam = as_params(self.quiver, lam, "lambda")
        theta = self._check_theta(theta)
        ambient = self.abelian(lam, theta).holds
        entries = []
        for f in self.families:
            sd = rank1_slice(self.quiver, self.instance.v, self.instance.w, f.wall)
            slice_q = preset("jordan") if sd.quiver.arrows else preset("A1")
            lam_s, theta_s = sd.restrict(lam), sd.restrict(theta)
            holds = LocalizationOracle(slice_q, sd.v_bar, sd.w_bar).abelian(lam_s, theta_s).holds
            entries.append(SliceEntry(f.normal, slice_q.name, sd.v_bar[0], sd.w_bar[0], lam_s[0], theta_s[0], holds))
        violations = tuple(e.normal for e in entries if ambient and not e.holds)
        return SliceTransferReport(ambient, tuple(entries), violations)


@dataclass(frozen=True)
class SliceEntry:
    normal: Vector
    slice_quiver: str
    v_bar: int
    w_bar: int
    eta_lambda: Fraction
    eta_theta: Fraction
    holds: bool


@dataclass(frozen=True)
class SliceTransferReport:
    ambient_holds: bool
    slices: tuple[SliceEntry, ...]
    violations: tuple[Vector, ...]

    @property
    def consistent(self) -> bool:
        return not self.violations


def derived_localization(quiver, v, w, lam, budget=DEFAULT_BUDGET) -> Verdict:
    return LocalizationOracle(quiver, v, w, budget).derived(lam)


def finite_homological_dimension(quiver, v, w, lam, budget=DEFAULT_BUDGET) -> Verdict:
    return LocalizationOracle(quiver, v, w, budget).finite_homological_dimension(lam)


def gamma_exact(quiver, v, w, lam, theta, budget=DEFAULT_BUDGET) -> Verdict:
    return LocalizationOracle(quiver, v, w, budget).gamma_exact(lam, theta)


def abelian_localization(quiver, v, w, lam, theta, budget=DEFAULT_BUDGET) -> Verdict:
    return LocalizationOracle(quiver, v, w, budget).abelian(lam, theta)


def o_regular(quiver, v, w, lam, budget=DEFAULT_BUDGET) -> Verdict:
    return LocalizationOracle(quiver, v, w, budget).o_regular(lam)


def slice_transfer_check(quiver, v, w, lam, theta, budget=DEFAULT_BUDGET) -> SliceTransferReport:
    return LocalizationOracle(quiver, v, w, budget).slice_transfer(lam, theta)


def coverage(quiver: Quiver) -> Confidence:
    """Confidence class of a quiver in the coverage table."""
    return Confidence.PROVEN if classify(quiver).is_type_a else Confidence.CONJECTURAL
