"""Built-in catalog of Dynkin and extended Dynkin quivers.

Affine presets put the extending vertex at index 0, so ``w = (1, 0, ..., 0)``
is the framing at the extending vertex.
"""

from __future__ import annotations

import re

from .errors import InputError
from .quiver import Quiver


def _path(vertices):
    return [(a, b) for a, b in zip(vertices, vertices[1:])]


def _finite_edges(letter: str, n: int, offset: int = 0) -> list[tuple[int, int]]:
    vs = list(range(offset, offset + n))
    if letter == "A":
        return _path(vs)
    if letter == "D":
        return _path(vs[:-1]) + [(vs[-3], vs[-1])]
    if letter == "E":
        return _path(vs[:-1]) + [(vs[2], vs[-1])]
    raise InputError(f"unknown Dynkin letter {letter!r}")


def _affine_edges(letter: str, n: int) -> list[tuple[int, int]]:
    if letter == "A":
        if n == 1:
            return [(0, 1), (0, 1)]
        return _path(list(range(n + 1))) + [(n, 0)]
    finite = _finite_edges(letter, n, offset=1)
    # vertex adjacent to the extending vertex 0, in the 1-based finite labelling
    attach = {"D": 2, "E": {6: n, 7: 1, 8: n - 1}.get(n)}[letter]
    return [(0, attach)] + finite


_LIMITS = {"A": (1, 8), "D": (4, 8), "E": (6, 8)}
_NAME = re.compile(r"^([ADE])(\d+)(~?)$")


def preset_names() -> list[str]:
    names = []
    for tilde in ("", "~"):
        for letter, (lo, hi) in _LIMITS.items():
            names.extend(f"{letter}{k}{tilde}" for k in range(lo, hi + 1))
    return names + ["jordan"]


def preset(name: str) -> Quiver:
    """Look up a preset such as ``"A3"``, ``"D4~"`` or ``"jordan"``."""
    if name.lower() == "jordan":
        return Quiver(1, ((0, 0),), name="jordan")
    m = _NAME.match(name.strip().upper())
    if not m:
        raise InputError(f"unknown preset {name!r}; choose from {', '.join(preset_names())}")
    letter, rank, tilde = m.group(1), int(m.group(2)), m.group(3)
    lo, hi = _LIMITS[letter]
    if not lo <= rank <= hi:
        raise InputError(f"unknown preset {name!r}; {letter} ranks run {lo}..{hi}")
    label = f"{letter}{rank}{tilde}"
    if tilde:
        return Quiver(rank + 1, tuple(_affine_edges(letter, rank)), name=label)
    return Quiver(rank, tuple(_finite_edges(letter, rank)), name=label)
