"""Quivers, their classification, Cartan data and positive roots.

Vertices are ``0..n-1`` and dimension vectors are plain integer tuples in that
order. Arrow orientation never enters any computation here: only the number of
edges between two vertices matters.
"""

from __future__ import annotations

import enum
import itertools
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from math import gcd
from typing import Sequence

from .errors import InputError, UnsupportedQuiverError

Vector = tuple[int, ...]


@dataclass(frozen=True)
class Quiver:
    n: int
    arrows: tuple[tuple[int, int], ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise InputError(f"quiver needs at least one vertex, got {self.n!r}")
        arrows = []
        for arrow in self.arrows:
            try:
                t, h = arrow
            except (TypeError, ValueError):
                raise InputError(f"arrow must be a [tail, head] pair, got {arrow!r}") from None
            if not (isinstance(t, int) and isinstance(h, int)) or not (0 <= t < self.n and 0 <= h < self.n):
                raise InputError(f"arrow {[t, h]} references a vertex outside 0..{self.n - 1}")
            arrows.append((t, h))
        object.__setattr__(self, "arrows", tuple(arrows))

    @classmethod
    def from_json(cls, data: dict, name: str | None = None) -> "Quiver":
        if not isinstance(data, dict):
            raise InputError("quiver JSON must be an object with 'vertices' and 'arrows'")
        if "vertices" not in data:
            raise InputError("quiver JSON: missing field 'vertices'")
        n = data["vertices"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise InputError(f"quiver JSON: field 'vertices' must be an integer, got {n!r}")
        arrows = data.get("arrows", [])
        if not isinstance(arrows, list):
            raise InputError("quiver JSON: field 'arrows' must be a list of [tail, head] pairs")
        return cls(n, tuple(tuple(a) if isinstance(a, list) else a for a in arrows), name=name)

    def to_json(self) -> dict:
        return {"vertices": self.n, "arrows": [list(a) for a in self.arrows]}

    @cached_property
    def edge_counts(self) -> tuple[tuple[int, ...], ...]:
        """Symmetric matrix of edge counts; a loop counts twice on the diagonal."""
        counts = [[0] * self.n for _ in range(self.n)]
        for t, h in self.arrows:
            counts[t][h] += 1
            counts[h][t] += 1
        return tuple(tuple(row) for row in counts)

    def neighbours(self, i: int) -> list[int]:
        return [j for j in range(self.n) if j != i and self.edge_counts[i][j]]

    def components(self) -> list[list[int]]:
        seen = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                i = queue.popleft()
                comp.append(i)
                for j in self.neighbours(i):
                    if j not in seen:
                        seen.add(j)
                        queue.append(j)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) == 1

    def subquiver(self, vertices: Sequence[int]) -> "Quiver":
        index = {v: k for k, v in enumerate(vertices)}
        arrows = tuple((index[t], index[h]) for t, h in self.arrows if t in index and h in index)
        return Quiver(len(vertices), arrows)

    def __str__(self):
        return self.name or f"Quiver({self.n}, {list(map(list, self.arrows))})"


@dataclass(frozen=True)
class QuiverClass:
    family: str  # "finite" | "affine" | "jordan" | "unsupported"
    letter: str | None = None
    rank: int | None = None

    @property
    def supported(self) -> bool:
        return self.family != "unsupported"

    @property
    def is_affine_like(self) -> bool:
        """Affine or Jordan: the cases carrying an imaginary root."""
        return self.family in ("affine", "jordan")

    @property
    def is_type_a(self) -> bool:
        return self.family == "jordan" or (self.family in ("finite", "affine") and self.letter == "A")

    @property
    def label(self) -> str:
        if self.family == "finite":
            return f"{self.letter}{self.rank}"
        if self.family == "affine":
            return f"{self.letter}{self.rank}~"
        return self.family

    def __str__(self):
        return self.label


FINITE = "finite"
AFFINE = "affine"
JORDAN = QuiverClass("jordan")
UNSUPPORTED = QuiverClass("unsupported")

# sorted arm lengths of a tree with one trivalent vertex
_STAR_TYPES = {
    (1, 2, 2): QuiverClass(FINITE, "E", 6),
    (1, 2, 3): QuiverClass(FINITE, "E", 7),
    (1, 2, 4): QuiverClass(FINITE, "E", 8),
    (2, 2, 2): QuiverClass(AFFINE, "E", 6),
    (1, 3, 3): QuiverClass(AFFINE, "E", 7),
    (1, 2, 5): QuiverClass(AFFINE, "E", 8),
}


def _arm_length(q: Quiver, centre: int, first: int) -> int:
    length, prev, cur = 1, centre, first
    while True:
        nxt = [j for j in q.neighbours(cur) if j != prev]
        if not nxt:
            return length
        if len(nxt) > 1:
            return -1
        prev, cur = cur, nxt[0]
        length += 1


@lru_cache(maxsize=512)
def classify(quiver: Quiver) -> QuiverClass:
    """Finite ADE, untwisted affine ADE, Jordan, or unsupported."""
    if not quiver.is_connected():
        raise InputError(f"quiver {quiver} is disconnected")
    n = quiver.n
    e = quiver.edge_counts
    if any(e[i][i] for i in range(n)):
        if n == 1 and len(quiver.arrows) == 1:
            return JORDAN
        return UNSUPPORTED
    if n == 1:
        return QuiverClass(FINITE, "A", 1)
    if any(e[i][j] > 1 for i in range(n) for j in range(n) if i != j):
        if n == 2 and e[0][1] == 2:
            return QuiverClass(AFFINE, "A", 1)
        return UNSUPPORTED

    degree = [len(quiver.neighbours(i)) for i in range(n)]
    n_edges = sum(degree) // 2
    if n_edges == n:
        return QuiverClass(AFFINE, "A", n - 1) if all(d == 2 for d in degree) else UNSUPPORTED
    if n_edges != n - 1:
        return UNSUPPORTED

    branch = [i for i in range(n) if degree[i] >= 3]
    if not branch:
        return QuiverClass(FINITE, "A", n)
    if len(branch) == 1:
        c = branch[0]
        arms = sorted(_arm_length(quiver, c, j) for j in quiver.neighbours(c))
        if degree[c] == 4:
            return QuiverClass(AFFINE, "D", 4) if arms == [1, 1, 1, 1] else UNSUPPORTED
        if degree[c] != 3:
            return UNSUPPORTED
        p, q, r = arms
        if (p, q) == (1, 1):
            return QuiverClass(FINITE, "D", r + 3)
        return _STAR_TYPES.get((p, q, r), UNSUPPORTED)
    if len(branch) == 2 and all(degree[b] == 3 for b in branch):
        for b in branch:
            leaves = [j for j in quiver.neighbours(b) if degree[j] == 1]
            if len(leaves) != 2:
                return UNSUPPORTED
        return QuiverClass(AFFINE, "D", n - 1)
    return UNSUPPORTED


def require_supported(quiver: Quiver) -> QuiverClass:
    cls = classify(quiver)
    if not cls.supported:
        raise UnsupportedQuiverError(
            f"quiver {quiver} is not of finite ADE, affine ADE or Jordan type"
        )
    return cls


@lru_cache(maxsize=512)
def cartan_matrix(quiver: Quiver) -> tuple[tuple[int, ...], ...]:
    e = quiver.edge_counts
    n = quiver.n
    return tuple(tuple((2 if i == j else 0) - e[i][j] for j in range(n)) for i in range(n))


def as_vector(quiver: Quiver, vec: Sequence, what: str = "vector") -> Vector:
    if len(vec) != quiver.n:
        raise InputError(f"{what} has {len(vec)} entries but the quiver has {quiver.n} vertices")
    return tuple(vec)


def tits_form(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Symmetrized Tits form: sum a_i b_i - 1/2 sum over arrows (a_t b_h + a_h b_t).

    Real roots have value 1 on the diagonal.
    """
    a = as_vector(quiver, a)
    b = as_vector(quiver, b)
    total = 2 * sum(x * y for x, y in zip(a, b))
    for t, h in quiver.arrows:
        total -= a[t] * b[h] + a[h] * b[t]
    return Fraction(total, 2)


def cartan_pair(quiver: Quiver, a: Sequence[int], b: Sequence[int]) -> int:
    """a^T C b; always twice the Tits form."""
    a = as_vector(quiver, a)
    b = as_vector(quiver, b)
    c = cartan_matrix(quiver)
    return sum(a[i] * c[i][j] * b[j] for i in range(quiver.n) if a[i] for j in range(quiver.n) if b[j])


def cartan_apply(quiver: Quiver, c: Sequence[int]) -> Vector:
    """C @ c."""
    mat = cartan_matrix(quiver)
    return tuple(sum(row[j] * c[j] for j in range(quiver.n)) for row in mat)


def dot(a: Sequence, b: Sequence):
    return sum(x * y for x, y in zip(a, b))


def is_root(quiver: Quiver, x: Sequence[int]) -> bool:
    """Whether ``x`` is a positive root of an arbitrary quiver (loops allowed).

    Reflects at loop-free vertices while the Cartan pairing with a simple root
    is positive. Ends at a simple root (real), at a vector with connected
    support and non-positive pairings (imaginary, fundamental set), or at a
    vector with a negative entry or disconnected support (not a root).
    """
    x = list(as_vector(quiver, x))
    if any(xi < 0 for xi in x) or not any(x):
        return False
    mat = cartan_matrix(quiver)
    n = quiver.n
    while True:
        if any(xi < 0 for xi in x):
            return False
        support = [i for i in range(n) if x[i]]
        if len(support) == 1 and x[support[0]] == 1:
            return True
        for i in range(n):
            if mat[i][i] != 2:
                continue
            p = sum(mat[i][j] * x[j] for j in range(n))
            if p > 0:
                x[i] -= p
                break
        else:
            return quiver.subquiver(support).is_connected()


class RootKind(enum.Enum):
    REAL = "real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class Root:
    coords: Vector
    kind: RootKind

    @property
    def is_real(self) -> bool:
        return self.kind is RootKind.REAL


@lru_cache(maxsize=512)
def delta(quiver: Quiver) -> Vector:
    """The indecomposable imaginary root: primitive positive generator of ker C."""
    cls = require_supported(quiver)
    if cls.family == "jordan":
        return (1,)
    if cls.family != "affine":
        raise InputError(f"no imaginary root: {quiver} is of finite type {cls.label}")
    import sympy

    kernel = sympy.Matrix(cartan_matrix(quiver)).nullspace()
    if len(kernel) != 1:
        raise UnsupportedQuiverError(f"Cartan kernel of {quiver} is not one-dimensional")
    vec = kernel[0]
    denom = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
    ints = [int(x * denom) for x in vec]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    if ints[0] < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def level(quiver: Quiver, w: Sequence[int]) -> int:
    """Pairing w.delta of the framing with the imaginary root."""
    return dot(as_vector(quiver, w, "w"), delta(quiver))


def delta_multiple(quiver: Quiver, b: Sequence[int]) -> int | None:
    """m if b = m*delta, else None. Finite types have no imaginary root."""
    if not classify(quiver).is_affine_like:
        return None
    d = delta(quiver)
    if d[0] == 0 or b[0] % d[0]:
        return None
    m = b[0] // d[0]
    return m if tuple(m * x for x in d) == tuple(b) else None


def positive_roots_upto(quiver: Quiver, bound: Sequence[int]) -> list[Root]:
    """All positive roots b with 0 < b <= bound, in lexicographic order."""
    require_supported(quiver)
    bound = as_vector(quiver, bound, "bound")
    if any(x < 0 for x in bound):
        raise InputError(f"bound must be nonnegative, got {list(bound)}")
    return list(_roots_in_box(quiver, bound))


@lru_cache(maxsize=4096)
def _roots_in_box(quiver: Quiver, bound: Vector) -> tuple[Root, ...]:
    if classify(quiver).family == "jordan":
        return tuple(Root((m,), RootKind.IMAGINARY) for m in range(1, bound[0] + 1))
    roots = []
    for b in itertools.product(*(range(x + 1) for x in bound)):
        if not any(b):
            continue
        q = tits_form(quiver, b, b)
        if q == 1:
            roots.append(Root(b, RootKind.REAL))
        elif q == 0 and delta_multiple(quiver, b):
            roots.append(Root(b, RootKind.IMAGINARY))
    return tuple(roots)
