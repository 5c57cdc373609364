"""Mixed-radix vertex arithmetic on the Hamming graph K_{m1} x ... x K_{mn}.

Vertices double as elements of the group Z_{m1} x ... x Z_{mn}.  Every
vertex has a canonical integer index (first coordinate most significant),
which fixes the vertex ordering used throughout the package.

Coordinate directions are 1-indexed in the public API (``unit_vector``);
storage is plain 0-indexed tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import CapExceededError, IdCodesError, RadicesMismatchError, ScopeError

DEFAULT_VERTEX_CAP = 2**20


@dataclass(frozen=True)
class Radices:
    """The radix vector (m_1, ..., m_n) of a Hamming graph."""

    dims: tuple[int, ...]
    cap: int = field(default=DEFAULT_VERTEX_CAP, compare=False, repr=False)

    def __post_init__(self):
        dims = tuple(int(m) for m in self.dims)
        object.__setattr__(self, "dims", dims)
        if not dims:
            raise IdCodesError("radices must have at least one coordinate")
        bad = [m for m in dims if m < 2]
        if bad:
            raise IdCodesError(f"every radix must be >= 2, got {dims}")
        if math.prod(dims) > self.cap:
            raise CapExceededError(
                f"radices {dims} give {math.prod(dims)} vertices, above the cap {self.cap}"
            )

    @classmethod
    def parse(cls, text: str, cap: int = DEFAULT_VERTEX_CAP) -> "Radices":
        """Parse ``"3,3,3"`` or ``"3 3 3"``."""
        parts = text.replace(",", " ").split()
        try:
            return cls(tuple(int(p) for p in parts), cap=cap)
        except ValueError as exc:
            if isinstance(exc, IdCodesError):
                raise
            raise IdCodesError(f"cannot parse radices {text!r}") from None

    @classmethod
    def uniform(cls, m: int, n: int, cap: int = DEFAULT_VERTEX_CAP) -> "Radices":
        return cls((m,) * n, cap=cap)

    def __len__(self) -> int:
        return len(self.dims)

    def __iter__(self) -> Iterator[int]:
        return iter(self.dims)

    def __str__(self) -> str:
        return " ".join(str(m) for m in self.dims)

    @property
    def n(self) -> int:
        return len(self.dims)

    @cached_property
    def order(self) -> int:
        """Number of vertices, i.e. the group order."""
        return math.prod(self.dims)

    @cached_property
    def degree(self) -> int:
        """Common vertex degree sum(m_i - 1); the graph is regular."""
        return sum(m - 1 for m in self.dims)

    @cached_property
    def place_values(self) -> tuple[int, ...]:
        weights = []
        w = 1
        for m in reversed(self.dims):
            weights.append(w)
            w *= m
        return tuple(reversed(weights))

    @property
    def is_uniform(self) -> bool:
        return len(set(self.dims)) == 1

    def vertex(self, coords: Iterable[int]) -> "Vertex":
        return Vertex(self, tuple(coords))

    def zero(self) -> "Vertex":
        return Vertex(self, (0,) * self.n)

    def vertices(self) -> Iterator["Vertex"]:
        """All vertices in canonical order."""
        for k in range(self.order):
            yield index_vertex(self, k)

    @cached_property
    def coords_table(self) -> tuple[tuple[int, ...], ...]:
        """Coordinates of every vertex, indexed canonically."""
        return tuple(_decode(self, k) for k in range(self.order))

    @cached_property
    def closed_neighbors(self) -> tuple[tuple[int, ...], ...]:
        """Sorted canonical indices of N[k] for every vertex index k."""
        table = []
        for k in range(self.order):
            coords = _decode(self, k)
            nbrs = [k]
            for i, (m, w) in enumerate(zip(self.dims, self.place_values)):
                base = k - coords[i] * w
                nbrs.extend(base + j * w for j in range(m) if j != coords[i])
            table.append(tuple(sorted(nbrs)))
        return tuple(table)

    def add_indices(self, a: int, b: int) -> int:
        """Group sum of two vertices given by canonical index."""
        out = 0
        for m, w in zip(self.dims, self.place_values):
            out += ((a // w + b // w) % m) * w
            a %= w
            b %= w
        return out

    def neg_index(self, a: int) -> int:
        out = 0
        for m, w in zip(self.dims, self.place_values):
            out += ((-(a // w)) % m) * w
            a %= w
        return out


@dataclass(frozen=True, slots=True)
class Vertex:
    """A vertex of the Hamming graph, equivalently a group element."""

    radices: Radices
    coords: tuple[int, ...]

    def __post_init__(self):
        coords = tuple(int(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if len(coords) != self.radices.n:
            raise IdCodesError(
                f"vertex {coords} has {len(coords)} coordinates, radices need {self.radices.n}"
            )
        for c, m in zip(coords, self.radices.dims):
            if not 0 <= c < m:
                raise IdCodesError(f"coordinate {c} out of range for radix {m} in {coords}")

    def __iter__(self) -> Iterator[int]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> int:
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"

    def __lt__(self, other: "Vertex") -> bool:
        _check_same(self, other)
        return self.coords < other.coords

    def __add__(self, other: "Vertex") -> "Vertex":
        return add(self, other)

    def __sub__(self, other: "Vertex") -> "Vertex":
        return sub(self, other)

    def __neg__(self) -> "Vertex":
        return neg(self)

    @property
    def index(self) -> int:
        return vertex_index(self)


def _check_same(u: Vertex, v: Vertex) -> None:
    if u.radices != v.radices:
        raise RadicesMismatchError(f"radices differ: {u.radices.dims} vs {v.radices.dims}")


def _decode(r: Radices, k: int) -> tuple[int, ...]:
    coords = []
    for m in reversed(r.dims):
        k, c = divmod(k, m)
        coords.append(c)
    return tuple(reversed(coords))


def hamming_distance(u: Vertex, v: Vertex) -> int:
    _check_same(u, v)
    return sum(a != b for a, b in zip(u.coords, v.coords))


def hamming_weight(u: Vertex) -> int:
    return sum(c != 0 for c in u.coords)


def add(u: Vertex, v: Vertex) -> Vertex:
    _check_same(u, v)
    dims = u.radices.dims
    return Vertex(u.radices, tuple((a + b) % m for a, b, m in zip(u.coords, v.coords, dims)))


def neg(u: Vertex) -> Vertex:
    return Vertex(u.radices, tuple((-a) % m for a, m in zip(u.coords, u.radices.dims)))


def sub(u: Vertex, v: Vertex) -> Vertex:
    return add(u, neg(v))


def unit_vector(r: Radices, i: int, j: int) -> Vertex:
    """e_i^j: offset j in coordinate direction i (1-indexed), zero elsewhere."""
    if not 1 <= i <= r.n:
        raise IdCodesError(f"direction {i} out of range 1..{r.n}")
    if not 0 <= j < r.dims[i - 1]:
        raise IdCodesError(f"offset {j} out of range 0..{r.dims[i - 1] - 1}")
    coords = [0] * r.n
    coords[i - 1] = j
    return Vertex(r, tuple(coords))


def closed_neighborhood(u: Vertex) -> frozenset[Vertex]:
    """N[u] = {u + e_i^j}, with e_i^0 counted once."""
    r = u.radices
    out = {u}
    for i in range(1, r.n + 1):
        for j in range(1, r.dims[i - 1]):
            out.add(add(u, unit_vector(r, i, j)))
    return frozenset(out)


def neighborhood_intersection_size(u: Vertex, v: Vertex) -> int:
    """|N[u] & N[v]| by the distance case formula, without building either set."""
    _check_same(u, v)
    r = u.radices
    if r.n < 2:
        raise ScopeError("the intersection formula needs n >= 2")
    diff = [i for i, (a, b) in enumerate(zip(u.coords, v.coords)) if a != b]
    if not diff:
        return 1 + r.degree
    if len(diff) == 1:
        return r.dims[diff[0]]
    if len(diff) == 2:
        return 2
    return 0


def neighborhood_intersection_size_bruteforce(u: Vertex, v: Vertex) -> int:
    _check_same(u, v)
    return len(closed_neighborhood(u) & closed_neighborhood(v))


def vertex_index(u: Vertex) -> int:
    return sum(c * w for c, w in zip(u.coords, u.radices.place_values))


def index_vertex(r: Radices, k: int) -> Vertex:
    if not 0 <= k < r.order:
        raise IdCodesError(f"index {k} out of range 0..{r.order - 1}")
    return Vertex(r, _decode(r, k))


def as_vertex(r: Radices, v: Vertex | Sequence[int]) -> Vertex:
    """Accept either a Vertex over ``r`` or a bare coordinate sequence."""
    if isinstance(v, Vertex):
        if v.radices != r:
            raise RadicesMismatchError(f"radices differ: {v.radices.dims} vs {r.dims}")
        return v
    return Vertex(r, tuple(v))
