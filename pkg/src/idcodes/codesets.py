"""Codes, J-sets and the code predicates.

A code is a set of vertices stored as a bitset over canonical indices.
``J_C(v)`` is the closed neighbourhood of ``v`` intersected with ``C``.

Predicates come in pairs: ``is_*`` returns a bool, and a ``*_violation``
function returns a concrete witness of failure (or ``None``).  Witness scans
run from the highest canonical index downward, so the reported witness is
the last offender in canonical order.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import IdCodesError, RadicesMismatchError, ScopeError
from .hamming import Radices, Vertex, as_vertex, hamming_distance, index_vertex


@dataclass(frozen=True)
class Code:
    """A set of vertices over fixed radices."""

    radices: Radices
    mask: int = 0

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.radices.order:
            raise IdCodesError("code mask has bits outside the vertex range")

    @classmethod
    def from_indices(cls, r: Radices, indices: Iterable[int]) -> "Code":
        mask = 0
        for k in indices:
            if not 0 <= k < r.order:
                raise IdCodesError(f"index {k} out of range for radices {r.dims}")
            mask |= 1 << k
        return cls(r, mask)

    @classmethod
    def from_vertices(cls, r: Radices, vertices: Iterable[Vertex | Sequence[int]]) -> "Code":
        return cls.from_indices(r, (as_vertex(r, v).index for v in vertices))

    @classmethod
    def full(cls, r: Radices) -> "Code":
        return cls(r, (1 << r.order) - 1)

    @classmethod
    def empty(cls, r: Radices) -> "Code":
        return cls(r, 0)

    @cached_property
    def indices(self) -> tuple[int, ...]:
        """Member indices in ascending canonical order."""
        out = []
        mask = self.mask
        while mask:
            low = mask & -mask
            out.append(low.bit_length() - 1)
            mask ^= low
        return tuple(out)

    @cached_property
    def index_set(self) -> frozenset[int]:
        return frozenset(self.indices)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[Vertex]:
        for k in self.indices:
            yield index_vertex(self.radices, k)

    def __contains__(self, v: object) -> bool:
        if isinstance(v, (tuple, list)):
            try:
                v = as_vertex(self.radices, v)
            except IdCodesError:
                return False
        if not isinstance(v, Vertex):
            return False
        if v.radices != self.radices:
            raise RadicesMismatchError(f"radices differ: {v.radices.dims} vs {self.radices.dims}")
        return v.index in self.index_set

    def has_index(self, k: int) -> bool:
        return k in self.index_set

    def _other(self, other: "Code") -> int:
        if other.radices != self.radices:
            raise RadicesMismatchError(f"radices differ: {self.radices.dims} vs {other.radices.dims}")
        return other.mask

    def __or__(self, other: "Code") -> "Code":
        return Code(self.radices, self.mask | self._other(other))

    def __and__(self, other: "Code") -> "Code":
        return Code(self.radices, self.mask & self._other(other))

    def __sub__(self, other: "Code") -> "Code":
        return Code(self.radices, self.mask & ~self._other(other))

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self) + "}"

    def vertices(self) -> list[Vertex]:
        return list(self)


@dataclass(frozen=True)
class JSet:
    """The codewords in the closed neighbourhood of ``owner``."""

    owner: Vertex
    indices: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[Vertex]:
        r = self.owner.radices
        return (index_vertex(r, k) for k in self.indices)

    @property
    def members(self) -> frozenset[Vertex]:
        return frozenset(self)

    def as_code(self) -> Code:
        return Code.from_indices(self.owner.radices, self.indices)

    def __str__(self) -> str:
        return "{" + ", ".join(str(v) for v in self) + "}"


def _jset_indices(code: Code, k: int) -> tuple[int, ...]:
    members = code.index_set
    return tuple(x for x in code.radices.closed_neighbors[k] if x in members)


def _all_jsets(code: Code) -> list[tuple[int, ...]]:
    members = code.index_set
    return [tuple(x for x in nbrs if x in members) for nbrs in code.radices.closed_neighbors]


def j_set(code: Code, u: Vertex | Sequence[int]) -> JSet:
    u = as_vertex(code.radices, u)
    return JSet(u, _jset_indices(code, u.index))


def _vertex(code: Code, k: int) -> Vertex:
    return index_vertex(code.radices, k)


# -- domination and separation -------------------------------------------------

def undominated_vertex(code: Code) -> Vertex | None:
    """Last vertex (canonically) whose J-set is empty."""
    jsets = _all_jsets(code)
    for k in range(len(jsets) - 1, -1, -1):
        if not jsets[k]:
            return _vertex(code, k)
    return None


def is_dominating(code: Code) -> bool:
    return all(_all_jsets(code))


def unseparated_pair(code: Code) -> tuple[Vertex, Vertex] | None:
    """A pair ``(u, v)`` with ``u > v`` canonically and ``J(u) == J(v)``."""
    seen: dict[tuple[int, ...], int] = {}
    jsets = _all_jsets(code)
    for k in range(len(jsets) - 1, -1, -1):
        prev = seen.setdefault(jsets[k], k)
        if prev != k:
            return _vertex(code, prev), _vertex(code, k)
    return None


def is_separating(code: Code) -> bool:
    # Two empty J-sets count as equal, so a pair of undominated vertices is unseparated.
    jsets = _all_jsets(code)
    return len(set(jsets)) == len(jsets)


def is_identifying(code: Code) -> bool:
    jsets = _all_jsets(code)
    return all(jsets) and len(set(jsets)) == len(jsets)


def is_twin_free(r: Radices) -> bool:
    nbrs = r.closed_neighbors
    return len(set(nbrs)) == len(nbrs)


# -- self-locating-dominating and self-identifying -----------------------------

def sld_violation(code: Code) -> tuple[Vertex, Vertex] | None:
    """A non-codeword ``x`` and some ``y != x`` with ``J(x) - J(y)`` empty.

    ``J(x)`` is contained in ``J(y)`` exactly when ``y`` lies in every closed
    neighbourhood ``N[c]``, ``c in J(x)``, so the candidates for ``y`` are
    that intersection minus ``x`` itself.
    """
    r = code.radices
    nbrs = r.closed_neighbors
    for x in range(r.order - 1, -1, -1):
        if code.has_index(x):
            continue
        jx = _jset_indices(code, x)
        if not jx:
            y = r.order - 1 if x != r.order - 1 else r.order - 2
            return _vertex(code, x), _vertex(code, y)
        common = set(nbrs[jx[0]])
        for c in jx[1:]:
            common.intersection_update(nbrs[c])
        common.discard(x)
        if common:
            return _vertex(code, x), _vertex(code, max(common))
    return None


def is_self_locating_dominating(code: Code) -> bool:
    return sld_violation(code) is None


def _is_prime_power(q: int) -> bool:
    if q < 2:
        return False
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return True


def selfid_violation(code: Code) -> JSet | None:
    """J-set of the last vertex breaking the self-identifying characterisation.

    The characterisation (every ``|J(x)| >= 3`` with two members at distance
    exactly 2) is only known for uniform prime-power radix; anything else
    raises ScopeError.
    """
    r = code.radices
    if not r.is_uniform or not _is_prime_power(r.dims[0]):
        raise ScopeError(
            f"self-identifying check needs uniform prime-power radices, got {r.dims}"
        )
    table = r.coords_table
    for x in range(r.order - 1, -1, -1):
        jx = _jset_indices(code, x)
        ok = len(jx) >= 3 and any(
            sum(a != b for a, b in zip(table[c], table[d])) == 2
            for c, d in combinations(jx, 2)
        )
        if not ok:
            return JSet(_vertex(code, x), jx)
    return None


def is_self_identifying(code: Code) -> bool:
    return selfid_violation(code) is None


# -- sufficient conditions -----------------------------------------------------

def two_direction_violation(code: Code) -> JSet | None:
    r = code.radices
    if r.n < 2:
        raise ScopeError("two-direction condition needs n >= 2")
    table = r.coords_table
    for u in range(r.order - 1, -1, -1):
        ju = _jset_indices(code, u)
        directions = set()
        for c in ju:
            if c != u:
                directions.add(next(i for i, (a, b) in enumerate(zip(table[u], table[c])) if a != b))
        if len(ju) < 3 or len(directions) < 2:
            return JSet(_vertex(code, u), ju)
    return None


def check_two_direction_sufficiency(code: Code) -> bool:
    """Every J-set has >= 3 members, with codeword neighbours in two directions.

    Sufficient, not necessary, for ``code`` to be identifying.
    """
    return two_direction_violation(code) is None


def mindist2_violation(code: Code) -> JSet | None:
    """J-set of a codeword with a codeword neighbour, or of a thin non-codeword."""
    r = code.radices
    if r.n < 3:
        raise ScopeError("minimum-distance-2 condition needs n >= 3")
    for u in range(r.order - 1, -1, -1):
        ju = _jset_indices(code, u)
        if code.has_index(u):
            if len(ju) > 1:
                return JSet(_vertex(code, u), ju)
        elif len(ju) < 3:
            return JSet(_vertex(code, u), ju)
    return None


def check_min_distance2_sufficiency(code: Code) -> bool:
    return mindist2_violation(code) is None


# -- plumbing ------------------------------------------------------------------

def translate_code(code: Code, x: Vertex | Sequence[int]) -> Code:
    r = code.radices
    x = as_vertex(r, x)
    xi = x.index
    return Code.from_indices(r, (r.add_indices(k, xi) for k in code.indices))


def min_pairwise_distance(code: Code) -> int:
    if len(code) < 2:
        raise IdCodesError("minimum pairwise distance needs at least two codewords")
    return min(hamming_distance(a, b) for a, b in combinations(list(code), 2))
