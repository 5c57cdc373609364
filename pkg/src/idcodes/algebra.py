"""Group structure on the vertex set and linear algebra over F_p.

The vertex set of K_{m1} x ... x K_{mn} is the abelian group
Z_{m1} x ... x Z_{mn}.  This module enumerates its subgroups, forms
cosets, and, for uniform prime radix p, handles generator and parity-check
matrices of linear codes in F_p^n.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .codesets import Code, _jset_indices, is_identifying
from .errors import CapExceededError, FormatError, IdCodesError, RadicesMismatchError, ScopeError
from .hamming import Radices, Vertex, as_vertex, index_vertex

DEFAULT_SUBGROUP_CAP = 4096


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


# -- subgroups -----------------------------------------------------------------

def closure_violation(code: Code) -> tuple[Vertex, Vertex, Vertex] | None:
    """The lightest ``(a, b, a + b)`` with ``a, b`` in the code and ``a + b`` outside it.

    Lightest means smallest total Hamming weight of ``a`` and ``b``; ties go
    to the pair met first scanning down from the highest index.  A code
    lacking the identity reports ``(0, 0, 0)``.
    """
    r = code.radices
    if not code.has_index(0):
        z = r.zero()
        return z, z, z
    table = r.coords_table
    weight = {k: sum(c != 0 for c in table[k]) for k in code.indices}
    best = None
    members = code.indices[::-1]
    for ai, a in enumerate(members):
        for b in members[ai:]:
            s = r.add_indices(a, b)
            if not code.has_index(s):
                key = weight[a] + weight[b]
                if best is None or key < best[0]:
                    best = (key, a, b, s)
    if best is None:
        return None
    return tuple(index_vertex(r, k) for k in best[1:])


def is_subgroup(code: Code) -> bool:
    r = code.radices
    if not code.has_index(0):
        return False
    members = code.indices
    for ai, a in enumerate(members):
        for b in members[ai:]:
            if not code.has_index(r.add_indices(a, b)):
                return False
    # inverses are automatic in a finite group, but stay cheap to confirm
    assert all(code.has_index(r.neg_index(k)) for k in members)
    return True


@dataclass(frozen=True)
class Subgroup:
    """A code certified to be closed under addition."""

    code: Code
    certified: bool = False

    @classmethod
    def certify(cls, code: Code) -> "Subgroup":
        if not is_subgroup(code):
            raise IdCodesError(f"code of size {len(code)} is not a subgroup")
        return cls(code, True)

    @property
    def radices(self) -> Radices:
        return self.code.radices

    def __len__(self) -> int:
        return len(self.code)

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self.code)

    def generators(self) -> list[Vertex]:
        """A small generating set, picked greedily in canonical order."""
        r = self.radices
        span = {0}
        gens = []
        for k in self.code.indices:
            if k not in span:
                gens.append(k)
                span = _extend(r, span, k)
        return [r.vertex(r.coords_table[k]) for k in gens]


def _extend(r: Radices, group: set[int] | frozenset[int], g: int) -> set[int]:
    # <H, g> = union of the cosets H + k*g for k = 0, 1, ... until k*g falls in H
    out = set(group)
    step = g
    while step not in group:
        out.update(r.add_indices(h, step) for h in group)
        step = r.add_indices(step, g)
    return out


def closure(r: Radices, generators: Iterable[Vertex | Sequence[int]]) -> Subgroup:
    span: set[int] = {0}
    for g in generators:
        span = _extend(r, span, as_vertex(r, g).index)
    return Subgroup(Code.from_indices(r, span), True)


def _sort_key(code: Code) -> tuple[int, tuple[int, ...]]:
    return len(code), code.indices


def enumerate_subgroups(r: Radices, cap: int = DEFAULT_SUBGROUP_CAP) -> list[Subgroup]:
    """Every subgroup of Z_{m1} x ... x Z_{mn}, sorted by (size, members).

    Breadth-first from the trivial subgroup: each known subgroup is extended
    by one element from every coset it does not contain, and the results are
    deduplicated by bitset.
    """
    if r.order > cap:
        raise CapExceededError(f"subgroup enumeration over {r.order} elements exceeds cap {cap}")
    seen = {1}
    frontier = [frozenset({0})]
    found = [frozenset({0})]
    while frontier:
        nxt = []
        for group in frontier:
            covered = set(group)
            for g in range(r.order):
                if g in covered:
                    continue
                bigger = frozenset(_extend(r, group, g))
                # <H, g> depends only on the coset g + H
                covered.update(r.add_indices(h, g) for h in group)
                mask = sum(1 << k for k in bigger)
                if mask not in seen:
                    seen.add(mask)
                    nxt.append(bigger)
                    found.append(bigger)
        frontier = nxt
    subgroups = [Subgroup(Code.from_indices(r, g), True) for g in found]
    subgroups.sort(key=lambda h: _sort_key(h.code))
    assert all(r.order % len(h) == 0 for h in subgroups)
    return subgroups


def cosets(h: Subgroup) -> list[Code]:
    """The cosets of ``h``, ordered by smallest member."""
    if not h.certified:
        raise IdCodesError("cosets need a certified subgroup")
    r = h.radices
    members = h.code.indices
    out = []
    covered = 0
    for x in range(r.order):
        if covered >> x & 1:
            continue
        coset = Code.from_indices(r, (r.add_indices(x, k) for k in members))
        covered |= coset.mask
        out.append(coset)
    return out


def is_group_identifying(code: Code) -> bool:
    return is_subgroup(code) and is_identifying(code)


def coset_jset_shift(code: Code, u: Vertex | Sequence[int], c: Vertex | Sequence[int]) -> bool:
    """Check ``J(u + c) == J(u) + c`` for a codeword ``c`` of a subgroup code."""
    r = code.radices
    u = as_vertex(r, u)
    c = as_vertex(r, c)
    if not code.has_index(c.index):
        raise IdCodesError(f"{c} is not a codeword")
    if not is_subgroup(code):
        raise IdCodesError("J-set shifting needs a subgroup code")
    shifted = {r.add_indices(k, c.index) for k in _jset_indices(code, u.index)}
    return shifted == set(_jset_indices(code, r.add_indices(u.index, c.index)))


# -- matrices over F_p ---------------------------------------------------------

@dataclass(frozen=True)
class FpMatrix:
    """A matrix over F_p; a 0-row matrix still knows its column count."""

    p: int
    rows: tuple[tuple[int, ...], ...]
    cols: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise IdCodesError(f"modulus {self.p} is not prime")
        rows = tuple(tuple(int(x) % self.p for x in row) for row in self.rows)
        object.__setattr__(self, "rows", rows)
        if any(len(row) != self.cols for row in rows):
            raise IdCodesError(f"every row needs {self.cols} entries")

    @classmethod
    def from_rows(cls, p: int, rows: Sequence[Sequence[int]], cols: int | None = None) -> "FpMatrix":
        rows = [tuple(row) for row in rows]
        if cols is None:
            if not rows:
                raise IdCodesError("an empty matrix needs an explicit column count")
            cols = len(rows[0])
        return cls(p, tuple(rows), cols)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.cols

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.rows]

    def __str__(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.rows)


def rref(m: FpMatrix) -> tuple[FpMatrix, int]:
    """Reduced row echelon form and rank; zero rows are dropped from the result."""
    p = m.p
    work = [list(row) for row in m.rows]
    rank = 0
    for col in range(m.cols):
        pivot = next((i for i in range(rank, len(work)) if work[i][col]), None)
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        inv = pow(work[rank][col], -1, p)
        work[rank] = [x * inv % p for x in work[rank]]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                f = work[i][col]
                work[i] = [(a - f * b) % p for a, b in zip(work[i], work[rank])]
        rank += 1
    return FpMatrix(p, tuple(tuple(row) for row in work[:rank]), m.cols), rank


def _pivots(reduced: FpMatrix) -> list[int]:
    return [next(j for j, x in enumerate(row) if x) for row in reduced.rows]


def generator_to_parity_check(g: FpMatrix) -> FpMatrix:
    """Parity-check matrix [-A^T | I] for a generator with RREF [I | A].

    Non-systematic generators are handled by moving pivot columns to the
    front, applying the formula, and moving the columns back.
    """
    p, n = g.p, g.cols
    reduced, rank = rref(g)
    if rank != len(g.rows):
        raise IdCodesError(f"generator has rank {rank} but {len(g.rows)} rows")
    pivots = _pivots(reduced)
    free = [j for j in range(n) if j not in pivots]
    order = pivots + free
    # a[i][k] is the entry of row i at the k-th free column
    a = [[row[j] for j in free] for row in reduced.rows]
    h_rows = []
    for k in range(len(free)):
        permuted = [(-a[i][k]) % p for i in range(rank)] + [int(k == l) for l in range(len(free))]
        row = [0] * n
        for pos, col in enumerate(order):
            row[col] = permuted[pos]
        h_rows.append(tuple(row))
    return FpMatrix(p, tuple(h_rows), n)


def syndrome(h: FpMatrix, u: Vertex | Sequence[int]) -> tuple[int, ...]:
    """``H u^T`` over F_p."""
    if isinstance(u, Vertex):
        r = u.radices
        if not r.is_uniform or r.dims[0] != h.p:
            raise RadicesMismatchError(f"vertex radices {r.dims} do not match F_{h.p}")
        coords = u.coords
    else:
        coords = tuple(u)
        if any(not 0 <= x < h.p for x in coords):
            raise IdCodesError(f"vector {coords} has entries outside F_{h.p}")
    if len(coords) != h.cols:
        raise IdCodesError(f"vector length {len(coords)} does not match {h.cols} columns")
    return tuple(sum(a * b for a, b in zip(row, coords)) % h.p for row in h.rows)


def codewords_from_generator(g: FpMatrix) -> Code:
    p, n = g.p, g.cols
    _, rank = rref(g)
    if rank != len(g.rows):
        raise IdCodesError(f"generator has rank {rank} but {len(g.rows)} rows")
    r = Radices.uniform(p, n)
    words = set()
    for coeffs in itertools.product(range(p), repeat=len(g.rows)):
        word = [0] * n
        for c, row in zip(coeffs, g.rows):
            if c:
                word = [(w + c * x) % p for w, x in zip(word, row)]
        words.add(tuple(word))
    return Code.from_vertices(r, words)


def is_linear_code(code: Code) -> bool:
    r = code.radices
    if not r.is_uniform or not is_prime(r.dims[0]):
        raise ScopeError(f"linear codes need uniform prime radices, got {r.dims}")
    # over a prime field every additive subgroup is also closed under scalars
    return is_subgroup(code)


def gaussian_binomial(n: int, t: int, p: int) -> int:
    if not 0 <= t <= n:
        return 0
    num = den = 1
    for i in range(t):
        num *= p ** (n - i) - 1
        den *= p ** (i + 1) - 1
    return num // den


def iter_subspaces(p: int, n: int, t: int) -> Iterator[FpMatrix]:
    """Canonical RREF generators of the t-dimensional subspaces of F_p^n.

    Ordered by pivot columns (lexicographic), then by the free entries.
    """
    for pivots in itertools.combinations(range(n), t):
        slots = [(i, j) for i, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivots]
        for values in itertools.product(range(p), repeat=len(slots)):
            rows = [[0] * n for _ in range(t)]
            for i, pc in enumerate(pivots):
                rows[i][pc] = 1
            for (i, j), v in zip(slots, values):
                rows[i][j] = v
            yield FpMatrix(p, tuple(tuple(row) for row in rows), n)


def enumerate_subspaces(p: int, n: int, t: int, cap: int = DEFAULT_SUBGROUP_CAP) -> list[FpMatrix]:
    if not is_prime(p):
        raise IdCodesError(f"{p} is not prime")
    if not 0 <= t <= n:
        raise IdCodesError(f"dimension {t} out of range 0..{n}")
    if p**n > cap:
        raise CapExceededError(f"F_{p}^{n} has {p**n} vectors, above the cap {cap}")
    out = list(iter_subspaces(p, n, t))
    assert len(out) == gaussian_binomial(n, t, p)
    return out


# -- matrix text format ----------------------------------------------------------

def parse_matrix_text(text: str) -> FpMatrix:
    """Parse ``p rows cols`` followed by ``rows`` lines of entries; ``#`` starts a comment."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise FormatError("matrix file is empty")
    try:
        header = [int(x) for x in lines[0].split()]
        body = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError:
        raise FormatError("matrix file contains a non-integer token") from None
    if len(header) != 3:
        raise FormatError("matrix header must be 'p rows cols'")
    p, nrows, ncols = header
    if len(body) != nrows:
        raise FormatError(f"header promises {nrows} rows, found {len(body)}")
    for i, row in enumerate(body, 1):
        if len(row) != ncols:
            raise FormatError(f"row {i} has {len(row)} entries, expected {ncols}")
        if any(not 0 <= x < p for x in row):
            raise FormatError(f"row {i} has entries outside [0, {p})")
    try:
        return FpMatrix(p, tuple(tuple(row) for row in body), ncols)
    except IdCodesError as exc:
        raise FormatError(str(exc)) from None


def format_matrix_text(m: FpMatrix) -> str:
    lines = [f"{m.p} {len(m.rows)} {m.cols}"]
    lines.extend(" ".join(str(x) for x in row) for row in m.rows)
    return "\n".join(lines) + "\n"
