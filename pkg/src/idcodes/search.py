"""Exact minimisation of identifying, group identifying and linear identifying codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .algebra import (
    DEFAULT_SUBGROUP_CAP,
    FpMatrix,
    Subgroup,
    codewords_from_generator,
    enumerate_subgroups,
    is_prime,
    iter_subspaces,
)
from .codesets import Code, is_dominating, is_identifying, is_separating, is_twin_free, translate_code
from .constructions import id_lower_bound, kappa
from .errors import CapExceededError, IdCodesError, ScopeError
from .hamming import Radices

DEFAULT_EXHAUSTIVE_CAP = 36


@dataclass
class SearchReport:
    """Outcome of an exact minimisation.

    ``optimum`` and ``witness`` are None when no code of the requested kind
    exists.  ``explored`` counts candidate sets examined (search-tree nodes
    for subset search, subgroups or subspaces otherwise).
    """

    optimum: int | None
    witness: Code | None
    explored: int
    bound_used: int
    dimension: int | None = None
    generator: FpMatrix | None = None
    kappa_formula: int | None = None


def _neighbor_masks(r: Radices) -> list[int]:
    return [sum(1 << x for x in nbrs) for nbrs in r.closed_neighbors]


def _identifying_mask(nbr: list[int], chosen: int) -> bool:
    seen = set()
    for m in nbr:
        j = m & chosen
        if not j or j in seen:
            return False
        seen.add(j)
    return True


class _SubsetSearch:
    """Ascending-index k-subset enumeration with a domination-feasibility cut."""

    def __init__(self, r: Radices):
        self.nbr = _neighbor_masks(r)
        self.n = r.order
        self.full = (1 << self.n) - 1
        self.reach = r.degree + 1
        self.explored = 0

    def run(self, k: int, fixed_zero: bool) -> int | None:
        if fixed_zero:
            return self._rec(1, 1, self.nbr[0], 1, k)
        return self._rec(0, 0, 0, 0, k)

    def _rec(self, chosen: int, count: int, covered: int, nxt: int, k: int) -> int | None:
        self.explored += 1
        if count == k:
            return chosen if _identifying_mask(self.nbr, chosen) else None
        need = k - count
        uncovered = self.full & ~covered
        if uncovered.bit_count() > need * self.reach:
            return None
        remaining = self.full & ~((1 << nxt) - 1)
        u = uncovered
        while u:
            low = u & -u
            if not self.nbr[low.bit_length() - 1] & remaining:
                return None
            u ^= low
        for i in range(nxt, self.n - need + 1):
            found = self._rec(chosen | 1 << i, count + 1, covered | self.nbr[i], i + 1, k)
            if found is not None:
                return found
        return None


def _translation_invariance_holds(r: Radices) -> bool:
    # Spot-check that translating an identifying code keeps it identifying
    # before relying on that symmetry; the full property is tested separately.
    code = Code.full(r)
    for x in (1, r.order - 1):
        if is_identifying(translate_code(code, r.coords_table[x])) != is_identifying(code):
            return False
    return True


def min_identifying_code(
    r: Radices, cap: int = DEFAULT_EXHAUSTIVE_CAP, symmetry: bool = True
) -> SearchReport:
    """Smallest identifying code of the Hamming graph by exhaustive search.

    Cardinalities ascend from ``ceil(|V| / (deg + 1))``.  With ``symmetry``
    on, candidates must contain vertex 0, which is safe because the graph is
    vertex-transitive via translations.
    """
    if not is_twin_free(r):
        raise ScopeError(f"radices {r.dims} give a graph with twins; no identifying code exists")
    if r.order > cap:
        raise CapExceededError(f"exhaustive search over {r.order} vertices exceeds cap {cap}")
    if symmetry:
        assert _translation_invariance_holds(r)
    bound = id_lower_bound(r)
    search = _SubsetSearch(r)
    for k in range(bound, r.order + 1):
        mask = search.run(k, symmetry)
        if mask is not None:
            return SearchReport(k, Code(r, mask), search.explored, bound)
    raise AssertionError("a twin-free graph always has the full vertex set as identifying code")


def identifying_codes(r: Radices, max_size: int, cap: int = DEFAULT_EXHAUSTIVE_CAP) -> Iterator[Code]:
    """Every identifying code with at most ``max_size`` codewords, smallest first."""
    if r.order > cap:
        raise CapExceededError(f"exhaustive search over {r.order} vertices exceeds cap {cap}")
    nbr = _neighbor_masks(r)
    for k in range(1, min(max_size, r.order) + 1):
        for combo in itertools.combinations(range(r.order), k):
            mask = sum(1 << i for i in combo)
            if _identifying_mask(nbr, mask):
                yield Code(r, mask)


def min_group_identifying_code(r: Radices, cap: int = DEFAULT_SUBGROUP_CAP) -> SearchReport:
    """Smallest identifying subgroup; ties go to the first in canonical order."""
    subgroups = enumerate_subgroups(r, cap)
    bound = id_lower_bound(r) if r.n >= 2 else 1
    explored = 0
    for h in subgroups:
        if len(h) < bound:
            continue
        explored += 1
        if is_identifying(h.code):
            return SearchReport(len(h), h.code, explored, bound)
    assert not is_twin_free(r)
    return SearchReport(None, None, explored, bound)


def min_linear_identifying_code(p: int, n: int, cap: int = DEFAULT_SUBGROUP_CAP) -> SearchReport:
    """Smallest identifying subspace of F_p^n, scanning dimensions upward."""
    if not is_prime(p):
        raise IdCodesError(f"{p} is not prime")
    if n < 1:
        raise IdCodesError("length must be >= 1")
    if p**n > cap:
        raise CapExceededError(f"F_{p}^{n} has {p**n} vectors, above the cap {cap}")
    r = Radices.uniform(p, n)
    expected = kappa(n, p) if n >= 2 else None
    bound = id_lower_bound(r) if n >= 2 else 1
    t0 = 0
    while p**t0 < bound:
        t0 += 1
    explored = 0
    for t in range(t0, n + 1):
        for g in iter_subspaces(p, n, t):
            explored += 1
            code = codewords_from_generator(g)
            if is_identifying(code):
                return SearchReport(p**t, code, explored, bound, t, g, expected)
    return SearchReport(None, None, explored, bound, None, None, expected)


@dataclass
class ProperSubgroupReport:
    """Proper identifying subgroups of a vertex group, or why each proper subgroup fails."""

    exists: bool
    witness: Subgroup | None
    failures: list[tuple[Subgroup, tuple[str, ...]]] = field(default_factory=list)


def failure_reasons(code: Code) -> tuple[str, ...]:
    reasons = []
    if not is_dominating(code):
        reasons.append("not dominating")
    if not is_separating(code):
        reasons.append("not separating")
    return tuple(reasons)


def proper_gid_existence(r: Radices, cap: int = DEFAULT_SUBGROUP_CAP) -> ProperSubgroupReport:
    """Search the subgroups other than {0} and the whole group for an identifying one."""
    report = ProperSubgroupReport(False, None)
    for h in enumerate_subgroups(r, cap):
        if len(h) in (1, r.order):
            continue
        reasons = failure_reasons(h.code)
        if reasons:
            report.failures.append((h, reasons))
        elif report.witness is None:
            report.exists = True
            report.witness = h
    return report
