"""Explicit code constructions and closed-form bounds.

All bounds are computed in exact integer arithmetic; ceilings of ratios use
``-(-a // b)`` and logarithms are replaced by power comparisons.
"""

from __future__ import annotations

from .algebra import is_prime
from .codesets import Code, _all_jsets, is_identifying
from .errors import IdCodesError, ScopeError
from .hamming import Radices


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def sum_code(m: int, n: int) -> Code:
    """The subgroup {(x_1, ..., x_{n-1}, x_1 + ... + x_{n-1} mod m)} of Z_m^n."""
    if m < 2 or n < 2:
        raise ScopeError(f"sum code needs m >= 2 and n >= 2, got m={m}, n={n}")
    r = Radices.uniform(m, n)
    w = r.place_values
    indices = []
    for k in range(m ** (n - 1)):
        # k enumerates the free prefix (x_1, ..., x_{n-1}) in canonical order
        prefix = []
        for _ in range(n - 1):
            k, c = divmod(k, m)
            prefix.append(c)
        prefix.reverse()
        coords = prefix + [sum(prefix) % m]
        indices.append(sum(c * wi for c, wi in zip(coords, w)))
    return Code.from_indices(r, indices)


def _require_uniform_prime(code: Code) -> int:
    r = code.radices
    if not r.is_uniform or not is_prime(r.dims[0]):
        raise ScopeError(f"need uniform prime radices, got {r.dims}")
    return r.dims[0]


def direct_sum_extend(code: Code) -> Code:
    """F_p + C: prepend a free coordinate to every codeword."""
    p = _require_uniform_prime(code)
    r = code.radices
    big = Radices((p,) + r.dims)
    stride = r.order
    return Code.from_indices(big, (a * stride + k for a in range(p) for k in code.indices))


def no_isolated_codewords(code: Code) -> bool:
    """Every codeword has another codeword in its closed neighbourhood.

    For an identifying code C over F_p^n this is exactly the condition under
    which ``direct_sum_extend(C)`` is identifying in F_p^{n+1}.
    """
    _require_uniform_prime(code)
    if not is_identifying(code):
        raise ScopeError("the extension criterion applies to identifying codes only")
    jsets = _all_jsets(code)
    return all(len(jsets[k]) > 1 for k in code.indices)


def generic_id_lower_bound(q: int, delta: int, mu: int, nu: int) -> int:
    """ceil(mu*q / (delta + 1 + mu - nu)).

    Lower bound on an identifying code of a q-vertex graph with maximum
    degree ``delta`` whose non-codewords see at least ``mu`` codewords and
    whose codewords see at least ``nu``.
    """
    if mu < 1 or nu < 1 or delta < 1:
        raise ScopeError("mu, nu and delta must all be >= 1")
    den = delta + 1 + mu - nu
    if den <= 0:
        raise ScopeError(f"nonpositive denominator {den}")
    return _ceil_div(mu * q, den)


def id_lower_bound(r: Radices) -> int:
    """Domination-style bound ceil(|V| / (deg + 1)) valid for every identifying code."""
    return generic_id_lower_bound(r.order, r.degree, 1, 1)


def _gid_scope(r: Radices) -> None:
    if r.n < 3 or min(r.dims) < 3:
        raise ScopeError(f"group bound needs n >= 3 and every m_i >= 3, got {r.dims}")


def gid_lower_bound(r: Radices) -> int:
    """ceil(3 * prod(m_i) / (sum(m_i) - n + 3)) for group identifying codes."""
    _gid_scope(r)
    return _ceil_div(3 * r.order, sum(r.dims) - r.n + 3)


def gid_bounds(m: int, n: int) -> tuple[int, int]:
    """(lower, upper) bounds on the smallest group identifying code in K_m^n."""
    if n < 3 or m < 3:
        raise ScopeError(f"group bounds need n >= 3 and m >= 3, got m={m}, n={n}")
    lower = _ceil_div(3 * m**n, n * (m - 1) + 3)
    upper = m ** (n - 1)
    assert lower <= upper
    return lower, upper


def _kappa_intervals(p: int):
    r = 1
    while True:
        lo = 3 * (p**r - 1) // (p - 1)
        yield r, lo, lo + 3 * p**r - 1
        r += 1


def kappa(n: int, p: int) -> int:
    """Smallest dimension of a p-ary linear identifying code of length n."""
    if not is_prime(p):
        raise IdCodesError(f"{p} is not prime")
    if n <= 1:
        raise ScopeError("K_p^1 is not twin-free; no identifying code exists")
    if n == 2:
        return 2
    prev_hi = 2
    for r, lo, hi in _kappa_intervals(p):
        assert lo == prev_hi + 1
        if lo <= n <= hi:
            return n - r
        prev_hi = hi


def kappa_lower_bound(n: int, p: int) -> int:
    """Smallest k with p^k * (n(p-1) + 3) >= 3 p^n."""
    if not is_prime(p):
        raise IdCodesError(f"{p} is not prime")
    if n < 3:
        raise ScopeError("the dimension bound needs n >= 3")
    den = n * (p - 1) + 3
    target = 3 * p**n
    k = 0
    while p**k * den < target:
        k += 1
    return k


def kappa_monotonicity_check(n: int, p: int) -> bool:
    """kappa(n+1, p) <= kappa(n, p) + 1."""
    return kappa(n + 1, p) <= kappa(n, p) + 1

