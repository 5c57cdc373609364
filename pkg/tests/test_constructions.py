import pytest

import oracles
from idcodes import (
    Code,
    Radices,
    check_min_distance2_sufficiency,
    direct_sum_extend,
    generic_id_lower_bound,
    gid_bounds,
    gid_lower_bound,
    is_group_identifying,
    is_identifying,
    is_linear_code,
    is_subgroup,
    j_set,
    kappa,
    kappa_lower_bound,
    kappa_monotonicity_check,
    min_pairwise_distance,
    no_isolated_codewords,
    sum_code,
)
from idcodes.constructions import id_lower_bound
from idcodes.errors import IdCodesError, ScopeError
from idcodes.search import identifying_codes

FIG2_WORDS = [(0, 0, 0), (1, 0, 1), (2, 0, 2), (0, 1, 1), (1, 1, 2), (2, 1, 0), (0, 2, 2), (1, 2, 0), (2, 2, 1)]


# -- sum code ----------------------------------------------------------------------

def test_sum_code_matches_drawn_code(fig2):
    c = sum_code(3, 3)
    assert c == Code.from_vertices(Radices((3, 3, 3)), FIG2_WORDS)
    assert c == fig2


def test_sum_code_small_cases():
    even = sum_code(2, 3)
    assert {v.coords for v in even} == {(0, 0, 0), (0, 1, 1), (1, 0, 1), (1, 1, 0)}
    assert is_identifying(even)
    assert oracles.is_identifying({v.coords for v in even}, (2, 2, 2))
    pair = sum_code(2, 2)
    assert {v.coords for v in pair} == {(0, 0), (1, 1)}
    assert not is_identifying(pair)
    assert not oracles.is_identifying({(0, 0), (1, 1)}, (2, 2))


def test_sum_code_scope():
    with pytest.raises(ScopeError):
        sum_code(1, 3)
    with pytest.raises(ScopeError):
        sum_code(3, 1)


@pytest.mark.parametrize("m", [2, 3, 4, 5])
@pytest.mark.parametrize("n", [3, 4])
def test_sum_code_properties(m, n):
    c = sum_code(m, n)
    r = c.radices
    assert len(c) == m ** (n - 1)
    assert is_subgroup(c)
    assert is_group_identifying(c)
    assert min_pairwise_distance(c) == 2
    assert check_min_distance2_sufficiency(c)
    table = r.coords_table
    for u in r.vertices():
        if u in c:
            continue
        nbrs = [w for w in j_set(c, u) if w != u]
        assert len(nbrs) == n
        directions = sorted(next(i for i in range(n) if table[w.index][i] != u.coords[i]) for w in nbrs)
        assert directions == list(range(n))


# -- direct sums -------------------------------------------------------------------

def test_direct_sum_examples(fig2):
    c = Code.from_vertices(Radices((2,)), [(0,)])
    assert {v.coords for v in direct_sum_extend(c)} == {(0, 0), (1, 0)}
    big = direct_sum_extend(fig2)
    assert big.radices.dims == (3, 3, 3, 3)
    assert len(big) == 27
    assert {v.coords[1:] for v in big} == {v.coords for v in fig2}


def test_direct_sum_preserves_linearity(fig1b):
    r = Radices((3, 3))
    for code in [sum_code(3, 3), Code.full(r), Code.from_vertices(r, [(0, 0), (1, 2)]), fig1b]:
        assert is_linear_code(direct_sum_extend(code)) == is_linear_code(code)


def test_direct_sum_scope():
    with pytest.raises(ScopeError):
        direct_sum_extend(Code.full(Radices((4, 4))))
    with pytest.raises(ScopeError):
        direct_sum_extend(Code.full(Radices((3, 2))))


def test_no_isolated_codewords_examples(fig2):
    assert not no_isolated_codewords(fig2)
    assert not is_identifying(direct_sum_extend(fig2))
    full = Code.full(Radices((3, 3)))
    assert no_isolated_codewords(full)
    assert is_identifying(direct_sum_extend(full))


def test_no_isolated_codewords_needs_identifying():
    with pytest.raises(ScopeError):
        no_isolated_codewords(Code.from_indices(Radices((3, 3)), [0]))


@pytest.mark.parametrize("p,n,max_size", [(2, 2, 4), (3, 2, 9)])
def test_extension_criterion_biconditional(p, n, max_size):
    r = Radices.uniform(p, n)
    seen = 0
    for code in identifying_codes(r, max_size):
        seen += 1
        assert no_isolated_codewords(code) == is_identifying(direct_sum_extend(code))
    assert seen > 0


def test_extension_criterion_on_constructed_codes(fig1a, fig1b):
    for code in [sum_code(2, 3), sum_code(3, 3), fig1a, fig1b, Code.full(Radices((2, 2, 2)))]:
        assert no_isolated_codewords(code) == is_identifying(direct_sum_extend(code))


# -- bounds ------------------------------------------------------------------------

@pytest.mark.parametrize(
    "q,delta,mu,nu,expected", [(27, 6, 3, 1, 9), (8, 3, 1, 1, 2), (64, 9, 3, 1, 16), (9, 4, 1, 1, 2)]
)
def test_generic_bound_examples(q, delta, mu, nu, expected):
    assert generic_id_lower_bound(q, delta, mu, nu) == expected


def test_generic_bound_errors():
    with pytest.raises(ScopeError):
        generic_id_lower_bound(8, 0, 1, 1)
    with pytest.raises(ScopeError):
        generic_id_lower_bound(8, 3, 1, 6)
    with pytest.raises(ScopeError):
        generic_id_lower_bound(8, 3, 0, 1)


@pytest.mark.parametrize("dims", [(2, 2), (2, 3), (3, 3), (2, 2, 2), (2, 4)])
def test_id_lower_bound_is_valid(dims):
    assert id_lower_bound(Radices(dims)) <= oracles.min_identifying(dims)


@pytest.mark.parametrize("dims,expected", [((3, 3, 3), 9), ((4, 4, 4), 16), ((6, 6, 3), 22)])
def test_gid_lower_bound_examples(dims, expected):
    assert gid_lower_bound(Radices(dims)) == expected


def test_gid_lower_bound_scope():
    with pytest.raises(ScopeError):
        gid_lower_bound(Radices((3, 3)))
    with pytest.raises(ScopeError):
        gid_lower_bound(Radices((3, 2, 3)))


@pytest.mark.parametrize("m,n,expected", [(3, 3, (9, 9)), (4, 3, (16, 16)), (3, 4, (23, 27))])
def test_gid_bounds_examples(m, n, expected):
    # (3, 4): ceil(3 * 81 / (4 * 2 + 3)) = ceil(243 / 11) = 23
    assert gid_bounds(m, n) == expected


def test_gid_bounds_tight_for_length_three():
    for m in range(3, 12):
        assert gid_bounds(m, 3) == (m * m, m * m)


def test_gid_bounds_ordered():
    for n in range(3, 7):
        for m in range(3, 10):
            lower, upper = gid_bounds(m, n)
            assert lower <= upper
            assert lower == gid_lower_bound(Radices.uniform(m, n))


def test_gid_bounds_scope():
    with pytest.raises(ScopeError):
        gid_bounds(2, 3)
    with pytest.raises(ScopeError):
        gid_bounds(3, 2)


# -- kappa -------------------------------------------------------------------------

@pytest.mark.parametrize(
    "n,p,expected", [(3, 3, 2), (3, 2, 2), (4, 3, 3), (11, 3, 10), (12, 3, 10), (2, 5, 2), (2, 2, 2), (3, 5, 2)]
)
def test_kappa_examples(n, p, expected):
    assert kappa(n, p) == expected


def _kappa_by_definition(n, p):
    # the r with 3(p^r - 1)/(p - 1) <= n < 3(p^(r+1) - 1)/(p - 1), by walking r upward
    r = 1
    while 3 * (p ** (r + 1) - 1) // (p - 1) <= n:
        r += 1
    return n - r


@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_kappa_intervals(p):
    for n in range(3, 400):
        assert kappa(n, p) == _kappa_by_definition(n, p)


def test_kappa_boundaries_binary():
    # interval starts for p = 2 are 3, 9, 21, 45
    assert [kappa(n, 2) for n in (8, 9, 20, 21, 44, 45)] == [7, 7, 18, 18, 41, 41]


def test_kappa_errors():
    with pytest.raises(ScopeError):
        kappa(1, 3)
    with pytest.raises(IdCodesError):
        kappa(3, 4)


@pytest.mark.parametrize("n,p,expected", [(3, 3, 2), (4, 3, 3), (3, 2, 2)])
def test_kappa_lower_bound_examples(n, p, expected):
    assert kappa_lower_bound(n, p) == expected


def test_kappa_lower_bound_below_kappa():
    for p in (2, 3, 5):
        for n in range(3, 21):
            k = kappa_lower_bound(n, p)
            assert k <= kappa(n, p)
            # exactness: k is the smallest exponent clearing the ratio
            den = n * (p - 1) + 3
            assert p**k * den >= 3 * p**n
            assert k == 0 or p ** (k - 1) * den < 3 * p**n


def test_kappa_lower_bound_scope():
    with pytest.raises(ScopeError):
        kappa_lower_bound(2, 3)


@pytest.mark.parametrize("n,p", [(3, 3), (11, 3), (2, 5)])
def test_monotonicity_examples(n, p):
    assert kappa_monotonicity_check(n, p)


def test_monotonicity_everywhere():
    for p in (2, 3, 5, 7, 11):
        assert all(kappa_monotonicity_check(n, p) for n in range(2, 300))
