import pytest

import oracles
from idcodes import (
    Radices,
    closure,
    SearchReport,
    enumerate_subspaces,
    gid_lower_bound,
    is_group_identifying,
    is_identifying,
    is_linear_code,
    kappa,
    min_group_identifying_code,
    min_identifying_code,
    min_linear_identifying_code,
    proper_gid_existence,
)
from idcodes.errors import CapExceededError, IdCodesError, ScopeError
from idcodes.search import failure_reasons, identifying_codes

# every twin-free radix vector (up to coordinate order) with at most 12 vertices
SMALL = [(2, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 3), (3, 4), (2, 2, 2), (2, 2, 3)]


def _check_report(report: SearchReport, predicate):
    assert report.witness is not None
    assert report.optimum == len(report.witness)
    assert predicate(report.witness)
    assert report.optimum >= report.bound_used


# -- identifying codes -------------------------------------------------------------

@pytest.mark.parametrize("dims", [(2, 2), (2, 3)])
def test_min_identifying_examples(dims):
    expected = {(2, 2): 3, (2, 3): 4}[dims]
    assert min_identifying_code(Radices(dims)).optimum == expected


def test_min_identifying_three_by_three():
    # exhaustive over all 512 subsets: no 3-set identifies K_3 x K_3, this 4-set does
    report = min_identifying_code(Radices((3, 3)))
    assert report.optimum == 4
    assert {v.coords for v in report.witness} == {(0, 0), (0, 1), (1, 0), (1, 2)}


@pytest.mark.parametrize("dims", SMALL)
def test_min_identifying_matches_oracle(dims):
    report = min_identifying_code(Radices(dims))
    _check_report(report, is_identifying)
    assert report.optimum == oracles.min_identifying(dims)


@pytest.mark.parametrize("dims", SMALL)
def test_symmetry_reduction_keeps_optimum(dims):
    r = Radices(dims)
    with_sym = min_identifying_code(r)
    without = min_identifying_code(r, symmetry=False)
    assert with_sym.optimum == without.optimum
    assert without.explored >= with_sym.explored


def test_witness_contains_zero_and_is_deterministic():
    r = Radices((2, 2, 3))
    a = min_identifying_code(r)
    b = min_identifying_code(r)
    assert a.witness == b.witness and a.explored == b.explored
    assert a.witness.has_index(0)


def test_first_witness_is_canonically_least():
    r = Radices((2, 3))
    report = min_identifying_code(r, symmetry=False)
    first = next(c for c in identifying_codes(r, report.optimum) if len(c) == report.optimum)
    assert report.witness == first


def test_min_identifying_errors():
    with pytest.raises(ScopeError):
        min_identifying_code(Radices((4,)))
    with pytest.raises(CapExceededError):
        min_identifying_code(Radices((7, 7)))
    with pytest.raises(CapExceededError):
        min_identifying_code(Radices((3, 3)), cap=8)


def test_identifying_codes_yields_only_identifying():
    r = Radices((3, 3))
    codes = list(identifying_codes(r, 6))
    assert codes
    assert all(is_identifying(c) for c in codes)
    assert [len(c) for c in codes] == sorted(len(c) for c in codes)
    assert min(len(c) for c in codes) == 4


# -- group identifying codes ---------------------------------------------------------

@pytest.mark.parametrize(
    "dims,expected", [((3, 3, 3), 9), ((2, 2, 2), 4), ((2, 3), 6), ((4, 2), 8), ((4, 4), 8)]
)
def test_min_group_identifying_examples(dims, expected):
    report = min_group_identifying_code(Radices(dims))
    _check_report(report, is_group_identifying)
    assert report.optimum == expected


def test_group_witness_is_a_plane():
    report = min_group_identifying_code(Radices((3, 3, 3)))
    assert is_linear_code(report.witness)
    assert len(report.witness) == 9


@pytest.mark.parametrize("dims", SMALL)
def test_group_optimum_at_least_identifying_optimum(dims):
    r = Radices(dims)
    assert min_group_identifying_code(r).optimum >= min_identifying_code(r).optimum


@pytest.mark.parametrize("dims", [(3, 3, 3), (4, 4, 3), (3, 3, 3, 3)])
def test_group_optimum_respects_group_bound(dims):
    r = Radices(dims)
    assert min_group_identifying_code(r).optimum >= gid_lower_bound(r)


def test_group_search_without_identifying_subgroup():
    report = min_group_identifying_code(Radices((5,)))
    assert report.optimum is None and report.witness is None


def test_group_search_cap():
    with pytest.raises(CapExceededError):
        min_group_identifying_code(Radices((3, 3, 3)), cap=20)


# -- linear identifying codes --------------------------------------------------------

@pytest.mark.parametrize(
    "p,n,size,dim", [(3, 3, 9, 2), (2, 3, 4, 2), (3, 4, 27, 3), (2, 4, 8, 3), (5, 3, 25, 2), (2, 2, 4, 2)]
)
def test_min_linear_examples(p, n, size, dim):
    report = min_linear_identifying_code(p, n)
    _check_report(report, is_identifying)
    assert is_linear_code(report.witness)
    assert (report.optimum, report.dimension) == (size, dim)
    assert report.dimension == report.kappa_formula == kappa(n, p)


def test_no_plane_identifies_f3_4():
    from idcodes import codewords_from_generator

    planes = enumerate_subspaces(3, 4, 2)
    assert len(planes) == 130
    assert not any(is_identifying(codewords_from_generator(g)) for g in planes)


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (3, 2), (3, 3), (2, 5)])
def test_linear_optimum_at_least_identifying_optimum(p, n):
    r = Radices.uniform(p, n)
    lid = min_linear_identifying_code(p, n).optimum
    assert lid >= min_group_identifying_code(r).optimum
    if r.order <= 16:
        assert lid >= min_identifying_code(r).optimum


def test_linear_generator_spans_witness():
    from idcodes import codewords_from_generator

    report = min_linear_identifying_code(3, 3)
    assert codewords_from_generator(report.generator) == report.witness


def test_linear_search_errors():
    with pytest.raises(IdCodesError):
        min_linear_identifying_code(4, 3)
    with pytest.raises(CapExceededError):
        min_linear_identifying_code(3, 9)


# -- proper group identifying codes ------------------------------------------------

@pytest.mark.parametrize("dims", [(2, 3), (3, 4), (2, 5), (4, 2), (3, 2)])
def test_no_proper_group_identifying_code(dims):
    report = proper_gid_existence(Radices(dims))
    assert not report.exists and report.witness is None
    assert report.failures
    for h, reasons in report.failures:
        assert reasons == failure_reasons(h.code)
        assert reasons


def test_proper_group_identifying_code_in_z4_z4(even_sum):
    report = proper_gid_existence(Radices((4, 4)))
    assert report.exists
    assert len(report.witness) == 8
    assert report.witness.code == even_sum


def test_failure_reasons_for_row_subgroup():
    # both proper subgroups of Z_3 x Z_2 dominate K_3 x K_2 but leave twins
    r = Radices((3, 2))
    report = proper_gid_existence(r)
    by_size = {len(h): reasons for h, reasons in report.failures}
    assert by_size == {2: ("not separating",), 3: ("not separating",)}


def test_failure_reasons_include_domination():
    # <(1,1,1)> in K_3^3: (0,1,2) is at distance 2 from all three codewords
    r = Radices((3, 3, 3))
    diag = closure(r, [(1, 1, 1)])
    assert "not dominating" in failure_reasons(diag.code)
    report = proper_gid_existence(r)
    assert report.exists
    assert any(h.code == diag.code and "not dominating" in why for h, why in report.failures)
