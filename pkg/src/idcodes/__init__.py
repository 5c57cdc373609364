"""Identifying, group identifying and linear identifying codes in Hamming graphs."""

from .algebra import (
    FpMatrix,
    Subgroup,
    closure,
    codewords_from_generator,
    coset_jset_shift,
    cosets,
    enumerate_subgroups,
    enumerate_subspaces,
    generator_to_parity_check,
    is_group_identifying,
    is_linear_code,
    is_subgroup,
    rref,
    syndrome,
)
from .codesets import (
    Code,
    JSet,
    check_min_distance2_sufficiency,
    check_two_direction_sufficiency,
    is_dominating,
    is_identifying,
    is_self_identifying,
    is_self_locating_dominating,
    is_separating,
    is_twin_free,
    j_set,
    min_pairwise_distance,
    translate_code,
)
from .constructions import (
    direct_sum_extend,
    generic_id_lower_bound,
    gid_bounds,
    gid_lower_bound,
    kappa,
    kappa_lower_bound,
    kappa_monotonicity_check,
    no_isolated_codewords,
    sum_code,
)
from .errors import CapExceededError, FormatError, IdCodesError, RadicesMismatchError, ScopeError
from .formats import parse_code_file, write_code_file
from .hamming import (
    Radices,
    Vertex,
    add,
    closed_neighborhood,
    hamming_distance,
    hamming_weight,
    index_vertex,
    neg,
    neighborhood_intersection_size,
    sub,
    unit_vector,
    vertex_index,
)
from .search import (
    SearchReport,
    min_group_identifying_code,
    min_identifying_code,
    min_linear_identifying_code,
    proper_gid_existence,
)

__version__ = "0.1.0"
