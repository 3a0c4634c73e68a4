"""Deciders and classifiers for trivial central units of integral group rings."""

from .classify import (
    CASE3_ROWS,
    Case3Row,
    CatalogEntry,
    HeightVerdict,
    central_height,
    classify_cut_metacyclic,
    enumerate_metacyclic,
    is_qstar,
    theorem7_catalog,
    verify_case3_tables,
)
from .cut import (
    CutVerdict,
    is_camina,
    is_camina_pair,
    is_cut_2group,
    is_cut_3group,
    is_cut_ritter_sehgal,
    is_nonabelian_camina,
    pi_condition,
)
from .cyclo import (
    CenterClass,
    CenterKind,
    CyclotomicInteger,
    ResidueSubgroup,
    classify_fixed_field,
    component_center,
    cyclotomic_polynomial,
    euler_phi,
    is_cut_wedderburn,
    moebius,
    multiplicative_order,
    period_minimal_polynomial,
    squarefree_part,
    unit_group_info,
)
from .groups import (
    ConjugacyTable,
    FiniteGroup,
    MetacyclicPresentation,
    Quotient,
    Subgroup,
    all_subgroups,
    build_from_table,
    center,
    centralizer,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    element_order,
    exponent,
    format_cayley_table,
    generated_subgroup,
    is_isomorphic,
    lower_central_series,
    make_abelian,
    make_metacyclic,
    normalizer,
    parse_cayley_table,
    quotient,
    subgroup_from_members,
    trivial_subgroup,
    upper_central_series,
)
from .shoda import (
    GroupAlgebraElement,
    SSPSearch,
    StrongShodaPair,
    build_strong_shoda_pair,
    conjugate_by,
    e_idempotent,
    epsilon,
    find_strong_shoda_pairs,
    hat,
    is_strong_shoda_pair,
    metacyclic_ssp,
    multiply,
)

__version__ = "0.1.0"
