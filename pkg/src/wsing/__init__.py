"""Exact weight data, invariant generators and bi-Lipschitz verdicts for
weighted homogeneous complex surface singularities."""
from .classify import (
    CompareKind,
    ConicalKind,
    Mechanism,
    compare_weights,
    conical_cyclic,
    conical_from_weights,
    corollary_report,
)
from .cyclic_quotient import (
    covering_data,
    diagonal_weights,
    invariant_monomials,
    lowest_generator,
    make_cyclic,
    minimal_generators,
    separating_action,
)
from .errors import HomogeneousInput, InvalidCyclic, InvalidTriple, InvalidWeights
from .link_topology import LinkComparison, same_link, seifert_data
from .weights import (
    brieskorn_weights,
    extreme_ratios,
    from_list,
    is_homogeneous,
    make_triple,
    normalize,
    two_lowest,
)

__version__ = "0.1.0"
