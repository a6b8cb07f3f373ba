"""Exact probabilistic many-valued logic of two-unit composite devices."""
from .admissible import (
    AdmissibleMatrix,
    apply,
    as_dense,
    compose,
    count_selectors,
    enumerate_selectors,
    identity,
    make_admissible,
)
from .audit import AuditReport, Verdict
from .composite import (
    BipartiteShape,
    PqcForm,
    context,
    context_family,
    decompose,
    from_pqc,
    is_decomposable,
    marginal_first,
    marginal_second,
    nearest_product_distance,
    tensor,
    to_pqc,
)
from .connectives import (
    ConnectiveSpec,
    and2,
    apply_connective,
    conjunction4,
    disjunction4,
    meet_join_selectors,
    negation4,
    not2,
    or2,
)
from .prob_core import ExactScalar, Proposition, distance, make_proposition, uniform

__version__ = "0.1.0"
