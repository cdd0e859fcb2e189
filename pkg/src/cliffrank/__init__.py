"""Exact graded Clifford algebra with commutator rank-support formulas and a
catalogue of graded Lie subalgebras of the pseudounitary Lie algebra."""

from .config import DEFAULT_LIMITS, BudgetExceeded, DomainError, Limits
from .gaussian import Gaussian
from .algebra import (
    Multivector,
    Signature,
    anticommutator,
    blade_product,
    blade_product_reference,
    commutator,
    conjugation_star,
    geometric_product,
    grade_projection,
    is_group_element,
    is_lie_element,
    support_grades,
)
from .rank_formulas import (
    ANTICOMMUTATOR,
    COMMUTATOR,
    RankTable,
    actual_grades,
    build_table,
    kernel_grades,
    special_case_report,
    theorem_grades,
)
from .subalgebras import (
    GradedSubspace,
    catalog,
    closure_check_bruteforce,
    closure_check_predicted,
    diff_report,
    enumerate_closed,
    paper_listing,
)

__all__ = [
    "ANTICOMMUTATOR",
    "COMMUTATOR",
    "DEFAULT_LIMITS",
    "BudgetExceeded",
    "DomainError",
    "Gaussian",
    "GradedSubspace",
    "Limits",
    "Multivector",
    "RankTable",
    "Signature",
    "actual_grades",
    "anticommutator",
    "blade_product",
    "blade_product_reference",
    "build_table",
    "catalog",
    "closure_check_bruteforce",
    "closure_check_predicted",
    "commutator",
    "conjugation_star",
    "diff_report",
    "enumerate_closed",
    "geometric_product",
    "grade_projection",
    "is_group_element",
    "is_lie_element",
    "kernel_grades",
    "paper_listing",
    "special_case_report",
    "support_grades",
    "theorem_grades",
]
