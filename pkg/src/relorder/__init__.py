"""Order-theoretic analysis of finite binary relations."""
from .quotient import (
    ChoiceFunction,
    Partition,
    QuotientRelation,
    derive_choice,
    equivalence_classes,
    pullback_choice,
    quotient_relation,
    representative,
)
from .relation import (
    ElementSet,
    PropertyReport,
    Relation,
    asymmetric_part,
    classify,
    restrict,
    strict_closure_order,
    transitive_closure,
)
from .solutions import (
    gocha_choice,
    is_chain,
    is_undominated,
    maximal_elements,
    minimal_undominated_sets,
    schwartz,
    solve,
    strong_top_cycles,
    top_cycles,
    upper_bounds,
)

__all__ = [
    "ChoiceFunction", "ElementSet", "Partition", "PropertyReport", "QuotientRelation", "Relation",
    "asymmetric_part", "classify", "derive_choice", "equivalence_classes", "gocha_choice",
    "is_chain", "is_undominated", "maximal_elements", "minimal_undominated_sets",
    "pullback_choice", "quotient_relation", "representative", "restrict", "schwartz", "solve",
    "strict_closure_order", "strong_top_cycles", "top_cycles", "transitive_closure", "upper_bounds",
]
