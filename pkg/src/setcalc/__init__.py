"""setcalc: an exact set-algebra identity engine.

Set expressions over named sets are translated into multilinear integer
polynomials in membership variables; identity, conditional identity, and
equation-solving questions are decided exactly from the normal forms and
cross-checked against full pattern enumeration, with concrete finite
counterexample models produced on failure.
"""

from .concrete import (
    ConcreteSet,
    TupleSet,
    Universe,
    Verdict,
    Witness,
    eval_expr,
    metric,
    powerset,
    random_model_check,
    witness_from_pattern,
)
from .decider import (
    SolutionTable,
    check_conditional,
    check_identity,
    enumerate_patterns,
    solve,
    statement_variables,
    truth_value,
)
from .errors import (
    ArityError,
    CodomainUnspecifiedError,
    CoefficientOverflowError,
    IncompleteTableError,
    LimitError,
    MissingVarError,
    NotACounterexampleError,
    ParseError,
    SetCalcError,
    UnboundAtomError,
    UniverseMismatchError,
)
from .expr import (
    Atom,
    Complement,
    Difference,
    Empty,
    Identity,
    Intersect,
    Product,
    SetExpr,
    SolveRequest,
    SymDiff,
    Union,
    Universal,
    arity,
    atoms,
    parse,
    parse_expr,
    unparse,
    unparse_statement,
)
from .indicator import (
    DEFAULT_GUARD,
    IndicatorPoly,
    Var,
    difference_chain,
    evaluate,
    expr_from_poly,
    format_poly,
    poly_add,
    poly_from_expr,
    poly_from_values,
    poly_mul,
    poly_sub,
    symdiff_closed_form,
    union_closed_form,
    variables_of,
)
from .structures import (
    MapSpec,
    StructureReport,
    check_boolean_ring,
    check_group_symdiff,
    check_isomorphism,
    check_metric_space,
    check_monoid,
    check_nested_pair_bijection,
    find_distinct_equal_union_quadruple,
    intersect_components_map,
    intersect_components_onto,
    map_property_scan,
    symdiff_translation_map,
    union_components_map,
)

__version__ = "0.1.0"
