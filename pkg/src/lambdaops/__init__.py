"""Exact symbolic kernel for the algebra of lambda operations: universal
polynomials, the truncated generator biring, integer-function birings,
their completed tensor with composition, the looping operator, and
finite-rank models serving as action oracles."""

from .intpoly import IntPoly
from .symfun import (
    elementary_expand,
    lambda_of_integer,
    left_linearise,
    newton_psi,
    universal_pij,
    universal_pk,
)
from .kbu import KBUElem, antipode, coadd, colinear, compose_kbu, comult, cozero, gen
from .setzz import (
    COIFamily,
    FnZZ,
    Window,
    chi,
    coi_add,
    coi_mul,
    const,
    fn_coadd,
    fn_compose,
    fn_comult,
    fn_counit,
    fn_cozero,
    fn_window_normalise,
)
from .evenops import EvenOp, act, compose_even, identity_op, op_coadd, op_comult
from .loopgrade import (
    GradedOp,
    OddOp,
    augmentation_view,
    check_looping_axioms,
    compose_odd,
    lgen,
    loop_even,
    loop_odd,
    main_relations_check,
)
from .models import register_models

__all__ = [
    "IntPoly",
    "KBUElem",
    "EvenOp",
    "OddOp",
    "GradedOp",
    "COIFamily",
    "FnZZ",
    "Window",
    "universal_pk",
    "universal_pij",
    "newton_psi",
    "left_linearise",
    "elementary_expand",
    "lambda_of_integer",
    "gen",
    "coadd",
    "comult",
    "cozero",
    "antipode",
    "colinear",
    "compose_kbu",
    "chi",
    "const",
    "fn_compose",
    "fn_coadd",
    "fn_comult",
    "fn_counit",
    "fn_cozero",
    "fn_window_normalise",
    "coi_add",
    "coi_mul",
    "identity_op",
    "act",
    "compose_even",
    "op_coadd",
    "op_comult",
    "lgen",
    "loop_even",
    "loop_odd",
    "compose_odd",
    "check_looping_axioms",
    "main_relations_check",
    "augmentation_view",
    "register_models",
]

__version__ = "0.1.0"
