"""reslab: exact symbolic-power containment experiments on point configurations."""

from .algebra import (
    FieldSpec,
    Polynomial,
    RingContext,
    TermOrder,
    find_root_of_unity,
    monomial_compare,
)
from .config import EngineConfig
from .errors import (
    ContextMismatchError,
    NoRootOfUnityError,
    NonHomogeneousError,
    ParseError,
    PreconditionError,
    ReslabError,
    ResourceLimitError,
    ZeroPolynomialError,
)
from .groebner import (
    GroebnerBasis,
    Ideal,
    buchberger,
    colon,
    eliminate,
    graded_membership,
    hilbert_function,
    ideal_equal,
    ideal_membership,
    intersect,
    normal_form,
    s_polynomial,
    saturate,
    verify_spair_reduction,
)

__version__ = "0.1.0"
