"""Reduced Squier complexes of group presentations and their crossed modules."""

from .crossedmod import CrossedGenerator, CrossedWord, FreeCrossedModule, check_axioms, cm_action, phi, phi_inverse
from .freegroup import IDENTITY, FreeGroup, Word, WordError, format_word, invert, multiply, parse_word, reduce
from .presentation import (
    CosetLabeler,
    GroupOracle,
    OracleError,
    OracleKind,
    Presentation,
    PresentationError,
    Relation,
    parse_presentation,
    rhat,
    validate_oracle,
)
from .squier import ComplexFragment, Edge, EdgePath, PathError, SignedEdge, SquierComplex, TwoCell
from .starone import (
    ExchangeError,
    GroupRingVector,
    LambdaGenerator,
    LambdaWord,
    NotAnIdentity,
    StarOne,
    Verdict,
    parse_lambda_word,
)

__version__ = "0.1.0"
