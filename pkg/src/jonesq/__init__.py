"""Exact link invariants: Kauffman bracket, Jones polynomial and U_q(sl2) tangle evaluation."""

__version__ = "0.1.0"

from .catalog import builtin, builtin_names
from .functor import EvalConfig, eval_directed, eval_undirected, identity_suite, tangle_morphism
from .halftwist import half_twist, kr_factorization_check, verify_ribbon_square
from .laurent import DELTA, ONE, Q, ZERO, GaussianInt, LaurentQ, ParseError, parse, quantum_integer, to_string
from .qrep import braiding, dual_rep, duality_iso, rep, ribbon_data, structure_maps
from .report import InvariantReport, build_report
from .skein import jones, kauffman_bracket
from .tangle import (
    DiagramError,
    DiagramParseError,
    MoveError,
    Orientation,
    Piece,
    SlicedDiagram,
    apply_move,
    components,
    compose,
    crossing_signs,
    diagram,
    mirror,
    parse_diagram,
    random_diagram,
    reverse,
    tensor,
    validate,
    writhe,
)

__all__ = [
    "__version__",
    "builtin", "builtin_names",
    "EvalConfig", "eval_directed", "eval_undirected", "identity_suite", "tangle_morphism",
    "half_twist", "kr_factorization_check", "verify_ribbon_square",
    "DELTA", "ONE", "Q", "ZERO", "GaussianInt", "LaurentQ", "ParseError", "parse", "quantum_integer", "to_string",
    "braiding", "dual_rep", "duality_iso", "rep", "ribbon_data", "structure_maps",
    "InvariantReport", "build_report",
    "jones", "kauffman_bracket",
    "DiagramError", "DiagramParseError", "MoveError", "Orientation", "Piece", "SlicedDiagram",
    "apply_move", "components", "compose", "crossing_signs", "diagram", "mirror", "parse_diagram",
    "random_diagram", "reverse", "tensor", "validate", "writhe",
]
