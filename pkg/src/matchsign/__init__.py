"""Exact perfect-matching generating functions, Pfaffians and Kasteleyn signs.

Drawings of a graph are represented by crossing profiles. The package
computes plain and signed matching sums, replays local moves of a drawing
with their weight-sign bookkeeping, and solves for the sign changes of edge
weights that carry one drawing's signed sum to another's.
"""

from .embedding import (
    CrossingProfile,
    disjoint_parity,
    stembridge_profile,
    zero_profile,
)
from .engine import (
    SkewMatrix,
    crossing_number,
    determinant,
    matching_sign,
    matching_sum,
    matching_weight,
    pfaffian_expand,
    pfaffian_of_graph,
    signed_sum,
    skew_from_graph,
)
from .errors import (
    GraphError,
    MatchsignError,
    MoveError,
    NoSolution,
    NotSimpleGraph,
    ScriptError,
    TooManyMatchings,
    VerificationFailed,
)
from .graph import (
    Edge,
    Graph,
    enumerate_perfect_matchings,
    is_perfect_matching,
    symbolic_weights,
    unit_weights,
    validate_graph,
)
from .kernels import BACKEND
from .moves import (
    AdjacentCross,
    DoubleCross,
    Ledger,
    SelfCross,
    SignModification,
    VertexTransition,
    apply_move,
    apply_script,
    ledger_to_modification,
)
from .ring import Poly, evaluate, parse, var
from .solver import GF2System, build_system, equalize, kasteleyn_weights, solve_gf2

__version__ = "0.1.0"
