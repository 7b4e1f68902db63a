"""Büchi game solvers with edge-examination accounting."""

from .alternative import solve_alternative, solve_dovetail
from .attractor import AttractorResult, PreconditionError, attract, is_closed
from .classical import avoid_set_classical, solve_classical
from .generators import (GenSpec, gen_gadget_chain, gen_gadget_chain_cycles,
                         gen_planted_trap, gen_random_bounded, generate)
from .graph import (PLAYER1, PLAYER2, GameGraph, ParseError, StateSet,
                    SubgameView, parse_game, serialize_game, validate_subgame)
from .improved import solve_improved
from .kernels import BACKEND
from .oracle import OracleCapExceeded, oracle_solve
from .results import InvariantViolation, SolveResult, WorkMetrics
from .strategy import (MemorylessStrategy, extract_strategies, simulate_play,
                       verify_player1, verify_player2)

SOLVERS = {
    "classical": solve_classical,
    "alternative": solve_alternative,
    "improved": solve_improved,
    "dovetail": solve_dovetail,
}

__version__ = "0.1.0"

__all__ = [
    "AttractorResult", "BACKEND", "GameGraph", "GenSpec", "InvariantViolation",
    "MemorylessStrategy", "OracleCapExceeded", "PLAYER1", "PLAYER2", "ParseError",
    "PreconditionError", "SOLVERS", "SolveResult", "StateSet", "SubgameView",
    "WorkMetrics", "attract", "avoid_set_classical", "extract_strategies",
    "gen_gadget_chain", "gen_gadget_chain_cycles", "gen_planted_trap",
    "gen_random_bounded", "generate", "is_closed", "oracle_solve", "parse_game",
    "serialize_game", "simulate_play", "solve_alternative", "solve_classical",
    "solve_dovetail", "solve_improved", "validate_subgame", "verify_player1",
    "verify_player2",
]
