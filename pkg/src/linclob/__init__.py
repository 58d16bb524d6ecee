"""Linear clobber: engine, standard-form rewriter, strategy, and verifier."""

from .core import (
    BLACK, WHITE, EmptyPosition, Game, IllegalMove, Move, ParseError,
    add, alternating, apply_move, canonical, expand_shorthand, flip,
    format_game, legal_moves, negate, opponent, parse_position, successors,
)
from .asf import normalize, normalize_trace, potential, rule_table
from .oracle import (
    DEFAULT_MAX_STONES, BudgetExceeded, OutcomeClass, SolveCache,
    equivalent, outcome, wins_moving_first,
)
from .taxonomy import (
    NotInK, SClass, classify_part, count_vector, enumerate_s_games,
    in_K, in_LL, in_Q, in_S0, in_U, in_left_target, in_shape, k_parts,
    part_slot, s_class,
)
from .strategy import (
    NotInScope, Ruleset, StrategyGap, StrategyMove, choose_left_move,
    improved_override, rule_rows_unique,
)
from .verifier import (
    TheoremReport, VerifyStats, check_asf_soundness, check_theorem_left,
    check_theorem_right, check_u_closure, verify_game, verify_start,
)

__version__ = "0.1.0"
