"""Exact memoized solver: outcome classes and game equivalence.

This is the ground truth for everything else in the package.  It is a plain
minimax over whole positions (no sum decomposition, no game values), so it
stays independent of the rewrite system and strategy it is used to check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import BLACK, WHITE, Game, add, apply_move, legal_moves, negate, opponent

DEFAULT_MAX_STONES = 26


class BudgetExceeded(RuntimeError):
    """Position is larger than the configured solving budget."""


class OutcomeClass(Enum):
    P = "P"  # previous player wins (first mover loses)
    N = "N"  # next player (first mover) wins
    L = "L"  # Left wins regardless
    R = "R"  # Right wins regardless


@dataclass
class SolveCache:
    """Memo table mapping (game key, player to move) -> mover wins.

    `order` is "counted" (the deterministic game-core move order) or "fast"
    (children sorted smallest first; same answers, usually fewer nodes).
    """

    max_stones: int = DEFAULT_MAX_STONES
    order: str = "counted"
    table: dict[tuple[tuple[str, ...], str], bool] = field(default_factory=dict)


def wins_moving_first(g: Game, player: str, cache: SolveCache) -> bool:
    """True iff `player`, moving first on g, has a winning strategy."""
    if g.stones() > cache.max_stones:
        raise BudgetExceeded(
            f"{g.stones()} stones exceeds budget of {cache.max_stones}"
        )
    return _solve(g.parts, player, cache)


def _solve(parts: tuple[str, ...], player: str, cache: SolveCache) -> bool:
    key = (parts, player)
    hit = cache.table.get(key)
    if hit is not None:
        return hit
    children = _children(parts, player)
    if cache.order == "fast":
        children.sort(key=lambda c: (sum(len(p) for p in c), c))
    opp = opponent(player)
    result = False
    for child in children:
        if not _solve(child, opp, cache):
            result = True
            break
    cache.table[key] = result
    return result


def _children(parts: tuple[str, ...], player: str) -> list[tuple[str, ...]]:
    """Distinct successor keys, in deterministic move order."""
    g = Game(parts)
    seen: set[tuple[str, ...]] = set()
    out: list[tuple[str, ...]] = []
    for m in legal_moves(g, player):
        child = apply_move(g, m).parts
        if child not in seen:
            seen.add(child)
            out.append(child)
    return out


def outcome(g: Game, cache: SolveCache) -> OutcomeClass:
    """Outcome class from the two first-mover solves."""
    left = wins_moving_first(g, BLACK, cache)
    right = wins_moving_first(g, WHITE, cache)
    if left and right:
        return OutcomeClass.N
    if left:
        return OutcomeClass.L
    if right:
        return OutcomeClass.R
    return OutcomeClass.P


def equivalent(g: Game, h: Game, cache: SolveCache) -> bool:
    """g and h are equivalent iff g + (-h) is a P-position."""
    return outcome(add(g, negate(h)), cache) is OutcomeClass.P
