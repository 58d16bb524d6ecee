"""Board representation and move mechanics for linear clobber.

A position is a multiset of *parts* (connected runs of stones on a path).
Black stones print as ``x``, white as ``o``.  Empty cells are never stored:
a clobber move splits its part immediately, and any monochromatic piece is
dropped because it allows no move (it is the zero game).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

BLACK = "x"
WHITE = "o"

class ParseError(ValueError):
    """Input does not match the position grammar."""


class EmptyPosition(ParseError):
    """Position text contains no stones at all."""


class IllegalMove(ValueError):
    """Move is not legal on the given game."""


def opponent(color: str) -> str:
    return WHITE if color == BLACK else BLACK


def flip(stones: str) -> str:
    """Swap the color of every stone."""
    return stones.translate(str.maketrans("ox", "xo"))


def canonical(stones: str) -> str:
    """Canonical orientation: lexicographic min of a string and its reversal."""
    rev = stones[::-1]
    return stones if stones <= rev else rev


def is_monochromatic(stones: str) -> bool:
    return len(set(stones)) < 2


def alternating(n: int, start: str) -> str:
    """Alternating-color path of n stones beginning with `start`."""
    other = opponent(start)
    return "".join(start if i % 2 == 0 else other for i in range(n))


@dataclass(frozen=True, order=True)
class Move:
    """One clobber: the stone at `from_index` takes the stone at `to_index`.

    Indices are 1-based cells within the part at `part_index` (an index
    into the game's sorted part tuple).
    """

    part_index: int
    from_index: int
    to_index: int


@dataclass(frozen=True)
class Game:
    """A multiset of canonically oriented parts, stored sorted.

    Two games are the same position iff their part tuples are equal.
    """

    parts: tuple[str, ...] = ()

    @staticmethod
    def of(parts: Iterable[str]) -> "Game":
        kept = sorted(canonical(p) for p in parts if p and not is_monochromatic(p))
        return Game(tuple(kept))

    def stones(self) -> int:
        return sum(len(p) for p in self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return format_game(self)


def negate(g: Game) -> Game:
    """Color-flip every stone; the negative of the game."""
    return Game.of(flip(p) for p in g.parts)


def add(*games: Game) -> Game:
    """Sum of games: the combined multiset of parts."""
    parts: list[str] = []
    for g in games:
        parts.extend(g.parts)
    return Game.of(parts)


def legal_moves(g: Game, player: str) -> list[Move]:
    """All moves for `player`, in deterministic (part, from, to) order."""
    moves: list[Move] = []
    opp = opponent(player)
    for i, part in enumerate(g.parts):
        for f in range(len(part)):
            if part[f] != player:
                continue
            for t in (f - 1, f + 1):
                if 0 <= t < len(part) and part[t] == opp:
                    moves.append(Move(i, f + 1, t + 1))
    return moves


def apply_move(g: Game, m: Move) -> Game:
    """Apply a clobber; the part splits at the vacated cell."""
    if not (0 <= m.part_index < len(g.parts)):
        raise IllegalMove(f"no part at index {m.part_index}")
    part = g.parts[m.part_index]
    f, t = m.from_index - 1, m.to_index - 1
    if abs(f - t) != 1 or not (0 <= f < len(part)) or not (0 <= t < len(part)):
        raise IllegalMove(f"cells {m.from_index},{m.to_index} not adjacent in part {part}")
    if part[f] == part[t]:
        raise IllegalMove(f"stones at {m.from_index},{m.to_index} have the same color")
    cells = list(part)
    cells[t] = cells[f]
    left = "".join(cells[:f])
    right = "".join(cells[f + 1:])
    rest = list(g.parts[:m.part_index]) + list(g.parts[m.part_index + 1:])
    return Game.of(rest + [left, right])


def successors(g: Game, player: str) -> list[Game]:
    """Distinct positions reachable in one move, in deterministic order."""
    seen: set[tuple[str, ...]] = set()
    out: list[Game] = []
    for m in legal_moves(g, player):
        child = apply_move(g, m)
        if child.parts not in seen:
            seen.add(child.parts)
            out.append(child)
    return out


# ---------------------------------------------------------------------------
# Notation


def expand_shorthand(token: str) -> str:
    """Expand a shorthand token (e.g. ``oo7`` or ``a4``) into a stone string."""
    if token and set(token) <= {"o", "x"}:
        return token  # literal stone string (covers o, oo, xxo, oox, ...)

    m = re.fullmatch(r"a(\d+)", token)
    if m:
        k = int(m.group(1))
        if k < 2 or k % 2:
            raise ParseError(f"token {token!r}: a-parts have even length >= 2")
        return "ox" * (k // 2)

    m = re.fullmatch(r"([ox])(\d+)", token)
    if m:
        color, k = m.group(1), int(m.group(2))
        if k < 1 or k % 2 == 0:
            raise ParseError(f"token {token!r}: single-prefix parts have odd length")
        return alternating(k, color)

    m = re.fullmatch(r"(oo|xx)(\d+)(oo|xx)?", token)
    if m:
        prefix, k, suffix = m.group(1), int(m.group(2)), m.group(3)
        color = prefix[0]
        if suffix is None:
            if k < 3:
                raise ParseError(f"token {token!r}: doubled prefix needs length >= 3")
            return color + alternating(k - 1, color)
        if k < 4:
            raise ParseError(f"token {token!r}: doubled ends need length >= 4")
        body = alternating(k - 2, color)
        if body[-1] != suffix[0]:
            raise ParseError(f"token {token!r}: suffix color does not match parity")
        return color + body + suffix[0]

    raise ParseError(f"unrecognized shorthand token {token!r}")


def part_token(part: str) -> str:
    """Shortest notation for a part: a shorthand token or the raw string."""
    best = part
    for s in (part, part[::-1]):
        for tok in _tokens_for(s):
            if len(tok) < len(best):
                best = tok
    return best


def _tokens_for(s: str) -> Iterator[str]:
    k = len(s)
    lead = len(s) - len(s.lstrip(s[0]))
    tail = len(s) - len(s.rstrip(s[-1]))
    if lead == 1 and tail == 1 and _is_alternating(s):
        yield f"a{k}" if k % 2 == 0 else f"{s[0]}{k}"
    elif lead == 2 and tail == 1 and _is_alternating(s[1:]):
        yield f"{s[0] * 2}{k}"
    elif lead == 2 and tail == 2 and _is_alternating(s[1:-1]):
        yield f"{s[0] * 2}{k}{s[-1] * 2}"


def _is_alternating(s: str) -> bool:
    return all(a != b for a, b in zip(s, s[1:]))


def parse_position(text: str) -> Game:
    """Parse a stone string (``ox-oox``) or a ``+``-separated token list."""
    text = text.strip()
    if not text:
        raise EmptyPosition("empty position")
    if set(text) <= set("ox-"):
        runs = [r for r in text.split("-") if r]
        if not runs:
            raise EmptyPosition(f"no stones in {text!r}")
        return Game.of(runs)
    parts = []
    for token in text.split("+"):
        token = token.strip()
        if not token:
            raise ParseError(f"empty token in {text!r}")
        parts.append(expand_shorthand(token))
    return Game.of(parts)


def format_game(g: Game, style: str = "stones") -> str:
    """Render a game; `style` is ``stones`` or ``short``."""
    if style == "stones":
        return "-".join(g.parts) if g.parts else "-"
    if style == "short":
        return " + ".join(part_token(p) for p in g.parts) if g.parts else "0"
    raise ValueError(f"unknown format style {style!r}")
