"""Standard-form rewriter: preference-ordered part rewrites to a fixpoint.

Each rule replaces one part (or cancels a part/negative pair) with an
equivalent multiset of smaller parts.  Every application strictly decreases
the sum of squared part sizes, so iteration terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import Game, canonical, flip


@dataclass(frozen=True)
class RewriteRule:
    name: str
    # Canonical part strings matched literally; None for the pair-cancel rule.
    lhs: frozenset[str] | None
    rhs: tuple[str, ...]


def _rule(name: str, lhs: list[str], rhs: list[str]) -> RewriteRule:
    return RewriteRule(name, frozenset(canonical(p) for p in lhs),
                       tuple(canonical(p) for p in rhs))


def _negative(rule: RewriteRule) -> RewriteRule:
    assert rule.lhs is not None
    return RewriteRule(
        "-" + rule.name,
        frozenset(canonical(flip(p)) for p in rule.lhs),
        tuple(canonical(flip(p)) for p in rule.rhs),
    )


_BETA = RewriteRule("beta", None, ())

_POSITIVE = {
    "alpha": _rule("alpha", ["o", "oo", "ooo", "ooxx", "oxoxox"], []),
    "gamma": _rule("gamma", ["oxo", "ooxox", "ooxoxoo", "xxoxoxx"], ["ox"]),
    "delta": _rule("delta", ["oxoxoxoxo"], ["ooxo"]),
    "epsilon": _rule("epsilon", ["ooxoxx", "oxoxoxoxoxox"], ["oxox", "ox"]),
    "zeta": _rule("zeta", ["ooxoo"], ["oox"]),
    "eta": _rule("eta", ["ooxo"], ["xxo", "ox"]),
}


def rule_table() -> list[RewriteRule]:
    """All rules in preference order: alpha, -alpha, beta, -beta, ..., eta, -eta."""
    rules = [_POSITIVE["alpha"], _negative(_POSITIVE["alpha"]),
             _BETA, RewriteRule("-beta", None, ())]
    for name in ("gamma", "delta", "epsilon", "zeta", "eta"):
        rules.append(_POSITIVE[name])
        rules.append(_negative(_POSITIVE[name]))
    return rules


_RULES = rule_table()


def potential(g: Game) -> int:
    """Termination measure: sum of squared part sizes."""
    return sum(len(p) ** 2 for p in g.parts)


def _beta_match(parts: tuple[str, ...]) -> Game | None:
    """Cancel the smallest part whose negative (up to reversal) is also present."""
    for i, p in enumerate(parts):
        partner = canonical(flip(p))
        for j, q in enumerate(parts):
            if j != i and q == partner:
                rest = [r for k, r in enumerate(parts) if k not in (i, j)]
                return Game(tuple(rest))
    return None


def apply_once(g: Game) -> tuple[RewriteRule, Game] | None:
    """Apply the highest-preference matching rule once, or None at a fixpoint.

    Ties among matching parts go to the smallest canonical part key (the
    parts tuple is sorted, so the first match wins).
    """
    for rule in _RULES:
        if rule.lhs is None:
            hit = _beta_match(g.parts)
            if hit is not None:
                return rule, hit
            continue
        for i, p in enumerate(g.parts):
            if p in rule.lhs:
                rest = list(g.parts[:i]) + list(g.parts[i + 1:])
                return rule, Game.of(rest + list(rule.rhs))
    return None


def normalize(g: Game) -> Game:
    """Iterate apply_once to the fixpoint; result is equivalent to g."""
    while True:
        step = apply_once(g)
        if step is None:
            return g
        g = step[1]


def normalize_trace(g: Game) -> tuple[Game, list[tuple[str, Game]]]:
    """Like normalize, but also returns the (rule name, game) step list."""
    trace: list[tuple[str, Game]] = []
    while True:
        step = apply_once(g)
        if step is None:
            return g, trace
        rule, g = step
        trace.append((rule.name, g))
