import pytest
from hypothesis import given, strategies as st

from linclob.core import (
    BLACK, WHITE, EmptyPosition, Game, IllegalMove, Move, ParseError,
    add, alternating, apply_move, canonical, expand_shorthand, flip,
    format_game, is_monochromatic, legal_moves, negate, opponent,
    parse_position, part_token, successors,
)

parts = st.text(alphabet="ox", min_size=1, max_size=8)
games = st.lists(parts, min_size=0, max_size=4).map(Game.of)


def test_constants_and_flip():
    assert opponent(BLACK) == WHITE and opponent(WHITE) == BLACK
    assert flip("oxxo") == "xoox"
    assert flip(flip("oxxoxo")) == "oxxoxo"


def test_canonical_picks_lex_min_of_reversal():
    assert canonical("xxo") == "oxx"
    assert canonical("oxx") == "oxx"
    assert canonical("ooxo") == "ooxo"
    assert canonical("oxoo") == "ooxo"


@given(parts)
def test_canonical_is_idempotent_and_orientation_free(s):
    assert canonical(canonical(s)) == canonical(s)
    assert canonical(s[::-1]) == canonical(s)


def test_game_of_drops_monochromatic_and_sorts():
    g = Game.of(["xo", "ooo", "", "x", "oxx"])
    assert g.parts == ("ox", "oxx")
    assert g.stones() == 5
    assert bool(g)
    assert not Game.of(["oooo"])


@given(games)
def test_negate_is_an_involution(g):
    assert negate(negate(g)) == g


def test_add_merges_multisets():
    g = add(Game.of(["ox"]), Game.of(["ox", "oxx"]))
    assert g.parts == ("ox", "ox", "oxx")


def test_legal_moves_alternating_start():
    g = Game.of(["oxox"])
    black = legal_moves(g, BLACK)
    white = legal_moves(g, WHITE)
    assert len(black) == 3 and len(white) == 3
    # deterministic (part, from, to) order
    assert [(m.from_index, m.to_index) for m in black] == [(2, 1), (2, 3), (4, 3)]


def test_apply_move_splits_at_vacated_cell():
    g = Game.of(["oxoxo"])
    # x at cell 2 clobbers o at cell 1; the lone "x" piece is dropped
    assert apply_move(g, Move(0, 2, 1)).parts == ("oxo",)
    # x at cell 4 of oxox clobbers o at 3: left piece "oxx" survives
    assert apply_move(Game.of(["oxox"]), Move(0, 4, 3)).parts == ("oxx",)
    # x at cell 2 of oxox clobbers o at 3: both pieces ("o", "xx") vanish
    assert apply_move(Game.of(["oxox"]), Move(0, 2, 3)).parts == ()


def test_apply_move_rejects_illegal():
    with pytest.raises(IllegalMove):
        apply_move(Game.of(["oox"]), Move(0, 1, 2))  # same-color neighbors
    with pytest.raises(IllegalMove):
        apply_move(Game.of(["oxox"]), Move(0, 2, 4))  # not adjacent
    with pytest.raises(IllegalMove):
        apply_move(Game.of(["oxox"]), Move(3, 1, 2))  # no such part


@given(games.filter(lambda g: g.parts))
def test_moves_reduce_stone_count(g):
    # one stone is captured; monochromatic pieces may drop out as well
    for player in (BLACK, WHITE):
        for m in legal_moves(g, player):
            assert apply_move(g, m).stones() <= g.stones() - 1


@given(games)
def test_successors_are_deduplicated(g):
    for player in (BLACK, WHITE):
        kids = successors(g, player)
        assert len(kids) == len(set(kids))


def test_expand_shorthand_families():
    assert expand_shorthand("a6") == "oxoxox"
    assert expand_shorthand("o5") == "oxoxo"
    assert expand_shorthand("x5") == "xoxox"
    assert expand_shorthand("oo6") == "ooxoxo"
    assert expand_shorthand("xx4") == "xxox"
    assert expand_shorthand("oo5oo") == "ooxoo"
    assert expand_shorthand("oo6xx") == "ooxoxx"
    assert expand_shorthand("xxo") == "xxo"
    assert expand_shorthand("oox") == "oox"


def test_expand_shorthand_rejects_bad_parity():
    for bad in ("a5", "o4", "oo0", "a0", "q3", "oo4oo", "oo5xx"):
        with pytest.raises(ParseError):
            expand_shorthand(bad)


def test_parse_position_both_notations():
    assert parse_position("oxox").parts == ("oxox",)
    assert parse_position("ox-xo").parts == ("ox", "ox")
    assert parse_position("a4 + a2").parts == ("ox", "oxox")
    assert parse_position("xxo + oo5").parts == ("ooxox", "oxx")
    with pytest.raises(EmptyPosition):
        parse_position("---")
    with pytest.raises(ParseError):
        parse_position("a4 ++ a2")


@given(games.filter(lambda g: g.parts))
def test_stones_format_parse_round_trip(g):
    assert parse_position(format_game(g, "stones")) == g


def test_short_format_parse_round_trip():
    for text in ("a8", "oo7 + a2", "oo9oo + xxo + o5", "xx6 + oox"):
        g = parse_position(text)
        assert parse_position(format_game(g, "short")) == g


def test_format_empty_game():
    assert format_game(Game(()), "short") == "0"
    assert format_game(Game(()), "stones") == "-"


def test_part_token_prefers_shortest():
    assert part_token("oxoxox") == "a6"
    assert part_token("ox") == "ox"
    assert part_token("ooxoxo") == "oo6"
    assert part_token("oxx") == "oxx"


def test_alternating_and_monochromatic():
    assert alternating(5, "o") == "oxoxo"
    assert alternating(4, "x") == "xoxo"
    assert is_monochromatic("ooo") and not is_monochromatic("oxo")
