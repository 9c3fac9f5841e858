from functools import lru_cache

import pytest
from hypothesis import given, strategies as st

from strangeroot import (
    Board,
    IllegalMove,
    Loss,
    fagan_property,
    move_vector,
    move_vector_by_play,
    move_vector_from_board,
    play_move,
    solve,
    t,
    t_by_scan,
    tchouk,
    tchouk_recursive,
)
from strangeroot.tchoukaillon import iter_tchouk_recursive, t_ratio, t_table_by_scan

FIG1_STATES = [
    (1, 2, 2, 4), (0, 2, 2, 4), (1, 0, 2, 4), (0, 0, 2, 4), (1, 1, 3),
    (0, 1, 3), (1, 2), (0, 2), (1,), (),
]


def test_board_canonical_form():
    b = Board((0, 1, 3, 0, 0))
    assert b.stones == (0, 1, 3)
    assert b.length == 3 and b.final == 3 and b.total == 4
    assert b.hole(1) == 0 and b.hole(7) == 0
    assert Board.parse("(0, 1,3)") == b
    assert Board.parse("") == Board.parse("()") == Board()
    assert str(b) == "(0,1,3)"
    with pytest.raises(ValueError):
        Board((1, -1))
    with pytest.raises(ValueError):
        Board.parse("1,x")


def test_figure_one_trace_by_hand():
    b = Board((0, 1, 1, 3, 5))
    seen = []
    for hole in (5, 1, 2, 1, 4, 1, 3, 1, 2, 1):
        b = play_move(b, hole)
        seen.append(b.stones)
    assert seen == FIG1_STATES


def test_wrong_first_move_loses():
    after = play_move(Board((1, 2)), 2)
    assert after == Board((2,))
    lost = play_move(after, 1)
    assert isinstance(lost, Loss) and not lost
    assert isinstance(solve(after), Loss)


def test_single_stone():
    assert play_move(Board((1,)), 1) == Board()


@pytest.mark.parametrize("board, hole", [((1, 2), 3), ((0, 2), 1), ((1,), 0)])
def test_illegal_moves(board, hole):
    with pytest.raises(IllegalMove):
        play_move(Board(board), hole)


def test_solve_examples():
    assert solve(Board((1, 2))).selections == (1, 2, 1)
    empty = solve(Board())
    assert empty.selections == () and empty.won
    trace = solve(Board((0, 1, 1, 3, 5)))
    assert trace.selections == (5, 1, 2, 1, 4, 1, 3, 1, 2, 1)
    assert [s.stones for s in trace.states] == FIG1_STATES
    assert trace.move_vector().counts == (5, 2, 1, 1, 1)


@pytest.mark.parametrize("n, stones", [
    (0, ()), (4, (0, 1, 3)), (10, (0, 1, 1, 3, 5)), (12, (0, 0, 0, 2, 4, 6)), (13, (1, 0, 0, 2, 4, 6)),
])
def test_tchouk_examples(n, stones):
    assert tchouk(n).stones == stones
    assert tchouk_recursive(n).stones == stones


def test_constructions_agree():
    for n, b in zip(range(20_000), iter_tchouk_recursive()):
        assert tchouk(n) == b


@given(st.integers(1, 10**6))
def test_tchouk_shape(n):
    b = tchouk(n)
    assert b.total == n
    assert b.final == b.length
    assert all(0 <= c <= i for i, c in enumerate(b.stones, start=1))


def _winnable_boards(n, strict=True):
    """Every n-stone board (any counts, length <= n) that some order of
    moves clears, by exhaustive game search."""
    @lru_cache(maxsize=None)
    def wins(stones):
        if not any(stones):
            return True
        for hole, s in enumerate(stones, start=1):
            if 0 < s <= hole and (s == hole or not strict):
                nxt = list(stones)
                nxt[hole - 1] = 0
                for j in range(hole - s, hole):
                    if j:
                        nxt[j - 1] += 1
                if wins(tuple(nxt)):
                    return True
        return False

    def compositions(total, parts):
        if parts == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in compositions(total - first, parts - 1):
                yield (first,) + rest

    return [Board(c) for c in compositions(n, n) if wins(c)]


@pytest.mark.parametrize("n", range(1, 8))
def test_winning_board_is_unique(n):
    assert _winnable_boards(n) == [tchouk(n)]


def test_uniqueness_needs_the_last_stone_in_the_pit():
    lax = _winnable_boards(2, strict=False)
    assert Board((1, 1)) in lax and tchouk(2) in lax
    b = Board((1, 1))
    for hole in (1, 2, 1):
        b = play_move(b, hole)
    assert b == Board()
    assert isinstance(play_move(Board((1, 1)), 2, strict=True), Loss)


def test_winning_play_is_strict():
    b = tchouk(40)
    for hole in solve(b).selections:
        b = play_move(b, hole, strict=True)
        assert isinstance(b, Board)
    assert b == Board()


def test_solve_wins_and_counts_match():
    for n in range(1, 600):
        trace = solve(tchouk(n))
        assert trace and trace.won
        assert trace.move_vector() == move_vector(n)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=7))
def test_solve_loses_exactly_on_losing_boards(stones):
    b = Board(stones)
    result = solve(b)
    assert bool(result) == (b == tchouk(b.total))


@pytest.mark.parametrize("n, mv", [(10, (5, 2, 1, 1, 1)), (1, (1,)), (12, (6, 2, 1, 1, 1, 1)), (13, (7, 2, 1, 1, 1, 1))])
def test_move_vector_examples(n, mv):
    assert move_vector(n).counts == mv
    assert move_vector_by_play(n).counts == mv


def test_printed_move_vector_for_twelve_is_wrong():
    # the often-quoted (6,2,2,1,1) is not what the game does
    assert move_vector_by_play(12).counts != (6, 2, 2, 1, 1)


@pytest.mark.parametrize("stones, mv", [((0, 1, 1, 3, 5), (5, 2, 1, 1, 1)), ((1,), (1,)), ((1, 2, 2, 4), (5, 2, 1, 1))])
def test_move_vector_from_board_examples(stones, mv):
    assert move_vector_from_board(Board(stones)).counts == mv


def test_move_vector_from_board_rejects_losers():
    with pytest.raises(ValueError):
        move_vector_from_board(Board((1, 1)))


@given(st.integers(1, 10**6))
def test_move_vector_formulas_agree(n):
    mv = move_vector(n)
    assert mv == move_vector_from_board(tchouk(n))
    assert mv.total == n


@pytest.mark.parametrize("k, value", [(4, 6), (1, 1), (2, 2), (5, 10), (14, 60)])
def test_t_examples(k, value):
    assert t(k) == value
    assert t_by_scan(k) == value


def test_t_prefix():
    assert [t(k) for k in range(1, 15)] == [1, 2, 4, 6, 10, 12, 18, 22, 30, 34, 42, 48, 58, 60]


def test_t_methods_agree():
    table = t_table_by_scan(300)
    assert table == [t(k) for k in range(1, 301)]


def test_t_ratio_near_one():
    assert t(2000) == 1273762
    assert abs(t_ratio(2000) - 1) < 0.001


@pytest.mark.parametrize("stones, expected", [
    ((1, 1, 1, 3, 5), True), ((0, 1, 1, 3, 5), False), ((1, 2), True),
    ((1, 0, 2, 4), False), ((1,), True), ((1, 1, 3, 4), False),
])
def test_fagan_property(stones, expected):
    assert fagan_property(Board(stones)) is expected


def test_fagan_property_needs_a_board():
    with pytest.raises(ValueError):
        fagan_property(Board())
