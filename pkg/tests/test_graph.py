import pytest

from buchigames.generators import GenSpec, gen_random_bounded
from buchigames.graph import (GameGraph, ParseError, StateSet, SubgameView, parse_game,
                              serialize_game, validate_subgame)

from conftest import H1_TEXT, T0, T1, W0, W1


def test_single_state():
    g = parse_game(b"buchi 1\n0 1 1 0\n")
    assert (g.n, g.m) == (1, 1)
    assert g.buchi_set().to_list() == [0]
    assert serialize_game(g) == b"buchi 1\n0 1 1 0\n"


def test_parse_h1(h1):
    g = parse_game(H1_TEXT)
    assert (g.n, g.m) == (4, 6)
    assert g.buchi_set().to_list() == [W0, W1]
    assert set(g.succ[W0]) == {T0, T1}
    assert g == h1


def test_predecessors_transpose(h1):
    edges = {(s, t) for s in range(h1.n) for t in h1.succ[s]}
    back = {(s, t) for t in range(h1.n) for s in h1.pred[t]}
    assert edges == back


def test_comments_and_blank_lines():
    g = parse_game(b"# header\nbuchi 2\n\n0 1 0 1 # c\n1 2 1 0\n")
    assert g.n == 2 and g.succ[0] == (1,)


@pytest.mark.parametrize("text, needle", [
    (b"buchi 2\n0 1 0 1\n1 1 0 2\n", "dangling"),
    (b"buchi 1\n0 1 0\n", "successor"),
    (b"buchi 1\n0 3 0 0\n", "owner"),
    (b"buchi 1\n0 1 2 0\n", "flag"),
    (b"buchi 2\n0 1 0 1\n0 1 0 0\n", "duplicate state"),
    (b"buchi 1\n0 1 0 0,0\n", "duplicate edge"),
    (b"buchi 2\n0 1 0 0\n", "missing"),
    (b"0 1 0 0\n", "header"),
])
def test_parse_errors(text, needle):
    with pytest.raises(ParseError) as exc:
        parse_game(text)
    assert needle in str(exc.value).lower()


def test_parse_error_position():
    with pytest.raises(ParseError) as exc:
        parse_game(b"buchi 1\n0 1 x 0\n")
    assert exc.value.line == 2 and exc.value.column > 0


def test_constructor_rejects_empty_successors():
    with pytest.raises(ValueError):
        GameGraph([1], [0], [[]])


def test_round_trip(h1):
    assert parse_game(serialize_game(h1)) == h1
    g = gen_random_bounded(GenSpec("random_bounded", 50, 4, seed=9))
    assert parse_game(serialize_game(g)) == g


def test_immutable(h1):
    with pytest.raises(AttributeError):
        h1.n = 3


def test_validate_subgame(h1):
    assert validate_subgame(SubgameView(h1))
    assert validate_subgame(SubgameView(h1, StateSet(4, [T1, W1])))
    assert not validate_subgame(SubgameView(h1, StateSet(4, [W0])))


def test_view_successors(h1):
    view = SubgameView(h1, StateSet(4, [T1, W1]))
    assert list(view.successors(W1)) == [T1]
    assert list(view.successors(T1)) == [T1]


def test_stateset_algebra():
    a, b = StateSet(8, [1, 2, 3]), StateSet(8, [3, 4])
    assert (a | b).to_list() == [1, 2, 3, 4]
    assert (a & b).to_list() == [3]
    assert (a - b).to_list() == [1, 2]
    assert StateSet(8, [3]).issubset(a) and a.isdisjoint(StateSet(8, [5]))
    assert len(StateSet.full(8)) == 8 and not StateSet(8)
