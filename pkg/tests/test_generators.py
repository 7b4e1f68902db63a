import pytest

from buchigames import SOLVERS
from buchigames.attractor import is_closed
from buchigames.classical import solve_classical
from buchigames.generators import (GenSpec, cycle_length, gen_gadget_chain,
                                   gen_gadget_chain_cycles, gen_planted_trap,
                                   gen_random_bounded, generate)
from buchigames.graph import StateSet, SubgameView, parse_game, serialize_game

from conftest import H1_TEXT


def test_h1_matches_text():
    assert gen_gadget_chain(1) == parse_game(H1_TEXT)


def test_chain_counts():
    g = gen_gadget_chain(100)
    assert (g.n, g.m) == (202, 402)
    assert all(g.buchi[2 * i + 1] and not g.buchi[2 * i] for i in range(101))


def test_chain_peels_one_gadget_per_round():
    for n in (3, 10, 40):
        res = solve_classical(gen_gadget_chain(n))
        assert [r.tr for r in res.trace] == [[2 * i] for i in range(n + 1)]


def test_cycle_variant_shape():
    g = gen_gadget_chain_cycles(4)
    assert cycle_length(4) == 4
    assert g.n == 2 * 5 + 5 * 4
    assert sum(g.buchi) == 5
    assert all(g.owner[s] == 1 and not g.buchi[s] for s in range(10, g.n))


@pytest.mark.parametrize("exits", [True, False])
def test_cycle_variant_all_lost(exits):
    g = gen_gadget_chain_cycles(8, exits=exits)
    for solve in SOLVERS.values():
        assert len(solve(g).w2) == g.n


def test_random_deterministic():
    spec = GenSpec("random_bounded", 200, 2, 7, 0.3)
    assert serialize_game(generate(spec)) == serialize_game(generate(spec))
    g = generate(spec)
    ref = solve_classical(g).w2
    assert all(solve(g).w2 == ref for solve in SOLVERS.values())


def test_random_outdegree_one_is_functional():
    g = gen_random_bounded(GenSpec("random_bounded", 30, 1, 3))
    assert all(len(ts) == 1 for ts in g.succ)


@pytest.mark.parametrize("kw", [
    dict(family="nope", n=4), dict(family="random_bounded", n=0),
    dict(family="random_bounded", n=4, buchi_density=1.5),
])
def test_spec_validation(kw):
    with pytest.raises(ValueError):
        GenSpec(**kw)


def test_random_rejects_large_d():
    with pytest.raises(ValueError):
        gen_random_bounded(GenSpec("random_bounded", 3, 4))


def test_planted_trap():
    for seed in range(30):
        g, planted = gen_planted_trap(60, 1 + seed % 5, seed)
        assert len(planted) == 1 + seed % 5
        assert not any(g.buchi[s] for s in planted)
        res = solve_classical(g)
        assert set(planted) <= set(res.w2)
        # closed once the gate and decoy fall in the first round
        alive = StateSet.full(g.n) - StateSet(g.n, res.trace[0].w_next)
        assert set(planted) <= set(alive)
        assert not is_closed(SubgameView(g), 1, planted)
        assert is_closed(SubgameView(g, alive), 1, planted)


def test_planted_size_one_is_self_loop():
    g, planted = gen_planted_trap(20, 1, 0)
    assert planted == [0] and 0 in g.succ[0]


def test_planted_validation():
    with pytest.raises(ValueError):
        gen_planted_trap(8, 2, 0)
