import pytest

from buchigames import SOLVERS
from buchigames.alternative import AltIterationState, alt_iteration, lockstep, solve_dovetail
from buchigames.classical import avoid_set_classical, solve_classical
from buchigames.generators import GenSpec, gen_gadget_chain, gen_random_bounded
from buchigames.graph import StateSet, SubgameView
from buchigames.improved import (forward_probe, probe_budget, solve_improved, source_set,
                                 source_threshold, trap_probe)

from conftest import T0, T1, W0, W1, all_buchi, no_buchi

ALL = sorted(SOLVERS)


def test_classical_round_h1(h1):
    tr, w = avoid_set_classical(SubgameView(h1), h1.buchi_set())
    assert tr.to_list() == [T0] and w.to_list() == [T0, W0]
    view = SubgameView(h1, StateSet(4, [T1, W1]))
    tr, w = avoid_set_classical(view, StateSet(4, [W1]))
    assert tr.to_list() == [T1] and w.to_list() == [T1, W1]


def test_classical_round_all_buchi():
    tr, w = avoid_set_classical(SubgameView(all_buchi()), all_buchi().buchi_set())
    assert not tr and not w


def test_classical_trace_h1(h1):
    res = solve_classical(h1, check=True)
    assert res.w2_sorted() == [0, 1, 2, 3] and res.w1_sorted() == []
    assert [sorted(r.w_next) for r in res.trace] == [[T0, W0], [T1, W1]]


@pytest.mark.parametrize("name", ALL)
def test_h1_all_solvers(h1, name):
    res = SOLVERS[name](h1, check=True)
    assert res.w2_sorted() == [0, 1, 2, 3]


@pytest.mark.parametrize("name", ALL)
def test_all_buchi(name):
    g = all_buchi()
    res = SOLVERS[name](g, check=True)
    assert res.w2_sorted() == [] and res.w1_sorted() == list(range(g.n))
    assert res.iterations == 1


@pytest.mark.parametrize("name", ALL)
def test_no_buchi(name):
    g = no_buchi()
    res = SOLVERS[name](g, check=True)
    assert res.w2_sorted() == list(range(g.n))


@pytest.mark.parametrize("name", ALL)
def test_partition_and_disjoint_rounds(name):
    for seed in range(40):
        g = gen_random_bounded(GenSpec("random_bounded", 80, 3, seed))
        res = SOLVERS[name](g, check=True)
        assert set(res.w1) | set(res.w2) == set(range(g.n))
        assert set(res.w1).isdisjoint(res.w2)
        seen = set()
        for rec in res.trace:
            assert seen.isdisjoint(rec.w_next)
            seen |= set(rec.w_next)
        assert seen == set(res.w2)
        assert res.metrics.edge_examinations == sum(res.metrics.per_phase.values())
        between = sum(res.metrics.per_phase[k] for k in ("init_counters", "counter_update"))
        assert sum(r.work for r in res.trace) + between == res.metrics.edge_examinations


def test_alternative_round_h1(h1):
    state = AltIterationState(h1)
    assert state.c1.to_list() == [T0] and not state.c2
    tr_hat, w = alt_iteration(SubgameView(h1), state, check=True)
    assert state.x.to_list() == [T0, W0]
    assert state.z.to_list() == [T0]
    assert state.d.to_list() == [W0] and state.l.to_list() == [W0]
    assert tr_hat.to_list() == [T0] and w.to_list() == [T0, W0]


def test_alternative_round_all_buchi():
    g = all_buchi()
    state = AltIterationState(g)
    tr_hat, w = alt_iteration(SubgameView(g), state)
    assert not state.c1 and not state.c2 and not state.x and not tr_hat and not w


def test_lockstep_h1(h1):
    rounds = list(lockstep(h1))
    assert [r["tr"].to_list() for r in rounds] == [[T0], [T1]]
    assert all(r["tr"] == r["tr_hat"] and r["closed"] for r in rounds)


def test_dovetail_winner_tracks_cheaper_side():
    # the classical side wins exactly when its trap search fits in one slice
    g = gen_gadget_chain(128)
    dv = solve_dovetail(g)
    cl = solve_classical(g)
    for rd, rc in zip(dv.trace, cl.trace):
        assert rd.winner == ("classical" if rc.trap_work < 64 else "alternative")
    assert dv.metrics.counters["winner_alternative"] > dv.metrics.counters["winner_classical"]


def test_dovetail_slice_size_irrelevant_to_result():
    for seed in range(20):
        g = gen_random_bounded(GenSpec("random_bounded", 60, 4, seed))
        ref = solve_classical(g).w2
        for k in (1, 7, 1000):
            assert solve_dovetail(g, slice_size=k).w2 == ref


def test_budget_and_threshold():
    succ = [[(i + 1) % 16, (i + 5) % 16] for i in range(16)]
    from buchigames.graph import GameGraph
    g = GameGraph([1] * 16, [0] * 16, succ)
    assert (g.n, g.m) == (16, 32)
    assert probe_budget(g) == 16 and source_threshold(g) == 8


def test_source_set(h1):
    alive = StateSet(4, [T1, W1])
    assert source_set(h1, [], alive).to_list() == []
    assert source_set(h1, [T0, W0], alive).to_list() == [T1]
    assert source_set(h1, range(4), StateSet.full(4)).to_list() == [0, 1, 2, 3]


def test_forward_probe_h1(h1):
    p = forward_probe(SubgameView(h1), StateSet(4, [T1]), 12)
    assert p.r.to_list() == [T0, W0, T1] and not p.f
    assert [p.depth[s] for s in (T1, W0, T0)] == [1, 2, 3]
    tr = trap_probe(SubgameView(h1), p, h1.buchi_set())
    assert not p.t and p.a.to_list() == [W0, T1] and tr.to_list() == [T0]


def test_forward_probe_empty_sources(h1):
    p = forward_probe(SubgameView(h1), StateSet(4), 12)
    assert not p.r and not p.f


def test_forward_probe_budget_cut():
    g = gen_gadget_chain(20)
    p = forward_probe(SubgameView(g), StateSet(g.n, [g.n - 1]), 5)
    assert p.f and p.f.issubset(p.r) and p.steps_used <= 5
    assert p.realized_depth == min(p.depth[s] for s in p.f)


def test_trap_probe_all_buchi():
    g = all_buchi()
    p = forward_probe(SubgameView(g), StateSet(g.n, [0]), 100)
    assert not trap_probe(SubgameView(g), p, g.buchi_set())


def test_trap_probe_chain_frontier():
    # 0 -> 1 -> 2 -> 2, all player 1; a 2-step budget leaves 2 on the frontier
    from buchigames.graph import GameGraph
    g = GameGraph([1, 1, 1], [0, 0, 0], [[1], [2], [2]])
    view = SubgameView(g)
    p = forward_probe(view, StateSet(3, [0]), 2)
    tr = trap_probe(view, p, g.buchi_set())
    assert p.f and not tr
    full = forward_probe(view, StateSet(3, [0]), 10)
    assert trap_probe(view, full, g.buchi_set()).to_list() == [0, 1, 2]


def test_improved_gadget_chain_counts():
    res = solve_improved(gen_gadget_chain(64))
    c = res.metrics.counters
    assert c["fallback"] >= 1 and c["threshold_branch"] <= 7


def test_classical_work_bound():
    # rounds <= |B| + 1, each round linear in m
    worst = 0.0
    for seed in range(200):
        g = gen_random_bounded(GenSpec("random_bounded", 150, 1 + seed % 6, seed, 0.1 + seed % 8 / 10))
        b = sum(g.buchi)
        res = solve_classical(g)
        assert res.iterations <= b + 1
        worst = max(worst, res.metrics.edge_examinations / ((b + 1) * g.m))
    for n in (16, 64, 256):
        g = gen_gadget_chain(n)
        worst = max(worst, solve_classical(g).metrics.edge_examinations / ((sum(g.buchi) + 1) * g.m))
    assert worst <= 4
