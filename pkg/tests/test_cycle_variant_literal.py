"""Cycle variant without exit edges: only ``t_i`` leaves its cycle.

Informational. In this layout the alternative's escape attractor re-walks
every earlier cycle each round, so its work grows like the classical
solver's and the additive gap to classical is not O(m). The acceptance
corpus uses the exit-edge layout instead.
"""

from buchigames.alternative import solve_alternative
from buchigames.classical import solve_classical
from buchigames.generators import gen_gadget_chain_cycles


def test_literal_layout_growth():
    rows = []
    for n in (64, 128, 256):
        g = gen_gadget_chain_cycles(n, exits=False)
        cl = solve_classical(g)
        alt = solve_alternative(g)
        assert cl.w2 == alt.w2
        rows.append((n, g.m, cl.metrics.edge_examinations, alt.metrics.edge_examinations))
    for (_, _, c0, a0), (_, _, c1, a1) in zip(rows, rows[1:]):
        assert c1 / c0 > 3.3
        # superlinear for the alternative too
        assert a1 / a0 > 3.3
    n, m, c, a = rows[-1]
    assert (a - c) / m > 20
