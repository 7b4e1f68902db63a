import pytest

from buchigames.generators import gen_gadget_chain
from buchigames.graph import GameGraph

H1_TEXT = b"""buchi 4
0 1 0 0
1 2 1 0,2
2 1 0 2,1
3 2 1 2
"""

T0, W0, T1, W1 = 0, 1, 2, 3


@pytest.fixture
def h1():
    return gen_gadget_chain(1)


def all_buchi(n=5):
    # ring plus chords, every state Büchi
    succ = [[(i + 1) % n, (i + 2) % n] for i in range(n)]
    return GameGraph([1 + i % 2 for i in range(n)], [1] * n, succ)


def no_buchi(n=5):
    succ = [[(i + 1) % n] for i in range(n)]
    return GameGraph([1 + i % 2 for i in range(n)], [0] * n, succ)
