"""Frozen data for the running example shared across the suite.

The quiver has sources y_0, y_1, y_2 of dimensions 1, 3, 2 and sinks
x_1, x_2 of dimensions 2, 3; the orbit under study has laces
y_2-y_0, y_2-y_1 and x_2-x_1.  All values below were worked out by hand
on the 6x5 northwest grid and are asserted against production code.
"""

import pytest

from qloci.perms import PartialPermutation, Perm
from qloci.pipedreams import PipeDream

RUN_DY = (1, 3, 2)
RUN_DX = (2, 3)

RUN_V_OMEGA = Perm((4, 1, 2, 3, 6, 7, 5, 10, 11, 8, 9))
RUN_V_STAR = Perm((4, 1, 2, 3, 5, 6, 7, 10, 11, 8, 9))
RUN_CODIM = 2

RUN_LACES = {("y2", "y0"): 1, ("y2", "y1"): 1, ("x2", "x1"): 1}

# northwest 6x5 grid: rows y_0 | y_1 | y_2 blocks, cols x_2 | x_1 blocks
P_STAR_CELLS = frozenset(
    {(1, 1), (1, 2), (1, 3), (5, 4), (5, 5), (6, 4), (6, 5)}
)
SNAKE_CELLS = frozenset(
    [(r, c) for r in (5, 6) for c in (1, 2, 3)]      # beta_2
    + [(r, c) for r in (2, 3, 4) for c in (1, 2, 3)]  # alpha_2
    + [(r, c) for r in (2, 3, 4) for c in (4, 5)]     # beta_1
    + [(1, c) for c in (4, 5)]                        # alpha_1
)

P_STAR = PipeDream(6, 5, P_STAR_CELLS)
P_REDUCED = PipeDream(6, 5, P_STAR_CELLS | {(1, 5), (4, 3)})
P_NONREDUCED = PipeDream(
    6, 5, P_STAR_CELLS | {(1, 5), (2, 4), (3, 4), (4, 3), (5, 2)}
)


def diagram(w2, a2, w1, a1):
    return (
        PartialPermutation(w2),
        PartialPermutation(a2),
        PartialPermutation(w1),
        PartialPermutation(a1),
    )


# the minimal lacing diagram of the running orbit, listed (w_2, w^2, w_1, w^1)
RUN_W_MIN = diagram(
    [[1, 0, 0], [0, 1, 0]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[1, 0], [0, 1], [0, 0]],
    [[1, 0]],
)

# one K-move away from the minimal diagram (3 crossings); its own lace
# components differ, as closure members' may
RUN_W_K3 = diagram(
    [[1, 0, 0], [0, 1, 0]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 1], [1, 0], [0, 0]],
    [[1, 0]],
)

# deeper in the closure, five crossings
RUN_W_K5 = diagram(
    [[1, 0, 0], [0, 0, 1]],
    [[1, 0, 0], [0, 0, 1], [0, 1, 0]],
    [[0, 1], [0, 0], [1, 0]],
    [[1, 0]],
)


@pytest.fixture
def run_quiver():
    from qloci.quiver import BipartiteQuiver

    return BipartiteQuiver(RUN_DY, RUN_DX)


@pytest.fixture
def run_orbit(run_quiver):
    from qloci.quiver import OrbitData

    return OrbitData(run_quiver, RUN_LACES)
