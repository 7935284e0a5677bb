"""Factoring an orbit's permutation along the snake.

A completed tuple multiplies out to a d x d permutation once each
component is pushed to its window inside 1..d: a beta component is
shifted past b_k, an alpha component is inverted, rotated in its window,
and shifted past a_k.  Interleaving these with the Demazure products of
the four dense corner regions recovers the orbit permutation either
block row by block row or block column by block column; the tuples that
do recover it form the set X of the orbit.
"""

from __future__ import annotations

import itertools
import math

from .lacing import pi, pipes_to_laces, seqperm_neighbors
from .perms import Perm, all_perms
from .pipedreams import CapacityError, PipeDream, enum_pipes, enum_rpipes
from .quiver import block_layout, zelevinsky

__all__ = [
    "TUPLE_LIMIT",
    "eps_north",
    "eps_south",
    "factorization_col",
    "factorization_row",
    "hat_alpha",
    "hat_beta",
    "pipe_fibers",
    "seqperm_closure",
    "seqperm_moves",
    "shift_constants",
    "theta_east",
    "theta_west",
    "x_omega",
    "x_omega_by_factorization",
    "x_omega_red",
]

TUPLE_LIMIT = 5000


def shift_constants(quiver):
    """Window offsets (a_k, b_k) keyed by k.

    >>> from .quiver import BipartiteQuiver
    >>> shift_constants(BipartiteQuiver((1, 1), (1,)))
    {1: (0, 1)}
    """
    out = {}
    for k in range(1, quiver.n + 1):
        tail = sum(quiver.dx[k:])
        out[k] = (tail + sum(quiver.dy[: k - 1]), tail + sum(quiver.dy[:k]))
    return out


def hat_beta(quiver, v, k):
    """The beta_k component pushed past the first b_k positions."""
    return v.shifted(shift_constants(quiver)[k][1])


def hat_alpha(quiver, v, k):
    """The alpha_k component inverted, rotated in its window, pushed past a_k."""
    m = quiver.dim("y%d" % (k - 1)) + quiver.dim("x%d" % k)
    return v.inverse().rotated(m).shifted(shift_constants(quiver)[k][0])


def _delta(quiver, row_names, col_names):
    layout = block_layout(quiver)
    cells = []
    for zr in row_names:
        lo, hi = layout.rows[zr]
        for zc in col_names:
            clo, chi = layout.cols[zc]
            cells += [
                (r, c)
                for r in range(lo, hi + 1)
                for c in range(clo, chi + 1)
            ]
    return PipeDream(quiver.d, quiver.d, cells).demazure()


def eps_north(quiver, k):
    """Dense region above the snake in block column x_k: rows y_0..y_{k-2}."""
    return _delta(quiver, ["y%d" % i for i in range(k - 1)], ["x%d" % k])


def eps_south(quiver, k):
    """Dense region below the snake in block column x_k: rows y_{k+1}..y_n."""
    return _delta(
        quiver, ["y%d" % i for i in range(k + 1, quiver.n + 1)], ["x%d" % k]
    )


def theta_west(quiver, k):
    """Dense region left of the snake in block row y_{k-1}: columns x_n..x_{k+1}."""
    return _delta(
        quiver, ["y%d" % (k - 1)], ["x%d" % i for i in range(quiver.n, k, -1)]
    )


def theta_east(quiver, k):
    """Dense region right of the snake in block row y_k: columns x_{k-1}..x_1."""
    return _delta(quiver, ["y%d" % k], ["x%d" % i for i in range(k - 1, 0, -1)])


def factorization_row(quiver, v):
    """0-Hecke product sweeping the snake one block row at a time."""
    v = tuple(v)
    out = Perm.identity()
    n = quiver.n
    for k in range(1, n + 1):
        for factor in (
            eps_north(quiver, k),
            hat_alpha(quiver, v[2 * (n - k) + 1], k),
            hat_beta(quiver, v[2 * (n - k)], k),
            eps_south(quiver, k),
        ):
            out = out.hecke(factor)
    return out


def factorization_col(quiver, v):
    """The same product grouped by block columns; always agrees with the rows."""
    v = tuple(v)
    out = Perm.identity()
    n = quiver.n
    for k in range(1, n + 1):
        for factor in (
            hat_alpha(quiver, v[2 * (n - k) + 1], k),
            theta_west(quiver, k),
            theta_east(quiver, k),
            hat_beta(quiver, v[2 * (n - k)], k),
        ):
            out = out.hecke(factor)
    return out


# --- the set X of an orbit --------------------------------------------


def x_omega(quiver, orbit):
    """Completed tuples of every northwest dream of the orbit."""
    layout = block_layout(quiver)
    dreams = enum_pipes(
        zelevinsky(quiver, orbit), quiver.d_y, quiver.d_x, forced=layout.p_star
    )
    return frozenset(pi(quiver, P) for P in dreams)


def x_omega_red(quiver, orbit):
    """Completed tuples of the reduced dreams only."""
    layout = block_layout(quiver)
    dreams = enum_rpipes(
        zelevinsky(quiver, orbit), quiver.d_y, quiver.d_x, forced=layout.p_star
    )
    return frozenset(pi(quiver, P) for P in dreams)


def x_omega_by_factorization(quiver, orbit, limit=TUPLE_LIMIT):
    """Brute filter of all window tuples by the row product; the oracle."""
    windows = []
    for k in range(quiver.n, 0, -1):
        windows.append(quiver.dim("y%d" % k) + quiver.dim("x%d" % k))
        windows.append(quiver.dim("y%d" % (k - 1)) + quiver.dim("x%d" % k))
    total = math.prod(math.factorial(m) for m in windows)
    if total > limit:
        raise CapacityError(
            "%d window tuples exceed the brute budget of %d" % (total, limit)
        )
    target = zelevinsky(quiver, orbit)
    pools = [tuple(all_perms(m)) for m in windows]
    return frozenset(
        v for v in itertools.product(*pools)
        if factorization_row(quiver, v) == target
    )


def seqperm_moves(quiver, v):
    """All pattern-exchange neighbors of a completed tuple."""
    return seqperm_neighbors(quiver, v, ktheory=True)


def seqperm_closure(quiver, seeds):
    """Closure of a set of completed tuples under the pattern exchanges."""
    seen = set(seeds)
    queue = list(seen)
    while queue:
        v = queue.pop()
        for v2 in seqperm_moves(quiver, v):
            if v2 not in seen:
                seen.add(v2)
                queue.append(v2)
    return frozenset(seen)


def pipe_fibers(quiver, orbit, reduced=False):
    """The orbit's dreams grouped by traced diagram, as {diagram: dreams}."""
    layout = block_layout(quiver)
    enum = enum_rpipes if reduced else enum_pipes
    dreams = enum(
        zelevinsky(quiver, orbit), quiver.d_y, quiver.d_x, forced=layout.p_star
    )
    fibers = {}
    for P in dreams:
        fibers.setdefault(pipes_to_laces(quiver, P), []).append(P)
    return fibers
