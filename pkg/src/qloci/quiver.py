"""Bipartite type-A quivers, their block layout, orbits, and Zelevinsky permutations.

Vertices are drawn left to right as y_n, x_n, y_{n-1}, ..., y_1, x_1, y_0;
the outermost vertices are sources.  Arrows are beta_k: y_k -> x_k and
alpha_k: y_{k-1} -> x_k.  The d x d block grid lists row blocks
y_0..y_n then x_n..x_1 top to bottom and column blocks x_n..x_1 then
y_0..y_n left to right; the snake region is the union of the arrow
blocks (alpha_k: rows y_{k-1} x cols x_k, beta_k: rows y_k x cols x_k)
and P_* is the rest of the northwest d_y x d_x corner.
"""

from __future__ import annotations

from .perms import PartialPermutation, Perm
from .pipedreams import PipeDream
from .poly import s_var, t_var


class OrbitError(ValueError):
    """Orbit data that cannot come from a lacing diagram of this quiver."""


class BipartiteQuiver:
    """Dimension vectors dy[0..n] for sources and dx[1..n] for sinks.

    >>> Q = BipartiteQuiver((1, 3, 2), (2, 3))
    >>> Q.n, Q.d_y, Q.d_x, Q.d
    (2, 6, 5, 11)
    >>> Q.vertices()[:3]
    ('y2', 'x2', 'y1')
    """

    __slots__ = ("dy", "dx", "n")

    def __init__(self, dy, dx):
        dy = tuple(int(a) for a in dy)
        dx = tuple(int(a) for a in dx)
        if len(dy) != len(dx) + 1 or not dx:
            raise ValueError("need dimensions for y_0..y_n and x_1..x_n, n >= 1")
        if any(a < 0 for a in dy + dx):
            raise ValueError("dimensions must be nonnegative")
        object.__setattr__(self, "dy", dy)
        object.__setattr__(self, "dx", dx)
        object.__setattr__(self, "n", len(dx))

    def __setattr__(self, name, value):
        raise AttributeError("BipartiteQuiver is immutable")

    @property
    def d_y(self):
        return sum(self.dy)

    @property
    def d_x(self):
        return sum(self.dx)

    @property
    def d(self):
        return self.d_x + self.d_y

    def dim(self, vertex):
        family, k = vertex[0], int(vertex[1:])
        return self.dy[k] if family == "y" else self.dx[k - 1]

    def position(self, vertex):
        """0-based slot in the left-to-right drawing order."""
        family, k = vertex[0], int(vertex[1:])
        return 2 * (self.n - k) + (1 if family == "x" else 0)

    def vertices(self):
        """All vertices in drawing order, leftmost first."""
        out = []
        for k in range(self.n, 0, -1):
            out.append("y%d" % k)
            out.append("x%d" % k)
        out.append("y0")
        return tuple(out)

    def __eq__(self, other):
        if not isinstance(other, BipartiteQuiver):
            return NotImplemented
        return (self.dy, self.dx) == (other.dy, other.dx)

    def __hash__(self):
        return hash((self.dy, self.dx))

    def __repr__(self):
        return "BipartiteQuiver(dy=%s, dx=%s)" % (self.dy, self.dx)


class BlockLayout:
    """Absolute row/column intervals, the snake region, and variable labels."""

    __slots__ = ("quiver", "row_order", "col_order", "rows", "cols", "snake", "p_star")

    def __init__(self, quiver):
        object.__setattr__(self, "quiver", quiver)
        n = quiver.n
        row_order = tuple("y%d" % k for k in range(n + 1)) + tuple(
            "x%d" % k for k in range(n, 0, -1)
        )
        col_order = tuple("x%d" % k for k in range(n, 0, -1)) + tuple(
            "y%d" % k for k in range(n + 1)
        )
        rows, cols = {}, {}
        at = 1
        for z in row_order:
            rows[z] = (at, at + quiver.dim(z) - 1)
            at += quiver.dim(z)
        at = 1
        for z in col_order:
            cols[z] = (at, at + quiver.dim(z) - 1)
            at += quiver.dim(z)
        snake = set()
        for k in range(1, n + 1):
            for block_rows in ("y%d" % (k - 1), "y%d" % k):
                snake |= {
                    (r, c)
                    for r in _span(rows[block_rows])
                    for c in _span(cols["x%d" % k])
                }
        p_star = {
            (r, c)
            for r in range(1, quiver.d_y + 1)
            for c in range(1, quiver.d_x + 1)
            if (r, c) not in snake
        }
        object.__setattr__(self, "row_order", row_order)
        object.__setattr__(self, "col_order", col_order)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "snake", frozenset(snake))
        object.__setattr__(self, "p_star", frozenset(p_star))

    def __setattr__(self, name, value):
        raise AttributeError("BlockLayout is immutable")

    def alpha_block(self, k):
        """Cells of the alpha_k block: rows y_{k-1}, columns x_k."""
        return (
            tuple(_span(self.rows["y%d" % (k - 1)])),
            tuple(_span(self.cols["x%d" % k])),
        )

    def beta_block(self, k):
        return (
            tuple(_span(self.rows["y%d" % k])),
            tuple(_span(self.cols["x%d" % k])),
        )

    def row_block_of(self, r):
        for z in self.row_order:
            lo, hi = self.rows[z]
            if lo <= r <= hi:
                return z, r - lo + 1
        raise ValueError("row %d outside the grid" % r)

    def col_block_of(self, c):
        for z in self.col_order:
            lo, hi = self.cols[z]
            if lo <= c <= hi:
                return z, c - lo + 1
        raise ValueError("column %d outside the grid" % c)

    def row_var(self, r):
        """t^i_a for a row in block y_i, s^j_b for one in block x_j."""
        z, slot = self.row_block_of(r)
        k = int(z[1:])
        return t_var(k, slot) if z[0] == "y" else s_var(k, slot)

    def col_var(self, c):
        z, slot = self.col_block_of(c)
        k = int(z[1:])
        return s_var(k, slot) if z[0] == "x" else t_var(k, slot)


def _span(interval):
    lo, hi = interval
    return range(lo, hi + 1)


def block_layout(quiver):
    """The block decomposition of the d x d grid for this quiver.

    >>> L = block_layout(BipartiteQuiver((1, 1), (1,)))
    >>> sorted(L.snake), sorted(L.p_star)
    ([(1, 1), (2, 1)], [])
    """
    return BlockLayout(quiver)


class OrbitData:
    """Lace multiplicities of an orbit: (left vertex, right vertex) -> count.

    Vertex saturation must hold: the laces whose span covers a vertex z,
    endpoints included, number exactly dim(z).
    """

    __slots__ = ("quiver", "laces")

    def __init__(self, quiver, laces):
        clean = {}
        for (left, right), mult in laces.items():
            if mult < 0:
                raise OrbitError("negative multiplicity for (%s, %s)" % (left, right))
            if quiver.position(left) > quiver.position(right):
                raise OrbitError("(%s, %s) is not drawn left to right" % (left, right))
            if mult:
                clean[(left, right)] = int(mult)
        object.__setattr__(self, "quiver", quiver)
        object.__setattr__(self, "laces", clean)
        for z in quiver.vertices():
            have = self.laces_through(z)
            if have != quiver.dim(z):
                raise OrbitError(
                    "%d laces meet %s but dim is %d" % (have, z, quiver.dim(z))
                )

    def __setattr__(self, name, value):
        raise AttributeError("OrbitData is immutable")

    def laces_through(self, z):
        pos = self.quiver.position(z)
        return sum(
            mult
            for (left, right), mult in self.laces.items()
            if self.quiver.position(left) <= pos <= self.quiver.position(right)
        )

    def count(self, left, right):
        return self.laces.get((left, right), 0)

    def __eq__(self, other):
        if not isinstance(other, OrbitData):
            return NotImplemented
        return (self.quiver, self.laces) == (other.quiver, other.laces)

    def __hash__(self):
        return hash((self.quiver, tuple(sorted(self.laces.items()))))

    def __repr__(self):
        return "OrbitData(%s)" % (sorted(self.laces.items()),)


def _diagram_parts(quiver, w):
    """Yield (kind, k, matrix) for a diagram listed (w_n, w^n, ..., w_1, w^1)."""
    w = tuple(w)
    if len(w) != 2 * quiver.n:
        raise ValueError("expected %d matrices, got %d" % (2 * quiver.n, len(w)))
    for j, k in enumerate(range(quiver.n, 0, -1)):
        beta, alpha = w[2 * j], w[2 * j + 1]
        if (beta.rows, beta.cols) != (quiver.dim("y%d" % k), quiver.dim("x%d" % k)):
            raise ValueError("beta_%d matrix must be %dx%d"
                             % (k, quiver.dim("y%d" % k), quiver.dim("x%d" % k)))
        if (alpha.rows, alpha.cols) != (
            quiver.dim("y%d" % (k - 1)), quiver.dim("x%d" % k)
        ):
            raise ValueError("alpha_%d matrix must be %dx%d"
                             % (k, quiver.dim("y%d" % (k - 1)), quiver.dim("x%d" % k)))
        yield ("beta", k, beta)
        yield ("alpha", k, alpha)


def orbit_from_lacing(quiver, w):
    """Decompose a lacing diagram into laces and count endpoint pairs.

    `w` lists one partial permutation per arrow, ordered
    (w_n, w^n, ..., w_1, w^1); w_k is the beta_k matrix (dy_k x dx_k)
    and w^k the alpha_k matrix (dy_{k-1} x dx_k).
    """
    parent = {}
    for z in quiver.vertices():
        for i in range(1, quiver.dim(z) + 1):
            parent[(z, i)] = (z, i)

    def find(dot):
        while parent[dot] != dot:
            parent[dot] = parent[parent[dot]]
            dot = parent[dot]
        return dot

    def union(a, b):
        parent[find(a)] = find(b)

    for kind, k, mat in _diagram_parts(quiver, w):
        source = "y%d" % (k if kind == "beta" else k - 1)
        for r, c in mat.ones():
            union((source, r), ("x%d" % k, c))

    components = {}
    for dot in parent:
        components.setdefault(find(dot), []).append(dot)
    laces = {}
    for dots in components.values():
        ordered = sorted(dots, key=lambda dot: quiver.position(dot[0]))
        pair = (ordered[0][0], ordered[-1][0])
        laces[pair] = laces.get(pair, 0) + 1
    return OrbitData(quiver, laces)


def zelevinsky(quiver, orbit):
    """The Zelevinsky permutation of an orbit, as a d x d permutation.

    Block (row z, column z') holds the number of laces with endpoints
    exactly (z, z') when z is weakly left of z', the number of laces
    passing over the gap between z' and z when z sits one step to the
    right of z', and 0 otherwise.  Within a block row the nonzero blocks
    fill consecutive rows left to right; within a block column,
    consecutive columns top to bottom; each block carries an identity.
    """
    layout = block_layout(quiver)
    counts = {}
    for a in layout.row_order:
        for b in layout.col_order:
            pa, pb = quiver.position(a), quiver.position(b)
            if pa <= pb:
                counts[(a, b)] = orbit.count(a, b)
            elif pa == pb + 1:
                counts[(a, b)] = sum(
                    mult
                    for (left, right), mult in orbit.laces.items()
                    if quiver.position(left) <= pb and quiver.position(right) >= pa
                )
            else:
                counts[(a, b)] = 0

    block_rows, block_cols = {}, {}
    for a in layout.row_order:
        at = layout.rows[a][0]
        for b in layout.col_order:
            c = counts[(a, b)]
            block_rows[(a, b)] = range(at, at + c)
            at += c
        if at != layout.rows[a][1] + 1:
            raise OrbitError("block row %s holds %d laces, dim is %d"
                             % (a, at - layout.rows[a][0], quiver.dim(a)))
    for b in layout.col_order:
        at = layout.cols[b][0]
        for a in layout.row_order:
            c = counts[(a, b)]
            block_cols[(a, b)] = range(at, at + c)
            at += c
        if at != layout.cols[b][1] + 1:
            raise OrbitError("block column %s holds %d laces, dim is %d"
                             % (b, at - layout.cols[b][0], quiver.dim(b)))

    line = [0] * quiver.d
    for key, rows in block_rows.items():
        for r, c in zip(rows, block_cols[key]):
            line[r - 1] = c
    if sorted(line) != list(range(1, quiver.d + 1)):
        raise OrbitError("block counts do not assemble into a permutation")
    return Perm(line)


def p_star_dream(quiver):
    layout = block_layout(quiver)
    return PipeDream(quiver.d_y, quiver.d_x, layout.p_star)


def v_star(quiver):
    """Demazure product of the dream filling everything outside the snake.

    >>> v_star(BipartiteQuiver((1, 1), (1,)))
    Perm(())
    """
    return p_star_dream(quiver).demazure()


def codim(quiver, orbit):
    """Length drop from the orbit's permutation to the dense one."""
    return zelevinsky(quiver, orbit).length() - v_star(quiver).length()


# --- JSON input --------------------------------------------------------


def quiver_from_json(obj):
    """Build (quiver, orbit) from the CLI input schema."""
    try:
        n = int(obj["n"])
        dy = [int(a) for a in obj["dy"]]
        dx = [int(a) for a in obj["dx"]]
    except (KeyError, TypeError, ValueError) as err:
        raise ValueError("input needs integer n and lists dy, dx: %s" % err)
    if n != len(dx):
        raise ValueError("n=%d but %d sink dimensions given" % (n, len(dx)))
    quiver = BipartiteQuiver(dy, dx)
    entry = obj.get("orbit")
    if entry is None:
        raise ValueError("input needs an 'orbit' entry")
    orbit = None
    if "lacing" in entry:
        mats = [PartialPermutation(m) for m in entry["lacing"]]
        orbit = orbit_from_lacing(quiver, mats)
    if "multiplicities" in entry:
        laces = {}
        for key, mult in entry["multiplicities"].items():
            left, _, right = key.partition(",")
            laces[(left.strip(), right.strip())] = int(mult)
        by_mult = OrbitData(quiver, laces)
        if orbit is not None and orbit.laces != by_mult.laces:
            raise ValueError("'lacing' and 'multiplicities' disagree")
        orbit = by_mult
    if orbit is None:
        raise ValueError("orbit needs either 'lacing' or 'multiplicities'")
    return quiver, orbit


__all__ = [
    "BipartiteQuiver",
    "BlockLayout",
    "OrbitData",
    "OrbitError",
    "block_layout",
    "codim",
    "orbit_from_lacing",
    "p_star_dream",
    "quiver_from_json",
    "v_star",
    "zelevinsky",
]
