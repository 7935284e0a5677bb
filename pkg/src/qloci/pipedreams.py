"""Pipe dreams on rectangular grids.

A pipe dream on a k x l grid is a set of crossing tiles; every other
cell holds an elbow.  The reading word lists tau_{r+c-1} for each cross,
rows top to bottom and right to left within a row, and its 0-Hecke
evaluation is the Demazure product of the dream.  Pipes enter from the
west wall (rows, labelled 1..k top to bottom) and the south wall
(labelled k+1..k+l left to right); a cross lets both pipes pass
straight through, an elbow turns west-bound traffic north and
south-bound traffic east.
"""

from __future__ import annotations

import os

import numpy as np

from .perms import PartialPermutation, Perm

DEFAULT_CAPACITY = 26
CAPACITY_ENV = "QLOCI_CAPACITY_CELLS"


class CapacityError(RuntimeError):
    """Raised when an exhaustive enumeration would exceed the cell budget."""


def capacity_limit():
    raw = os.environ.get(CAPACITY_ENV)
    if raw is None:
        return DEFAULT_CAPACITY
    return int(raw)


class PipeDream:
    """Immutable set of crosses on a rows x cols grid.

    >>> PipeDream(2, 2, [(1, 1)]).demazure()
    Perm((2, 1))
    >>> PipeDream(2, 2, []).demazure()
    Perm(())
    """

    __slots__ = ("rows", "cols", "crosses")

    def __init__(self, rows, cols, crosses=()):
        crosses = frozenset(crosses)
        for r, c in crosses:
            if not (1 <= r <= rows and 1 <= c <= cols):
                raise ValueError("cross (%d,%d) outside %dx%d grid" % (r, c, rows, cols))
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "crosses", crosses)

    def __setattr__(self, name, value):
        raise AttributeError("PipeDream is immutable")

    def __len__(self):
        return len(self.crosses)

    def __contains__(self, cell):
        return cell in self.crosses

    def key(self):
        return (self.rows, self.cols, tuple(sorted(self.crosses)))

    def __eq__(self, other):
        if not isinstance(other, PipeDream):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __lt__(self, other):
        return self.key() < other.key()

    def __repr__(self):
        return "PipeDream(%d, %d, %s)" % (self.rows, self.cols, sorted(self.crosses))

    def with_cross(self, cell):
        return PipeDream(self.rows, self.cols, self.crosses | {cell})

    def rotated(self):
        """The grid turned half a revolution.

        >>> PipeDream(1, 2, [(1, 2)]).rotated()
        PipeDream(1, 2, [(1, 1)])
        """
        return PipeDream(
            self.rows,
            self.cols,
            {(self.rows + 1 - r, self.cols + 1 - c) for r, c in self.crosses},
        )

    def reading_word(self):
        word = []
        for r in range(1, self.rows + 1):
            for c in range(self.cols, 0, -1):
                if (r, c) in self.crosses:
                    word.append(r + c - 1)
        return word

    def demazure(self):
        """0-Hecke evaluation of the reading word."""
        return Perm.from_word(self.reading_word())

    def demazure_by_columns(self):
        """Same product, read down the rightmost column first.

        >>> P = PipeDream(2, 3, [(1, 1), (1, 3), (2, 2)])
        >>> P.demazure_by_columns() == P.demazure()
        True
        """
        word = []
        for c in range(self.cols, 0, -1):
            for r in range(1, self.rows + 1):
                if (r, c) in self.crosses:
                    word.append(r + c - 1)
        return Perm.from_word(word)

    def is_reduced(self):
        return len(self.crosses) == self.demazure().length()

    # --- pipe tracing --------------------------------------------------

    def _route(self, crosses):
        """Walk every pipe; return (west exits, crossing pairs per cell).

        west[i] = ("N", col) or ("E", row) for the pipe entering west row i;
        meets[cell] = (west-to-east pipe, south-to-north pipe) at each cross.
        """
        passing = {}

        def walk(label, r, c, heading):
            while True:
                crossed = (r, c) in crosses
                if crossed:
                    passing.setdefault((r, c), {})[heading] = label
                if heading == "E":
                    if not crossed:
                        heading = "N"
                elif not crossed:
                    heading = "E"
                if heading == "E":
                    if c == self.cols:
                        return ("E", r)
                    c += 1
                else:
                    if r == 1:
                        return ("N", c)
                    r -= 1

        west = {}
        for i in range(1, self.rows + 1):
            west[i] = walk(i, i, 1, "E")
        for j in range(1, self.cols + 1):
            walk(self.rows + j, self.rows, j, "N")
        meets = {cell: (d["E"], d["N"]) for cell, d in passing.items()}
        return west, meets

    def trace_pipes(self):
        """Partial permutation matching west entries to north exits.

        While some pair of pipes crosses more than once, the offending
        tile closest to the northeast corner is deleted and the pipes
        rerouted; the surviving connections give the matrix.

        >>> PipeDream(2, 3, []).trace_pipes().matrix
        ((1, 0, 0), (0, 1, 0))
        >>> PipeDream(1, 1, [(1, 1)]).trace_pipes().matrix
        ((0,),)
        """
        crosses = set(self.crosses)
        while True:
            west, meets = self._route(crosses)
            tally = {}
            for cell, pair in meets.items():
                tally.setdefault(frozenset(pair), []).append(cell)
            surplus = [
                cell
                for pair, cells in tally.items()
                if len(cells) > 1
                for cell in cells
            ]
            if not surplus:
                break
            crosses.remove(min(surplus, key=lambda cell: (cell[0], -cell[1])))
        pairs = [
            (i, where)
            for i, (side, where) in west.items()
            if side == "N" and where <= self.cols and i <= self.rows
        ]
        return PartialPermutation.from_pairs(self.rows, self.cols, pairs)


# --- grid embeddings ---------------------------------------------------


def nw_restricted(P, rows, cols):
    """The same crosses on a rows x cols grid.

    Shrinking past a cross raises ValueError; growing is always lossless.

    >>> nw_restricted(PipeDream(3, 3, [(1, 2)]), 1, 2).key()
    (1, 2, ((1, 2),))
    """
    for r, c in P.crosses:
        if r > rows or c > cols:
            raise ValueError("cross (%d,%d) outside %dx%d subgrid" % (r, c, rows, cols))
    return PipeDream(rows, cols, P.crosses)


# --- enumeration -------------------------------------------------------


def _target_of(v):
    if isinstance(v, PartialPermutation):
        return v.complete()
    return v


def _grid_cells(rows, cols):
    return [(r, c) for r in range(1, rows + 1) for c in range(cols, 0, -1)]


def _letter_can_occur(target, i):
    # a cross with letter i forces tau_i <= target in Bruhat order
    return any(target(a) > i for a in range(1, i + 1))


def _reading_cells(rows, cols, cells, forced, target):
    chosen = set(cells if cells is not None else _grid_cells(rows, cols))
    chosen |= set(forced)
    usable = []
    for cell in _grid_cells(rows, cols):
        if cell not in chosen:
            continue
        if cell in forced or _letter_can_occur(target, cell[0] + cell[1] - 1):
            usable.append(cell)
    return usable


def enum_rpipes(v, rows, cols, cells=None, forced=()):
    """All reduced pipe dreams for the completion of v on the given grid.

    `cells` limits where optional crosses may sit; `forced` crosses are
    present in every dream.  Returns a sorted list.

    >>> enum_rpipes(Perm.tau(1), 2, 2)
    [PipeDream(2, 2, [(1, 1)])]
    >>> enum_rpipes(Perm.identity(), 3, 2)
    [PipeDream(3, 2, [])]
    """
    target = _target_of(v)
    forced = frozenset(forced)
    order = _reading_cells(rows, cols, cells, forced, target)
    if not all(f in order for f in forced):
        return []
    goal = target.length()
    found = []

    def search(idx, u, taken, remaining):
        need = goal - u.length()
        if need > remaining:
            return
        if idx == len(order):
            if need == 0:
                found.append(PipeDream(rows, cols, taken))
            return
        cell = order[idx]
        letter = cell[0] + cell[1] - 1
        if cell not in forced:
            search(idx + 1, u, taken, remaining - 1)
        if u(letter) < u(letter + 1):
            u2 = u.times_tau(letter)
            if u2.bruhat_leq(target):
                search(idx + 1, u2, taken + (cell,), remaining - 1)

    search(0, Perm.identity(), (), len(order))
    return sorted(found)


def enum_pipes(v, rows, cols, cells=None, forced=()):
    """All pipe dreams with Demazure product the completion of v.

    Grown as a closure: start from the reduced dreams and repeatedly add
    single crosses that leave the product unchanged.

    >>> enum_pipes(Perm.identity(), 1, 1)
    [PipeDream(1, 1, [])]
    >>> enum_pipes(Perm.tau(1), 2, 2)
    [PipeDream(2, 2, [(1, 1)])]
    """
    target = _target_of(v)
    forced = frozenset(forced)
    order = _reading_cells(rows, cols, cells, forced, target)
    seen = set(enum_rpipes(v, rows, cols, cells, forced))
    queue = list(seen)
    while queue:
        P = queue.pop()
        for cell in order:
            if cell in P:
                continue
            P2 = P.with_cross(cell)
            if P2 not in seen and P2.demazure() == target:
                seen.add(P2)
                queue.append(P2)
    return sorted(seen)


def enum_rpipes_by_subsets(v, rows, cols, cells=None, forced=()):
    """Subset brute force over the whole grid; the enumeration oracle."""
    return [P for P in enum_pipes_by_subsets(v, rows, cols, cells, forced)
            if len(P) == _target_of(v).length()]


def enum_pipes_by_subsets(v, rows, cols, cells=None, forced=()):
    """All dreams with the right product, checked subset by subset.

    Refuses more than `capacity_limit()` free cells.
    """
    target = _target_of(v)
    forced = frozenset(forced)
    allowed = set(cells if cells is not None else _grid_cells(rows, cols))
    free = [cell for cell in _grid_cells(rows, cols)
            if cell in allowed and cell not in forced]
    if len(free) > capacity_limit():
        raise CapacityError(
            "%d free cells exceeds the exhaustive budget of %d"
            % (len(free), capacity_limit())
        )
    order = [(cell, cell[0] + cell[1] - 1)
             for cell in _grid_cells(rows, cols)
             if cell in forced or cell in allowed]
    m = rows + cols
    if target.size > m:
        return []
    goal = np.array(target.one_line(m), dtype=np.int16)
    index = {cell: j for j, cell in enumerate(free)}
    total = 1 << len(free)
    chunk = 1 << 18
    found = []
    for start in range(0, total, chunk):
        bits = np.arange(start, min(total, start + chunk), dtype=np.int64)
        line = np.tile(np.arange(1, m + 1, dtype=np.int16), (len(bits), 1))
        for cell, i in order:
            a, b = line[:, i - 1], line[:, i]
            mask = a < b
            if cell not in forced:
                mask &= ((bits >> index[cell]) & 1).astype(bool)
            swapped = a[mask].copy()
            a[mask] = b[mask]
            b[mask] = swapped
        for hit in bits[np.all(line == goal, axis=1)]:
            extra = {cell for cell, j in index.items() if (int(hit) >> j) & 1}
            found.append(PipeDream(rows, cols, forced | extra))
    return sorted(found)


# --- rendering ---------------------------------------------------------


def render_ascii(P):
    """One text row per grid row: `+` for a cross, `.` for an elbow."""
    return "\n".join(
        "".join("+" if (r, c) in P.crosses else "." for c in range(1, P.cols + 1))
        for r in range(1, P.rows + 1)
    )


def render_svg(P, cell=24):
    """Stand-alone SVG drawing: straight pipes at crosses, arcs at elbows."""
    width, height = P.cols * cell, P.rows * cell
    half = cell / 2
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" width="%d" height="%d" '
        'viewBox="0 0 %d %d">' % (width, height, width, height),
        '<rect width="%d" height="%d" fill="white"/>' % (width, height),
    ]
    for r in range(1, P.rows + 1):
        for c in range(1, P.cols + 1):
            x, y = (c - 1) * cell, (r - 1) * cell
            parts.append(
                '<rect x="%g" y="%g" width="%g" height="%g" fill="none" '
                'stroke="#ccc" stroke-width="0.5"/>' % (x, y, cell, cell)
            )
            if (r, c) in P.crosses:
                parts.append(
                    '<path d="M %g %g H %g M %g %g V %g" stroke="black" '
                    'fill="none" stroke-width="2"/>'
                    % (x, y + half, x + cell, x + half, y, y + cell)
                )
            else:
                parts.append(
                    '<path d="M %g %g Q %g %g %g %g M %g %g Q %g %g %g %g" '
                    'stroke="black" fill="none" stroke-width="2"/>'
                    % (
                        x, y + half, x + half, y + half, x + half, y,
                        x + half, y + cell, x + half, y + half, x + cell, y + half,
                    )
                )
    parts.append("</svg>")
    return "\n".join(parts)


__all__ = [
    "CapacityError",
    "PipeDream",
    "capacity_limit",
    "enum_pipes",
    "enum_pipes_by_subsets",
    "enum_rpipes",
    "enum_rpipes_by_subsets",
    "nw_restricted",
    "render_ascii",
    "render_svg",
]
