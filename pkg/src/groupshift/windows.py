"""Ball windows on tree-like Cayley graphs (free groups and Z).

A window is the tuple of symbols a configuration shows on ``g * ball(n)``,
laid out in cell order. Two windows are compatible along a letter ``s`` when
they agree on the cells shared by ``g * ball(n)`` and ``g * s * ball(n)``.
On a tree, a family of windows in which every member has a compatible
partner in every direction is exactly the window set of some configuration,
so the greatest such subfamily decides emptiness.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .errors import InputError
from .groups import Group


class WindowGeometry:
    def __init__(self, group: Group, n: int):
        if not group.is_tree:
            raise InputError(f"{group!r} does not have a tree Cayley graph")
        self.group, self.n = group, n
        self.cells = sorted(group.ball(n), key=group.cell_key)
        self.pos = {w: i for i, w in enumerate(self.cells)}
        self.directions = list(group.gens.letters)
        elems = [group._elem_of(q) for q in self.cells]
        epos = {e: i for i, e in enumerate(elems)}
        self.out_idx, self.in_idx = [], []
        for s in self.directions:
            le = group._letter(s)
            out, inn = [], []
            for i, e in enumerate(elems):
                j = epos.get(group._mul(le, e))
                if j is not None:
                    out.append(j)
                    inn.append(i)
            self.out_idx.append(out)
            self.in_idx.append(inn)

    def __len__(self):
        return len(self.cells)

    def keys(self, windows: Sequence[tuple]):
        """Integer overlap keys: ``out[d, i] == in[d, j]`` iff window j fits one step along d from window i."""
        m, nd = len(windows), len(self.directions)
        out = np.zeros((nd, m), np.int64)
        inn = np.zeros((nd, m), np.int64)
        n_keys = 1
        for d in range(nd):
            ids = {}
            oi, ii = self.out_idx[d], self.in_idx[d]
            for i, w in enumerate(windows):
                out[d, i] = ids.setdefault(tuple(w[k] for k in oi), len(ids))
            for i, w in enumerate(windows):
                inn[d, i] = ids.setdefault(tuple(w[k] for k in ii), len(ids))
            n_keys = max(n_keys, len(ids))
        return out, inn, n_keys

    def closure(self, windows: Sequence[tuple], alive=None, keys=None) -> np.ndarray:
        """Survivor mask of the greatest compatible subfamily."""
        m = len(windows)
        if m == 0:
            return np.zeros(0, np.bool_)
        out, inn, n_keys = keys if keys is not None else self.keys(windows)
        alive0 = np.ones(m, np.bool_) if alive is None else np.asarray(alive, np.bool_)
        return kernels.prune_windows(alive0, out, inn, np.int64(n_keys))

    def pruning_rounds(self, windows: Sequence[tuple]) -> tuple:
        """Synchronous pruning, vectorized; returns (survivor mask, number of rounds that removed something)."""
        m = len(windows)
        alive = np.ones(m, np.bool_)
        if m == 0:
            return alive, 0
        out, inn, n_keys = self.keys(windows)
        rounds = 0
        while True:
            keep = alive.copy()
            for d in range(len(self.directions)):
                counts = np.bincount(inn[d][alive], minlength=n_keys)
                keep &= counts[out[d]] > 0
            if keep.sum() == alive.sum():
                return alive, rounds
            alive = keep
            rounds += 1

    def compatible(self, windows: Sequence[tuple], keys=None) -> list:
        """Per direction, ``compat[d][i]`` = indices j compatible one step along d from i."""
        out, inn, _ = keys if keys is not None else self.keys(windows)
        res = []
        for d in range(len(self.directions)):
            by_key = {}
            for j in range(len(windows)):
                by_key.setdefault(int(inn[d, j]), []).append(j)
            res.append([by_key.get(int(out[d, i]), []) for i in range(len(windows))])
        return res

    def restriction(self, smaller: "WindowGeometry") -> list:
        """Positions in this geometry of the cells of a smaller ball."""
        return [self.pos[w] for w in smaller.cells]

    def extension_plan(self, smaller: "WindowGeometry") -> list:
        """For each cell: ('old', pos) if inside the smaller ball, else ('dir', d, pos) read from the neighbor window."""
        plan = []
        dir_of = {s: d for d, s in enumerate(self.directions)}
        for w in self.cells:
            if w in smaller.pos:
                plan.append((-1, smaller.pos[w]))
            else:
                plan.append((dir_of[w[0]], smaller.pos[w[1:]]))
        return plan


@lru_cache(maxsize=512)
def window_geometry(group: Group, n: int) -> WindowGeometry:
    """Shared, cached geometry; treat the result as read-only."""
    return WindowGeometry(group, n)


def extend_windows(plan, P: tuple, neighbours: Sequence[tuple]) -> tuple:
    return tuple(P[k] if d < 0 else neighbours[d][k] for d, k in plan)
