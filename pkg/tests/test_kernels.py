import os
import random
import subprocess
import sys

import numpy as np
import pytest

from groupshift import FreeGroup, Pattern, Sft, count_admissible, kernels
from groupshift.subshift import admissible_patches
from groupshift.windows import window_geometry

import helpers as h


def random_sft(rng, G):
    forb = []
    for _ in range(rng.randint(1, 4)):
        cells = {(): rng.choice("012")}
        for _ in range(rng.randint(1, 2)):
            cells[(rng.choice(G.gens.letters),)] = rng.choice("012")
        forb.append(Pattern.make(G, cells))
    return Sft(G, "012", forb)


def search_args(x, n, limit=0):
    con = x.compile(x.cells(n))
    doms = np.ones((con.n_cells, len(x.alphabet)), np.bool_)
    out = np.zeros((max(limit, 1), con.n_cells), np.int64)
    return con, (doms, con.trig_ptr, con.trig_con, con.con_cells, con.con_len, con.con_masks,
                 np.int64(limit), np.int64(0), out)


@pytest.mark.parametrize("seed", range(6))
def test_search_kernel_matches_python_body(seed):
    rng = random.Random(seed)
    x = random_sft(rng, h.Z2 if seed % 2 else h.F2)
    _, fast = search_args(x, 1, 50)
    _, slow = search_args(x, 1, 50)
    r_fast = kernels.search_assignments(*fast)
    r_slow = kernels.search_assignments.py_func(*slow)
    assert tuple(r_fast) == tuple(r_slow)
    assert np.array_equal(fast[-1], slow[-1])


@pytest.mark.parametrize("seed", range(6))
def test_first_violation_matches_python_body(seed):
    rng = random.Random(seed)
    x = random_sft(rng, h.Z2)
    con = x.compile(x.cells(2))
    for _ in range(20):
        assign = np.array([rng.randrange(3) for _ in range(con.n_cells)], np.int64)
        args = (assign, con.con_cells, con.con_len, con.con_masks)
        if len(con.con_len):
            assert kernels.first_violation(*args) == kernels.first_violation.py_func(*args)


@pytest.mark.parametrize("seed", range(6))
def test_arc_consistency_matches_python_body(seed):
    rng = np.random.default_rng(seed)
    n_cells, n_sym, n_pairs = 6, 3, 8
    pair_i = rng.integers(0, n_cells, n_pairs)
    pair_j = (pair_i + 1 + rng.integers(0, n_cells - 1, n_pairs)) % n_cells
    rel = rng.random((n_pairs, n_sym, n_sym)) < 0.5
    d_fast = rng.random((n_cells, n_sym)) < 0.8
    d_slow = d_fast.copy()
    ok_fast = kernels.arc_consistency(d_fast, pair_i, pair_j, rel)
    ok_slow = kernels.arc_consistency.py_func(d_slow, pair_i, pair_j, rel)
    assert ok_fast == ok_slow
    assert np.array_equal(d_fast, d_slow)


def test_arc_consistency_never_removes_solutions():
    rng = random.Random(4)
    for _ in range(20):
        x = random_sft(rng, h.F2)
        con = x.compile(x.cells(1))
        doms = np.ones((con.n_cells, len(x.alphabet)), np.bool_)
        pruned = con.propagate(doms)
        sols = [p.symbols for p in admissible_patches(x, 1)]
        if pruned is None:
            assert not sols
            continue
        idx = {a: i for i, a in enumerate(x.alphabet)}
        for s in sols:
            assert all(pruned[c, idx[a]] for c, a in enumerate(s))


def test_prune_kernel_matches_python_body():
    G = FreeGroup("ab")
    x = Sft(G, "012", [Pattern.make(G, {(): "0", (s,): "0"}) for s in "ab"]
            + [Pattern.make(G, {(): "1", ("a",): "2"})])
    geo = window_geometry(G, 1)
    wins = [p.symbols for p in admissible_patches(x, 1)]
    out, inn, n_keys = geo.keys(wins)
    args = (np.ones(len(wins), np.bool_), out, inn, np.int64(n_keys))
    assert np.array_equal(kernels.prune_windows(*args), kernels.prune_windows.py_func(*args))


def test_disable_flag_gives_same_results():
    code = ("import sys; sys.path.insert(0, 'tests'); import helpers as h; "
            "from groupshift import count_admissible; from groupshift._accel import USE_NUMBA; "
            "print(USE_NUMBA, count_admissible(h.golden(h.Z2), 2), count_admissible(h.golden(h.F2), 2))")
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    env = dict(os.environ, GROUPSHIFT_DISABLE_NUMBA="1")
    slow = subprocess.run([sys.executable, "-c", code], env=env, cwd=root, capture_output=True, text=True, check=True)
    flag, *counts = slow.stdout.split()
    assert flag == "False"
    assert [int(c) for c in counts] == [count_admissible(h.golden(h.Z2), 2), count_admissible(h.golden(h.F2), 2)]
