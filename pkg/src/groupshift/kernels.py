"""Hot loops: constrained backtracking, constraint scanning and window pruning.

Every kernel works on plain integer/boolean arrays so it can be compiled by
numba or executed as-is. A *constraint* is a placed forbidden pattern: up to
``kmax`` cell indices with one boolean mask row per cell; it is violated when
every listed cell holds a symbol allowed by its mask row.
"""
import numpy as np

from ._accel import jit


@jit
def search_assignments(domains, trig_ptr, trig_con, con_cells, con_len, con_masks,
                       limit, max_nodes, out):
    """Enumerate assignments of ``domains.shape[0]`` cells in lexicographic order.

    Constraints are checked as soon as their last cell (``trig_ptr``/``trig_con``
    CSR lists, keyed by that cell) is assigned. Up to ``out.shape[0]`` solutions
    are written to ``out``. Search stops after ``limit`` solutions (``limit <= 0``
    means no limit) or after ``max_nodes`` placements (``max_nodes <= 0`` means
    unbounded). Returns ``(found, complete)`` where ``complete`` is true iff the
    whole search space was exhausted.
    """
    n_cells, n_sym = domains.shape
    assign = np.full(n_cells, -1, np.int64)
    found = 0
    nodes = 0
    i = 0
    while i >= 0:
        s = assign[i] + 1
        placed = False
        while s < n_sym:
            if domains[i, s]:
                assign[i] = s
                nodes += 1
                ok = True
                for t in range(trig_ptr[i], trig_ptr[i + 1]):
                    c = trig_con[t]
                    hit = True
                    for j in range(con_len[c]):
                        if not con_masks[c, j, assign[con_cells[c, j]]]:
                            hit = False
                            break
                    if hit:
                        ok = False
                        break
                if ok:
                    placed = True
                    break
            s += 1
        if not placed:
            assign[i] = -1
            i -= 1
        elif i == n_cells - 1:
            if found < out.shape[0]:
                for j in range(n_cells):
                    out[found, j] = assign[j]
            found += 1
            if limit > 0 and found >= limit:
                return found, False
        else:
            i += 1
            assign[i] = -1
        if max_nodes > 0 and nodes >= max_nodes:
            return found, False
    return found, True


@jit
def arc_consistency(domains, pair_i, pair_j, rel):
    """Shrink ``domains`` in place until every value has a partner across every binary relation.

    ``rel[p, v, u]`` says whether cell ``pair_i[p]`` may hold ``v`` while
    ``pair_j[p]`` holds ``u``; both orientations of each pair are listed. Only
    values belonging to no solution are removed. Returns False if some cell
    is left with an empty domain.
    """
    n_sym = domains.shape[1]
    changed = True
    while changed:
        changed = False
        for p in range(pair_i.shape[0]):
            i = pair_i[p]
            j = pair_j[p]
            for v in range(n_sym):
                if not domains[i, v]:
                    continue
                ok = False
                for u in range(n_sym):
                    if domains[j, u] and rel[p, v, u]:
                        ok = True
                        break
                if not ok:
                    domains[i, v] = False
                    changed = True
    for i in range(domains.shape[0]):
        if not domains[i].any():
            return False
    return True


@jit
def first_violation(assign, con_cells, con_len, con_masks):
    """Index of the first constraint matched by ``assign``, or -1."""
    for c in range(con_len.shape[0]):
        hit = True
        for j in range(con_len[c]):
            if not con_masks[c, j, assign[con_cells[c, j]]]:
                hit = False
                break
        if hit:
            return c
    return -1


@jit
def prune_windows(alive0, out_keys, in_keys, n_keys):
    """Greatest fixed point of window pruning on a tree-like Cayley graph.

    Window ``i`` survives iff for every direction ``d`` some surviving window
    ``j`` has ``in_keys[d, j] == out_keys[d, i]`` (the two windows agree on the
    cells they share when ``j`` sits one step along ``d``).
    """
    n_dirs, m = out_keys.shape
    alive = alive0.copy()
    counts = np.zeros((n_dirs, n_keys), np.int64)
    for d in range(n_dirs):
        for j in range(m):
            if alive[j]:
                counts[d, in_keys[d, j]] += 1
    # windows bucketed by their out key, per direction
    order = np.empty((n_dirs, m), np.int64)
    ptr = np.zeros((n_dirs, n_keys + 1), np.int64)
    for d in range(n_dirs):
        for i in range(m):
            ptr[d, out_keys[d, i] + 1] += 1
        for k in range(n_keys):
            ptr[d, k + 1] += ptr[d, k]
        fill = ptr[d, :n_keys].copy()
        for i in range(m):
            k = out_keys[d, i]
            order[d, fill[k]] = i
            fill[k] += 1
    stack = np.empty(m, np.int64)
    top = 0
    for i in range(m):
        if alive[i]:
            for d in range(n_dirs):
                if counts[d, out_keys[d, i]] == 0:
                    alive[i] = False
                    stack[top] = i
                    top += 1
                    break
    while top > 0:
        top -= 1
        j = stack[top]
        for d in range(n_dirs):
            k = in_keys[d, j]
            counts[d, k] -= 1
            if counts[d, k] == 0:
                for t in range(ptr[d, k], ptr[d, k + 1]):
                    i = order[d, t]
                    if alive[i]:
                        alive[i] = False
                        stack[top] = i
                        top += 1
    return alive
