"""Emptiness certificates and periodic points via finite quotients.

Exact on tree-like groups (Z and free groups), exact on finite groups,
semi-decision elsewhere: periodic points are searched on quotients
(Z/k)^d and exhausted patches certify emptiness, otherwise the verdict is
``unknown``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InputError
from .groups import (DirectProduct, FiniteGroup, FreeAbelianGroup, FreeGroup, Group, Homomorphism,
                     cyclic_group)
from .subshift import Constraints, LazyConfiguration, Sft, admissible_patches, has_admissible, verify_configuration
from .windows import window_geometry

EMPTY = "empty"
NONEMPTY_PERIODIC = "nonempty_periodic"
NONEMPTY = "nonempty"
UNKNOWN = "unknown"

DEFAULT_NODE_BUDGET = 2_000_000


def _torus(k: int, bases) -> Group:
    """(Z/k)^d as iterated direct products of cyclic groups named after ``bases``."""
    groups = [cyclic_group(k, letter=b) for b in bases]
    if not groups:
        return cyclic_group(1)
    K = groups[0]
    for g in groups[1:]:
        K = DirectProduct(K, g)
    return K


def _abelian_images(G: Group, k: int):
    bases = list(G.gens.bases)
    K = _torus(k, bases)
    imgs = {}
    for i, b in enumerate(bases):
        e = [0] * len(bases)
        e[i] = 1 % k
        imgs[b] = _torus_word(K, e)
    return K, imgs


def _torus_word(K: Group, vec) -> tuple:
    """Word in the iterated product for an exponent vector."""
    elem = _torus_elem(K, list(vec))
    return K._to_word(elem)


def _torus_elem(K, vec):
    if isinstance(K, DirectProduct):
        return (_torus_elem(K.left, vec[:-1]), _torus_elem(K.right, vec[-1:]))
    return vec[0] % K.order if vec else 0


def finite_quotient(G: Group, k: int) -> tuple:
    """Deterministic finite quotient ``(K, phi)`` of ``G`` at modulus ``k``.

    Free abelian and free groups map onto (Z/k)^d through their exponent sums,
    finite groups map identically, products factor componentwise.
    """
    if k < 1:
        raise InputError("quotient modulus must be >= 1")
    if isinstance(G, FiniteGroup):
        return G, Homomorphism.identity(G)
    if isinstance(G, (FreeAbelianGroup, FreeGroup)):
        K, imgs = _abelian_images(G, k)
        return K, Homomorphism(G, K, imgs)
    if isinstance(G, DirectProduct):
        KL, phiL = finite_quotient(G.left, k)
        KR, phiR = finite_quotient(G.right, k)
        K = DirectProduct(KL, KR)
        imgs = {}
        for x in G.left.gens.letters:
            imgs[G.embed_left((x,))[0]] = K._to_word((phiL._img[x], KR._identity))
        for x in G.right.gens.letters:
            imgs[G.embed_right((x,))[0]] = K._to_word((KL._identity, phiR._img[x]))
        return K, Homomorphism(G, K, imgs)
    raise InputError(f"no finite quotients for {G!r}")


def quotient_cells(K: Group) -> list:
    """All elements of a finite group, in cell order."""
    elems = K.ball_elements(10 ** 9)
    return sorted((K._to_word(e) for e in elems), key=K.cell_key)


def pullback_of_finite(G: Group, K: Group, phi: Homomorphism, y0: dict, alphabet) -> LazyConfiguration:
    """The configuration g -> y0(phi(g)); has a finite shift orbit."""
    cells = quotient_cells(K)
    missing = [c for c in cells if c not in y0]
    if missing:
        raise InputError(f"y0 is not total on the quotient (missing {K.gens.render(missing[0])!r})")
    return LazyConfiguration(G, alphabet, lambda w: y0[K._to_word(phi._apply_elem(w))], "finite-orbit point")


def torus_search(x: Sft, k: int, max_nodes: int = DEFAULT_NODE_BUDGET):
    """Lexicographically first configuration on the quotient at modulus k whose pullback lies in x.

    Returns ``(y0 dict or None, complete)``.
    """
    K, phi = finite_quotient(x.group, k)
    cells = quotient_cells(K)
    elems = [K._elem_of(w) for w in cells]
    con = Constraints.build(x, K, elems, lambda w: phi._apply_elem(w), K._to_word)
    out, found, complete = con.search(limit=1, max_nodes=max_nodes, store=1)
    if found:
        return {w: x.alphabet[i] for w, i in zip(cells, out[0])}, True
    return None, complete


@dataclass
class EmptinessCertificate:
    verdict: str
    evidence: dict = field(default_factory=dict)
    witness: LazyConfiguration | None = field(default=None, repr=False, compare=False)

    @property
    def is_empty(self) -> bool:
        return self.verdict == EMPTY

    @property
    def is_nonempty(self) -> bool:
        return self.verdict in (NONEMPTY, NONEMPTY_PERIODIC)

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "evidence": self.evidence}

    def recheck(self, x: Sft) -> bool:
        """Re-verify the evidence independently of how it was produced."""
        if self.verdict == EMPTY:
            return has_admissible(x, self.evidence["radius"]) is False
        if self.verdict == NONEMPTY_PERIODIC:
            c = periodic_witness(x, self.evidence)
            K, _ = finite_quotient(x.group, self.evidence["modulus"])
            values = self.evidence["symbols"]
            cells = quotient_cells(K)
            y0 = dict(zip(cells, values))
            on_quotient = _quotient_ok(x, self.evidence["modulus"], y0)
            radius = self.evidence["modulus"] + x.window_radius
            return on_quotient and verify_configuration(x, c, radius).ok
        if self.verdict == NONEMPTY:
            r = self.evidence["radius"]
            geo = window_geometry(x.group, r)
            wins = [p.symbols for p in admissible_patches(x, r)]
            return bool(geo.closure(wins).any())
        return True


def _quotient_ok(x: Sft, k: int, y0: dict) -> bool:
    K, phi = finite_quotient(x.group, k)
    cells = quotient_cells(K)
    elems = [K._elem_of(w) for w in cells]
    con = Constraints.build(x, K, elems, lambda w: phi._apply_elem(w), K._to_word)
    return con.first_violation([x.symbol_index[y0[w]] for w in cells]) < 0


def periodic_witness(x: Sft, evidence: dict) -> LazyConfiguration:
    K, phi = finite_quotient(x.group, evidence["modulus"])
    cells = quotient_cells(K)
    return pullback_of_finite(x.group, K, phi, dict(zip(cells, evidence["symbols"])), x.alphabet)


def _periodic_certificate(x: Sft, k: int, y0: dict) -> EmptinessCertificate:
    K, phi = finite_quotient(x.group, k)
    cells = quotient_cells(K)
    ev = {"modulus": k, "quotient_order": len(cells), "symbols": [y0[w] for w in cells]}
    if isinstance(x.group, (FreeAbelianGroup, FreeGroup)):
        ev["period"] = [k] * len(x.group.gens.bases)
    witness = pullback_of_finite(x.group, K, phi, y0, x.alphabet)
    return EmptinessCertificate(NONEMPTY_PERIODIC, ev, witness)


def _is_line(G: Group) -> bool:
    return G.is_tree and len(G.gens.bases) == 1


def tree_survivors(x: Sft):
    """Window radius, geometry and admissible windows that the tree pruning starts from."""
    r = max(x.window_radius, 1)
    geo = window_geometry(x.group, r)
    wins = [p.symbols for p in admissible_patches(x, r)]
    return r, geo, wins


def emptiness(x: Sft, budget: int = 8, max_nodes: int = DEFAULT_NODE_BUDGET) -> EmptinessCertificate:
    """Decide (or semi-decide) whether ``x`` has a configuration.

    ``budget`` bounds the torus modulus and the exhausted radius on groups
    without an exact oracle. Unknown is returned as a value, never raised.
    """
    G = x.group
    if G.is_tree:
        r, geo, wins = tree_survivors(x)
        alive, rounds = geo.pruning_rounds(wins)
        if not alive.any():
            return EmptinessCertificate(EMPTY, {"radius": r + rounds})
        n_alive = int(alive.sum())
        if _is_line(G):
            for k in range(1, n_alive + 1):
                y0, _ = torus_search(x, k, max_nodes=0)
                if y0 is not None:
                    return _periodic_certificate(x, k, y0)
            raise AssertionError("a surviving window family on Z always closes into a cycle")
        for k in range(1, min(budget, 3) + 1):
            y0, _ = torus_search(x, k, max_nodes=max_nodes)
            if y0 is not None:
                return _periodic_certificate(x, k, y0)
        return EmptinessCertificate(NONEMPTY, {"radius": r, "surviving_windows": n_alive})
    if isinstance(G, FiniteGroup):
        y0, _ = torus_search(x, 1, max_nodes=0)
        if y0 is not None:
            return _periodic_certificate(x, 1, y0)
        diam = max(len(w) for w in quotient_cells(G))
        return EmptinessCertificate(EMPTY, {"radius": max(diam, x.window_radius)})
    for k in range(1, budget + 1):
        y0, _ = torus_search(x, k, max_nodes=max_nodes)
        if y0 is not None:
            return _periodic_certificate(x, k, y0)
        R = max(k, x.window_radius)
        if has_admissible(x, R, max_nodes=max_nodes) is False:
            return EmptinessCertificate(EMPTY, {"radius": R})
    return EmptinessCertificate(UNKNOWN, {"radius": budget, "modulus": budget})


def periodic_point_search(x: Sft, max_quotient: int = 8, max_nodes: int = DEFAULT_NODE_BUDGET):
    """A finite-orbit configuration of ``x`` pulled back from a quotient of size parameter <= max_quotient.

    On Z the window digraph is pruned first, so an empty subshift returns
    None without any quotient search.
    """
    G = x.group
    if not isinstance(G, (FreeGroup, FreeAbelianGroup, FiniteGroup, DirectProduct)):
        raise InputError(f"periodic point search does not support {G!r}")
    if _is_line(G):
        r, geo, wins = tree_survivors(x)
        alive = geo.closure(wins)
        if not alive.any():
            return None
        max_quotient = min(max_quotient, int(alive.sum()))
    if isinstance(G, FiniteGroup):
        max_quotient = 1
    for k in range(1, max_quotient + 1):
        y0, _ = torus_search(x, k, max_nodes=max_nodes)
        if y0 is not None:
            return _periodic_certificate(x, k, y0).witness
    return None
