"""Constructing points of SFTs: greedy tree colouring, minimal-window chains, finite-orbit points."""
from __future__ import annotations

import threading
from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence

import numpy as np

from .certify import emptiness, pullback_of_finite, quotient_cells
from .errors import EmptySubshiftError, InputError, OracleUnknownError
from .groups import FiniteGroup, FreeGroup, FreeAbelianGroup, Group, Homomorphism
from .subshift import LazyConfiguration, Pattern, Sft, admissible_patches
from .windows import WindowGeometry, extend_windows, window_geometry


def _is_free(G: Group) -> bool:
    return isinstance(G, FreeGroup) or (isinstance(G, FreeAbelianGroup) and G.rank == 1)


class NearestNeighborTreeSft:
    """An SFT on a free group given by allowed symbol pairs along each generator.

    ``allowed[s]`` holds the pairs ``(a, b)`` that may appear at ``g`` and
    ``g*s``. Missing letters allow everything. The relation of an inverse
    letter is forced to be the transpose of its partner's.
    """

    def __init__(self, group: Group, alphabet: Sequence, allowed: Mapping[str, object]):
        if not _is_free(group):
            raise InputError(f"{group!r} is not a free group")
        self.group = group
        self.alphabet = tuple(alphabet)
        sym = set(self.alphabet)
        everything = {(a, b) for a in self.alphabet for b in self.alphabet}
        rel = {}
        for s in group.gens.letters:
            pairs = allowed.get(s)
            if pairs is None:
                rel[s] = set(everything)
                continue
            pairs = {tuple(p) for p in pairs}
            bad = [p for p in pairs if p[0] not in sym or p[1] not in sym]
            if bad:
                raise InputError(f"pair {bad[0]!r} uses symbols outside the alphabet")
            rel[s] = pairs
        self.allowed = {}
        for s in group.gens.letters:
            t = group.gens.inv(s)
            self.allowed[s] = frozenset(rel[s] & {(b, a) for a, b in rel[t]})

    def __repr__(self):
        return f"NearestNeighborTreeSft({self.group!r}, |A|={len(self.alphabet)})"

    @classmethod
    def from_sft(cls, x: Sft) -> "NearestNeighborTreeSft":
        """Read off pair constraints from an SFT whose forbidden supports are {1} or {1, s}."""
        G = x.group
        allowed = {s: {(a, b) for a in x.alphabet for b in x.alphabet} for s in G.gens.letters}
        dead = set()
        for p in x.forbidden:
            for q in p.expand():
                d = q.as_dict()
                if set(d) == {()}:
                    dead.add(d[()])
                elif len(d) == 2 and () in d:
                    (w,) = [c for c in d if c]
                    if len(w) != 1:
                        raise InputError("pattern support is not of the form {1, s}; recode with nn_recode")
                    allowed[w[0]].discard((d[()], d[w]))
                else:
                    raise InputError("pattern support is not of the form {1, s}; recode with nn_recode")
        if dead:
            for s in allowed:
                allowed[s] = {(a, b) for a, b in allowed[s] if a not in dead and b not in dead}
        return cls(G, x.alphabet, allowed)

    def to_sft(self) -> Sft:
        forb = []
        for s in self.group.gens.bases:
            for a in self.alphabet:
                for b in self.alphabet:
                    if (a, b) not in self.allowed[s]:
                        forb.append(Pattern.make(self.group, {(): a, (s,): b}))
        return Sft(self.group, self.alphabet, forb)


def prune_alive(x: NearestNeighborTreeSft) -> list:
    """Symbols that survive repeated removal of symbols lacking a partner in some direction."""
    alive = set(x.alphabet)
    changed = True
    while changed:
        changed = False
        for a in list(alive):
            for s in x.group.gens.letters:
                if not any((a, b) in x.allowed[s] for b in alive):
                    alive.discard(a)
                    changed = True
                    break
    return [a for a in x.alphabet if a in alive]


def greedy_tree_point(x: NearestNeighborTreeSft) -> LazyConfiguration:
    """Colour the identity with the least surviving symbol, then each new vertex with the least compatible one."""
    alive = prune_alive(x)
    if not alive:
        raise EmptySubshiftError("no symbol survives pruning; the subshift is empty")
    step = {}
    for s in x.group.gens.letters:
        for a in alive:
            step[a, s] = next(b for b in alive if (a, b) in x.allowed[s])

    def colour(w):
        a = alive[0]
        for s in w:
            a = step[a, s]
        return a

    return LazyConfiguration(x.group, x.alphabet, colour, "greedy tree point")


def greedy_point(x: Sft) -> LazyConfiguration:
    """Greedy tree point of any free-group SFT, recoding by windows unless it is already nearest-neighbour."""
    try:
        nn = NearestNeighborTreeSft.from_sft(x)
    except InputError:
        return _greedy_window_point(x)
    return greedy_tree_point(nn)


def _greedy_window_point(x: Sft) -> LazyConfiguration:
    """Same colouring as the greedy point of ``nn_recode(x)``, without materializing the pair relation."""
    if not _is_free(x.group):
        raise InputError(f"{x.group!r} is not a free group")
    r = x.window_radius
    geo = window_geometry(x.group, r)
    wins = [p.symbols for p in admissible_patches(x, r)]
    keys = geo.keys(wins)
    alive = geo.closure(wins, keys=keys)
    if not alive.any():
        raise EmptySubshiftError("no window survives pruning; the subshift is empty")
    out, inn, _ = keys
    # least surviving window entering each overlap key, per direction
    first = []
    for d in range(len(geo.directions)):
        best = {}
        for j in np.flatnonzero(alive):
            best.setdefault(int(inn[d, j]), int(j))
        first.append(best)
    dir_of = {s: d for d, s in enumerate(geo.directions)}
    start = int(np.flatnonzero(alive)[0])
    center = geo.pos[()]

    def colour(w):
        i = start
        for s in w:
            d = dir_of[s]
            i = first[d][int(out[d, i])]
        return wins[i][center]

    return LazyConfiguration(x.group, x.alphabet, colour, "greedy point")


@dataclass
class Recoding:
    """A nearest-neighbour recoding of a free-group SFT by its radius-r windows."""

    source: Sft
    radius: int
    geometry: WindowGeometry
    tree_sft: NearestNeighborTreeSft
    center: int

    def decode(self, c: LazyConfiguration) -> LazyConfiguration:
        return c.map(lambda P: P[self.center], self.source.alphabet, "decoded recoding")


def nn_recode(x: Sft, radius: int | None = None) -> Recoding:
    """Symbols become admissible ball windows; pairs are allowed when the windows overlap consistently."""
    if not _is_free(x.group):
        raise InputError(f"{x.group!r} is not a free group")
    r = x.window_radius if radius is None else radius
    if r < x.window_radius:
        raise InputError(f"radius {r} is below the window radius {x.window_radius}")
    geo = window_geometry(x.group, r)
    wins = [p.symbols for p in admissible_patches(x, r)]
    out, inn, _ = geo.keys(wins)
    allowed = {}
    for d, s in enumerate(geo.directions):
        by_key = {}
        for j, Q in enumerate(wins):
            by_key.setdefault(int(inn[d, j]), []).append(Q)
        allowed[s] = {(P, Q) for i, P in enumerate(wins) for Q in by_key.get(int(out[d, i]), [])}
    tree = NearestNeighborTreeSft(x.group, wins, allowed)
    return Recoding(x, r, geo, tree, geo.pos[()])


# -- minimal allowed window sets ------------------------------------------------------


class TreeWindowOracle:
    """Exact nonemptiness of Y(L) on a tree group via the greatest compatible window family."""

    def __init__(self, geometry: WindowGeometry):
        self.geometry = geometry

    def __call__(self, windows: Sequence[tuple]) -> bool:
        return bool(self.geometry.closure(list(windows)).any())

    def prepare(self, windows: Sequence[tuple]) -> Callable[[np.ndarray], bool]:
        keys = self.geometry.keys(list(windows))
        return lambda mask: bool(self.geometry.closure(windows, alive=mask, keys=keys).any())


class SftWindowOracle:
    """Nonemptiness of Y(L) through the general emptiness procedure; may answer None."""

    def __init__(self, group: Group, alphabet: Sequence, n: int, budget: int = 6):
        self.group, self.alphabet, self.n, self.budget = group, tuple(alphabet), n, budget
        self.cells = sorted(group.ball(n), key=group.cell_key)

    def __call__(self, windows: Sequence[tuple]):
        keep = set(windows)
        forb = []
        for combo in np.ndindex(*([len(self.alphabet)] * len(self.cells))):
            w = tuple(self.alphabet[i] for i in combo)
            if w not in keep:
                forb.append(Pattern.make(self.group, dict(zip(self.cells, w))))
        cert = emptiness(Sft(self.group, self.alphabet, forb), budget=self.budget)
        if cert.verdict == "unknown":
            return None
        return cert.is_nonempty


def window_oracle(group: Group, alphabet: Sequence, n: int):
    if group.is_tree:
        return TreeWindowOracle(window_geometry(group, n))
    return SftWindowOracle(group, alphabet, n)


def _ask(oracle, windows):
    ans = oracle(windows)
    if ans is None:
        raise OracleUnknownError("the emptiness oracle could not decide an intermediate window set")
    return ans


def minimal_allowed_set(D: Sequence[tuple], oracle) -> list:
    """Inclusion-minimal L inside D with Y(L) nonempty.

    Windows are tried for removal in ascending order; a removal is kept when
    Y stays nonempty.
    """
    D = sorted(set(map(tuple, D)))
    if not D:
        raise EmptySubshiftError("Y of the empty window set is empty")
    if hasattr(oracle, "prepare"):
        test = oracle.prepare(D)
        mask = np.ones(len(D), np.bool_)
        if not test(mask):
            raise EmptySubshiftError("the given window set admits no configuration")
        for i in range(len(D)):
            mask[i] = False
            if not test(mask):
                mask[i] = True
        return [w for w, m in zip(D, mask) if m]
    if not _ask(oracle, D):
        raise EmptySubshiftError("the given window set admits no configuration")
    keep = list(D)
    for w in D:
        trial = [v for v in keep if v != w]
        if trial and _ask(oracle, trial):
            keep = trial
    return keep


@dataclass
class ChainLevel:
    radius: int
    geometry: WindowGeometry
    candidates: list
    allowed: list
    patch: tuple


@dataclass
class WindowChain:
    """Nested minimal window sets L_n and the lexicographically least patches p_n they force."""

    sft: Sft
    oracle_factory: Callable = None
    levels: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.sft.group.is_tree:
            raise InputError("window chains need a group with a tree Cayley graph (Z or a free group)")
        self._lock = threading.Lock()
        if self.oracle_factory is None:
            self.oracle_factory = lambda n: window_oracle(self.sft.group, self.sft.alphabet, n)
        self.base = max(self.sft.window_radius, 1)
        geo = window_geometry(self.sft.group, self.base)
        D = [p.symbols for p in admissible_patches(self.sft, self.base)]
        oracle = self.oracle_factory(self.base)
        if not D or not _ask(oracle, D):
            raise EmptySubshiftError("the subshift is empty")
        L = minimal_allowed_set(D, oracle)
        self.levels[self.base] = ChainLevel(self.base, geo, D, L, L[0])

    @property
    def radius(self) -> int:
        return max(self.levels)

    def _candidates(self, prev: ChainLevel, geo: WindowGeometry) -> list:
        """Radius-n windows all of whose radius-(n-1) sub-windows (centre and neighbours) lie in L_{n-1}."""
        comp = prev.geometry.compatible(prev.allowed)
        plan = geo.extension_plan(prev.geometry)
        nd = len(prev.geometry.directions)
        out = set()
        for i, P in enumerate(prev.allowed):
            choices = [[prev.allowed[j] for j in comp[d][i]] for d in range(nd)]
            if any(not c for c in choices):
                continue
            for combo in _product(choices):
                out.add(extend_windows(plan, P, combo))
        return sorted(out)

    def grow(self, n: int) -> ChainLevel:
        with self._lock:
            while self.radius < n:
                prev = self.levels[self.radius]
                m = prev.radius + 1
                geo = window_geometry(self.sft.group, m)
                D = self._candidates(prev, geo)
                L = minimal_allowed_set(D, self.oracle_factory(m))
                inner = geo.restriction(prev.geometry)
                ext = [w for w in L if tuple(w[k] for k in inner) == prev.patch]
                if not ext:
                    raise AssertionError("minimal window set failed to extend the previous patch")
                self.levels[m] = ChainLevel(m, geo, D, L, ext[0])
            return self.levels[max(n, self.base)]

    def allowed(self, n: int) -> list:
        return self.grow(n).allowed

    def patch(self, n: int) -> Pattern:
        lvl = self.grow(n)
        return Pattern(tuple(lvl.geometry.cells), tuple(lvl.patch))

    def coherent(self) -> bool:
        """Each window of L_n extends into L_{n+1}, and L_{n+1} restricts into L_n."""
        rs = sorted(self.levels)
        for a, b in zip(rs, rs[1:]):
            lo, hi = self.levels[a], self.levels[b]
            inner = hi.geometry.restriction(lo.geometry)
            restr = {tuple(w[k] for k in inner) for w in hi.allowed}
            if restr != set(lo.allowed):
                return False
        return True


def _product(choices):
    if not choices:
        yield ()
        return
    head, rest = choices[0], choices[1:]
    for h in head:
        for t in _product(rest):
            yield (h,) + t


def domino_guided_point(x: Sft, oracle_factory: Callable | None = None) -> LazyConfiguration:
    """Configuration read off the window chain; queries at word length n grow the chain to radius n."""
    chain = WindowChain(x, oracle_factory)

    def value(w):
        lvl = chain.grow(len(w))
        return lvl.patch[lvl.geometry.pos[w]]

    c = LazyConfiguration(x.group, x.alphabet, value, "domino-guided point")
    c.chain = chain
    return c


def finite_orbit_point(G: Group, K: Group, phi: Homomorphism, y0: Mapping, alphabet: Sequence | None = None
                       ) -> LazyConfiguration:
    """g -> y0(phi(g)). Keys of y0 are words in K, or element names for table-given groups."""
    if phi.source != G or phi.target != K:
        raise InputError("homomorphism does not map G to K")
    table = {}
    for k, v in y0.items():
        if isinstance(K, FiniteGroup) and isinstance(k, str) and k in K.elements:
            w = K.word_of(k)
        else:
            w = K.normal_form(k)
        table[w] = v
    if alphabet is None:
        alphabet = sorted(set(table.values()), key=str)
    cells = quotient_cells(K)
    if any(c not in table for c in cells):
        raise InputError("y0 must assign a symbol to every element of K")
    return pullback_of_finite(G, K, phi, table, alphabet)
