"""Bounded actions encoded as displacement tables, and overlays of H-subshifts along their orbits.

A displacement symbol assigns to every acting letter ``s`` a word of the
space group; a configuration of such symbols moves a cell ``g`` along ``s``
to ``g * y(g)[s]``. The action SFT forbids every relator walk that fails to
close, and the overlay SFT additionally forces the symbols read along each
orbit to avoid the forbidden patterns of a subshift on the acting group.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import CapacityError, ContractViolation, InputError
from .groups import FreeAbelianGroup, FreeGroup, Group, Word
from .subshift import LazyConfiguration, OneOf, Pattern, Sft, entry_set

DEFAULT_MAX_T_PATTERNS = 200_000


def lookup(symbol, s) -> Word:
    """Displacement word a table symbol assigns to acting letter ``s``."""
    for letter, w in symbol:
        if letter == s:
            return w
    raise InputError(f"symbol has no entry for acting letter {s!r}")


@dataclass
class DisplacementAlphabet:
    """All maps from the acting letters to a finite, inverse-closed set of space words."""

    acting: Group
    space: Group
    displacements: list

    def __post_init__(self):
        G = self.space
        F = []
        for w in self.displacements:
            nf = G.normal_form(w)
            if nf not in F:
                F.append(nf)
        for w in F:
            if G.inverse(w) not in F:
                raise InputError(f"displacement set must contain the inverse of {G.render(w)!r}")
        self.displacements = F
        self.letters = tuple(self.acting.gens.letters)
        self.symbols = tuple(tuple(zip(self.letters, combo))
                             for combo in itertools.product(F, repeat=len(self.letters)))

    def __len__(self):
        return len(self.symbols)

    def with_entry(self, s, w) -> frozenset:
        """Symbols assigning ``w`` to ``s``."""
        i = self.letters.index(s)
        return frozenset(sym for sym in self.symbols if sym[i][1] == w)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.displacements), default=0)

    @classmethod
    def of_alphabet(cls, acting: Group, space: Group, symbols: Sequence) -> "DisplacementAlphabet":
        F = sorted({w for sym in symbols for _, w in sym}, key=space.sort_key)
        return cls(acting, space, F)


def symbol_of(mapping: dict, letters) -> tuple:
    return tuple((s, mapping[s]) for s in letters)


def walk_phi(start, x: LazyConfiguration, w: Sequence[str]) -> Word:
    """Follow the displacement entries of ``x`` from ``start`` along the letters of ``w``."""
    G = x.group
    g = G.normal_form(start)
    for s in w:
        g = G.multiply(g, lookup(x(g), s))
    return g


@dataclass
class RelatorSet:
    acting: Group
    words: list = field(default_factory=list)

    def __post_init__(self):
        H = self.acting
        ws = [H.word(w) for w in self.words] if self.words else list(H.relators)
        for s in H.gens.letters:
            pair = (s, H.gens.inv(s))
            if pair not in ws:
                ws.append(pair)
        for w in ws:
            if not H.is_identity(w):
                raise InputError(f"relator {H.gens.render(w)!r} is not the identity")
        self.words = ws


class _Walk:
    """Depth-first unfolding of walks, branching over the displacement read at each new (cell, letter)."""

    def __init__(self, alpha: DisplacementAlphabet):
        self.alpha = alpha
        self.G = alpha.space

    def run(self, words, visit):
        yield from self._go(list(words), 0, 0, (), {}, [], visit)

    def _go(self, words, wi, li, g, reads, ends, visit):
        G = self.G
        if wi == len(words):
            yield dict(reads), list(ends)
            return
        w = words[wi]
        if li == len(w):
            yield from self._go(words, wi + 1, 0, (), reads, ends + [g], visit)
            return
        s = w[li]
        key = (g, s)
        if key in reads:
            yield from self._go(words, wi, li + 1, G.multiply(g, reads[key]), reads, ends, visit)
            return
        for f in self.alpha.displacements:
            reads[key] = f
            visit()
            yield from self._go(words, wi, li + 1, G.multiply(g, f), reads, ends, visit)
            del reads[key]


def _cell_entries(alpha: DisplacementAlphabet, reads: dict) -> dict:
    """Per cell, the set of table symbols consistent with the displacements read there."""
    per_cell = {}
    for (g, s), f in reads.items():
        per_cell.setdefault(g, []).append((s, f))
    out = {}
    for g, cons in per_cell.items():
        ok = alpha.with_entry(*cons[0])
        for s, f in cons[1:]:
            ok = ok & alpha.with_entry(s, f)
        out[g] = ok
    return out


def _as_entry(symbols: frozenset):
    return next(iter(symbols)) if len(symbols) == 1 else OneOf(symbols)


def build_T_sft(G: Group, alpha: DisplacementAlphabet, relators: RelatorSet,
                max_patterns: int = DEFAULT_MAX_T_PATTERNS) -> Sft:
    """SFT of displacement tables along which every relator walk closes."""
    if alpha.space != G:
        raise InputError("displacement alphabet belongs to another space group")
    walker = _Walk(alpha)
    forb = []
    for r in relators.words:
        count = [0]

        def visit():
            count[0] += 1
            if count[0] > max_patterns:
                raise CapacityError(f"relator {relators.acting.gens.render(r)!r} unfolds into too many walks")

        for reads, ends in walker.run([r], visit):
            if ends[0] != ():
                forb.append(Pattern.make(G, {g: _as_entry(e) for g, e in _cell_entries(alpha, reads).items()}))
    T = Sft(G, alpha.symbols, forb)
    T.displacements = alpha
    return T


def _displacements_of(T: Sft, acting: Group | None) -> DisplacementAlphabet:
    alpha = getattr(T, "displacements", None)
    if alpha is not None:
        return alpha
    if acting is None:
        raise InputError("cannot recover the acting group from this SFT; pass it explicitly")
    return DisplacementAlphabet.of_alphabet(acting, T.group, T.alphabet)


def overlay_sft(T: Sft, x: Sft, acting: Group | None = None, max_patterns: int = DEFAULT_MAX_T_PATTERNS) -> Sft:
    """Pairs (a, b): b-layer in T, and along every orbit the a-layer avoids x's forbidden patterns."""
    alpha = _displacements_of(T, acting or x.group)
    if alpha.acting != x.group:
        raise InputError("x must live on the acting group")
    G = T.group
    A, B = x.alphabet, T.alphabet
    alphabet = tuple((a, b) for a in A for b in B)

    def pair_entry(a_set, b_set):
        return _as_entry(frozenset((a, b) for a in a_set for b in b_set))

    forb = []
    for p in T.forbidden:
        forb.append(Pattern(p.support, tuple(pair_entry(A, entry_set(s)) for s in p.symbols)))
    walker = _Walk(alpha)
    H = x.group
    for p in x.forbidden:
        words = [H.word(u) for u in p.support]
        count = [0]

        def visit():
            count[0] += 1
            if count[0] > max_patterns:
                raise CapacityError(f"forbidden pattern of x on {[H.render(u) for u in p.support]} "
                                    "unfolds into too many walks")

        for reads, ends in walker.run(words, visit):
            need = {}
            clash = False
            for g, sym in zip(ends, p.symbols):
                cur = need.get(g, frozenset(A)) & entry_set(sym)
                if not cur:
                    clash = True
                    break
                need[g] = cur
            if clash:
                continue
            bsets = _cell_entries(alpha, reads)
            cells = set(need) | set(bsets)
            forb.append(Pattern.make(G, {g: pair_entry(need.get(g, frozenset(A)), bsets.get(g, frozenset(B)))
                                         for g in cells}))
    S = Sft(G, alphabet, forb)
    S.displacements = alpha
    S.layers = (A, B)
    return S


# -- concrete actions -----------------------------------------------------------------------


@dataclass
class TranslationLikeAction:
    """A bounded action of ``acting`` on ``space``.

    ``displacement(g, s)`` returns the word d with g * s = g d. ``orbit_reps(g)``
    optionally returns ``(rep, w)`` with rep * w = g, ``rep`` a space word.
    """

    acting: Group
    space: Group
    displacement: Callable[[Word, str], Word]
    displacements: list
    orbit_reps: Callable[[Word], tuple] | None = None
    name: str = "custom"

    def alphabet(self) -> DisplacementAlphabet:
        return DisplacementAlphabet(self.acting, self.space, self.displacements)

    def act(self, g, w) -> Word:
        G = self.space
        g = G.normal_form(g)
        for s in self.acting.word(w):
            g = G.multiply(g, self.displacement(g, s))
        return g


def shift_e1(dim: int, acting_letter: str = "s") -> TranslationLikeAction:
    """Z acting on Z^dim by adding the first basis vector; orbit reps are the points with first coordinate 0."""
    H = FreeAbelianGroup(1, bases=acting_letter)
    G = FreeAbelianGroup(dim)
    e, E = G.gens.bases[0], G.gens.inv(G.gens.bases[0])
    s, S = H.gens.letters[0], H.gens.inv(H.gens.letters[0])
    step = {s: (e,), S: (E,)}

    def reps(g):
        v = list(G.vector(g))
        m, v[0] = v[0], 0
        return G.from_vector(v), H.from_vector((m,))

    return TranslationLikeAction(H, G, lambda g, t: step[t], [(e,), (E,)], reps, "shift_e1")


def translation(acting_bases: str = "st") -> TranslationLikeAction:
    """Z^2 acting on Z^2 by translation; a single orbit represented by the origin."""
    H = FreeAbelianGroup(2, bases=acting_bases)
    G = FreeAbelianGroup(2)
    step = {}
    for hb, gb in zip(H.gens.bases, G.gens.bases):
        step[hb] = (gb,)
        step[H.gens.inv(hb)] = (G.gens.inv(gb),)

    def reps(g):
        return (), H.from_vector(G.vector(g))

    return TranslationLikeAction(H, G, lambda g, t: step[t], sorted(set(step.values()), key=G.sort_key), reps,
                                 "translation")


def follow_generator(rank: int = 2, letter: str = "a", acting_letter: str = "s") -> TranslationLikeAction:
    """Z acting on a free group by right multiplication with a fixed generator."""
    G = FreeGroup("abcdefghijklmnopqrstuvwxyz"[:rank])
    if letter not in G.gens.bases:
        raise InputError(f"{letter!r} is not a base letter of the free group")
    H = FreeAbelianGroup(1, bases=acting_letter)
    L = G.gens.inv(letter)
    s, S = H.gens.letters[0], H.gens.inv(H.gens.letters[0])
    step = {s: (letter,), S: (L,)}

    def reps(g):
        g = G.normal_form(g)
        k = len(g)
        while k and g[k - 1] in (letter, L):
            k -= 1
        tail = g[k:]
        m = sum(1 if x == letter else -1 for x in tail)
        return g[:k], H.from_vector((m,))

    return TranslationLikeAction(H, G, lambda g, t: step[t], [(letter,), (L,)], reps, "follow_generator")


def table_action(acting: Group, space: Group, table: dict, default: dict) -> TranslationLikeAction:
    """Custom action: per-cell displacement overrides on top of a default per letter."""
    tab = {space.normal_form(g): {s: space.normal_form(w) for s, w in row.items()} for g, row in table.items()}
    dflt = {s: space.normal_form(w) for s, w in default.items()}
    F = set(dflt.values())
    for row in tab.values():
        F |= set(row.values())

    def disp(g, s):
        row = tab.get(g)
        if row is not None and s in row:
            return row[s]
        return dflt[s]

    return TranslationLikeAction(acting, space, disp, sorted(F, key=space.sort_key), None, "table")


BUILTIN_ACTIONS = {
    "shift_e1": shift_e1,
    "translation": translation,
    "follow_generator": follow_generator,
}


def canonical_point(act: TranslationLikeAction, alpha: DisplacementAlphabet | None = None) -> LazyConfiguration:
    """y(g)(s) = displacement(g, s)."""
    alpha = alpha or act.alphabet()
    G = act.space
    F = set(alpha.displacements)

    def table(g):
        out = []
        for s in alpha.letters:
            d = G.normal_form(act.displacement(g, s))
            if d not in F:
                raise ContractViolation(
                    f"displacement {G.render(d)!r} at {G.render(g)!r} along {s!r} lies outside the displacement set")
            out.append((s, d))
        return tuple(out)

    return LazyConfiguration(G, alpha.symbols, table, f"canonical point of {act.name}")


def layer(c: LazyConfiguration, i: int, alphabet: Sequence) -> LazyConfiguration:
    return c.map(lambda ab: ab[i], alphabet, f"layer {i}")


def decode_overlay(c: LazyConfiguration, acting: Group, alphabet: Sequence | None = None) -> LazyConfiguration:
    """u -> a-layer of c at the end of the walk from the identity along u."""
    if alphabet is None:
        alphabet = sorted({ab[0] for ab in c.alphabet}, key=str)
    B = tuple(sorted({ab[1] for ab in c.alphabet}, key=str))
    b_layer = layer(c, 1, B)
    return LazyConfiguration(acting, tuple(alphabet), lambda u: c(walk_phi((), b_layer, u))[0], "decoded overlay")


def encode_overlay(z: LazyConfiguration, act: TranslationLikeAction,
                   alpha: DisplacementAlphabet | None = None) -> LazyConfiguration:
    """b-layer: the canonical point; a-layer at g: z(w) where g = rep * w."""
    if act.orbit_reps is None:
        raise InputError("encoding needs orbit representatives")
    if z.group != act.acting:
        raise InputError("z must live on the acting group")
    alpha = alpha or act.alphabet()
    y = canonical_point(act, alpha)
    G = act.space

    def pair(g):
        rep, w = act.orbit_reps(g)
        if walk_phi(rep, y, act.acting.word(w)) != g:
            raise ContractViolation(f"orbit representative of {G.render(g)!r} does not walk back to it")
        return z(w), y(g)

    alphabet = tuple((a, b) for a in z.alphabet for b in alpha.symbols)
    return LazyConfiguration(G, alphabet, pair, f"overlay encoding via {act.name}")
