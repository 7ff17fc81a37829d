"""Patterns, subshifts of finite type, lazy configurations and patch checking.

A pattern occurs in a configuration ``x`` at ``g`` when ``x(g*f)`` matches the
pattern at every support element ``f``. Forbidden patterns may carry
``OneOf`` entries (a cell matches any listed symbol); such a pattern stands for
the finite union of the plain patterns it expands to, so the SFT is unchanged.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from itertools import product as iproduct
from typing import Callable, Hashable, Iterable, Mapping, Sequence

import numpy as np

from . import kernels
from .errors import CapacityError, InputError
from .groups import Group, Word

DEFAULT_MAX_PATCHES = 200_000


class OneOf(frozenset):
    """Pattern entry matching any of several symbols."""

    def __repr__(self):
        return f"OneOf({sorted(self, key=repr)})"


def entry_set(entry) -> frozenset:
    return frozenset(entry) if isinstance(entry, OneOf) else frozenset([entry])


def _entry(symbols: Iterable) -> object:
    s = frozenset(symbols)
    if len(s) == 1:
        return next(iter(s))
    return OneOf(s)


@dataclass(frozen=True)
class Pattern:
    """Symbols on a finite support of normal-form words, sorted by the group's cell order."""

    support: tuple
    symbols: tuple

    @classmethod
    def make(cls, group: Group, cells) -> "Pattern":
        """Build from a mapping word -> symbol (or a sequence of pairs); words are normal-formed."""
        items = cells.items() if isinstance(cells, Mapping) else cells
        seen = {}
        for w, s in items:
            nf = group.normal_form(w)
            if nf in seen:
                raise InputError(f"support element {group.gens.render(nf)!r} listed twice")
            seen[nf] = s
        if not seen:
            raise InputError("a pattern needs a nonempty support")
        support = tuple(sorted(seen, key=group.cell_key))
        return cls(support, tuple(seen[w] for w in support))

    def __len__(self):
        return len(self.support)

    def as_dict(self) -> dict:
        return dict(zip(self.support, self.symbols))

    @property
    def is_plain(self) -> bool:
        return not any(isinstance(s, OneOf) for s in self.symbols)

    @property
    def radius(self) -> int:
        return max(len(w) for w in self.support)

    def expand(self) -> list:
        """The plain patterns this pattern stands for."""
        choices = [sorted(entry_set(s), key=repr) for s in self.symbols]
        return [Pattern(self.support, combo) for combo in iproduct(*choices)]

    def restrict(self, group: Group, words) -> "Pattern":
        d = self.as_dict()
        return Pattern.make(group, {w: d[group.normal_form(w)] for w in words})


class Sft:
    """A subshift of finite type: an alphabet and finitely many forbidden patterns over a group."""

    def __init__(self, group: Group, alphabet: Sequence, forbidden: Iterable[Pattern] = ()):
        self.group = group
        self.alphabet = tuple(alphabet)
        if len(set(self.alphabet)) != len(self.alphabet):
            raise InputError("alphabet symbols must be distinct")
        if not self.alphabet:
            raise InputError("alphabet must be nonempty")
        self.symbol_index = {s: i for i, s in enumerate(self.alphabet)}
        seen, forb = set(), []
        for p in forbidden:
            for s in p.symbols:
                for t in entry_set(s):
                    if t not in self.symbol_index:
                        raise InputError(f"forbidden pattern uses symbol {t!r} outside the alphabet")
            for w in p.support:
                if group.normal_form(w) != w:
                    raise InputError("pattern supports must hold normal forms")
            if p not in seen:
                seen.add(p)
                forb.append(p)
        self.forbidden = tuple(forb)
        self.window_radius = max((p.radius for p in self.forbidden), default=0)
        self._compiled = {}
        self._lock = threading.Lock()

    def __repr__(self):
        return f"Sft({self.group!r}, alphabet={list(self.alphabet)}, forbidden={len(self.forbidden)})"

    def same_group(self, other: "Sft"):
        if self.group != other.group:
            raise InputError("subshifts live on different groups")

    # -- compilation ---------------------------------------------------------------------
    def compile(self, cells: Sequence[Word]) -> "Constraints":
        """Constraints for every translate of a forbidden pattern lying inside ``cells``."""
        key = tuple(cells)
        with self._lock:
            hit = self._compiled.get(key)
        if hit is None:
            G = self.group
            elems = [G._elem_of(w) for w in key]
            hit = Constraints.build(self, G, elems, lambda w: G._elem_of(w), G._to_word)
            with self._lock:
                if len(self._compiled) > 64:
                    self._compiled.clear()
                self._compiled[key] = hit
        return hit

    def cells(self, n: int) -> list:
        return sorted(self.group.ball(n), key=self.group.cell_key)


class Constraints:
    """Placed forbidden patterns in array form, ready for the search kernels."""

    def __init__(self, n_cells, n_sym, cells, lens, masks, meta):
        self.n_cells, self.n_sym = n_cells, n_sym
        self.meta = meta  # (pattern index, anchor word) per constraint
        nc = len(cells)
        kmax = max((len(c) for c in cells), default=1)
        self.con_cells = np.zeros((nc, kmax), np.int64)
        self.con_len = np.asarray(lens, np.int64).reshape(nc)
        self.con_masks = np.zeros((nc, kmax, max(n_sym, 1)), np.bool_)
        for c, (idx, mk) in enumerate(zip(cells, masks)):
            self.con_cells[c, :len(idx)] = idx
            for j, m in enumerate(mk):
                self.con_masks[c, j, :] = m
        trig = [max(idx) for idx in cells]
        order = sorted(range(nc), key=lambda c: trig[c])
        self.trig_con = np.asarray(order, np.int64).reshape(nc)
        self.trig_ptr = np.zeros(n_cells + 1, np.int64)
        for c in range(nc):
            self.trig_ptr[trig[c] + 1] += 1
        self.trig_ptr = np.cumsum(self.trig_ptr).astype(np.int64)
        self._pairs = None

    def _binary_relations(self):
        """Allowed-pair matrices for every pair of cells linked by two-cell constraints, both ways."""
        if self._pairs is None:
            two = np.flatnonzero(self.con_len == 2)
            if self.con_cells.shape[1] < 2:
                self._pairs = (np.zeros(0, np.int64), np.zeros(0, np.int64),
                               np.zeros((0, self.con_masks.shape[2], self.con_masks.shape[2]), np.bool_))
                return self._pairs
            i, j = self.con_cells[two, 0], self.con_cells[two, 1]
            keys, inv = np.unique(i * self.n_cells + j, return_inverse=True)
            w = self.con_masks.shape[2]
            forb = np.zeros((len(keys), w, w), np.bool_)
            m0, m1 = self.con_masks[two, 0], self.con_masks[two, 1]
            np.logical_or.at(forb, inv, m0[:, :, None] & m1[:, None, :])
            pi, pj = keys // self.n_cells, keys % self.n_cells
            self._pairs = (np.concatenate([pi, pj]).astype(np.int64), np.concatenate([pj, pi]).astype(np.int64),
                           np.concatenate([~forb, ~forb.transpose(0, 2, 1)]))
        return self._pairs

    def propagate(self, domains):
        """Arc-consistent copy of ``domains`` (unit and two-cell constraints only), or None if it wipes out."""
        dom = domains.copy()
        for c in np.flatnonzero(self.con_len == 1):
            dom[self.con_cells[c, 0]] &= ~self.con_masks[c, 0]
        pi, pj, rel = self._binary_relations()
        if not kernels.arc_consistency(dom, pi, pj, rel):
            return None
        return dom

    @classmethod
    def build(cls, sft: Sft, arith: Group, cell_elems: Sequence, support_elem: Callable, anchor_word: Callable):
        """Place every forbidden pattern of ``sft`` at every anchor keeping it inside ``cell_elems``.

        ``arith`` is the group doing the multiplication (the SFT's group, or a
        finite quotient) and ``support_elem`` maps a support word into it.
        Cells repeated by a placement (possible on quotients) get their masks
        intersected; placements that can never match are dropped.
        """
        index = {e: i for i, e in enumerate(cell_elems)}
        n_sym = len(sft.alphabet)
        sym_masks = {}
        placements_by_support = {}
        entries = []
        for pi, p in enumerate(sft.forbidden):
            sup = p.support
            if sup not in placements_by_support:
                felems = [support_elem(w) for w in sup]
                inv0 = arith._inv(felems[0])
                anchors = {}
                for c in cell_elems:
                    g = arith._mul(c, inv0)
                    if g in anchors:
                        continue
                    idx = []
                    for f in felems:
                        i = index.get(arith._mul(g, f))
                        if i is None:
                            break
                        idx.append(i)
                    else:
                        anchors[g] = tuple(idx)
                placements_by_support[sup] = anchors
            masks = []
            for s in p.symbols:
                key = s if not isinstance(s, OneOf) else s
                m = sym_masks.get(key)
                if m is None:
                    m = np.zeros(n_sym, np.bool_)
                    for t in entry_set(s):
                        m[sft.symbol_index[t]] = True
                    sym_masks[key] = m
                masks.append(m)
            for g, idx in placements_by_support[sup].items():
                merged = {}
                for i, m in zip(idx, masks):
                    merged[i] = merged[i] & m if i in merged else m
                if any(not m.any() for m in merged.values()):
                    continue
                cells = sorted(merged)
                entries.append((anchor_word(g), pi, cells, [merged[i] for i in cells]))
        G = arith
        entries.sort(key=lambda e: (G.gens.shortlex(e[0]), e[1]))
        return cls(len(cell_elems), n_sym,
                   [e[2] for e in entries], [len(e[2]) for e in entries], [e[3] for e in entries],
                   [(e[1], e[0]) for e in entries])

    def search(self, limit=0, max_nodes=0, store=0, domains=None):
        if domains is None:
            domains = np.ones((self.n_cells, max(self.n_sym, 1)), np.bool_)
        if self.n_cells == 0:
            return np.zeros((1, 0), np.int64), 1, True
        out = np.zeros((store, self.n_cells), np.int64)
        domains = self.propagate(domains)
        if domains is None:
            return out, 0, True
        found, complete = kernels.search_assignments(
            domains, self.trig_ptr, self.trig_con, self.con_cells, self.con_len, self.con_masks,
            np.int64(limit), np.int64(max_nodes), out)
        return out, int(found), bool(complete)

    def first_violation(self, assign) -> int:
        if len(self.con_len) == 0:
            return -1
        return int(kernels.first_violation(np.asarray(assign, np.int64), self.con_cells, self.con_len,
                                           self.con_masks))


def full_shift(group: Group, alphabet: Sequence) -> Sft:
    return Sft(group, alphabet, ())


# -- patch-level operations ---------------------------------------------------------------

def admissible_patterns_on(x: Sft, support: Iterable, max_patches: int = DEFAULT_MAX_PATCHES) -> list:
    """All patterns on ``support`` avoiding every forbidden translate that fits inside it.

    Lexicographic by symbol sequence (alphabet order) over the support laid out
    in cell order.
    """
    G = x.group
    cells = sorted({G.normal_form(w) for w in support}, key=G.cell_key)
    con = x.compile(cells)
    _, total, _ = con.search(limit=max_patches + 1)
    if total > max_patches:
        raise CapacityError(f"more than {max_patches} admissible patches on {len(cells)} cells")
    out, found, _ = con.search(store=total)
    cells_t = tuple(cells)
    return [Pattern(cells_t, tuple(x.alphabet[i] for i in row)) for row in out[:found]]


def admissible_patches(x: Sft, n: int, max_patches: int = DEFAULT_MAX_PATCHES) -> list:
    if n < x.window_radius:
        raise InputError(f"radius {n} is below the window radius {x.window_radius}")
    return admissible_patterns_on(x, x.group.ball(n), max_patches)


def count_admissible(x: Sft, n: int) -> int:
    con = x.compile(x.cells(n))
    _, total, _ = con.search()
    return total


def has_admissible(x: Sft, n: int, max_nodes: int = 0):
    """True/False whether some patch on ball(n) is admissible; None if ``max_nodes`` ran out."""
    con = x.compile(x.cells(n))
    _, found, complete = con.search(limit=1, max_nodes=max_nodes)
    if found:
        return True
    return False if complete else None


def check_patch(x: Sft, patch: Pattern) -> bool:
    G = x.group
    n = patch.radius
    if set(patch.support) != set(G.ball(n)):
        raise InputError("patch support must be a ball of the group")
    if n < x.window_radius:
        raise InputError(f"patch radius {n} is below the window radius {x.window_radius}")
    return verify_pattern(x, patch).ok


@dataclass(frozen=True)
class Verification:
    ok: bool
    radius: int | None = None
    anchor: Word | None = None
    pattern: Pattern | None = None

    def __bool__(self):
        return self.ok


def _verify_cells(x: Sft, cells, symbols, radius=None) -> Verification:
    try:
        assign = [x.symbol_index[s] for s in symbols]
    except KeyError as exc:
        raise InputError(f"symbol {exc.args[0]!r} is not in the alphabet") from None
    con = x.compile(list(cells))
    c = con.first_violation(assign)
    if c < 0:
        return Verification(True, radius)
    pi, anchor = con.meta[c]
    return Verification(False, radius, anchor, x.forbidden[pi])


def verify_pattern(x: Sft, patch: Pattern) -> Verification:
    """Check every forbidden translate fitting inside an arbitrary finite patch."""
    G = x.group
    d = {G.normal_form(w): s for w, s in zip(patch.support, patch.symbols)}
    cells = sorted(d, key=G.cell_key)
    return _verify_cells(x, cells, [d[w] for w in cells], patch.radius)


def verify_configuration(x: Sft, c: "LazyConfiguration", n: int) -> Verification:
    """True iff no forbidden translate inside ball(n) occurs in ``c``; reports the first violation."""
    cells = x.cells(n)
    return _verify_cells(x, cells, [c(w) for w in cells], n)


# -- lazy configurations --------------------------------------------------------------------

class LazyConfiguration:
    """A total configuration computed on demand and memoized by normal form.

    ``fn`` receives a normal-form word and must be deterministic, which makes
    the memo safe under concurrent queries.
    """

    def __init__(self, group: Group, alphabet: Sequence, fn: Callable[[Word], Hashable], label: str = ""):
        self.group = group
        self.alphabet = tuple(alphabet)
        self._fn = fn
        self._memo = {}
        self._lock = threading.Lock()
        self.label = label

    def __repr__(self):
        return f"LazyConfiguration({self.group!r}, {self.label or 'anonymous'})"

    def __call__(self, w) -> Hashable:
        nf = self.group.normal_form(w)
        try:
            return self._memo[nf]
        except KeyError:
            pass
        val = self._fn(nf)
        with self._lock:
            return self._memo.setdefault(nf, val)

    def patch(self, cells: Iterable) -> Pattern:
        return Pattern.make(self.group, {w: self(w) for w in cells})

    def on_ball(self, n: int) -> Pattern:
        return self.patch(self.group.ball(n))

    def map(self, fn: Callable, alphabet: Sequence, label: str = "") -> "LazyConfiguration":
        return LazyConfiguration(self.group, alphabet, lambda w: fn(self(w)), label or self.label)

    @classmethod
    def constant(cls, group: Group, alphabet: Sequence, symbol) -> "LazyConfiguration":
        return cls(group, alphabet, lambda w: symbol, f"constant {symbol!r}")

    @classmethod
    def from_patch(cls, pattern: Pattern, group: Group, alphabet: Sequence,
                   fallback: "LazyConfiguration | None" = None) -> "LazyConfiguration":
        d = pattern.as_dict()
        if fallback is None:
            fill = alphabet[0]
            return cls(group, alphabet, lambda w: d.get(w, fill), "patch")
        return cls(group, alphabet, lambda w: d[w] if w in d else fallback(w), "patch")


def agree_on(c1: LazyConfiguration, c2: LazyConfiguration, cells: Iterable) -> bool:
    return all(c1(w) == c2(w) for w in cells)


# -- lattice constructions ---------------------------------------------------------------------

def _lift(p: Pattern, fn) -> Pattern:
    return Pattern(p.support, tuple(_entry(fn(entry_set(s))) for s in p.symbols))


def product_sft(x: Sft, y: Sft) -> Sft:
    """Pairs (a, b) with each layer avoiding its own forbidden patterns."""
    x.same_group(y)
    alphabet = [(a, b) for a in x.alphabet for b in y.alphabet]
    forb = [_lift(p, lambda S: [(a, b) for a in S for b in y.alphabet]) for p in x.forbidden]
    forb += [_lift(p, lambda S: [(a, b) for a in x.alphabet for b in S]) for p in y.forbidden]
    return Sft(x.group, alphabet, forb)


def disjoint_union_sft(x: Sft, y: Sft) -> Sft:
    """Symbols tagged ("L", a) / ("R", b); adjacent cells may not mix the two alphabets."""
    x.same_group(y)
    left = [("L", a) for a in x.alphabet]
    right = [("R", b) for b in y.alphabet]
    forb = [_lift(p, lambda S: [("L", a) for a in S]) for p in x.forbidden]
    forb += [_lift(p, lambda S: [("R", b) for b in S]) for p in y.forbidden]
    G = x.group
    for s in G.gens.bases:
        sw = G.normal_form((s,))
        if sw == ():
            continue
        forb.append(Pattern.make(G, {(): _entry(left), sw: _entry(right)}))
        forb.append(Pattern.make(G, {(): _entry(right), sw: _entry(left)}))
    return Sft(G, left + right, forb)


def stabilizer_sft(group: Group, alphabet: Sequence, w) -> Sft:
    """Configurations with x(g) == x(g * w^-1) for every g."""
    wn = group.normal_form(w)
    if wn == ():
        raise InputError("stabilizer of the identity is the full shift; refusing a trivial word")
    winv = group.inverse(wn)
    forb = [Pattern.make(group, {(): a, winv: b}) for a in alphabet for b in alphabet if a != b]
    return Sft(group, alphabet, forb)


def intersect_sft(x: Sft, y: Sft) -> Sft:
    x.same_group(y)
    if set(x.alphabet) != set(y.alphabet):
        raise InputError("intersection needs identical alphabets")
    return Sft(x.group, x.alphabet, list(x.forbidden) + list(y.forbidden))
