"""Moving SFTs and configurations between related groups.

Covers pullbacks along epimorphisms and their sections, pullback SFTs from
kernel generators, lifted local rules, free extensions along subgroup
embeddings, and higher-block recoding over a finite-index subgroup.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Mapping, Sequence

from .errors import CapacityError, DecodeError, InputError
from .groups import FiniteIndexData, Group, Homomorphism, Word
from .subshift import DEFAULT_MAX_PATCHES, LazyConfiguration, OneOf, Pattern, Sft, admissible_patches, entry_set


def _hom(embed, source: Group | None = None, target: Group | None = None) -> Homomorphism:
    if isinstance(embed, Homomorphism):
        return embed
    if isinstance(embed, FiniteIndexData):
        return embed.embedding
    if source is None or target is None:
        raise InputError("a generator map needs explicit source and target groups")
    return Homomorphism(source, target, embed)


def pullback_config(rho: Homomorphism, c: LazyConfiguration) -> LazyConfiguration:
    """g -> c(rho(g))."""
    if c.group != rho.target:
        raise InputError("configuration does not live on the target of the homomorphism")
    tgt = rho.target
    return LazyConfiguration(rho.source, c.alphabet, lambda w: c(tgt._to_word(rho._apply_elem(w))), "pullback")


@dataclass
class SectionData:
    """An epimorphism with a chosen preimage word for every target letter."""

    hom: Homomorphism
    sections: dict

    @classmethod
    def build(cls, hom: Homomorphism, sections: Mapping[str, object] | None = None,
              max_radius: int = 12) -> "SectionData":
        H = hom.target
        chosen = {}
        if sections:
            for u, w in sections.items():
                if u not in H.gens:
                    raise InputError(f"section given for unknown target letter {u!r}")
                chosen[u] = hom.source.word(w)
        missing = [u for u in H.gens.letters if u not in chosen]
        for u in list(missing):
            iu = H.gens.inv(u)
            if iu in chosen:
                chosen[u] = hom.source.inverse(chosen[iu])
                missing.remove(u)
        if missing:
            found = hom.preimages([(u,) for u in missing], max_radius=max_radius)
            for u in missing:
                chosen[u] = found[H.normal_form((u,))]
        for u, w in chosen.items():
            if hom._apply_elem(w) != H._letter(u):
                raise InputError(f"section {hom.source.render(w)!r} does not map onto {u!r}")
        return cls(hom, chosen)

    def lift(self, u) -> Word:
        out = ()
        for x in self.hom.target.word(u):
            out += self.sections[x]
        return out


def section_config(sd: SectionData, c: LazyConfiguration, provenance: Sft | None = None) -> LazyConfiguration:
    """u1...un -> c(w_u1 ... w_un). Lands in X whenever c lies in the pullback of X."""
    if c.group != sd.hom.source:
        raise InputError("configuration does not live on the source of the homomorphism")
    label = "section" if provenance is None else f"section of {provenance!r}"
    return LazyConfiguration(sd.hom.target, c.alphabet, lambda u: c(sd.lift(u)), label)


@dataclass
class KernelData:
    """An epimorphism together with words generating its kernel."""

    hom: Homomorphism
    kernel_generators: list

    def __post_init__(self):
        G = self.hom.source
        gens = [G.normal_form(w) for w in self.kernel_generators]
        for w in gens:
            if not self.hom.target.is_identity(self.hom.apply(w)):
                raise InputError(f"{G.render(w)!r} is not in the kernel")
        self.kernel_generators = gens


def kernel_data(hom: Homomorphism, kernel_generators: Sequence) -> KernelData:
    return KernelData(hom, list(kernel_generators))


def lifts(hom: Homomorphism, words: Sequence, max_radius: int = 12) -> dict:
    """Shortest-then-lexicographic source word over each target word."""
    return hom.preimages(words, max_radius=max_radius)


def pullback_sft(kd: KernelData, x: Sft, max_patterns: int = DEFAULT_MAX_PATCHES, max_radius: int = 12) -> Sft:
    """SFT on the source whose points are exactly the pullbacks of points of x.

    Window: lifts of ball(r) of the target, the kernel generators and the
    identity. Forbidden: every window whose lifted part is not admissible in
    x, and every disagreement across a kernel generator.
    """
    rho = kd.hom
    if x.group != rho.target:
        raise InputError("SFT does not live on the target of the homomorphism")
    G, H = rho.source, rho.target
    r = x.window_radius
    F = sorted(H.ball(r), key=H.cell_key)
    lift = lifts(rho, F, max_radius)
    allowed = {p.symbols for p in admissible_patches(x, r, max_patches=max_patterns)}
    n_bad = len(x.alphabet) ** len(F) - len(allowed)
    n_pairs = len(kd.kernel_generators) * len(x.alphabet) * (len(x.alphabet) - 1)
    if n_bad + n_pairs > max_patterns:
        raise CapacityError(f"pullback would need {n_bad + n_pairs} forbidden patterns (limit {max_patterns})")
    forb = []
    for combo in itertools.product(x.alphabet, repeat=len(F)):
        if combo not in allowed:
            forb.append(Pattern.make(G, {lift[f]: a for f, a in zip(F, combo)}))
    for s in kd.kernel_generators:
        if not s:
            continue
        for a in x.alphabet:
            for b in x.alphabet:
                if a != b:
                    forb.append(Pattern.make(G, {(): a, s: b}))
    return Sft(G, x.alphabet, forb)


@dataclass
class LocalRule:
    """A sliding block map: g -> fn(c(g*k) for k in support)."""

    group: Group
    support: tuple
    fn: Callable
    alphabet: tuple

    def __post_init__(self):
        self.support = tuple(self.group.normal_form(w) for w in self.support)
        self.alphabet = tuple(self.alphabet)


def apply_local_rule(rule: LocalRule, c: LazyConfiguration) -> LazyConfiguration:
    if c.group != rule.group:
        raise InputError("rule and configuration live on different groups")
    G = rule.group
    return LazyConfiguration(G, rule.alphabet, lambda g: rule.fn(tuple(c(G.multiply(g, k)) for k in rule.support)),
                             "local rule image")


def lift_local_rule(kd: KernelData | Homomorphism, rule: LocalRule, max_radius: int = 12) -> LocalRule:
    """The same block map read through lifts of its support; commutes with pulling back."""
    rho = kd.hom if isinstance(kd, KernelData) else kd
    if rule.group != rho.target:
        raise InputError("rule does not live on the target of the homomorphism")
    lift = lifts(rho, rule.support, max_radius)
    return LocalRule(rho.source, tuple(lift[k] for k in rule.support), rule.fn, rule.alphabet)


def free_extension_sft(embed, x: Sft, ambient: Group | None = None) -> Sft:
    """Same forbidden patterns with supports pushed through the embedding."""
    h = _hom(embed, x.group, ambient)
    if h.source != x.group:
        raise InputError("embedding does not start at the SFT's group")
    G = h.target
    forb = [Pattern(tuple(h.apply(w) for w in p.support), p.symbols) for p in x.forbidden]
    forb = [Pattern.make(G, dict(zip(p.support, p.symbols))) for p in forb]
    return Sft(G, x.alphabet, forb)


def restrict_config(embed, c: LazyConfiguration, subgroup: Group | None = None) -> LazyConfiguration:
    """h -> c(embed(h))."""
    h = _hom(embed, subgroup, c.group)
    if h.target != c.group:
        raise InputError("embedding does not land in the configuration's group")
    G = c.group
    return LazyConfiguration(h.source, c.alphabet, lambda w: c(G._to_word(h._apply_elem(w))), "restriction")


def lift_config_finite_index(d: FiniteIndexData, c: LazyConfiguration) -> LazyConfiguration:
    """v -> c(u_v) where v = t_v * u_v."""
    if c.group != d.subgroup:
        raise InputError("configuration does not live on the subgroup")
    return LazyConfiguration(d.ambient, c.alphabet, lambda v: c(d.coset_rewrite(v)[1]), "finite-index lift")


def block_alphabet(d: FiniteIndexData, alphabet: Sequence) -> tuple:
    return tuple(itertools.product(alphabet, repeat=len(d.transversal)))


def higher_block_encode(d: FiniteIndexData, c: LazyConfiguration, alphabet: Sequence | None = None
                        ) -> LazyConfiguration:
    """h -> (c(h*t) for t in the transversal)."""
    if c.group != d.ambient:
        raise InputError("configuration does not live on the ambient group")
    A = tuple(alphabet) if alphabet is not None else c.alphabet
    G = d.ambient
    T = d.transversal

    def read(h):
        g = d.embed(h)
        return tuple(c(G.multiply(g, t)) for t in T)

    return LazyConfiguration(d.subgroup, block_alphabet(d, A), read, "higher block")


def higher_block_decode(d: FiniteIndexData, e: LazyConfiguration, alphabet: Sequence | None = None
                        ) -> LazyConfiguration:
    """v -> e(u_v)[t_v] where v = u_v * t_v."""
    if e.group != d.subgroup:
        raise InputError("configuration does not live on the subgroup")
    if not d.has_right_table:
        raise InputError("higher-block decoding needs a transversal of the right cosets")
    if alphabet is None:
        alphabet = sorted({a for sym in e.alphabet if isinstance(sym, tuple) for a in sym}, key=str)
    A = set(alphabet)
    k = len(d.transversal)
    index = {t: i for i, t in enumerate(d.transversal)}

    def read(v):
        u, t = d.right_coset_rewrite(v)
        block = e(u)
        if not isinstance(block, tuple) or len(block) != k or any(a not in A for a in block):
            raise DecodeError(
                f"cell {d.ambient.render(v)!r}: block {block!r} at {d.subgroup.render(u)!r} is not a "
                f"{k}-tuple over the alphabet")
        return block[index[t]]

    return LazyConfiguration(d.ambient, tuple(alphabet), read, "higher-block decode")


def higher_block_sft(d: FiniteIndexData, x: Sft) -> Sft:
    """SFT on the subgroup over transversal-indexed tuples whose decodings lie in x."""
    if x.group != d.ambient:
        raise InputError("SFT does not live on the ambient group")
    if not d.has_right_table:
        raise InputError("higher-block recoding needs a transversal of the right cosets")
    H, G = d.subgroup, d.ambient
    blocks = block_alphabet(d, x.alphabet)
    index = {t: i for i, t in enumerate(d.transversal)}
    forb = set()
    for p in x.forbidden:
        for t in d.transversal:
            cells = {}
            for f, sym in zip(p.support, p.symbols):
                u, t2 = d.right_coset_rewrite(G.multiply(t, f))
                cells.setdefault(u, {}).setdefault(index[t2], set(entry_set(sym)))
                cells[u][index[t2]] &= set(entry_set(sym))
            entries = {}
            for u, cons in cells.items():
                ok = frozenset(b for b in blocks if all(b[i] in s for i, s in cons.items()))
                entries[u] = ok
            if any(not v for v in entries.values()):
                continue
            forb.add(Pattern.make(H, {u: (next(iter(v)) if len(v) == 1 else OneOf(v)) for u, v in entries.items()}))
    forb = sorted(forb, key=lambda q: (len(q.support), [H.sort_key(w) for w in q.support], repr(q.symbols)))
    return Sft(H, blocks, forb)
