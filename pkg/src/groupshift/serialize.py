"""JSON documents for groups, maps, SFTs, configurations, actions and certificates.

Words travel as strings in the group's own letters (``""`` is the identity).
Tuple symbols travel as JSON lists and ``OneOf`` entries as ``{"one_of": [...]}``.
Every top-level input document must carry ``"spec": 1``.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from . import actions as act_mod
from . import certify as emp
from . import synthesis
from .errors import InputError
from .groups import (DirectProduct, FiniteGroup, FiniteIndexData, FreeAbelianGroup, FreeGroup, Group,
                     Homomorphism)
from .subshift import LazyConfiguration, OneOf, Pattern, Sft

SCHEMA_VERSION = 1


def dumps(doc: Any) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def load_document(source) -> dict:
    """Read a top-level document from a path or an already parsed dict and check its schema version."""
    if isinstance(source, dict):
        doc = source
    else:
        try:
            doc = json.loads(Path(source).read_text(encoding="utf-8"))
        except OSError as exc:
            raise InputError(f"cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise InputError(f"{source} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError("a document must be a JSON object")
    if doc.get("spec") != SCHEMA_VERSION:
        raise InputError(f'document must declare "spec": {SCHEMA_VERSION}')
    return doc


def _need(doc: dict, key: str):
    if key not in doc:
        raise InputError(f"missing field {key!r}")
    return doc[key]


# -- symbols ---------------------------------------------------------------------------------

def encode_symbol(s):
    if isinstance(s, OneOf):
        return {"one_of": sorted((encode_symbol(t) for t in s), key=json.dumps)}
    if isinstance(s, tuple):
        return [encode_symbol(t) for t in s]
    return s


def decode_symbol(s):
    if isinstance(s, dict):
        if set(s) != {"one_of"}:
            raise InputError(f"unrecognized symbol object {s!r}")
        return OneOf(decode_symbol(t) for t in s["one_of"])
    if isinstance(s, list):
        return tuple(decode_symbol(t) for t in s)
    if isinstance(s, (str, int, float, bool)) or s is None:
        return s
    raise InputError(f"unsupported symbol {s!r}")


# -- groups ----------------------------------------------------------------------------------

def group_from_json(doc: dict) -> Group:
    if not isinstance(doc, dict):
        raise InputError("group description must be an object")
    kind = _need(doc, "kind")
    if kind == "free":
        return FreeGroup(list(_need(doc, "generators")), doc.get("inverses"))
    if kind == "free_abelian":
        return FreeAbelianGroup(int(_need(doc, "rank")), doc.get("generators"), doc.get("inverses"))
    if kind == "finite":
        return FiniteGroup(_need(doc, "elements"), _need(doc, "table"), doc.get("generators"), doc.get("inverses"))
    if kind == "product":
        return DirectProduct(group_from_json(_need(doc, "left")), group_from_json(_need(doc, "right")))
    raise InputError(f"unknown group kind {kind!r}")


def group_to_json(G: Group) -> dict:
    invs = {x: G.gens.inv(x) for x in G.gens.bases}
    if isinstance(G, FreeGroup):
        return {"kind": "free", "generators": list(G.gens.bases), "inverses": invs}
    if isinstance(G, FreeAbelianGroup):
        return {"kind": "free_abelian", "rank": G.rank, "generators": list(G.gens.bases), "inverses": invs}
    if isinstance(G, FiniteGroup):
        return {"kind": "finite", "elements": list(G.elements), "table": [list(r) for r in G.table],
                "generators": {x: G._letter(x) for x in G.gens.bases}, "inverses": invs}
    if isinstance(G, DirectProduct):
        return {"kind": "product", "left": group_to_json(G.left), "right": group_to_json(G.right)}
    raise InputError(f"cannot serialize {G!r}")


def word(G: Group, w) -> tuple:
    return G.normal_form(G.gens.parse(w) if isinstance(w, str) else w)


def render(G: Group, w) -> str:
    return G.gens.render(w)


def hom_from_json(doc: dict) -> Homomorphism:
    src = group_from_json(_need(doc, "source"))
    tgt = group_from_json(_need(doc, "target"))
    images = {x: tgt.gens.parse(w) for x, w in _need(doc, "images").items()}
    return Homomorphism(src, tgt, images)


def hom_to_json(h: Homomorphism) -> dict:
    return {"source": group_to_json(h.source), "target": group_to_json(h.target),
            "images": {x: render(h.target, h.image_of(x)) for x in h.source.gens.bases}}


def finite_index_from_json(doc: dict) -> FiniteIndexData:
    G = group_from_json(_need(doc, "ambient"))
    H = group_from_json(_need(doc, "subgroup"))
    emb = {x: G.gens.parse(w) for x, w in _need(doc, "embedding").items()}
    T = [G.gens.parse(t) for t in _need(doc, "transversal")]
    return FiniteIndexData(G, H, emb, T, search_radius=int(doc.get("search_radius", 8)))


# -- patterns and SFTs -----------------------------------------------------------------------

def pattern_from_json(G: Group, doc: dict) -> Pattern:
    support = _need(doc, "support")
    symbols = _need(doc, "symbols")
    if len(support) != len(symbols):
        raise InputError("support and symbols must have equal length")
    return Pattern.make(G, [(word(G, w), decode_symbol(s)) for w, s in zip(support, symbols)])


def pattern_to_json(G: Group, p: Pattern) -> dict:
    return {"support": [render(G, w) for w in p.support], "symbols": [encode_symbol(s) for s in p.symbols]}


def sft_from_json(doc: dict) -> Sft:
    G = group_from_json(_need(doc, "group"))
    alphabet = [decode_symbol(a) for a in _need(doc, "alphabet")]
    return Sft(G, alphabet, [pattern_from_json(G, p) for p in doc.get("forbidden", [])])


def sft_to_json(x: Sft) -> dict:
    return {"spec": SCHEMA_VERSION, "group": group_to_json(x.group),
            "alphabet": [encode_symbol(a) for a in x.alphabet],
            "forbidden": [pattern_to_json(x.group, p) for p in x.forbidden]}


def patch_to_json(G: Group, p: Pattern) -> list:
    return [{"cell": render(G, w), "symbol": encode_symbol(s)} for w, s in zip(p.support, p.symbols)]


def certificate_to_json(cert: emp.EmptinessCertificate) -> dict:
    ev = dict(cert.evidence)
    if "symbols" in ev:
        ev["symbols"] = [encode_symbol(s) for s in ev["symbols"]]
    return {"verdict": cert.verdict, "evidence": ev}


def certificate_from_json(doc: dict) -> emp.EmptinessCertificate:
    ev = dict(_need(doc, "evidence"))
    if "symbols" in ev:
        ev["symbols"] = [decode_symbol(s) for s in ev["symbols"]]
    return emp.EmptinessCertificate(_need(doc, "verdict"), ev)


# -- actions ---------------------------------------------------------------------------------

def action_from_json(doc: dict) -> act_mod.TranslationLikeAction:
    params = dict(doc.get("params", {}))
    if "builtin" in doc:
        name = doc["builtin"]
        if name not in act_mod.BUILTIN_ACTIONS:
            raise InputError(f"unknown builtin action {name!r} (known: {sorted(act_mod.BUILTIN_ACTIONS)})")
        if name == "shift_e1" and "dim" not in params and "space" in doc:
            space = group_from_json(doc["space"])
            if isinstance(space, FreeAbelianGroup):
                params["dim"] = space.rank
        if name == "shift_e1" and "dim" not in params:
            params["dim"] = 2
        act = act_mod.BUILTIN_ACTIONS[name](**params)
        for key, G in (("acting", act.acting), ("space", act.space)):
            if key in doc and group_from_json(doc[key]) != G:
                raise InputError(f"{key} group does not match the builtin action {name!r}")
    else:
        H = group_from_json(_need(doc, "acting"))
        G = group_from_json(_need(doc, "space"))
        table = {g: {s: G.gens.parse(w) for s, w in row.items()} for g, row in doc.get("table", {}).items()}
        table = {word(G, g): row for g, row in table.items()}
        default = {s: G.gens.parse(w) for s, w in _need(doc, "default").items()}
        act = act_mod.table_action(H, G, table, default)
    if "displacements" in doc:
        G = act.space
        act.displacements = [word(G, w) for w in doc["displacements"]]
    return act


# -- configuration documents -----------------------------------------------------------------

def _exponent_sum(G: Group, w) -> int:
    if isinstance(G, (FreeGroup, FreeAbelianGroup)):
        bases = set(G.gens.bases)
        return sum(1 if x in bases else -1 for x in w)
    if isinstance(G, DirectProduct):
        lw, rw = G.components(w)
        return _exponent_sum(G.left, lw) + _exponent_sum(G.right, rw)
    raise InputError(f"parity configurations need an infinite group kind, not {G!r}")


def config_from_json(doc: dict, default_group: Group | None = None, default_alphabet=None) -> LazyConfiguration:
    """Configuration descriptions: constant, parity, finite_quotient, patch, synthesized, canonical."""
    kind = _need(doc, "kind")
    G = group_from_json(doc["group"]) if "group" in doc else default_group
    alphabet = [decode_symbol(a) for a in doc["alphabet"]] if "alphabet" in doc else default_alphabet
    if kind == "canonical":
        act = action_from_json(_need(doc, "action"))
        return act_mod.canonical_point(act)
    if kind == "synthesized":
        x = sft_from_json(load_document(doc["sft"]) if not isinstance(doc["sft"], dict) else doc["sft"])
        method = _need(doc, "method")
        if method == "greedy":
            return synthesis.greedy_point(x)
        if method == "domino":
            return synthesis.domino_guided_point(x)
        if method == "periodic":
            c = emp.periodic_point_search(x, int(doc.get("max_quotient", 8)))
            if c is None:
                raise InputError("no periodic point within the quotient bound")
            return c
        raise InputError(f"unknown synthesis method {method!r}")
    if G is None:
        raise InputError("configuration description needs a group")
    if kind == "constant":
        sym = decode_symbol(_need(doc, "symbol"))
        return LazyConfiguration.constant(G, alphabet or [sym], sym)
    if kind == "parity":
        syms = [decode_symbol(s) for s in doc.get("symbols", alphabet[:2] if alphabet else ["0", "1"])]
        k = len(syms)
        return LazyConfiguration(G, alphabet or syms, lambda w: syms[_exponent_sum(G, w) % k], "parity")
    if kind == "finite_quotient":
        K = group_from_json(_need(doc, "quotient"))
        phi = Homomorphism(G, K, {x: K.gens.parse(w) for x, w in _need(doc, "images").items()})
        values = {k: decode_symbol(v) for k, v in _need(doc, "values").items()}
        return synthesis.finite_orbit_point(G, K, phi, values, alphabet)
    if kind == "patch":
        cells = {word(G, c["cell"]): decode_symbol(c["symbol"]) for c in _need(doc, "cells")}
        fallback = config_from_json(doc["fallback"], G, alphabet) if "fallback" in doc else None
        alpha = alphabet or sorted(set(cells.values()), key=str)
        fill = decode_symbol(doc["fill"]) if "fill" in doc else alpha[0]
        if fallback is None:
            return LazyConfiguration(G, alpha, lambda w: cells.get(w, fill), "patch")
        return LazyConfiguration(G, alpha, lambda w: cells[w] if w in cells else fallback(w), "patch")
    if kind == "displacement_constant":
        H = group_from_json(_need(doc, "acting"))
        table = {s: word(G, w) for s, w in _need(doc, "table").items()}
        sym = tuple((s, table[s]) for s in H.gens.letters)
        return LazyConfiguration.constant(G, [sym], sym)
    raise InputError(f"unknown configuration kind {kind!r}")
