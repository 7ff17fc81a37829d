"""Command-line front end.

Exit codes: 0 success, 1 negative answer (empty, verification failed),
2 undecided, 3 bad input, 4 capacity exceeded.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import actions, certify as emp, serialize as ser, synthesis, transfer
from .errors import (CapacityError, ContractViolation, DecodeError, EmptySubshiftError, InputError,
                     OracleUnknownError)
from .subshift import Sft, admissible_patches, verify_configuration

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3, 4


class Result:
    def __init__(self, doc: dict, code: int = EXIT_OK, text: list | None = None):
        self.doc, self.code, self.text = doc, code, text or []


def _sft(path) -> Sft:
    return ser.sft_from_json(ser.load_document(path))


def _config(path, group=None, alphabet=None):
    return ser.config_from_json(ser.load_document(path), group, alphabet)


def _verification_json(G, v) -> dict:
    out = {"ok": v.ok, "radius": v.radius, "violation": None}
    if not v.ok:
        out["violation"] = {"anchor": ser.render(G, v.anchor), "pattern": ser.pattern_to_json(G, v.pattern)}
    return out


def _patch_result(kind: str, x: Sft, c, radius: int, extra: dict | None = None) -> Result:
    G = x.group
    p = c.on_ball(radius)
    v = verify_configuration(x, c, radius)
    doc = {"command": kind, "radius": radius, "patch": ser.patch_to_json(G, p),
           "verification": _verification_json(G, v)}
    doc.update(extra or {})
    text = [f"{kind}: radius {radius}, {len(p)} cells, verification {'ok' if v.ok else 'FAILED'}",
            " ".join(str(ser.encode_symbol(s)) for s in p.symbols)]
    return Result(doc, EXIT_OK if v.ok else EXIT_NEGATIVE, text)


# -- subcommands -------------------------------------------------------------------------------

def cmd_check_empty(args) -> Result:
    x = _sft(args.sft)
    cert = emp.emptiness(x, budget=args.budget)
    doc = {"command": "check-empty", "certificate": ser.certificate_to_json(cert)}
    code = {emp.EMPTY: EXIT_NEGATIVE, emp.UNKNOWN: EXIT_UNKNOWN}.get(cert.verdict, EXIT_OK)
    return Result(doc, code, [f"verdict: {cert.verdict}", f"evidence: {ser.dumps(doc['certificate']['evidence']).strip()}"])


def cmd_patches(args) -> Result:
    x = _sft(args.sft)
    if args.radius < x.window_radius:
        raise InputError(f"radius must be at least the window radius {x.window_radius}")
    pats = admissible_patches(x, args.radius)
    G = x.group
    cells = x.cells(args.radius)
    doc = {"command": "patches", "radius": args.radius, "count": len(pats),
           "cells": [ser.render(G, w) for w in cells],
           "patches": [ser.patch_to_json(G, p) for p in pats]}
    text = [f"{len(pats)} admissible patches on {len(cells)} cells"]
    text += [" ".join(str(ser.encode_symbol(s)) for s in p.symbols) for p in pats]
    return Result(doc, EXIT_OK, text)


def cmd_verify(args) -> Result:
    x = _sft(args.sft)
    c = _config(args.config, x.group, x.alphabet)
    if c.group != x.group:
        raise InputError("configuration and SFT live on different groups")
    v = verify_configuration(x, c, args.radius)
    doc = {"command": "verify", "verification": _verification_json(x.group, v)}
    text = [f"verification at radius {args.radius}: {'ok' if v.ok else 'FAILED'}"]
    if not v.ok:
        text.append(f"violation at {ser.render(x.group, v.anchor)!r}")
    return Result(doc, EXIT_OK if v.ok else EXIT_NEGATIVE, text)


def cmd_synthesize(args) -> Result:
    x = _sft(args.sft)
    radius = args.radius
    extra = {"method": args.method}
    if args.method == "greedy":
        c = synthesis.greedy_point(x)
    elif args.method == "domino":
        c = synthesis.domino_guided_point(x)
    else:
        c = emp.periodic_point_search(x, args.max_quotient)
        if c is None:
            cert = emp.emptiness(x, budget=args.max_quotient)
            doc = {"command": "synthesize", "method": "periodic", "found": False,
                   "certificate": ser.certificate_to_json(cert)}
            code = EXIT_NEGATIVE if cert.is_empty else EXIT_UNKNOWN
            return Result(doc, code, ["no periodic point within the quotient bound"])
    return _patch_result("synthesize", x, c, radius, extra)


def cmd_transfer(args) -> Result:
    x = _sft(args.sft)
    kind = args.kind
    doc_in = ser.load_document(args.map)
    if kind == "pullback":
        rho = ser.hom_from_json(doc_in)
        kd = transfer.KernelData(rho, [ser.word(rho.source, w) for w in doc_in.get("kernel_generators", [])])
        y = transfer.pullback_sft(kd, x)
        cfg = (lambda c: transfer.pullback_config(rho, c)), rho.target
    elif kind == "free-ext":
        if "transversal" in doc_in:
            d = ser.finite_index_from_json(doc_in)
            y = transfer.free_extension_sft(d.embedding, x)
            cfg = (lambda c: transfer.lift_config_finite_index(d, c)), d.subgroup
        else:
            emb = ser.hom_from_json(doc_in)
            y = transfer.free_extension_sft(emb, x)
            cfg = None, emb.source
    elif kind == "higher-block":
        d = ser.finite_index_from_json(doc_in)
        y = transfer.higher_block_sft(d, x)
        cfg = (lambda c: transfer.higher_block_encode(d, c, x.alphabet)), d.ambient
    else:
        act = ser.action_from_json(doc_in)
        alpha = act.alphabet()
        T = actions.build_T_sft(act.space, alpha, actions.RelatorSet(act.acting))
        y = actions.overlay_sft(T, x)
        cfg = (lambda z: actions.encode_overlay(z, act, alpha)), act.acting
    doc = {"command": "transfer", "kind": kind, "sft": ser.sft_to_json(y)}
    text = [f"transferred SFT on {y.group!r}: {len(y.alphabet)} symbols, {len(y.forbidden)} forbidden patterns"]
    code = EXIT_OK
    if args.config:
        fn, src_group = cfg
        if fn is None:
            raise InputError("configurations can be lifted through a free extension only with a transversal")
        c = _config(args.config, src_group, x.alphabet)
        res = _patch_result("transfer", y, fn(c), args.radius)
        doc["patch"] = res.doc["patch"]
        doc["verification"] = res.doc["verification"]
        text += res.text
        code = res.code
    return Result(doc, code, text)


def cmd_walk(args) -> Result:
    cfg_doc = ser.load_document(args.config)
    c = ser.config_from_json(cfg_doc)
    if "acting" in cfg_doc:
        H = ser.group_from_json(cfg_doc["acting"])
    elif "action" in cfg_doc:
        H = ser.action_from_json(cfg_doc["action"]).acting
    else:
        raise InputError("walk needs the acting group (field 'acting' or 'action')")
    G = c.group
    start = ser.word(G, args.start)
    w = H.gens.parse(args.word)
    end = actions.walk_phi(start, c, w)
    doc = {"command": "walk", "start": ser.render(G, start), "word": H.gens.render(w), "end": ser.render(G, end)}
    return Result(doc, EXIT_OK, [f"{doc['start'] or '1'} --{doc['word'] or '1'}--> {doc['end'] or '1'}"])


# -- parser ------------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("-o", "--output", help="write the result here instead of stdout")

    p = argparse.ArgumentParser(prog="groupshift", description="SFTs on finitely generated groups")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("check-empty", parents=[common], help="emptiness certificate")
    s.add_argument("sft")
    s.add_argument("--budget", type=int, default=8)
    s.set_defaults(func=cmd_check_empty)

    s = sub.add_parser("patches", parents=[common], help="admissible patches on a ball")
    s.add_argument("sft")
    s.add_argument("--radius", type=int, required=True)
    s.set_defaults(func=cmd_patches)

    s = sub.add_parser("verify", parents=[common], help="check a configuration on a ball")
    s.add_argument("sft")
    s.add_argument("config")
    s.add_argument("--radius", type=int, required=True)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("synthesize", parents=[common], help="construct a point and dump a patch")
    s.add_argument("method", choices=("greedy", "domino", "periodic"))
    s.add_argument("sft")
    s.add_argument("--radius", type=int, default=10)
    s.add_argument("--max-quotient", type=int, default=8)
    s.set_defaults(func=cmd_synthesize)

    s = sub.add_parser("transfer", parents=[common], help="move an SFT (and optionally a point) to another group")
    s.add_argument("kind", choices=("pullback", "free-ext", "higher-block", "overlay"))
    s.add_argument("map", help="homomorphism, embedding, finite-index or action document")
    s.add_argument("sft")
    s.add_argument("--config", help="configuration to transfer alongside")
    s.add_argument("--radius", type=int, default=4)
    s.set_defaults(func=cmd_transfer)

    s = sub.add_parser("walk", parents=[common], help="follow a displacement configuration along a word")
    s.add_argument("config")
    s.add_argument("word")
    s.add_argument("--start", default="")
    s.set_defaults(func=cmd_walk)
    return p


def _render(res: Result, fmt: str) -> str:
    if fmt == "text":
        return "\n".join(res.text) + "\n"
    return ser.dumps({"spec": ser.SCHEMA_VERSION, **res.doc})


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse uses 2 for usage errors, which is reserved for undecided verdicts here
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    for name in ("radius", "budget", "max_quotient"):
        if getattr(args, name, 0) < 0:
            print(f"error: --{name.replace('_', '-')} must be non-negative", file=sys.stderr)
            return EXIT_INPUT
    try:
        res = args.func(args)
    except (InputError, KeyError, TypeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CapacityError as exc:
        print(f"capacity exceeded: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OracleUnknownError as exc:
        print(f"undecided: {exc}", file=sys.stderr)
        return EXIT_UNKNOWN
    except (EmptySubshiftError, ContractViolation, DecodeError) as exc:
        print(f"negative: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    out = _render(res, args.format)
    if args.output:
        Path(args.output).write_text(out, encoding="utf-8")
    else:
        sys.stdout.write(out)
    return res.code


run = main


if __name__ == "__main__":
    sys.exit(main())
