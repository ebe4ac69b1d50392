"""Command-line front end.

Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage
error.  Word sets print one per line in (length, lexicographic) order.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import construction, extension, richness, switches
from .palindex import PalIndex
from .phi_search import Falsification, cache_lookup, cache_store, phi
from .words import Alphabet, WordError, sort_words

RAW_LIMIT = 1000
INLINE_LIMIT = 100_000


@dataclass
class CliConfig:
    alphabet_override: str | None = None
    output: str = "text"
    jobs: int = 1
    cache_path: str | None = None

    def alphabet_for(self, *words: str) -> Alphabet:
        if self.alphabet_override is not None:
            a = Alphabet(self.alphabet_override)
            for w in words:
                a.validate(w)
            return a
        return Alphabet.infer(*words)


def _emit(cfg: CliConfig, payload: dict, lines: list[str]) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _word_summary(w: str, raw: bool) -> list[str]:
    if raw or len(w) <= RAW_LIMIT:
        return [w]
    return [f"length {len(w)}", f"head {w[:40]}", f"tail {w[-40:]}"]


def cmd_check(cfg: CliConfig, args) -> int:
    cert = richness.is_rich(args.word, cfg.alphabet_for(args.word))
    _emit(cfg, cert.as_dict(), ["rich" if cert.verdict else f"not rich (first failure at prefix {cert.first_failure + 1})"])
    return 0 if cert.verdict else 1


def cmd_palins(cfg: CliConfig, args) -> int:
    w = args.word
    ix = PalIndex(cfg.alphabet_for(w), w)
    count = ix.distinct_palindromes()
    pals = sort_words({w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1) if w[i:j] == w[i:j][::-1]})
    lines = [str(count)] + (pals if args.list else [])
    _emit(cfg, {"word": w, "count": count, "palindromes": [""] + pals}, lines)
    return 0


def cmd_extend(cfg: CliConfig, args) -> int:
    cfg.alphabet_for(args.word)
    out = extension.std_ext(args.word, args.side, args.steps)
    _emit(cfg, {"word": args.word, "side": args.side, "steps": args.steps, "result": out}, [out])
    return 0


def cmd_flexed(cfg: CliConfig, args) -> int:
    cfg.alphabet_for(args.word)
    pts = sort_words(extension.flexed_points(args.word))
    _emit(cfg, {"word": args.word, "flexed_points": pts}, pts)
    return 0


def cmd_omega(cfg: CliConfig, args) -> int:
    trace = extension.omega(args.word, cfg.alphabet_for(args.word), args.budget)
    if trace.exceeded:
        print(f"forced walk exceeded budget from {args.word!r}", file=sys.stderr)
        _emit(cfg, trace.as_dict(), ["omega exceeded", f"path {trace.path}"])
        return 1
    lines = [f"omega {trace.omega}", f"path {trace.path}", "branch " + " ".join(trace.branch_letters)]
    _emit(cfg, trace.as_dict(), lines)
    return 0


def cmd_switches(cfg: CliConfig, args) -> int:
    if args.tail is not None:
        cfg.alphabet_for(args.word, args.tail)
        found = switches.switch_suf(args.word, args.tail).sorted()
    else:
        cfg.alphabet_for(args.word)
        found = switches.switches_of(args.word).sorted()
    _emit(cfg, {"word": args.word, "tail": args.tail, "switches": found}, found)
    return 0


def cmd_swc(cfg: CliConfig, args) -> int:
    cfg.alphabet_for(*args.words)
    if args.reduce:
        out = sort_words(switches.swc_set(args.words))
    else:
        out = [switches.swc(t) for t in args.words]
    _emit(cfg, {"switches": args.words, "closures": out}, out)
    return 0


def _h_payload(report: construction.ConstructionReport, side_dir: str | None) -> dict:
    d = report.as_dict()
    if len(report.h_n) <= INLINE_LIMIT:
        d["h_n"] = report.h_n
    else:
        path = Path(side_dir or ".") / f"h_{report.n}_q{report.q}.txt"
        path.write_text(report.h_n + "\n", encoding="utf-8")
        d["h_n_file"] = str(path)
    return d


def cmd_gen(cfg: CliConfig, args) -> int:
    if args.what == "g":
        g = construction.gen_g(args.n)
        _emit(cfg, {"n": args.n, "g_len": len(g), "g_n": g}, _word_summary(g, args.raw))
        return 0
    report = construction.gen_h(args.n, Alphabet(cfg.alphabet_override or "01"))
    _emit(cfg, _h_payload(report, args.side_dir), _word_summary(report.h_n, args.raw))
    return 0


def cmd_verify(cfg: CliConfig, args) -> int:
    report = construction.gen_h(args.n, Alphabet(cfg.alphabet_override or "01"))
    v = construction.verify_h(report)
    lines = [
        f"n {report.n}",
        f"q {report.q}",
        f"rho {report.rho}",
        f"h_len {len(report.h_n)}",
        f"hbar_len {len(report.h_bar)}",
        f"rich {v.rich}",
        f"unique_extension {v.unique_extension} (forced steps {v.forced_steps})",
        f"bound {float(report.bound)} ok {v.bound_ok}",
        f"ratio {float(v.ratio):.6f} ok {v.ratio_ok}",
        "failures " + (" ".join(v.failures) or "none"),
    ]
    _emit(cfg, _h_payload(report, args.side_dir), lines)
    return 0 if v.ok else 1


def cmd_phi(cfg: CliConfig, args) -> int:
    alphabet = Alphabet(cfg.alphabet_override) if cfg.alphabet_override else Alphabet.standard(args.q)
    result = None
    if cfg.cache_path:
        result = cache_lookup(args.n, alphabet.q, cfg.cache_path)
    if result is None:
        try:
            result = phi(args.n, alphabet, shards=cfg.jobs, jobs=cfg.jobs, symmetric=args.symmetric)
        except Falsification as exc:
            print(f"FALSIFICATION: {exc}", file=sys.stderr)
            return 1
        if cfg.cache_path:
            cache_store(result, cfg.cache_path)
    lines = [f"phi {result.phi}", f"enumerated {result.enumerated}"] + result.witnesses
    _emit(cfg, result.as_dict(), lines)
    return 0 if result.phi <= result.n else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps subparser defaults from clobbering options given earlier
    common.add_argument("--alphabet", dest="alphabet_override", default=argparse.SUPPRESS,
                        help="symbol order; first is zero, second is one")
    common.add_argument("--json", dest="output", action="store_const", const="json", default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker processes / shards for phi")
    common.add_argument("--cache", dest="cache_path", default=argparse.SUPPRESS, help="JSON-lines result cache for phi")

    parser = argparse.ArgumentParser(prog="richwords", description="Palindromic richness toolkit", parents=[common])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="richness verdict")
    p.add_argument("word")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("palins", parents=[common], help="distinct palindromic factors")
    p.add_argument("word")
    p.add_argument("--list", action="store_true")
    p.set_defaults(func=cmd_palins)

    p = sub.add_parser("extend", parents=[common], help="standard extension")
    p.add_argument("word")
    p.add_argument("--side", choices=["left", "right"], default="right")
    p.add_argument("--steps", type=int, default=1)
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("flexed", parents=[common], help="flexed points")
    p.add_argument("word")
    p.set_defaults(func=cmd_flexed)

    p = sub.add_parser("omega", parents=[common], help="forced extension walk")
    p.add_argument("word")
    p.add_argument("--budget", type=int)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("switches", parents=[common], help="switch factors")
    p.add_argument("word")
    p.add_argument("--tail", help="list switchSuf(WORD, TAIL) instead")
    p.set_defaults(func=cmd_switches)

    p = sub.add_parser("swc", parents=[common], help="switch palindromic closures")
    p.add_argument("words", nargs="+")
    p.add_argument("--reduce", action="store_true", help="print the reduced closure set")
    p.set_defaults(func=cmd_swc)

    for name, func in (("gen", cmd_gen), ("verify", cmd_verify)):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("what", choices=["g", "h"] if name == "gen" else ["h"])
        p.add_argument("n", type=int)
        p.add_argument("--raw", action="store_true", help="print long words in full")
        p.add_argument("--side-dir", help="directory for words too long to inline in JSON")
        p.set_defaults(func=func)

    p = sub.add_parser("phi", parents=[common], help="exhaustive maximum of omega")
    p.add_argument("n", type=int)
    p.add_argument("--q", type=int, default=2)
    p.add_argument("--symmetric", action="store_true", help="enumerate up to alphabet permutation")
    p.set_defaults(func=cmd_phi)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = CliConfig(
        getattr(args, "alphabet_override", None),
        getattr(args, "output", "text"),
        getattr(args, "jobs", 1),
        getattr(args, "cache_path", None),
    )
    try:
        if cfg.alphabet_override is not None:
            Alphabet(cfg.alphabet_override)
        if cfg.jobs < 1:
            raise WordError("--jobs must be positive")
        return args.func(cfg, args)
    except WordError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
