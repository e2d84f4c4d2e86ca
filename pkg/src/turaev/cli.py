"""Command-line front end.

Every subcommand takes the alphabet order via ``--order`` (e.g. ``abBA``),
``--surface g,b`` (default order for that surface) or the ``TURAEV_ORDER``
environment variable.  Exit status: 0 on success, 1 on invalid input,
2 when ``verify`` finds an invariant violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cobracket import TensorElement, cobracket, cobracket_power
from . import simplicity
from .errors import InvalidInput, NotApplicable
from .linked_pairs import linked_pairs
from .surface import Surface, default_order
from .words import Alphabet, CyclicWord

ENV_ORDER = "TURAEV_ORDER"

WORD_COMMANDS = (
    "reduce",
    "canon",
    "power",
    "root",
    "linked-pairs",
    "cobracket",
    "cobracket-power",
    "norm",
    "self-intersection",
    "is-simple",
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(1, f"{self.prog}: error: {message}\n")


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _int_list(text: str) -> list[int]:
    return [_positive_int(t) for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    src = common.add_mutually_exclusive_group()
    src.add_argument("--order", help="alphabet order listing all 2q letters, e.g. abBA")
    src.add_argument("--surface", help="surface 'g,b'; uses its default order")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="turaev", description="Turaev cobracket on cyclic words in a free group.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in WORD_COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        sp.add_argument("--word", required=True)
        if name in ("power", "cobracket-power"):
            sp.add_argument("--p", type=_positive_int, required=True)
        elif name == "norm":
            sp.add_argument("--p", type=_positive_int, default=1)
        elif name == "is-simple":
            sp.add_argument("--verify", action="store_true", help="cross-check with delta(V^3)")
    sp = sub.add_parser("verify", parents=[common])
    sp.add_argument("--max-len", type=_positive_int, required=True)
    sp.add_argument("--p", type=_int_list, default=[3, 4], help="comma-separated powers, e.g. 3,4")
    sp.add_argument("--cojacobi-max-len", type=int, default=7)
    sp.add_argument("--workers", type=_positive_int, default=1)
    sp = sub.add_parser("search", parents=[common])
    sp.add_argument("--max-len", type=_positive_int, required=True)
    sp.add_argument("--workers", type=_positive_int, default=1)
    return parser


def _alphabet(args) -> Alphabet:
    if args.order:
        return Alphabet(args.order)
    if args.surface:
        return default_order(Surface.parse(args.surface))
    env = os.environ.get(ENV_ORDER)
    if env:
        return Alphabet(env)
    raise InvalidInput(f"no alphabet order: pass --order, --surface or set {ENV_ORDER}")


def _representative(alphabet: Alphabet, word: str) -> str:
    return alphabet.cyclic_reduce(alphabet.reduce(word))


def _emit(args, record: dict, text: str, out) -> None:
    if args.format == "json":
        out.write(json.dumps(record) + "\n")
    else:
        out.write(text + "\n")


def _tensor_text(x: TensorElement) -> str:
    if not x:
        return "0"
    return "\n".join(f"{r['coeff']:+d}  {r['left']} (x) {r['right']}" for r in x.to_records())


def _power_label(v: CyclicWord) -> str:
    root, k = v.primitive_root()
    return root.word if k == 1 else f"{root.word}^{k}"


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args, out)
    except (InvalidInput, NotApplicable) as exc:
        sys.stderr.write(f"turaev {args.command}: error: {exc}\n")
        return 1


def _dispatch(args, out) -> int:
    alphabet = _alphabet(args)
    base = {"order": alphabet.order}
    cmd = args.command

    if cmd in WORD_COMMANDS:
        word = alphabet.check(args.word)
        base["input"] = word

    if cmd == "reduce":
        reduced = alphabet.reduce(word)
        _emit(args, {**base, "reduced": reduced, "cyclically_reduced": alphabet.cyclic_reduce(reduced)},
              f"{reduced}    [order {alphabet.order}]", out)
    elif cmd == "canon":
        v = alphabet.canonicalize(word)
        _emit(args, {**base, "canonical": v.word}, f"{v.word}    [order {alphabet.order}]", out)
    elif cmd == "power":
        w = alphabet.power(word, args.p)
        _emit(args, {**base, "p": args.p, "power": w}, w, out)
    elif cmd == "root":
        v = alphabet.canonicalize(word)
        if not v:
            raise InvalidInput("the empty word has no primitive root")
        root, k = v.primitive_root()
        _emit(args, {**base, "canonical": v.word, "primitive": root.word, "exponent": k},
              f"{root.word}^{k}", out)
    elif cmd == "linked-pairs":
        rep = _representative(alphabet, word)
        lps = linked_pairs(rep, alphabet)
        text = "\n".join(f"({p.i},{p.j}) type {p.kind} r={p.r} sign {p.sign:+d}" for p in lps) or "(none)"
        _emit(args, {**base, "word": rep, "pairs": lps.to_records()},
              f"# {len(lps)} linked pairs of {rep or '(empty)'} [order {alphabet.order}]\n{text}", out)
    elif cmd == "cobracket":
        x = cobracket(alphabet.canonicalize(word))
        _emit(args, {**base, "terms": x.to_records()}, _tensor_text(x), out)
    elif cmd == "cobracket-power":
        v = alphabet.canonicalize(word)
        x = cobracket_power(v, args.p)
        _emit(args, {**base, "p": args.p, "terms": x.to_records()}, _tensor_text(x), out)
    elif cmd == "norm":
        v = alphabet.canonicalize(word)
        n = cobracket_power(v, args.p).norm() if v else 0
        _emit(args, {**base, "p": args.p, "norm": n}, str(n), out)
    elif cmd == "self-intersection":
        s = simplicity.self_intersection(alphabet.canonicalize(word))
        _emit(args, {**base, "self_intersection": s}, str(s), out)
    elif cmd == "is-simple":
        v = alphabet.canonicalize(word)
        answer = simplicity.is_power_of_simple(v, verify=args.verify)
        report = simplicity.class_report(v)
        label = _power_label(v)
        if answer:
            note = "simple" if report.exponent == 1 else f"power of simple: {label}"
        else:
            note = (f"self-intersection {report.self_intersection}" if report.exponent == 1
                    else f"power of non-simple: {label}")
        _emit(args, report.to_record(), f"{'true' if answer else 'false'} ({note})", out)
    elif cmd == "verify":
        summary = simplicity.exhaustive_verify(alphabet, args.max_len, tuple(args.p),
                                               args.cojacobi_max_len, args.workers)
        if args.format == "json":
            out.write(json.dumps(summary.to_record()) + "\n")
        else:
            lines = [f"order {summary.order}  max_len {summary.max_len}  p {list(summary.p_set)}",
                     f"words {summary.words}  nonpower {summary.nonpower_words}  "
                     f"m=l=1 coincidences {summary.coincidences_m1}"]
            lines += [f"  {name:<30} {count}" for name, count in sorted(summary.checks.items())]
            lines += [f"VIOLATION {v}" for v in summary.violations]
            lines.append("OK" if summary.ok else f"FAILED ({len(summary.violations)} violations)")
            out.write("\n".join(lines) + "\n")
        return 0 if summary.ok else 2
    elif cmd == "search":
        found = simplicity.search_turaev1_counterexamples(alphabet, args.max_len, args.workers)
        for rep in found:
            _emit(args, rep.to_record(), f"{rep.word.word}  s={rep.self_intersection}", out)
        if args.format == "text":
            out.write(f"# {len(found)} classes with delta = 0 and s > 0 up to length "
                      f"{args.max_len} [order {alphabet.order}]\n")
    return 0


def main() -> None:
    sys.exit(run())
