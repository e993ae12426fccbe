"""Command-line interface.

Every command writes one JSON envelope::

    {"command": ..., "inputs": {...}, "result": ..., "errors": [...]}

Gödel numbers are always decimal strings.  Exit codes: 0 success (a proof
that fails to check is still a successful run), 2 malformed input, 3 domain
error, 4 resource limit.
"""

from __future__ import annotations

import argparse
import json
import sys
from functools import lru_cache
from typing import Any, Callable, TextIO

from . import __version__
from .enumeration import DEFAULT_BUDGET
from .errors import DirectRefError, ParseError, ProofFormatError, ResourceLimit
from .numbering import DEFAULT_BOUND, Scheme, decode, encode
from .proofs import (
    SYSTEM_S, Proof, canonical_bindings, check_proof, proof_from_json, proof_to_json,
    translate_proof,
)
from .selfref import (
    smullyan_selfcheck, smullyan_sentence, sprime_axiom, sprime_selfcheck, sprime_system,
    sstar_fixed_point, sstar_selfcheck, sstar_system,
)
from .syntax import parse, print_formula

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_DOMAIN = 3
EXIT_RESOURCE = 4

_INPUT_ERRORS = (ParseError, ProofFormatError)


class _InputError(Exception):
    """Malformed command input that is not a formula syntax error."""


def _exit_code(exc: BaseException) -> int:
    if isinstance(exc, (_INPUT_ERRORS + (_InputError,))):
        return EXIT_INPUT
    if isinstance(exc, ResourceLimit):
        return EXIT_RESOURCE
    return EXIT_DOMAIN


def _nonneg_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _body(arg: str | None, stdin: TextIO) -> str:
    return (stdin.read() if arg in (None, "-") else arg).strip()


def _load_proof(arg: str | None, stdin: TextIO) -> Proof:
    try:
        if arg in (None, "-"):
            text = stdin.read()
        else:
            with open(arg, encoding="utf-8") as fh:
                text = fh.read()
        data = json.loads(text)
    except (OSError, json.JSONDecodeError) as e:
        raise ProofFormatError(f"cannot read proof: {e}") from None
    return proof_from_json(data)


def _system(name: str, property_text: str | None, bound: int):
    if name == "S":
        return SYSTEM_S
    if name == "Sprime":
        return sprime_system(bound, DEFAULT_BUDGET)
    if property_text is None:
        raise _InputError("system Sstar needs --property")
    return sstar_system(sstar_fixed_point(parse(property_text), bound))


# --------------------------------------------------------------------------
# Commands: each returns (inputs, result) and may raise package errors.


def _cmd_encode(args, stdin):
    text = _body(args.formula, stdin)
    inputs = {"scheme": args.scheme, "formula": text, "bound": args.bound}
    return inputs, lambda: str(encode(parse(text), args.scheme, args.bound))


def _cmd_decode(args, stdin):
    text = _body(args.code, stdin)
    inputs = {"scheme": args.scheme, "code": text, "bound": args.bound}

    def run():
        if not text.isdigit():
            raise _InputError(f"not a decimal number: {text!r}")
        return print_formula(decode(int(text), args.scheme, args.bound))
    return inputs, run


def _cmd_smullyan(args, stdin):
    text = _body(args.formula, stdin)
    inputs = {"class_sign": text, "bound": args.bound}

    def run():
        s = smullyan_sentence(parse(text), args.bound)
        return {**s.to_dict(), "selfcheck": smullyan_selfcheck(s, args.bound)}
    return inputs, run


def _cmd_sprime(args, stdin):
    inputs = {"index": args.index, "bound": args.bound}

    def run():
        ax = sprime_axiom(args.index, args.bound, DEFAULT_BUDGET)
        return {**ax.to_dict(), "selfcheck": sprime_selfcheck(ax, args.bound)}
    return inputs, run


def _cmd_sstar(args, stdin):
    text = _body(args.formula, stdin)
    inputs = {"property": text, "bound": args.bound}

    def run():
        fp = sstar_fixed_point(parse(text), args.bound)
        return {**fp.to_dict(), "selfcheck": sstar_selfcheck(fp, args.bound)}
    return inputs, run


def _cmd_check(args, stdin):
    inputs = {"system": args.system, "proof_file": args.proof_file or "-",
              "property": args.property, "bound": args.bound}

    def run():
        proof = _load_proof(args.proof_file, stdin)
        system = _system(args.system, args.property, args.bound)
        return check_proof(system, proof).to_dict()
    return inputs, run


def _cmd_translate(args, stdin):
    inputs = {"system": args.system, "proof_file": args.proof_file or "-",
              "property": args.property, "bound": args.bound}

    def run():
        proof = _load_proof(args.proof_file, stdin)
        system = _system(args.system, args.property, args.bound)
        bindings = canonical_bindings(system, proof)
        translated = translate_proof(proof, bindings)
        return {
            "bindings": {str(c): str(n) for c, n in sorted(bindings.items())},
            "proof": proof_to_json(translated),
            "verdict": check_proof(SYSTEM_S, translated).to_dict(),
        }
    return inputs, run


# --------------------------------------------------------------------------


@lru_cache(maxsize=1)
def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--bound", type=_nonneg_int, default=argparse.SUPPRESS,
                        help=f"numeral expansion bound (default {DEFAULT_BOUND})")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     default=argparse.SUPPRESS, help="JSON envelope output (default)")
    fmt.add_argument("--text", dest="format", action="store_const", const="text",
                     default=argparse.SUPPRESS, help="plain text output")

    parser = argparse.ArgumentParser(
        prog="directref", parents=[common],
        description="Gödel numberings and directly self-referential sentences.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    schemes = [s.value for s in Scheme]
    p = sub.add_parser("encode", parents=[common], help="formula -> Gödel number")
    p.add_argument("--scheme", choices=schemes, default="std")
    p.add_argument("formula", nargs="?", help="formula text, '-' or omitted for stdin")
    p.set_defaults(handler=_cmd_encode)

    p = sub.add_parser("decode", parents=[common], help="Gödel number -> formula")
    p.add_argument("--scheme", choices=schemes, default="std")
    p.add_argument("code", nargs="?", help="decimal code, '-' or omitted for stdin")
    p.set_defaults(handler=_cmd_decode)

    p = sub.add_parser("smullyan", parents=[common], help="self-coding sentence for a class sign")
    p.add_argument("formula", nargs="?")
    p.set_defaults(handler=_cmd_smullyan)

    p = sub.add_parser("sprime", parents=[common], help="the i-th S' axiom")
    p.add_argument("index", type=int)
    p.set_defaults(handler=_cmd_sprime)

    p = sub.add_parser("sstar", parents=[common], help="single-constant fixed point")
    p.add_argument("formula", nargs="?")
    p.set_defaults(handler=_cmd_sstar)

    for name, handler, systems, default in (
            ("check", _cmd_check, ["S", "Sprime", "Sstar"], None),
            ("translate", _cmd_translate, ["Sprime", "Sstar"], "Sprime")):
        p = sub.add_parser(name, parents=[common],
                           help="check a proof" if name == "check" else "eliminate constants from a proof")
        p.add_argument("--system", choices=systems, default=default, required=default is None)
        p.add_argument("--property", help="property formula defining Sstar")
        p.add_argument("proof_file", nargs="?", help="JSON proof, '-' or omitted for stdin")
        p.set_defaults(handler=handler)
    return parser


def _text_result(command: str, result: Any) -> str:
    if isinstance(result, str):
        return result
    if command == "check":
        return "ok" if result["ok"] else f"rejected at line {result['line']}: {result['reason']}"
    if command == "translate":
        lines = [f"{n}. {line['formula']}" for n, line in enumerate(result["proof"])]
        v = result["verdict"]
        lines.append("ok in S" if v["ok"] else f"rejected in S at line {v['line']}: {v['reason']}")
        return "\n".join(lines)
    return "\n".join(f"{k}: {v if isinstance(v, str) else json.dumps(v)}" for k, v in result.items())


def main(argv: list[str] | None = None, stdin: TextIO | None = None,
         stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    # Codes routinely exceed the interpreter's default decimal-conversion cap.
    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    args.bound = getattr(args, "bound", DEFAULT_BOUND)
    fmt = getattr(args, "format", "json")

    handler: Callable = args.handler
    result = None
    errors = []
    code = EXIT_OK
    inputs, run = handler(args, stdin)
    try:
        result = run()
    except (DirectRefError, _InputError, ValueError) as e:
        errors.append({"type": type(e).__name__.lstrip("_"), "message": str(e)})
        code = _exit_code(e)

    if fmt == "text":
        if errors:
            for err in errors:
                print(f"error: {err['type']}: {err['message']}", file=stderr)
        else:
            print(_text_result(args.command, result), file=stdout)
    else:
        envelope = {"command": args.command, "inputs": inputs, "result": result, "errors": errors}
        stdout.write(json.dumps(envelope, indent=2, ensure_ascii=False) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
