"""Command-line surface: exact arithmetic, set membership, witnesses,
comparisons, and the oracle verification report, in text or JSON.

Exit codes: 0 success, 1 domain errors (violated preconditions), 2 parse
errors (malformed inputs).
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .core import (
    DomainError,
    ParseError,
    corner_contains,
    difference_hom,
    format_element,
    format_word,
    invert,
    is_zero,
    leq,
    multiply,
    parse_element,
    quotient_mod,
    to_bicyclic,
)
from .continuity import shift_witness
from .sequences import SequencePair
from .sets import RightHalf, Staircase, UpperHalf, UpSet, staircase_member, upset_member, upset_minus_staircase, upset_trace
from .topology import (
    LcShift,
    MinInverse,
    NbhdDescriptor,
    NotFound,
    TopologySpec,
    basic_nbhd,
    compare_at_zero,
    corner_tail,
    distinctness_certificate,
    nbhd_difference,
    nbhd_member,
)
from . import serde, verification


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: {exc}") from exc


def _load_seqs(path: str) -> SequencePair:
    return serde.seqpair_from_json(_load_json(path))


def _load_topology(path: str) -> TopologySpec:
    return serde.topology_from_json(_load_json(path))


def _parse_pair(text: str):
    p = parse_element(text)
    if is_zero(p):
        raise ParseError(f"expected a pair, got zero: {text!r}")
    return p


def _parse_apex_list(text: str) -> tuple:
    pieces = re.findall(r"\([^()]*\)", text)
    leftover = re.sub(r"\([^()]*\)", "", text).replace(",", "").strip()
    if not pieces or leftover:
        raise ParseError(f"not a comma-separated apex list: {text!r}")
    return tuple(_parse_pair(p) for p in pieces)


def _emit(args, text: str, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


def _bool_out(args, value: bool) -> None:
    _emit(args, "true" if value else "false", value)


def _elements_out(args, elems) -> None:
    _emit(
        args,
        " ".join(format_element(e) for e in elems),
        [serde.element_to_json(e) for e in elems],
    )


def _probe_from_args(spec: TopologySpec, args) -> NbhdDescriptor:
    if isinstance(spec, MinInverse):
        if args.a is None or args.b is None:
            raise ParseError("quadrant topology needs --a and --b thresholds")
        return basic_nbhd(spec, thresholds=(args.a, args.b))
    apexes = None
    if getattr(args, "apexes_file", None):
        payload = _load_json(args.apexes_file)
        return serde.nbhd_from_json(spec, payload)
    if args.apexes:
        apexes = _parse_apex_list(args.apexes)
    if not apexes:
        raise ParseError("this topology needs --apexes (or --apexes-file)")
    return basic_nbhd(spec, apexes=apexes)


def _cmd_mul(args):
    r = multiply(parse_element(args.x), parse_element(args.y))
    _emit(args, format_element(r), serde.element_to_json(r))


def _cmd_inv(args):
    r = invert(parse_element(args.x))
    _emit(args, format_element(r), serde.element_to_json(r))


def _cmd_leq(args):
    _bool_out(args, leq(parse_element(args.x), parse_element(args.y)))


def _cmd_upset(args):
    u = UpSet(_parse_pair(args.apex))
    if args.member is not None:
        _bool_out(args, upset_member(u, parse_element(args.member)))
    elif args.trace_right is not None or args.trace_upper is not None:
        half = (
            RightHalf(args.trace_right)
            if args.trace_right is not None
            else UpperHalf(args.trace_upper)
        )
        seg = upset_trace(u, half)
        payload = serde.segment_to_json(seg)
        payload["points"] = [serde.element_to_json(p) for p in seg.points()]
        text = " ".join(format_element(p) for p in seg.points()) or "empty"
        _emit(args, text, payload)
    elif args.minus_d:
        if not args.seqs:
            raise ParseError("--minus-d needs --seqs FILE")
        st = Staircase(_load_seqs(args.seqs))
        _elements_out(args, upset_minus_staircase(st, u))
    else:
        raise ParseError("upset needs one of --member, --trace-right, --trace-upper, --minus-d")


def _cmd_dmember(args):
    st = Staircase(_load_seqs(args.seqs))
    _bool_out(args, staircase_member(st, parse_element(args.element)))


def _cmd_nbhd(args):
    spec = _load_topology(args.topology)
    U = _probe_from_args(spec, args)
    if args.member is not None:
        _bool_out(args, nbhd_member(U, parse_element(args.member)))
    elif args.inner_apexes is not None:
        V = basic_nbhd(spec, apexes=_parse_apex_list(args.inner_apexes))
        _elements_out(args, nbhd_difference(U, V))
    elif args.corner_tail is not None:
        _elements_out(args, corner_tail(U, args.corner_tail))
    else:
        raise ParseError("nbhd needs one of --member, --inner-apexes, --corner-tail")


def _cmd_witness(args):
    spec = _load_topology(args.topology)
    U = _probe_from_args(spec, args)
    wit = shift_witness(spec, _parse_pair(args.elem), args.side, U, verify_window=args.window)
    payload = serde.witness_to_json(wit)
    text = "\n".join(
        [
            f"element {format_element(wit.element)} side {wit.side}",
            "U apexes: " + " ".join(format_element(p) for p in wit.U.apexes),
            "V apexes: " + " ".join(format_element(p) for p in wit.V.apexes),
            "trace: " + " ".join(format_element(p) for p in wit.trace_apexes),
            f"verified window: {wit.verified_window}",
        ]
    )
    _emit(args, text, payload)


def _cmd_compare(args):
    coarse = _load_topology(args.coarse)
    fine = _load_topology(args.fine)
    probe = _probe_from_args(coarse, args)
    verdict = compare_at_zero(coarse, fine, probe, args.window)
    payload = serde.verdict_to_json(verdict)
    rel = payload["relation"]
    if rel == "contains_witness":
        text = "contains witness: " + json.dumps(payload["inner"], sort_keys=True)
    elif rel == "separated_by":
        text = "separated by " + format_element(tuple(payload["point"]))
    else:
        text = f"inconclusive at window {payload['window']}"
    _emit(args, text, payload)


def _cmd_distinct(args):
    result = distinctness_certificate(_load_seqs(args.seqs1), _load_seqs(args.seqs2), args.window)
    payload = serde.certificate_to_json(result)
    if isinstance(result, NotFound):
        _emit(args, f"not found at window {result.window}", payload)
    else:
        _emit(args, format_element(result), payload)


def _cmd_corner(args):
    if args.contains is not None:
        _bool_out(args, corner_contains(args.n, parse_element(args.contains)))
    elif args.to_bicyclic is not None:
        w = to_bicyclic(args.n, parse_element(args.to_bicyclic))
        payload = 0 if is_zero(w) else [w.i, w.j]
        _emit(args, format_word(w), payload)
    else:
        raise ParseError("corner needs one of --contains, --to-bicyclic")


def _cmd_quotient(args):
    x = parse_element(args.element)
    if args.mod is not None:
        r = quotient_mod(args.mod, x)
    else:
        r = difference_hom(x)
    _emit(args, str(r), r)


def _cmd_verify(args):
    seqs = _load_seqs(args.seqs) if args.seqs else None
    results = verification.all_checks(args.window, seqs)
    failures = 0
    for name, ok, detail in results:
        failures += not ok
        if args.format == "text":
            print(f"{'PASS' if ok else 'FAIL'}  {name:24s} {detail}")
    if args.format == "json":
        print(
            json.dumps(
                [{"property": n, "ok": ok, "detail": d} for n, ok, d in results],
                sort_keys=True,
            )
        )
    else:
        print(f"{len(results) - failures}/{len(results)} properties hold")
    if failures:
        raise DomainError(f"{failures} properties failed")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extbicyclic",
        description="Exact computations on the extended bicyclic semigroup with adjoined zero.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.set_defaults(fn=fn)
        return p

    p = add("mul", _cmd_mul, "multiply two elements")
    p.add_argument("x")
    p.add_argument("y")

    p = add("inv", _cmd_inv, "invert an element")
    p.add_argument("x")

    p = add("leq", _cmd_leq, "natural partial order test")
    p.add_argument("x")
    p.add_argument("y")

    p = add("upset", _cmd_upset, "up-set membership, traces and staircase differences")
    p.add_argument("--apex", required=True)
    p.add_argument("--member")
    p.add_argument("--trace-right", type=int)
    p.add_argument("--trace-upper", type=int)
    p.add_argument("--minus-d", action="store_true")
    p.add_argument("--seqs")

    p = add("dmember", _cmd_dmember, "staircase membership")
    p.add_argument("--seqs", required=True)
    p.add_argument("element")

    p = add("nbhd", _cmd_nbhd, "basic-neighborhood membership, differences, corner tails")
    p.add_argument("--topology", required=True)
    p.add_argument("--apexes")
    p.add_argument("--apexes-file")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--member")
    p.add_argument("--inner-apexes")
    p.add_argument("--corner-tail", type=int)

    p = add("witness", _cmd_witness, "separate-continuity shift witness")
    p.add_argument("--topology", required=True)
    p.add_argument("--elem", required=True)
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("--apexes")
    p.add_argument("--apexes-file")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--window", type=int)

    p = add("compare", _cmd_compare, "fit a fine-family basic inside a coarse probe")
    p.add_argument("--coarse", required=True)
    p.add_argument("--fine", required=True)
    p.add_argument("--apexes")
    p.add_argument("--apexes-file")
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--window", type=int, default=6)

    p = add("distinct", _cmd_distinct, "distinctness certificate for two sequence encodings")
    p.add_argument("--seqs1", required=True)
    p.add_argument("--seqs2", required=True)
    p.add_argument("--window", type=int, default=10)

    p = add("corner", _cmd_corner, "corner membership and the bicyclic normal form")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--contains")
    p.add_argument("--to-bicyclic")

    p = add("quotient", _cmd_quotient, "difference homomorphism, optionally mod m")
    p.add_argument("--mod", type=int)
    p.add_argument("element")

    p = add("verify", _cmd_verify, "oracle/symbolic agreement report")
    p.add_argument("--window", type=int, default=5)
    p.add_argument("--seqs")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.fn(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
