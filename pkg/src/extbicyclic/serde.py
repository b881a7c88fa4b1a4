"""JSON encoding/decoding for every serialized type.

Formats are stable and round-trip exactly: elements are ``0`` or ``[a, b]``;
sequence pairs are ``{"x": {"prefix": [...], "step": s}, "y": {...}}``;
topology specs are tagged by ``kind`` (``lcshift`` | ``min_sh`` | ``min_i``
| ``discrete``); neighborhood payloads are ``{"apexes": [[a,b], ...]}`` or
``{"a": ..., "b": ...}``.
"""

from __future__ import annotations

from typing import Any

from .core import Element, ParseError, ZERO, is_zero
from .continuity import ShiftWitness
from .sequences import AffineSeq, SequencePair
from .sets import DiagonalSegment, UpSet
from .topology import (
    ComparisonVerdict,
    ContainsWitness,
    Discrete,
    InconclusiveAtWindow,
    LcShift,
    MinInverse,
    MinShift,
    NbhdDescriptor,
    NotFound,
    SeparatedBy,
    TopologySpec,
    basic_nbhd,
)
from .continuity import (
    EmptySolutions,
    SingletonSolution,
    SolutionSet,
    UpSetSolutions,
)


def element_to_json(x: Element) -> Any:
    return 0 if is_zero(x) else [x[0], x[1]]


def element_from_json(obj: Any) -> Element:
    if isinstance(obj, int) and not isinstance(obj, bool) and obj == 0:
        return ZERO
    if (
        isinstance(obj, list)
        and len(obj) == 2
        and all(isinstance(v, int) and not isinstance(v, bool) for v in obj)
    ):
        return (obj[0], obj[1])
    raise ParseError(f"not an element: {obj!r}")


def pair_from_json(obj: Any) -> tuple[int, int]:
    p = element_from_json(obj)
    if is_zero(p):
        raise ParseError("expected a pair, got zero")
    return p


def seqpair_to_json(s: SequencePair) -> dict:
    return {
        "x": {"prefix": list(s.x.prefix), "step": s.x.step},
        "y": {"prefix": list(s.y.prefix), "step": s.y.step},
    }


def _seq_from(obj: Any, role: str) -> AffineSeq:
    if not isinstance(obj, dict) or "prefix" not in obj or "step" not in obj:
        raise ParseError(f"{role} sequence must be an object with 'prefix' and 'step'")
    prefix = obj["prefix"]
    if not isinstance(prefix, list) or not all(isinstance(v, int) for v in prefix):
        raise ParseError(f"{role} prefix must be a list of integers")
    if not isinstance(obj["step"], int):
        raise ParseError(f"{role} step must be an integer")
    return AffineSeq(tuple(prefix), obj["step"])


def seqpair_from_json(obj: Any) -> SequencePair:
    if not isinstance(obj, dict):
        raise ParseError("sequence pair must be a JSON object")
    return SequencePair(_seq_from(obj.get("x"), "x"), _seq_from(obj.get("y"), "y"))


def topology_to_json(spec: TopologySpec) -> dict:
    if isinstance(spec, LcShift):
        return {"kind": "lcshift", "seqs": seqpair_to_json(spec.seqs)}
    if isinstance(spec, MinShift):
        return {"kind": "min_sh"}
    if isinstance(spec, MinInverse):
        return {"kind": "min_i"}
    return {"kind": "discrete"}


def topology_from_json(obj: Any) -> TopologySpec:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise ParseError("topology spec must be an object with a 'kind'")
    kind = obj["kind"]
    if kind == "lcshift":
        return LcShift(seqpair_from_json(obj.get("seqs")))
    if kind == "min_sh":
        return MinShift()
    if kind == "min_i":
        return MinInverse()
    if kind == "discrete":
        return Discrete()
    raise ParseError(f"unknown topology kind: {kind!r}")


def nbhd_to_json(U: NbhdDescriptor) -> dict:
    if isinstance(U.spec, MinInverse):
        return {"a": U.thresholds[0], "b": U.thresholds[1]}
    if isinstance(U.spec, Discrete):
        return {}
    return {"apexes": [[a, b] for a, b in U.apexes]}


def nbhd_from_json(spec: TopologySpec, obj: Any) -> NbhdDescriptor:
    if not isinstance(obj, dict):
        raise ParseError("neighborhood payload must be a JSON object")
    if isinstance(spec, MinInverse):
        if not (isinstance(obj.get("a"), int) and isinstance(obj.get("b"), int)):
            raise ParseError("quadrant payload needs integer 'a' and 'b'")
        return basic_nbhd(spec, thresholds=(obj["a"], obj["b"]))
    if isinstance(spec, Discrete):
        return basic_nbhd(spec)
    apexes = obj.get("apexes")
    if not isinstance(apexes, list) or not apexes:
        raise ParseError("payload needs a non-empty 'apexes' list")
    return basic_nbhd(spec, apexes=tuple(pair_from_json(p) for p in apexes))


def upset_to_json(u: UpSet) -> dict:
    return {"apex": element_to_json(u.apex)}


def segment_to_json(seg: DiagonalSegment) -> dict:
    return {"diff": seg.diff, "x_lo": seg.x_lo, "x_hi": seg.x_hi}


def segment_from_json(obj: Any) -> DiagonalSegment:
    try:
        return DiagonalSegment(int(obj["diff"]), int(obj["x_lo"]), int(obj["x_hi"]))
    except (KeyError, TypeError) as exc:
        raise ParseError(f"not a diagonal segment: {obj!r}") from exc


def solution_to_json(sol: SolutionSet) -> dict:
    if isinstance(sol, EmptySolutions):
        return {"kind": "empty"}
    if isinstance(sol, SingletonSolution):
        return {"kind": "singleton", "element": element_to_json(sol.element)}
    return {"kind": "upset", "apex": element_to_json(sol.upset.apex)}


def witness_to_json(w: ShiftWitness) -> dict:
    return {
        "element": element_to_json(w.element),
        "side": w.side,
        "U": nbhd_to_json(w.U),
        "V": nbhd_to_json(w.V),
        "trace": [[a, b] for a, b in w.trace_apexes],
        "verified_window": w.verified_window,
    }


def witness_from_json(spec: TopologySpec, obj: Any) -> ShiftWitness:
    return ShiftWitness(
        element=pair_from_json(obj["element"]),
        side=obj["side"],
        U=nbhd_from_json(spec, obj["U"]),
        V=nbhd_from_json(spec, obj["V"]),
        trace_apexes=tuple(pair_from_json(p) for p in obj["trace"]),
        verified_window=obj.get("verified_window"),
    )


def verdict_to_json(v: ComparisonVerdict) -> dict:
    if isinstance(v, ContainsWitness):
        return {
            "relation": "contains_witness",
            "spec": topology_to_json(v.inner.spec),
            "inner": nbhd_to_json(v.inner),
        }
    if isinstance(v, SeparatedBy):
        return {"relation": "separated_by", "point": element_to_json(v.point)}
    return {"relation": "inconclusive_at_window", "window": v.window}


def verdict_from_json(obj: Any) -> ComparisonVerdict:
    rel = obj.get("relation")
    if rel == "contains_witness":
        spec = topology_from_json(obj["spec"])
        if isinstance(spec, (MinInverse, Discrete)):
            return ContainsWitness(nbhd_from_json(spec, obj["inner"]))
        apexes = obj["inner"].get("apexes", [])
        U = NbhdDescriptor(spec, tuple(pair_from_json(p) for p in apexes))
        return ContainsWitness(U)
    if rel == "separated_by":
        return SeparatedBy(pair_from_json(obj["point"]))
    if rel == "inconclusive_at_window":
        return InconclusiveAtWindow(int(obj["window"]))
    raise ParseError(f"unknown verdict: {obj!r}")


def certificate_to_json(result) -> dict:
    if isinstance(result, NotFound):
        return {"found": False, "window": result.window}
    return {"found": True, "point": element_to_json(result)}
