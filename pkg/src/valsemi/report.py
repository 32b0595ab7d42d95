"""Serialization of command results: JSON documents, aligned text and CSV rows.

Counts and bounds are written as decimal strings so that no consumer rounds
them through a float.  Every JSON document carries ``schema: 1``.
"""

from __future__ import annotations

import csv
import io
import json

from valsemi.exact_arith import format_rational
from valsemi.obstruction import Certificate, ObstructionReport
from valsemi.semigroup_engine import BoundedSemigroup
from valsemi.valuation_lab import INFINITE, Lemma1Report, Lemma2Report

SCHEMA_VERSION = 1

NONCONCLUSIVE_NOTE = (
    "ConsistentUpTo is not a realizability proof: the inequality is only a necessary condition"
)

_DEC = {"type": "string", "pattern": "^[0-9]+$"}
_RAT = {"type": "string", "pattern": "^-?[0-9]+(/[0-9]+)?$"}
_POS = {"type": "integer", "minimum": 1}


def _doc(command: str, properties: dict, required: list) -> dict:
    return {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "properties": {
            "schema": {"const": SCHEMA_VERSION},
            "command": {"const": command},
            "generated_at": {"type": "string"},
            **properties,
        },
        "required": ["schema", "command", *required],
        "additionalProperties": False,
    }


_INPUT = {
    "type": "object",
    "properties": {
        "kind": {"enum": ["explicit", "example1"]},
        "generators": {"type": "array", "items": _RAT},
        "horizon": _POS,
    },
    "required": ["kind"],
    "additionalProperties": False,
}

SCHEMAS = {
    "gen": _doc(
        "gen",
        {"input": _INPUT, "bound": _RAT, "s0": _RAT, "size": _DEC, "elements": {"type": "array", "items": _RAT}},
        ["input", "bound", "s0", "size", "elements"],
    ),
    "count": _doc(
        "count",
        {"input": _INPUT, "at": _RAT, "s0": _RAT, "count": _DEC},
        ["input", "at", "s0", "count"],
    ),
    "check": _doc(
        "check",
        {
            "input": _INPUT,
            "n": _POS,
            "d_max": _POS,
            "s0": _RAT,
            "rows": {
                "type": "array",
                "items": {
                    "type": "object",
                    "properties": {"d": _POS, "count": _DEC, "bound": _DEC, "violated": {"type": "boolean"}},
                    "required": ["d", "count", "bound", "violated"],
                    "additionalProperties": False,
                },
            },
            "verdict": {
                "type": "object",
                "properties": {"kind": {"enum": ["ViolatedAt", "ConsistentUpTo"]}, "d": _POS},
                "required": ["kind", "d"],
                "additionalProperties": False,
            },
            "conclusive": {"type": "boolean"},
            "note": {"type": "string"},
        },
        ["input", "n", "d_max", "s0", "rows", "verdict", "conclusive"],
    ),
    "example1": _doc(
        "example1",
        {
            "certificates": {
                "type": "array",
                "minItems": 1,
                "items": {
                    "type": "object",
                    "properties": {
                        "n": _POS,
                        "lhs": _DEC,
                        "block": _DEC,
                        "mid": _DEC,
                        "rhs": _DEC,
                        "chain_holds": {"type": "boolean"},
                    },
                    "required": ["n", "lhs", "block", "mid", "rhs", "chain_holds"],
                    "additionalProperties": False,
                },
            }
        },
        ["certificates"],
    ),
    "monomial": _doc(
        "monomial",
        {
            "weights": {"type": "array", "items": _RAT, "minItems": 1},
            "d": _POS,
            "s0": _RAT,
            "lemma1": {
                "type": "object",
                "properties": {"cardinality": _DEC, "bound": _DEC, "holds": {"type": "boolean"}},
                "required": ["cardinality", "bound", "holds"],
                "additionalProperties": False,
            },
            "lemma2": {
                "type": "object",
                "properties": {
                    "count": _DEC,
                    "bound": _DEC,
                    "holds": {"type": "boolean"},
                    "truncation_identity": {"type": "boolean"},
                },
                "required": ["count", "bound", "holds", "truncation_identity"],
                "additionalProperties": False,
            },
            "value": {
                "type": "object",
                "properties": {"polynomial": {"type": "string"}, "value": {"anyOf": [_RAT, {"const": "infinite"}]}},
                "required": ["polynomial", "value"],
                "additionalProperties": False,
            },
        },
        ["weights", "d", "s0", "lemma1", "lemma2"],
    ),
}


def _base(command: str) -> dict:
    return {"schema": SCHEMA_VERSION, "command": command}


def gen_doc(input_desc: dict, S: BoundedSemigroup) -> dict:
    return {
        **_base("gen"),
        "input": input_desc,
        "bound": format_rational(S.bound),
        "s0": format_rational(S.s0),
        "size": str(len(S.elements)),
        "elements": [format_rational(q) for q in S.elements],
    }


def count_doc(input_desc: dict, at, s0, count: int) -> dict:
    return {
        **_base("count"),
        "input": input_desc,
        "at": format_rational(at),
        "s0": format_rational(s0),
        "count": str(count),
    }


def check_doc(input_desc: dict, report: ObstructionReport) -> dict:
    doc = {
        **_base("check"),
        "input": input_desc,
        "n": report.n,
        "d_max": report.d_max,
        "s0": format_rational(report.s0),
        "rows": [
            {"d": r.d, "count": str(r.count), "bound": str(r.bound), "violated": r.violated} for r in report.rows
        ],
        "verdict": {
            "kind": "ViolatedAt" if report.verdict.violated else "ConsistentUpTo",
            "d": report.verdict.d,
        },
        "conclusive": report.conclusive,
    }
    if not report.conclusive:
        doc["note"] = NONCONCLUSIVE_NOTE
    return doc


def certificate_entry(c: Certificate) -> dict:
    return {
        "n": c.n,
        "lhs": str(c.lhs),
        "block": str(c.block),
        "mid": str(c.mid),
        "rhs": str(c.rhs),
        "chain_holds": c.chain_holds,
    }


def example1_doc(certs: list[Certificate]) -> dict:
    return {**_base("example1"), "certificates": [certificate_entry(c) for c in certs]}


def monomial_doc(weights, d: int, l1: Lemma1Report, l2: Lemma2Report, value=None) -> dict:
    doc = {
        **_base("monomial"),
        "weights": [format_rational(w) for w in weights],
        "d": d,
        "s0": format_rational(min(weights)),
        "lemma1": {"cardinality": str(l1.cardinality), "bound": str(l1.bound), "holds": l1.holds},
        "lemma2": {
            "count": str(l2.count),
            "bound": str(l2.bound),
            "holds": l2.holds,
            "truncation_identity": l2.truncation_identity,
        },
    }
    if value is not None:
        poly, v = value
        doc["value"] = {"polynomial": poly, "value": "infinite" if v is INFINITE else format_rational(v)}
    return doc


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    fmt = lambda cells: "  ".join(c.rjust(w) for c, w in zip(cells, widths)).rstrip()
    return [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]


def _input_line(desc: dict) -> str:
    if desc["kind"] == "example1":
        return f"input: example1 profile (horizon {desc['horizon']})"
    return "input: generators " + ", ".join(desc["generators"])


def to_text(doc: dict) -> str:
    cmd = doc["command"]
    lines = []
    if "generated_at" in doc:
        lines.append(f"generated_at: {doc['generated_at']}")
    if cmd == "gen":
        lines += [
            _input_line(doc["input"]),
            f"bound: {doc['bound']}  s0: {doc['s0']}  size: {doc['size']}",
            " ".join(doc["elements"]),
        ]
    elif cmd == "count":
        lines += [_input_line(doc["input"]), f"s0: {doc['s0']}", f"count below {doc['at']}: {doc['count']}"]
    elif cmd == "check":
        lines += [_input_line(doc["input"]), f"n: {doc['n']}  d_max: {doc['d_max']}  s0: {doc['s0']}"]
        lines += _table(
            ["d", "count", "bound", "violated"],
            [[str(r["d"]), r["count"], r["bound"], "yes" if r["violated"] else "no"] for r in doc["rows"]],
        )
        lines.append(f"verdict: {doc['verdict']['kind']}({doc['verdict']['d']})")
        if "note" in doc:
            lines.append(f"note: {doc['note']}")
    elif cmd == "example1":
        lines += _table(
            ["n", "lhs", "block", "mid", "rhs", "chain"],
            [
                [str(c["n"]), c["lhs"], c["block"], c["mid"], c["rhs"], "holds" if c["chain_holds"] else "FAILS"]
                for c in doc["certificates"]
            ],
        )
        lines.append("lhs = |T in [n,n+1)|, block = |U in [n,n+1)|, mid = |U in [0,n+1)|, rhs = C(2n,n) - 1")
    elif cmd == "monomial":
        l1, l2 = doc["lemma1"], doc["lemma2"]
        lines += [
            f"weights: {', '.join(doc['weights'])}  d: {doc['d']}  s0: {doc['s0']}",
            f"|S_d|: {l1['cardinality']} < {l1['bound']}: {'holds' if l1['holds'] else 'FAILS'}",
            f"|S below (d+1)s0|: {l2['count']} < {l2['bound']}: {'holds' if l2['holds'] else 'FAILS'}",
            f"truncation identity: {'holds' if l2['truncation_identity'] else 'FAILS'}",
        ]
        if "value" in doc:
            lines.append(f"value({doc['value']['polynomial']}) = {doc['value']['value']}")
    return "\n".join(lines) + "\n"


def check_csv(doc: dict) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["d", "count", "bound", "violated"])
    for r in doc["rows"]:
        w.writerow([r["d"], r["count"], r["bound"], "true" if r["violated"] else "false"])
    return buf.getvalue()
