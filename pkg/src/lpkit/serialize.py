"""JSON encoding of fields, scalars, arrays and reports.

Scalars are written as strings in their field's text encoding ("n/d",
"a+b*r", "[c0,...,c_{k-1}]").  Every top-level document carries
``"lpkit_schema": 1``; keys are emitted in a fixed order so identical inputs
give identical bytes.
"""

from __future__ import annotations

import json

from .endentry import END_KEYS, EndEntries, EndParams
from .errors import ParseError
from .exactfield import Field, field_from_json
from .parray import Failure, ParameterArray, TypeInfo, ValidationReport

SCHEMA_VERSION = 1
ARRAY_KEYS = ("field", "d", "theta", "theta_star", "varphi", "phi")


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def document(**body) -> dict:
    doc = {"lpkit_schema": SCHEMA_VERSION}
    doc.update(body)
    return doc


def check_schema(obj):
    if not isinstance(obj, dict):
        raise ParseError("top-level JSON value must be an object")
    version = obj.get("lpkit_schema", SCHEMA_VERSION)
    if version != SCHEMA_VERSION:
        raise ParseError(f"unsupported lpkit_schema {version!r}")
    return obj


def scalars(seq) -> list:
    return [str(x) for x in seq]


def parse_scalars(F: Field, seq, name: str) -> tuple:
    if not isinstance(seq, list):
        raise ParseError(f"'{name}' must be a list")
    return tuple(F.parse(x) for x in seq)


def parse_field(obj) -> Field:
    if "field" not in obj:
        raise ParseError("missing 'field'")
    return field_from_json(obj["field"])


def parse_d(obj) -> int:
    d = obj.get("d")
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ParseError(f"'d' must be a positive integer, got {d!r}")
    return d


def array_to_json(pa: ParameterArray) -> dict:
    return {
        "field": pa.field.to_json(),
        "d": pa.d,
        "theta": scalars(pa.theta),
        "theta_star": scalars(pa.theta_star),
        "varphi": scalars(pa.varphi),
        "phi": scalars(pa.phi),
    }


def array_from_json(obj) -> ParameterArray:
    check_schema(obj)
    missing = [k for k in ARRAY_KEYS if k not in obj]
    if missing:
        raise ParseError(f"parameter array is missing {missing}")
    F, d = parse_field(obj), parse_d(obj)
    seqs = {k: parse_scalars(F, obj[k], k) for k in ARRAY_KEYS[2:]}
    want = {"theta": d + 1, "theta_star": d + 1, "varphi": d, "phi": d}
    for k, n in want.items():
        if len(seqs[k]) != n:
            raise ParseError(f"'{k}' has length {len(seqs[k])}, expected {n} for d = {d}")
    return ParameterArray(F, d, **seqs)


def ends_to_json(ee: EndEntries) -> dict:
    return {k: str(getattr(ee, k)) for k in END_KEYS}


def ends_from_json(obj, F: Field, d: int) -> EndEntries:
    if not isinstance(obj, dict):
        raise ParseError("'ends' must be an object")
    missing = [k for k in END_KEYS if k not in obj]
    if missing:
        raise ParseError(f"end-entries missing {missing}")
    return EndEntries(*(F.parse(obj[k]) for k in END_KEYS), d=d, field=F)


def end_params_to_json(ep: EndParams) -> dict:
    return {"vphi1": str(ep.vphi1), "vphid": str(ep.vphid),
            "phi1": str(ep.phi1), "phid": str(ep.phid)}


def failure_to_json(f: Failure) -> dict:
    return {"kind": f.kind, "where": list(f.where)}


def report_to_json(r: ValidationReport) -> dict:
    return {
        "valid": r.valid,
        "failures": [failure_to_json(f) for f in r.failures],
        "vartheta": None if r.vartheta is None else scalars(r.vartheta),
        "beta_plus_one": None if r.beta_plus_one is None else str(r.beta_plus_one),
        "witness_index": r.witness_index,
    }


def typeinfo_to_json(t: TypeInfo) -> dict:
    return {
        "beta": str(t.beta),
        "q_candidates": scalars(t.q_candidates),
        "type": t.type_tag,
        "degenerate": t.degenerate,
    }
