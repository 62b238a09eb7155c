"""Batch command line front end.

Each command reads one JSON document (a path, or ``-`` for stdin) and writes
exactly one JSON document to stdout.  Exit status: 0 success, 1 well-formed
but invalid (``validate`` on a non-array), 2 malformed input or any error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import d4
from .endentry import delta_and_gammas, end_entries, end_params, omega
from .errors import LpkitError, ParseError
from .families import CASE_I, CASE_IV, FamilyBase, base_from_array, family, sweep
from .matrixrep import (
    build_split_model,
    check_idempotents,
    parray_from_traces,
    primitive_idempotents,
    principal_sequences,
)
from .parray import classify_type, complete_from_seed, validate
from .reconstruct import ReconstructionInput, reconstruct
from .serialize import (
    array_from_json,
    array_to_json,
    check_schema,
    document,
    dumps,
    end_params_to_json,
    ends_from_json,
    ends_to_json,
    failure_to_json,
    parse_d,
    parse_field,
    parse_scalars,
    report_to_json,
    scalars,
    typeinfo_to_json,
)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _read(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return check_schema(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def cmd_validate(args):
    report = validate(array_from_json(_read(args.file)))
    return document(**report_to_json(report)), 0 if report.valid else 1


def cmd_classify(args):
    return document(**typeinfo_to_json(classify_type(array_from_json(_read(args.file))))), 0


def cmd_d4(args):
    try:
        word = d4.parse_word(args.word)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    pa = d4.apply(array_from_json(_read(args.file)), word)
    return document(**array_to_json(pa)), 0


def cmd_end(args):
    pa = array_from_json(_read(args.file))
    ee = end_entries(pa)
    es = delta_and_gammas(ee, omega(pa))
    return document(
        end_entries=ends_to_json(ee),
        end_params=end_params_to_json(end_params(pa)),
        omega=str(es.omega),
        delta=str(es.delta),
        gammas=scalars(es.gammas),
    ), 0


def cmd_reconstruct(args):
    obj = _read(args.file)
    F, d = parse_field(obj), parse_d(obj)
    if "beta" not in obj or "ends" not in obj:
        raise ParseError("reconstruct input needs 'beta' and 'ends'")
    q = obj.get("q")
    inp = ReconstructionInput(F, d, ends_from_json(obj["ends"], F, d), F.parse(obj["beta"]),
                              None if q is None else F.parse(q))
    result = reconstruct(inp)
    doc = document(**array_to_json(result.array))
    if args.trace:
        t = result.trace
        doc["trace"] = {
            "type": t.type_tag,
            "q": None if t.q is None else str(t.q),
            "delta": str(t.delta),
            "delta_star": str(t.delta_star),
            "L": scalars(t.L), "K": scalars(t.K),
            "Lstar": scalars(t.Lstar), "Kstar": scalars(t.Kstar),
            "Ldown": scalars(t.Ldown), "Kdown": scalars(t.Kdown),
            "recovered_end_params": end_params_to_json(t.recovered_end_params),
        }
    return doc, 0


def _family_base(obj, case):
    if "ends" not in obj:
        q = obj.get("q")
        pa = array_from_json(obj)
        base = base_from_array(pa, None if q is None else pa.field.parse(q))
    else:
        F, d = parse_field(obj), parse_d(obj)
        q = obj.get("q")
        base = FamilyBase(F, d, ends_from_json(obj["ends"], F, d), case,
                          None if q is None else F.parse(q))
    if base.case != case:
        raise ParseError(f"input is a type {base.case} base, not {case}")
    return base


def _instance_json(inst):
    return {
        "zeta": str(inst.zeta),
        "valid": inst.valid,
        "failures": [failure_to_json(f) for f in inst.failures],
    }


def cmd_family(args):
    base = _family_base(_read(args.file), args.case)
    if args.sweep:
        result = sweep(base)
        records = []
        for inst in result.instances:
            rec = _instance_json(inst)
            rec["array"] = array_to_json(inst.candidate)
            records.append(rec)
        return document(case=base.case, bound=result.bound, n_valid=result.n_valid,
                        n_invalid=result.n_invalid, instances=records), 0
    inst = family(base, base.field.parse(args.zeta))
    doc = document(**array_to_json(inst.candidate))
    doc.update(_instance_json(inst))
    return doc, 0


def cmd_complete(args):
    obj = _read(args.file)
    F, d = parse_field(obj), parse_d(obj)
    for key in ("theta", "theta_star"):
        if key not in obj:
            raise ParseError(f"missing '{key}'")
    pa = complete_from_seed(F, d, parse_scalars(F, obj["theta"], "theta"),
                            parse_scalars(F, obj["theta_star"], "theta_star"),
                            F.parse(args.phi1))
    return document(**array_to_json(pa)), 0


def cmd_oracle(args):
    pa = array_from_json(_read(args.file))
    model = build_split_model(pa)
    idem = primitive_idempotents(model)
    recomputed = parray_from_traces(model, idem)
    a, a_star = principal_sequences(model, idem)
    return document(
        array=array_to_json(recomputed),
        a=scalars(a),
        a_star=scalars(a_star),
        idempotents_ok=all(check_idempotents(model, idem).values()),
    ), 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lpkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        return p

    add("validate", cmd_validate, "check the five parameter-array conditions")
    add("classify", cmd_classify, "fundamental parameter, q and type")
    p = add("d4", cmd_d4, "apply a D4 word (letters s, d, D)")
    p.add_argument("--word", required=True)
    add("end", cmd_end, "end-entries, end-parameters, Omega, Delta, Gammas")
    p = add("reconstruct", cmd_reconstruct, "parameter array from beta and end-entries")
    p.add_argument("--trace", action="store_true")
    p = add("family", cmd_family, "degenerate one-parameter family")
    p.add_argument("--case", required=True, choices=[CASE_I, CASE_IV])
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--zeta")
    g.add_argument("--sweep", action="store_true")
    p = add("complete", cmd_complete, "fill in split parameters from eigenvalues and phi_1")
    # the seed is phi_1, the first member of the second split sequence
    p.add_argument("--phi1", required=True)
    add("oracle", cmd_oracle, "recompute the array and principal sequences from matrices")
    for p in sub.choices.values():
        p.add_argument("file", help="input JSON path, or - for stdin")
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        doc, status = args.func(args)
    except LpkitError as exc:
        print(f"lpkit: {exc.kind}: {exc}", file=stderr)
        doc, status = document(error={"kind": exc.kind, "detail": str(exc)}), 2
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"lpkit: {type(exc).__name__}: {exc}", file=stderr)
        doc, status = document(error={"kind": type(exc).__name__, "detail": str(exc)}), 2
    stdout.write(dumps(doc))
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
