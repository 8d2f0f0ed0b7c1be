"""Command-line interface: classify, generate, selftest.

Exit codes: 0 success, 2 validation error, 3 internal inconsistency,
1 self-test failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from neutral_ricci import selftest
from neutral_ricci.errors import (
    ClassificationError,
    DegeneracyViolation,
    InconsistencyError,
    UnknownSymbol,
    ValidationError,
)
from neutral_ricci.frame import CovariantTensor, Tetrad, convert_tensor
from neutral_ricci.taxonomy import PARENTS, REGISTRY, CanonicalParams, canonical, classify, draw, get, identify
from neutral_ricci.taxonomy.classify import encode
from neutral_ricci.taxonomy.registry import PARAMETER_NAMES

REPORT_SCHEMA = "neutral-ricci-report/1"
TENSOR_SCHEMA = "neutral-ricci-tensor/1"
SELFTEST_SCHEMA = "neutral-ricci-selftest/1"

EXIT_OK, EXIT_FAIL, EXIT_INVALID, EXIT_INCONSISTENT = 0, 1, 2, 3

# subtypes a bare parent name stands for
NONDEGENERATE = {
    "I_r": (1, 2), "I_c": (11, 12), "I_rc": (14,), "II_r": (16, 17), "II_rc": (22, 23),
    "III_t": (24,), "III_s": (26,), "III_n": (28, 29), "IV": (32, 33),
}


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _exit_for(exc: Exception) -> int:
    if isinstance(exc, ValidationError):
        return EXIT_INVALID
    return EXIT_INCONSISTENT


def _error_record(exc: Exception):
    return {"error": type(exc).__name__, "stage": getattr(exc, "stage", None), "message": str(exc)}


# -- classify ------------------------------------------------------------

def load_documents(path: str):
    try:
        if path == "-":
            data = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise ValidationError(f"cannot read {path}: {exc}", stage="input") from exc
    docs = data if isinstance(data, list) else [data]
    if not docs or not all(isinstance(d, dict) for d in docs):
        raise ValidationError("expected a tensor document or a list of them", stage="input")
    return docs


def tensor_from_document(doc, tetrad=None, tol: float = 1e-9) -> CovariantTensor:
    if "components" not in doc:
        raise ValidationError("document has no 'components'", stage="input")
    frame = tetrad or doc.get("tetrad", "null")
    try:
        frame = Tetrad.parse(frame)
    except ValueError as exc:
        raise ValidationError(f"unknown tetrad {frame!r}", stage="input") from exc
    rows = doc["components"]
    if not isinstance(rows, list):
        raise ValidationError("components must be a 4x4 array", stage="input")
    try:
        return CovariantTensor.from_rows(rows, frame, doc.get("label"), tol=tol)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"unparseable component: {exc}", stage="input") from exc


def classify_documents(docs, tetrad=None, tol: float = 1e-9):
    """One record per document plus the overall exit code."""
    records, code = [], EXIT_OK
    for i, doc in enumerate(docs):
        try:
            C = tensor_from_document(doc, tetrad, tol)
            rep = classify(C, tol=tol)
            rec = rep.as_dict()
            rec["registry"]["template"] = rep.entry.template
        except ClassificationError as exc:
            rec = _error_record(exc)
            code = max(code, _exit_for(exc))
        rec = {"index": i, **rec}
        records.append(rec)
    return records, code


def _text_table(records) -> str:
    head = ("#", "label", "mode", "pattern", "id", "code", "symbol", "notes")
    rows = []
    for r in records:
        if "error" in r:
            rows.append((str(r["index"]), "", "", "", "", "", "", f"{r['error']}: {r['message']}"))
            continue
        rows.append((str(r["index"]), r["input"]["label"] or "", r["mode"], r["root_pattern"],
                     str(r["registry"]["id"]), r["registry"]["code"], r["symbol"], "; ".join(r["warnings"])))
    widths = [max(len(x[i]) for x in [head, *rows]) for i in range(len(head))]
    lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in [head, *rows]]
    return "\n".join(lines)


def run_classify(args, out=sys.stdout) -> int:
    try:
        docs = load_documents(args.input)
    except ValidationError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    records, code = classify_documents(docs, args.tetrad, args.tol)
    if args.format == "json":
        out.write(_dump({"schema": REPORT_SCHEMA, "tol": args.tol, "reports": records}) + "\n")
    else:
        out.write(_text_table(records) + "\n")
    for r in records:
        if "error" in r:
            print(f"document {r['index']}: {r['error']}: {r['message']}", file=sys.stderr)
    return code


# -- generate --------------------------------------------------------------

def parse_params(text: str):
    if text is None or not text.strip():
        return ()
    out = []
    for raw in text.replace("−", "-").split(","):
        raw = raw.strip()
        try:
            out.append(Fraction(raw))
        except (ValueError, ZeroDivisionError):
            try:
                out.append(float(raw))
            except ValueError as exc:
                raise ValidationError(f"bad parameter {raw!r}", stage="input") from exc
    return tuple(out)


def build_params(type_ref: str, params, seed):
    """CanonicalParams and the registry ids the result may land on."""
    if type_ref in PARENTS:
        allowed = NONDEGENERATE[type_ref]
        if params:
            # III_n and IV parents mean the first form; subtype codes reach the second
            p = CanonicalParams(type_ref, params)
            canonical(p)  # constraint errors first
            if identify(p) not in allowed:
                raise DegeneracyViolation(f"parameters {tuple(str(x) for x in params)} are degenerate for parent "
                                          f"{type_ref}; request a subtype code instead", stage="generate")
            return p, allowed
        rng = random.Random(seed)
        return draw(REGISTRY[rng.choice(allowed)], rng), allowed
    try:
        entry = get(type_ref)
    except UnknownSymbol as exc:
        raise ValidationError(f"unknown type {type_ref!r}", stage="input") from exc
    if params:
        return CanonicalParams(entry.parent, params, entry.form or 1, entry.id), (entry.id,)
    return draw(entry, random.Random(seed)), (entry.id,)


def tensor_document(C: CovariantTensor, p: CanonicalParams, entry):
    return {
        "schema": TENSOR_SCHEMA,
        "tetrad": C.tetrad.value,
        "label": entry.code,
        "components": [[encode(x) for x in r] for r in C.components],
        "parameters": {k: encode(v) for k, v in zip(PARAMETER_NAMES[p.parent], p.values)},
        "form": p.form,
        "registry": {"id": entry.id, "code": entry.code, "parent": entry.parent, "symbol": entry.template},
    }


def run_generate(args, out=sys.stdout) -> int:
    try:
        params = parse_params(args.params)
        seed = args.seed if args.seed is not None else 0
        docs = []
        for k in range(args.count):
            p, allowed = build_params(args.type, params, seed + k)
            C = canonical(p)
            rep = classify(C)
            if rep.entry.id not in allowed:
                raise InconsistencyError(f"generated tensor classifies as {rep.entry.code}, expected "
                                         f"{'/'.join(REGISTRY[i].code for i in allowed)}", stage="generate")
            if args.tetrad and Tetrad.parse(args.tetrad) is not Tetrad.NULL:
                C = convert_tensor(C, Tetrad.parse(args.tetrad))
                if classify(C).entry.id != rep.entry.id:
                    raise InconsistencyError("tetrad conversion changed the type", stage="generate")
            docs.append(tensor_document(C, p, rep.entry))
            if params:
                break
    except ClassificationError as exc:
        print(str(exc), file=sys.stderr)
        return _exit_for(exc)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_INVALID
    out.write(_dump(docs[0] if len(docs) == 1 else docs) + "\n")
    return EXIT_OK


# -- selftest --------------------------------------------------------------

def run_selftest(args, out=sys.stdout) -> int:
    ok, sweeps = selftest.run(full=args.full, seed=args.seed or 0)
    doc = {"schema": SELFTEST_SCHEMA, "mode": "full" if args.full else "quick", "ok": ok,
           "sweeps": [s.as_dict() for s in sweeps],
           "failures": [f"{s.name}: {f}" for s in sweeps for f in s.failures]}
    out.write(_dump(doc) + "\n")
    return EXIT_OK if ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="neutral-ricci", description="Classify traceless Ricci tensors "
                                 "of neutral signature into one of 33 algebraic types.")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="classify tensor documents")
    c.add_argument("input", help="JSON file with one document or a list ('-' for stdin)")
    c.add_argument("--tetrad", choices=[t.value for t in Tetrad], help="override the documents' tetrad")
    c.add_argument("--tol", type=float, default=1e-9)
    c.add_argument("--format", choices=("json", "text"), default="json")
    c.set_defaults(func=run_classify)

    g = sub.add_parser("generate", help="emit canonical tensor documents")
    g.add_argument("--type", required=True, help="registry id, code (I_r.3), alias (IV.a) or parent (I_r)")
    g.add_argument("--params", help="comma-separated parameters, fractions allowed")
    g.add_argument("--seed", type=int)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--tetrad", choices=[t.value for t in Tetrad], default="null")
    g.set_defaults(func=run_generate)

    s = sub.add_parser("selftest", help="run the built-in sweeps")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--quick", action="store_true", default=True)
    mode.add_argument("--full", action="store_true")
    s.add_argument("--seed", type=int, default=0)
    s.set_defaults(func=run_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
