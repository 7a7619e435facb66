"""Command-line interface: validate, k0, classify, ring, hom, witness.

Exit codes: 0 success or verdict delivered, 1 I/O or parse error,
2 validation failure, 3 unsupported regime (even n, infinite group, order
bound).  Reports are deterministic and byte-identical across runs and
thread settings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import files
from .classify import verify_correspondence
from .errors import (
    EvenNUnsupportedError,
    InfiniteGroupError,
    InvalidTensorError,
    NotWellDefinedError,
)
from .embeddings import Embedding, induced_hom, validate_embedding
from .k0 import Witness, equal_classes, k0, witness_search
from .lattices import is_surjective
from .presentations import validate_presentation
from .tensor import ring, validate_tensor, verify_tensor_correspondence

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_VALIDATION = 2
EXIT_UNSUPPORTED = 3


def _thread_cap() -> int | None:
    """Parse ANGK0_THREADS (0 = auto).  The cap bounds internal worker
    threads; the sequential engine honors any cap."""
    raw = os.environ.get("ANGK0_THREADS")
    if raw is None:
        return 0
    try:
        value = int(raw)
    except ValueError:
        return None
    if value < 0:
        return None
    return value


def _document(command: str, digests: dict, results: dict) -> dict:
    return {
        "schema_version": files.SCHEMA_VERSION,
        "command": command,
        "digest": digests,
        "results": results,
    }


def _emit(args, document: dict, lines: list[str]) -> None:
    if getattr(args, "json", False):
        print(json.dumps(document, sort_keys=True, indent=2))
    else:
        for line in lines:
            print(line)


def _object_json(p, vec) -> dict:
    return {p.indec_names[i]: vec[i] for i in range(p.rank) if vec[i]}


def _object_text(p, vec) -> str:
    parts = [
        f"{p.indec_names[i]}^{vec[i]}" if vec[i] > 1 else p.indec_names[i]
        for i in range(p.rank)
        if vec[i]
    ]
    return " + ".join(parts) if parts else "0"


def _cert_json(p, cert) -> dict:
    out = {"status": cert.status, "reason": cert.reason}
    if cert.bound is not None:
        out["bound"] = cert.bound
    if cert.fails and cert.witness is not None:
        angle, missing = cert.witness
        out["counterexample"] = {
            "vertices": [_object_json(p, v) for v in angle.vertices],
            "missing_vertex": missing + 1,
        }
    return out


def _load(args, path):
    """Load a presentation file, or print a report and return an exit code."""
    try:
        loaded = files.load_path(path)
    except files.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return None, EXIT_PARSE
    if loaded.violations:
        doc = _document(args.command, {}, {"valid": False, "violations": list(loaded.violations)})
        _emit(args, doc, ["invalid presentation file:"] + [f"  - {v}" for v in loaded.violations])
        return None, EXIT_VALIDATION
    report = validate_presentation(loaded.presentation)
    if report.violations:
        doc = _document(
            args.command, {}, {"valid": False, "violations": list(report.violations)}
        )
        _emit(args, doc, ["invalid presentation:"] + [f"  - {v}" for v in report.violations])
        return None, EXIT_VALIDATION
    return loaded, EXIT_OK


def cmd_validate(args) -> int:
    try:
        loaded = files.load_path(args.path)
    except files.ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    violations = list(loaded.violations)
    parity = None
    classification = False
    if loaded.presentation is not None:
        report = validate_presentation(loaded.presentation)
        violations.extend(report.violations)
        parity = report.parity
        classification = report.classification_applies
        if loaded.tensor is not None:
            violations.extend(validate_tensor(loaded.tensor).violations)
    results = {
        "valid": not violations,
        "violations": violations,
        "parity": parity,
        "classification_applies": classification,
        "has_tensor": loaded.has_tensor_block,
    }
    digests = {}
    if loaded.presentation is not None and not violations:
        digests["presentation"] = files.digest(loaded.presentation, loaded.tensor)
    lines = []
    if violations:
        lines.append("invalid:")
        lines.extend(f"  - {v}" for v in violations)
    else:
        lines.append(f"valid ({parity} n; classification "
                     f"{'applies' if classification else 'does not apply'})")
    _emit(args, _document("validate", digests, results), lines)
    return EXIT_OK if not violations else EXIT_VALIDATION


def cmd_k0(args) -> int:
    loaded, code = _load(args, args.path)
    if loaded is None:
        return code
    p = loaded.presentation
    result = k0(p)
    group = result.group
    classes = {
        name: list(result.class_of([int(i == j) for j in range(p.rank)]).vec)
        for i, name in enumerate(p.indec_names)
    }
    results = {
        "invariant_factors": list(group.invariant_factors),
        "free_rank": group.free_rank,
        "order": group.order(),
        "relation_basis": [list(r) for r in result.relation_lattice.basis],
        "indecomposable_classes": classes,
    }
    lines = [
        f"invariant factors: {list(group.invariant_factors)}",
        f"free rank: {group.free_rank}",
        f"order: {group.order() if group.is_finite else 'infinite'}",
        "relation basis:",
    ]
    lines.extend(f"  {list(r)}" for r in result.relation_lattice.basis)
    lines.append("classes of indecomposables:")
    lines.extend(f"  [{name}] = {classes[name]}" for name in p.indec_names)
    _emit(
        args,
        _document("k0", {"presentation": files.digest(p, loaded.tensor)}, results),
        lines,
    )
    return EXIT_OK


def cmd_classify(args) -> int:
    loaded, code = _load(args, args.path)
    if loaded is None:
        return code
    p = loaded.presentation
    digests = {"presentation": files.digest(p, loaded.tensor)}

    def refuse(reason: str) -> int:
        doc = _document("classify", digests, {"verified": False, "reason": reason})
        _emit(args, doc, [f"unsupported: {reason}"])
        return EXIT_UNSUPPORTED

    if p.n % 2 == 0:
        return refuse("EvenNUnsupported")
    result = k0(p)
    if not result.group.is_finite:
        return refuse("InfiniteGroup")
    order = result.group.order()
    if order > args.max_order:
        return refuse(f"OrderBound: group order {order} exceeds {args.max_order}")

    report = verify_correspondence(p)
    entries = []
    lines = [f"subgroups: {report.subgroup_count}"]
    for idx, entry in enumerate(report.entries):
        entries.append(
            {
                "index": idx,
                "preimage_basis": [list(r) for r in entry.subgroup.preimage.basis],
                "order": entry.subgroup.order(),
                "dense": _cert_json(p, entry.dense),
                "complete": _cert_json(p, entry.complete),
                "round_trip": entry.round_trip,
                "generators": [
                    {
                        "element": list(g.element),
                        "object": _object_json(p, g.obj),
                        "realized": g.realizes,
                    }
                    for g in entry.generators
                ],
                "verified": entry.verified,
            }
        )
        lines.append(
            f"  subgroup {idx}: order {entry.subgroup.order()}, "
            f"dense={entry.dense.status}, complete={entry.complete.status}, "
            f"round_trip={'ok' if entry.round_trip else 'FAILED'}"
        )
    lines.append(f"distinct subcategory lattices: {report.distinct_lattices}")
    lines.append("all verified" if report.all_verified else "VERIFICATION FAILED")
    results = {
        "subgroup_count": report.subgroup_count,
        "distinct_lattices": report.distinct_lattices,
        "all_verified": report.all_verified,
        "subgroups": entries,
    }
    _emit(args, _document("classify", digests, results), lines)
    return EXIT_OK if report.all_verified else EXIT_VALIDATION


def cmd_ring(args) -> int:
    loaded, code = _load(args, args.path)
    if loaded is None:
        return code
    p = loaded.presentation
    if not loaded.has_tensor_block:
        doc = _document(
            "ring", {}, {"valid": False, "violations": ["missing tensor block"]}
        )
        _emit(args, doc, ["invalid: missing tensor block"])
        return EXIT_VALIDATION
    digests = {"presentation": files.digest(p, loaded.tensor)}
    tensor_report = validate_tensor(loaded.tensor)
    if not tensor_report.valid:
        doc = _document(
            "ring", digests, {"valid": False, "violations": list(tensor_report.violations)}
        )
        _emit(
            args,
            doc,
            ["invalid tensor table:"] + [f"  - {v}" for v in tensor_report.violations],
        )
        return EXIT_VALIDATION

    def refuse(reason: str) -> int:
        doc = _document("ring", digests, {"verified": False, "reason": reason})
        _emit(args, doc, [f"unsupported: {reason}"])
        return EXIT_UNSUPPORTED

    if p.n % 2 == 0:
        return refuse("EvenNUnsupported")
    r = ring(loaded.tensor)
    if not r.group.is_finite:
        return refuse("InfiniteGroup")

    constants = {}
    for (i, j), value in sorted(r.structure_constants().items()):
        a, b = sorted((p.indec_names[i], p.indec_names[j]))
        constants[f"{a}|{b}"] = list(value.vec)
    report = verify_tensor_correspondence(loaded.tensor)
    ideals = []
    lines = [
        f"invariant factors: {list(r.group.invariant_factors)}",
        f"unit class: {list(r.unit_class.vec)}",
        f"ideals: {report.ideal_count}",
    ]
    for idx, entry in enumerate(report.entries):
        ideals.append(
            {
                "index": idx,
                "preimage_basis": [list(row) for row in entry.ideal.subgroup.preimage.basis],
                "order": entry.ideal.subgroup.order(),
                "prime": entry.ideal.prime,
                "is_full_ring": entry.ideal.subgroup.preimage.is_full(),
                "tensor_closed": entry.tensor_closed,
                "dense": _cert_json(p, entry.dense),
                "complete": _cert_json(p, entry.complete),
                "round_trip": entry.round_trip,
                "object_prime": entry.object_prime,
                "verified": entry.verified,
            }
        )
        note = " (improper: the whole ring)" if entry.ideal.subgroup.preimage.is_full() else ""
        lines.append(
            f"  ideal {idx}: order {entry.ideal.subgroup.order()}, "
            f"prime={entry.ideal.prime}{note}"
        )
    lines.append("all verified" if report.all_verified else "VERIFICATION FAILED")
    results = {
        "invariant_factors": list(r.group.invariant_factors),
        "unit_class": list(r.unit_class.vec),
        "structure_constants": constants,
        "ideal_count": report.ideal_count,
        "distinct_lattices": report.distinct_lattices,
        "all_verified": report.all_verified,
        "ideals": ideals,
    }
    _emit(args, _document("ring", digests, results), lines)
    return EXIT_OK if report.all_verified else EXIT_VALIDATION


def cmd_hom(args) -> int:
    loaded_t, code = _load(args, args.t_path)
    if loaded_t is None:
        return code
    loaded_c, code = _load(args, args.c_path)
    if loaded_c is None:
        return code
    t_pres, c_pres = loaded_t.presentation, loaded_c.presentation
    try:
        with open(args.map_path, "r", encoding="utf-8") as fh:
            mapping = json.load(fh)
    except OSError as exc:
        print(f"error: cannot read {args.map_path}: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except json.JSONDecodeError as exc:
        print(f"error: {args.map_path}: invalid JSON: {exc.msg}", file=sys.stderr)
        return EXIT_PARSE
    if not isinstance(mapping, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in mapping.items()
    ):
        print("error: map file must be a string-to-string object", file=sys.stderr)
        return EXIT_PARSE

    digests = {
        "target": files.digest(t_pres),
        "domain": files.digest(c_pres),
    }
    violations = []
    images = []
    for name in c_pres.indec_names:
        if name not in mapping:
            violations.append(f"map: missing domain symbol {name!r}")
        elif mapping[name] not in t_pres.indec_names:
            violations.append(f"map: unknown target symbol {mapping[name]!r}")
        else:
            images.append(t_pres.indec_names.index(mapping[name]))
    for name in mapping:
        if name not in c_pres.indec_names:
            violations.append(f"map: unknown domain symbol {name!r}")
    if not violations:
        embedding = Embedding(domain=c_pres, target=t_pres, images=tuple(images))
        violations.extend(validate_embedding(embedding).violations)
    if violations:
        doc = _document(
            "hom", digests, {"valid": False, "violations": violations}
        )
        _emit(args, doc, ["invalid embedding:"] + [f"  - {v}" for v in violations])
        return EXIT_VALIDATION

    try:
        hom = induced_hom(embedding)
    except NotWellDefinedError as exc:
        results = {
            "well_defined": False,
            "witness": list(exc.witness),
            "reason": str(exc),
        }
        doc = _document("hom", digests, results)
        _emit(args, doc, [f"not well-defined: {exc}"])
        return EXIT_UNSUPPORTED
    surjective = is_surjective(hom)
    results = {
        "well_defined": True,
        "matrix": [list(r) for r in hom.matrix.entries],
        "surjective": surjective,
    }
    lines = [
        "well-defined: yes",
        f"matrix: {[list(r) for r in hom.matrix.entries]}",
        f"surjective: {'yes' if surjective else 'no'}",
    ]
    _emit(args, _document("hom", digests, results), lines)
    return EXIT_OK


def _term_json(p, term) -> dict:
    out = {"kind": term.kind, "rotation": term.rotation}
    if term.kind == "generator":
        out["generator"] = term.index
    else:
        out["object"] = _object_json(p, term.obj)
    return out


def cmd_witness(args) -> int:
    loaded, code = _load(args, args.path)
    if loaded is None:
        return code
    p = loaded.presentation
    try:
        left = files.parse_object_literal(args.left, p)
        right = files.parse_object_literal(args.right, p)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    digests = {"presentation": files.digest(p, loaded.tensor)}
    result = k0(p)
    equal = equal_classes(result, left, right)
    results = {
        "left": _object_json(p, left),
        "right": _object_json(p, right),
        "equal": equal,
        "bound": args.bound,
    }
    lines = [f"equal classes: {'yes' if equal else 'no'}"]
    if not equal:
        results["witness"] = None
        results["searched"] = False
        lines.append("no search performed (classes differ)")
    else:
        outcome = witness_search(p, left, right, args.bound)
        results["searched"] = True
        if isinstance(outcome, Witness):
            results["witness"] = {
                "complements": [_object_json(p, c) for c in outcome.complements],
                "left_terms": [_term_json(p, t) for t in outcome.left_terms],
                "right_terms": [_term_json(p, t) for t in outcome.right_terms],
            }
            lines.append("witness found:")
            lines.append(
                "  complements: "
                + ", ".join(_object_text(p, c) for c in outcome.complements)
            )
            lines.append(f"  left decomposition: {len(outcome.left_terms)} summand(s)")
            lines.append(f"  right decomposition: {len(outcome.right_terms)} summand(s)")
        else:
            results["witness"] = None
            results["note"] = (
                f"no witness within bound {outcome.bound}; "
                "this does not refute equality"
            )
            lines.append(
                f"no witness within bound {outcome.bound} "
                "(not a refutation of equality)"
            )
    _emit(args, _document("witness", digests, results), lines)
    return EXIT_OK


def _add_output_flags(sub):
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit a JSON report")
    group.add_argument(
        "--text", dest="json", action="store_false", help="emit text (default)"
    )
    sub.set_defaults(json=False)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="angk0",
        description="Grothendieck groups of finitely presented angle categories",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate a presentation file")
    p_validate.add_argument("path")
    _add_output_flags(p_validate)
    p_validate.set_defaults(func=cmd_validate)

    p_k0 = sub.add_parser("k0", help="compute the Grothendieck group")
    p_k0.add_argument("path")
    _add_output_flags(p_k0)
    p_k0.set_defaults(func=cmd_k0)

    p_classify = sub.add_parser(
        "classify", help="verify the subgroup/subcategory correspondence"
    )
    p_classify.add_argument("path")
    p_classify.add_argument("--max-order", type=int, default=256)
    _add_output_flags(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_ring = sub.add_parser("ring", help="compute the Grothendieck ring and its ideals")
    p_ring.add_argument("path")
    _add_output_flags(p_ring)
    p_ring.set_defaults(func=cmd_ring)

    p_hom = sub.add_parser("hom", help="check an induced homomorphism")
    p_hom.add_argument("t_path", help="target presentation (arity 3)")
    p_hom.add_argument("c_path", help="domain presentation")
    p_hom.add_argument("map_path", help="JSON object {domain symbol: target symbol}")
    _add_output_flags(p_hom)
    p_hom.set_defaults(func=cmd_hom)

    p_witness = sub.add_parser("witness", help="search for a class-equality witness")
    p_witness.add_argument("path")
    p_witness.add_argument("--left", required=True, help='object literal, e.g. {"a": 1}')
    p_witness.add_argument("--right", required=True, help="object literal")
    p_witness.add_argument("--bound", type=int, default=2)
    _add_output_flags(p_witness)
    p_witness.set_defaults(func=cmd_witness)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if _thread_cap() is None:
        print("error: ANGK0_THREADS must be a nonnegative integer", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        return args.func(args)
    except (EvenNUnsupportedError, InfiniteGroupError) as exc:
        print(f"unsupported: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except InvalidTensorError as exc:
        print(f"invalid tensor: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    raise SystemExit(main())
