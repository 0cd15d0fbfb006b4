"""Command-line front end.

Subcommands wire the file formats to the library operations; verdicts
are data in the report, not exit codes, so pipelines can tell "ran and
said NO" from "failed to run".  Exit status: 0 on successful execution
regardless of verdict, 2 on parse or validation problems (the message
names file, line and field where known), 3 on cap violations.

All randomness flows from --seed with a fixed default; identical
requests produce byte-identical reports.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import census, rep, roots
from .field import FieldError, FieldSpec, ff_make, parse_field_flag, _factor_prime_power
from .linalg import LinalgError, format_matrix
from .rep import FileFormatError, Quiver, Representation, TooLarge


def _load_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise FileFormatError(f"{path}: {exc.strerror or exc}") from None


def _load_quiver(path: str) -> Quiver:
    try:
        return rep.parse_quiver(_load_text(path))
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from None


def _load_rep(path: str, quiver: Quiver) -> Representation:
    try:
        return rep.parse_representation(_load_text(path), quiver)
    except FileFormatError as exc:
        raise FileFormatError(f"{path}: {exc}") from None


def _parse_alpha(quiver: Quiver, text: str) -> dict[str, int]:
    alpha = {v: 0 for v in quiver.vertices}
    for token in text.split():
        if "=" not in token:
            raise FileFormatError(f"bad --alpha token {token!r}", field="alpha")
        v, n = token.split("=", 1)
        if v not in alpha:
            raise FileFormatError(f"--alpha names unknown vertex {v!r}", field="alpha")
        try:
            alpha[v] = int(n)
        except ValueError:
            raise FileFormatError(f"bad --alpha value {n!r}", field="alpha") from None
    return alpha


def _parse_fixed(spec: FieldSpec, text: str) -> dict[int, int]:
    fixed: dict[int, int] = {}
    if not text:
        return fixed
    for item in text.split(","):
        if "=" not in item:
            raise FileFormatError(f"bad --fixed item {item!r}", field="fixed")
        pos, val = item.split("=", 1)
        try:
            fixed[int(pos)] = spec.parse_element(val)
        except (ValueError, FieldError) as exc:
            raise FileFormatError(f"bad --fixed item {item!r}: {exc}", field="fixed") from None
    return fixed


def _verdict_payload(verdict: rep.IndecVerdict) -> dict:
    return {
        "decision": verdict.decision,
        "reason": verdict.reason,
        "failing_index": verdict.failing_index,
        "series": list(verdict.series) if verdict.series is not None else None,
        "eig_values": list(verdict.eig_values) if verdict.eig_values is not None else None,
    }


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _quiver_payload(quiver: Quiver) -> dict:
    return {"vertices": list(quiver.vertices), "edges": [list(e) for e in quiver.edges]}


# ---------------------------------------------------------------------------
# subcommand handlers
# ---------------------------------------------------------------------------

def _cmd_decide(args) -> int:
    quiver = _load_quiver(args.quiver)
    representation = _load_rep(args.rep, quiver)
    verdict = rep.decide_abs_indec(representation)
    payload = _verdict_payload(verdict)
    lines = [f"decision: {verdict.decision}"]
    if verdict.reason:
        lines.append(f"reason: {verdict.reason}")
    if verdict.failing_index is not None:
        lines.append(f"failing_index: {verdict.failing_index}")
    if verdict.series is not None:
        lines.append("series: " + " ".join(str(d) for d in verdict.series))
    if verdict.eig_values is not None:
        spec = representation.field
        lines.append("eig: " + " ".join(spec.format_element(g) for g in verdict.eig_values))
    _emit(args, payload, lines)
    return 0


def _cmd_endo(args) -> int:
    quiver = _load_quiver(args.quiver)
    representation = _load_rep(args.rep, quiver)
    algebra = rep.end_basis(representation)
    spec = representation.field
    payload = {
        "m": algebra.m,
        "basis": [
            {v: [[int(x) for x in row] for row in blocks[v]] for v in quiver.vertices}
            for blocks in algebra.basis
        ],
    }
    lines = [f"m: {algebra.m}"]
    for i, blocks in enumerate(algebra.basis):
        lines.append(f"element {i}:")
        for v in quiver.vertices:
            lines.append(f"a[{v}]:")
            text = format_matrix(spec, blocks[v])
            if text:
                lines.append(text)
    _emit(args, payload, lines)
    return 0


def _cmd_classify_root(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    cdata = roots.cartan(quiver)
    result = roots.classify(cdata, alpha)
    payload = {
        "verdict": result.verdict,
        "norm": result.norm,
        "word": list(result.word),
        "core": result.core,
    }
    lines = [
        f"verdict: {result.verdict}",
        f"norm: {result.norm}",
        "word: " + " ".join(result.word),
    ]
    if result.core is not None:
        lines.append("core: " + rep.format_dims(quiver, result.core))
    _emit(args, payload, lines)
    return 0


def _cmd_count(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    spec = parse_field_flag(args.field)
    if args.method == "canonical":
        count = census.count_classes_canonical(
            quiver, alpha, spec, cap_states=args.cap, cap_group=args.group_cap, jobs=args.jobs
        )
    else:
        count = census.count_classes_stabilizer(quiver, alpha, spec, cap=args.cap, jobs=args.jobs)
    payload = {
        "quiver": _quiver_payload(quiver),
        "alpha": alpha,
        "q": spec.q,
        "method": args.method,
        "count": count,
    }
    lines = [
        "alpha: " + rep.format_dims(quiver, alpha),
        f"field: {spec.header()}",
        f"method: {args.method}",
        f"count: {count}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_kacpoly(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    cdata = roots.cartan(quiver)
    try:
        q_values = [int(tok) for tok in args.q_list.split(",") if tok.strip()]
    except ValueError:
        raise FileFormatError(f"bad --q-list {args.q_list!r}", field="q-list") from None
    rows = []
    for q in q_values:
        p, k = _factor_prime_power(q)
        spec = ff_make(p, k)
        rows.append((q, census.count_classes_stabilizer(quiver, alpha, spec, cap=args.cap, jobs=args.jobs)))
    table = census.KacCountTable.build(quiver, alpha, rows)
    poly, diagnostics = census.interpolate_kac(table, cdata)
    payload = {
        "quiver": _quiver_payload(quiver),
        "alpha": alpha,
        "rows": [list(r) for r in table.rows],
        "polynomial": {"coefficients": list(poly.coeffs), "text": str(poly)},
        "diagnostics": diagnostics,
    }
    lines = [f"{q}\t{count}" for q, count in table.rows]
    lines.append(f"polynomial: {poly}")
    for key in sorted(diagnostics):
        value = diagnostics[key]
        lines.append(f"{key}: {str(value).lower() if isinstance(value, bool) else value}")
    _emit(args, payload, lines)
    return 0


def _cmd_sweep_orientations(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    spec = parse_field_flag(args.field)
    results = census.orientation_sweep(
        quiver.vertices, quiver.underlying_pairs(), alpha, spec, cap=args.cap, jobs=args.jobs
    )
    counts = [count for _, count in results]
    agree = len(set(counts)) == 1
    payload = {
        "alpha": alpha,
        "q": spec.q,
        "orientations": [
            {"edges": [list(e) for e in q.edges], "count": count} for q, count in results
        ],
        "agree": agree,
    }
    lines = []
    for i, (oriented, count) in enumerate(results):
        edges = " ".join(f"{t}->{h}" for t, h in oriented.edges)
        lines.append(f"orientation {i}: {edges}; count: {count}")
    lines.append(f"agree: {str(agree).lower()}")
    _emit(args, payload, lines)
    return 0


def _cmd_reflect(args) -> int:
    quiver = _load_quiver(args.quiver)
    representation = _load_rep(args.rep, quiver)
    reflected = rep.reflect_functor(representation, args.vertex)
    quiver_text = rep.format_quiver(reflected.quiver)
    rep_text = rep.format_representation(reflected)
    if args.out_quiver:
        with open(args.out_quiver, "w", encoding="utf-8") as fh:
            fh.write(quiver_text)
    if args.out_rep:
        with open(args.out_rep, "w", encoding="utf-8") as fh:
            fh.write(rep_text)
    payload = {
        "vertex": args.vertex,
        "dims": reflected.dims,
        "quiver_file": quiver_text,
        "rep_file": rep_text,
    }
    lines = [
        f"vertex: {args.vertex}",
        "dims: " + rep.format_dims(reflected.quiver, reflected.dims),
    ]
    if not args.out_quiver:
        lines.append("--- quiver")
        lines.append(quiver_text.rstrip("\n"))
    if not args.out_rep:
        lines.append("--- representation")
        lines.append(rep_text.rstrip("\n"))
    _emit(args, payload, lines)
    return 0


def _cmd_find(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    spec = parse_field_flag(args.field)
    fixed = _parse_fixed(spec, args.fixed)
    found = rep.find_abs_indec(quiver, alpha, spec, fixed=fixed, cap=args.cap)
    if found is None:
        _emit(args, {"found": False, "rep_file": None}, ["found: false"])
        return 0
    rep_text = rep.format_representation(found)
    if args.out_rep:
        with open(args.out_rep, "w", encoding="utf-8") as fh:
            fh.write(rep_text)
    lines = ["found: true"]
    if not args.out_rep:
        lines.append("--- representation")
        lines.append(rep_text.rstrip("\n"))
    _emit(args, {"found": True, "rep_file": rep_text}, lines)
    return 0


def _cmd_random(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    spec = parse_field_flag(args.field)
    representation = rep.random_rep(quiver, alpha, spec, args.seed)
    rep_text = rep.format_representation(representation)
    if args.out_rep:
        with open(args.out_rep, "w", encoding="utf-8") as fh:
            fh.write(rep_text)
    lines = [f"seed: {args.seed}"]
    if not args.out_rep:
        lines.append("--- representation")
        lines.append(rep_text.rstrip("\n"))
    _emit(args, {"seed": args.seed, "rep_file": rep_text}, lines)
    return 0


def _cmd_oracle_check(args) -> int:
    quiver = _load_quiver(args.quiver)
    representation = _load_rep(args.rep, quiver)
    verdict = rep.decide_abs_indec(representation)
    algebra = rep.end_basis(representation)
    oracle = rep.all_elements_qn_oracle(algebra, cap=args.cap)
    agree = oracle == verdict.absolutely_indecomposable
    payload = {
        "decision": verdict.decision,
        "oracle_all_quasi_nilpotent": oracle,
        "agree": agree,
    }
    lines = [
        f"decision: {verdict.decision}",
        f"oracle_all_quasi_nilpotent: {str(oracle).lower()}",
        f"agree: {str(agree).lower()}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_schur_probe(args) -> int:
    quiver = _load_quiver(args.quiver)
    alpha = _parse_alpha(quiver, args.alpha)
    spec = parse_field_flag(args.field)
    min_end, fraction = roots.schur_probe(quiver, alpha, spec, args.samples, args.seed)
    payload = {
        "samples": args.samples,
        "min_end_dim": min_end,
        "fraction_indec": str(fraction),
    }
    lines = [
        f"samples: {args.samples}",
        f"min_end_dim: {min_end}",
        f"fraction_indec: {fraction}",
    ]
    _emit(args, payload, lines)
    return 0


def _cmd_real_roots(args) -> int:
    quiver = _load_quiver(args.quiver)
    cdata = roots.cartan(quiver)
    found = roots.real_roots_up_to(cdata, args.height_bound)
    payload = {
        "height_bound": args.height_bound,
        "count": len(found),
        "roots": found,
    }
    lines = [f"count: {len(found)}"]
    lines += ["root: " + rep.format_dims(quiver, r) for r in found]
    _emit(args, payload, lines)
    return 0


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quiverdec",
        description="Quiver representations over finite fields: decisions, roots, censuses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, quiver=False, rep_path=False, alpha=False, fld=False):
        if quiver:
            p.add_argument("--quiver", required=True, help="quiver file path")
        if rep_path:
            p.add_argument("--rep", required=True, help="representation file path")
        if alpha:
            p.add_argument("--alpha", required=True, help='dimension vector, e.g. "v1=1 v2=1"')
        if fld:
            p.add_argument("--field", required=True, help="field, e.g. GF(2), GF(3^2)[:modulus]")
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("decide", help="decide absolute indecomposability")
    common(p, quiver=True, rep_path=True)
    p.set_defaults(handler=_cmd_decide)

    p = sub.add_parser("endo", help="basis of the endomorphism algebra")
    common(p, quiver=True, rep_path=True)
    p.set_defaults(handler=_cmd_endo)

    p = sub.add_parser("classify-root", help="classify a dimension vector")
    common(p, quiver=True, alpha=True)
    p.set_defaults(handler=_cmd_classify_root)

    p = sub.add_parser("count", help="count absolutely indecomposable classes")
    common(p, quiver=True, alpha=True, fld=True)
    p.add_argument("--method", choices=("stabilizer", "canonical"), default="stabilizer")
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--group-cap", type=int, default=10**6)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_count)

    p = sub.add_parser("kacpoly", help="count at several field sizes and interpolate")
    common(p, quiver=True, alpha=True)
    p.add_argument("--q-list", required=True, help='field sizes, e.g. "2,3,4"')
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_kacpoly)

    p = sub.add_parser("sweep-orientations", help="counts across all orientations")
    common(p, quiver=True, alpha=True, fld=True)
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(handler=_cmd_sweep_orientations)

    p = sub.add_parser("reflect", help="apply the reflection functor at a sink or source")
    common(p, quiver=True, rep_path=True)
    p.add_argument("--vertex", required=True)
    p.add_argument("--out-quiver", default=None, help="write the reflected quiver here")
    p.add_argument("--out-rep", default=None, help="write the reflected representation here")
    p.set_defaults(handler=_cmd_reflect)

    p = sub.add_parser("find", help="search for an absolutely indecomposable representation")
    common(p, quiver=True, alpha=True, fld=True)
    p.add_argument("--fixed", default="", help='partial assignment "idx=val,..."')
    p.add_argument("--cap", type=int, default=10**7)
    p.add_argument("--out-rep", default=None)
    p.set_defaults(handler=_cmd_find)

    p = sub.add_parser("random", help="seeded random representation")
    common(p, quiver=True, alpha=True, fld=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out-rep", default=None)
    p.set_defaults(handler=_cmd_random)

    p = sub.add_parser("oracle-check", help="decision vs. brute-force quasi-nilpotence oracle")
    common(p, quiver=True, rep_path=True)
    p.add_argument("--cap", type=int, default=10**6)
    p.set_defaults(handler=_cmd_oracle_check)

    p = sub.add_parser("schur-probe", help="sampling probe for Schur vectors")
    common(p, quiver=True, alpha=True, fld=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_schur_probe)

    p = sub.add_parser("real-roots", help="real roots up to a height bound")
    common(p, quiver=True)
    p.add_argument("--height-bound", type=int, required=True)
    p.set_defaults(handler=_cmd_real_roots)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except TooLarge as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (FileFormatError, FieldError, LinalgError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
