"""Command-line interface.

Decision subcommands answer through the exit code (0 yes, 1 no) as well as a
machine-parseable result on the last stdout line; usage, parse and domain
errors exit 2 with a message on stderr.
"""

from __future__ import annotations

import argparse
import os
import sys

from . import analysis, compilers, core, families, formats, queries, reproduce, transforms
from .core import BoolVec
from .errors import BnnError
from .queries import Clause, Term


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as handle:
            return handle.read()
    except OSError as exc:
        raise BnnError(f"{path}: {exc.strerror or exc}") from None


def _load(path: str, kind: str):
    try:
        return formats.parse(kind, _read(path)).payload
    except BnnError as exc:
        raise BnnError(f"{path}: {exc}") from None


def _load_table(path: str):
    """Accept either an explicit model list or a prototype pair."""
    text = _read(path)
    try:
        kind = formats.detect_kind(text)
        if kind == "mods":
            return formats.parse("mods", text).payload
        if kind == "bnn":
            return core.to_truth_table(formats.parse("bnn", text).payload)
    except BnnError as exc:
        raise BnnError(f"{path}: {exc}") from None
    raise BnnError(f"{path}: expected a bnn or mods document, found {kind}")


def _parse_term(text: str) -> Term:
    return formats.parse("term", text).payload


def _parse_clause(text: str) -> Clause:
    return formats.parse("clause", text).payload


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)


def _serialize(kind: str, payload) -> str:
    return formats.serialize(formats.Document(kind, payload))


def _cmd_eval(args) -> int:
    rep = _load(args.file, "bnn")
    x = BoolVec.from_string(args.vector)
    print(core.evaluate(rep, x))
    return 0


def _cmd_validate(args) -> int:
    rep = _load(args.file, "bnn")
    witness = core.validate_semantic(rep)
    if witness is None:
        print("valid")
        return 0
    print(f"tie x={witness}")
    return 1


def _cmd_negate(args) -> int:
    rep = _load(args.file, "bnn")
    _emit(_serialize("bnn", core.negate(rep)), args.output)
    return 0


def _cmd_query(args) -> int:
    rep = _load(args.file, "bnn")
    if args.which == "co":
        answer = queries.co(rep)
    elif args.which == "va":
        answer = queries.va(rep)
    elif args.which == "im":
        if args.term is None:
            raise BnnError("query im needs --term")
        answer = queries.im(rep, _parse_term(args.term))
    else:
        if args.clause is None:
            raise BnnError("query ce needs --clause")
        answer = queries.ce(rep, _parse_clause(args.clause))
    print("true" if answer else "false")
    return 0 if answer else 1


def _cmd_models(args) -> int:
    rep = _load(args.file, "bnn")
    for model in queries.me(rep, limit=args.limit):
        print(model)
    return 0


def _cmd_count(args) -> int:
    rep = _load(args.file, "bnn")
    print(queries.ct_enumerate(rep))
    return 0


def _cmd_equal(args) -> int:
    a = _load(args.left, "bnn")
    b = _load(args.right, "bnn")
    witness = queries.eq(a, b)
    if witness is None:
        print("equivalent")
        return 0
    print(f"not-equivalent x={witness}")
    return 1


def _cmd_entails(args) -> int:
    a = _load(args.left, "bnn")
    b = _load(args.right, "bnn")
    witness = queries.se(a, b)
    if witness is None:
        print("entails")
        return 0
    print(f"not-entails x={witness}")
    return 1


def _var_map_header(kept: tuple[int, ...]) -> str:
    pairs = " ".join(f"{old}->{new}" for new, old in enumerate(kept, 1))
    return f"# var-map {pairs}\n"


def _cmd_condition(args) -> int:
    rep = _load(args.file, "bnn")
    result = transforms.condition(rep, _parse_term(args.term))
    _emit(_var_map_header(result.kept) + _serialize("bnn", result.rep), args.output)
    return 0


def _cmd_forget(args) -> int:
    rep = _load(args.file, "bnn")
    try:
        indices = tuple(int(tok) for tok in args.forget.split())
    except ValueError:
        raise BnnError(f"--forget expects whitespace-separated indices, got {args.forget!r}") from None
    result = transforms.forget(rep, indices)
    _emit(_var_map_header(result.kept) + _serialize("bnn", result.rep), args.output)
    return 0


def _cmd_compile(args) -> int:
    if args.direction == "mods2bnn":
        table = _load(args.file, "mods")
        _emit(_serialize("bnn", compilers.mods_to_bnn(table)), args.output)
    else:
        rep = _load(args.file, "bnn")
        _emit(_serialize("bdd", compilers.bnn_to_bdd(rep)), args.output)
    return 0


def _cmd_generate(args) -> int:
    family = args.family
    if family == "parity":
        _emit(_serialize("bnn", families.gen_parity(_arg_int(args, 0))), args.output)
    elif family == "majority":
        _emit(_serialize("bnn", families.gen_majority(_arg_int(args, 0))), args.output)
    elif family == "threshold":
        table = families.gen_threshold(_arg_int(args, 0), _arg_int(args, 1))
        _emit(_serialize("mods", table), args.output)
    elif family == "xor-match":
        n = _arg_int(args, 0)
        if args.cnf:
            _emit(_serialize("cnf", families.xor_match_cnf(n)), args.output)
        else:
            _emit(_serialize("mods", families.gen_xor_match(n)), args.output)
    elif family == "exact-half":
        _emit(_serialize("mods", families.gen_exact_half(_arg_int(args, 0))), args.output)
    elif family == "hsis":
        graph = _load(_arg_str(args, 0), "graph")
        pair = families.gen_hsis_pair(graph)
        if not args.out_f or not args.out_h:
            raise BnnError("generate hsis needs --out-f and --out-h")
        _emit(_serialize("bnn", pair.f), args.out_f)
        _emit(_serialize("bnn", pair.h), args.out_h)
        print(f"wrote {args.out_f} and {args.out_h}")
    else:  # hsis-from-3sat
        phi = _load(_arg_str(args, 0), "cnf")
        _emit(_serialize("graph", families.gen_hsis_from_3sat(phi)), args.output)
    return 0


def _arg_str(args, index: int) -> str:
    if len(args.params) <= index:
        raise BnnError(f"generate {args.family}: missing argument {index + 1}")
    return args.params[index]


def _arg_int(args, index: int) -> int:
    token = _arg_str(args, index)
    try:
        return int(token)
    except ValueError:
        raise BnnError(f"generate {args.family}: expected an integer, got {token!r}") from None


def _cmd_analyze(args) -> int:
    table = _load_table(args.file)
    report = analysis.components(table)
    lb = report.positive_count + report.negative_count
    print(f"models: {len(table.models)} of {1 << table.n}")
    print(f"positive components: {report.positive_count} (isolated {len(report.isolated_positive)})")
    print(f"negative components: {report.negative_count} (isolated {len(report.isolated_negative)})")
    print(
        f"lb={lb} pos_cc={report.positive_count} neg_cc={report.negative_count} "
        f"iso_pos={len(report.isolated_positive)} iso_neg={len(report.isolated_negative)}"
    )
    return 0


def _cmd_minimize(args) -> int:
    table = _load_table(args.file)
    result = analysis.min_bnn(table)
    if args.output:
        _emit(_serialize("bnn", result.rep), args.output)
    print(f"size={result.size}")
    return 0


def _cmd_reproduce(args) -> int:
    results = reproduce.run_all()
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"criterion {r.number:>2} {status} [{r.seconds:6.1f}s] {r.title}: {r.detail}")
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bnnkc",
        description="Knowledge-compilation toolkit for Boolean nearest-neighbor representations.",
    )
    parser.add_argument(
        "--max-n",
        type=int,
        metavar="N",
        help=f"override the exhaustive-operation dimension cap (default {core.EXH_MAX}, "
        "also via BNNKC_MAX_N)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate a representation on a vector")
    p.add_argument("file")
    p.add_argument("vector")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("validate", help="exhaustively check for distance ties")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_validate)

    p = sub.add_parser("negate", help="swap the prototype sets")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_negate)

    p = sub.add_parser("query", help="co / va / im / ce decision queries")
    p.add_argument("which", choices=("co", "va", "im", "ce"))
    p.add_argument("file")
    p.add_argument("--term", help="signed literals, e.g. '1 -3 5'")
    p.add_argument("--clause", help="signed literals, e.g. '1 -3 5'")
    p.set_defaults(fn=_cmd_query)

    p = sub.add_parser("models", help="enumerate models in lexicographic order")
    p.add_argument("file")
    p.add_argument("--limit", type=int)
    p.set_defaults(fn=_cmd_models)

    p = sub.add_parser("count", help="exact model count")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_count)

    p = sub.add_parser("equal", help="equivalence of two representations")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_equal)

    p = sub.add_parser("entails", help="does the left representation entail the right")
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(fn=_cmd_entails)

    p = sub.add_parser("condition", help="fix variables and recompile")
    p.add_argument("file")
    p.add_argument("--term", required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_condition)

    p = sub.add_parser("forget", help="existentially quantify variables and recompile")
    p.add_argument("file")
    p.add_argument("--forget", required=True, metavar="INDICES")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_forget)

    p = sub.add_parser("compile", help="translate between representation languages")
    p.add_argument("direction", choices=("mods2bnn", "bnn2bdd"))
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_compile)

    p = sub.add_parser("generate", help="emit a named function family or reduction")
    p.add_argument(
        "family",
        choices=("parity", "majority", "threshold", "xor-match", "exact-half", "hsis", "hsis-from-3sat"),
    )
    p.add_argument("params", nargs="*")
    p.add_argument("--cnf", action="store_true", help="emit the DIMACS companion (xor-match)")
    p.add_argument("--out-f", help="output for the first pair member (hsis)")
    p.add_argument("--out-h", help="output for the second pair member (hsis)")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_generate)

    p = sub.add_parser("analyze", help="component structure and the size lower bound")
    p.add_argument("file")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("minimize", help="exact minimum representation (tiny dimensions)")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p.set_defaults(fn=_cmd_minimize)

    p = sub.add_parser("reproduce", help="run the full acceptance table")
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    limit = args.max_n
    if limit is None:
        env = os.environ.get("BNNKC_MAX_N")
        if env is not None:
            try:
                limit = int(env)
            except ValueError:
                print(f"error: BNNKC_MAX_N must be an integer, got {env!r}", file=sys.stderr)
                return 2
    if limit is not None:
        core.EXH_MAX = limit
    try:
        return args.fn(args)
    except BnnError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
