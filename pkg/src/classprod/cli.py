"""Command-line surface: every engine capability, reproducible output.

Exit codes: 0 success, 1 usage error, 2 internal consistency failure
(an exactness invariant broke, or engine and oracle disagreed in
``--mode both``), 3 capability exceeded (n too large for the mode).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .alt_group import (
    NormalSet,
    class_size,
    delta,
    delta_bound_report,
    enumerate_alt_classes,
    is_exceptional,
    parse_class_or_union,
)
from .characters import alt_value, degree, parse_char
from .errors import CapabilityError, ConsistencyError, UsageError
from .partitions import enumerate_partitions, format_partition, parse_partition
from .product_engine import (
    ENGINE_MAX_N,
    check_dvir_rodgers,
    covering_number,
    long_cycle_product_checks,
    missing_classes,
    product_set,
    verify_four_class_theorem,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CONSISTENCY = 2
EXIT_CAPABILITY = 3

PARTITION_MAX_N = 50
CHAR_MAX_N = 40
ORACLE_MAX_N = 8


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"not a rational number: {text!r}") from None


def _check_n(n: int, cap: int, what: str) -> None:
    if n < 1:
        raise UsageError("n must be positive")
    if n > cap:
        raise CapabilityError(f"{what} supports n <= {cap}, got {n}")


def _check_engine_n(n: int, mode: str) -> None:
    _check_n(n, ENGINE_MAX_N, "the character-sum engine")
    if mode in ("oracle", "both"):
        _check_n(n, ORACLE_MAX_N, "brute-force mode")


def _emit(args, payload: dict, text_lines) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _table(rows, headers) -> list[str]:
    widths = [
        max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
        for i, h in enumerate(headers)
    ]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    lines = [fmt.format(*headers)]
    lines.extend(fmt.format(*(str(c) for c in row)) for row in rows)
    return lines


def _normal_set(names: list[str], n: int) -> NormalSet:
    classes = []
    for name in names:
        for cls in parse_class_or_union(name):
            if cls.n != n:
                raise UsageError(f"class {cls.name} is not a class of Alt({n})")
            classes.append(cls)
    return NormalSet.of(classes, n)


def _oracle_table(n: int):
    from .brute_force import alt_conjugacy_classes

    return alt_conjugacy_classes(n)


# ---------------------------------------------------------------------------
# command handlers
# ---------------------------------------------------------------------------


def _cmd_partitions(args) -> int:
    _check_n(args.n, PARTITION_MAX_N, "partition listing")
    parts = enumerate_partitions(args.n)
    _emit(
        args,
        {"n": args.n, "count": len(parts), "partitions": [list(p) for p in parts]},
        [format_partition(p) for p in parts],
    )
    return EXIT_OK


def _cmd_degree(args) -> int:
    lam = parse_partition(args.partition)
    if sum(lam) != args.n:
        raise UsageError(f"{args.partition!r} is not a partition of {args.n}")
    _check_n(args.n, CHAR_MAX_N, "degree computation")
    d = degree(lam)
    _emit(args, {"n": args.n, "partition": list(lam), "degree": d}, [str(d)])
    return EXIT_OK


def _cmd_char_value(args) -> int:
    _check_n(args.n, CHAR_MAX_N, "character evaluation")
    psi = parse_char(args.char)
    if psi.n != args.n:
        raise UsageError(f"character {psi.name} does not live in Alt({args.n})")
    classes = parse_class_or_union(args.cls)
    if len(classes) != 1:
        raise UsageError(
            f"{args.cls!r} denotes a union of split classes; pick '+' or '-'"
        )
    cls = classes[0]
    if cls.n != args.n:
        raise UsageError(f"class {cls.name} is not a class of Alt({args.n})")
    value = alt_value(psi, cls)
    _emit(
        args,
        {
            "n": args.n,
            "char": psi.name,
            "class": cls.name,
            "value": value.to_dict(),
            "value_text": str(value),
        },
        [str(value)],
    )
    return EXIT_OK


def _cmd_classes(args) -> int:
    _check_n(args.n, CHAR_MAX_N, "class listing")
    classes = enumerate_alt_classes(args.n)
    rows = [
        (c.name, class_size(c), delta(c), "yes" if is_exceptional(c.cycle_type) else "no")
        for c in classes
    ]
    _emit(
        args,
        {
            "n": args.n,
            "count": len(classes),
            "classes": [
                {
                    "name": name,
                    "size": size,
                    "delta": d,
                    "exceptional": exc == "yes",
                }
                for name, size, d, exc in rows
            ],
        },
        _table(rows, ("class", "size", "delta", "exceptional")),
    )
    return EXIT_OK


def _cmd_delta(args) -> int:
    classes = parse_class_or_union(args.cls)
    if classes[0].n != args.n:
        raise UsageError(f"class is not a class of Alt({args.n})")
    d = delta(classes[0])
    _emit(args, {"n": args.n, "class": args.cls.strip(), "delta": d}, [str(d)])
    return EXIT_OK


def _cmd_product(args) -> int:
    _check_engine_n(args.n, args.mode)
    s = _normal_set(args.a, args.n)
    t = _normal_set(args.b, args.n)
    names = None
    if args.mode in ("engine", "both"):
        result = product_set(s, t)
        names = [c.name for c in result]
    if args.mode in ("oracle", "both"):
        from .brute_force import oracle_product_set

        oracle = oracle_product_set(_oracle_table(args.n), s, t)
        oracle_names = [c.name for c in oracle]
        if names is None:
            names = oracle_names
        elif names != oracle_names:
            raise ConsistencyError(
                f"engine product {names} disagrees with oracle {oracle_names}"
            )
    _emit(
        args,
        {"n": args.n, "mode": args.mode, "classes": names, "count": len(names)},
        names,
    )
    return EXIT_OK


def _cmd_contains(args) -> int:
    _check_engine_n(args.n, args.mode)
    s = _normal_set(args.a, args.n)
    t = _normal_set(args.b, args.n)
    targets = _normal_set(args.g, args.n)
    verdict = None
    if args.mode in ("engine", "both"):
        result = product_set(s, t)
        verdict = all(g in result for g in targets)
    if args.mode in ("oracle", "both"):
        from .brute_force import oracle_product_set

        oracle = oracle_product_set(_oracle_table(args.n), s, t)
        oracle_verdict = all(g in oracle for g in targets)
        if verdict is None:
            verdict = oracle_verdict
        elif verdict != oracle_verdict:
            raise ConsistencyError("engine and oracle disagree on containment")
    _emit(
        args,
        {"n": args.n, "mode": args.mode, "contains": verdict},
        ["true" if verdict else "false"],
    )
    return EXIT_OK


def _cmd_covering(args) -> int:
    _check_engine_n(args.n, args.mode)
    classes = parse_class_or_union(args.cls)
    if len(classes) != 1:
        raise UsageError("covering number needs a single class; add '+' or '-'")
    cls = classes[0]
    if cls.n != args.n:
        raise UsageError(f"class {cls.name} is not a class of Alt({args.n})")
    result = None
    if args.mode in ("engine", "both"):
        result = covering_number(cls, args.max_k)
    if args.mode in ("oracle", "both"):
        from .brute_force import oracle_covering_number

        oracle = oracle_covering_number(_oracle_table(args.n), cls, args.max_k)
        if args.mode == "oracle":
            result = oracle
        elif oracle != result:
            raise ConsistencyError(
                f"engine covering number {result} disagrees with oracle {oracle}"
            )
    payload = {
        "n": args.n,
        "class": cls.name,
        "max_k": args.max_k,
        "covering_number": result,
    }
    lines = [str(result) if result is not None else "none"]
    if args.mode != "oracle" and result is not None and result > 1:
        witnesses = [c.name for c in missing_classes(cls, result - 1)]
        payload["missing_at_k_minus_1"] = witnesses
        lines.append(
            f"power {result - 1} still misses: {', '.join(witnesses)}"
        )
    _emit(args, payload, lines)
    return EXIT_OK


def _cmd_dvir(args) -> int:
    _check_engine_n(args.n, args.mode)
    if args.n < 3:
        raise UsageError("the sweep needs n >= 3")
    report = check_dvir_rodgers(args.n, jobs=args.jobs, mode=args.mode)
    lines = [
        f"n={report.n}: {report.pairs_checked} qualifying pairs, "
        f"{len(report.violations)} violations",
    ]
    lines += [f"VIOLATION: {a} * {b} misses {g}" for a, b, g in report.violations]
    _emit(args, report.to_dict(), lines)
    return EXIT_OK


def _cmd_verify_theorem(args) -> int:
    _check_engine_n(args.n, args.mode)
    epsilon = _parse_fraction(args.epsilon)
    if epsilon <= 0:
        raise UsageError("epsilon must be positive")
    report = verify_four_class_theorem(
        args.n, epsilon, jobs=args.jobs, mode=args.mode
    )
    total = len(report.quadruples)
    lines = [
        f"n={report.n} epsilon={report.epsilon} mode={report.mode}: "
        f"{report.covered_count}/{total} qualifying quadruples cover Alt({report.n})"
    ]
    shown = 0
    for q in report.quadruples:
        if not q.covered:
            lines.append(
                f"NOT COVERED: {' * '.join(q.classes)} misses {', '.join(q.missing)}"
            )
        elif shown < args.show:
            lines.append(
                f"covered: {' * '.join(q.classes)} (min pair product {q.min_pair_product})"
            )
            shown += 1
    omitted = report.covered_count - shown
    if omitted > 0:
        lines.append(f"... {omitted} further covered quadruples omitted (use --format json)")
    _emit(args, report.to_dict(), lines)
    return EXIT_OK


def _cmd_excon(args) -> int:
    _check_engine_n(args.n, args.mode)
    if args.n < 3:
        raise UsageError("the long-cycle checks need n >= 3")
    report = long_cycle_product_checks(args.n, jobs=args.jobs, mode=args.mode)
    lines = []
    for part in report.parts:
        status = "pass" if part.passed else "FAIL"
        lines.append(f"part {part.part} [{status}]: {part.statement}")
        for case in part.cases:
            if not case.passed:
                lines.append(
                    f"  counterexample {', '.join(case.classes)}: misses {', '.join(case.missing)}"
                )
    _emit(args, report.to_dict(), lines)
    return EXIT_OK


def _cmd_delta_report(args) -> int:
    _check_n(args.n, CHAR_MAX_N, "delta report")
    gamma = _parse_fraction(args.gamma)
    if not 0 < gamma < 1:
        raise UsageError("gamma must lie strictly between 0 and 1")
    report = delta_bound_report(args.n, gamma)
    rows = [
        (r.cls.name, r.size, r.delta, str(r.ratio), "*" if r.minimal else "")
        for r in report.rows
    ]
    _emit(
        args,
        report.to_dict(),
        _table(rows, ("class", "size", "delta", "delta/n", "min")),
    )
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def _add_common(p: argparse.ArgumentParser, mode: bool = False, jobs: bool = False):
    p.add_argument("--n", type=int, required=True, help="number of letters")
    p.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    if mode:
        p.add_argument(
            "--mode",
            choices=("engine", "oracle", "both"),
            default="engine",
            help="character-sum engine, brute force (n <= 8), or cross-check",
        )
    if jobs:
        p.add_argument(
            "--jobs", type=int, default=1, help="parallel workers for the heavy sweeps"
        )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="classprod",
        description=(
            "Exact conjugacy-class product analysis in alternating groups. "
            "Classes are named by cycle type, e.g. '5,3,1'; split classes of "
            "an exceptional type (all cycle lengths odd, pairwise distinct) "
            "take a '+'/'-' suffix, and a bare exceptional name denotes the "
            "union of both split classes."
        ),
    )
    parser.add_argument("--version", action="version", version=f"classprod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partitions", help="list the partitions of n")
    _add_common(p)
    p.set_defaults(func=_cmd_partitions)

    p = sub.add_parser("degree", help="Sym(n) character degree of a partition")
    _add_common(p)
    p.add_argument("--partition", required=True, help='e.g. "9,1"')
    p.set_defaults(func=_cmd_degree)

    p = sub.add_parser("char-value", help="Alt(n) character value on a class")
    _add_common(p)
    p.add_argument("--char", required=True, help='character name, e.g. "3,2,1+"')
    p.add_argument("--class", dest="cls", required=True, help='class name, e.g. "5,3,1-"')
    p.set_defaults(func=_cmd_char_value)

    p = sub.add_parser("classes", help="list the conjugacy classes of Alt(n)")
    _add_common(p)
    p.set_defaults(func=_cmd_classes)

    p = sub.add_parser("delta", help="n minus the number of cycles of a class")
    _add_common(p)
    p.add_argument("--class", dest="cls", required=True)
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("product", help="classes in the product of two normal sets")
    _add_common(p, mode=True)
    p.add_argument("--a", action="append", required=True, help="class in the left set (repeatable)")
    p.add_argument("--b", action="append", required=True, help="class in the right set (repeatable)")
    p.set_defaults(func=_cmd_product)

    p = sub.add_parser("contains", help="is every --g class inside the product of --a and --b?")
    _add_common(p, mode=True)
    p.add_argument("--a", action="append", required=True)
    p.add_argument("--b", action="append", required=True)
    p.add_argument("--g", action="append", required=True)
    p.set_defaults(func=_cmd_contains)

    p = sub.add_parser("covering", help="covering number of a class")
    _add_common(p, mode=True)
    p.add_argument("--class", dest="cls", required=True)
    p.add_argument("--max-k", type=int, default=8, help="largest power to try")
    p.set_defaults(func=_cmd_covering)

    p = sub.add_parser("dvir", help="exhaustive long-cycle inclusion sweep at one n")
    _add_common(p, mode=True, jobs=True)
    p.set_defaults(func=_cmd_dvir)

    p = sub.add_parser(
        "verify-theorem",
        help="sweep all size-qualified class quadruples and report coverage",
    )
    _add_common(p, mode=True, jobs=True)
    p.add_argument(
        "--epsilon", required=True, help='exact rational threshold exponent, e.g. "1/10"'
    )
    p.add_argument(
        "--show", type=int, default=10, help="covered quadruples to print in text mode"
    )
    p.set_defaults(func=_cmd_verify_theorem)

    p = sub.add_parser("excon", help="long-cycle product checks at one n")
    _add_common(p, mode=True, jobs=True)
    p.set_defaults(func=_cmd_excon)

    p = sub.add_parser("delta-report", help="delta/n table for classes above a size threshold")
    _add_common(p)
    p.add_argument("--gamma", required=True, help='exact rational exponent in (0,1), e.g. "1/2"')
    p.set_defaults(func=_cmd_delta_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapabilityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPABILITY
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
