"""Command-line front end.

Commands: expand, tableaux, char, analyze, verify, kmatrix.  Exit codes:
0 success / all checks pass, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .compositions import (
    Composition,
    compositions_of,
    format_composition,
    is_partition,
    parse_composition,
)
from .hecke_action import verify_relations
from .module_analysis import (
    analysis_report,
    characteristic,
    commutant_basis,
    verify_submodule_closure,
)
from .qsym import (
    QSymElement,
    extended_schur_in_F,
    extended_schur_in_M,
    fundamental,
    fundamental_to_monomial,
    hook_length_count,
    k_matrix,
    monomial,
    monomial_to_fundamental,
    schur_in_F,
)
from .tableaux import descent_composition, enumerate_set, enumerate_srit

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

ALL_CHECKS = (
    "relations",
    "submodule",
    "characteristic",
    "endomorphism",
    "schur",
    "kmatrix",
    "roundtrip",
)

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class CliConfig:
    """Validated global options."""

    max_n: int = 8
    format: str = "text"
    checks: tuple[str, ...] = ALL_CHECKS

    def __post_init__(self):
        if self.max_n < 1:
            raise UsageError("--max-n must be at least 1")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        unknown = [name for name in self.checks if name not in ALL_CHECKS]
        if unknown:
            raise UsageError(
                f"unknown checks {', '.join(unknown)}; "
                f"expected a subset of {', '.join(ALL_CHECKS)}"
            )


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=FORMATS, default="text", help="output format"
    )
    common.add_argument(
        "--max-n", type=int, default=8, dest="max_n",
        help="cap on the weight of requested compositions (default 8)",
    )

    parser = argparse.ArgumentParser(
        prog="extschur",
        description="Extended Schur expansions, standard extended tableaux, "
        "and exact analysis of the associated 0-Hecke modules.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="extended Schur expansion of one shape")
    p.add_argument("--alpha", required=True, help="composition, e.g. 2,1,3")
    p.add_argument("--basis", choices=("F", "M"), default="F")

    p = sub.add_parser("tableaux", parents=[common],
                       help="list the standard fillings of one shape")
    p.add_argument("--alpha", required=True)
    p.add_argument("--kind", choices=("set", "srit"), default="set")
    p.add_argument("--show-descents", action="store_true", dest="show_descents")

    p = sub.add_parser("char", parents=[common],
                       help="quasisymmetric characteristic of one shape")
    p.add_argument("--alpha", required=True)

    p = sub.add_parser("analyze", parents=[common],
                       help="full module analysis of one shape")
    p.add_argument("--alpha", required=True)

    p = sub.add_parser("verify", parents=[common],
                       help="run verification sweeps over all weights up to n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--checks", default=",".join(ALL_CHECKS),
                   help="comma-separated subset of: " + ", ".join(ALL_CHECKS))

    p = sub.add_parser("kmatrix", parents=[common],
                       help="descent-count matrix of one degree")
    p.add_argument("--n", type=int, required=True)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        checks = tuple(
            name.strip() for name in getattr(args, "checks", ",".join(ALL_CHECKS)).split(",")
            if name.strip()
        )
        config = CliConfig(max_n=args.max_n, format=args.format, checks=checks)
        handler = {
            "expand": _cmd_expand,
            "tableaux": _cmd_tableaux,
            "char": _cmd_char,
            "analyze": _cmd_analyze,
            "verify": _cmd_verify,
            "kmatrix": _cmd_kmatrix,
        }[args.command]
        return handler(config, args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def _require_alpha(config: CliConfig, args) -> Composition:
    try:
        alpha = parse_composition(args.alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if alpha.weight > config.max_n:
        raise UsageError(
            f"weight {alpha.weight} exceeds --max-n {config.max_n}"
        )
    return alpha


def format_qsym(x: QSymElement) -> str:
    """Render as e.g. 'F[2,1,3] + 2*F[1,2,3] - F[6]'; zero is '0'."""
    if x.is_zero():
        return "0"
    pieces = []
    for alpha, c in x.terms():
        term = f"{x.basis}[{format_composition(alpha)}]"
        magnitude = abs(c)
        body = term if magnitude == 1 else f"{magnitude}*{term}"
        if pieces:
            pieces.append((" + " if c > 0 else " - ") + body)
        else:
            pieces.append(("-" if c < 0 else "") + body)
    return "".join(pieces)


def _emit_qsym(element: QSymElement, fmt: str) -> None:
    if fmt == "text":
        print(format_qsym(element))
    elif fmt == "json":
        print(json.dumps(element.to_json(), indent=2))
    else:
        raise UsageError("csv output is only available for the kmatrix command")


def _cmd_expand(config: CliConfig, args) -> int:
    alpha = _require_alpha(config, args)
    if args.basis == "F":
        element = extended_schur_in_F(alpha)
    else:
        element = extended_schur_in_M(alpha)
    _emit_qsym(element, config.format)
    return EXIT_OK


def _cmd_char(config: CliConfig, args) -> int:
    alpha = _require_alpha(config, args)
    _emit_qsym(characteristic(alpha), config.format)
    return EXIT_OK


def _cmd_tableaux(config: CliConfig, args) -> int:
    alpha = _require_alpha(config, args)
    listing = enumerate_set(alpha) if args.kind == "set" else enumerate_srit(alpha)
    if config.format == "json":
        payload = []
        for t in listing:
            item = t.to_json()
            if args.show_descents:
                item["descent_composition"] = list(descent_composition(t))
            payload.append(item)
        print(json.dumps(payload, indent=2))
    elif config.format == "text":
        blocks = []
        for t in listing:
            block = str(t) if t.rows else "(empty)"
            if args.show_descents:
                block += f"\nDes: {format_composition(descent_composition(t))}"
            blocks.append(block)
        print("\n\n".join(blocks))
    else:
        raise UsageError("csv output is only available for the kmatrix command")
    return EXIT_OK


def _cmd_analyze(config: CliConfig, args) -> int:
    alpha = _require_alpha(config, args)
    report = analysis_report(alpha)
    if config.format == "json":
        print(json.dumps(report, indent=2))
    elif config.format == "text":
        factors = "; ".join(
            ",".join(str(p) for p in factor) for factor in report["factors"]
        )
        element = QSymElement(
            report["characteristic"]["degree"],
            report["characteristic"]["basis"],
            {
                tuple(term["composition"]): term["coefficient"]
                for term in report["characteristic"]["terms"]
            },
        )
        verdict = report["indecomposable"]
        print(f"alpha: {format_composition(alpha)}")
        print(f"dimension: {report['dim']}")
        print(f"factors: {factors}")
        print(f"characteristic: {format_qsym(element)}")
        print(f"commutant dimension: {report['commutant_dimension']}")
        print(f"indecomposable: {'true' if verdict is True else verdict}")
    else:
        raise UsageError("csv output is only available for the kmatrix command")
    return EXIT_OK


def _cmd_kmatrix(config: CliConfig, args) -> int:
    if args.n > config.max_n:
        raise UsageError(f"--n {args.n} exceeds --max-n {config.max_n}")
    try:
        km = k_matrix(args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if config.format == "csv":
        print(km.to_csv(), end="")
    elif config.format == "json":
        print(json.dumps({
            "n": km.n,
            "compositions": [list(alpha) for alpha in km.compositions],
            "entries": [list(row) for row in km.entries],
        }, indent=2))
    else:
        labels = [format_composition(alpha) for alpha in km.compositions]
        width = max(max(len(label) for label in labels), 1)
        header = " " * width + "  " + " ".join(label.rjust(width) for label in labels)
        print(header)
        for label, row in zip(labels, km.entries):
            cells = " ".join(str(v).rjust(width) for v in row)
            print(f"{label.rjust(width)}  {cells}")
    return EXIT_OK


# ---------------------------------------------------------------------------
# verification sweeps


def _check_relations(alpha: Composition) -> bool:
    return verify_relations(alpha, "full").ok and verify_relations(alpha, "quotient").ok


def _check_submodule(alpha: Composition) -> bool:
    return verify_submodule_closure(alpha)


def _check_characteristic(alpha: Composition) -> bool:
    return characteristic(alpha) == extended_schur_in_F(alpha)


def _check_endomorphism(alpha: Composition) -> bool:
    return commutant_basis(alpha).dimension == 1


def _check_roundtrip(alpha: Composition) -> bool:
    f = fundamental(alpha)
    m = monomial(alpha)
    if monomial_to_fundamental(fundamental_to_monomial(f)) != f:
        return False
    if fundamental_to_monomial(monomial_to_fundamental(m)) != m:
        return False
    # monomial positivity of the extended Schur expansion
    return all(c >= 0 for c in extended_schur_in_M(alpha).coeffs.values())


_PER_ALPHA_CHECKS = {
    "relations": _check_relations,
    "submodule": _check_submodule,
    "characteristic": _check_characteristic,
    "endomorphism": _check_endomorphism,
    "roundtrip": _check_roundtrip,
}


def _check_units(name: str, n: int):
    """Yield (label, ok) pairs for one named check over all weights <= n."""
    if name == "kmatrix":
        for m in range(1, n + 1):
            km = k_matrix(m)
            ok = (
                all(km.entries[i][i] == 1 for i in range(len(km.compositions)))
                and km.determinant() in (1, -1)
            )
            yield f"n={m}", ok
        return
    if name == "schur":
        for m in range(1, n + 1):
            for alpha in compositions_of(m):
                if not is_partition(alpha):
                    continue
                ok = (
                    extended_schur_in_F(alpha) == schur_in_F(alpha)
                    and len(enumerate_set(alpha)) == hook_length_count(alpha)
                )
                yield f"lambda={format_composition(alpha)}", ok
        return
    check = _PER_ALPHA_CHECKS[name]
    for m in range(1, n + 1):
        for alpha in compositions_of(m):
            yield f"alpha={format_composition(alpha)}", check(alpha)


def _run_check(name: str, n: int) -> dict:
    passed = failed = 0
    first = None
    for label, ok in _check_units(name, n):
        if ok:
            passed += 1
        else:
            failed += 1
            if first is None:
                first = label
    return {
        "name": name,
        "passed": passed,
        "failed": failed,
        "first_counterexample": first,
    }


def _cmd_verify(config: CliConfig, args) -> int:
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.n > config.max_n:
        raise UsageError(f"--n {args.n} exceeds --max-n {config.max_n}")
    selected = [name for name in ALL_CHECKS if name in config.checks]
    results = [_run_check(name, args.n) for name in selected]
    ok = all(result["failed"] == 0 for result in results)
    if config.format == "json":
        print(json.dumps({"n": args.n, "ok": ok, "checks": results}, indent=2))
    elif config.format == "text":
        for result in results:
            print(f"{result['name']}: {result['passed']} pass, {result['failed']} fail")
            if result["first_counterexample"]:
                print(f"  first counterexample: {result['first_counterexample']}")
        print("result: " + ("all checks passed" if ok else "FAILURES detected"))
    else:
        raise UsageError("csv output is only available for the kmatrix command")
    return EXIT_OK if ok else EXIT_CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
